#pragma once

#include <memory>
#include <optional>

#include "warpspace/geodesic.hpp"
#include "warpspace/quotient.hpp"

namespace warpspace {

// Distance/geodesic front end over any space: exact closed forms on
// primitives, the waypoint solver on warped charts, and a lazily built net
// on cylinders/quotients.
class DistanceEngine {
public:
    explicit DistanceEngine(SpacePtr space, SolverConfig solver = {},
                            NetConfig net = {});

    GeodesicResult geodesic(const PointCoord& p, const PointCoord& q);
    double dist(const PointCoord& p, const PointCoord& q);

    bool uses_net() const { return needs_net_; }
    double net_epsilon() const { return net_cfg_.epsilon; }
    NetGraph& net();  // builds on first use

    const SpacePtr& space() const { return space_; }
    const SolverConfig& solver_config() const { return solver_; }

private:
    SpacePtr space_;
    SolverConfig solver_;
    NetConfig net_cfg_;
    bool needs_net_ = false;
    std::optional<NetGraph> net_;
};

} // namespace warpspace
