#pragma once

#include <cstdint>

#include "warpspace/metric_core.hpp"
#include "warpspace/space.hpp"

namespace warpspace {

struct SolverConfig {
    int n_waypoints = 33;       // >= 2, counting both endpoints
    int max_iters = 600;        // descent sweeps per refinement level
    double step_tol = 1e-8;     // stop when no waypoint moved further than this
    double length_tol = 1e-6;
    int restarts = 3;           // seeded random restarts on top of the straight init
    std::uint64_t rng_seed = 0;
    int winding_bound = 2;      // circle axes: homotopy hints searched in [-w, w]
    double fd_step = 1e-5;      // finite-difference step relative to coordinate extent

    void validate() const;
};

struct GeodesicResult {
    double length = 0.0;
    PolyPath path;
    bool converged = false;
    int restarts_used = 0;
};

// Best path found by minimizing (warped) length over interior waypoints:
// coordinate-wise descent with central finite differences, coarse-to-fine
// waypoint refinement, seeded restarts, and a bounded winding search per
// circle axis. Exact closed forms are used where available (no warp).
// The returned length is an upper bound on the distance.
//
// Only chartable spaces; cylinder/quotient queries go through a net
// (see engine.hpp).
GeodesicResult solve_geodesic(const SpaceDescriptor& space, const PointCoord& p,
                              const PointCoord& q, const SolverConfig& cfg = {});

// d'(p, q): base_distance on primitives, solver length otherwise.
double induced_length_metric(const SpaceDescriptor& space, const PointCoord& p,
                             const PointCoord& q, const SolverConfig& cfg = {});

// Closed-form distance on R x_lambda R between (x1, t1) and (x2, t2):
//   (1/|ln lambda|) * arccosh(1 + ((c x1 - c x2)^2 + (l^-t1 - l^-t2)^2)
//                                  / (2 l^-t1 l^-t2)),  c = ln lambda,
// the upper-half-plane metric pulled back through (x, t) -> (c x, lambda^-t).
// Requires lambda > 0, lambda != 1. Validated against brute-force waypoint
// minimization before use as an oracle (see tests).
double hyperbolic_oracle(double lambda, double x1, double t1, double x2, double t2);

// Inner-space component of a solved path in a warped product, deduplicated
// and reparameterized by arclength. With a unique-geodesic inner space its
// length matches base_distance of its endpoints when the solve was good.
PolyPath project_to_base(const SpaceDescriptor& space, const GeodesicResult& result);

} // namespace warpspace
