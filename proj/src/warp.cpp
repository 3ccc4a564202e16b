#include "warpspace/warp.hpp"

#include <cmath>

namespace warpspace {

double warp_factor(const WarpVector& warp, const WarpFiberCoord& t) {
    if (t.t.size() != warp.dim())
        throw ShapeMismatch("fiber coordinate arity mismatch");
    double f = 1.0;
    for (const auto& e : warp.edge_order) {
        auto it = t.t.find(e);
        if (it == t.t.end()) throw ShapeMismatch("fiber coordinate missing edge '" + e + "'");
        f *= std::pow(warp.lambda(e), it->second);
    }
    return f;
}

double warp_factor(const WarpVector& warp, const std::vector<double>& t) {
    if (t.size() != warp.dim()) throw ShapeMismatch("fiber coordinate arity mismatch");
    double f = 1.0;
    for (std::size_t i = 0; i < t.size(); ++i)
        f *= std::pow(warp.lambda(warp.edge_order[i]), t[i]);
    return f;
}

SpacePtr make_warped(const SpacePtr& inner, const WarpVector& warp) {
    return warped(inner, warp);
}

double warped_path_length(const SpacePtr& inner, const WarpVector& warp,
                          const PolyPath& path, double tol) {
    return path_length(*make_warped(inner, warp), path, tol);
}

double warped_partition_sum(const SpacePtr& inner, const WarpVector& warp,
                            const PolyPath& path, int depth) {
    return partition_sum(*make_warped(inner, warp), path, depth);
}

PointCoord shift_map(const WarpVector& warp, const std::string& edge,
                     const PointCoord& p) {
    int idx = warp.index_of(edge);
    if (idx < 0) throw SchemaError("shift.edge", "unknown edge '" + edge + "'");
    const auto& pair = p.value.tuple();
    if (pair.size() != 2) throw ShapeMismatch("warped coordinate must be [inner, fiber]");
    std::vector<CoordValue> fiber = pair[1].tuple();
    if (fiber.size() != warp.dim()) throw ShapeMismatch("fiber coordinate arity mismatch");
    fiber[idx] = CoordValue(fiber[idx].scalar() + 1.0);
    PointCoord out = p;
    out.value = CoordValue({pair[0], CoordValue(std::move(fiber))});
    return out;
}

PolyPath shift_path(const WarpVector& warp, const std::string& edge,
                    const PolyPath& path) {
    PolyPath out = path;
    for (auto& w : out.waypoints) w = shift_map(warp, edge, w);
    return out;
}

} // namespace warpspace
