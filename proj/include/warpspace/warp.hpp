#pragma once

#include "warpspace/metric_core.hpp"
#include "warpspace/space.hpp"

namespace warpspace {

// f_lambda(t) = prod_e lambda(e)^(t_e). Strictly positive, log-linear in t.
double warp_factor(const WarpVector& warp, const WarpFiberCoord& t);
double warp_factor(const WarpVector& warp, const std::vector<double>& t);

// Length of a path in inner x_lambda R^E. Waypoints have the shape
// [inner coordinate, fiber tuple]; equals the Euclidean product length when
// every lambda(e) = 1.
double warped_path_length(const SpacePtr& inner, const WarpVector& warp,
                          const PolyPath& path, double tol = 1e-9);

// Fixed-partition variant (see partition_sum).
double warped_partition_sum(const SpacePtr& inner, const WarpVector& warp,
                            const PolyPath& path, int depth = 0);

// Descriptor for inner x_lambda R^E.
SpacePtr make_warped(const SpacePtr& inner, const WarpVector& warp);

// (x, t) -> (x, t + delta_edge). Throws SchemaError on an unknown edge.
// Measuring a path with the inner scaled by lambda(edge) and measuring its
// shift with the inner unscaled gives termwise-equal partition sums.
PointCoord shift_map(const WarpVector& warp, const std::string& edge,
                     const PointCoord& p);
PolyPath shift_path(const WarpVector& warp, const std::string& edge,
                    const PolyPath& path);

} // namespace warpspace
