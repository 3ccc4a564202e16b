#pragma once

#include "warpspace/chart.hpp"
#include "warpspace/space.hpp"

namespace warpspace {

// Closed-form distance on primitive spaces: |p-q| on line/interval, shorter
// arc on circles, lambda * d_inner on scaled spaces, root-sum-of-squares on
// Euclidean products. Throws NonPrimitiveSpace on warped/cylinder/quotient
// input (use the geodesic solver or a net for those).
double base_distance(const SpaceDescriptor& space, const PointCoord& p,
                     const PointCoord& q);

// Length of a piecewise-linear path as the limit of chord sums over dyadic
// refinements of each segment. Refinement stops when two successive
// estimates agree to `tol` relatively; throws ConvergenceFailure past
// `max_depth` halvings. On warped spaces each chord carries the warp factor
// at its right endpoint.
double path_length(const SpaceDescriptor& space, const PolyPath& path,
                   double tol = 1e-9, int max_depth = 24);

// Chord sum over the path refined to exactly 2^depth subsegments per
// segment — no convergence test. depth 0 is the waypoint partition itself.
// Exposed so identities that hold termwise can be asserted at a fixed
// partition.
double partition_sum(const SpaceDescriptor& space, const PolyPath& path,
                     int depth = 0);

// Single segment a -> b by dyadic refinement (plan-level workhorse).
double segment_length(const ChartPlan& plan, const double* a, const double* b,
                      double tol, int max_depth = 24, bool lifted = false);

} // namespace warpspace
