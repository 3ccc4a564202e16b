#pragma once

#include <optional>
#include <string>
#include <vector>

#include "warpspace/space.hpp"

namespace warpspace {

// Flattened view of a chartable space: one entry per scalar coordinate plus a
// small expression tree for evaluating chord terms without touching the
// descriptor. All metric/geodesic machinery works on these.
struct ChartAxis {
    enum class Kind { Linear, Circle };
    Kind kind = Kind::Linear;
    double scale = 1.0;          // metric length per coordinate unit
    double circumference = 0.0;  // circle axes: coordinate range
    std::optional<AxisRange> bounds;  // interval axes
    bool is_fiber = false;
    std::string fiber_edge;
};

class ChartPlan {
public:
    explicit ChartPlan(SpacePtr space);

    const SpacePtr& space() const { return space_; }
    std::size_t dim() const { return axes_.size(); }
    const std::vector<ChartAxis>& axes() const { return axes_; }

    // Chord term of the segment a -> b: exact distance on primitive blocks,
    // and sqrt(f(b_fiber)^2 * inner^2 + |delta fiber|^2) on warped blocks with
    // the warp factor taken at the right endpoint b.
    //
    // `lifted` treats circle axes as linear (universal-cover coordinates, used
    // by the waypoint solver); otherwise circle axes use the shorter arc.
    double chord(const double* a, const double* b, bool lifted = false) const;

    // Linear interpolation a -> b at u in [0,1]; circle axes follow the
    // shorter arc, antipodal ties toward the positive direction. Writes dim()
    // values to `out`. `lifted` interpolates circle axes linearly.
    void interpolate(const double* a, const double* b, double u, double* out,
                     bool lifted = false) const;

    std::vector<double> flatten(const CoordValue& v) const;
    CoordValue unflatten(const std::vector<double>& x) const;

    // Resolved per-axis sampling bounds: natural bounds for interval/circle
    // axes intersected with `user`, fallback [-2, 2] for line/fiber axes.
    std::vector<AxisRange> resolve_window(const Window& user) const;

    // Max/min of the warp factor products over a window (1 when no warp).
    double max_warp_factor(const std::vector<AxisRange>& window) const;
    double min_warp_factor(const std::vector<AxisRange>& window) const;

    // Per-axis upper/lower bounds on metric cost per coordinate unit over the
    // window: the axis scale times the range of every enclosing warp factor.
    std::vector<double> axis_cost_upper(const std::vector<AxisRange>& window) const;
    std::vector<double> axis_cost_lower(const std::vector<AxisRange>& window) const;

    bool has_warp() const { return has_warp_; }

private:
    struct Node {
        enum class Kind { Axis, Product, Warp };
        Kind kind = Kind::Axis;
        int axis = -1;                 // Axis
        std::vector<int> children;     // Product
        int inner = -1;                // Warp
        std::vector<int> fiber_axes;   // Warp
        std::vector<double> lambdas;   // Warp, aligned with fiber_axes
    };

    int build(const SpaceDescriptor& s, double scale);
    double eval(int node, const double* a, const double* b, bool lifted) const;
    std::vector<double> axis_cost(const std::vector<AxisRange>& window, bool upper) const;
    void flatten_rec(const SpaceDescriptor& s, const CoordValue& v,
                     std::vector<double>& out) const;
    CoordValue unflatten_rec(const SpaceDescriptor& s, const double*& cursor) const;

    SpacePtr space_;
    std::vector<ChartAxis> axes_;
    std::vector<Node> nodes_;
    int root_ = -1;
    bool has_warp_ = false;
};

} // namespace warpspace
