#include "warpspace/chart.hpp"

#include <cmath>

#include "warpspace/util.hpp"

namespace warpspace {

ChartPlan::ChartPlan(SpacePtr space) : space_(std::move(space)) {
    if (!space_ || !is_chartable(*space_))
        throw NonPrimitiveSpace("chart plans require a chartable space");
    root_ = build(*space_, 1.0);
}

int ChartPlan::build(const SpaceDescriptor& s, double scale) {
    if (s.is<LineSpace>()) {
        axes_.push_back({ChartAxis::Kind::Linear, scale, 0.0, std::nullopt, false, {}});
        nodes_.push_back({Node::Kind::Axis, static_cast<int>(axes_.size()) - 1, {}, -1, {}, {}});
        return static_cast<int>(nodes_.size()) - 1;
    }
    if (auto* iv = s.as<IntervalSpace>()) {
        axes_.push_back({ChartAxis::Kind::Linear, scale, 0.0, AxisRange{iv->a, iv->b}, false, {}});
        nodes_.push_back({Node::Kind::Axis, static_cast<int>(axes_.size()) - 1, {}, -1, {}, {}});
        return static_cast<int>(nodes_.size()) - 1;
    }
    if (auto* c = s.as<CircleSpace>()) {
        axes_.push_back({ChartAxis::Kind::Circle, scale, c->circumference, std::nullopt, false, {}});
        nodes_.push_back({Node::Kind::Axis, static_cast<int>(axes_.size()) - 1, {}, -1, {}, {}});
        return static_cast<int>(nodes_.size()) - 1;
    }
    if (auto* sc = s.as<ScaledSpace>()) {
        return build(*sc->inner, scale * sc->factor);
    }
    if (auto* pr = s.as<ProductSpace>()) {
        Node n;
        n.kind = Node::Kind::Product;
        for (const auto& f : pr->factors) n.children.push_back(build(*f, scale));
        nodes_.push_back(std::move(n));
        return static_cast<int>(nodes_.size()) - 1;
    }
    if (auto* w = s.as<WarpedSpace>()) {
        has_warp_ = true;
        Node n;
        n.kind = Node::Kind::Warp;
        n.inner = build(*w->inner, scale);
        for (const auto& e : w->warp.edge_order) {
            // Fiber displacements enter the warped sum unscaled.
            axes_.push_back({ChartAxis::Kind::Linear, 1.0, 0.0, std::nullopt, true, e});
            n.fiber_axes.push_back(static_cast<int>(axes_.size()) - 1);
            n.lambdas.push_back(w->warp.lambda(e));
        }
        nodes_.push_back(std::move(n));
        return static_cast<int>(nodes_.size()) - 1;
    }
    throw NonPrimitiveSpace("space is not chartable");
}

double ChartPlan::eval(int node, const double* a, const double* b, bool lifted) const {
    const Node& n = nodes_[node];
    switch (n.kind) {
        case Node::Kind::Axis: {
            const ChartAxis& ax = axes_[n.axis];
            if (ax.kind == ChartAxis::Kind::Circle && !lifted)
                return circle_dist(a[n.axis], b[n.axis], ax.circumference) * ax.scale;
            return std::fabs(b[n.axis] - a[n.axis]) * ax.scale;
        }
        case Node::Kind::Product: {
            double s = 0.0;
            for (int c : n.children) {
                double d = eval(c, a, b, lifted);
                s += d * d;
            }
            return std::sqrt(s);
        }
        case Node::Kind::Warp: {
            // Warp factor at the right endpoint of the subinterval.
            double f = 1.0;
            for (std::size_t i = 0; i < n.fiber_axes.size(); ++i)
                f *= std::pow(n.lambdas[i], b[n.fiber_axes[i]]);
            double di = eval(n.inner, a, b, lifted);
            double s = f * f * di * di;
            for (int ax : n.fiber_axes) {
                double d = b[ax] - a[ax];
                s += d * d;
            }
            return std::sqrt(s);
        }
    }
    return 0.0;
}

double ChartPlan::chord(const double* a, const double* b, bool lifted) const {
    return eval(root_, a, b, lifted);
}

void ChartPlan::interpolate(const double* a, const double* b, double u, double* out,
                            bool lifted) const {
    for (std::size_t i = 0; i < axes_.size(); ++i) {
        const ChartAxis& ax = axes_[i];
        if (ax.kind == ChartAxis::Kind::Circle && !lifted) {
            double d = circle_delta(a[i], b[i], ax.circumference);
            out[i] = wrap_coord(a[i] + u * d, ax.circumference);
        } else {
            out[i] = a[i] + u * (b[i] - a[i]);
        }
    }
}

std::vector<double> ChartPlan::flatten(const CoordValue& v) const {
    std::vector<double> out;
    out.reserve(axes_.size());
    flatten_rec(*space_, v, out);
    if (out.size() != axes_.size()) throw ShapeMismatch("coordinate arity mismatch");
    return out;
}

void ChartPlan::flatten_rec(const SpaceDescriptor& s, const CoordValue& v,
                            std::vector<double>& out) const {
    if (s.is<LineSpace>() || s.is<IntervalSpace>() || s.is<CircleSpace>()) {
        out.push_back(v.scalar());
    } else if (auto* sc = s.as<ScaledSpace>()) {
        flatten_rec(*sc->inner, v, out);
    } else if (auto* pr = s.as<ProductSpace>()) {
        const auto& t = v.tuple();
        if (t.size() != pr->factors.size()) throw ShapeMismatch("product coordinate arity mismatch");
        for (std::size_t i = 0; i < t.size(); ++i) flatten_rec(*pr->factors[i], t[i], out);
    } else if (auto* w = s.as<WarpedSpace>()) {
        const auto& t = v.tuple();
        if (t.size() != 2) throw ShapeMismatch("warped coordinate must be [inner, fiber]");
        flatten_rec(*w->inner, t[0], out);
        const auto& fiber = t[1].tuple();
        if (fiber.size() != w->warp.dim()) throw ShapeMismatch("fiber coordinate arity mismatch");
        for (const auto& f : fiber) out.push_back(f.scalar());
    } else {
        throw NonPrimitiveSpace("space is not chartable");
    }
}

CoordValue ChartPlan::unflatten(const std::vector<double>& x) const {
    if (x.size() != axes_.size()) throw ShapeMismatch("coordinate arity mismatch");
    const double* cursor = x.data();
    return unflatten_rec(*space_, cursor);
}

CoordValue ChartPlan::unflatten_rec(const SpaceDescriptor& s, const double*& cursor) const {
    if (s.is<LineSpace>() || s.is<IntervalSpace>() || s.is<CircleSpace>())
        return CoordValue(*cursor++);
    if (auto* sc = s.as<ScaledSpace>()) return unflatten_rec(*sc->inner, cursor);
    if (auto* pr = s.as<ProductSpace>()) {
        std::vector<CoordValue> t;
        t.reserve(pr->factors.size());
        for (const auto& f : pr->factors) t.push_back(unflatten_rec(*f, cursor));
        return CoordValue(std::move(t));
    }
    if (auto* w = s.as<WarpedSpace>()) {
        CoordValue inner = unflatten_rec(*w->inner, cursor);
        std::vector<CoordValue> fiber;
        fiber.reserve(w->warp.dim());
        for (std::size_t i = 0; i < w->warp.dim(); ++i) fiber.push_back(CoordValue(*cursor++));
        return CoordValue({std::move(inner), CoordValue(std::move(fiber))});
    }
    throw NonPrimitiveSpace("space is not chartable");
}

std::vector<AxisRange> ChartPlan::resolve_window(const Window& user) const {
    std::vector<AxisRange> out(axes_.size());
    for (std::size_t i = 0; i < axes_.size(); ++i) {
        const ChartAxis& ax = axes_[i];
        std::optional<AxisRange> u = i < user.size() ? user[i] : std::nullopt;
        if (ax.kind == ChartAxis::Kind::Circle) {
            out[i] = u.value_or(AxisRange{0.0, ax.circumference});
        } else if (ax.bounds) {
            AxisRange r = u.value_or(*ax.bounds);
            r.lo = std::max(r.lo, ax.bounds->lo);
            r.hi = std::min(r.hi, ax.bounds->hi);
            out[i] = r;
        } else {
            out[i] = u.value_or(AxisRange{-2.0, 2.0});
        }
        if (!(out[i].lo <= out[i].hi))
            throw SchemaError("window", "empty range on axis " + std::to_string(i));
    }
    return out;
}

double ChartPlan::max_warp_factor(const std::vector<AxisRange>& window) const {
    double f = 1.0;
    for (const Node& n : nodes_) {
        if (n.kind != Node::Kind::Warp) continue;
        for (std::size_t i = 0; i < n.fiber_axes.size(); ++i) {
            const AxisRange& r = window[n.fiber_axes[i]];
            f *= std::max(std::pow(n.lambdas[i], r.lo), std::pow(n.lambdas[i], r.hi));
        }
    }
    return f;
}

double ChartPlan::min_warp_factor(const std::vector<AxisRange>& window) const {
    double f = 1.0;
    for (const Node& n : nodes_) {
        if (n.kind != Node::Kind::Warp) continue;
        for (std::size_t i = 0; i < n.fiber_axes.size(); ++i) {
            const AxisRange& r = window[n.fiber_axes[i]];
            f *= std::min(std::pow(n.lambdas[i], r.lo), std::pow(n.lambdas[i], r.hi));
        }
    }
    return f;
}

std::vector<double> ChartPlan::axis_cost_upper(const std::vector<AxisRange>& window) const {
    return axis_cost(window, true);
}

std::vector<double> ChartPlan::axis_cost_lower(const std::vector<AxisRange>& window) const {
    return axis_cost(window, false);
}

std::vector<double> ChartPlan::axis_cost(const std::vector<AxisRange>& window,
                                         bool upper) const {
    // Extremal warp factor per warp node over the window.
    std::vector<double> factor(nodes_.size(), 1.0);
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        if (nodes_[k].kind != Node::Kind::Warp) continue;
        double f = 1.0;
        for (std::size_t i = 0; i < nodes_[k].fiber_axes.size(); ++i) {
            const AxisRange& r = window[nodes_[k].fiber_axes[i]];
            double flo = std::pow(nodes_[k].lambdas[i], r.lo);
            double fhi = std::pow(nodes_[k].lambdas[i], r.hi);
            f *= upper ? std::max(flo, fhi) : std::min(flo, fhi);
        }
        factor[k] = f;
    }
    // Push the factors down to the axes they scale. Fiber axes stay at cost 1.
    std::vector<double> mult(axes_.size(), 1.0);
    auto walk = [&](auto&& self, int node, double m) -> void {
        const Node& n = nodes_[node];
        if (n.kind == Node::Kind::Axis) {
            mult[n.axis] = m;
        } else if (n.kind == Node::Kind::Product) {
            for (int c : n.children) self(self, c, m);
        } else {
            self(self, n.inner, m * factor[node]);
        }
    };
    walk(walk, root_, 1.0);
    std::vector<double> out(axes_.size());
    for (std::size_t i = 0; i < axes_.size(); ++i) out[i] = axes_[i].scale * mult[i];
    return out;
}

} // namespace warpspace
