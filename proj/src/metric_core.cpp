#include "warpspace/metric_core.hpp"

#include <cmath>

#include "warpspace/util.hpp"

namespace warpspace {

namespace {

double base_distance_value(const SpaceDescriptor& s, const CoordValue& p,
                           const CoordValue& q) {
    if (s.is<LineSpace>() || s.is<IntervalSpace>())
        return std::fabs(p.scalar() - q.scalar());
    if (auto* c = s.as<CircleSpace>())
        return circle_dist(p.scalar(), q.scalar(), c->circumference);
    if (auto* sc = s.as<ScaledSpace>())
        return sc->factor * base_distance_value(*sc->inner, p, q);
    if (auto* pr = s.as<ProductSpace>()) {
        const auto& tp = p.tuple();
        const auto& tq = q.tuple();
        if (tp.size() != pr->factors.size() || tq.size() != pr->factors.size())
            throw ShapeMismatch("product coordinate arity mismatch");
        double sum = 0.0;
        for (std::size_t i = 0; i < tp.size(); ++i) {
            double d = base_distance_value(*pr->factors[i], tp[i], tq[i]);
            sum += d * d;
        }
        return std::sqrt(sum);
    }
    throw NonPrimitiveSpace(
        "base_distance has no closed form here; use the geodesic solver or a net");
}

// Piece lookup for piece-tagged paths.
const SpacePtr& find_piece(const SpaceDescriptor& s, const std::string& id) {
    if (auto* cy = s.as<CylinderVariant>()) {
        if (id == "dom") return cy->dom_piece;
        if (id == "cod") return cy->cod_piece;
        throw ShapeMismatch("unknown cylinder piece '" + id + "'");
    }
    if (auto* q = s.as<QuotientVariant>()) {
        for (const auto& p : q->pieces)
            if (p.id == id) return p.space;
        throw ShapeMismatch("unknown piece '" + id + "'");
    }
    throw ShapeMismatch("space has no pieces");
}

} // namespace

double base_distance(const SpaceDescriptor& space, const PointCoord& p,
                     const PointCoord& q) {
    check_shape(space, p);
    check_shape(space, q);
    if (space.is<CylinderVariant>() || space.is<QuotientVariant>())
        throw NonPrimitiveSpace("quotient metrics go through a net graph");
    return base_distance_value(space, p.value, q.value);
}

double segment_length(const ChartPlan& plan, const double* a, const double* b,
                      double tol, int max_depth, bool lifted) {
    // Without a warp the chord is already the refinement limit: subdividing a
    // straight-in-coordinates segment splits arcs and chords additively.
    if (!plan.has_warp()) return plan.chord(a, b, lifted);

    std::size_t dim = plan.dim();
    std::vector<double> prev_pt(dim), cur_pt(dim);
    double prev = plan.chord(a, b, lifted);
    for (int depth = 1; depth <= max_depth; ++depth) {
        std::size_t pieces = std::size_t{1} << depth;
        double sum = 0.0;
        for (std::size_t i = 0; i < dim; ++i) prev_pt[i] = a[i];
        for (std::size_t j = 1; j <= pieces; ++j) {
            double u = static_cast<double>(j) / static_cast<double>(pieces);
            if (j == pieces) {
                for (std::size_t i = 0; i < dim; ++i) cur_pt[i] = b[i];
            } else {
                plan.interpolate(a, b, u, cur_pt.data(), lifted);
            }
            sum += plan.chord(prev_pt.data(), cur_pt.data(), lifted);
            std::swap(prev_pt, cur_pt);
        }
        // Two dyadic levels must agree before we trust the estimate.
        if (depth >= 2 && std::fabs(sum - prev) <= tol * std::max(std::fabs(sum), 1e-30))
            return sum;
        if (depth == max_depth) throw ConvergenceFailure(prev, sum);
        prev = sum;
    }
    return prev;
}

namespace {

double path_length_impl(const SpaceDescriptor& space, const PolyPath& path,
                        double tol, int max_depth, int fixed_depth) {
    path.validate();
    for (const auto& w : path.waypoints) check_shape(space, w);

    bool pieced = space.is<CylinderVariant>() || space.is<QuotientVariant>();
    double total = 0.0;
    std::unique_ptr<ChartPlan> plan;
    std::string plan_piece;
    if (!pieced) plan = std::make_unique<ChartPlan>(std::make_shared<SpaceDescriptor>(space));

    std::vector<double> a, b;
    for (std::size_t i = 1; i < path.waypoints.size(); ++i) {
        const PointCoord& wa = path.waypoints[i - 1];
        const PointCoord& wb = path.waypoints[i];
        if (pieced) {
            // Piece changes are identification hops and cost nothing; the
            // caller is responsible for only hopping at identified points
            // (net-produced paths do).
            if (wa.piece != wb.piece) continue;
            if (!plan || plan_piece != wa.piece) {
                plan = std::make_unique<ChartPlan>(find_piece(space, wa.piece));
                plan_piece = wa.piece;
            }
        }
        a = plan->flatten(wa.value);
        b = plan->flatten(wb.value);
        if (fixed_depth >= 0) {
            std::size_t pieces = std::size_t{1} << fixed_depth;
            std::vector<double> prev_pt = a, cur_pt(plan->dim());
            for (std::size_t j = 1; j <= pieces; ++j) {
                double u = static_cast<double>(j) / static_cast<double>(pieces);
                if (j == pieces) {
                    cur_pt = b;
                } else {
                    plan->interpolate(a.data(), b.data(), u, cur_pt.data());
                }
                total += plan->chord(prev_pt.data(), cur_pt.data());
                std::swap(prev_pt, cur_pt);
            }
        } else {
            total += segment_length(*plan, a.data(), b.data(), tol, max_depth);
        }
    }
    return total;
}

} // namespace

double path_length(const SpaceDescriptor& space, const PolyPath& path, double tol,
                   int max_depth) {
    return path_length_impl(space, path, tol, max_depth, -1);
}

double partition_sum(const SpaceDescriptor& space, const PolyPath& path, int depth) {
    return path_length_impl(space, path, 0.0, 0, depth);
}

} // namespace warpspace
