#include "warpspace/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "warpspace/util.hpp"

namespace warpspace {

void SolverConfig::validate() const {
    if (n_waypoints < 2) throw SchemaError("solver.n_waypoints", "must be >= 2");
    if (max_iters < 1) throw SchemaError("solver.max_iters", "must be >= 1");
    if (!(step_tol > 0.0)) throw SchemaError("solver.step_tol", "must be positive");
    if (!(length_tol > 0.0)) throw SchemaError("solver.length_tol", "must be positive");
    if (restarts < 0) throw SchemaError("solver.restarts", "must be >= 0");
    if (winding_bound < 0) throw SchemaError("solver.winding_bound", "must be >= 0");
    if (!(fd_step > 0.0)) throw SchemaError("solver.fd_step", "must be positive");
}

double hyperbolic_oracle(double lambda, double x1, double t1, double x2, double t2) {
    if (!(lambda > 0.0)) throw SchemaError("lambda", "must be positive");
    if (lambda == 1.0)
        throw SchemaError("lambda", "lambda = 1 is the Euclidean product; no warp");
    double c = std::log(lambda);
    double v1 = std::pow(lambda, -t1);
    double v2 = std::pow(lambda, -t2);
    double du = c * x1 - c * x2;
    double arg = 1.0 + (du * du + (v1 - v2) * (v1 - v2)) / (2.0 * v1 * v2);
    return std::acosh(std::max(arg, 1.0)) / std::fabs(c);
}

namespace {

// One descent problem: endpoints in lifted coordinates (circle axes linear),
// interval axes clamped to their bounds.
struct LiftedProblem {
    const ChartPlan* plan;
    std::vector<double> p, q;
    std::vector<std::optional<AxisRange>> clamp;
    std::vector<double> fd_h;    // finite-difference step per axis
    std::vector<double> cap;     // max Newton step per axis
    std::vector<double> scale;   // metric weight used for the displacement norm
};

double clamp_axis(const LiftedProblem& prob, std::size_t axis, double x) {
    if (prob.clamp[axis]) return std::clamp(x, prob.clamp[axis]->lo, prob.clamp[axis]->hi);
    return x;
}

// Waypoint matrix stored row-major: n x dim.
struct Polyline {
    std::size_t n = 0, dim = 0;
    std::vector<double> w;
    double* at(std::size_t i) { return w.data() + i * dim; }
    const double* at(std::size_t i) const { return w.data() + i * dim; }
};

Polyline straight_init(const LiftedProblem& prob, std::size_t n) {
    Polyline pl;
    pl.n = n;
    pl.dim = prob.p.size();
    pl.w.resize(n * pl.dim);
    for (std::size_t i = 0; i < n; ++i) {
        double u = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
        for (std::size_t a = 0; a < pl.dim; ++a)
            pl.at(i)[a] = clamp_axis(prob, a, prob.p[a] + u * (prob.q[a] - prob.p[a]));
    }
    return pl;
}

Polyline resample(const LiftedProblem& prob, const Polyline& in, std::size_t n) {
    Polyline out;
    out.n = n;
    out.dim = in.dim;
    out.w.resize(n * in.dim);
    for (std::size_t i = 0; i < n; ++i) {
        double u = static_cast<double>(i) / static_cast<double>(n - 1);
        double pos = u * static_cast<double>(in.n - 1);
        std::size_t j = std::min(static_cast<std::size_t>(pos), in.n - 2);
        double frac = pos - static_cast<double>(j);
        for (std::size_t a = 0; a < in.dim; ++a)
            out.at(i)[a] = in.at(j)[a] + frac * (in.at(j + 1)[a] - in.at(j)[a]);
    }
    return out;
}

double polyline_objective(const LiftedProblem& prob, const Polyline& pl) {
    double total = 0.0;
    for (std::size_t i = 1; i < pl.n; ++i)
        total += prob.plan->chord(pl.at(i - 1), pl.at(i), true);
    return total;
}

// Coordinate-wise descent with central finite differences and a second-
// difference Newton step, swept until no waypoint moves more than step_tol.
bool descend(const LiftedProblem& prob, Polyline& pl, const SolverConfig& cfg) {
    if (pl.n < 3) return true;
    std::vector<double> trial(pl.dim);
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        double max_disp = 0.0;
        for (std::size_t i = 1; i + 1 < pl.n; ++i) {
            const double* prev = pl.at(i - 1);
            const double* next = pl.at(i + 1);
            double* cur = pl.at(i);
            for (std::size_t a = 0; a < pl.dim; ++a) {
                std::copy(cur, cur + pl.dim, trial.begin());
                auto local = [&](double x) {
                    trial[a] = x;
                    return prob.plan->chord(prev, trial.data(), true) +
                           prob.plan->chord(trial.data(), next, true);
                };
                double x0 = cur[a];
                double h = prob.fd_h[a];
                double l0 = local(x0);
                double lp = local(x0 + h);
                double lm = local(x0 - h);
                double g = (lp - lm) / (2.0 * h);
                double curv = (lp - 2.0 * l0 + lm) / (h * h);
                double step;
                if (curv > 1e-12) {
                    step = -g / curv;
                } else if (g != 0.0) {
                    step = (g > 0 ? -1.0 : 1.0) * prob.cap[a] * 0.25;
                } else {
                    continue;
                }
                step = std::clamp(step, -prob.cap[a], prob.cap[a]);
                double x1 = clamp_axis(prob, a, x0 + step);
                double l1 = local(x1);
                if (l1 >= l0) {
                    x1 = clamp_axis(prob, a, x0 + step * 0.25);
                    l1 = local(x1);
                    if (l1 >= l0) continue;
                }
                cur[a] = x1;
                max_disp = std::max(max_disp, std::fabs(x1 - x0) * prob.scale[a]);
            }
        }
        if (max_disp < cfg.step_tol) return true;
    }
    return false;
}

struct SolveOutcome {
    double length = 0.0;
    Polyline pl;
    bool converged = false;
};

SolveOutcome solve_one(const LiftedProblem& prob, const SolverConfig& cfg, Rng* perturb) {
    std::size_t target = static_cast<std::size_t>(cfg.n_waypoints);
    std::size_t n = std::min<std::size_t>(target, 5);
    Polyline pl = straight_init(prob, n);
    if (perturb) {
        // Seeded Gaussian kick on the interior, sigma = 10% of the separation.
        double span = 0.0;
        for (std::size_t a = 0; a < prob.p.size(); ++a)
            span = std::max(span, std::fabs(prob.q[a] - prob.p[a]));
        double sigma = 0.1 * std::max(span, 1e-6);
        for (std::size_t i = 1; i + 1 < pl.n; ++i)
            for (std::size_t a = 0; a < pl.dim; ++a)
                pl.at(i)[a] = clamp_axis(prob, a, pl.at(i)[a] + sigma * perturb->normal());
    }
    bool converged = descend(prob, pl, cfg);
    while (pl.n < target) {
        std::size_t next = std::min(target, pl.n * 2 - 1);
        pl = resample(prob, pl, next);
        converged = descend(prob, pl, cfg);
    }
    SolveOutcome out;
    out.length = polyline_objective(prob, pl);
    out.pl = std::move(pl);
    out.converged = converged;
    return out;
}

} // namespace

GeodesicResult solve_geodesic(const SpaceDescriptor& space, const PointCoord& p,
                              const PointCoord& q, const SolverConfig& cfg) {
    cfg.validate();
    check_shape(space, p);
    check_shape(space, q);
    if (!is_chartable(space))
        throw NonPrimitiveSpace("solver needs a chartable space; use a net for quotients");

    auto sp = std::make_shared<SpaceDescriptor>(space);
    ChartPlan plan(sp);
    std::vector<double> a = plan.flatten(normalize_point(space, p).value);
    std::vector<double> b = plan.flatten(normalize_point(space, q).value);

    // Exact closed form when nothing is warped: the coordinate chord (with
    // shorter circle arcs) is the distance.
    if (!plan.has_warp()) {
        GeodesicResult r;
        r.length = plan.chord(a.data(), b.data());
        r.path = PolyPath::through({normalize_point(space, p), normalize_point(space, q)});
        r.converged = true;
        return r;
    }

    // Winding hints: each circle axis is lifted to the line; the endpoint
    // representative winds w in [-winding_bound, winding_bound] extra turns.
    std::vector<std::size_t> circle_axes;
    for (std::size_t i = 0; i < plan.dim(); ++i)
        if (plan.axes()[i].kind == ChartAxis::Kind::Circle) circle_axes.push_back(i);

    LiftedProblem prob;
    prob.plan = &plan;
    prob.p = a;
    prob.clamp.resize(plan.dim());
    prob.fd_h.resize(plan.dim());
    prob.cap.resize(plan.dim());
    prob.scale.resize(plan.dim());

    double span = 0.0;
    for (std::size_t i = 0; i < plan.dim(); ++i) {
        const ChartAxis& ax = plan.axes()[i];
        double d = ax.kind == ChartAxis::Kind::Circle
                       ? std::fabs(circle_delta(a[i], b[i], ax.circumference))
                       : std::fabs(b[i] - a[i]);
        span = std::max(span, d);
        if (ax.kind == ChartAxis::Kind::Linear && ax.bounds)
            prob.clamp[i] = ax.bounds;
        prob.scale[i] = ax.scale;
    }
    double ambient = std::max(span, 1.0);
    for (std::size_t i = 0; i < plan.dim(); ++i) {
        prob.fd_h[i] = cfg.fd_step * ambient;
        prob.cap[i] = 0.5 * ambient;
    }

    std::size_t n_hints = 1;
    for (std::size_t k = 0; k < circle_axes.size(); ++k)
        n_hints *= static_cast<std::size_t>(2 * cfg.winding_bound + 1);

    SolveOutcome best;
    bool have_best = false;
    int restart_runs = 0;
    for (std::size_t hint = 0; hint < n_hints; ++hint) {
        std::vector<double> qlift = b;
        std::size_t rem = hint;
        for (std::size_t k = 0; k < circle_axes.size(); ++k) {
            std::size_t ax = circle_axes[k];
            long w = static_cast<long>(rem % (2 * cfg.winding_bound + 1)) - cfg.winding_bound;
            rem /= (2 * cfg.winding_bound + 1);
            double c = plan.axes()[ax].circumference;
            qlift[ax] = a[ax] + circle_delta(a[ax], b[ax], c) + static_cast<double>(w) * c;
        }
        prob.q = qlift;

        Rng rng(cfg.rng_seed ^ (0x9e3779b97f4a7c15ULL * (hint + 1)));
        for (int run = 0; run <= cfg.restarts; ++run) {
            SolveOutcome out = run == 0 ? solve_one(prob, cfg, nullptr)
                                        : (++restart_runs, solve_one(prob, cfg, &rng));
            if (!have_best || out.length < best.length) {
                best = std::move(out);
                have_best = true;
            }
        }
    }

    // Refined length of the winning polyline; waypoints re-wrapped for output.
    double length = 0.0;
    for (std::size_t i = 1; i < best.pl.n; ++i)
        length += segment_length(plan, best.pl.at(i - 1), best.pl.at(i), 1e-10, 24, true);

    std::vector<PointCoord> pts;
    pts.reserve(best.pl.n);
    for (std::size_t i = 0; i < best.pl.n; ++i) {
        std::vector<double> x(best.pl.at(i), best.pl.at(i) + best.pl.dim);
        for (std::size_t ax : circle_axes)
            x[ax] = wrap_coord(x[ax], plan.axes()[ax].circumference);
        pts.emplace_back(plan.unflatten(x));
    }

    GeodesicResult r;
    r.length = length;
    r.path = PolyPath::through(std::move(pts));
    r.converged = best.converged;
    r.restarts_used = restart_runs;
    return r;
}

double induced_length_metric(const SpaceDescriptor& space, const PointCoord& p,
                             const PointCoord& q, const SolverConfig& cfg) {
    if (is_primitive(space)) return base_distance(space, p, q);
    return solve_geodesic(space, p, q, cfg).length;
}

PolyPath project_to_base(const SpaceDescriptor& space, const GeodesicResult& result) {
    auto* w = space.as<WarpedSpace>();
    if (!w) throw Error("project_to_base needs a warped product");
    if (!result.converged) throw Error("project_to_base needs a converged result");

    ChartPlan inner_plan(w->inner);
    std::vector<std::vector<double>> pts;
    for (const auto& wp : result.path.waypoints) {
        const auto& pair = wp.value.tuple();
        std::vector<double> x = inner_plan.flatten(pair[0]);
        if (!pts.empty()) {
            bool same = true;
            for (std::size_t i = 0; i < x.size(); ++i)
                if (std::fabs(x[i] - pts.back()[i]) > 1e-14) { same = false; break; }
            if (same) continue;
        }
        pts.push_back(std::move(x));
    }
    if (pts.size() < 2) {
        // Constant projection.
        PointCoord p0(inner_plan.unflatten(pts.empty()
                                               ? inner_plan.flatten(result.path.waypoints.front()
                                                                        .value.tuple()[0])
                                               : pts[0]));
        PolyPath out;
        out.waypoints = {p0, p0};
        out.params = {0.0, 1.0};
        return out;
    }

    // Arclength reparameterization via cumulative chord length.
    std::vector<double> cum(pts.size(), 0.0);
    for (std::size_t i = 1; i < pts.size(); ++i)
        cum[i] = cum[i - 1] + inner_plan.chord(pts[i - 1].data(), pts[i].data());
    double total = cum.back();
    PolyPath out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out.waypoints.emplace_back(inner_plan.unflatten(pts[i]));
        out.params.push_back(total > 0 ? cum[i] / total
                                       : static_cast<double>(i) / (pts.size() - 1));
    }
    // Guard against repeated params from zero-length chords.
    for (std::size_t i = 1; i < out.params.size(); ++i)
        if (out.params[i] <= out.params[i - 1])
            out.params[i] = std::min(1.0, out.params[i - 1] + 1e-12);
    out.params.front() = 0.0;
    out.params.back() = 1.0;
    out.validate();
    return out;
}

} // namespace warpspace
