#include "warpspace/maps.hpp"

#include <cmath>

#include "warpspace/util.hpp"

namespace warpspace {

bool is_circle_like(const SpaceDescriptor& s) {
    if (s.is<CircleSpace>()) return true;
    if (auto* sc = s.as<ScaledSpace>()) return is_circle_like(*sc->inner);
    return false;
}

bool is_line_like(const SpaceDescriptor& s) {
    if (s.is<LineSpace>() || s.is<IntervalSpace>()) return true;
    if (auto* sc = s.as<ScaledSpace>()) return is_line_like(*sc->inner);
    return false;
}

double circle_param_range(const SpaceDescriptor& s) {
    if (auto* c = s.as<CircleSpace>()) return c->circumference;
    if (auto* sc = s.as<ScaledSpace>()) return circle_param_range(*sc->inner);
    throw ShapeMismatch("expected a circle-like space");
}

double metric_scale(const SpaceDescriptor& s) {
    if (s.is<LineSpace>() || s.is<IntervalSpace>() || s.is<CircleSpace>()) return 1.0;
    if (auto* sc = s.as<ScaledSpace>()) return sc->factor * metric_scale(*sc->inner);
    throw ShapeMismatch("expected a one-axis space");
}

AxisRange param_range(const SpaceDescriptor& s, AxisRange fallback) {
    if (s.is<LineSpace>()) return fallback;
    if (auto* iv = s.as<IntervalSpace>()) return {iv->a, iv->b};
    if (auto* c = s.as<CircleSpace>()) return {0.0, c->circumference};
    if (auto* sc = s.as<ScaledSpace>()) return param_range(*sc->inner, fallback);
    throw ShapeMismatch("expected a one-axis space");
}

double apply_map(const MapDescriptor& f, const SpaceDescriptor& dom,
                 const SpaceDescriptor& cod, double x) {
    switch (f.kind) {
        case MapDescriptor::Kind::Affine:
            return f.a * x + f.b;
        case MapDescriptor::Kind::CircleCover: {
            double rd = circle_param_range(dom);
            double rc = circle_param_range(cod);
            if (std::fabs(rd - rc) > 1e-12)
                throw SchemaError("map.circle_cover",
                                  "domain and codomain coordinate ranges must agree");
            return wrap_coord(static_cast<double>(f.k) * x, rc);
        }
        case MapDescriptor::Kind::ScaledIdentity:
            return x;
    }
    return x;
}

std::vector<double> map_fibers(const MapDescriptor& f, const SpaceDescriptor& dom,
                               const SpaceDescriptor& cod, double y) {
    switch (f.kind) {
        case MapDescriptor::Kind::Affine: {
            if (f.a == 0.0) throw SchemaError("map.affine.a", "must be nonzero");
            (void)dom;
            (void)cod;
            return {(y - f.b) / f.a};
        }
        case MapDescriptor::Kind::CircleCover: {
            double r = circle_param_range(cod);
            long long n = std::llabs(f.k);
            if (n == 0) throw SchemaError("map.circle_cover.k", "must be nonzero");
            std::vector<double> out;
            out.reserve(static_cast<std::size_t>(n));
            for (long long j = 0; j < n; ++j)
                out.push_back(wrap_coord((y + static_cast<double>(j) * r) /
                                             static_cast<double>(f.k),
                                         circle_param_range(dom)));
            return out;
        }
        case MapDescriptor::Kind::ScaledIdentity:
            return {y};
    }
    return {y};
}

bool map_is_bijective(const MapDescriptor& f, const SpaceDescriptor& dom,
                      const SpaceDescriptor& cod) {
    switch (f.kind) {
        case MapDescriptor::Kind::Affine: {
            if (f.a == 0.0) return false;
            AxisRange d = param_range(dom);
            AxisRange c = param_range(cod);
            double lo = f.a * d.lo + f.b, hi = f.a * d.hi + f.b;
            if (lo > hi) std::swap(lo, hi);
            return std::fabs(lo - c.lo) < 1e-9 && std::fabs(hi - c.hi) < 1e-9;
        }
        case MapDescriptor::Kind::CircleCover:
            return std::llabs(f.k) == 1 && is_circle_like(dom) && is_circle_like(cod);
        case MapDescriptor::Kind::ScaledIdentity:
            return true;
    }
    return false;
}

bool map_is_covering(const MapDescriptor& f, const SpaceDescriptor& dom,
                     const SpaceDescriptor& cod) {
    switch (f.kind) {
        case MapDescriptor::Kind::Affine:
            return map_is_bijective(f, dom, cod);
        case MapDescriptor::Kind::CircleCover:
            return f.k != 0 && is_circle_like(dom) && is_circle_like(cod);
        case MapDescriptor::Kind::ScaledIdentity:
            return true;
    }
    return false;
}

} // namespace warpspace
