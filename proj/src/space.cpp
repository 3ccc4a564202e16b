#include "warpspace/space.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "warpspace/util.hpp"

namespace warpspace {

// ---------------------------------------------------------------------------
// WarpVector
// ---------------------------------------------------------------------------

double WarpVector::lambda(const std::string& edge) const {
    auto it = lambdas.find(edge);
    if (it == lambdas.end()) throw SchemaError("warp.lambdas", "unknown edge '" + edge + "'");
    return it->second;
}

int WarpVector::index_of(const std::string& edge) const {
    for (std::size_t i = 0; i < edge_order.size(); ++i)
        if (edge_order[i] == edge) return static_cast<int>(i);
    return -1;
}

void WarpVector::validate() const {
    std::set<std::string> seen;
    for (const auto& e : edge_order) {
        if (!seen.insert(e).second)
            throw SchemaError("warp.edges", "duplicate edge '" + e + "'");
        auto it = lambdas.find(e);
        if (it == lambdas.end())
            throw SchemaError("warp.lambdas", "missing lambda for edge '" + e + "'");
        if (!(it->second > 0.0) || !std::isfinite(it->second))
            throw SchemaError("warp.lambdas", "lambda('" + e + "') must be positive");
    }
    if (lambdas.size() != edge_order.size())
        throw SchemaError("warp.lambdas", "lambdas must cover exactly the listed edges");
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

namespace {
SpacePtr make(SpaceDescriptor s) {
    auto p = std::make_shared<SpaceDescriptor>(std::move(s));
    validate_space(*p);
    return p;
}
} // namespace

SpacePtr line() { return make({LineSpace{}}); }
SpacePtr interval(double a, double b) { return make({IntervalSpace{a, b}}); }
SpacePtr circle(double circumference) { return make({CircleSpace{circumference}}); }
SpacePtr scaled(double factor, SpacePtr inner) { return make({ScaledSpace{factor, std::move(inner)}}); }
SpacePtr product(std::vector<SpacePtr> factors) { return make({ProductSpace{std::move(factors)}}); }
SpacePtr warped(SpacePtr inner, WarpVector warp) { return make({WarpedSpace{std::move(inner), std::move(warp)}}); }
SpacePtr cylinder(CylinderVariant cyl) { return make({std::move(cyl)}); }
SpacePtr quotient(QuotientVariant q) { return make({std::move(q)}); }

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

void validate_space(const SpaceDescriptor& s) {
    if (auto* iv = s.as<IntervalSpace>()) {
        if (!(iv->a < iv->b)) throw SchemaError("interval", "requires a < b");
        if (!std::isfinite(iv->a) || !std::isfinite(iv->b))
            throw SchemaError("interval", "bounds must be finite");
    } else if (auto* c = s.as<CircleSpace>()) {
        if (!(c->circumference > 0.0) || !std::isfinite(c->circumference))
            throw SchemaError("circle.circumference", "must be strictly positive");
    } else if (auto* sc = s.as<ScaledSpace>()) {
        if (!(sc->factor > 0.0) || !std::isfinite(sc->factor))
            throw SchemaError("scaled.factor", "must be strictly positive");
        if (!sc->inner) throw SchemaError("scaled.inner", "missing");
        validate_space(*sc->inner);
    } else if (auto* pr = s.as<ProductSpace>()) {
        if (pr->factors.empty()) throw SchemaError("product.factors", "must be nonempty");
        for (const auto& f : pr->factors) {
            if (!f) throw SchemaError("product.factors", "missing factor");
            validate_space(*f);
        }
    } else if (auto* w = s.as<WarpedSpace>()) {
        if (!w->inner) throw SchemaError("warped.inner", "missing");
        w->warp.validate();
        validate_space(*w->inner);
        if (!is_chartable(*w->inner))
            throw SchemaError("warped.inner", "must be a chartable space");
    } else if (auto* cy = s.as<CylinderVariant>()) {
        if (!cy->cert.domain || !cy->cert.codomain)
            throw SchemaError("cylinder.certificate", "missing domain/codomain");
        if (!cy->dom_piece || !cy->cod_piece)
            throw SchemaError("cylinder.pieces", "missing");
        if (!(cy->collar_eps > 0.0) || cy->collar_eps >= 0.25)
            throw SchemaError("cylinder.collar_eps", "must lie in (0, 1/4)");
        validate_space(*cy->dom_piece);
        validate_space(*cy->cod_piece);
    } else if (auto* q = s.as<QuotientVariant>()) {
        if (q->pieces.empty()) throw SchemaError("quotient.pieces", "must be nonempty");
        std::set<std::string> ids;
        for (const auto& piece : q->pieces) {
            if (piece.id.empty()) throw SchemaError("quotient.pieces.id", "must be nonempty");
            if (!ids.insert(piece.id).second)
                throw SchemaError("quotient.pieces.id", "duplicate piece '" + piece.id + "'");
            if (!piece.space) throw SchemaError("quotient.pieces.space", "missing");
            validate_space(*piece.space);
            if (!is_chartable(*piece.space))
                throw SchemaError("quotient.pieces.space",
                                  "piece '" + piece.id + "' must be chartable");
        }
        for (const auto& ident : q->identifications) {
            if (!ids.count(ident.source.piece))
                throw SchemaError("identifications.source.piece",
                                  "unknown piece '" + ident.source.piece + "'");
            if (!ids.count(ident.target.piece))
                throw SchemaError("identifications.target.piece",
                                  "unknown piece '" + ident.target.piece + "'");
        }
    }
}

bool is_chartable(const SpaceDescriptor& s) {
    if (s.is<LineSpace>() || s.is<IntervalSpace>() || s.is<CircleSpace>()) return true;
    if (auto* sc = s.as<ScaledSpace>()) return is_chartable(*sc->inner);
    if (auto* pr = s.as<ProductSpace>()) {
        return std::all_of(pr->factors.begin(), pr->factors.end(),
                           [](const SpacePtr& f) { return is_chartable(*f); });
    }
    if (auto* w = s.as<WarpedSpace>()) return is_chartable(*w->inner);
    return false;
}

bool is_primitive(const SpaceDescriptor& s) {
    if (s.is<LineSpace>() || s.is<IntervalSpace>() || s.is<CircleSpace>()) return true;
    if (auto* sc = s.as<ScaledSpace>()) return is_primitive(*sc->inner);
    if (auto* pr = s.as<ProductSpace>()) {
        return std::all_of(pr->factors.begin(), pr->factors.end(),
                           [](const SpacePtr& f) { return is_primitive(*f); });
    }
    return false;
}

// ---------------------------------------------------------------------------
// CoordValue / PointCoord / PolyPath
// ---------------------------------------------------------------------------

double CoordValue::scalar() const {
    if (!is_scalar()) throw ShapeMismatch("expected a scalar coordinate");
    return std::get<double>(v_);
}

const std::vector<CoordValue>& CoordValue::tuple() const {
    if (is_scalar()) throw ShapeMismatch("expected a coordinate tuple");
    return std::get<std::vector<CoordValue>>(v_);
}

PolyPath PolyPath::through(std::vector<PointCoord> pts) {
    PolyPath p;
    p.waypoints = std::move(pts);
    std::size_t n = p.waypoints.size();
    p.params.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        p.params[i] = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    p.validate();
    return p;
}

void PolyPath::validate() const {
    if (waypoints.empty()) throw SchemaError("path.waypoints", "must be nonempty");
    if (waypoints.size() != params.size())
        throw SchemaError("path.params", "length must match waypoints");
    if (params.front() != 0.0)
        throw SchemaError("path.params", "must start at 0");
    if (params.size() > 1 && params.back() != 1.0)
        throw SchemaError("path.params", "must end at 1");
    for (std::size_t i = 1; i < params.size(); ++i)
        if (!(params[i - 1] < params[i]))
            throw SchemaError("path.params", "must be strictly increasing");
}

namespace {

void check_value(const SpaceDescriptor& s, const CoordValue& v) {
    if (s.is<LineSpace>()) {
        (void)v.scalar();
    } else if (auto* iv = s.as<IntervalSpace>()) {
        double x = v.scalar();
        if (x < iv->a - 1e-12 || x > iv->b + 1e-12)
            throw ShapeMismatch("interval coordinate out of [a, b]");
    } else if (auto* c = s.as<CircleSpace>()) {
        double x = v.scalar();
        if (x < 0.0 || x >= c->circumference)
            throw ShapeMismatch("circle coordinate must lie in [0, circumference)");
    } else if (auto* sc = s.as<ScaledSpace>()) {
        check_value(*sc->inner, v);
    } else if (auto* pr = s.as<ProductSpace>()) {
        const auto& t = v.tuple();
        if (t.size() != pr->factors.size())
            throw ShapeMismatch("product coordinate arity mismatch");
        for (std::size_t i = 0; i < t.size(); ++i) check_value(*pr->factors[i], t[i]);
    } else if (auto* w = s.as<WarpedSpace>()) {
        const auto& t = v.tuple();
        if (t.size() != 2) throw ShapeMismatch("warped coordinate must be [inner, fiber]");
        check_value(*w->inner, t[0]);
        const auto& fiber = t[1].tuple();
        if (fiber.size() != w->warp.dim())
            throw ShapeMismatch("fiber coordinate arity mismatch");
        for (const auto& f : fiber) (void)f.scalar();
    } else {
        throw ShapeMismatch("expected a piece-tagged point for this space");
    }
}

CoordValue normalize_value(const SpaceDescriptor& s, const CoordValue& v) {
    if (auto* c = s.as<CircleSpace>()) {
        return CoordValue(wrap_coord(v.scalar(), c->circumference));
    }
    if (auto* sc = s.as<ScaledSpace>()) return normalize_value(*sc->inner, v);
    if (auto* pr = s.as<ProductSpace>()) {
        std::vector<CoordValue> out;
        const auto& t = v.tuple();
        out.reserve(t.size());
        for (std::size_t i = 0; i < t.size(); ++i)
            out.push_back(normalize_value(*pr->factors[i], t[i]));
        return CoordValue(std::move(out));
    }
    if (auto* w = s.as<WarpedSpace>()) {
        const auto& t = v.tuple();
        return CoordValue({normalize_value(*w->inner, t[0]), t[1]});
    }
    return v;
}

const SpaceDescriptor& piece_space(const SpaceDescriptor& s, const std::string& piece) {
    if (auto* cy = s.as<CylinderVariant>()) {
        if (piece == "dom") return *cy->dom_piece;
        if (piece == "cod") return *cy->cod_piece;
        throw ShapeMismatch("cylinder piece must be 'dom' or 'cod', got '" + piece + "'");
    }
    if (auto* q = s.as<QuotientVariant>()) {
        for (const auto& p : q->pieces)
            if (p.id == piece) return *p.space;
        throw ShapeMismatch("unknown piece '" + piece + "'");
    }
    throw ShapeMismatch("space has no pieces");
}

} // namespace

void check_shape(const SpaceDescriptor& s, const PointCoord& p) {
    if (s.is<CylinderVariant>() || s.is<QuotientVariant>()) {
        if (p.piece.empty()) throw ShapeMismatch("point must carry a piece tag");
        check_value(piece_space(s, p.piece), p.value);
        return;
    }
    if (!p.piece.empty()) throw ShapeMismatch("point carries a piece tag but the space has no pieces");
    check_value(s, p.value);
}

PointCoord normalize_point(const SpaceDescriptor& s, const PointCoord& p) {
    PointCoord out = p;
    if (s.is<CylinderVariant>() || s.is<QuotientVariant>()) {
        out.value = normalize_value(piece_space(s, p.piece), p.value);
    } else {
        out.value = normalize_value(s, p.value);
    }
    return out;
}

} // namespace warpspace
