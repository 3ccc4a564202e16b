#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "warpspace/errors.hpp"

namespace warpspace {

// ---------------------------------------------------------------------------
// Warp data
// ---------------------------------------------------------------------------

// Ordered set of edge labels with a positive scale per edge. Fiber coordinates
// of a warped product and the unit shifts delta_e follow edge_order, so the
// serialized form fixes the coordinate layout.
struct WarpVector {
    std::vector<std::string> edge_order;
    std::map<std::string, double> lambdas;

    std::size_t dim() const { return edge_order.size(); }
    double lambda(const std::string& edge) const;
    int index_of(const std::string& edge) const;  // -1 if unknown
    void validate() const;

    bool operator==(const WarpVector&) const = default;
};

// A point of the fiber R^E, keyed by edge label.
struct WarpFiberCoord {
    std::map<std::string, double> t;
};

// ---------------------------------------------------------------------------
// Primitive maps between spaces
// ---------------------------------------------------------------------------

// The continuous maps we can attach along: affine maps of line/interval
// charts, degree-k circle covers, and the coordinatewise identity.
struct MapDescriptor {
    enum class Kind { Affine, CircleCover, ScaledIdentity };
    Kind kind = Kind::ScaledIdentity;
    double a = 1.0;       // Affine: x -> a*x + b
    double b = 0.0;
    long long k = 1;      // CircleCover: x -> k*x mod range

    bool operator==(const MapDescriptor&) const = default;
};

struct SpaceDescriptor;
using SpacePtr = std::shared_ptr<const SpaceDescriptor>;

// Result of gluing certification. `kind` records which test the map passed;
// `fiber_separation` is the ball radius for separated covers.
struct GluingCertificate {
    enum class Kind { BijectiveLocalIsometry, SeparatedCover };
    Kind kind = Kind::BijectiveLocalIsometry;
    MapDescriptor map;
    SpacePtr domain;
    SpacePtr codomain;
    std::optional<double> fiber_separation;
    double max_deviation = 0.0;  // worst relative distance deviation seen while sampling
};

// ---------------------------------------------------------------------------
// Identifications (gluing data for quotient spaces)
// ---------------------------------------------------------------------------

// A boundary chart of a piece: the piece's coordinates with at most one axis
// pinned to a fixed value, optionally post-composed with a primitive map on
// the leading block. Chart parameters are the remaining free axes.
struct ChartRef {
    std::string piece;
    std::optional<int> fix_axis;
    double value = 0.0;
    std::optional<MapDescriptor> map;  // applied to the first free axis (the X block)
};

// How source chart parameters map to target chart parameters.
struct Pairing {
    enum class Kind { Identity, Shift };
    Kind kind = Kind::Identity;
    std::string edge;  // Shift: fiber coordinate t_edge increases by 1
};

// Gluing datum: two charts plus the parameter pairing between them. The
// pairing must be a local isometry; build_net samples nearby pairs and
// rejects identifications that fail the check.
struct Identification {
    ChartRef source;
    ChartRef target;
    Pairing pairing;
};

// ---------------------------------------------------------------------------
// Space descriptors
// ---------------------------------------------------------------------------

struct AxisRange {
    double lo = 0.0, hi = 0.0;
    bool operator==(const AxisRange&) const = default;
};

// Per-axis sampling bounds for net construction; entries may be absent where
// the axis has natural bounds (interval, circle) or to accept the default.
using Window = std::vector<std::optional<AxisRange>>;

struct QuotientPiece {
    std::string id;
    SpacePtr space;
    Window window;
};

struct LineSpace {};
struct IntervalSpace { double a = 0.0, b = 1.0; };
struct CircleSpace { double circumference = 1.0; };
struct ScaledSpace { double factor = 1.0; SpacePtr inner; };
struct ProductSpace { std::vector<SpacePtr> factors; };
struct WarpedSpace { SpacePtr inner; WarpVector warp; };

// Extended mapping cylinder of cert.map: domain x [0, 1/2] and
// codomain x [3/2, 2] with the seam (x, 1/2) ~ (f(x), 3/2).
// The pieces are stored explicitly so tests can tamper with them.
struct CylinderVariant {
    GluingCertificate cert;
    double collar_eps = 0.0625;
    SpacePtr dom_piece;  // product(domain, [0, 1/2])
    SpacePtr cod_piece;  // product(codomain, [3/2, 2])
};

// Disjoint union of chartable pieces glued along identifications. `claims`
// carries recorded-but-unverified statements (homotopy equivalences); `marks`
// names distinguished boundary subspaces.
struct QuotientVariant {
    std::vector<QuotientPiece> pieces;
    std::vector<Identification> identifications;
    std::vector<std::string> claims;
    std::vector<std::pair<std::string, ChartRef>> marks;
};

struct SpaceDescriptor {
    std::variant<LineSpace, IntervalSpace, CircleSpace, ScaledSpace,
                 ProductSpace, WarpedSpace, CylinderVariant, QuotientVariant>
        node;

    template <class T> const T* as() const { return std::get_if<T>(&node); }
    template <class T> bool is() const { return std::holds_alternative<T>(node); }
};

SpacePtr line();
SpacePtr interval(double a, double b);
SpacePtr circle(double circumference);
SpacePtr scaled(double factor, SpacePtr inner);
SpacePtr product(std::vector<SpacePtr> factors);
SpacePtr warped(SpacePtr inner, WarpVector warp);
SpacePtr cylinder(CylinderVariant cyl);
SpacePtr quotient(QuotientVariant q);

// Throws SchemaError on invalid parameters (nonpositive scales, a >= b, ...).
void validate_space(const SpaceDescriptor& s);

// True when the space is a tree of line/interval/circle/scaled/product/warped
// nodes, i.e. points are plain coordinate tuples.
bool is_chartable(const SpaceDescriptor& s);

// True when base_distance has a closed form (chartable with no warped node).
bool is_primitive(const SpaceDescriptor& s);

// ---------------------------------------------------------------------------
// Points and paths
// ---------------------------------------------------------------------------

// Coordinate tree mirroring the descriptor: scalars at line/interval/circle
// leaves, tuples at products, [inner, fiber] pairs at warped nodes. Scaled
// nodes reuse the inner shape.
class CoordValue {
public:
    CoordValue() : v_(0.0) {}
    CoordValue(double x) : v_(x) {}
    CoordValue(std::vector<CoordValue> xs) : v_(std::move(xs)) {}
    CoordValue(std::initializer_list<CoordValue> xs) : v_(std::vector<CoordValue>(xs)) {}

    bool is_scalar() const { return std::holds_alternative<double>(v_); }
    double scalar() const;
    const std::vector<CoordValue>& tuple() const;

    bool operator==(const CoordValue&) const = default;

private:
    std::variant<double, std::vector<CoordValue>> v_;
};

// `piece` is empty unless the space is a cylinder/quotient, in which case it
// names the piece the coordinates live in.
struct PointCoord {
    std::string piece;
    CoordValue value;

    PointCoord() = default;
    PointCoord(CoordValue v) : value(std::move(v)) {}
    PointCoord(std::string piece_, CoordValue v) : piece(std::move(piece_)), value(std::move(v)) {}

    bool operator==(const PointCoord&) const = default;
};

// Piecewise-linear path: waypoints with strictly increasing parameter values
// t_0 = 0 < ... < t_p = 1. Segments are straight in coordinates.
struct PolyPath {
    std::vector<PointCoord> waypoints;
    std::vector<double> params;

    static PolyPath through(std::vector<PointCoord> pts);  // uniform params
    void validate() const;
};

// Throws ShapeMismatch unless p's coordinates match the space's shape
// (normalized circle coords, interval bounds, known piece tag).
void check_shape(const SpaceDescriptor& s, const PointCoord& p);

// Returns p with circle coordinates wrapped into [0, circumference).
PointCoord normalize_point(const SpaceDescriptor& s, const PointCoord& p);

} // namespace warpspace
