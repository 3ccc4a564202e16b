#pragma once

#include <optional>
#include <string>
#include <vector>

#include "warpspace/quotient.hpp"
#include "warpspace/space.hpp"

namespace warpspace {

// ---------------------------------------------------------------------------
// Graph of spaces
// ---------------------------------------------------------------------------

struct GosVertex {
    std::string id;
    SpacePtr space;  // defaults to circle(1)
};

// One oriented edge. `bar` names the reversed edge; edge spaces satisfy
// Y_e = Y_ebar. The attaching map goes Y_e -> lambda_e * X_origin, given
// either as an explicit map or as a circle-cover degree k.
struct GosEdge {
    std::string id;
    std::string bar;
    std::string origin;
    std::optional<long long> k;
    std::optional<MapDescriptor> map;
    double lambda = 1.0;
    SpacePtr space;  // edge space, defaults to circle(1)
};

struct GraphOfSpacesSpec {
    std::vector<GosVertex> vertices;
    std::vector<GosEdge> edges;
    std::vector<std::string> orientation;  // one of {e, ebar} per pair
    std::vector<std::string> tree;         // spanning tree, by representative edge id

    const GosVertex& vertex(const std::string& id) const;
    const GosEdge& edge(const std::string& id) const;
    void validate() const;
};

// ---------------------------------------------------------------------------
// Gluing certification
// ---------------------------------------------------------------------------

struct CertifyConfig {
    int n_samples = 64;
    double tol = 1e-9;
};

// Certifies f: X -> Y as a gluing by sampling: bijective local isometries
// pass directly; local-isometry covering maps pass when sampled fibers have
// pairwise-disjoint eps-balls (eps = a quarter of the fiber spacing). Throws
// CertificationFailure when the map passes neither test.
GluingCertificate certify_gluing(const MapDescriptor& f, const SpacePtr& X,
                                 const SpacePtr& Y, const CertifyConfig& cfg = {});

// ---------------------------------------------------------------------------
// Cylinders, spirals, multi-warp total spaces
// ---------------------------------------------------------------------------

// Extended mapping cylinder C(f): domain x [0,1/2] and codomain x [3/2,2]
// glued along (x,1/2) ~ (f(x),3/2). collar_eps < 0 picks the default of 1/16
// (an eighth of the piece height).
SpacePtr build_extended_cylinder(const GluingCertificate& cert,
                                 double collar_eps = -1.0);

struct CollarReport {
    bool pass = false;
    double max_rel_deviation = 0.0;
    int n_pairs = 0;
    std::vector<std::string> notes;
};

// Compares net distances between nearby collar points against the Euclidean
// product metric of the corresponding boundary space. Pairs straddling the
// seam are never sampled; collars are eps-bands at the free boundaries only.
CollarReport check_straight_collars(const SpaceDescriptor& cyl, double eps,
                                    int n_samples, std::uint64_t seed = 0,
                                    double tol = 1e-6,
                                    const NetConfig& net_cfg = {});

// Two-sided cylinder C(phi_e, phi_ebar): C(phi_e) and C(phi_ebar) glued along
// their edge-space boundary copies. Marks X_<e> and X_<ebar> (the free vertex
// sides, each isometric to lambda * X_vertex).
SpacePtr build_two_sided_cylinder(const GraphOfSpacesSpec& spec,
                                  const std::string& edge_id,
                                  const Window& fiber_window = {});

struct SpiralOptions {
    Window fiber_window = {};  // default [-2, 2]
    double collar_eps = -1.0;
};

// Warped mapping spiral: C(f) x_lambda R glued along
// (x, t) ~ (x, t + 1) between the domain and codomain boundaries.
// cert.domain must be scaled(lambda, X) with cert.codomain = X.
SpacePtr build_spiral(const GluingCertificate& cert, double lambda,
                      const SpiralOptions& opts = {});

struct MultiwarpOptions {
    AxisRange fiber_range{-2.0, 2.0};  // sampling window per fiber coordinate
};

// Total space of the multi-warped construction: vertex pieces X_v x_lambda R^E
// and cylinder pieces C(phi_e, phi_ebar) x_lambda R^E, glued by the
// delta-shift identifications (x, t) ~ (x, t + delta_e*). With no edges this
// is just the single vertex space.
SpacePtr build_multiwarp_space(const GraphOfSpacesSpec& spec,
                               const MultiwarpOptions& opts = {});

// ---------------------------------------------------------------------------
// Combinatorial bookkeeping (no metric)
// ---------------------------------------------------------------------------

struct ComplexCombinatorics {
    struct Piece { std::string id; std::string kind; };
    struct Gluing { std::string description; };
    std::vector<Piece> total_space_pieces;            // vertex spaces + Y_e x [0,1]
    std::vector<Gluing> total_space_identifications;
    std::vector<Piece> cylinder_realization_pieces;   // vertex spaces + double cylinders
    std::vector<Gluing> cylinder_realization_identifications;
    std::vector<std::string> claims;
};

ComplexCombinatorics build_total_space_combinatorial(const GraphOfSpacesSpec& spec);

} // namespace warpspace
