#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "warpspace/engine.hpp"
#include "warpspace/space.hpp"

namespace warpspace {

struct TriangleSample {
    std::vector<PointCoord> vertices;          // exactly three
    std::vector<GeodesicResult> side_geodesics; // AB, BC, CA
    std::vector<std::pair<int, double>> interior_samples;  // (side, fraction)
};

struct AuditConfig {
    double radius = 0.5;        // triangles sampled inside balls of this radius
    double tol = 1e-4;          // positive slack below this is solver noise
    std::vector<double> fractions{0.25, 0.5, 0.75};
    Window window;              // sampling window for unbounded axes
    SolverConfig solver;
    NetConfig net;
};

struct TriangleRecord {
    double side_a = 0.0, side_b = 0.0, side_c = 0.0;
    double diameter = 0.0;
    double slack = 0.0;         // max d_space - d_comparison over sample pairs
    bool degenerate = false;
    bool sides_converged = true;
};

struct AuditReport {
    std::string space_id;
    int n_triangles = 0;
    double max_cat0_violation = 0.0;  // positive = violation
    int n_cat0_violations = 0;
    int n_symmetry_failures = 0;
    int n_triangle_inequality_failures = 0;
    int n_degenerate_skipped = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    double radius = 0.0;
    double net_epsilon = 0.0;   // 0 when no net was involved
    std::vector<TriangleRecord> triangles;
    std::vector<std::string> collar_notes;
    std::vector<std::string> convexity_notes;
};

// Builds the Euclidean comparison triangle with the solved side lengths and
// returns the largest d_space(p, q) - d_comparison(pbar, qbar) over pairs of
// interior samples. Nonpositive within tolerance means the sample is
// consistent with CAT(0). Throws Error on a degenerate comparison triangle.
double cat0_check(DistanceEngine& engine, const TriangleSample& tri, double tol);

// Solves side geodesics and fills interior samples at the given fractions.
TriangleSample make_triangle(DistanceEngine& engine,
                             const std::vector<PointCoord>& vertices,
                             const std::vector<double>& fractions);

struct ConvexityReport {
    bool convex = false;
    double max_deviation = 0.0;
    int n_pairs = 0;
    int n_nonconverged = 0;
};

// Samples point pairs in a subspace, solves the connecting geodesic, and
// measures how far its waypoints leave the subspace. `sample` draws subspace
// points; `deviation` measures a point's distance from the subspace.
ConvexityReport convexity_check(DistanceEngine& engine,
                                const std::function<PointCoord(Rng&)>& sample,
                                const std::function<double(const PointCoord&)>& deviation,
                                int n_pairs, std::uint64_t seed, double tol);

// Samples domain pairs within distance r and compares image distances.
// Passes iff the max relative deviation is at most tol.
struct LocalIsometryReport {
    bool pass = false;
    double max_deviation = 0.0;
    int n_pairs = 0;
};
LocalIsometryReport local_isometry_check(const MapDescriptor& f,
                                         const SpacePtr& domain,
                                         const SpacePtr& codomain,
                                         const Window& window, double r,
                                         int n_samples, double tol,
                                         std::uint64_t seed = 0);

// Samples n triangles inside radius-limited balls, runs cat0_check plus
// symmetry and triangle-inequality spot checks, and aggregates. Deterministic
// for fixed seed and config; failures are report entries, never throws for
// geometry reasons.
AuditReport run_audit(const SpacePtr& space, int n_triangles, std::uint64_t seed,
                      const AuditConfig& cfg = {});

} // namespace warpspace
