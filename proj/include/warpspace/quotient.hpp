#pragma once

#include <memory>
#include <string>
#include <vector>

#include "warpspace/chart.hpp"
#include "warpspace/geodesic.hpp"
#include "warpspace/space.hpp"

namespace warpspace {

struct NetConfig {
    double epsilon = 0.1;             // grid spacing per axis, in metric units
    double edge_radius_factor = 3.0;  // intra-piece edges up to factor*epsilon
    std::size_t max_nodes = 60000;
    std::size_t max_edges = 4000000;
    double pairing_tol = 1e-9;        // identification local-isometry tolerance
    double weight_tol = 1e-9;         // chord refinement tolerance for edge weights
};

struct NetNode {
    int piece = 0;
    std::vector<double> x;  // flat chart coordinates
    enum class Origin { Grid, Identification, Query } origin = Origin::Grid;
};

// Finite approximation of a quotient space: an epsilon-net of every piece
// window, chord-weighted edges inside pieces, and zero-weight edges across
// sampled identification pairs.
class NetGraph {
public:
    double epsilon = 0.0;

    const std::vector<NetNode>& nodes() const { return nodes_; }
    const std::vector<std::vector<std::pair<int, double>>>& adjacency() const { return adj_; }
    const std::vector<QuotientPiece>& pieces() const { return pieces_; }
    const ChartPlan& plan(int piece) const { return *plans_[piece]; }
    int piece_index(const std::string& id) const;

    PointCoord point_of(int node) const;

    // Nearest existing node within `tol` of the flat coordinates, else -1.
    int find_node(int piece, const std::vector<double>& x, double tol = 1e-9) const;

    // Inserts a node (reusing a coincident one) and connects it to every node
    // of its piece within edge_radius_factor * epsilon.
    int insert_point(const PointCoord& p,
                     NetNode::Origin origin = NetNode::Origin::Query);

    // Dijkstra shortest-path distance between nodes. Throws DisconnectedError.
    double distance(int from, int to) const;
    std::vector<int> shortest_path(int from, int to) const;

    // Convenience: inserts both points and returns distance plus node path.
    struct Query {
        double dist = 0.0;
        std::vector<PointCoord> path;
        double epsilon = 0.0;
    };
    Query query(const PointCoord& p, const PointCoord& q);

    friend NetGraph build_net(const std::vector<QuotientPiece>&,
                              const std::vector<Identification>&,
                              double, const NetConfig&);

private:
    int add_node(NetNode n);
    void connect_within_piece(int node);
    double edge_weight(int piece, const double* a, const double* b) const;
    void dijkstra(int from, int to, std::vector<double>& dist,
                  std::vector<int>& prev) const;

    std::vector<QuotientPiece> pieces_;
    std::vector<std::shared_ptr<ChartPlan>> plans_;
    std::vector<std::vector<AxisRange>> windows_;
    std::vector<NetNode> nodes_;
    std::vector<std::vector<std::pair<int, double>>> adj_;
    std::vector<std::vector<int>> piece_nodes_;
    NetConfig cfg_;
};

// Samples an epsilon-net of each piece window (grid spacing epsilon along
// every axis, warp-aware), adds identification sample pairs as zero-weight
// edges, and chord-weights intra-piece edges within 3*epsilon. Throws
// SchemaError on an empty window or an identification chart that misses the
// window, and rejects identifications whose pairing fails the sampled
// local-isometry check.
NetGraph build_net(const std::vector<QuotientPiece>& pieces,
                   const std::vector<Identification>& identifications,
                   double epsilon, const NetConfig& cfg = {});

// Net over the pieces of a cylinder/quotient descriptor.
NetGraph build_net(const SpaceDescriptor& space, double epsilon,
                   const NetConfig& cfg = {});

// Shortest-path distance between two nodes of the net (the chain infimum
// restricted to net points; identification hops are free).
double quotient_distance(const NetGraph& net, int p, int q);

// Exhaustive chain minimization over a small sample set: chains
// p -> a_1 ~ a_1' -> a_2 ~ ... -> q with at most max_chain_len distance legs,
// legs measured inside single pieces, transitions at sampled identification
// pairs. Independent oracle for quotient_distance.
double chain_infimum_bruteforce(const std::vector<QuotientPiece>& pieces,
                                const std::vector<Identification>& identifications,
                                const PointCoord& p, const PointCoord& q,
                                int max_chain_len,
                                const std::vector<PointCoord>& sample_set);

// Lowers a cylinder descriptor to its quotient form (two product pieces plus
// the seam); quotients pass through.
QuotientVariant as_quotient(const SpaceDescriptor& space);

// Sampled (source, target) point pairs of an identification, spaced `step`
// along every chart parameter, clipped to both windows.
std::vector<std::pair<PointCoord, PointCoord>> sample_identification(
    const std::vector<QuotientPiece>& pieces, const Identification& ident,
    double step);

// Probes the pairing at small parameter offsets and compares source/target
// chord distances. Throws CertificationFailure beyond `tol` relative.
void validate_identification(const std::vector<QuotientPiece>& pieces,
                             const Identification& ident, double tol = 1e-9);

} // namespace warpspace
