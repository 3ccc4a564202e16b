#pragma once

#include <string>
#include <vector>

#include "warpspace/complexes.hpp"
#include "warpspace/space.hpp"

namespace warpspace {

// Finite graph of infinite-cyclic groups: each monomorphism Z -> Z is
// multiplication by a nonzero integer k_e.
struct GogEdge {
    std::string id;
    std::string bar;
    std::string origin;
    long long k = 1;
};

struct GraphOfGroupsSpec {
    std::vector<std::string> vertices;
    std::vector<GogEdge> edges;
    std::vector<std::string> tree;  // spanning tree, by representative edge id

    void validate() const;
};

// A free-group word: (generator, exponent) pairs.
using Word = std::vector<std::pair<std::string, long long>>;

struct Relator {
    Word word;            // lhs * rhs^-1, freely reduced
    std::string equation; // human form "t a t^-1 = a^2"
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Relator> relators;
    std::vector<std::string> elimination_notes;  // which letters were killed and why

    std::string text() const;  // "< a, t | t a t^-1 = a^2 >"-style, unicode brackets
};

// Serre presentation: generators a_v per vertex and t_e per oriented non-tree
// edge, one relator t_e a_origin(e)^k_e t_e^-1 = a_origin(ebar)^k_ebar per
// oriented edge, with t_e the empty word on tree edges and t_ebar eliminated
// as t_e^-1.
Presentation serre_presentation(const GraphOfGroupsSpec& spec);

// Degree-k cover of the unit circle onto the 1/|k| circle, x -> k*x mod 1 in
// codomain coordinates (codomain kept as scaled(1/|k|, circle(1)) so both
// sides share the vertex-space parameterization). Negative k reverses
// orientation. Throws SchemaError on k = 0.
struct CircleCover {
    MapDescriptor map;
    SpacePtr domain;
    SpacePtr codomain;
};
CircleCover circle_cover(long long k);

// The graph of spaces realizing the graph of groups: X_v = Y_e = circle(1),
// attaching maps circle_cover(k_e), lambda_e = 1/|k_e|.
GraphOfSpacesSpec to_graph_of_spaces(const GraphOfGroupsSpec& spec);

struct RealizedGraphOfGroups {
    SpacePtr space;
    Presentation presentation;
    std::vector<std::string> claims;
};

// Full pipeline: certify every attaching cover, build the multi-warped total
// space, and emit the Serre presentation. Certification cannot fail for
// k_e != 0; if it does, that is an internal error.
RealizedGraphOfGroups realize_graph_of_groups(const GraphOfGroupsSpec& spec,
                                              const MultiwarpOptions& opts = {});

} // namespace warpspace
