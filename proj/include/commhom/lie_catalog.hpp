#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commhom/bigint.hpp"
#include "commhom/errors.hpp"

namespace commhom {

enum class Family : int { A, B, C, D, G2, F4, E6, E7, E8 };

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& s);
bool family_is_exceptional(Family f);
int exceptional_rank(Family f);

/* A compact simply-connected simple Lie group, named by family and rank.
 * Rank constraints: A needs n >= 1, B n >= 2, C n >= 3, D n >= 4;
 * exceptional ranks are fixed by the family. */
struct LieType {
    Family family;
    int rank;

    LieType(Family f, int n);

    std::string name() const;          // "A3", "G2", ...
    int vertex_count() const { return rank + 1; }
    bool operator==(const LieType&) const = default;
};

/* Numeric facts for one type: rank, real dimension of the group, Weyl group
 * order, and the characteristic degrees d_1..d_n.  The degrees are stored
 * constants; prod(d_i) = |W| and sum(2 d_i - 1) = dim are enforced. */
struct GroupFacts {
    int rank = 0;
    int dim = 0;
    Int weyl_order;
    std::vector<int> degrees;
};

struct DynkinEdge {
    int a = 0;
    int b = 0;            // vertex labels, 1-based, a < b
    int multiplicity = 1; // bond multiplicity, 1..4

    bool operator==(const DynkinEdge&) const = default;
};

/* Extended Dynkin diagram on vertices 1..n+1.  Deleting highest_root_vertex
 * leaves the finite diagram of the type.  Multiplicity 4 occurs only on the
 * two-vertex rank-1 diagram. */
struct DynkinGraph {
    int vertex_count = 0;
    std::vector<DynkinEdge> edges;
    int highest_root_vertex = 0;

    int edge_multiplicity(int a, int b) const;   // 0 when not adjacent
    std::vector<int> neighbors(int v) const;
};

/* A black/white coloring of an extended diagram; the black set encodes a face
 * of the alcove (white = face vertices), so at least one vertex stays white. */
struct ColoredDiagram {
    DynkinGraph graph;
    std::uint32_t black_mask = 0;  // bit v-1 set => vertex v is black

    ColoredDiagram(DynkinGraph g, std::uint32_t black);

    bool is_black(int v) const { return (black_mask >> (v - 1)) & 1u; }
    std::vector<int> black_vertices() const;
};

/* A connected induced subgraph of a diagram, listed by its vertex labels. */
struct InducedSubgraph {
    std::vector<int> vertices;      // ascending
    std::vector<DynkinEdge> edges;  // between listed vertices only
};

/* Finite Coxeter type of a component.  B and C are merged: their Weyl groups
 * have equal order 2^n n! and only orders enter any computation here. */
enum class ComponentFamily : int { A, BC, D, E6, E7, E8, F4, G2 };

struct ComponentType {
    ComponentFamily family;
    int rank;

    Int weyl_order() const;
    std::string name() const;  // "A4", "BC3", "D5", ...
    bool operator==(const ComponentType&) const = default;
};

GroupFacts catalog_facts(const LieType& type);
DynkinGraph extended_diagram(const LieType& type);

/* "SU(4)", "Spin(11)", "Sp(3)", "Spin(10)", "G2", ... */
std::string compact_group_name(const LieType& type);

/* Connected components of the subgraph induced on the black vertices,
 * ordered by smallest vertex label.  Empty list for an all-white coloring. */
std::vector<InducedSubgraph> black_components(const ColoredDiagram& c);

/* Recognize the finite Coxeter type of a connected induced subgraph.
 * Throws UnclassifiableSubgraph when no finite type matches (catalog bug). */
ComponentType classify_component(const InducedSubgraph& g);

/* |W(coloring)| = product of the component Weyl orders; 1 when all white. */
Int subgroup_order(const ColoredDiagram& c);

/* Plain-text reference for every supported type: vertex numbering, edge list
 * with multiplicities, highest-root vertex, degrees.  docs/catalog.md must
 * stay identical to this text; a test enforces it. */
std::string catalog_reference_text();

}  // namespace commhom
