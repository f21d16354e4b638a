#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "commhom/lie_catalog.hpp"

namespace commhom {

using FaceMask = std::uint32_t;  // bit v-1 set => vertex v belongs to the face

/* A face of the alcove, stored as its white vertex set.  dim = |white| - 1.
 * cached_order is |W(face)|, the Weyl order of the complementary black
 * coloring. */
struct Face {
    FaceMask white = 0;
    Int cached_order;

    int dim() const;
};

/* Ascending vertex labels of a mask. */
std::vector<int> mask_vertices(FaceMask m);
FaceMask vertices_mask(const std::vector<int>& vs);

/* Compare two masks by (cardinality, lexicographic vertex sequence). */
bool face_order_less(FaceMask a, FaceMask b);

/* An abstract simplicial complex on the n+1 diagram vertices: either the full
 * alcove or one of its valuation subcomplexes.  Faces are kept sorted by
 * (dimension, lexicographic name) and the family is closed under nonempty
 * subsets. */
class AlcoveComplex {
public:
    AlcoveComplex(LieType type, int vertex_count, std::vector<Face> faces);

    const LieType& type() const { return type_; }
    int vertex_count() const { return vertex_count_; }
    const std::vector<Face>& faces() const { return faces_; }

    bool empty() const { return faces_.empty(); }
    bool contains(FaceMask m) const;
    const Face* find(FaceMask m) const;
    int dim() const;                      // -1 for the empty complex
    std::vector<Int> f_vector() const;    // counts by dimension 0..dim

    /* "134" up to 9 vertices, "1,3,11" beyond. */
    std::string face_name(FaceMask m) const;
    FaceMask parse_face_name(const std::string& name) const;

private:
    LieType type_;
    int vertex_count_;
    std::vector<Face> faces_;  // sorted by face_order_less
};

/* Parameters of a valuation subcomplex: |W| = p^r q with p coprime to q, and
 * 0 <= k <= r.  vacuous means p does not divide |W| (r = 0), in which case
 * the subcomplex is the whole alcove. */
struct SubcomplexSpec {
    Int p;
    int k = 0;
    int r = 0;
    bool vacuous = false;
};

bool is_prime(const Int& p);

/* Validates primality and 0 <= k <= r. */
SubcomplexSpec make_subcomplex_spec(const LieType& type, const Int& p, int k);

/* All 2^(n+1) - 1 faces with their cached orders. */
AlcoveComplex full_alcove(const LieType& type);

/* Faces whose order ratio |W|/|W(face)| has p-adic valuation at most k. */
AlcoveComplex delta_p_k(const LieType& type, const SubcomplexSpec& spec);
AlcoveComplex delta_p_k(const LieType& type, const Int& p, int k);

/* Alternating sum of face counts; 0 for the empty complex. */
Int euler_characteristic(const AlcoveComplex& c);

/* Inclusion-maximal faces in (dimension, name) order. */
std::vector<Face> facets(const AlcoveComplex& c);

/* A permutation of the diagram vertices, as images of 1..n+1. */
using VertexPermutation = std::vector<int>;

/* The diagram symmetries used by the counting arguments: the full rotation
 * group for type A, the order-3 rotation for E6, identity otherwise. */
std::vector<VertexPermutation> default_diagram_symmetries(const LieType& type);

/* Per dimension: face counts grouped by the size of their orbit under the
 * group generated by the given permutations.  Every permutation must be an
 * automorphism of the extended diagram (AutomorphismMismatch otherwise). */
std::vector<std::map<int, Int>> automorphism_orbits(
    const LieType& type, const AlcoveComplex& c,
    const std::vector<VertexPermutation>& generators);

}  // namespace commhom
