#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "commhom/alcove.hpp"

namespace commhom {

/* Pairs (sigma, tau) with tau a codimension-1 face of sigma. */
struct Matching {
    std::vector<std::pair<FaceMask, FaceMask>> pairs;
};

struct MorseCertificate {
    bool is_partial_matching = false;
    bool is_acyclic = false;
    std::vector<FaceMask> critical;

    /* The complex collapses to a point only on this combination. */
    bool certifies_collapse(const AlcoveComplex& c) const;
};

/* Checks pairing discipline, then acyclicity of the Hasse diagram with the
 * matched edges reversed; critical lists the unmatched faces.  Throws
 * UnknownFace when a pair names a face outside the complex. */
MorseCertificate validate_matching(const AlcoveComplex& c, const Matching& m);

/* Directed edges of the modified Hasse diagram: every (face, facet) pointing
 * down, except matched pairs pointing up. */
std::vector<std::pair<FaceMask, FaceMask>> modified_hasse_edges(const AlcoveComplex& c, const Matching& m);

/* Lowest-labeled vertex v with sigma + v a face for every face sigma. */
std::optional<int> cone_apex(const AlcoveComplex& c);

/* Greedy elementary-collapse search with backtracking.  Success returns an
 * acyclic matching whose only critical cell is one vertex; exhausting the
 * state budget or the search space returns nothing and is inconclusive. */
std::optional<Matching> collapsibility_search(const AlcoveComplex& c, std::uint64_t budget = 1000000);

/* Plain-text matching lines, one "sigma tau" pair per line; blank lines and
 * lines starting with # are skipped. */
Matching read_matching(std::istream& in, const AlcoveComplex& c);
void write_matching(std::ostream& out, const AlcoveComplex& c, const Matching& m);

}  // namespace commhom
