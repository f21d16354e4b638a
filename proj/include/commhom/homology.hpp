#pragma once

#include <string>
#include <vector>

#include "commhom/alcove.hpp"
#include "commhom/bigint.hpp"

namespace commhom {

/* Dense exact integer matrix.  Everything in this module is exact; no
 * floating point is used anywhere. */
struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> data;  // row-major

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

    static IntegerMatrix identity(int n);

    Int& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    bool operator==(const IntegerMatrix&) const = default;
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

/* Exact determinant by fraction-free elimination (used to certify that the
 * transform matrices are unimodular). */
Int determinant(const IntegerMatrix& a);

/* left * A * right is the rectangular diagonal carrying `diagonal` (positive,
 * each entry dividing the next, zeros trimmed). */
struct SmithForm {
    std::vector<Int> diagonal;
    IntegerMatrix left;
    IntegerMatrix right;
};

/* Deterministic Smith normal form: pivot is the minimal nonzero absolute
 * entry, ties broken by lowest row then lowest column. */
SmithForm smith_normal_form(const IntegerMatrix& a);

/* Just the diagonal of the Smith form.  Much faster than the full form
 * because no transform matrices are carried. */
std::vector<Int> invariant_factors(IntegerMatrix a);

/* A bounded complex of free Z-modules.  bases[j] labels the generators in
 * degree min_degree + j; boundaries[j] maps degree min_degree + j + 1 into
 * degree min_degree + j.  The composite of consecutive boundaries must
 * vanish (checked on construction). */
class ChainComplex {
public:
    ChainComplex(std::string name, int min_degree,
                 std::vector<std::vector<std::string>> bases,
                 std::vector<IntegerMatrix> boundaries);

    const std::string& name() const { return name_; }
    int min_degree() const { return min_degree_; }
    int top_degree() const { return min_degree_ + static_cast<int>(bases_.size()) - 1; }
    int rank_at(int degree) const;
    const std::vector<std::vector<std::string>>& bases() const { return bases_; }
    const std::vector<std::string>& basis_at(int degree) const;

    /* The boundary leaving `degree`; a zero map below/above the range. */
    IntegerMatrix boundary_from(int degree) const;

private:
    std::string name_;
    int min_degree_;
    std::vector<std::vector<std::string>> bases_;
    std::vector<IntegerMatrix> boundaries_;
};

/* Integral homology: free rank and invariant factors (> 1) per degree. */
struct HomologySummary {
    int min_degree = 0;
    std::vector<int> free_rank;            // per degree from min_degree
    std::vector<std::vector<Int>> torsion;  // invariant factors > 1, divisibility order

    int degree_count() const { return static_cast<int>(free_rank.size()); }
    bool trivial() const;  // all free ranks 0 and no torsion
};

/* Cellular chain complex of an alcove subcomplex; ascending-vertex-order
 * signs.  With `reduced` the augmentation to degree -1 is appended, so the
 * empty complex reports a single class in degree -1. */
ChainComplex simplicial_chain_complex(const AlcoveComplex& c, bool reduced);

/* Homology dimensions over F_p per degree, from matrix ranks mod p. */
std::vector<int> mod_p_betti(const ChainComplex& cc, const Int& p);

HomologySummary integral_homology(const ChainComplex& cc);

/* "0", "Z", "Z^2+Z/2", ... */
std::string homology_group_name(int free_rank, const std::vector<Int>& torsion);

enum class Parity { even, odd };

/* The one-line chain model of the weighted homotopy colimit.  For even m:
 * one generator u(face) per face of the full alcove, level = face dimension,
 * boundary coefficient |W(face minus s)| / |W(face)| on deleting white
 * vertex s, with the alternating sign of s's position.  For odd m: a single
 * generator at level n with zero boundary.  Level i models topological
 * degree q_m + i with q_m = dim + n(m-2). */
ChainComplex weighted_hocolim_complex(const LieType& type, Parity parity);

/* Integral homology of the even-parity weighted complex.  Equivalent to
 * integral_homology(weighted_hocolim_complex(type, Parity::even)) but scales
 * to high ranks: each weighted boundary B satisfies B * diag(upper orders) =
 * diag(lower orders) * S with S the plain simplex boundary, which pins the
 * ranks and confines invariant factors to primes of the Weyl order; their
 * p-parts then come from eliminations over Z/p^m.  Every ingredient of that
 * reduction is verified exactly at run time. */
HomologySummary weighted_homology_even(const LieType& type);

}  // namespace commhom
