#pragma once

#include <map>
#include <vector>

#include "commhom/lie_catalog.hpp"

namespace commhom {

/* Finite-type Cartan matrix; reflection i acts on the simple-root basis by
 * alpha_j -> alpha_j - C(i,j) alpha_i. */
struct CartanMatrix {
    int n = 0;
    std::vector<int> entries;  // row-major n x n

    int at(int i, int j) const { return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
    void validate() const;
};

CartanMatrix cartan_matrix(const LieType& type);

/* Group elements grouped by characteristic polynomial.  A key lists the
 * coefficients c_0..c_n of det(tI - w), c_n = 1. */
struct CharPolyBucket {
    std::map<std::vector<long long>, Int> multiplicity;

    Int total() const;
};

/* Closure of the simple reflections acting on the simple-root basis, with
 * exact integer matrices deduplicated elementwise.  Throws CapExceeded when
 * the group order exceeds cap; on completion the bucket total is checked
 * against the catalog order. */
CharPolyBucket generate_weyl_buckets(const LieType& type, const Int& cap = 1000000);

struct RationalSeries {
    int truncation = 0;
    std::vector<Rat> coefficients;  // c_0..c_N

    const Rat& at(int degree) const;
    /* Coefficients here are Betti numbers; a non-integer is a bug. */
    Int integer_at(int degree) const;
};

bool operator==(const RationalSeries& a, const RationalSeries& b);

/* d + n(m-2): level-i homology of the weighted complex sits in topological
 * degree degree_offset + i, and the series top degree is degree_offset + n. */
int degree_offset(const LieType& type, int m);

/* d + n + 2, comfortably past the m = 2 top degree. */
int default_truncation(const LieType& type);

/* (prod_i (1 - t^{2 d_i}) / |W|) * sum_w det(1+tw)^m / det(1-t^2 w), exactly,
 * truncated at N; every coefficient is checked to be a non-negative integer
 * (NegativeCoefficient / ComputationMismatch otherwise). */
RationalSeries poincare_series(const LieType& type, int m, int truncation, const CharPolyBucket& buckets);
RationalSeries poincare_series(const LieType& type, int m, int truncation, const Int& cap = 1000000);

/* prod_i (1 + t^{2 d_i - 1}) truncated at N, the m = 1 comparison target. */
RationalSeries exterior_series(const LieType& type, int truncation);

}  // namespace commhom
