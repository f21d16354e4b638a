#pragma once

#include <set>
#include <vector>

#include "commhom/alcove.hpp"

namespace commhom {

/* Base-p digits a_0..a_l of n, least significant first, a_l nonzero. */
struct PAdicDigits {
    Int n;
    Int p;
    std::vector<int> digits;

    int leading_digit() const { return digits.back(); }
};

PAdicDigits p_adic_digits(const Int& n, const Int& p);

/* C(a, b) mod p by Lucas's theorem: the product of digitwise binomials. */
Int lucas_binom_mod_p(const Int& a, const Int& b, const Int& p);

/* One building block of the cycle characterization: p^j - 1 black vertices
 * followed by one terminal whose color is chosen when the blocks are glued. */
struct GluingBlock {
    int j = 0;       // block size p^j
    bool terminal_white = false;
};

/* Faces of the valuation-0 subcomplex of the rank-n cycle realized as cyclic
 * concatenations of a_j copies of each block C(j), where n+1 = sum a_j p^j;
 * an i-face shows exactly i+1 white terminals.  Results are deduplicated as
 * white vertex sets of the labeled cycle 1..n+1. */
std::set<FaceMask> block_gluings(int n, const Int& p, int i);

/* Checks, for every dimension i, that block_gluings equals the direct
 * valuation enumeration of the rank-n cycle's bottom subcomplex. */
bool verify_cycle_characterization(int n, const Int& p);

struct FChiValues {
    std::vector<Int> f;  // f_0..f_n
    Int chi;
};

/* Counts colorings of the (n+1)-cycle with vertex 1 white, i+1 whites total,
 * and the black-component Weyl order prime to p; chi is their alternating
 * sum and must match the closed form: -1 when n = -1 mod p, +1 when
 * n = 0 mod p, 0 otherwise (ComputationMismatch otherwise). */
FChiValues f_chi_values(int n, const Int& p);

/* The top-layer deficiency count for the rank-n D-type alcove at odd p:
 * sum_i (-1)^i (|P_i(full)| - |P_i(level r-1)|) = 1 - chi(level r-1). */
Int spin_tilde_chi(int n, const Int& p);

}  // namespace commhom
