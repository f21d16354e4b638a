#include <doctest.h>

#include <set>
#include <vector>

#include "commhom/combinatorics_ad.hpp"
#include "commhom/errors.hpp"

using namespace commhom;

namespace {

/* Alternating face count of the bottom valuation subcomplex, computed from
 * the full alcove's cached orders rather than through delta_p_k. */
Int level_chi_by_filter(const LieType& type, const Int& p) {
    AlcoveComplex full = full_alcove(type);
    Int chi = 0;
    for (const Face& f : full.faces()) {
        if (valuation(f.cached_order, p) < 1) continue;
        chi += f.dim() % 2 == 0 ? 1 : -1;
    }
    return chi;
}

}  // namespace

TEST_CASE("base-p digits") {
    PAdicDigits d = p_adic_digits(10, 3);
    CHECK(d.digits == std::vector<int>{1, 0, 1});
    CHECK(d.leading_digit() == 1);
    CHECK(d.n == 10);
    CHECK(d.p == 3);

    CHECK(p_adic_digits(1, 2).digits == std::vector<int>{1});
    CHECK(p_adic_digits(8, 2).digits == std::vector<int>{0, 0, 0, 1});
    CHECK(p_adic_digits(7, 10).digits == std::vector<int>{7});

    CHECK_THROWS_AS(p_adic_digits(5, 1), UsageError);
    CHECK_THROWS_AS(p_adic_digits(0, 3), UsageError);
    CHECK_THROWS_AS(p_adic_digits(-4, 3), UsageError);
}

TEST_CASE("digitwise binomial reduction matches the direct one") {
    for (Int p : {Int(2), Int(3), Int(5)})
        for (unsigned a = 0; a <= 30; ++a)
            for (unsigned b = 0; b <= a; ++b)
                CHECK(lucas_binom_mod_p(a, b, p) == binomial(a, b) % p);

    CHECK(lucas_binom_mod_p(10, 5, 3) == 0);   // digits 101 vs 012
    CHECK(lucas_binom_mod_p(13, 4, 3) == 1);   // digits 111 vs 011
    CHECK(lucas_binom_mod_p(6, 9, 5) == 0);
    CHECK(lucas_binom_mod_p(6, -2, 5) == 0);
    CHECK(lucas_binom_mod_p(0, 0, 7) == 1);

    CHECK_THROWS_AS(lucas_binom_mod_p(6, 3, 4), UsageError);
    CHECK_THROWS_AS(lucas_binom_mod_p(6, 3, 1), UsageError);
}

TEST_CASE("block gluings of the 3-cycle at p = 3") {
    std::set<FaceMask> vertices = block_gluings(2, 3, 0);
    CHECK(vertices == std::set<FaceMask>{0b001u, 0b010u, 0b100u});
    CHECK(block_gluings(2, 3, 1).empty());
    CHECK(block_gluings(2, 3, -1).empty());

    CHECK_THROWS_AS(block_gluings(0, 3, 0), UsageError);
    CHECK_THROWS_AS(block_gluings(2, 6, 0), UsageError);
}

TEST_CASE("block gluings of the 4-cycle at p = 2") {
    /* 4 = 2^2, so the only decomposition is a single block with one
     * terminal; each rotation contributes one vertex face. */
    CHECK(block_gluings(3, 2, 0) == std::set<FaceMask>{0b0001u, 0b0010u, 0b0100u, 0b1000u});
    CHECK(block_gluings(3, 2, 1).empty());
}

TEST_CASE("gluing faces agree with direct valuation enumeration") {
    for (int n = 1; n <= 8; ++n)
        for (Int p : {Int(2), Int(3), Int(5), Int(7)})
            CHECK(verify_cycle_characterization(n, p));
}

TEST_CASE("run-bounded colorings of small cycles") {
    FChiValues v = f_chi_values(3, 3);
    CHECK(v.f == std::vector<Int>{0, 1, 3, 1});
    CHECK(v.chi == 1);

    v = f_chi_values(4, 3);
    CHECK(v.f == std::vector<Int>{0, 0, 3, 4, 1});
    CHECK(v.chi == 0);

    v = f_chi_values(2, 3);
    CHECK(v.f == std::vector<Int>{0, 2, 1});
    CHECK(v.chi == -1);

    /* At p = 2 no black vertex is allowed at all. */
    v = f_chi_values(4, 2);
    CHECK(v.f == std::vector<Int>{0, 0, 0, 0, 1});
    CHECK(v.chi == 1);
    v = f_chi_values(3, 2);
    CHECK(v.f == std::vector<Int>{0, 0, 0, 1});
    CHECK(v.chi == -1);

    CHECK_THROWS_AS(f_chi_values(0, 3), UsageError);
    CHECK_THROWS_AS(f_chi_values(3, 4), UsageError);
}

TEST_CASE("closed form holds across a range of ranks and primes") {
    for (int n = 1; n <= 12; ++n)
        for (Int p : {Int(2), Int(3), Int(5), Int(7)}) {
            FChiValues v = f_chi_values(n, p);
            Int expected = Int(n) % p == p - 1 ? Int(-1) : (Int(n) % p == 0 ? Int(1) : Int(0));
            CHECK(v.chi == expected);
        }
}

TEST_CASE("top-layer deficiency of D-type alcoves") {
    struct Case {
        int n;
        Int p;
    };
    for (const Case& c : {Case{4, 3}, Case{5, 3}, Case{5, 5}, Case{6, 3}, Case{6, 5}})
        CHECK(spin_tilde_chi(c.n, c.p) == 1 - level_chi_by_filter(LieType(Family::D, c.n), c.p));

    CHECK_THROWS_AS(spin_tilde_chi(4, 7), UsageError);    // 7 does not divide the group order
    CHECK_THROWS_AS(spin_tilde_chi(3, 2), UsageError);    // rank below the D-family floor
}
