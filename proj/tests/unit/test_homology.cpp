#include <doctest.h>

#include <random>
#include <vector>

#include "commhom/homology.hpp"
#include "commhom/lie_catalog.hpp"

using namespace commhom;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntegerMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

void next_combination(std::vector<int>& pick, int limit, bool& done) {
    int k = static_cast<int>(pick.size());
    for (int i = k - 1; i >= 0; --i) {
        if (pick[static_cast<std::size_t>(i)] < limit - (k - i)) {
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
            return;
        }
    }
    done = true;
}

/* gcd of all k x k minors, 0 when every minor vanishes */
Int minor_gcd(const IntegerMatrix& a, int k) {
    Int g = 0;
    std::vector<int> ri(static_cast<std::size_t>(k)), ci(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) ri[static_cast<std::size_t>(i)] = i;
    bool rows_done = false;
    while (!rows_done) {
        for (int i = 0; i < k; ++i) ci[static_cast<std::size_t>(i)] = i;
        bool cols_done = false;
        while (!cols_done) {
            IntegerMatrix sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub.at(i, j) = a.at(ri[static_cast<std::size_t>(i)], ci[static_cast<std::size_t>(j)]);
            g = gcd(g, determinant(sub));
            next_combination(ci, a.cols, cols_done);
        }
        next_combination(ri, a.rows, rows_done);
    }
    return abs(g);
}

void check_round_trip(const IntegerMatrix& a, const SmithForm& s) {
    IntegerMatrix product = multiply(multiply(s.left, a), s.right);
    for (int i = 0; i < product.rows; ++i)
        for (int j = 0; j < product.cols; ++j) {
            Int want = 0;
            if (i == j && i < static_cast<int>(s.diagonal.size())) want = s.diagonal[static_cast<std::size_t>(i)];
            CHECK(product.at(i, j) == want);
        }
    Int dl = determinant(s.left), dr = determinant(s.right);
    CHECK(abs(dl) == 1);
    CHECK(abs(dr) == 1);
}

}  // namespace

TEST_CASE("matrix basics") {
    IntegerMatrix id = IntegerMatrix::identity(3);
    CHECK(id.at(0, 0) == 1);
    CHECK(id.at(0, 1) == 0);
    IntegerMatrix a = from_rows({{1, 2}, {3, 4}});
    IntegerMatrix b = from_rows({{0, 1}, {1, 0}});
    CHECK(multiply(a, b) == from_rows({{2, 1}, {4, 3}}));
    CHECK(multiply(a, IntegerMatrix::identity(2)) == a);
}

TEST_CASE("determinants by fraction-free elimination") {
    CHECK(determinant(IntegerMatrix::identity(4)) == 1);
    CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(from_rows({{2, 1}, {1, 2}})) == 3);
    CHECK(determinant(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
    CHECK(determinant(from_rows({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("smith form of small matrices") {
    IntegerMatrix a = from_rows({{2, 4}, {6, 8}});
    SmithForm s = smith_normal_form(a);
    CHECK(s.diagonal == std::vector<Int>{2, 4});
    check_round_trip(a, s);

    IntegerMatrix diag = from_rows({{4, 0}, {0, 6}});
    CHECK(smith_normal_form(diag).diagonal == std::vector<Int>{2, 12});

    IntegerMatrix zero = from_rows({{0, 0}, {0, 0}});
    CHECK(smith_normal_form(zero).diagonal.empty());

    IntegerMatrix negative = from_rows({{-5}});
    CHECK(smith_normal_form(negative).diagonal == std::vector<Int>{5});

    CHECK(smith_normal_form(IntegerMatrix::identity(3)).diagonal == std::vector<Int>{1, 1, 1});
}

TEST_CASE("smith diagonal equals minor gcd quotients") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> entry(-9, 9);
    for (int trial = 0; trial < 25; ++trial) {
        IntegerMatrix a(3, 4);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) a.at(i, j) = entry(rng);
        SmithForm s = smith_normal_form(a);
        check_round_trip(a, s);
        Int previous = 1;
        for (std::size_t k = 1; k <= 3; ++k) {
            Int g = minor_gcd(a, static_cast<int>(k));
            if (g == 0) {
                CHECK(s.diagonal.size() < k);
                break;
            }
            REQUIRE(s.diagonal.size() >= k);
            CHECK(s.diagonal[k - 1] == g / previous);
            previous = g;
        }
        CHECK(invariant_factors(a) == s.diagonal);
    }
}

TEST_CASE("diagonal-only elimination agrees with the transform-carrying one") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> entry(-1000, 1000);
    for (int trial = 0; trial < 5; ++trial) {
        IntegerMatrix a(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) a.at(i, j) = entry(rng);
        SmithForm s = smith_normal_form(a);
        check_round_trip(a, s);
        CHECK(invariant_factors(a) == s.diagonal);
        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }
}

TEST_CASE("chain complexes reject nonvanishing composites") {
    IntegerMatrix one = from_rows({{1}});
    CHECK_THROWS_AS(ChainComplex("bad", 0, {{"x"}, {"y"}, {"z"}}, {one, one}), ComputationMismatch);
}

TEST_CASE("boundaries outside the range are zero maps of the right shape") {
    ChainComplex cc = weighted_hocolim_complex(LieType(Family::A, 2), Parity::even);
    IntegerMatrix below = cc.boundary_from(cc.min_degree());
    CHECK(below.rows == 0);
    CHECK(below.cols == cc.rank_at(cc.min_degree()));
    IntegerMatrix above = cc.boundary_from(cc.top_degree() + 1);
    CHECK(above.rows == cc.rank_at(cc.top_degree()));
    CHECK(above.cols == 0);
}

TEST_CASE("homology of the triangle boundary") {
    LieType a2(Family::A, 2);
    AlcoveComplex circle = delta_p_k(a2, Int(2), 0);

    ChainComplex reduced = simplicial_chain_complex(circle, true);
    CHECK(reduced.min_degree() == -1);
    HomologySummary rh = integral_homology(reduced);
    CHECK(rh.free_rank == std::vector<int>{0, 0, 1});
    for (const auto& t : rh.torsion) CHECK(t.empty());

    ChainComplex plain = simplicial_chain_complex(circle, false);
    CHECK(plain.min_degree() == 0);
    HomologySummary ph = integral_homology(plain);
    CHECK(ph.free_rank == std::vector<int>{1, 1});
}

TEST_CASE("weighted complex of SU(3), frozen groups") {
    HomologySummary h = weighted_homology_even(LieType(Family::A, 2));
    REQUIRE(h.degree_count() == 3);
    CHECK(homology_group_name(h.free_rank[0], h.torsion[0]) == "Z+Z/3+Z/3");
    CHECK(homology_group_name(h.free_rank[1], h.torsion[1]) == "Z/2");
    CHECK(homology_group_name(h.free_rank[2], h.torsion[2]) == "0");
}

TEST_CASE("structured and direct weighted homology agree") {
    for (LieType type : {LieType(Family::A, 1), LieType(Family::A, 3), LieType(Family::B, 3),
                         LieType(Family::C, 3), LieType(Family::D, 4), LieType(Family::G2, 2)}) {
        HomologySummary fast = weighted_homology_even(type);
        HomologySummary slow = integral_homology(weighted_hocolim_complex(type, Parity::even));
        CHECK(fast.min_degree == slow.min_degree);
        CHECK(fast.free_rank == slow.free_rank);
        CHECK(fast.torsion == slow.torsion);
    }
}

TEST_CASE("odd-parity model is a single free class on top") {
    ChainComplex cc = weighted_hocolim_complex(LieType(Family::A, 2), Parity::odd);
    CHECK(cc.rank_at(2) == 1);
    CHECK(cc.rank_at(0) == 0);
    CHECK(cc.rank_at(1) == 0);
    HomologySummary h = integral_homology(cc);
    CHECK(h.free_rank == std::vector<int>{0, 0, 1});
}

TEST_CASE("mod-p dimensions match universal coefficients") {
    ChainComplex cc = weighted_hocolim_complex(LieType(Family::A, 2), Parity::even);
    CHECK(mod_p_betti(cc, Int(3)) == std::vector<int>{3, 2, 0});
    CHECK(mod_p_betti(cc, Int(2)) == std::vector<int>{1, 1, 1});
    CHECK(mod_p_betti(cc, Int(5)) == std::vector<int>{1, 0, 0});
}

TEST_CASE("group names") {
    CHECK(homology_group_name(0, {}) == "0");
    CHECK(homology_group_name(1, {}) == "Z");
    CHECK(homology_group_name(2, {Int(2), Int(6)}) == "Z^2+Z/2+Z/6");
    CHECK(homology_group_name(0, {Int(7)}) == "Z/7");
}

TEST_CASE("summary triviality") {
    HomologySummary h;
    h.free_rank = {0, 0};
    h.torsion = {{}, {}};
    CHECK(h.trivial());
    h.torsion[1].push_back(3);
    CHECK(!h.trivial());
}
