#include <doctest.h>

#include <map>
#include <sstream>
#include <vector>

#include "commhom/errors.hpp"
#include "commhom/morse.hpp"

using namespace commhom;

namespace {

/* Independent acyclicity oracle: Kahn's algorithm drains the modified Hasse
 * diagram exactly when it has no directed cycle. */
bool kahn_acyclic(const AlcoveComplex& c, const Matching& m) {
    std::map<FaceMask, std::vector<FaceMask>> adjacent;
    std::map<FaceMask, int> indegree;
    for (const Face& f : c.faces()) indegree[f.white] = 0;
    for (const auto& [from, to] : modified_hasse_edges(c, m)) {
        adjacent[from].push_back(to);
        ++indegree[to];
    }
    std::vector<FaceMask> ready;
    for (const auto& [node, degree] : indegree)
        if (degree == 0) ready.push_back(node);
    std::size_t drained = 0;
    while (!ready.empty()) {
        FaceMask node = ready.back();
        ready.pop_back();
        ++drained;
        for (FaceMask next : adjacent[node])
            if (--indegree[next] == 0) ready.push_back(next);
    }
    return drained == indegree.size();
}

AlcoveComplex triangle_circle() { return delta_p_k(LieType(Family::A, 2), Int(2), 0); }

}  // namespace

TEST_CASE("acyclic matching on the triangle boundary") {
    AlcoveComplex c = triangle_circle();
    Matching m{{{0b011u, 0b010u}, {0b101u, 0b100u}}};
    MorseCertificate cert = validate_matching(c, m);
    CHECK(cert.is_partial_matching);
    CHECK(cert.is_acyclic);
    CHECK(cert.critical == std::vector<FaceMask>{0b001u, 0b110u});
    CHECK(!cert.certifies_collapse(c));
    CHECK(kahn_acyclic(c, m));
}

TEST_CASE("matching whose reversed edges close a cycle") {
    AlcoveComplex c = triangle_circle();
    Matching m{{{0b011u, 0b001u}, {0b110u, 0b010u}, {0b101u, 0b100u}}};
    MorseCertificate cert = validate_matching(c, m);
    CHECK(cert.is_partial_matching);
    CHECK(!cert.is_acyclic);
    CHECK(cert.critical.empty());
    CHECK(!cert.certifies_collapse(c));
    CHECK(!kahn_acyclic(c, m));
}

TEST_CASE("pairing discipline violations") {
    AlcoveComplex c = triangle_circle();

    MorseCertificate cert = validate_matching(c, Matching{{{0b011u, 0b100u}}});
    CHECK(!cert.is_partial_matching);
    CHECK(cert.critical.empty());

    cert = validate_matching(c, Matching{{{0b011u, 0b011u}}});
    CHECK(!cert.is_partial_matching);

    cert = validate_matching(c, Matching{{{0b011u, 0b010u}, {0b110u, 0b010u}}});
    CHECK(!cert.is_partial_matching);

    CHECK_THROWS_AS(validate_matching(c, Matching{{{0b111u, 0b011u}}}), UnknownFace);
}

TEST_CASE("empty matching leaves every face critical") {
    AlcoveComplex c = triangle_circle();
    MorseCertificate cert = validate_matching(c, Matching{});
    CHECK(cert.is_partial_matching);
    CHECK(cert.is_acyclic);
    CHECK(cert.critical.size() == c.faces().size());
    CHECK(!cert.certifies_collapse(c));

    AlcoveComplex point(LieType(Family::A, 2), 3, {Face{0b001u, 1}});
    cert = validate_matching(point, Matching{});
    CHECK(cert.certifies_collapse(point));
}

TEST_CASE("matched pairs point up in the modified Hasse diagram") {
    AlcoveComplex c = triangle_circle();
    Matching m{{{0b011u, 0b010u}}};
    auto edges = modified_hasse_edges(c, m);
    CHECK(edges.size() == 6);

    auto has = [&edges](FaceMask from, FaceMask to) {
        for (const auto& [a, b] : edges)
            if (a == from && b == to) return true;
        return false;
    };
    CHECK(has(0b010u, 0b011u));
    CHECK(!has(0b011u, 0b010u));
    CHECK(has(0b011u, 0b001u));
    CHECK(has(0b110u, 0b010u));
}

TEST_CASE("cone apex detection") {
    CHECK(cone_apex(full_alcove(LieType(Family::A, 2))) == 1);
    CHECK(cone_apex(full_alcove(LieType(Family::G2, 2))) == 1);
    CHECK(!cone_apex(triangle_circle()).has_value());
    CHECK(!cone_apex(AlcoveComplex(LieType(Family::A, 2), 3, {})).has_value());
}

TEST_CASE("collapse search on full alcoves") {
    for (LieType type : {LieType(Family::A, 2), LieType(Family::B, 3), LieType(Family::A, 4)}) {
        AlcoveComplex c = full_alcove(type);
        std::optional<Matching> found = collapsibility_search(c);
        REQUIRE(found.has_value());
        MorseCertificate cert = validate_matching(c, *found);
        CHECK(cert.certifies_collapse(c));
        CHECK(cert.critical.size() == 1);
        CHECK(kahn_acyclic(c, *found));
    }
}

TEST_CASE("collapse search gives up on the circle") {
    CHECK(!collapsibility_search(triangle_circle()).has_value());
    CHECK(!collapsibility_search(AlcoveComplex(LieType(Family::A, 2), 3, {})).has_value());
}

TEST_CASE("matching file round trip") {
    AlcoveComplex c = triangle_circle();
    Matching m{{{0b011u, 0b010u}, {0b101u, 0b100u}}};

    std::ostringstream out;
    write_matching(out, c, m);
    CHECK(out.str() == "12 2\n13 3\n");

    std::istringstream in("# facet pairs\n\n12 2\n13 3\n");
    Matching back = read_matching(in, c);
    CHECK(back.pairs == m.pairs);

    std::istringstream short_line("12\n");
    CHECK_THROWS_AS(read_matching(short_line, c), UsageError);
    std::istringstream bad_name("9 1\n");
    CHECK_THROWS_AS(read_matching(bad_name, c), UsageError);
}
