#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "commhom/lie_catalog.hpp"

using namespace commhom;

TEST_CASE("family names parse and print") {
    CHECK(family_name(Family::A) == "A");
    CHECK(family_name(Family::G2) == "G2");
    CHECK(parse_family("E7") == Family::E7);
    CHECK(parse_family("B") == Family::B);
    CHECK(!parse_family("H").has_value());
    CHECK(!parse_family("").has_value());
    CHECK(family_is_exceptional(Family::F4));
    CHECK(!family_is_exceptional(Family::D));
    CHECK(exceptional_rank(Family::E6) == 6);
}

TEST_CASE("rank constraints are enforced") {
    CHECK_NOTHROW(LieType(Family::A, 1));
    CHECK_NOTHROW(LieType(Family::B, 2));
    CHECK_NOTHROW(LieType(Family::C, 3));
    CHECK_NOTHROW(LieType(Family::D, 4));
    CHECK_THROWS_AS(LieType(Family::A, 0), UsageError);
    CHECK_THROWS_AS(LieType(Family::B, 1), UsageError);
    CHECK_THROWS_AS(LieType(Family::C, 2), UsageError);
    CHECK_THROWS_AS(LieType(Family::D, 3), UsageError);
    CHECK_THROWS_AS(LieType(Family::G2, 3), UsageError);
    CHECK_THROWS_AS(LieType(Family::E8, 7), UsageError);
}

TEST_CASE("catalog facts for the classical sample types") {
    GroupFacts a3 = catalog_facts(LieType(Family::A, 3));
    CHECK(a3.rank == 3);
    CHECK(a3.dim == 15);
    CHECK(a3.weyl_order == 24);
    CHECK(a3.degrees == std::vector<int>{2, 3, 4});

    GroupFacts b2 = catalog_facts(LieType(Family::B, 2));
    CHECK(b2.dim == 10);
    CHECK(b2.weyl_order == 8);
    CHECK(b2.degrees == std::vector<int>{2, 4});

    GroupFacts c3 = catalog_facts(LieType(Family::C, 3));
    CHECK(c3.dim == 21);
    CHECK(c3.weyl_order == 48);
    CHECK(c3.degrees == std::vector<int>{2, 4, 6});

    GroupFacts d4 = catalog_facts(LieType(Family::D, 4));
    CHECK(d4.dim == 28);
    CHECK(d4.weyl_order == 192);
    CHECK(d4.degrees == std::vector<int>{2, 4, 4, 6});
}

TEST_CASE("catalog facts for the exceptional types") {
    GroupFacts g2 = catalog_facts(LieType(Family::G2, 2));
    CHECK(g2.dim == 14);
    CHECK(g2.weyl_order == 12);
    CHECK(g2.degrees == std::vector<int>{2, 6});

    GroupFacts f4 = catalog_facts(LieType(Family::F4, 4));
    CHECK(f4.dim == 52);
    CHECK(f4.weyl_order == 1152);
    CHECK(f4.degrees == std::vector<int>{2, 6, 8, 12});

    GroupFacts e6 = catalog_facts(LieType(Family::E6, 6));
    CHECK(e6.dim == 78);
    CHECK(e6.weyl_order == 51840);
    CHECK(e6.degrees == std::vector<int>{2, 5, 6, 8, 9, 12});

    GroupFacts e7 = catalog_facts(LieType(Family::E7, 7));
    CHECK(e7.dim == 133);
    CHECK(e7.weyl_order == 2903040);
    CHECK(e7.degrees == std::vector<int>{2, 6, 8, 10, 12, 14, 18});

    GroupFacts e8 = catalog_facts(LieType(Family::E8, 8));
    CHECK(e8.dim == 248);
    CHECK(e8.weyl_order == 696729600);
    CHECK(e8.degrees == std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});
}

TEST_CASE("compact group names") {
    CHECK(compact_group_name(LieType(Family::A, 3)) == "SU(4)");
    CHECK(compact_group_name(LieType(Family::B, 5)) == "Spin(11)");
    CHECK(compact_group_name(LieType(Family::C, 3)) == "Sp(3)");
    CHECK(compact_group_name(LieType(Family::D, 5)) == "Spin(10)");
    CHECK(compact_group_name(LieType(Family::E6, 6)) == "E6");
}

TEST_CASE("extended diagram shapes") {
    DynkinGraph a1 = extended_diagram(LieType(Family::A, 1));
    CHECK(a1.vertex_count == 2);
    REQUIRE(a1.edges.size() == 1);
    CHECK(a1.edges[0].multiplicity == 4);

    DynkinGraph a4 = extended_diagram(LieType(Family::A, 4));
    CHECK(a4.vertex_count == 5);
    CHECK(a4.edges.size() == 5);
    for (int v = 1; v <= 5; ++v) CHECK(a4.neighbors(v).size() == 2);

    DynkinGraph d5 = extended_diagram(LieType(Family::D, 5));
    CHECK(d5.vertex_count == 6);
    CHECK(d5.edges.size() == 5);
    int leaves = 0, branches = 0;
    for (int v = 1; v <= 6; ++v) {
        std::size_t deg = d5.neighbors(v).size();
        if (deg == 1) ++leaves;
        if (deg == 3) ++branches;
    }
    CHECK(leaves == 4);
    CHECK(branches == 2);

    DynkinGraph g2 = extended_diagram(LieType(Family::G2, 2));
    CHECK(g2.vertex_count == 3);
    int triple = 0;
    for (const DynkinEdge& e : g2.edges) triple += e.multiplicity == 3;
    CHECK(triple == 1);

    DynkinGraph f4 = extended_diagram(LieType(Family::F4, 4));
    int doubled = 0;
    for (const DynkinEdge& e : f4.edges) doubled += e.multiplicity == 2;
    CHECK(doubled == 1);

    DynkinGraph e8 = extended_diagram(LieType(Family::E8, 8));
    CHECK(e8.vertex_count == 9);
    for (const DynkinEdge& e : e8.edges) CHECK(e.multiplicity == 1);
    CHECK(e8.highest_root_vertex >= 1);
    CHECK(e8.highest_root_vertex <= 9);
    CHECK(e8.edge_multiplicity(1, 1) == 0);
}

TEST_CASE("black components split along the diagram") {
    DynkinGraph a3 = extended_diagram(LieType(Family::A, 3));
    ColoredDiagram split(a3, 0b0101u);  // vertices 1 and 3 of the square
    std::vector<InducedSubgraph> parts = black_components(split);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].vertices == std::vector<int>{1});
    CHECK(parts[1].vertices == std::vector<int>{3});
    CHECK(parts[0].edges.empty());

    ColoredDiagram arc(a3, 0b0111u);  // path 1-2-3
    parts = black_components(arc);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].vertices == std::vector<int>{1, 2, 3});
    CHECK(parts[0].edges.size() == 2);

    ColoredDiagram blank(a3, 0u);
    CHECK(black_components(blank).empty());
}

TEST_CASE("coloring constructor rejects bad masks") {
    DynkinGraph a2 = extended_diagram(LieType(Family::A, 2));
    CHECK_THROWS_AS(ColoredDiagram(a2, 0b0111u), UsageError);  // nothing white
    CHECK_THROWS_AS(ColoredDiagram(a2, 0b1001u), UsageError);  // vertex 4 absent
}

TEST_CASE("classify component recognizes small Coxeter types") {
    InducedSubgraph point{{4}, {}};
    ComponentType a1 = classify_component(point);
    CHECK(a1.name() == "A1");
    CHECK(a1.weyl_order() == 2);

    InducedSubgraph path{{1, 2, 3}, {{1, 2, 1}, {2, 3, 1}}};
    ComponentType a3 = classify_component(path);
    CHECK(a3.name() == "A3");
    CHECK(a3.weyl_order() == 24);

    InducedSubgraph doubled{{1, 2, 3}, {{1, 2, 2}, {2, 3, 1}}};
    ComponentType bc3 = classify_component(doubled);
    CHECK(bc3.family == ComponentFamily::BC);
    CHECK(bc3.weyl_order() == 48);

    InducedSubgraph star{{1, 2, 3, 4}, {{1, 2, 1}, {2, 3, 1}, {2, 4, 1}}};
    ComponentType d4 = classify_component(star);
    CHECK(d4.name() == "D4");
    CHECK(d4.weyl_order() == 192);

    InducedSubgraph cycle{{1, 2, 3}, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}}};
    CHECK_THROWS_AS(classify_component(cycle), UnclassifiableSubgraph);
}

TEST_CASE("subgroup orders multiply over components") {
    DynkinGraph a2 = extended_diagram(LieType(Family::A, 2));
    CHECK(subgroup_order(ColoredDiagram(a2, 0u)) == 1);
    CHECK(subgroup_order(ColoredDiagram(a2, 0b001u)) == 2);
    CHECK(subgroup_order(ColoredDiagram(a2, 0b011u)) == 6);

    DynkinGraph a3 = extended_diagram(LieType(Family::A, 3));
    CHECK(subgroup_order(ColoredDiagram(a3, 0b0101u)) == 4);  // A1 x A1
}

TEST_CASE("catalog reference document matches the generator") {
    std::ifstream in(std::string(COMMHOM_DOC_DIR) + "/catalog.md", std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream content;
    content << in.rdbuf();
    CHECK(content.str() == catalog_reference_text());
}
