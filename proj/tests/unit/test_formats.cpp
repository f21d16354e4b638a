#include <doctest.h>

#include <string>
#include <vector>

#include "commhom/errors.hpp"
#include "commhom/formats.hpp"

using namespace commhom;

namespace {

ChainComplex toy_interval() {
    IntegerMatrix boundary(2, 1);
    boundary.at(0, 0) = -1;
    boundary.at(1, 0) = 1;
    return ChainComplex("toy", 0, {{"a", "b"}, {"e"}}, {boundary});
}

}  // namespace

TEST_CASE("format names") {
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(parse_format("dot") == OutputFormat::dot);
    CHECK(parse_format("text") == OutputFormat::text);
    CHECK_THROWS_AS(parse_format("yaml"), UsageError);
}

TEST_CASE("integers render as numbers only while exact in a double") {
    CHECK(int_json(Int(5)).is_number_integer());
    CHECK(int_json(Int(5)) == 5);
    CHECK(int_json(Int(-9007199254740992ll)).is_number_integer());
    CHECK(int_json(Int("9007199254740993")).is_string());
    CHECK(int_json(Int("123456789012345678901")) == "123456789012345678901");
}

TEST_CASE("group fact serializations") {
    Json a1 = facts_json(LieType(Family::A, 1));
    CHECK(a1.dump() ==
          "{\"type\":\"A1\",\"group\":\"SU(2)\",\"rank\":1,\"dim\":3,\"weyl_order\":2,"
          "\"degrees\":[2],\"extended_diagram\":{\"vertices\":2,\"highest_root_vertex\":2,"
          "\"edges\":[{\"a\":1,\"b\":2,\"multiplicity\":4}]}}");

    Json a3 = facts_json(LieType(Family::A, 3));
    CHECK(a3["group"] == "SU(4)");
    CHECK(a3["dim"] == 15);
    CHECK(a3["weyl_order"] == 24);
    CHECK(a3["degrees"] == Json::array({2, 3, 4}));
    CHECK(a3["extended_diagram"]["edges"].size() == 4);

    CHECK(facts_text(LieType(Family::A, 1)) ==
          "type A1 (SU(2))\n"
          "rank 1\n"
          "dim 3\n"
          "weyl order 2\n"
          "degrees 2\n"
          "extended diagram on 2 vertices, highest-root vertex 2\n"
          "  1 - 2 (x4)\n");
}

TEST_CASE("extended diagram dot output") {
    CHECK(diagram_dot(LieType(Family::G2, 2)) ==
          "graph \"G2 extended\" {\n"
          "  node [shape=circle];\n"
          "  1;\n"
          "  2;\n"
          "  3 [peripheries=2];\n"
          "  1 -- 2 [label=\"3\"];\n"
          "  2 -- 3;\n"
          "}\n");
}

TEST_CASE("subcomplex serializations") {
    LieType a2(Family::A, 2);
    SubcomplexSpec spec = make_subcomplex_spec(a2, 2, 0);
    AlcoveComplex c = delta_p_k(a2, spec);

    CHECK(complex_label(a2, spec) == "A2 p=2 k=0");
    CHECK(complex_text(a2, spec, c) ==
          "complex A2 p=2 k=0 r=1\n"
          "vertices 3\n"
          "f-vector 3 3\n"
          "euler 0\n"
          "facets 12 13 23\n"
          "dim 0: 1 2 3\n"
          "dim 1: 12 13 23\n");
    CHECK(complex_csv(c) == "dimension,count\n0,3\n1,3\n");
    CHECK(complex_dot(a2, spec, c) ==
          "graph \"A2 p=2 k=0\" {\n"
          "  node [shape=circle];\n"
          "  1;\n"
          "  2;\n"
          "  3;\n"
          "  1 -- 2;\n"
          "  1 -- 3;\n"
          "  2 -- 3;\n"
          "}\n");

    Json j = complex_json(a2, spec, c);
    CHECK(j["type"] == "A2");
    CHECK(j["r"] == 1);
    CHECK(j["f_vector"] == Json::array({3, 3}));
    CHECK(j["euler"] == 0);
    CHECK(j["facets"] == Json::array({"12", "13", "23"}));
    CHECK(j["faces"].size() == 6);
}

TEST_CASE("chain complex dump lists sparse triplets") {
    CHECK(chain_complex_dump(toy_interval()) ==
          "chain complex toy\n"
          "degrees 0..1\n"
          "basis 0: a b\n"
          "basis 1: e\n"
          "boundary 1 -> 0 (2x1)\n"
          "0 0 -1\n"
          "1 0 1\n");
}

TEST_CASE("homology serializations") {
    ChainComplex cc = toy_interval();
    HomologySummary h = integral_homology(cc);

    Json j = homology_json("toy", cc, h);
    CHECK(j["name"] == "toy");
    CHECK(j["homology"].size() == 2);
    CHECK(j["homology"][0]["degree"] == 0);
    CHECK(j["homology"][0]["free_rank"] == 1);
    CHECK(j["homology"][0]["invariant_factors"] == Json::array());
    CHECK(j["homology"][0]["group"] == "Z");
    CHECK(j["homology"][1]["group"] == "0");
    CHECK(j["chain_ranks"] == Json::array({2, 1}));

    std::string text = homology_text("toy", cc, h);
    CHECK(text.rfind("homology toy\nH_0 = Z\nH_1 = 0\nchain complex toy\n", 0) == 0);

    HomologySummary crafted{0, {1, 2}, {{2, 4}, {}}};
    CHECK(homology_csv(crafted) == "degree,free_rank,invariant_factors\n0,1,2 4\n1,2,\n");
}

TEST_CASE("detection report rows") {
    CHECK(report_csv_header() ==
          "group,rank,prime,r,delta_verdict,witness_k,witness_degree,hocolim_torsion,equivalence_ok,paper_status\n");

    DetectionReport positive = detection_report(LieType(Family::G2, 2), 3);
    CHECK(report_csv_row(positive) == "G2,2,3,1,true,0,0,true,true,detected (proved)\n");

    std::string text = report_text(positive);
    CHECK(text.rfind("detect G2 (G2) p=3\nr 1\ndelta: detected at k=0 degree 0\n", 0) == 0);
    CHECK(text.find("  k=0 f-vector 2 euler 2 reduced betti mod 3: 1\n") != std::string::npos);
    CHECK(text.find("  k=1 f-vector 3 3 1 euler 1 reduced betti mod 3: 0 0 0\n") != std::string::npos);
    CHECK(text.find("hocolim: p-torsion present\n") != std::string::npos);
    CHECK(text.find("equivalence: ok\nstatus: detected (proved)\n") != std::string::npos);

    Json j = report_json(positive);
    CHECK(j["group"] == "G2");
    CHECK(j["prime"] == 3);
    CHECK(j["delta_verdict"] == true);
    CHECK(j["equivalence_ok"] == true);
    CHECK(j["complexes"].size() == 2);
    CHECK(j["complexes"][0]["f_vector"] == Json::array({2}));

    DetectionReport negative = detection_report(LieType(Family::D, 5), 3);
    CHECK(report_csv_row(negative) == "Spin(10),5,3,1,false,,,false,true,not detected (open)\n");
}

TEST_CASE("series serializations") {
    LieType a1(Family::A, 1);
    RationalSeries ext = exterior_series(a1, 3);

    CHECK(series_json(a1, 1, ext).dump() ==
          "{\"type\":\"A1\",\"group\":\"SU(2)\",\"m\":1,\"truncation\":3,\"coefficients\":[1,0,0,1]}");
    CHECK(series_csv(ext) == "degree,coefficient\n0,1\n1,0\n2,0\n3,1\n");
    CHECK(series_text(a1, 1, ext) == "series A1 m=1 truncated at t^3\n1 + t^3\n");

    RationalSeries two = poincare_series(a1, 2, 3);
    CHECK(series_text(a1, 2, two) == "series A1 m=2 truncated at t^3\n1 + t^2 + 2*t^3\n");

    RationalSeries zero{2, {Rat(0), Rat(0), Rat(0)}};
    CHECK(series_text(a1, 1, zero) == "series A1 m=1 truncated at t^2\n0\n");
}

TEST_CASE("collapse certificates as json") {
    AlcoveComplex c = delta_p_k(LieType(Family::A, 2), Int(2), 0);
    Matching m{{{0b011u, 0b010u}, {0b101u, 0b100u}}};
    Json j = certificate_json(c, validate_matching(c, m));
    CHECK(j.dump() ==
          "{\"is_partial_matching\":true,\"is_acyclic\":true,\"critical\":[\"1\",\"23\"],"
          "\"certifies_collapse\":false}");
}
