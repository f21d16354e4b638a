#include "commhom/formats.hpp"

#include <sstream>

#include "commhom/errors.hpp"

namespace commhom {

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "dot") return OutputFormat::dot;
    if (name == "text") return OutputFormat::text;
    throw UsageError("unknown format '" + name + "' (expected json, csv, dot, or text)");
}

Json int_json(const Int& value) {
    if (value >= -9007199254740992ll && value <= 9007199254740992ll) return Json(value.convert_to<long long>());
    return Json(value.str());
}

namespace {

std::string join_face_names(const AlcoveComplex& c, const std::vector<Face>& faces) {
    std::string out;
    for (const Face& face : faces) {
        if (!out.empty()) out += ' ';
        out += c.face_name(face.white);
    }
    return out;
}

std::vector<std::vector<Face>> faces_by_dimension(const AlcoveComplex& c) {
    std::vector<std::vector<Face>> out(static_cast<std::size_t>(c.dim() + 1));
    for (const Face& face : c.faces()) out[static_cast<std::size_t>(face.dim())].push_back(face);
    return out;
}

}  // namespace

Json facts_json(const LieType& type) {
    GroupFacts facts = catalog_facts(type);
    DynkinGraph graph = extended_diagram(type);
    Json out;
    out["type"] = type.name();
    out["group"] = compact_group_name(type);
    out["rank"] = facts.rank;
    out["dim"] = facts.dim;
    out["weyl_order"] = int_json(facts.weyl_order);
    out["degrees"] = facts.degrees;
    Json edges = Json::array();
    for (const DynkinEdge& e : graph.edges) edges.push_back({{"a", e.a}, {"b", e.b}, {"multiplicity", e.multiplicity}});
    out["extended_diagram"] = {{"vertices", graph.vertex_count}, {"highest_root_vertex", graph.highest_root_vertex}, {"edges", edges}};
    return out;
}

std::string facts_text(const LieType& type) {
    GroupFacts facts = catalog_facts(type);
    DynkinGraph graph = extended_diagram(type);
    std::ostringstream out;
    out << "type " << type.name() << " (" << compact_group_name(type) << ")\n";
    out << "rank " << facts.rank << "\n";
    out << "dim " << facts.dim << "\n";
    out << "weyl order " << facts.weyl_order << "\n";
    out << "degrees";
    for (int d : facts.degrees) out << ' ' << d;
    out << "\n";
    out << "extended diagram on " << graph.vertex_count << " vertices, highest-root vertex " << graph.highest_root_vertex << "\n";
    for (const DynkinEdge& e : graph.edges) {
        out << "  " << e.a << " - " << e.b;
        if (e.multiplicity > 1) out << " (x" << e.multiplicity << ")";
        out << "\n";
    }
    return out.str();
}

std::string diagram_dot(const LieType& type) {
    DynkinGraph graph = extended_diagram(type);
    std::ostringstream out;
    out << "graph \"" << type.name() << " extended\" {\n";
    out << "  node [shape=circle];\n";
    for (int v = 1; v <= graph.vertex_count; ++v) {
        out << "  " << v;
        if (v == graph.highest_root_vertex) out << " [peripheries=2]";
        out << ";\n";
    }
    for (const DynkinEdge& e : graph.edges) {
        out << "  " << e.a << " -- " << e.b;
        if (e.multiplicity > 1) out << " [label=\"" << e.multiplicity << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string complex_label(const LieType& type, const SubcomplexSpec& spec) {
    std::ostringstream out;
    out << type.name() << " p=" << spec.p << " k=" << spec.k;
    return out.str();
}

Json complex_json(const LieType& type, const SubcomplexSpec& spec, const AlcoveComplex& c) {
    Json out;
    out["type"] = type.name();
    out["group"] = compact_group_name(type);
    out["prime"] = int_json(spec.p);
    out["k"] = spec.k;
    out["r"] = spec.r;
    Json fvec = Json::array();
    for (const Int& count : c.f_vector()) fvec.push_back(int_json(count));
    out["f_vector"] = fvec;
    out["euler"] = int_json(euler_characteristic(c));
    Json facet_list = Json::array();
    for (const Face& face : facets(c)) facet_list.push_back(c.face_name(face.white));
    out["facets"] = facet_list;
    Json faces = Json::array();
    for (const Face& face : c.faces()) faces.push_back(c.face_name(face.white));
    out["faces"] = faces;
    return out;
}

std::string complex_text(const LieType& type, const SubcomplexSpec& spec, const AlcoveComplex& c) {
    std::ostringstream out;
    out << "complex " << complex_label(type, spec) << " r=" << spec.r << "\n";
    out << "vertices " << c.vertex_count() << "\n";
    out << "f-vector";
    for (const Int& count : c.f_vector()) out << ' ' << count;
    out << "\n";
    out << "euler " << euler_characteristic(c) << "\n";
    out << "facets " << join_face_names(c, facets(c)) << "\n";
    auto grouped = faces_by_dimension(c);
    for (std::size_t d = 0; d < grouped.size(); ++d)
        out << "dim " << d << ": " << join_face_names(c, grouped[d]) << "\n";
    return out.str();
}

std::string complex_csv(const AlcoveComplex& c) {
    std::ostringstream out;
    out << "dimension,count\n";
    std::vector<Int> fvec = c.f_vector();
    for (std::size_t d = 0; d < fvec.size(); ++d) out << d << ',' << fvec[d] << "\n";
    return out.str();
}

std::string complex_dot(const LieType& type, const SubcomplexSpec& spec, const AlcoveComplex& c) {
    std::ostringstream out;
    out << "graph \"" << complex_label(type, spec) << "\" {\n";
    out << "  node [shape=circle];\n";
    auto grouped = faces_by_dimension(c);
    if (!grouped.empty())
        for (const Face& vertex : grouped[0]) out << "  " << c.face_name(vertex.white) << ";\n";
    if (grouped.size() > 1)
        for (const Face& edge : grouped[1]) {
            std::vector<int> ends = mask_vertices(edge.white);
            out << "  " << ends[0] << " -- " << ends[1] << ";\n";
        }
    out << "}\n";
    return out.str();
}

std::string chain_complex_dump(const ChainComplex& cc) {
    std::ostringstream out;
    out << "chain complex " << cc.name() << "\n";
    out << "degrees " << cc.min_degree() << ".." << cc.top_degree() << "\n";
    for (int d = cc.min_degree(); d <= cc.top_degree(); ++d) {
        out << "basis " << d << ":";
        for (const std::string& label : cc.basis_at(d)) out << ' ' << label;
        out << "\n";
    }
    for (int d = cc.min_degree() + 1; d <= cc.top_degree(); ++d) {
        const IntegerMatrix& m = cc.boundary_from(d);
        out << "boundary " << d << " -> " << d - 1 << " (" << m.rows << "x" << m.cols << ")\n";
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j)
                if (m.at(i, j) != 0) out << i << ' ' << j << ' ' << m.at(i, j) << "\n";
    }
    return out.str();
}

Json homology_json(const std::string& label, const ChainComplex& cc, const HomologySummary& h) {
    Json out;
    out["name"] = label;
    Json groups = Json::array();
    for (int i = 0; i < h.degree_count(); ++i) {
        Json entry;
        entry["degree"] = h.min_degree + i;
        entry["free_rank"] = h.free_rank[static_cast<std::size_t>(i)];
        Json factors = Json::array();
        for (const Int& f : h.torsion[static_cast<std::size_t>(i)]) factors.push_back(int_json(f));
        entry["invariant_factors"] = factors;
        entry["group"] = homology_group_name(h.free_rank[static_cast<std::size_t>(i)], h.torsion[static_cast<std::size_t>(i)]);
        groups.push_back(entry);
    }
    out["homology"] = groups;
    Json dims = Json::array();
    for (int d = cc.min_degree(); d <= cc.top_degree(); ++d) dims.push_back(cc.rank_at(d));
    out["chain_ranks"] = dims;
    return out;
}

std::string homology_text(const std::string& label, const ChainComplex& cc, const HomologySummary& h) {
    std::ostringstream out;
    out << "homology " << label << "\n";
    for (int i = 0; i < h.degree_count(); ++i)
        out << "H_" << h.min_degree + i << " = "
            << homology_group_name(h.free_rank[static_cast<std::size_t>(i)], h.torsion[static_cast<std::size_t>(i)]) << "\n";
    out << chain_complex_dump(cc);
    return out.str();
}

std::string homology_csv(const HomologySummary& h) {
    std::ostringstream out;
    out << "degree,free_rank,invariant_factors\n";
    for (int i = 0; i < h.degree_count(); ++i) {
        out << h.min_degree + i << ',' << h.free_rank[static_cast<std::size_t>(i)] << ',';
        const auto& factors = h.torsion[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if (j) out << ' ';
            out << factors[j];
        }
        out << "\n";
    }
    return out.str();
}

Json report_json(const DetectionReport& report) {
    GroupFacts facts = catalog_facts(report.type);
    Json out;
    out["group"] = compact_group_name(report.type);
    out["rank"] = facts.rank;
    out["dim"] = facts.dim;
    out["weyl_order"] = int_json(facts.weyl_order);
    out["prime"] = int_json(report.p);
    out["r"] = report.r;
    Json complexes = Json::array();
    for (const KRecord& record : report.complexes) {
        Json entry;
        entry["k"] = record.k;
        Json fvec = Json::array();
        for (const Int& count : record.f_vector) fvec.push_back(int_json(count));
        entry["f_vector"] = fvec;
        entry["euler"] = int_json(record.euler);
        entry["reduced_betti_mod_p"] = record.reduced_betti_mod_p;
        complexes.push_back(entry);
    }
    out["complexes"] = complexes;
    out["delta_verdict"] = report.delta_verdict;
    Json levels = Json::array();
    for (const LevelFactors& level : report.hocolim.levels) {
        Json entry;
        entry["level"] = level.level;
        Json factors = Json::array();
        for (const Int& f : level.factors) factors.push_back(int_json(f));
        entry["factors"] = factors;
        entry["p_part"] = level.p_part;
        levels.push_back(entry);
    }
    out["hocolim_invariant_factors"] = levels;
    out["equivalence_ok"] = report.equivalence_ok;
    out["paper_status"] = report.paper_status;
    return out;
}

std::string report_csv_header() {
    return "group,rank,prime,r,delta_verdict,witness_k,witness_degree,hocolim_torsion,equivalence_ok,paper_status\n";
}

std::string report_csv_row(const DetectionReport& report) {
    std::ostringstream out;
    out << compact_group_name(report.type) << ',' << report.type.rank << ',' << report.p << ',' << report.r << ','
        << (report.delta_verdict ? "true" : "false") << ',';
    if (report.delta_verdict)
        out << report.witness_k << ',' << report.witness_degree;
    else
        out << ',';
    out << ',' << (report.hocolim.detected ? "true" : "false") << ','
        << (report.equivalence_ok ? "true" : "false") << ',' << report.paper_status << "\n";
    return out.str();
}

std::string report_text(const DetectionReport& report) {
    std::ostringstream out;
    out << "detect " << report.type.name() << " (" << compact_group_name(report.type) << ") p=" << report.p << "\n";
    out << "r " << report.r << "\n";
    if (report.delta_verdict)
        out << "delta: detected at k=" << report.witness_k << " degree " << report.witness_degree << "\n";
    else
        out << "delta: not detected\n";
    for (const KRecord& record : report.complexes) {
        out << "  k=" << record.k << " f-vector";
        for (const Int& count : record.f_vector) out << ' ' << count;
        out << " euler " << record.euler << " reduced betti mod " << report.p << ":";
        for (int b : record.reduced_betti_mod_p) out << ' ' << b;
        out << "\n";
    }
    out << "hocolim: " << (report.hocolim.detected ? "p-torsion present" : "no p-torsion") << "\n";
    for (const LevelFactors& level : report.hocolim.levels) {
        out << "  level " << level.level << " factors";
        for (const Int& f : level.factors) out << ' ' << f;
        if (level.p_part) out << " (p-part)";
        out << "\n";
    }
    out << "equivalence: " << (report.equivalence_ok ? "ok" : "VIOLATED") << "\n";
    out << "status: " << report.paper_status << "\n";
    return out.str();
}

Json series_json(const LieType& type, int m, const RationalSeries& series) {
    Json out;
    out["type"] = type.name();
    out["group"] = compact_group_name(type);
    out["m"] = m;
    out["truncation"] = series.truncation;
    Json coefficients = Json::array();
    for (int d = 0; d <= series.truncation; ++d) coefficients.push_back(int_json(series.integer_at(d)));
    out["coefficients"] = coefficients;
    return out;
}

std::string series_csv(const RationalSeries& series) {
    std::ostringstream out;
    out << "degree,coefficient\n";
    for (int d = 0; d <= series.truncation; ++d) out << d << ',' << series.integer_at(d) << "\n";
    return out.str();
}

std::string series_text(const LieType& type, int m, const RationalSeries& series) {
    std::ostringstream out;
    out << "series " << type.name() << " m=" << m << " truncated at t^" << series.truncation << "\n";
    bool first = true;
    for (int d = 0; d <= series.truncation; ++d) {
        Int c = series.integer_at(d);
        if (c == 0) continue;
        if (!first) out << " + ";
        if (d == 0)
            out << c;
        else {
            if (c != 1) out << c << "*";
            out << "t^" << d;
        }
        first = false;
    }
    if (first) out << "0";
    out << "\n";
    return out.str();
}

Json certificate_json(const AlcoveComplex& c, const MorseCertificate& cert) {
    Json out;
    out["is_partial_matching"] = cert.is_partial_matching;
    out["is_acyclic"] = cert.is_acyclic;
    Json critical = Json::array();
    for (FaceMask face : cert.critical) critical.push_back(c.face_name(face));
    out["critical"] = critical;
    out["certifies_collapse"] = cert.certifies_collapse(c);
    return out;
}

}  // namespace commhom
