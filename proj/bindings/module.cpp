#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "commhom/checks.hpp"
#include "commhom/combinatorics_ad.hpp"
#include "commhom/errors.hpp"
#include "commhom/formats.hpp"
#include "commhom/morse.hpp"
#include "commhom/torsion.hpp"
#include "commhom/weyl_series.hpp"

namespace py = pybind11;
using namespace commhom;

namespace {

LieType type_from_name(const std::string& name) {
    std::size_t split = 0;
    while (split < name.size() && !std::isdigit(static_cast<unsigned char>(name[split]))) ++split;
    std::optional<Family> family = parse_family(name.substr(0, split));
    if (!family) throw UsageError("unknown type '" + name + "'");
    if (family_is_exceptional(*family)) return LieType(*family, exceptional_rank(*family));
    if (split == name.size()) throw UsageError("type '" + name + "' needs a rank");
    return LieType(*family, std::stoi(name.substr(split)));
}

py::object int_to_py(const Int& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

py::list int_list(const std::vector<Int>& values) {
    py::list out;
    for (const Int& v : values) out.append(int_to_py(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(commhom_py, m) {
    m.doc() = "homology of commuting elements in compact Lie groups";

    py::register_exception<Error>(m, "CommhomError");

    py::class_<LieType>(m, "LieType")
        .def(py::init(&type_from_name), py::arg("name"))
        .def_property_readonly("rank", [](const LieType& t) { return t.rank; })
        .def_property_readonly("name", &LieType::name)
        .def("__repr__", [](const LieType& t) { return "LieType('" + t.name() + "')"; })
        .def("__eq__", [](const LieType& a, const LieType& b) { return a == b; });

    m.def("facts", [](const std::string& name) {
        LieType type = type_from_name(name);
        GroupFacts facts = catalog_facts(type);
        py::dict out;
        out["name"] = type.name();
        out["group"] = compact_group_name(type);
        out["rank"] = facts.rank;
        out["dim"] = facts.dim;
        out["weyl_order"] = int_to_py(facts.weyl_order);
        out["degrees"] = facts.degrees;
        return out;
    }, py::arg("type"), "catalog facts for one group type");

    m.def("subcomplex", [](const std::string& name, long long p, int k) {
        LieType type = type_from_name(name);
        AlcoveComplex c = delta_p_k(type, Int(p), k);
        py::dict out;
        std::vector<std::string> faces;
        for (const Face& f : c.faces()) faces.push_back(c.face_name(f.white));
        out["faces"] = faces;
        out["f_vector"] = int_list(c.f_vector());
        out["euler"] = int_to_py(euler_characteristic(c));
        return out;
    }, py::arg("type"), py::arg("p"), py::arg("k") = 0,
       "faces, f-vector and Euler characteristic of the level-k subcomplex");

    m.def("detect", [](const std::string& name, long long p) {
        DetectionReport report = detection_report(type_from_name(name), Int(p));
        py::dict out;
        out["detected"] = report.delta_verdict;
        out["witness_k"] = report.witness_k;
        out["witness_degree"] = report.witness_degree;
        out["equivalence_ok"] = report.equivalence_ok;
        out["status"] = report.paper_status;
        return out;
    }, py::arg("type"), py::arg("p"), "torsion detection verdict for one type and prime");

    m.def("homology", [](const std::string& name, long long p, int k) {
        LieType type = type_from_name(name);
        ChainComplex cc = simplicial_chain_complex(delta_p_k(type, Int(p), k), true);
        HomologySummary h = integral_homology(cc);
        py::list groups;
        for (int i = 0; i < h.degree_count(); ++i) {
            py::dict entry;
            entry["degree"] = h.min_degree + i;
            entry["group"] = homology_group_name(h.free_rank[static_cast<std::size_t>(i)],
                                                 h.torsion[static_cast<std::size_t>(i)]);
            groups.append(entry);
        }
        return groups;
    }, py::arg("type"), py::arg("p"), py::arg("k") = 0,
       "reduced integral homology of the level-k subcomplex");

    m.def("weighted_homology", [](const std::string& name, int m) {
        LieType type = type_from_name(name);
        if (m < 2) throw UsageError("m must be at least 2");
        HomologySummary h = m % 2 == 0
                                ? weighted_homology_even(type)
                                : integral_homology(weighted_hocolim_complex(type, Parity::odd));
        int offset = degree_offset(type, m);
        py::list groups;
        for (int i = 0; i < h.degree_count(); ++i) {
            py::dict entry;
            entry["level"] = i;
            entry["degree"] = offset + i;
            entry["group"] = homology_group_name(h.free_rank[static_cast<std::size_t>(i)],
                                                 h.torsion[static_cast<std::size_t>(i)]);
            groups.append(entry);
        }
        return groups;
    }, py::arg("type"), py::arg("m"),
       "integral homology of the weighted complex, level by level");

    m.def("poincare_series", [](const std::string& name, int m, int truncation, long long cap) {
        LieType type = type_from_name(name);
        int upto = truncation >= 0 ? truncation : default_truncation(type);
        RationalSeries series = poincare_series(type, m, upto, Int(cap));
        py::list coefficients;
        for (int d = 0; d <= series.truncation; ++d) coefficients.append(int_to_py(series.integer_at(d)));
        return coefficients;
    }, py::arg("type"), py::arg("m"), py::arg("truncation") = -1, py::arg("cap") = 1000000LL,
       "coefficients of the equivariant Poincare series, degree 0 upward");

    m.def("cone_apex", [](const std::string& name, long long p, int k) {
        auto apex = cone_apex(delta_p_k(type_from_name(name), Int(p), k));
        return apex ? py::cast(*apex) : py::none().cast<py::object>();
    }, py::arg("type"), py::arg("p"), py::arg("k") = 0,
       "lowest cone vertex of the level-k subcomplex, or None");

    m.def("run_check", [](const std::string& check, int max_rank) {
        CheckOptions options;
        options.max_rank = max_rank;
        CheckResult result = run_check(check, options);
        py::dict out;
        out["name"] = result.name;
        out["pass"] = result.pass;
        out["detail"] = result.detail;
        return out;
    }, py::arg("check"), py::arg("max_rank") = 0, "run one named verification check");

    m.def("check_names", [] {
        std::vector<std::string> names;
        for (const Check& check : check_registry()) names.push_back(check.name);
        return names;
    }, "names accepted by run_check");
}
