#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commhom/checks.hpp"
#include "commhom/combinatorics_ad.hpp"
#include "commhom/errors.hpp"
#include "commhom/formats.hpp"
#include "commhom/morse.hpp"
#include "commhom/torsion.hpp"
#include "commhom/weyl_series.hpp"

namespace {

using namespace commhom;

/* "A3" or a bare family name combined with --rank. */
LieType parse_type_arg(const std::string& spec, int rank_flag) {
    std::size_t split = 0;
    while (split < spec.size() && !std::isdigit(static_cast<unsigned char>(spec[split]))) ++split;
    std::string letters = spec.substr(0, split);
    std::string digits = spec.substr(split);
    std::optional<Family> family = parse_family(letters.empty() ? spec : letters);
    if (!family && !digits.empty()) family = parse_family(spec);
    if (!family) throw UsageError("unknown type '" + spec + "'");
    if (family_is_exceptional(*family)) {
        int fixed = exceptional_rank(*family);
        if (!digits.empty() && std::stoi(digits) != fixed)
            throw UsageError(family_name(*family) + " has rank " + std::to_string(fixed));
        if (rank_flag > 0 && rank_flag != fixed)
            throw UsageError(family_name(*family) + " has rank " + std::to_string(fixed));
        return LieType(*family, fixed);
    }
    int rank = rank_flag;
    if (!digits.empty()) rank = std::stoi(digits);
    if (rank <= 0) throw UsageError("type '" + spec + "' needs a rank, e.g. " + spec + "4 or --rank 4");
    return LieType(*family, rank);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot open " + out_path + " for writing");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

std::vector<LieType> types_up_to(int max_rank) {
    std::vector<LieType> out;
    for (int n = 1; n <= max_rank; ++n) out.emplace_back(Family::A, n);
    for (int n = 2; n <= max_rank; ++n) out.emplace_back(Family::B, n);
    for (int n = 3; n <= max_rank; ++n) out.emplace_back(Family::C, n);
    for (int n = 4; n <= max_rank; ++n) out.emplace_back(Family::D, n);
    for (Family f : {Family::G2, Family::F4, Family::E6, Family::E7, Family::E8})
        if (exceptional_rank(f) <= max_rank) out.emplace_back(f, exceptional_rank(f));
    return out;
}

int exit_code_for(const Error& e) {
    if (dynamic_cast<const UsageError*>(&e)) return 2;
    if (dynamic_cast<const CapExceeded*>(&e)) return 2;
    if (dynamic_cast<const UnknownFace*>(&e)) return 2;
    return 1;
}

struct CommonArgs {
    std::string type_spec;
    int rank = 0;
    std::string format;
    std::string out_path;

    LieType type() const { return parse_type_arg(type_spec, rank); }
    OutputFormat fmt(OutputFormat fallback) const { return format.empty() ? fallback : parse_format(format); }
};

void add_type_options(CLI::App* cmd, CommonArgs& args, bool required = true) {
    auto* opt = cmd->add_option("--type,-t", args.type_spec, "group type, e.g. A3, D5, E7");
    if (required) opt->required();
    cmd->add_option("--rank,-n", args.rank, "rank when --type is a bare family letter");
}

void add_output_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--format,-f", args.format, "output format: text, json, csv, dot");
    cmd->add_option("--out,-o", args.out_path, "write output to a file instead of stdout");
}

int run_cli(int argc, char** argv) {
    CLI::App app{"commuting-element homology toolkit"};
    app.require_subcommand(1);
    int exit_status = 0;

    auto* facts_cmd = app.add_subcommand("facts", "catalog data for one group type");
    CommonArgs facts_args;
    add_type_options(facts_cmd, facts_args);
    add_output_options(facts_cmd, facts_args);
    facts_cmd->callback([&] {
        LieType type = facts_args.type();
        switch (facts_args.fmt(OutputFormat::text)) {
            case OutputFormat::json: emit(facts_json(type).dump(2), facts_args.out_path); break;
            case OutputFormat::dot: emit(diagram_dot(type), facts_args.out_path); break;
            case OutputFormat::text: emit(facts_text(type), facts_args.out_path); break;
            case OutputFormat::csv: throw UsageError("facts has no csv format");
        }
    });

    auto* complex_cmd = app.add_subcommand("complex", "a valuation subcomplex of the alcove");
    CommonArgs complex_args;
    std::string complex_prime = "2";
    int complex_k = 0;
    bool complex_chains = false;
    bool complex_reduced = false;
    add_type_options(complex_cmd, complex_args);
    complex_cmd->add_option("--prime,-p", complex_prime, "prime p")->required();
    complex_cmd->add_option("-k", complex_k, "level k, 0 <= k <= r (default 0)");
    complex_cmd->add_flag("--chains", complex_chains, "dump the simplicial chain complex instead");
    complex_cmd->add_flag("--reduced", complex_reduced, "augmented chain complex (with --chains)");
    add_output_options(complex_cmd, complex_args);
    complex_cmd->callback([&] {
        LieType type = complex_args.type();
        Int p(complex_prime);
        SubcomplexSpec spec = make_subcomplex_spec(type, p, complex_k);
        AlcoveComplex c = delta_p_k(type, spec);
        if (complex_chains) {
            emit(chain_complex_dump(simplicial_chain_complex(c, complex_reduced)), complex_args.out_path);
            return;
        }
        switch (complex_args.fmt(OutputFormat::text)) {
            case OutputFormat::json: emit(complex_json(type, spec, c).dump(2), complex_args.out_path); break;
            case OutputFormat::csv: emit(complex_csv(c), complex_args.out_path); break;
            case OutputFormat::dot: emit(complex_dot(type, spec, c), complex_args.out_path); break;
            case OutputFormat::text: emit(complex_text(type, spec, c), complex_args.out_path); break;
        }
    });

    auto* homology_cmd = app.add_subcommand("homology", "integral or mod-p homology of a model");
    CommonArgs homology_args;
    std::string homology_prime;
    int homology_k = 0;
    int homology_m = 0;
    std::string homology_mod;
    bool homology_unreduced = false;
    add_type_options(homology_cmd, homology_args);
    homology_cmd->add_option("--prime,-p", homology_prime, "prime p of the subcomplex");
    homology_cmd->add_option("-k", homology_k, "level k of the subcomplex (default 0)");
    homology_cmd->add_option("--m,-m", homology_m, "weighted model for m commuting generators");
    homology_cmd->add_option("--mod", homology_mod, "report dimensions over F_q instead of Z");
    homology_cmd->add_flag("--unreduced", homology_unreduced, "drop the augmentation (subcomplex only)");
    add_output_options(homology_cmd, homology_args);
    homology_cmd->callback([&] {
        LieType type = homology_args.type();
        if ((homology_m > 0) == !homology_prime.empty())
            throw UsageError("choose exactly one of --prime (subcomplex) and --m (weighted model)");
        ChainComplex cc = [&] {
            if (homology_m > 0)
                return weighted_hocolim_complex(type, homology_m % 2 == 0 ? Parity::even : Parity::odd);
            SubcomplexSpec spec = make_subcomplex_spec(type, Int(homology_prime), homology_k);
            return simplicial_chain_complex(delta_p_k(type, spec), !homology_unreduced);
        }();
        std::string label = cc.name();
        if (!homology_mod.empty()) {
            Int q(homology_mod);
            if (!is_prime(q)) throw UsageError(homology_mod + " is not prime");
            std::vector<int> betti = mod_p_betti(cc, q);
            std::ostringstream text;
            text << label << " over F_" << homology_mod << "\n";
            for (int i = 0; i < static_cast<int>(betti.size()); ++i)
                text << "degree " << cc.min_degree() + i << ": " << betti[static_cast<std::size_t>(i)] << "\n";
            emit(text.str(), homology_args.out_path);
            return;
        }
        HomologySummary h = homology_m > 0 && homology_m % 2 == 0 ? weighted_homology_even(type)
                                                                  : integral_homology(cc);
        switch (homology_args.fmt(OutputFormat::text)) {
            case OutputFormat::json: emit(homology_json(label, cc, h).dump(2), homology_args.out_path); break;
            case OutputFormat::csv: emit(homology_csv(h), homology_args.out_path); break;
            case OutputFormat::text: emit(homology_text(label, cc, h), homology_args.out_path); break;
            case OutputFormat::dot: throw UsageError("homology has no dot format");
        }
    });

    auto* detect_cmd = app.add_subcommand("detect", "torsion detection report for one type and prime");
    CommonArgs detect_args;
    std::string detect_prime;
    add_type_options(detect_cmd, detect_args);
    detect_cmd->add_option("--prime,-p", detect_prime, "prime p")->required();
    add_output_options(detect_cmd, detect_args);
    detect_cmd->callback([&] {
        DetectionReport report = detection_report(detect_args.type(), Int(detect_prime));
        switch (detect_args.fmt(OutputFormat::json)) {
            case OutputFormat::json: emit(report_json(report).dump(2), detect_args.out_path); break;
            case OutputFormat::csv: emit(report_csv_header() + report_csv_row(report), detect_args.out_path); break;
            case OutputFormat::text: emit(report_text(report), detect_args.out_path); break;
            case OutputFormat::dot: throw UsageError("detect has no dot format");
        }
    });

    auto* report_cmd = app.add_subcommand("report", "detection scan over types and their primes");
    CommonArgs report_args;
    int report_max_rank = 8;
    int report_jobs = 1;
    add_type_options(report_cmd, report_args, false);
    report_cmd->add_option("--max-rank", report_max_rank, "highest rank when scanning all families");
    report_cmd->add_option("--jobs,-j", report_jobs, "concurrent per-type computations");
    add_output_options(report_cmd, report_args);
    report_cmd->callback([&] {
        std::vector<LieType> types;
        if (!report_args.type_spec.empty())
            types.push_back(report_args.type());
        else
            types = types_up_to(report_max_rank);
        std::vector<DetectionReport> rows = conjecture_scan(types, report_jobs);
        switch (report_args.fmt(OutputFormat::json)) {
            case OutputFormat::json: {
                Json all = Json::array();
                for (const DetectionReport& row : rows) all.push_back(report_json(row));
                emit(all.dump(2), report_args.out_path);
                break;
            }
            case OutputFormat::csv: {
                std::ostringstream out;
                out << report_csv_header();
                for (const DetectionReport& row : rows) out << report_csv_row(row);
                emit(out.str(), report_args.out_path);
                break;
            }
            case OutputFormat::text: {
                std::ostringstream out;
                for (const DetectionReport& row : rows) out << report_text(row) << "\n";
                emit(out.str(), report_args.out_path);
                break;
            }
            case OutputFormat::dot: throw UsageError("report has no dot format");
        }
    });

    auto* series_cmd = app.add_subcommand("series", "Poincare series of the m-generator model");
    CommonArgs series_args;
    int series_m = 0;
    int series_truncation = -1;
    std::string series_cap = "1000000";
    add_type_options(series_cmd, series_args);
    series_cmd->add_option("--m,-m", series_m, "number of commuting generators")->required();
    series_cmd->add_option("--truncation,-N", series_truncation, "highest degree kept");
    series_cmd->add_option("--cap", series_cap, "largest Weyl group enumerated");
    add_output_options(series_cmd, series_args);
    series_cmd->callback([&] {
        LieType type = series_args.type();
        if (series_m < 1) throw UsageError("--m must be at least 1");
        int truncation = series_truncation >= 0 ? series_truncation : default_truncation(type);
        RationalSeries series = poincare_series(type, series_m, truncation, Int(series_cap));
        switch (series_args.fmt(OutputFormat::csv)) {
            case OutputFormat::json: emit(series_json(type, series_m, series).dump(2), series_args.out_path); break;
            case OutputFormat::csv: emit(series_csv(series), series_args.out_path); break;
            case OutputFormat::text: emit(series_text(type, series_m, series), series_args.out_path); break;
            case OutputFormat::dot: throw UsageError("series has no dot format");
        }
    });

    auto* morse_cmd = app.add_subcommand("morse", "discrete Morse matchings on a subcomplex");
    CommonArgs morse_args;
    std::string morse_prime;
    int morse_k = 0;
    std::string morse_matching;
    std::string morse_emit;
    std::uint64_t morse_budget = 1000000;
    add_type_options(morse_cmd, morse_args);
    morse_cmd->add_option("--prime,-p", morse_prime, "prime p")->required();
    morse_cmd->add_option("-k", morse_k, "level k (default 0)");
    morse_cmd->add_option("--matching", morse_matching, "validate this matching file");
    morse_cmd->add_option("--emit", morse_emit, "write a found matching to this file");
    morse_cmd->add_option("--cap", morse_budget, "search state budget");
    add_output_options(morse_cmd, morse_args);
    morse_cmd->callback([&] {
        LieType type = morse_args.type();
        SubcomplexSpec spec = make_subcomplex_spec(type, Int(morse_prime), morse_k);
        AlcoveComplex c = delta_p_k(type, spec);
        std::string label = complex_label(type, spec);
        if (!morse_matching.empty()) {
            std::ifstream in(morse_matching);
            if (!in) throw UsageError("cannot read " + morse_matching);
            Matching m = read_matching(in, c);
            MorseCertificate cert = validate_matching(c, m);
            if (morse_args.fmt(OutputFormat::text) == OutputFormat::json) {
                emit(certificate_json(c, cert).dump(2), morse_args.out_path);
            } else {
                std::ostringstream out;
                out << label << ": " << m.pairs.size() << " pairs, "
                    << (cert.is_partial_matching ? "matching ok" : "NOT a matching") << ", "
                    << (cert.is_acyclic ? "acyclic" : "NOT acyclic") << "\n";
                out << "critical cells:";
                for (FaceMask f : cert.critical) out << " " << c.face_name(f);
                out << "\n";
                if (cert.certifies_collapse(c)) out << "certifies collapse to a point\n";
                emit(out.str(), morse_args.out_path);
            }
            if (!cert.is_partial_matching || !cert.is_acyclic) exit_status = 1;
            return;
        }
        std::ostringstream out;
        if (auto apex = cone_apex(c)) {
            out << label << ": cone with apex " << *apex << "\n";
        } else if (c.empty()) {
            out << label << ": empty complex\n";
        } else if (auto found = collapsibility_search(c, morse_budget)) {
            MorseCertificate cert = validate_matching(c, *found);
            out << label << ": collapsible, " << found->pairs.size() << " pairs, critical "
                << c.face_name(cert.critical.front()) << "\n";
            if (!morse_emit.empty()) {
                std::ofstream file(morse_emit);
                if (!file) throw UsageError("cannot open " + morse_emit + " for writing");
                write_matching(file, c, *found);
            }
        } else {
            out << label << ": inconclusive within budget\n";
        }
        emit(out.str(), morse_args.out_path);
    });

    auto* verify_cmd = app.add_subcommand("verify", "run the named theorem checks");
    std::vector<std::string> verify_names;
    bool verify_list = false;
    CheckOptions verify_options;
    std::string verify_out;
    verify_cmd->add_option("--check,-c", verify_names, "run only these checks (repeatable)");
    verify_cmd->add_flag("--list", verify_list, "list check names and exit");
    verify_cmd->add_option("--max-rank", verify_options.max_rank, "clamp the documented rank ranges");
    verify_cmd->add_option("--jobs,-j", verify_options.jobs, "concurrent workers inside a check");
    verify_cmd->add_option("--seed", verify_options.seed, "seed for the randomized property checks");
    verify_cmd->add_option("--out,-o", verify_out, "write output to a file instead of stdout");
    verify_cmd->callback([&] {
        std::ostringstream out;
        if (verify_list) {
            for (const Check& check : check_registry())
                out << check.name << ": " << check.summary << "\n";
            emit(out.str(), verify_out);
            return;
        }
        std::vector<CheckResult> results;
        if (verify_names.empty()) {
            results = run_all_checks(verify_options);
        } else {
            for (const std::string& name : verify_names) results.push_back(run_check(name, verify_options));
        }
        int failed = 0;
        for (const CheckResult& r : results) {
            out << (r.pass ? "pass" : "FAIL") << "  " << r.name << " (" << r.detail << ")\n";
            if (!r.pass) ++failed;
        }
        out << results.size() - failed << "/" << results.size() << " checks passed\n";
        emit(out.str(), verify_out);
        if (failed > 0) exit_status = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    return exit_status;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const commhom::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
