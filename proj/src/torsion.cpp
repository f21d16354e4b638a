#include "commhom/torsion.hpp"

#include <algorithm>
#include <future>

#include "commhom/errors.hpp"

namespace commhom {

namespace {

/* Reduced mod-p homology dimensions, reindexed to start at degree 0. */
std::vector<int> reduced_betti(const AlcoveComplex& c, const Int& p) {
    ChainComplex cc = simplicial_chain_complex(c, true);
    std::vector<int> betti = mod_p_betti(cc, p);
    if (!betti.empty() && cc.min_degree() == -1) betti.erase(betti.begin());
    return betti;
}

}  // namespace

DeltaWitness detect_via_delta(const LieType& type, const Int& p) {
    SubcomplexSpec spec = make_subcomplex_spec(type, p, 0);
    DeltaWitness witness;
    for (int k = 0; k <= spec.r; ++k) {
        std::vector<int> betti = reduced_betti(delta_p_k(type, p, k), p);
        for (std::size_t degree = 0; degree < betti.size(); ++degree)
            if (betti[degree] != 0) {
                witness.detected = true;
                witness.k = k;
                witness.degree = static_cast<int>(degree);
                return witness;
            }
    }
    return witness;
}

HocolimTorsion hocolim_torsion_from(const HomologySummary& weighted, const Int& p) {
    if (!is_prime(p)) throw UsageError(p.str() + " is not prime");
    HocolimTorsion out;
    for (int i = 0; i < weighted.degree_count(); ++i) {
        const auto& factors = weighted.torsion[static_cast<std::size_t>(i)];
        if (factors.empty()) continue;
        LevelFactors level;
        level.level = weighted.min_degree + i;
        level.factors = factors;
        for (const Int& factor : factors)
            if (factor % p == 0) level.p_part = true;
        if (level.p_part) out.detected = true;
        out.levels.push_back(std::move(level));
    }
    return out;
}

HocolimTorsion detect_via_hocolim(const LieType& type, const Int& p) {
    HomologySummary weighted = weighted_homology_even(type);
    return hocolim_torsion_from(weighted, p);
}

bool equivalence_check(const LieType& type, const Int& p) {
    return detect_via_delta(type, p).detected == detect_via_hocolim(type, p).detected;
}

TopHomologyResult top_homology(const LieType& type, int m) {
    if (m >= 2 && m % 2 == 0)
        return top_homology(type, m, weighted_homology_even(type));
    return top_homology(type, m, HomologySummary{});
}

TopHomologyResult top_homology(const LieType& type, int m, const HomologySummary& even_summary) {
    if (m < 2) throw UsageError("top homology needs at least two commuting generators");
    GroupFacts facts = catalog_facts(type);
    const int n = facts.rank;
    TopHomologyResult result{type, m, 0, "", "", ""};
    if (m % 2 == 1) {
        HomologySummary odd = integral_homology(weighted_hocolim_complex(type, Parity::odd));
        int at_n = odd.free_rank[static_cast<std::size_t>(n)];
        bool clean = at_n == 1 && odd.torsion[static_cast<std::size_t>(n)].empty();
        for (int i = 0; i < n && clean; ++i)
            clean = odd.free_rank[static_cast<std::size_t>(i)] == 0 && odd.torsion[static_cast<std::size_t>(i)].empty();
        if (!clean) throw ComputationMismatch("odd-parity model of " + type.name() + " is not a single free class");
        result.degree = facts.dim + n * (m - 1);
        result.group = "Z";
        result.level_n = "Z";
        result.level_below = n >= 1 ? "0" : "";
        return result;
    }
    const HomologySummary& even = even_summary;
    auto group_at = [&](int level) {
        return homology_group_name(even.free_rank[static_cast<std::size_t>(level)], even.torsion[static_cast<std::size_t>(level)]);
    };
    result.degree = facts.dim + n * (m - 1) - 1;
    if (n == 1) {
        result.level_n = group_at(1);
        result.level_below = group_at(0);
        if (result.level_n != "0" || result.level_below != "Z+Z/2")
            throw ComputationMismatch("rank-one top homology should be Z+Z/2 then 0, got " + result.level_below + " / " + result.level_n);
        result.group = result.level_below;
        return result;
    }
    result.level_n = group_at(n);
    result.level_below = group_at(n - 1);
    if (result.level_n != "0" || result.level_below != "Z/2")
        throw ComputationMismatch(type.name() + " levels " + std::to_string(n) + "," + std::to_string(n - 1) +
                                  " should be 0 and Z/2, got " + result.level_n + " and " + result.level_below);
    result.group = result.level_below;
    return result;
}

bool detection_proved(const LieType& type, const Int& p) {
    if (p == 2) return true;
    int n = type.rank;
    switch (type.family) {
        case Family::A:
            return p <= n + 1;
        case Family::B:
        case Family::C:
            return false;
        case Family::D:
            return p <= n && (n % static_cast<int>(p) == 0 || n % static_cast<int>(p) == 1);
        case Family::G2:
        case Family::F4:
            return p == 3;
        case Family::E6:
            return p == 3 || p == 5;
        case Family::E7:
            return p == 3;
        case Family::E8:
            return p == 3 || p == 5;
    }
    return false;
}

std::string paper_status_label(const LieType& type, const Int& p, bool detected) {
    bool proved = detection_proved(type, p);
    if (detected) return proved ? "detected (proved)" : "detected (open)";
    return proved ? "NOT DETECTED (contradicts a theorem)" : "not detected (open)";
}

std::vector<Int> relevant_primes(const LieType& type) {
    Int order = catalog_facts(type).weyl_order;
    std::vector<Int> primes;
    Int rest = order;
    for (Int q = 2; q * q <= rest; ++q)
        if (rest % q == 0) {
            primes.push_back(q);
            while (rest % q == 0) rest /= q;
        }
    if (rest > 1) primes.push_back(rest);
    return primes;
}

DetectionReport detection_report(const LieType& type, const Int& p, const HomologySummary& weighted) {
    SubcomplexSpec spec = make_subcomplex_spec(type, p, 0);
    DetectionReport report(type, p);
    report.r = spec.r;
    for (int k = 0; k <= spec.r; ++k) {
        AlcoveComplex complex = delta_p_k(type, p, k);
        KRecord record;
        record.k = k;
        record.f_vector = complex.f_vector();
        record.euler = euler_characteristic(complex);
        record.reduced_betti_mod_p = reduced_betti(complex, p);
        for (std::size_t degree = 0; degree < record.reduced_betti_mod_p.size(); ++degree)
            if (record.reduced_betti_mod_p[degree] != 0 && !report.delta_verdict) {
                report.delta_verdict = true;
                report.witness_k = k;
                report.witness_degree = static_cast<int>(degree);
            }
        report.complexes.push_back(std::move(record));
    }
    report.hocolim = hocolim_torsion_from(weighted, p);
    report.equivalence_ok = report.delta_verdict == report.hocolim.detected;
    report.paper_status = paper_status_label(type, p, report.delta_verdict);
    return report;
}

DetectionReport detection_report(const LieType& type, const Int& p) {
    HomologySummary weighted = weighted_homology_even(type);
    return detection_report(type, p, weighted);
}

std::vector<DetectionReport> conjecture_scan(const std::vector<LieType>& types, int jobs) {
    if (jobs < 1) throw UsageError("job count must be positive");
    auto scan_one = [](const LieType& type) {
        HomologySummary weighted = weighted_homology_even(type);
        std::vector<DetectionReport> rows;
        for (const Int& p : relevant_primes(type)) rows.push_back(detection_report(type, p, weighted));
        return rows;
    };
    std::vector<DetectionReport> merged;
    if (jobs == 1) {
        for (const LieType& type : types)
            for (DetectionReport& row : scan_one(type)) merged.push_back(std::move(row));
        return merged;
    }
    std::vector<std::future<std::vector<DetectionReport>>> futures;
    futures.reserve(types.size());
    std::size_t next = 0;
    while (next < types.size() || !futures.empty()) {
        while (next < types.size() && futures.size() < static_cast<std::size_t>(jobs))
            futures.push_back(std::async(std::launch::async, scan_one, types[next++]));
        for (DetectionReport& row : futures.front().get()) merged.push_back(std::move(row));
        futures.erase(futures.begin());
    }
    return merged;
}

}  // namespace commhom
