#pragma once

#include <string>
#include <vector>

#include "commhom/homology.hpp"

namespace commhom {

/* Least k whose level-k subcomplex has nonzero reduced mod-p homology;
 * within that k, the lowest nonzero degree. */
struct DeltaWitness {
    bool detected = false;
    int k = -1;
    int degree = 0;
};

DeltaWitness detect_via_delta(const LieType& type, const Int& p);

struct LevelFactors {
    int level = 0;
    std::vector<Int> factors;
    bool p_part = false;
};

/* p-torsion in the integral homology of the even-parity weighted complex. */
struct HocolimTorsion {
    bool detected = false;
    std::vector<LevelFactors> levels;  // levels carrying torsion
};

HocolimTorsion detect_via_hocolim(const LieType& type, const Int& p);
HocolimTorsion hocolim_torsion_from(const HomologySummary& weighted, const Int& p);

/* The two detectors must agree; they share no code past the face catalog. */
bool equivalence_check(const LieType& type, const Int& p);

struct TopHomologyResult {
    LieType type;
    int m;
    int degree = 0;       // dim + n(m-1), minus 1 for even m
    std::string group;    // computed group in that degree
    std::string level_n;  // computed groups of the checked levels
    std::string level_below;
};

/* Top homology of the commuting variety model: Z for odd m; for even m the
 * computed levels n and n-1 must come out 0 and Z/2 (rank one: Z+Z/2 at
 * level 0, then 0); ComputationMismatch otherwise.  The second form reuses a
 * precomputed summary of the even-parity weighted complex. */
TopHomologyResult top_homology(const LieType& type, int m);
TopHomologyResult top_homology(const LieType& type, int m, const HomologySummary& even_summary);

struct KRecord {
    int k = 0;
    std::vector<Int> f_vector;
    Int euler;
    std::vector<int> reduced_betti_mod_p;  // degrees 0..dim
};

struct DetectionReport {
    LieType type;
    Int p;
    int r = 0;
    std::vector<KRecord> complexes;  // k = 0..r
    bool delta_verdict = false;
    int witness_k = -1;
    int witness_degree = 0;
    HocolimTorsion hocolim;
    bool equivalence_ok = false;
    std::string paper_status;

    DetectionReport(const LieType& t, const Int& prime) : type(t), p(prime) {}
};

DetectionReport detection_report(const LieType& type, const Int& p);
DetectionReport detection_report(const LieType& type, const Int& p, const HomologySummary& weighted);

/* Is detection at (type, p) a theorem rather than an open case? */
bool detection_proved(const LieType& type, const Int& p);
std::string paper_status_label(const LieType& type, const Int& p, bool detected);

/* Primes of the conjecture row for one type: every p dividing |W|. */
std::vector<Int> relevant_primes(const LieType& type);

/* One report per (type, p | |W|), type order preserved, primes ascending;
 * jobs > 1 runs the per-type work concurrently. */
std::vector<DetectionReport> conjecture_scan(const std::vector<LieType>& types, int jobs = 1);

}  // namespace commhom
