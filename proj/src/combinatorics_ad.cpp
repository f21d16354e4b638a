#include "commhom/combinatorics_ad.hpp"

#include <algorithm>

#include "commhom/errors.hpp"

namespace commhom {

PAdicDigits p_adic_digits(const Int& n, const Int& p) {
    if (p < 2) throw UsageError("digit base must be at least 2");
    if (n < 1) throw UsageError("p-adic digits need a positive argument");
    PAdicDigits out{n, p, {}};
    Int rest = n;
    while (rest > 0) {
        out.digits.push_back(static_cast<int>(rest % p));
        rest /= p;
    }
    return out;
}

Int lucas_binom_mod_p(const Int& a, const Int& b, const Int& p) {
    if (!is_prime(p)) throw UsageError("Lucas reduction needs a prime modulus");
    if (b < 0 || b > a) return 0;
    if (b == 0) return a >= 0 ? Int(1) : Int(0);
    Int ra = a, rb = b, result = 1;
    while (rb > 0) {
        Int da = ra % p, db = rb % p;
        if (db > da) return 0;
        result = result * binomial(static_cast<unsigned>(da), static_cast<unsigned>(db)) % p;
        ra /= p;
        rb /= p;
    }
    return result;
}

namespace {

std::vector<int> block_sizes(int n, const Int& p) {
    PAdicDigits digits = p_adic_digits(n + 1, p);
    std::vector<int> sizes;
    Int power = 1;
    for (std::size_t j = 0; j < digits.digits.size(); ++j) {
        for (int c = 0; c < digits.digits[j]; ++c) sizes.push_back(static_cast<int>(power));
        power *= p;
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

std::set<FaceMask> block_gluings(int n, const Int& p, int i) {
    if (n < 1) throw UsageError("the cycle model needs rank at least 1");
    if (!is_prime(p)) throw UsageError("block sizes are powers of a prime");
    const int cycle = n + 1;
    std::set<FaceMask> out;
    if (i < 0) return out;
    std::vector<int> sizes = block_sizes(n, p);
    const int terminals = static_cast<int>(sizes.size());
    if (i + 1 > terminals) return out;
    do {
        for (int offset = 0; offset < cycle; ++offset) {
            std::vector<int> terminal_at;
            int position = offset;
            for (int size : sizes) {
                position = (position + size) % cycle;
                terminal_at.push_back(position == 0 ? cycle : position);
            }
            std::vector<char> choose(static_cast<std::size_t>(terminals), 0);
            std::fill(choose.end() - (i + 1), choose.end(), 1);
            do {
                FaceMask white = 0;
                for (int t = 0; t < terminals; ++t)
                    if (choose[static_cast<std::size_t>(t)]) white |= FaceMask(1) << (terminal_at[static_cast<std::size_t>(t)] - 1);
                out.insert(white);
            } while (std::next_permutation(choose.begin(), choose.end()));
        }
    } while (std::next_permutation(sizes.begin(), sizes.end()));
    return out;
}

bool verify_cycle_characterization(int n, const Int& p) {
    AlcoveComplex bottom = delta_p_k(LieType(Family::A, n), p, 0);
    std::vector<std::set<FaceMask>> direct(static_cast<std::size_t>(n + 1));
    for (const Face& face : bottom.faces()) direct[static_cast<std::size_t>(face.dim())].insert(face.white);
    for (int i = 0; i <= n; ++i)
        if (block_gluings(n, p, i) != direct[static_cast<std::size_t>(i)]) return false;
    return true;
}

FChiValues f_chi_values(int n, const Int& p) {
    if (n < 1) throw UsageError("the cycle model needs rank at least 1");
    if (!is_prime(p)) throw UsageError("run lengths are bounded by a prime");
    const int cycle = n + 1;
    Int longest = p - 2;
    if (longest > cycle) longest = cycle;
    const int bound = static_cast<int>(longest);
    FChiValues out;
    out.f.assign(static_cast<std::size_t>(n + 1), 0);
    /* Walk the cycle from the forced white vertex 1; the state is the length
     * of the trailing black run, so no run ever wraps past vertex 1. */
    std::vector<std::vector<Int>> by_run(
        static_cast<std::size_t>(std::max(bound, 0) + 1),
        std::vector<Int>(static_cast<std::size_t>(cycle + 1), 0));
    by_run[0][1] = 1;
    for (int step = 1; step < cycle; ++step) {
        std::vector<std::vector<Int>> next(by_run.size(), std::vector<Int>(static_cast<std::size_t>(cycle + 1), 0));
        for (std::size_t run = 0; run < by_run.size(); ++run)
            for (int whites = 1; whites <= cycle; ++whites) {
                const Int& ways = by_run[run][static_cast<std::size_t>(whites)];
                if (ways == 0) continue;
                if (whites + 1 <= cycle) next[0][static_cast<std::size_t>(whites + 1)] += ways;
                if (static_cast<int>(run) + 1 <= bound) next[run + 1][static_cast<std::size_t>(whites)] += ways;
            }
        by_run = std::move(next);
    }
    for (const auto& row : by_run)
        for (int whites = 1; whites <= cycle; ++whites) out.f[static_cast<std::size_t>(whites - 1)] += row[static_cast<std::size_t>(whites)];
    out.chi = 0;
    for (int i = 0; i <= n; ++i) out.chi += (i % 2 == 0 ? out.f[static_cast<std::size_t>(i)] : -out.f[static_cast<std::size_t>(i)]);
    Int residue = Int(n) % p;
    Int expected = residue == p - 1 ? Int(-1) : (residue == 0 ? Int(1) : Int(0));
    if (out.chi != expected)
        throw ComputationMismatch("run-bounded cycle count at rank " + std::to_string(n) + " disagrees with its closed form");
    return out;
}

Int spin_tilde_chi(int n, const Int& p) {
    LieType type(Family::D, n);
    int r = valuation(catalog_facts(type).weyl_order, p);
    if (r < 1) throw UsageError("the top-layer count needs a prime dividing the group order");
    AlcoveComplex level = delta_p_k(type, p, r - 1);
    return 1 - euler_characteristic(level);
}

}  // namespace commhom
