#include "commhom/weyl_series.hpp"

#include <cstdint>
#include <deque>
#include <unordered_map>
#include <utility>

#include "commhom/errors.hpp"

namespace commhom {

void CartanMatrix::validate() const {
    if (n < 1 || entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw UsageError("malformed Cartan matrix");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int v = at(i, j);
            if (i == j && v != 2) throw UsageError("Cartan diagonal must be 2");
            if (i != j && v > 0) throw UsageError("Cartan off-diagonal must be nonpositive");
            if (i != j && ((v == 0) != (at(j, i) == 0))) throw UsageError("Cartan zero pattern must be symmetric");
            int bond = v * at(j, i);
            if (i != j && bond > 3) throw UsageError("Cartan bond multiplicity out of range");
        }
}

namespace {

struct Bond {
    int a, b;    // 0-based
    int ab, ba;  // C(a,b), C(b,a)
};

CartanMatrix from_bonds(int n, const std::vector<Bond>& bonds) {
    CartanMatrix c;
    c.n = n;
    c.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) c.entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = 2;
    for (const Bond& bond : bonds) {
        c.entries[static_cast<std::size_t>(bond.a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(bond.b)] = bond.ab;
        c.entries[static_cast<std::size_t>(bond.b) * static_cast<std::size_t>(n) + static_cast<std::size_t>(bond.a)] = bond.ba;
    }
    c.validate();
    return c;
}

}  // namespace

CartanMatrix cartan_matrix(const LieType& type) {
    const int n = type.rank;
    std::vector<Bond> bonds;
    auto path = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) bonds.push_back({i, i + 1, -1, -1});
    };
    switch (type.family) {
        case Family::A:
            path(n);
            break;
        case Family::B:
            path(n - 1);
            bonds.push_back({n - 2, n - 1, -1, -2});
            break;
        case Family::C:
            path(n - 1);
            bonds.push_back({n - 2, n - 1, -2, -1});
            break;
        case Family::D:
            path(n - 1);
            bonds.push_back({n - 3, n - 1, -1, -1});
            break;
        case Family::G2:
            bonds.push_back({0, 1, -1, -3});
            break;
        case Family::F4:
            bonds.push_back({0, 1, -1, -1});
            bonds.push_back({1, 2, -2, -1});
            bonds.push_back({2, 3, -1, -1});
            break;
        case Family::E6:
        case Family::E7:
        case Family::E8:
            path(n - 1);
            bonds.push_back({2, n - 1, -1, -1});
            break;
    }
    return from_bonds(n, bonds);
}

Int CharPolyBucket::total() const {
    Int sum = 0;
    for (const auto& [poly, count] : multiplicity) sum += count;
    return sum;
}

namespace {

using Entry = std::int8_t;

struct WeylGeneration {
    int n;
    CartanMatrix cartan;
    std::vector<Entry> store;  // concatenated n*n matrices
    std::unordered_map<std::uint64_t, std::uint32_t> first_with_hash;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> hash_overflow;

    explicit WeylGeneration(const LieType& type) : n(type.rank), cartan(cartan_matrix(type)) {}

    const Entry* matrix(std::uint32_t id) const { return store.data() + static_cast<std::size_t>(id) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n); }

    static std::uint64_t hash_of(const Entry* m, int len) {
        std::uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < len; ++i) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint8_t>(m[i]));
            h *= 1099511628211ull;
        }
        return h;
    }

    bool equal(std::uint32_t id, const Entry* m) const {
        const Entry* have = matrix(id);
        for (int i = 0; i < n * n; ++i)
            if (have[i] != m[i]) return false;
        return true;
    }

    /* Returns the id if m is new, otherwise nothing. */
    std::uint32_t count() const { return static_cast<std::uint32_t>(store.size() / (static_cast<std::size_t>(n) * static_cast<std::size_t>(n))); }

    bool insert(const Entry* m, std::uint32_t& id_out) {
        std::uint64_t h = hash_of(m, n * n);
        auto hit = first_with_hash.find(h);
        if (hit == first_with_hash.end()) {
            id_out = count();
            first_with_hash.emplace(h, id_out);
            store.insert(store.end(), m, m + n * n);
            return true;
        }
        if (equal(hit->second, m)) return false;
        for (const auto& [oh, oid] : hash_overflow)
            if (oh == h && equal(oid, m)) return false;
        id_out = count();
        hash_overflow.emplace_back(h, id_out);
        store.insert(store.end(), m, m + n * n);
        return true;
    }

    void apply_reflection(int i, const Entry* src, Entry* dst) const {
        for (int k = 0; k < n * n; ++k) dst[k] = src[k];
        for (int col = 0; col < n; ++col) {
            int value = 0;
            for (int j = 0; j < n; ++j) {
                int c = cartan.at(i, j);
                if (c != 0) value += c * src[j * n + col];
            }
            int updated = src[i * n + col] - value;
            if (updated < -127 || updated > 127) throw ComputationMismatch("reflection matrix entry out of range");
            dst[i * n + col] = static_cast<Entry>(updated);
        }
    }
};

std::vector<long long> char_poly_of(const Entry* m, int n) {
    const int half = (n + 1) / 2;
    std::vector<std::vector<long long>> powers(static_cast<std::size_t>(half + 1), std::vector<long long>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)));
    for (int i = 0; i < n * n; ++i) powers[1][static_cast<std::size_t>(i)] = m[i];
    for (int k = 2; k <= half; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long long sum = 0;
                for (int t = 0; t < n; ++t) sum += powers[k - 1][static_cast<std::size_t>(i * n + t)] * m[t * n + j];
                powers[static_cast<std::size_t>(k)][static_cast<std::size_t>(i * n + j)] = sum;
            }
    std::vector<long long> psum(static_cast<std::size_t>(n + 1), 0);
    for (int k = 1; k <= n; ++k) {
        long long trace = 0;
        if (k <= half) {
            for (int i = 0; i < n; ++i) trace += powers[static_cast<std::size_t>(k)][static_cast<std::size_t>(i * n + i)];
        } else {
            const auto& a = powers[static_cast<std::size_t>(half)];
            const auto& b = powers[static_cast<std::size_t>(k - half)];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) trace += a[static_cast<std::size_t>(i * n + j)] * b[static_cast<std::size_t>(j * n + i)];
        }
        psum[static_cast<std::size_t>(k)] = trace;
    }
    std::vector<long long> elem(static_cast<std::size_t>(n + 1), 0);
    elem[0] = 1;
    for (int k = 1; k <= n; ++k) {
        long long acc = 0;
        for (int i = 1; i <= k; ++i) {
            long long term = elem[static_cast<std::size_t>(k - i)] * psum[static_cast<std::size_t>(i)];
            acc += (i % 2 == 1) ? term : -term;
        }
        elem[static_cast<std::size_t>(k)] = acc / k;
    }
    std::vector<long long> coeff(static_cast<std::size_t>(n + 1), 0);
    for (int k = 0; k <= n; ++k) {
        long long e = elem[static_cast<std::size_t>(k)];
        coeff[static_cast<std::size_t>(n - k)] = (k % 2 == 0) ? e : -e;
    }
    return coeff;
}

}  // namespace

CharPolyBucket generate_weyl_buckets(const LieType& type, const Int& cap) {
    GroupFacts facts = catalog_facts(type);
    if (facts.weyl_order > cap)
        throw CapExceeded("group order " + facts.weyl_order.str() + " for " + type.name() + " exceeds cap " + cap.str());
    WeylGeneration gen(type);
    const int n = gen.n;
    std::vector<Entry> identity(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i * n + i)] = 1;
    if (facts.weyl_order <= 100000000) {
        gen.store.reserve(identity.size() * static_cast<std::size_t>(facts.weyl_order));
        gen.first_with_hash.reserve(static_cast<std::size_t>(facts.weyl_order));
    }
    std::uint32_t id;
    gen.insert(identity.data(), id);
    std::deque<std::uint32_t> frontier{0};
    std::vector<Entry> scratch(identity.size());
    while (!frontier.empty()) {
        std::uint32_t current = frontier.front();
        frontier.pop_front();
        for (int i = 0; i < n; ++i) {
            gen.apply_reflection(i, gen.matrix(current), scratch.data());
            if (gen.insert(scratch.data(), id)) {
                if (Int(gen.count()) > cap) throw CapExceeded("length closure exceeded the declared cap");
                frontier.push_back(id);
            }
        }
    }
    CharPolyBucket buckets;
    const std::uint32_t total = gen.count();
    for (std::uint32_t e = 0; e < total; ++e) buckets.multiplicity[char_poly_of(gen.matrix(e), n)] += 1;
    if (buckets.total() != facts.weyl_order)
        throw ComputationMismatch("reflection closure of " + type.name() + " has order " + Int(total).str() + ", catalog says " + facts.weyl_order.str());
    return buckets;
}

const Rat& RationalSeries::at(int degree) const {
    if (degree < 0 || degree > truncation) throw UsageError("series degree out of truncated range");
    return coefficients[static_cast<std::size_t>(degree)];
}

Int RationalSeries::integer_at(int degree) const {
    const Rat& value = at(degree);
    if (denominator(value) != 1) throw ComputationMismatch("series coefficient is not an integer");
    return numerator(value);
}

bool operator==(const RationalSeries& a, const RationalSeries& b) {
    return a.truncation == b.truncation && a.coefficients == b.coefficients;
}

int degree_offset(const LieType& type, int m) {
    if (m < 1) throw UsageError("the number of commuting generators must be positive");
    GroupFacts facts = catalog_facts(type);
    return facts.dim + facts.rank * (m - 2);
}

int default_truncation(const LieType& type) {
    GroupFacts facts = catalog_facts(type);
    return facts.dim + facts.rank + 2;
}

namespace {

using Poly = std::vector<Int>;  // truncated, index = degree

Poly truncated_product(const Poly& a, const Poly& b, int upto) {
    Poly out(static_cast<std::size_t>(upto + 1), 0);
    for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(upto); ++i) {
        if (a[i] == 0) continue;
        std::size_t jmax = std::min(b.size(), static_cast<std::size_t>(upto) + 1 - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

/* Series inverse of a polynomial with constant term 1. */
Poly truncated_inverse(const Poly& a, int upto) {
    Poly out(static_cast<std::size_t>(upto + 1), 0);
    out[0] = 1;
    for (int d = 1; d <= upto; ++d) {
        Int acc = 0;
        for (std::size_t j = 1; j < a.size() && j <= static_cast<std::size_t>(d); ++j) acc += a[j] * out[static_cast<std::size_t>(d) - j];
        out[static_cast<std::size_t>(d)] = -acc;
    }
    return out;
}

}  // namespace

RationalSeries poincare_series(const LieType& type, int m, int truncation, const CharPolyBucket& buckets) {
    if (m < 1) throw UsageError("the number of commuting generators must be positive");
    if (truncation < 1) throw UsageError("series truncation must be at least 1");
    GroupFacts facts = catalog_facts(type);
    const int n = facts.rank;
    Poly sum(static_cast<std::size_t>(truncation + 1), 0);
    for (const auto& [coeff, mult] : buckets.multiplicity) {
        Poly det_shift(static_cast<std::size_t>(n + 1), 0);
        for (int j = 0; j <= n; ++j) {
            long long c = coeff[static_cast<std::size_t>(j)];
            det_shift[static_cast<std::size_t>(n - j)] = ((n - j) % 2 == 0) ? c : -c;
        }
        Poly det_square(static_cast<std::size_t>(2 * n + 1), 0);
        for (int j = 0; j <= n; ++j) det_square[static_cast<std::size_t>(2 * (n - j))] = coeff[static_cast<std::size_t>(j)];
        Poly term(static_cast<std::size_t>(truncation + 1), 0);
        term[0] = 1;
        for (int power = 0; power < m; ++power) term = truncated_product(term, det_shift, truncation);
        term = truncated_product(term, truncated_inverse(det_square, truncation), truncation);
        for (std::size_t d = 0; d < term.size(); ++d) sum[d] += mult * term[d];
    }
    for (int degree : facts.degrees) {
        Poly factor(static_cast<std::size_t>(std::min(truncation, 2 * degree) + 1), 0);
        factor[0] = 1;
        if (2 * degree <= truncation) factor[static_cast<std::size_t>(2 * degree)] = -1;
        sum = truncated_product(sum, factor, truncation);
    }
    RationalSeries out;
    out.truncation = truncation;
    out.coefficients.reserve(sum.size());
    for (const Int& value : sum) {
        Rat scaled(value, facts.weyl_order);
        if (scaled < 0) throw NegativeCoefficient("series coefficient is negative");
        if (denominator(scaled) != 1) throw ComputationMismatch("series coefficient is not an integer");
        out.coefficients.push_back(std::move(scaled));
    }
    return out;
}

RationalSeries poincare_series(const LieType& type, int m, int truncation, const Int& cap) {
    return poincare_series(type, m, truncation, generate_weyl_buckets(type, cap));
}

RationalSeries exterior_series(const LieType& type, int truncation) {
    if (truncation < 1) throw UsageError("series truncation must be at least 1");
    Poly prod(static_cast<std::size_t>(truncation + 1), 0);
    prod[0] = 1;
    for (int degree : catalog_facts(type).degrees) {
        Poly factor(static_cast<std::size_t>(std::min(truncation, 2 * degree - 1) + 1), 0);
        factor[0] = 1;
        if (2 * degree - 1 <= truncation) factor[static_cast<std::size_t>(2 * degree - 1)] = 1;
        prod = truncated_product(prod, factor, truncation);
    }
    RationalSeries out;
    out.truncation = truncation;
    for (const Int& value : prod) out.coefficients.emplace_back(value);
    return out;
}

}  // namespace commhom
