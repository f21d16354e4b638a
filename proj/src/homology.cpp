#include "commhom/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "commhom/alcove.hpp"
#include "commhom/lie_catalog.hpp"

namespace commhom {

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) {
                const Int& bkj = b.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

Int determinant(const IntegerMatrix& a) {
    if (a.rows != a.cols) throw Error("determinant of a non-square matrix");
    int n = a.rows;
    if (n == 0) return 1;
    IntegerMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (int t = 0; t < n - 1; ++t) {
        if (m.at(t, t) == 0) {
            int swap_row = -1;
            for (int i = t + 1; i < n; ++i)
                if (m.at(i, t) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(t, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = t + 1; i < n; ++i)
            for (int j = t + 1; j < n; ++j)
                m.at(i, j) = (m.at(t, t) * m.at(i, j) - m.at(i, t) * m.at(t, j)) / prev;
        prev = m.at(t, t);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace {

struct SnfWork {
    IntegerMatrix m, left, right;

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
        for (int j = 0; j < left.cols; ++j) std::swap(left.at(a, j), left.at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
        for (int i = 0; i < right.rows; ++i) std::swap(right.at(i, a), right.at(i, b));
    }
    void add_row(int dst, int src, const Int& q) {  // row dst += q * row src
        if (q == 0) return;
        for (int j = 0; j < m.cols; ++j) m.at(dst, j) += q * m.at(src, j);
        for (int j = 0; j < left.cols; ++j) left.at(dst, j) += q * left.at(src, j);
    }
    void add_col(int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < m.rows; ++i) m.at(i, dst) += q * m.at(i, src);
        for (int i = 0; i < right.rows; ++i) right.at(i, dst) += q * right.at(i, src);
    }
    void negate_row(int r) {
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
        for (int j = 0; j < left.cols; ++j) left.at(r, j) = -left.at(r, j);
    }

    bool find_pivot(int t, int& pi, int& pj) const {
        bool found = false;
        Int best = 0;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j) {
                const Int& x = m.at(i, j);
                if (x == 0) continue;
                Int ax = abs(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    /* 2x2 trick on diagonal slots (a, b), a < b: replaces (d_a, d_b) with
     * (gcd, lcm) keeping all transforms unimodular. */
    void gcd_lcm_pair(int a, int b) {
        Int da = m.at(a, a), db = m.at(b, b);
        if (da == 0 || db % da == 0) return;
        add_row(a, b, 1);  // block now [[da, db], [0, db]]
        Int x, y, g;
        // extended gcd on (da, db)
        {
            Int r0 = da, r1 = db, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
            while (r1 != 0) {
                Int q = r0 / r1;
                Int r2 = r0 - q * r1;
                Int s2 = s0 - q * s1;
                Int t2 = t0 - q * t1;
                r0 = r1; r1 = r2;
                s0 = s1; s1 = s2;
                t0 = t1; t1 = t2;
            }
            if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
            g = r0;
            x = s0;
            y = t0;
        }
        // columns (a, b) <- (x c_a + y c_b, -(db/g) c_a + (da/g) c_b)
        Int ca_factor = -db / g, cb_factor = da / g;
        for (int i = 0; i < m.rows; ++i) {
            Int va = m.at(i, a), vb = m.at(i, b);
            m.at(i, a) = x * va + y * vb;
            m.at(i, b) = ca_factor * va + cb_factor * vb;
        }
        for (int i = 0; i < right.rows; ++i) {
            Int va = right.at(i, a), vb = right.at(i, b);
            right.at(i, a) = x * va + y * vb;
            right.at(i, b) = ca_factor * va + cb_factor * vb;
        }
        // clear the (b, a) slot: it now holds y*db, a multiple of g
        add_row(b, a, -(y * db) / g);
    }
};

}  // namespace

namespace {

/* Quotient minimizing |a - q b|, so remainders shrink below |b| / 2. */
Int balanced_quotient(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (2 * abs(r) > abs(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a) {
    SnfWork w{a, IntegerMatrix::identity(a.rows), IntegerMatrix::identity(a.cols)};
    const int bound = std::min(a.rows, a.cols);
    int t = 0;
    for (; t < bound; ++t) {
        bool alive = true;
        /* Re-select the globally smallest entry as the pivot after every
         * reduction pass.  Remainders shrink below half the pivot, so the
         * pivot strictly decreases until the cross is clean; promoting a
         * partially reduced row instead lets entries compound. */
        for (;;) {
            int pi = 0, pj = 0;
            if (!w.find_pivot(t, pi, pj)) {
                alive = false;
                break;
            }
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            bool clean = true;
            for (int i = t + 1; i < w.m.rows; ++i) {
                if (w.m.at(i, t) == 0) continue;
                Int q = balanced_quotient(w.m.at(i, t), w.m.at(t, t));
                w.add_row(i, t, -q);
                if (w.m.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < w.m.cols; ++j) {
                if (w.m.at(t, j) == 0) continue;
                Int q = balanced_quotient(w.m.at(t, j), w.m.at(t, t));
                w.add_col(j, t, -q);
                if (w.m.at(t, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (!alive) break;
        if (w.m.at(t, t) < 0) w.negate_row(t);
    }
    // enforce the divisibility chain
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i + 1 < t; ++i)
            for (int j = i + 1; j < t; ++j) {
                Int before = w.m.at(i, i);
                w.gcd_lcm_pair(i, j);
                if (w.m.at(i, i) < 0) w.negate_row(i);
                if (w.m.at(j, j) < 0) w.negate_row(j);
                if (w.m.at(i, i) != before) changed = true;
            }
    }
    SmithForm out;
    for (int i = 0; i < t; ++i) out.diagonal.push_back(w.m.at(i, i));
    out.left = std::move(w.left);
    out.right = std::move(w.right);
    return out;
}

std::vector<Int> invariant_factors(IntegerMatrix a) {
    std::vector<Int> diag;
    const int bound = std::min(a.rows, a.cols);
    auto swap_rows = [&](int x, int y) {
        if (x != y)
            for (int j = 0; j < a.cols; ++j) std::swap(a.at(x, j), a.at(y, j));
    };
    auto swap_cols = [&](int x, int y) {
        if (x != y)
            for (int i = 0; i < a.rows; ++i) std::swap(a.at(i, x), a.at(i, y));
    };
    for (int t = 0; t < bound; ++t) {
        /* Same pivot discipline as the transform-carrying elimination: take
         * the globally smallest entry again after every reduction pass. */
        bool alive = true;
        for (;;) {
            int pi = -1, pj = -1;
            Int best;
            for (int i = t; i < a.rows; ++i)
                for (int j = t; j < a.cols; ++j) {
                    const Int& x = a.at(i, j);
                    if (x == 0) continue;
                    Int ax = abs(x);
                    if (pi < 0 || ax < best) {
                        best = std::move(ax);
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                alive = false;
                break;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = true;
            for (int i = t + 1; i < a.rows; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = balanced_quotient(a.at(i, t), a.at(t, t));
                if (q != 0)
                    for (int j = t; j < a.cols; ++j) a.at(i, j) -= q * a.at(t, j);
                if (a.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < a.cols; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = balanced_quotient(a.at(t, j), a.at(t, t));
                if (q != 0)
                    for (int i = t; i < a.rows; ++i) a.at(i, j) -= q * a.at(i, t);
                if (a.at(t, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (!alive) break;
        diag.push_back(abs(a.at(t, t)));
    }
    // diag(a, b) and diag(gcd, lcm) present the same module
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i)
            for (std::size_t j = i + 1; j < diag.size(); ++j) {
                Int g = gcd(diag[i], diag[j]);
                if (g == diag[i]) continue;
                diag[j] = diag[i] / g * diag[j];
                diag[i] = g;
                changed = true;
            }
    }
    return diag;
}

namespace {

void check_composites_vanish(const std::vector<IntegerMatrix>& boundaries,
                             const std::string& name) {
    for (std::size_t j = 0; j + 1 < boundaries.size(); ++j) {
        const IntegerMatrix& low = boundaries[j];        // C_{j+1} -> C_j
        const IntegerMatrix& high = boundaries[j + 1];   // C_{j+2} -> C_{j+1}
        for (int c = 0; c < high.cols; ++c) {
            std::map<int, Int> acc;
            for (int k = 0; k < high.rows; ++k) {
                const Int& hk = high.at(k, c);
                if (hk == 0) continue;
                for (int r = 0; r < low.rows; ++r) {
                    const Int& lr = low.at(r, k);
                    if (lr != 0) acc[r] += hk * lr;
                }
            }
            for (const auto& [r, v] : acc)
                if (v != 0)
                    throw ComputationMismatch("complex " + name +
                                              ": boundary composite is nonzero");
        }
    }
}

}  // namespace

ChainComplex::ChainComplex(std::string name, int min_degree,
                           std::vector<std::vector<std::string>> bases,
                           std::vector<IntegerMatrix> boundaries)
    : name_(std::move(name)),
      min_degree_(min_degree),
      bases_(std::move(bases)),
      boundaries_(std::move(boundaries)) {
    if (!bases_.empty() && boundaries_.size() + 1 != bases_.size())
        throw Error("complex " + name_ + ": boundary count mismatch");
    for (std::size_t j = 0; j < boundaries_.size(); ++j) {
        if (boundaries_[j].rows != static_cast<int>(bases_[j].size()) ||
            boundaries_[j].cols != static_cast<int>(bases_[j + 1].size()))
            throw Error("complex " + name_ + ": boundary shape mismatch");
    }
    check_composites_vanish(boundaries_, name_);
}

int ChainComplex::rank_at(int degree) const {
    int idx = degree - min_degree_;
    if (idx < 0 || idx >= static_cast<int>(bases_.size())) return 0;
    return static_cast<int>(bases_[static_cast<std::size_t>(idx)].size());
}

const std::vector<std::string>& ChainComplex::basis_at(int degree) const {
    static const std::vector<std::string> none;
    int idx = degree - min_degree_;
    if (idx < 0 || idx >= static_cast<int>(bases_.size())) return none;
    return bases_[static_cast<std::size_t>(idx)];
}

IntegerMatrix ChainComplex::boundary_from(int degree) const {
    int idx = degree - min_degree_;  // boundaries_[idx-1] leaves bases_[idx]
    if (idx <= 0 || idx >= static_cast<int>(bases_.size()))
        return IntegerMatrix(rank_at(degree - 1), rank_at(degree));
    return boundaries_[static_cast<std::size_t>(idx - 1)];
}

bool HomologySummary::trivial() const {
    for (int f : free_rank)
        if (f != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

ChainComplex simplicial_chain_complex(const AlcoveComplex& c, bool reduced) {
    const int top = c.dim();
    std::vector<std::vector<FaceMask>> by_dim(static_cast<std::size_t>(top + 1));
    for (const auto& f : c.faces()) by_dim[static_cast<std::size_t>(f.dim())].push_back(f.white);

    int min_degree = reduced ? -1 : 0;
    std::vector<std::vector<std::string>> bases;
    if (reduced) bases.push_back({"*"});
    for (const auto& level : by_dim) {
        std::vector<std::string> labels;
        for (FaceMask m : level) labels.push_back(c.face_name(m));
        bases.push_back(std::move(labels));
    }

    std::vector<IntegerMatrix> boundaries;
    if (reduced && top >= 0) {
        IntegerMatrix aug(1, static_cast<int>(by_dim[0].size()));
        for (int j = 0; j < aug.cols; ++j) aug.at(0, j) = 1;
        boundaries.push_back(std::move(aug));
    }
    for (int d = 1; d <= top; ++d) {
        const auto& lower = by_dim[static_cast<std::size_t>(d - 1)];
        const auto& upper = by_dim[static_cast<std::size_t>(d)];
        std::map<FaceMask, int> row_of;
        for (std::size_t i = 0; i < lower.size(); ++i) row_of[lower[i]] = static_cast<int>(i);
        IntegerMatrix b(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
        for (std::size_t col = 0; col < upper.size(); ++col) {
            auto vs = mask_vertices(upper[col]);
            for (std::size_t pos = 0; pos < vs.size(); ++pos) {
                FaceMask sub = upper[col] & ~(FaceMask(1) << (vs[pos] - 1));
                auto it = row_of.find(sub);
                if (it == row_of.end())
                    throw ComputationMismatch("complex on " + c.type().name() +
                                              " is not closed under subfaces");
                b.at(it->second, static_cast<int>(col)) = (pos % 2 == 0) ? 1 : -1;
            }
        }
        boundaries.push_back(std::move(b));
    }
    std::string name = c.type().name() + (reduced ? " reduced cells" : " cells");
    return ChainComplex(std::move(name), min_degree, std::move(bases), std::move(boundaries));
}

namespace {

int matrix_rank_mod_p(const IntegerMatrix& a, const Int& p) {
    long long pp = p.convert_to<long long>();
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(a.rows),
                                          std::vector<long long>(static_cast<std::size_t>(a.cols)));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            Int v = a.at(i, j) % p;
            if (v < 0) v += p;
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.convert_to<long long>();
        }
    int rank = 0;
    for (int col = 0; col < a.cols && rank < a.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < a.rows; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
        // scale the pivot row to 1
        long long inv = 1, base = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)] % pp, e = pp - 2;
        while (e > 0) {  // Fermat inverse
            if (e & 1) inv = (__int128(inv) * base) % pp;
            base = (__int128(base) * base) % pp;
            e >>= 1;
        }
        auto& prow = m[static_cast<std::size_t>(rank)];
        for (int j = col; j < a.cols; ++j)
            prow[static_cast<std::size_t>(j)] = (__int128(prow[static_cast<std::size_t>(j)]) * inv) % pp;
        for (int i = 0; i < a.rows; ++i) {
            if (i == rank) continue;
            long long f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j < a.cols; ++j) {
                __int128 v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                             __int128(f) * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] % pp;
                long long vv = static_cast<long long>(v % pp);
                if (vv < 0) vv += pp;
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = vv;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::vector<int> mod_p_betti(const ChainComplex& cc, const Int& p) {
    std::vector<int> betti;
    for (int d = cc.min_degree(); d <= cc.top_degree(); ++d) {
        int dim = cc.rank_at(d);
        int out_rank = matrix_rank_mod_p(cc.boundary_from(d), p);
        int in_rank = matrix_rank_mod_p(cc.boundary_from(d + 1), p);
        betti.push_back(dim - out_rank - in_rank);
    }
    return betti;
}

HomologySummary integral_homology(const ChainComplex& cc) {
    HomologySummary h;
    h.min_degree = cc.min_degree();
    std::vector<int> ranks;      // rank of boundary leaving each degree
    std::vector<std::vector<Int>> factors;  // invariant factors of that boundary
    for (int d = cc.min_degree(); d <= cc.top_degree() + 1; ++d) {
        std::vector<Int> s = invariant_factors(cc.boundary_from(d));
        ranks.push_back(static_cast<int>(s.size()));
        factors.push_back(std::move(s));
    }
    Int euler_free = 0, euler_dim = 0;
    for (int d = cc.min_degree(); d <= cc.top_degree(); ++d) {
        std::size_t i = static_cast<std::size_t>(d - cc.min_degree());
        int free = cc.rank_at(d) - ranks[i] - ranks[i + 1];
        std::vector<Int> tors;
        for (const Int& f : factors[i + 1])
            if (f > 1) tors.push_back(f);
        h.free_rank.push_back(free);
        h.torsion.push_back(std::move(tors));
        int sign = (d % 2 == 0) ? 1 : -1;
        euler_free += sign * free;
        euler_dim += sign * cc.rank_at(d);
    }
    if (euler_free != euler_dim)
        throw ComputationMismatch("complex " + cc.name() + ": Euler identity violated");
    return h;
}

ChainComplex weighted_hocolim_complex(const LieType& type, Parity parity) {
    const int n = type.rank;
    if (parity == Parity::odd) {
        std::vector<std::vector<std::string>> bases(static_cast<std::size_t>(n + 1));
        bases[static_cast<std::size_t>(n)] = {"u(top)"};
        std::vector<IntegerMatrix> boundaries;
        for (int d = 0; d < n; ++d)
            boundaries.emplace_back(0, d + 1 == n ? 1 : 0);
        return ChainComplex(type.name() + " weighted odd", 0, std::move(bases),
                            std::move(boundaries));
    }

    const AlcoveComplex alcove = full_alcove(type);
    std::vector<std::vector<FaceMask>> by_dim(static_cast<std::size_t>(n + 1));
    for (const auto& f : alcove.faces()) by_dim[static_cast<std::size_t>(f.dim())].push_back(f.white);

    std::vector<std::vector<std::string>> bases;
    for (const auto& level : by_dim) {
        std::vector<std::string> labels;
        for (FaceMask m : level) labels.push_back("u(" + alcove.face_name(m) + ")");
        bases.push_back(std::move(labels));
    }

    std::vector<IntegerMatrix> boundaries;
    for (int d = 1; d <= n; ++d) {
        const auto& lower = by_dim[static_cast<std::size_t>(d - 1)];
        const auto& upper = by_dim[static_cast<std::size_t>(d)];
        std::map<FaceMask, int> row_of;
        for (std::size_t i = 0; i < lower.size(); ++i) row_of[lower[i]] = static_cast<int>(i);
        IntegerMatrix b(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
        for (std::size_t col = 0; col < upper.size(); ++col) {
            const Int& upper_order = alcove.find(upper[col])->cached_order;
            auto vs = mask_vertices(upper[col]);
            for (std::size_t pos = 0; pos < vs.size(); ++pos) {
                FaceMask sub = upper[col] & ~(FaceMask(1) << (vs[pos] - 1));
                const Int& sub_order = alcove.find(sub)->cached_order;
                Int weight = sub_order / upper_order;
                b.at(row_of.at(sub), static_cast<int>(col)) = (pos % 2 == 0) ? weight : -weight;
            }
        }
        boundaries.push_back(std::move(b));
    }
    return ChainComplex(type.name() + " weighted even", 0, std::move(bases),
                        std::move(boundaries));
}

namespace {

struct LocalRetry {};  // the modulus p^m was too coarse to see every factor

long long mul_mod(long long a, long long b, long long m) {
    return static_cast<long long>(static_cast<unsigned __int128>(a) * static_cast<unsigned long long>(b) %
                                  static_cast<unsigned long long>(m));
}

Int mul_mod(const Int& a, const Int& b, const Int& m) { return a * b % m; }

/* u^(phi(p^m) - 1), the inverse of a unit in Z/p^m. */
template <typename Word>
Word unit_inverse(Word u, Word p, Word pm) {
    Word exponent = pm / p * (p - 1) - 1;
    Word base = u % pm;
    Word out = 1;
    while (exponent > 0) {
        if (exponent % 2 == 1) out = mul_mod(out, base, pm);
        base = mul_mod(base, base, pm);
        exponent /= 2;
    }
    return out;
}

/* Valuations of the invariant factors of `a` at the prime p, from Gaussian
 * elimination over the chain ring Z/p^m (every division below is exact in
 * that ring, so entries stay reduced and never swell).  expected_rank is the
 * rank over Q, established separately by the caller; factors the modulus
 * cannot resolve trigger LocalRetry. */
template <typename Word>
std::vector<int> local_valuations_impl(const IntegerMatrix& a, Word p, int m, int expected_rank) {
    Word pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    const int rows = a.rows, cols = a.cols;
    std::vector<Word> w(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Int v = a.at(i, j) % Int(pm);
            if (v < 0) v += Int(pm);
            w[static_cast<std::size_t>(i) * cols + j] = v.convert_to<Word>();
        }
    auto at = [&](int i, int j) -> Word& { return w[static_cast<std::size_t>(i) * cols + j]; };
    auto valuation_of = [&](Word x) {
        if (x == 0) return m;
        int v = 0;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return v;
    };
    std::vector<int> out;
    const int bound = std::min(rows, cols);
    for (int t = 0; t < bound; ++t) {
        int pi = -1, pj = -1, pv = m;
        for (int i = t; i < rows && pv > 0; ++i)
            for (int j = t; j < cols; ++j) {
                int v = valuation_of(at(i, j));
                if (v < pv) {
                    pv = v;
                    pi = i;
                    pj = j;
                    if (pv == 0) break;
                }
            }
        if (pv == m) break;  // submatrix vanishes in the ring
        if (static_cast<int>(out.size()) == expected_rank)
            throw ComputationMismatch("local elimination found more pivots than the rank allows");
        if (pi != t)
            for (int j = t; j < cols; ++j) std::swap(at(t, j), at(pi, j));
        if (pj != t)
            for (int i = t; i < rows; ++i) std::swap(at(i, t), at(i, pj));
        Word unit = at(t, t);
        for (int s = 0; s < pv; ++s) unit /= p;
        Word inv = unit_inverse(unit, p, pm);
        Word shift = 1;
        for (int s = 0; s < pv; ++s) shift *= p;
        for (int i = t + 1; i < rows; ++i) {
            if (at(i, t) == 0) continue;
            Word q = mul_mod(at(i, t) / shift, inv, pm);
            for (int j = t; j < cols; ++j) {
                Word delta = mul_mod(q, at(t, j), pm);
                at(i, j) = (at(i, j) + pm - delta) % pm;
            }
        }
        for (int j = t + 1; j < cols; ++j) {
            if (at(t, j) == 0) continue;
            Word q = mul_mod(at(t, j) / shift, inv, pm);
            for (int i = t; i < rows; ++i) {
                Word delta = mul_mod(q, at(i, t), pm);
                at(i, j) = (at(i, j) + pm - delta) % pm;
            }
        }
        out.push_back(pv);
    }
    if (static_cast<int>(out.size()) != expected_rank) throw LocalRetry{};
    return out;
}

std::vector<int> local_valuations(const IntegerMatrix& a, const Int& p, int expected_rank) {
    for (int m = 16; m <= 1 << 14; m *= 2) {
        try {
            Int pm = 1;
            for (int i = 0; i < m; ++i) pm *= p;
            if (pm < (Int(1) << 61))
                return local_valuations_impl<long long>(a, p.convert_to<long long>(), m, expected_rank);
            return local_valuations_impl<Int>(a, p, m, expected_rank);
        } catch (const LocalRetry&) {
        }
    }
    throw ComputationMismatch("invariant factor valuations exceed every tried modulus");
}

}  // namespace

HomologySummary weighted_homology_even(const LieType& type) {
    const int n = type.rank;
    const GroupFacts facts = catalog_facts(type);
    const ChainComplex weighted = weighted_hocolim_complex(type, Parity::even);
    const AlcoveComplex alcove = full_alcove(type);
    const ChainComplex simplex = simplicial_chain_complex(alcove, false);

    std::vector<std::vector<Int>> level_orders(static_cast<std::size_t>(n + 1));
    for (const Face& f : alcove.faces()) {
        if (facts.weyl_order % f.cached_order != 0)
            throw ComputationMismatch(type.name() + ": face order does not divide the Weyl order");
        level_orders[static_cast<std::size_t>(f.dim())].push_back(f.cached_order);
    }

    std::vector<Int> primes;
    {
        Int rest = facts.weyl_order;
        for (Int q = 2; q * q <= rest; ++q)
            if (rest % q == 0) {
                primes.push_back(q);
                while (rest % q == 0) rest /= q;
            }
        if (rest > 1) primes.push_back(rest);
    }

    std::vector<int> ranks;                  // rank of the boundary leaving each level
    std::vector<std::vector<Int>> factors;   // its invariant factors
    for (int d = 0; d <= n + 1; ++d) {
        IntegerMatrix b = weighted.boundary_from(d);
        IntegerMatrix s = simplex.boundary_from(d);
        if (b.rows != s.rows || b.cols != s.cols)
            throw ComputationMismatch(type.name() + ": weighted and simplex level shapes differ");
        if (d >= 1 && d <= n) {
            const auto& upper = level_orders[static_cast<std::size_t>(d)];
            const auto& lower = level_orders[static_cast<std::size_t>(d - 1)];
            for (int i = 0; i < b.rows; ++i)
                for (int j = 0; j < b.cols; ++j)
                    if (b.at(i, j) * upper[static_cast<std::size_t>(j)] !=
                        lower[static_cast<std::size_t>(i)] * s.at(i, j))
                        throw ComputationMismatch(type.name() + ": weighted boundary is not the order-scaled simplex boundary");
        }
        std::vector<Int> reference = invariant_factors(s);
        for (const Int& one : reference)
            if (one != 1)
                throw ComputationMismatch(type.name() + ": simplex boundary is not unimodularly trivial");
        int rank = static_cast<int>(reference.size());
        std::vector<std::vector<int>> valuations;
        for (const Int& p : primes) valuations.push_back(local_valuations(b, p, rank));
        std::vector<Int> diag(static_cast<std::size_t>(rank), Int(1));
        for (std::size_t pi = 0; pi < primes.size(); ++pi)
            for (int i = 0; i < rank; ++i)
                for (int e = 0; e < valuations[pi][static_cast<std::size_t>(i)]; ++e)
                    diag[static_cast<std::size_t>(i)] *= primes[pi];
        ranks.push_back(rank);
        factors.push_back(std::move(diag));
    }

    HomologySummary h;
    h.min_degree = 0;
    Int euler_free = 0, euler_dim = 0;
    for (int d = 0; d <= n; ++d) {
        std::size_t i = static_cast<std::size_t>(d);
        int free = weighted.rank_at(d) - ranks[i] - ranks[i + 1];
        std::vector<Int> tors;
        for (const Int& f : factors[i + 1])
            if (f > 1) tors.push_back(f);
        h.free_rank.push_back(free);
        h.torsion.push_back(std::move(tors));
        int sign = (d % 2 == 0) ? 1 : -1;
        euler_free += sign * free;
        euler_dim += sign * weighted.rank_at(d);
    }
    if (euler_free != euler_dim)
        throw ComputationMismatch(type.name() + " weighted: Euler identity violated");
    return h;
}

std::string homology_group_name(int free_rank, const std::vector<Int>& torsion) {
    if (free_rank == 0 && torsion.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank == 1) {
        out << "Z";
        first = false;
    } else if (free_rank > 1) {
        out << "Z^" << free_rank;
        first = false;
    }
    for (const Int& factor : torsion) {
        if (!first) out << "+";
        out << "Z/" << factor;
        first = false;
    }
    return out.str();
}

}  // namespace commhom
