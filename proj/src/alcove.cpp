#include "commhom/alcove.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace commhom {

int Face::dim() const { return std::popcount(white) - 1; }

std::vector<int> mask_vertices(FaceMask m) {
    std::vector<int> out;
    for (int v = 1; m != 0; ++v, m >>= 1)
        if (m & 1u) out.push_back(v);
    return out;
}

FaceMask vertices_mask(const std::vector<int>& vs) {
    FaceMask m = 0;
    for (int v : vs) m |= FaceMask(1) << (v - 1);
    return m;
}

bool face_order_less(FaceMask a, FaceMask b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    while (a != 0 && b != 0) {
        int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

AlcoveComplex::AlcoveComplex(LieType type, int vertex_count, std::vector<Face> faces)
    : type_(type), vertex_count_(vertex_count), faces_(std::move(faces)) {
    std::sort(faces_.begin(), faces_.end(),
              [](const Face& x, const Face& y) { return face_order_less(x.white, y.white); });
}

bool AlcoveComplex::contains(FaceMask m) const { return find(m) != nullptr; }

const Face* AlcoveComplex::find(FaceMask m) const {
    auto it = std::lower_bound(
        faces_.begin(), faces_.end(), m,
        [](const Face& f, FaceMask mm) { return face_order_less(f.white, mm); });
    if (it != faces_.end() && it->white == m) return &*it;
    return nullptr;
}

int AlcoveComplex::dim() const {
    if (faces_.empty()) return -1;
    return faces_.back().dim();
}

std::vector<Int> AlcoveComplex::f_vector() const {
    std::vector<Int> f(static_cast<std::size_t>(dim() + 1), 0);
    for (const auto& face : faces_) ++f[static_cast<std::size_t>(face.dim())];
    return f;
}

std::string AlcoveComplex::face_name(FaceMask m) const {
    std::ostringstream os;
    bool commas = vertex_count_ > 9;
    bool first = true;
    for (int v : mask_vertices(m)) {
        if (!first && commas) os << ",";
        os << v;
        first = false;
    }
    return os.str();
}

FaceMask AlcoveComplex::parse_face_name(const std::string& name) const {
    std::vector<int> vs;
    if (name.find(',') != std::string::npos) {
        std::istringstream is(name);
        std::string tok;
        while (std::getline(is, tok, ',')) vs.push_back(std::stoi(tok));
    } else {
        for (char ch : name) {
            if (ch < '1' || ch > '9')
                throw UsageError("bad face name '" + name + "'");
            vs.push_back(ch - '0');
        }
    }
    for (int v : vs)
        if (v < 1 || v > vertex_count_)
            throw UsageError("face name '" + name + "' uses a vertex outside 1.." +
                             std::to_string(vertex_count_));
    return vertices_mask(vs);
}

bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

SubcomplexSpec make_subcomplex_spec(const LieType& type, const Int& p, int k) {
    if (!is_prime(p)) {
        std::ostringstream os;
        os << "p = " << p << " is not prime";
        throw UsageError(os.str());
    }
    SubcomplexSpec s;
    s.p = p;
    s.r = valuation(catalog_facts(type).weyl_order, p);
    s.vacuous = (s.r == 0);
    if (k < 0 || k > s.r)
        throw UsageError("k = " + std::to_string(k) + " outside 0..r = " +
                         std::to_string(s.r) + " for " + type.name());
    s.k = k;
    return s;
}

namespace {

std::vector<Face> all_faces_with_orders(const LieType& type) {
    const DynkinGraph g = extended_diagram(type);
    const FaceMask all = (FaceMask(1) << g.vertex_count) - 1u;
    std::vector<Face> faces;
    faces.reserve(all);
    for (FaceMask white = 1; white <= all; ++white) {
        ColoredDiagram coloring(g, all & ~white);
        faces.push_back({white, subgroup_order(coloring)});
    }
    return faces;
}

}  // namespace

AlcoveComplex full_alcove(const LieType& type) {
    return AlcoveComplex(type, type.vertex_count(), all_faces_with_orders(type));
}

AlcoveComplex delta_p_k(const LieType& type, const SubcomplexSpec& spec) {
    std::vector<Face> kept;
    for (auto& face : all_faces_with_orders(type))
        if (valuation(face.cached_order, spec.p) >= spec.r - spec.k)
            kept.push_back(std::move(face));
    return AlcoveComplex(type, type.vertex_count(), std::move(kept));
}

AlcoveComplex delta_p_k(const LieType& type, const Int& p, int k) {
    return delta_p_k(type, make_subcomplex_spec(type, p, k));
}

Int euler_characteristic(const AlcoveComplex& c) {
    Int chi = 0;
    for (const auto& face : c.faces())
        chi += (face.dim() % 2 == 0) ? 1 : -1;
    return chi;
}

std::vector<Face> facets(const AlcoveComplex& c) {
    std::vector<Face> out;
    for (const auto& face : c.faces()) {
        bool maximal = true;
        for (const auto& other : c.faces()) {
            if (other.white != face.white &&
                (other.white & face.white) == face.white) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(face);
    }
    return out;
}

namespace {

FaceMask apply_permutation(const VertexPermutation& perm, FaceMask m) {
    FaceMask out = 0;
    for (int v : mask_vertices(m)) out |= FaceMask(1) << (perm[static_cast<std::size_t>(v - 1)] - 1);
    return out;
}

void check_automorphism(const DynkinGraph& g, const VertexPermutation& perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count)
        throw AutomorphismMismatch("permutation has wrong length");
    std::vector<bool> hit(perm.size(), false);
    for (int img : perm) {
        if (img < 1 || img > g.vertex_count || hit[static_cast<std::size_t>(img - 1)])
            throw AutomorphismMismatch("not a permutation of the vertex set");
        hit[static_cast<std::size_t>(img - 1)] = true;
    }
    for (const auto& e : g.edges) {
        int a = perm[static_cast<std::size_t>(e.a - 1)], b = perm[static_cast<std::size_t>(e.b - 1)];
        if (g.edge_multiplicity(a, b) != e.multiplicity)
            throw AutomorphismMismatch("image of edge " + std::to_string(e.a) + "-" +
                                       std::to_string(e.b) + " is not an edge of equal multiplicity");
    }
}

}  // namespace

std::vector<VertexPermutation> default_diagram_symmetries(const LieType& type) {
    const int nv = type.vertex_count();
    VertexPermutation identity(static_cast<std::size_t>(nv));
    for (int v = 1; v <= nv; ++v) identity[static_cast<std::size_t>(v - 1)] = v;
    if (type.family == Family::A && type.rank >= 2) {
        VertexPermutation rot(static_cast<std::size_t>(nv));
        for (int v = 1; v <= nv; ++v) rot[static_cast<std::size_t>(v - 1)] = v % nv + 1;
        return {rot};
    }
    if (type.family == Family::A) {
        // the rank-1 diagram swaps its two vertices
        return {{2, 1}};
    }
    if (type.family == Family::E6) return {{3, 4, 5, 6, 1, 2, 7}};
    return {identity};
}

std::vector<std::map<int, Int>> automorphism_orbits(
    const LieType& type, const AlcoveComplex& c,
    const std::vector<VertexPermutation>& generators) {
    const DynkinGraph g = extended_diagram(type);
    for (const auto& perm : generators) check_automorphism(g, perm);

    // close the generators into the full (small) group
    const int nv = g.vertex_count;
    VertexPermutation identity(static_cast<std::size_t>(nv));
    for (int v = 1; v <= nv; ++v) identity[static_cast<std::size_t>(v - 1)] = v;
    std::set<VertexPermutation> group{identity};
    std::vector<VertexPermutation> frontier{identity};
    while (!frontier.empty()) {
        std::vector<VertexPermutation> next;
        for (const auto& w : frontier)
            for (const auto& gen : generators) {
                VertexPermutation prod(static_cast<std::size_t>(nv));
                for (int v = 1; v <= nv; ++v)
                    prod[static_cast<std::size_t>(v - 1)] =
                        gen[static_cast<std::size_t>(w[static_cast<std::size_t>(v - 1)] - 1)];
                if (group.insert(prod).second) next.push_back(prod);
            }
        frontier = std::move(next);
    }

    std::vector<std::map<int, Int>> table(static_cast<std::size_t>(c.dim() + 1));
    std::set<FaceMask> seen;
    for (const auto& face : c.faces()) {
        if (seen.count(face.white)) continue;
        std::set<FaceMask> orbit;
        for (const auto& w : group) orbit.insert(apply_permutation(w, face.white));
        for (FaceMask m : orbit) {
            if (!c.contains(m))
                throw AutomorphismMismatch(
                    "orbit of face " + c.face_name(face.white) +
                    " leaves the complex; the group does not preserve it");
            seen.insert(m);
        }
        table[static_cast<std::size_t>(face.dim())][static_cast<int>(orbit.size())] +=
            static_cast<int>(orbit.size());
    }
    return table;
}

}  // namespace commhom
