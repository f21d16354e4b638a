#include "commhom/morse.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "commhom/errors.hpp"

namespace commhom {

bool MorseCertificate::certifies_collapse(const AlcoveComplex& c) const {
    if (!is_partial_matching || !is_acyclic || critical.size() != 1) return false;
    return std::popcount(critical.front()) == 1 && c.contains(critical.front());
}

namespace {

std::vector<FaceMask> facets_of(FaceMask sigma) {
    std::vector<FaceMask> out;
    FaceMask rest = sigma;
    while (rest) {
        FaceMask bit = rest & (~rest + 1);
        if (sigma != bit) out.push_back(sigma ^ bit);
        rest ^= bit;
    }
    return out;
}

}  // namespace

std::vector<std::pair<FaceMask, FaceMask>> modified_hasse_edges(const AlcoveComplex& c, const Matching& m) {
    std::map<FaceMask, FaceMask> up;
    for (const auto& [sigma, tau] : m.pairs) up[tau] = sigma;
    std::vector<std::pair<FaceMask, FaceMask>> edges;
    for (const Face& face : c.faces())
        for (FaceMask facet : facets_of(face.white)) {
            auto matched = up.find(facet);
            if (matched != up.end() && matched->second == face.white)
                edges.emplace_back(facet, face.white);
            else
                edges.emplace_back(face.white, facet);
        }
    return edges;
}

MorseCertificate validate_matching(const AlcoveComplex& c, const Matching& m) {
    MorseCertificate cert;
    std::map<FaceMask, int> appearances;
    bool shape_ok = true;
    for (const auto& [sigma, tau] : m.pairs) {
        if (!c.contains(sigma)) throw UnknownFace("matched face " + c.face_name(sigma) + " is not in the complex");
        if (!c.contains(tau)) throw UnknownFace("matched face " + c.face_name(tau) + " is not in the complex");
        ++appearances[sigma];
        ++appearances[tau];
        if ((tau & ~sigma) != 0 || std::popcount(sigma) != std::popcount(tau) + 1) shape_ok = false;
    }
    for (const auto& [face, count] : appearances)
        if (count > 1) shape_ok = false;
    cert.is_partial_matching = shape_ok;
    if (!shape_ok) return cert;

    for (const Face& face : c.faces())
        if (!appearances.count(face.white)) cert.critical.push_back(face.white);

    std::map<FaceMask, std::vector<FaceMask>> out_edges;
    for (const auto& [from, to] : modified_hasse_edges(c, m)) out_edges[from].push_back(to);
    std::map<FaceMask, int> color;  // 0 unseen, 1 on stack, 2 done
    bool cycle = false;
    for (const Face& face : c.faces()) {
        if (color[face.white] != 0 || cycle) continue;
        std::vector<std::pair<FaceMask, std::size_t>> stack{{face.white, 0}};
        color[face.white] = 1;
        while (!stack.empty() && !cycle) {
            auto& [node, next] = stack.back();
            const auto& targets = out_edges[node];
            if (next == targets.size()) {
                color[node] = 2;
                stack.pop_back();
                continue;
            }
            FaceMask target = targets[next++];
            if (color[target] == 1) cycle = true;
            else if (color[target] == 0) {
                color[target] = 1;
                stack.emplace_back(target, 0);
            }
        }
        if (cycle) break;
    }
    cert.is_acyclic = !cycle;
    return cert;
}

std::optional<int> cone_apex(const AlcoveComplex& c) {
    if (c.empty()) return std::nullopt;
    for (int v = 1; v <= c.vertex_count(); ++v) {
        FaceMask bit = FaceMask(1) << (v - 1);
        bool apex = true;
        for (const Face& face : c.faces())
            if (!c.contains(face.white | bit)) {
                apex = false;
                break;
            }
        if (apex) return v;
    }
    return std::nullopt;
}

namespace {

struct CollapseSearch {
    std::vector<FaceMask> order;           // all faces, smallest-first
    std::map<FaceMask, std::size_t> index;
    std::vector<char> alive;
    std::size_t alive_count = 0;
    std::uint64_t budget;
    std::uint64_t used = 0;
    std::vector<std::pair<FaceMask, FaceMask>> chosen;

    explicit CollapseSearch(const AlcoveComplex& c, std::uint64_t limit) : budget(limit) {
        for (const Face& face : c.faces()) {
            index[face.white] = order.size();
            order.push_back(face.white);
        }
        alive.assign(order.size(), 1);
        alive_count = order.size();
    }

    std::vector<FaceMask> live_cofaces(FaceMask tau) const {
        std::vector<FaceMask> out;
        for (std::size_t i = index.at(tau) + 1; i < order.size(); ++i)
            if (alive[i] && (tau & ~order[i]) == 0 && order[i] != tau) out.push_back(order[i]);
        return out;
    }

    bool run() {
        if (used++ >= budget) return false;
        if (alive_count == 1) {
            for (std::size_t i = 0; i < order.size(); ++i)
                if (alive[i]) return std::popcount(order[i]) == 1;
            return false;
        }
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (!alive[i]) continue;
            std::vector<FaceMask> cofaces = live_cofaces(order[i]);
            if (cofaces.size() != 1) continue;
            FaceMask tau = order[i];
            FaceMask sigma = cofaces.front();
            alive[i] = 0;
            alive[index.at(sigma)] = 0;
            alive_count -= 2;
            chosen.emplace_back(sigma, tau);
            if (run()) return true;
            chosen.pop_back();
            alive[i] = 1;
            alive[index.at(sigma)] = 1;
            alive_count += 2;
            if (used >= budget) return false;
        }
        return false;
    }
};

}  // namespace

std::optional<Matching> collapsibility_search(const AlcoveComplex& c, std::uint64_t budget) {
    if (c.empty()) return std::nullopt;
    CollapseSearch search(c, budget);
    if (!search.run()) return std::nullopt;
    return Matching{search.chosen};
}

Matching read_matching(std::istream& in, const AlcoveComplex& c) {
    Matching m;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string first, second;
        if (!(fields >> first) || first[0] == '#') continue;
        if (!(fields >> second)) throw UsageError("matching line needs two faces: " + line);
        m.pairs.emplace_back(c.parse_face_name(first), c.parse_face_name(second));
    }
    return m;
}

void write_matching(std::ostream& out, const AlcoveComplex& c, const Matching& m) {
    for (const auto& [sigma, tau] : m.pairs) out << c.face_name(sigma) << ' ' << c.face_name(tau) << '\n';
}

}  // namespace commhom
