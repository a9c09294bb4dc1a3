#include "pclass/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace pclass {

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> facets) {
    SimplicialComplex cx;
    if (facets.empty()) return cx;
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    cx.dim_ = facets.front().dim();
    for (const Simplex& f : facets)
        if (f.dim() != cx.dim_)
            throw std::invalid_argument(
                "SimplicialComplex: facets of mixed dimension");
    cx.facets_ = std::move(facets);
    return cx;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
    std::vector<Vertex> out;
    for (const Simplex& f : facets_)
        out.insert(out.end(), f.begin(), f.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool SimplicialComplex::has_facet(const Simplex& s) const {
    return std::binary_search(facets_.begin(), facets_.end(), s);
}

bool SimplicialComplex::has_face(const Simplex& s) const {
    if (s.dim() > dim_) return false;
    for (const Simplex& f : facets_)
        if (f.contains_all(s)) return true;
    return false;
}

std::vector<Simplex> SimplicialComplex::faces(int k) const {
    std::set<Simplex> out;
    if (k < 0 || k > dim_) return {};
    // Enumerate k-subsets of each facet.
    const int m = dim_ + 1;
    std::vector<int> idx(static_cast<std::size_t>(k) + 1);
    for (const Simplex& f : facets_) {
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<Vertex> verts;
            verts.reserve(idx.size());
            for (int i : idx) verts.push_back(f[static_cast<std::size_t>(i)]);
            out.insert(Simplex(std::move(verts)));
            // Next combination.
            int i = k;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - (k + 1 - i))
                --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int t = i + 1; t <= k; ++t)
                idx[static_cast<std::size_t>(t)] =
                    idx[static_cast<std::size_t>(t - 1)] + 1;
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Simplex> SimplicialComplex::star_facets(const Simplex& s) const {
    std::vector<Simplex> out;
    for (const Simplex& f : facets_)
        if (f.contains_all(s)) out.push_back(f);
    return out;
}

SimplicialComplex SimplicialComplex::link(const Simplex& s) const {
    std::vector<Simplex> out;
    for (const Simplex& f : facets_)
        if (f.contains_all(s)) out.push_back(f.minus(s));
    return SimplicialComplex::from_facets(std::move(out));
}

std::vector<Vertex> SimplicialComplex::neighbours(Vertex v) const {
    std::vector<Vertex> out;
    for (const Simplex& f : facets_) {
        if (!f.contains(v)) continue;
        for (Vertex w : f)
            if (w != v) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int SimplicialComplex::vertex_degree(Vertex v) const {
    return static_cast<int>(neighbours(v).size());
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
    std::vector<std::int64_t> out;
    for (int k = 0; k <= dim_; ++k)
        out.push_back(static_cast<std::int64_t>(faces(k).size()));
    return out;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
    std::int64_t chi = 0;
    int sign = 1;
    for (std::int64_t fk : f_vector()) {
        chi += sign * fk;
        sign = -sign;
    }
    return chi;
}

namespace {

/** Ridge → indices of incident facets. */
std::unordered_map<Simplex, std::vector<int>, SimplexHash> ridge_incidence(
    const std::vector<Simplex>& facets) {
    std::unordered_map<Simplex, std::vector<int>, SimplexHash> inc;
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (Vertex v : facets[i])
            inc[facets[i].without_vertex(v)].push_back(static_cast<int>(i));
    return inc;
}

}  // namespace

bool SimplicialComplex::is_closed_pseudomanifold() const {
    if (facets_.empty()) return false;
    for (const auto& [ridge, inc] : ridge_incidence(facets_))
        if (inc.size() != 2) return false;
    return is_strongly_connected();
}

bool SimplicialComplex::is_strongly_connected() const {
    if (facets_.empty()) return false;
    std::vector<std::vector<int>> adj(facets_.size());
    for (const auto& [ridge, inc] : ridge_incidence(facets_))
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b) {
                adj[static_cast<std::size_t>(inc[a])].push_back(inc[b]);
                adj[static_cast<std::size_t>(inc[b])].push_back(inc[a]);
            }
    std::vector<char> seen(facets_.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 0;
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        ++count;
        for (int j : adj[static_cast<std::size_t>(i)])
            if (!seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = 1;
                q.push(j);
            }
    }
    return count == facets_.size();
}

namespace {

/** Invariant used to prune the isomorphism search: degree plus the sorted
 *  multiset of neighbour degrees.  */
std::vector<int> vertex_signature(const SimplicialComplex& cx, Vertex v) {
    std::vector<int> sig;
    sig.push_back(cx.vertex_degree(v));
    std::vector<int> nd;
    for (Vertex w : cx.neighbours(v)) nd.push_back(cx.vertex_degree(w));
    std::sort(nd.begin(), nd.end());
    sig.insert(sig.end(), nd.begin(), nd.end());
    return sig;
}

}  // namespace

std::optional<std::map<Vertex, Vertex>> SimplicialComplex::isomorphism(
    const SimplicialComplex& other,
    const std::map<Vertex, Vertex>& pinned) const {
    if (dim_ != other.dim_ || facets_.size() != other.facets_.size())
        return std::nullopt;
    std::vector<Vertex> va = vertices();
    std::vector<Vertex> vb = other.vertices();
    if (va.size() != vb.size()) return std::nullopt;

    std::map<Vertex, std::vector<int>> siga, sigb;
    for (Vertex v : va) siga[v] = vertex_signature(*this, v);
    for (Vertex v : vb) sigb[v] = vertex_signature(other, v);

    // Order source vertices so highly-constrained (rare-signature) ones are
    // assigned first.
    std::map<std::vector<int>, int> freq;
    for (Vertex v : vb) ++freq[sigb[v]];
    std::stable_sort(va.begin(), va.end(), [&](Vertex x, Vertex y) {
        return freq[siga[x]] < freq[siga[y]];
    });

    std::map<Vertex, Vertex> f = pinned;
    std::set<Vertex> used;
    for (const auto& [src, dst] : pinned) {
        if (!std::binary_search(va.begin(), va.end(), src) ||
            siga[src] != sigb[dst] || !used.insert(dst).second)
            return std::nullopt;
    }
    std::erase_if(va, [&](Vertex v) { return pinned.count(v) != 0; });

    // Facets of `other` for membership tests during partial assignment.
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == va.size()) {
            // All vertices mapped; verify the facet bijection.
            for (const Simplex& fac : facets_) {
                std::vector<Vertex> img;
                for (Vertex v : fac) img.push_back(f.at(v));
                if (!other.has_facet(Simplex(std::move(img)))) return false;
            }
            return true;
        }
        Vertex v = va[i];
        for (Vertex w : vb) {
            if (used.count(w) || siga[v] != sigb[w]) continue;
            f[v] = w;
            used.insert(w);
            // Partial consistency: every facet fully mapped so far must land
            // on a facet of `other`.
            bool ok = true;
            for (const Simplex& fac : facets_) {
                if (!fac.contains(v)) continue;
                std::vector<Vertex> img;
                bool complete = true;
                for (Vertex u : fac) {
                    auto it = f.find(u);
                    if (it == f.end()) {
                        complete = false;
                        break;
                    }
                    img.push_back(it->second);
                }
                if (complete && !other.has_facet(Simplex(std::move(img)))) {
                    ok = false;
                    break;
                }
            }
            if (ok && go(i + 1)) return true;
            f.erase(v);
            used.erase(w);
        }
        return false;
    };
    if (go(0)) return f;
    return std::nullopt;
}

SimplicialComplex SimplicialComplex::relabeled(
    const std::map<Vertex, Vertex>& f) const {
    std::vector<Simplex> out;
    out.reserve(facets_.size());
    for (const Simplex& fac : facets_) {
        std::vector<Vertex> img;
        img.reserve(fac.size());
        for (Vertex v : fac) {
            auto it = f.find(v);
            img.push_back(it == f.end() ? v : it->second);
        }
        out.emplace_back(std::move(img));
    }
    return SimplicialComplex::from_facets(std::move(out));
}

std::uint64_t SimplicialComplex::fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ULL;
    };
    mix(static_cast<std::uint64_t>(dim_ + 2));
    for (const Simplex& f : facets_) {
        for (Vertex v : f) mix(static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) + 0x9e3779b97f4a7c15ULL);
        mix(0xabcdef12345ULL);
    }
    return h;
}

}  // namespace pclass
