#pragma once
// Shared randomized-construction helpers for the test suites: random
// relabelings carried onto oriented complexes and move chains, random
// 2-spheres grown by bistellar moves, and random closed loops in the move
// graph (a random walk closed through the canonical reductions of its two
// endpoints plus the label bridge).

#include <map>
#include <random>
#include <string>
#include <vector>

#include "pclass/builders.hpp"
#include "pclass/chains.hpp"
#include "pclass/cycles.hpp"
#include "pclass/moves.hpp"
#include "pclass/permutation.hpp"

namespace pclass::testing {

/// Parity of the permutation sorting `img` ascending: +1 even, -1 odd.
inline int sort_parity(const std::vector<Vertex>& img) {
    int inv = 0;
    for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = i + 1; j < img.size(); ++j)
            if (img[i] > img[j]) ++inv;
    return inv % 2 ? -1 : +1;
}

inline Simplex map_simplex(const Simplex& s, const Permutation& p) {
    std::vector<Vertex> img;
    for (Vertex v : s.vertices()) img.push_back(static_cast<Vertex>(p(v)));
    return Simplex(img);
}

/// Relabels an oriented complex, correcting each facet sign by the parity
/// of the sort that restores canonical vertex order.
inline OrientedComplex relabel_oriented(const OrientedComplex& L,
                                        const Permutation& p) {
    std::map<Vertex, Vertex> f;
    for (Vertex v : L.complex.vertices()) f[v] = static_cast<Vertex>(p(v));
    SimplicialComplex cx = L.complex.relabeled(f);
    OrientedComplex out{cx, std::vector<int>(cx.facets().size(), 0)};
    for (const Simplex& fac : L.complex.facets()) {
        std::vector<Vertex> img;
        for (Vertex v : fac.vertices()) img.push_back(static_cast<Vertex>(p(v)));
        Simplex sim(img);
        int par = sort_parity(img);
        const auto& fs = cx.facets();
        for (std::size_t i = 0; i < fs.size(); ++i)
            if (fs[i] == sim) {
                out.signs[i] = L.sign_of(fac) * par;
                break;
            }
    }
    return out;
}

/// Applies one relabeling to a whole chain (start state and every move).
inline MoveChain relabel_moves(const MoveChain& c, const Permutation& p) {
    MoveChain out(relabel_oriented(c.states.front(), p));
    for (const BistellarMove& m : c.moves)
        out.push(BistellarMove{map_simplex(m.sigma, p), map_simplex(m.tau, p)});
    return out;
}

/// Uniform random permutation of {1..n}.
inline Permutation random_perm(std::mt19937& rng, int n) {
    std::vector<int> img(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i)] = i;
    for (int i = n; i > 1; --i)
        std::swap(img[static_cast<std::size_t>(i)],
                  img[static_cast<std::size_t>(1 + static_cast<int>(rng() % i))]);
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::string s;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<std::size_t>(i)] || img[static_cast<std::size_t>(i)] == i)
            continue;
        s += "(";
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            s += std::to_string(j);
            j = img[static_cast<std::size_t>(j)];
            if (!seen[static_cast<std::size_t>(j)]) s += " ";
        }
        s += ")";
    }
    if (s.empty()) return Permutation::identity(n);
    return Permutation::from_cycles(n, s);
}

/// Random labeled oriented 2-sphere: grow a tetrahedron boundary to `nv`
/// vertices by random subdivisions, then shuffle with random edge flips.
inline OrientedComplex random_2sphere(std::mt19937& rng, int nv,
                                      int extra_flips) {
    OrientedComplex L0 = *orient(build_boundary_simplex(3));
    MoveChain c(L0);
    while (static_cast<int>(c.end().complex.vertices().size()) < nv) {
        std::vector<BistellarMove> ins;
        for (auto& m : enumerate_moves(c.end().complex))
            if (m.is_placeholder()) ins.push_back(m);
        c.push(ins[rng() % ins.size()]);
    }
    for (int i = 0; i < extra_flips; ++i) {
        std::vector<BistellarMove> flips;
        for (auto& m : enumerate_moves(c.end().complex))
            if (m.sigma.size() == 2) flips.push_back(m);
        if (flips.empty()) break;
        c.push(flips[rng() % flips.size()]);
    }
    return c.end();
}

/// Random 3-sphere grown the same way (subdivisions of a 4-simplex
/// boundary followed by random 3-dimensional moves that keep the vertex
/// count in a band around `nv`).
inline OrientedComplex random_3sphere(std::mt19937& rng, int nv,
                                      int extra_moves) {
    OrientedComplex L0 = *orient(build_boundary_simplex(4));
    MoveChain c(L0);
    while (static_cast<int>(c.end().complex.vertices().size()) < nv) {
        std::vector<BistellarMove> ins;
        for (auto& m : enumerate_moves(c.end().complex))
            if (m.is_placeholder()) ins.push_back(m);
        c.push(ins[rng() % ins.size()]);
    }
    for (int i = 0; i < extra_moves; ++i) {
        auto ms = enumerate_moves(c.end().complex);
        std::vector<BistellarMove> ok;
        int cur = static_cast<int>(c.end().complex.vertices().size());
        for (auto& m : ms) {
            if (m.is_placeholder() && cur >= nv + 2) continue;
            if (m.sigma.size() == 1 && cur <= 6) continue;
            ok.push_back(m);
        }
        if (ok.empty()) break;
        c.push(ok[rng() % ok.size()]);
    }
    return c.end();
}

/// Random closed loop of 2-sphere moves: a random walk from a random
/// sphere, closed through the canonical reductions of both endpoints and
/// the relabeling bridge between the resulting tetrahedron boundaries.
inline MoveChain random_loop(std::mt19937& rng, int nv, int walk_len) {
    OrientedComplex L = random_2sphere(rng, nv, 4);
    MoveChain w(L);
    for (int i = 0; i < walk_len; ++i) {
        auto ms = enumerate_moves(w.end().complex);
        std::vector<BistellarMove> ok;
        int cur = static_cast<int>(w.end().complex.vertices().size());
        for (auto& m : ms) {
            if (m.is_placeholder() && cur >= nv + 2) continue;
            if (m.sigma.size() == 1 && cur <= 5) continue;
            ok.push_back(m);
        }
        w.push(ok[rng() % ok.size()]);
    }
    MoveChain ka = canonical_kappa(L);
    MoveChain kb = canonical_kappa(w.end());
    MoveChain zeta = relabel_chain(kb.end(), ka.end());
    return w.then(kb).then(zeta).then(ka.reversed());
}

}  // namespace pclass::testing
