#include "pclass/moves.hpp"

#include <algorithm>
#include <sstream>

#include "pclass/errors.hpp"

namespace pclass {

std::string BistellarMove::str() const {
    std::ostringstream os;
    os << "move sigma=" << sigma << " tau=" << tau;
    return os.str();
}

SimplicialComplex simplex_boundary(const Simplex& s) {
    std::vector<Simplex> facets;
    for (Vertex v : s) facets.push_back(s.without_vertex(v));
    if (facets.empty())
        throw std::invalid_argument("simplex_boundary: empty simplex");
    return SimplicialComplex::from_facets(std::move(facets));
}

bool is_applicable(const SimplicialComplex& L, const BistellarMove& m) {
    // |σ| + |τ| = dim + 2 exactly: σ ∗ ∂τ and ∂σ ∗ τ are both dim-balls.
    if (m.sigma.dim() + m.tau.dim() != L.dim()) return false;
    if (m.is_placeholder())
        return m.sigma.dim() == L.dim() && L.has_facet(m.sigma);
    if (m.sigma.intersects(m.tau)) return false;
    if (L.has_face(m.tau)) return false;
    if (!L.has_face(m.sigma)) return false;
    return L.link(m.sigma) == simplex_boundary(m.tau);
}

std::vector<BistellarMove> enumerate_moves(const SimplicialComplex& L) {
    std::vector<BistellarMove> out;
    const int n = L.dim();
    // 0-moves: one per facet, with the placeholder vertex.
    for (const Simplex& f : L.facets())
        out.push_back(BistellarMove{f, Simplex{0}, L.fingerprint()});
    // Higher moves: σ ranges over faces of dimension < n; its link must be
    // the boundary of a missing simplex.
    for (int d = 0; d < n; ++d) {
        for (const Simplex& s : L.faces(d)) {
            SimplicialComplex lk = L.link(s);
            // ∂τ has dim τ facets of dimension dim τ - 1, on dim τ + 1
            // vertices; check the shape cheaply before comparing.
            std::vector<Vertex> lkverts = lk.vertices();
            if (lkverts.size() != static_cast<std::size_t>(n - d + 1))
                continue;
            Simplex tau{std::vector<Vertex>(lkverts.begin(), lkverts.end())};
            if (L.has_face(tau)) continue;
            if (lk == simplex_boundary(tau))
                out.push_back(BistellarMove{s, tau, L.fingerprint()});
        }
    }
    return out;
}

SimplicialComplex apply_move(const SimplicialComplex& L,
                             const BistellarMove& m) {
    if (m.is_placeholder())
        throw NotApplicable("apply_move: unresolved placeholder vertex");
    if (!is_applicable(L, m))
        throw NotApplicable("apply_move: " + m.str() + " is not applicable");
    std::vector<Simplex> facets = L.facets();
    // Remove σ ∗ ∂τ: the facets containing σ whose remainder lies in τ.
    std::erase_if(facets, [&m](const Simplex& f) {
        return f.contains_all(m.sigma) && m.tau.contains_all(f.minus(m.sigma));
    });
    // Add τ ∗ ∂σ.
    if (m.sigma.size() == 1) {
        facets.push_back(m.tau);
    } else {
        for (Vertex v : m.sigma)
            facets.push_back(m.sigma.without_vertex(v).join(m.tau));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

OrientedComplex apply_move(const OrientedComplex& L, const BistellarMove& m) {
    SimplicialComplex after = apply_move(L.complex, m);
    // Re-orient and match the sign of some facet untouched by the move.
    std::optional<OrientedComplex> oriented = orient(after);
    PCLASS_CHECK(oriented.has_value(),
                 "apply_move: result must stay orientable");
    for (std::size_t i = 0; i < after.facets().size(); ++i) {
        const Simplex& f = after.facets()[i];
        if (!L.complex.has_facet(f)) continue;
        // f survived the move; align the global sign with it.  The
        // untouched region (sphere minus the replaced ball) is connected,
        // so one anchor suffices.
        if (oriented->signs[i] != L.sign_of(f)) return oriented->reversed();
        return *oriented;
    }
    throw InternalError("apply_move: no untouched anchor facet");
}

std::string Complexity::str() const {
    std::ostringstream os;
    os << sixths / 6;
    switch (sixths % 6) {
        case 0: break;
        case 1: os << "+1/6"; break;
        case 2: os << "+1/3"; break;
        case 3: os << "+1/2"; break;
        case 4: os << "+2/3"; break;
        case 5: os << "+5/6"; break;
    }
    return os.str();
}

Complexity sphere_complexity(const SimplicialComplex& L) {
    std::vector<Vertex> verts = L.vertices();
    int mindeg = 1 << 30;
    for (Vertex v : verts) mindeg = std::min(mindeg, L.vertex_degree(v));
    const int k = static_cast<int>(verts.size());
    if (mindeg <= 3) return Complexity::whole(k);
    if (mindeg == 4) return Complexity::thirds(k, 1);
    return Complexity::thirds(k, 2);
}

Complexity move_complexity(const BistellarMove& m, const SimplicialComplex& L1,
                           const SimplicialComplex& L2) {
    (void)m;
    Complexity a1 = sphere_complexity(L1);
    Complexity a2 = sphere_complexity(L2);
    if (a1 == a2) return Complexity{a1.sixths + 1};
    return std::max(a1, a2);
}

InducedMove induced_move(const BistellarMove& m, Vertex v) {
    const bool in_sigma = m.sigma.contains(v);
    const bool in_tau = m.tau.contains(v);
    if (!in_sigma && !in_tau) return {InducedKind::Identity, {}};
    if (in_sigma && m.sigma.size() == 1)
        return {InducedKind::Death, m};  // link(v) was ∂τ and disappears
    if (in_tau && m.tau.size() == 1)
        return {InducedKind::Birth, m};  // link(v) appears as ∂σ
    if (in_sigma)
        return {InducedKind::Move,
                BistellarMove{m.sigma.without_vertex(v), m.tau, 0}};
    return {InducedKind::Move,
            BistellarMove{m.sigma, m.tau.without_vertex(v), 0}};
}

bool is_essential(const BistellarMove& m, const SimplicialComplex& L1,
                  const SimplicialComplex& L2) {
    // A move is inessential iff it is equivalent to its inverse, i.e. some
    // isomorphism L1 → L2 maps σ to τ (its own inverse then maps τ back to
    // σ).  This needs dim σ = dim τ, so only edge flips qualify.
    if (m.sigma.dim() != m.tau.dim()) return true;
    std::vector<Vertex> sv(m.sigma.begin(), m.sigma.end());
    std::vector<Vertex> tv(m.tau.begin(), m.tau.end());
    std::sort(tv.begin(), tv.end());
    do {
        std::map<Vertex, Vertex> pinned;
        for (std::size_t i = 0; i < sv.size(); ++i) pinned[sv[i]] = tv[i];
        if (L1.isomorphism(L2, pinned)) return false;
    } while (std::next_permutation(tv.begin(), tv.end()));
    return true;
}

}  // namespace pclass
