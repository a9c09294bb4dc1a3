#include "pclass/chains.hpp"

#include <random>
#include <sstream>

#include "pclass/errors.hpp"

namespace pclass {

MoveChain::MoveChain(OrientedComplex start) {
    for (Vertex v : start.complex.vertices()) label_scope.insert(v);
    states.push_back(std::move(start));
}

const BistellarMove& MoveChain::push(BistellarMove m) {
    PCLASS_CHECK(!states.empty(), "push on an uninitialized chain");
    const OrientedComplex& cur = states.back();
    if (m.is_placeholder()) {
        Vertex fresh = 1;
        while (label_scope.count(fresh)) ++fresh;
        m.tau = Simplex{fresh};
    }
    m.before_fingerprint = cur.fingerprint();
    states.push_back(apply_move(cur, m));
    for (Vertex v : m.tau) label_scope.insert(v);
    moves.push_back(std::move(m));
    return moves.back();
}

MoveChain MoveChain::reversed() const {
    MoveChain r;
    r.states.assign(states.rbegin(), states.rend());
    r.label_scope = label_scope;
    for (std::size_t i = moves.size(); i-- > 0;) {
        BistellarMove m = moves[i].inverted();
        m.before_fingerprint = states[i + 1].fingerprint();
        r.moves.push_back(std::move(m));
    }
    return r;
}

MoveChain MoveChain::then(const MoveChain& next) const {
    PCLASS_CHECK(end() == next.start(),
                 "chain concatenation endpoints do not match");
    MoveChain r = *this;
    r.moves.insert(r.moves.end(), next.moves.begin(), next.moves.end());
    r.states.insert(r.states.end(), next.states.begin() + 1,
                    next.states.end());
    r.label_scope.insert(next.label_scope.begin(), next.label_scope.end());
    return r;
}

std::string MoveChain::trace() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        const BistellarMove& m = moves[i];
        // Kind by shrinking dimension of σ: on a d-sphere a move with
        // dim σ = d is a vertex insertion (0-move), etc.
        int kind = states[i].complex.dim() - m.sigma.dim();
        os << "move " << kind << " sigma=";
        for (std::size_t k = 0; k < m.sigma.size(); ++k)
            os << (k ? "," : "") << m.sigma[k];
        os << " tau=";
        for (std::size_t k = 0; k < m.tau.size(); ++k)
            os << (k ? "," : "") << m.tau[k];
        os << '\n';
    }
    return os.str();
}

namespace {

/** Applicable vertex-removal moves (σ a single vertex), sorted by σ. */
std::vector<BistellarMove> removal_moves(const SimplicialComplex& L) {
    std::vector<BistellarMove> out;
    const int n = L.dim();
    for (Vertex v : L.vertices()) {
        SimplicialComplex lk = L.link(Simplex{v});
        std::vector<Vertex> lkverts = lk.vertices();
        if (lkverts.size() != static_cast<std::size_t>(n + 1)) continue;
        Simplex tau{lkverts};
        if (L.has_face(tau)) continue;
        if (lk == simplex_boundary(tau))
            out.push_back(BistellarMove{Simplex{v}, tau, 0});
    }
    return out;
}

}  // namespace

MoveChain reduce_3sphere(const OrientedComplex& L, const ReduceOptions& opt) {
    PCLASS_CHECK(L.complex.dim() == 3, "reduce_3sphere needs a 3-complex");
    MoveChain chain(L);
    std::mt19937_64 rng(L.fingerprint() ^
                        (0x9e3779b97f4a7c15ULL * (opt.seed + 1)));
    std::size_t since_progress = 0;
    auto measure = [](const SimplicialComplex& c) {
        return std::make_pair(c.num_vertices(), c.faces(1).size());
    };
    auto best = measure(L.complex);

    while (chain.end().complex.num_vertices() > 5) {
        if (chain.length() >= opt.budget)
            throw ReductionStalled(
                "reduce_3sphere: move budget exhausted; the input may not "
                "be a 3-sphere");
        const SimplicialComplex& cur = chain.end().complex;

        // First preference: remove a vertex (take the least label).
        std::vector<BistellarMove> cands = removal_moves(cur);
        bool random_pick = false;
        if (cands.empty() && since_progress <= 10) {
            // Second preference: kill an edge of degree 3 (σ an edge, τ
            // the missing opposite triangle), lowering the edge count.
            for (const BistellarMove& m : enumerate_moves(cur))
                if (m.sigma.dim() == 1 && m.tau.dim() == 2)
                    cands.push_back(m);
            random_pick = true;
        }
        if (cands.empty()) {
            // Stalled: add a random edge (σ a triangle, τ the new edge) to
            // open fresh kill sites; determinism via the seeded RNG.  If
            // even that is impossible, split a facet with a new vertex.
            for (const BistellarMove& m : enumerate_moves(cur))
                if (m.sigma.dim() == 2 && m.tau.dim() == 1)
                    cands.push_back(m);
            if (cands.empty())
                for (const BistellarMove& m : enumerate_moves(cur))
                    if (m.is_placeholder()) cands.push_back(m);
            PCLASS_CHECK(!cands.empty(),
                         "reduce_3sphere: no moves at all (corrupt input)");
            random_pick = true;
            since_progress = 0;
        }
        std::size_t pick = 0;
        if (random_pick && cands.size() > 1)
            pick = std::uniform_int_distribution<std::size_t>(
                0, cands.size() - 1)(rng);
        chain.push(cands[pick]);

        auto now = measure(chain.end().complex);
        if (now < best) {
            best = now;
            since_progress = 0;
        } else {
            ++since_progress;
        }
    }
    PCLASS_CHECK(chain.end().complex.num_facets() == 5,
                 "reduce_3sphere: 5-vertex 3-sphere must have 5 facets");
    return chain;
}

MoveChain canonical_kappa(const OrientedComplex& L) {
    PCLASS_CHECK(L.complex.dim() == 2, "canonical_kappa needs a 2-sphere");
    MoveChain chain(L);
    while (chain.end().complex.num_vertices() > 4) {
        const SimplicialComplex& cur = chain.end().complex;
        Complexity a = sphere_complexity(cur);

        // Vertex removals first (always complexity-decreasing), by σ.
        std::vector<BistellarMove> cands = removal_moves(cur);
        if (cands.empty()) {
            // Then complexity-decreasing edge flips, by σ.
            for (const BistellarMove& m : enumerate_moves(cur)) {
                if (m.sigma.dim() != 1 || m.tau.dim() != 1) continue;
                if (sphere_complexity(apply_move(cur, m)) < a)
                    cands.push_back(m);
            }
        }
        PCLASS_CHECK(!cands.empty(),
                     "canonical_kappa: no complexity-decreasing move");
        const BistellarMove* best = &cands.front();
        for (const BistellarMove& m : cands)
            if (m.sigma < best->sigma) best = &m;
        Complexity before = sphere_complexity(chain.end().complex);
        chain.push(*best);
        PCLASS_CHECK(sphere_complexity(chain.end().complex) < before,
                     "canonical_kappa: complexity must strictly decrease");
    }
    return chain;
}

MoveChain relabel_chain(const OrientedComplex& d1, const OrientedComplex& d2) {
    PCLASS_CHECK(d1.complex.num_vertices() == 4 && d1.complex.num_facets() == 4,
                 "relabel_chain endpoints must be tetrahedron boundaries");
    PCLASS_CHECK(d2.complex.num_vertices() == 4 && d2.complex.num_facets() == 4,
                 "relabel_chain endpoints must be tetrahedron boundaries");
    MoveChain chain(d1);

    std::vector<Vertex> from = d1.complex.vertices();
    std::vector<Vertex> to = d2.complex.vertices();
    std::vector<Vertex> old_labels, new_labels;
    std::set_difference(from.begin(), from.end(), to.begin(), to.end(),
                        std::back_inserter(old_labels));
    std::set_difference(to.begin(), to.end(), from.begin(), from.end(),
                        std::back_inserter(new_labels));
    PCLASS_CHECK(old_labels.size() == new_labels.size(),
                 "relabel_chain: label sets of unequal size");

    // Splice u2 in over a facet at u1, rotate the shared edge away, then
    // delete u1: three moves realizing the map u1 ↦ u2.
    auto replace = [&chain](Vertex u1, Vertex u2) {
        std::vector<Vertex> others;
        for (Vertex v : chain.end().complex.vertices())
            if (v != u1) others.push_back(v);
        Vertex v1 = others[0], w1 = others[1], z1 = others[2];
        chain.push(BistellarMove{Simplex{u1, v1, w1}, Simplex{u2}, 0});
        chain.push(BistellarMove{Simplex{u1, v1}, Simplex{u2, z1}, 0});
        chain.push(BistellarMove{Simplex{u1}, Simplex{u2, w1, z1}, 0});
    };

    for (std::size_t i = 0; i < old_labels.size(); ++i)
        replace(old_labels[i], new_labels[i]);
    PCLASS_CHECK(chain.end().complex == d2.complex,
                 "relabel_chain: did not arrive at the target labels");

    if (!(chain.end() == d2)) {
        // Arrived with the reversed orientation: the realized vertex map is
        // an odd permutation relative to the target.  Compose with a
        // transposition of two labels, walked through a fresh helper
        // vertex, to flip the transported orientation.
        std::vector<Vertex> vs = d2.complex.vertices();
        Vertex fresh = 1;
        while (chain.label_scope.count(fresh)) ++fresh;
        replace(vs[0], fresh);
        replace(vs[1], vs[0]);
        replace(fresh, vs[1]);
        PCLASS_CHECK(chain.end() == d2,
                     "relabel_chain: orientation correction failed");
    }
    return chain;
}

}  // namespace pclass
