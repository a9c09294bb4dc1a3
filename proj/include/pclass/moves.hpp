#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pclass/complex.hpp"

namespace pclass {

/** A bistellar move on an n-dimensional closed pseudomanifold: replaces the
 *  subcomplex σ ∗ ∂τ by τ ∗ ∂σ, where σ is a face of the complex, τ is a
 *  simplex none of whose faces is missing except τ itself, and
 *  dim σ + dim τ = n + 1.
 *
 *  A 0-move (σ a facet) subdivides σ by a fresh vertex; until the chain
 *  layer picks the concrete label, τ holds the placeholder vertex 0.
 */
struct BistellarMove {
    Simplex sigma;
    Simplex tau;

    /** Fingerprint of the complex the move departs from; 0 when unset.
     *  Lets long chains be validated link-by-link.  */
    std::uint64_t before_fingerprint = 0;

    /** The inverse move (σ and τ swapped); applying it to the result of
     *  this move restores the original complex.  */
    BistellarMove inverted() const {
        return BistellarMove{tau, sigma, 0};
    }

    bool is_placeholder() const {
        return tau.size() == 1 && tau[0] == 0;
    }

    /** Participating vertices σ ∪ τ. */
    Simplex participants() const { return sigma.join(tau); }

    bool operator==(const BistellarMove& o) const {
        return sigma == o.sigma && tau == o.tau;
    }

    std::string str() const;
};

/** The boundary complex of the simplex `s` (all codimension-1 faces); for a
 *  vertex this is the complex containing only the empty simplex.  */
SimplicialComplex simplex_boundary(const Simplex& s);

/** True when `m` may be applied to `L`: σ is a face, τ is not, and
 *  link(σ) = ∂τ.  Placeholder 0-moves are applicable iff σ is a facet.  */
bool is_applicable(const SimplicialComplex& L, const BistellarMove& m);

/** All applicable moves on `L`.  0-moves are emitted once per facet with
 *  the placeholder new vertex.  */
std::vector<BistellarMove> enumerate_moves(const SimplicialComplex& L);

/** Applies the move, returning the new complex.  Throws NotApplicable when
 *  the preconditions fail or the move still carries a placeholder vertex.
 */
SimplicialComplex apply_move(const SimplicialComplex& L,
                             const BistellarMove& m);

/** Oriented variant: the replacement facets are signed so the result is
 *  consistently oriented and agrees with the untouched facets.  */
OrientedComplex apply_move(const OrientedComplex& L, const BistellarMove& m);

/** Complexity values live in (1/6)·ℤ; stored exactly as a count of sixths.
 */
struct Complexity {
    int sixths = 0;

    static Complexity whole(int k) { return Complexity{6 * k}; }
    static Complexity thirds(int k, int extra_thirds) {
        return Complexity{6 * k + 2 * extra_thirds};
    }

    auto operator<=>(const Complexity&) const = default;
    std::string str() const;
};

/** Complexity of a combinatorial 2-sphere: k vertices gives k when some
 *  vertex has degree 3, k + 1/3 when the minimum degree is 4, and k + 2/3
 *  when it is 5 or more.  */
Complexity sphere_complexity(const SimplicialComplex& L);

/** Complexity of a move between 2-spheres: max of the endpoint
 *  complexities, or a(L1) + 1/6 when they are equal.  */
Complexity move_complexity(const BistellarMove& m, const SimplicialComplex& L1,
                           const SimplicialComplex& L2);

/** How a move on a 3-sphere acts on the link of one vertex. */
enum class InducedKind {
    Identity,  ///< v participates in no changed facet
    Move,      ///< a genuine bistellar move on link(v)
    Birth,     ///< v is the created vertex; its link appears as ∂σ
    Death,     ///< v is the removed vertex; its link was ∂τ
};

struct InducedMove {
    InducedKind kind = InducedKind::Identity;
    /** For Move: the move on link(v).  For Birth/Death: sigma/tau hold the
     *  parent move's data (the new link is ∂σ; the dying link was ∂τ).  */
    BistellarMove move;
};

/** The move induced on link(v) by a move on a 3-sphere: drop v from
 *  whichever side contains it.  */
InducedMove induced_move(const BistellarMove& m, Vertex v);

/** A move between 2-spheres is inessential when it is equivalent to its
 *  inverse, i.e. some isomorphism L1 → L2 carries σ to τ.  Only edge flips
 *  can be inessential.  */
bool is_essential(const BistellarMove& m, const SimplicialComplex& L1,
                  const SimplicialComplex& L2);

}  // namespace pclass
