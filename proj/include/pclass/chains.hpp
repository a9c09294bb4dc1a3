#pragma once

#include <cstdint>
#include <set>

#include "pclass/moves.hpp"

namespace pclass {

/** A validated sequence of bistellar moves on labeled oriented spheres.
 *  Every intermediate state is kept: states[0] is the start and
 *  states[i+1] = moves[i] applied to states[i].  Orientations are
 *  transported move by move.  */
struct MoveChain {
    std::vector<BistellarMove> moves;
    std::vector<OrientedComplex> states;  // size moves.size() + 1
    std::set<Vertex> label_scope;         // every label ever present

    explicit MoveChain(OrientedComplex start);
    MoveChain() = default;

    const OrientedComplex& start() const { return states.front(); }
    const OrientedComplex& end() const { return states.back(); }
    std::size_t length() const { return moves.size(); }

    /** Applies `m` to the current end state and appends it.  Placeholder
     *  0-moves get the smallest positive label never used in this chain.
     *  Returns the move as recorded (placeholder resolved).  */
    const BistellarMove& push(BistellarMove m);

    /** The reverse traversal: inverted moves in opposite order. */
    MoveChain reversed() const;

    /** Concatenation; `next` must start exactly (labels, facets and signs)
     *  where this chain ends.  */
    MoveChain then(const MoveChain& next) const;

    /** One `move <kind> sigma=... tau=...` line per move. */
    std::string trace() const;
};

/** Options controlling the 3-sphere reduction heuristic. */
struct ReduceOptions {
    std::uint64_t seed = 0;          ///< mixed with the input sphere's hash
    std::size_t budget = 100000;     ///< maximum applied moves
};

/** Reduces a labeled oriented 3-sphere to the 5-vertex boundary of the
 *  4-simplex, recording the chain.  Greedy descent (vertex removals first,
 *  then edge-count reduction) with seeded random escapes on stall; the
 *  randomness is a deterministic function of the labeled input and the
 *  seed.  Throws ReductionStalled when the budget is exhausted, which is
 *  also the only sign that the input was not a 3-sphere.  */
MoveChain reduce_3sphere(const OrientedComplex& L, const ReduceOptions& opt = {});

/** The canonical reduction of a labeled 2-sphere to a 4-vertex
 *  tetrahedron boundary: repeatedly applies the lexicographically first
 *  complexity-decreasing move, ordering candidates by kind (vertex
 *  removal before edge flip) and then by the sorted σ tuple.  A pure
 *  function of the labeled input.  */
MoveChain canonical_kappa(const OrientedComplex& L);

/** A chain between two labeled tetrahedron boundaries that changes one
 *  label at a time using a three-move splice (add the new label over a
 *  facet, flip, remove the old label).  All intermediate spheres have at
 *  most five vertices, so the chain never contributes to cocycle values.
 */
MoveChain relabel_chain(const OrientedComplex& d1, const OrientedComplex& d2);

}  // namespace pclass
