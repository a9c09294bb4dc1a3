#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pclass/simplex.hpp"

namespace pclass {

/** A finite pure simplicial complex, stored by its facet list (sorted,
 *  duplicate-free).  All structural queries (faces, links, degrees) are
 *  answered from the facet list; nothing is ever re-indexed, so vertex
 *  labels survive every operation unchanged.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /** Builds a complex from facets.  All facets must have the same
     *  dimension; duplicates are rejected.  */
    static SimplicialComplex from_facets(std::vector<Simplex> facets);

    int dim() const { return dim_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    std::size_t num_facets() const { return facets_.size(); }
    bool empty() const { return facets_.empty(); }

    /** Sorted list of all vertex labels that occur in some facet. */
    std::vector<Vertex> vertices() const;
    std::size_t num_vertices() const { return vertices().size(); }

    bool has_facet(const Simplex& s) const;

    /** True when `s` is a face of some facet. */
    bool has_face(const Simplex& s) const;

    /** All k-dimensional faces, sorted and duplicate-free. */
    std::vector<Simplex> faces(int k) const;

    /** Facets containing `s`. */
    std::vector<Simplex> star_facets(const Simplex& s) const;

    /** The link of `s`: facets t with s∩t = ∅ and s∪t a facet.  The link of
     *  a facet is the complex containing only the empty simplex; the link of
     *  a non-face is the empty complex.  */
    SimplicialComplex link(const Simplex& s) const;

    /** Number of neighbours of `v` (vertices sharing an edge with it). */
    int vertex_degree(Vertex v) const;

    /** Sorted neighbours of `v`. */
    std::vector<Vertex> neighbours(Vertex v) const;

    /** f-vector (f_0, ..., f_dim). */
    std::vector<std::int64_t> f_vector() const;

    /** Euler characteristic, Σ (-1)^k f_k. */
    std::int64_t euler_characteristic() const;

    /** Every (dim-1)-face lies in exactly two facets. */
    bool is_closed_pseudomanifold() const;

    /** The facet adjacency graph (across shared ridges) is connected. */
    bool is_strongly_connected() const;

    /** Searches for an isomorphism onto `other` (a relabeling of vertices
     *  carrying facets to facets bijectively) extending the `pinned`
     *  partial assignment.  Returns the vertex map if one exists.
     *  Backtracking with degree/link-size pruning; intended for the small
     *  complexes handled here.  */
    std::optional<std::map<Vertex, Vertex>> isomorphism(
        const SimplicialComplex& other,
        const std::map<Vertex, Vertex>& pinned = {}) const;

    /** Image under a vertex relabeling (which must be injective on the
     *  vertex set of the complex).  */
    SimplicialComplex relabeled(const std::map<Vertex, Vertex>& f) const;

    /** Order-insensitive structural hash of the labeled facet list. */
    std::uint64_t fingerprint() const;

    auto operator<=>(const SimplicialComplex&) const = default;

private:
    int dim_ = -1;
    std::vector<Simplex> facets_;
};

/** An orientation of a pure complex: one sign per facet, aligned with
 *  facets() order, such that adjacent facets induce opposite orientations
 *  on their common ridge.  */
struct OrientedComplex {
    SimplicialComplex complex;
    std::vector<int> signs;

    int sign_of(const Simplex& facet) const;
    OrientedComplex reversed() const;

    /** Structural hash covering facets and signs. */
    std::uint64_t fingerprint() const;

    bool operator==(const OrientedComplex&) const = default;
};

/** Orients a closed pseudomanifold, giving the lexicographically smallest
 *  facet the sign +1.  Returns nothing when the complex is non-orientable.
 */
std::optional<OrientedComplex> orient(const SimplicialComplex& cx);

/** The orientation a facet `f` of an oriented complex induces on the
 *  boundary face obtained by deleting the vertex at position `i`:
 *  sign(f) * (-1)^i.  */
int induced_boundary_sign(const OrientedComplex& oc, const Simplex& facet,
                          int i);

/** The orientation of link(s) induced by an oriented complex: a link facet
 *  t gets sign(s ∪ t) * shuffle_sign(s, t).  `s` must be a face.  */
OrientedComplex induced_link_orientation(const OrientedComplex& oc,
                                         const Simplex& s);

/** Boundary matrix ∂_k of the complex in the bases faces(k-1), faces(k),
 *  both sorted; entry (i, j) is the incidence sign of the i-th (k-1)-face
 *  in the j-th k-face.  Returned as dense rows of small integers.  */
std::vector<std::vector<int>> boundary_matrix(const SimplicialComplex& cx,
                                              int k);

}  // namespace pclass
