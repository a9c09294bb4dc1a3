#pragma once

#include "pclass/complex.hpp"
#include "pclass/permutation.hpp"

namespace pclass {

/** Which of the three 490-facet 15-vertex 8-manifold variants to build.
 *  They differ in which of two mirror-image 15-facet blocks is used in two
 *  slots; all three are closed combinatorial manifolds.  */
enum class M815Variant { Plain, Tilde, DoubleTilde };

/** Builds the 15-vertex 8-dimensional combinatorial manifold whose facet
 *  set is assembled from twelve symmetry-group orbits (415 facets) plus
 *  five 15-facet blocks.  The result is verified against an embedded
 *  checksum before being returned.  */
SimplicialComplex build_M8_15(M815Variant variant = M815Variant::Plain);

/** The boundary of the n-simplex on vertices 1..n+1 (all n-subsets): the
 *  minimal triangulation of the (n-1)-sphere.  Requires n >= 1.  */
SimplicialComplex build_boundary_simplex(int n);

/** A 9-vertex triangulation of the complex projective plane (36 facets,
 *  3-neighbourly, complementary).  */
SimplicialComplex build_cp2_9();

/** Builds a built-in complex by CLI name: M8_15, M8_15_tilde,
 *  M8_15_double_tilde, cp2_9, or boundary_simplex:n.  */
SimplicialComplex build_builtin(const std::string& name);

/** Names accepted by build_builtin (boundary_simplex shown with a sample
 *  parameter).  */
std::vector<std::string> builtin_names();

/** True when every k-element subset of the vertex set is a face. */
bool verify_neighbourliness(const SimplicialComplex& cx, int k);

/** True when a subset of the vertex set is a face exactly if its
 *  complement is not a facet (checked over all subsets whose size is
 *  #vertices minus facet size).  */
bool verify_complementarity(const SimplicialComplex& cx);

/** The two generators of the order-60 symmetry group used by the builder,
 *  acting on {1..15}.  */
std::pair<Permutation, Permutation> m815_symmetry_generators();

}  // namespace pclass
