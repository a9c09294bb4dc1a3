#pragma once
/** Exact integral linear algebra for simplicial homology.
 *
 *  Everything here is exact: Smith normal forms over ℤ with unimodular
 *  transforms, Betti numbers and torsion coefficients from the boundary
 *  matrices, and coordinates of a rational cycle with respect to an
 *  integral basis of the homology group modulo torsion.
 */

#include <gmpxx.h>

#include <map>
#include <vector>

#include "pclass/complex.hpp"

namespace pclass {

/** Dense integer matrix, row major.  Rows may be empty (zero matrix). */
using IntMatrix = std::vector<std::vector<mpz_class>>;

/** Smith decomposition U·M·V = S with S diagonal, d₁ | d₂ | ..., dᵢ > 0.
 *  `diagonal` lists only the nonzero invariant factors (so the zero matrix
 *  has an empty diagonal); U and V are square unimodular matrices of sizes
 *  rows(M) and cols(M). */
struct SmithDecomposition {
    std::vector<mpz_class> diagonal;
    IntMatrix U;
    IntMatrix V;
};

SmithDecomposition smith_normal_form(const IntMatrix& M);

/** One homology group: free rank and the nontrivial torsion coefficients
 *  t₁ | t₂ | ... (each > 1). */
struct HomologyGroup {
    int betti = 0;
    std::vector<mpz_class> torsion;
};

/** Hₖ(K; ℤ) computed from exact Smith forms of ∂ₖ and ∂ₖ₊₁.  Uses a sparse
 *  elimination that tracks no transforms, so it scales to the boundary
 *  matrices of the 8-manifolds built here. */
HomologyGroup homology(const SimplicialComplex& K, int k);

/** A chain with exact rational coefficients.  Keys are simplices in
 *  canonical (sorted) vertex order; the orientation is the canonical one,
 *  signs live in the coefficients.  Zero coefficients are never stored. */
struct RationalChain {
    std::map<Simplex, mpq_class> coefficients;

    void add(const Simplex& s, const mpq_class& c);
    bool is_zero() const { return coefficients.empty(); }
    RationalChain& operator+=(const RationalChain& o);
    RationalChain& operator*=(const mpq_class& c);
    bool operator==(const RationalChain& o) const = default;
};

/** ∂ₖ applied to a k-chain, exactly.  Empty result ⟺ ch is a cycle. */
RationalChain chain_boundary(const RationalChain& ch, int k);

/** Coordinates of [cycle] ∈ Hₖ(K;ℚ) with respect to an integral basis of
 *  Hₖ(K;ℤ) modulo torsion (the basis dual to an integral cocycle basis
 *  extracted from the Smith transforms).  The result has length bettiₖ.
 *  Throws NotACycle if ∂ₖ·cycle ≠ 0. */
std::vector<mpq_class> express_in_basis(const RationalChain& cycle,
                                        const SimplicialComplex& K, int k);

/** Integral cycles g₁..g_b forming the basis that express_in_basis reports
 *  coordinates against: express_in_basis(gᵢ) is the i-th unit vector. */
std::vector<RationalChain> extract_generators(const SimplicialComplex& K, int k);

}  // namespace pclass
