#pragma once
/** The end-to-end computation: for every (n−4)-simplex σ of an oriented
 *  combinatorial n-manifold, reduce the 3-sphere link σ to the boundary of
 *  a 4-simplex, close the induced loops of every participating vertex,
 *  evaluate them against the universal cocycle, and assemble the rational
 *  (n−4)-cycle whose class is Poincaré dual to the first rational
 *  Pontryagin class.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pclass/chains.hpp"
#include "pclass/cycles.hpp"
#include "pclass/homology.hpp"

namespace pclass {

/** Optional capture of everything one link evaluation did, for --dump. */
struct LinkDump {
    std::string reduction_trace;                    ///< moves of ξ
    std::vector<std::pair<Vertex, std::string>> loops;  ///< per-vertex η traces
    std::vector<std::pair<std::string, int>> parts;     ///< catalogue row, multiplicity
};

/** The weight f(⟨L⟩) of one oriented labeled 3-sphere: reduce L, close the
 *  induced loop of every vertex that participates in the reduction, and sum
 *  the cocycle values.  The reducer seed is mixed with the labeled
 *  fingerprint of L, so the result does not depend on job scheduling.
 *  Propagates ReductionStalled / DecompositionFailed. */
mpq_class local_formula_value(const OrientedComplex& L, std::uint64_t seed = 0,
                              const CycleConventions& conv = {},
                              LinkDump* dump = nullptr);

struct PipelineOptions {
    std::uint64_t seed = 0;
    unsigned jobs = 1;  ///< 0 = hardware concurrency
    CycleConventions conventions{};
    std::string dump_dir;  ///< when nonempty, write one dump file per simplex
    bool dump_decomposition = false;
    std::function<void(std::size_t done, std::size_t total)> progress;
};

/** One failed link job: which simplex, and why. */
struct LinkFailure {
    Simplex sigma;
    std::string message;
};

/** Thrown when at least one per-link job failed; carries all failures. */
class PipelineError : public std::runtime_error {
  public:
    explicit PipelineError(std::vector<LinkFailure> failures);
    const std::vector<LinkFailure>& failures() const { return failures_; }

  private:
    std::vector<LinkFailure> failures_;
};

/** The rational (n−4)-cycle Σ_σ f(⟨link σ⟩)·σ.  Links are evaluated in
 *  parallel (options.jobs workers); results are merged in simplex order, so
 *  the output is a deterministic function of (K, seed, conventions). */
RationalChain pontryagin_cycle(const OrientedComplex& K,
                               const PipelineOptions& options = {});

/** Exact check that ∂·ch = 0 on K (ch a chain of k-faces of K). */
bool verify_is_cycle(const RationalChain& ch, const SimplicialComplex& K, int k);

/** λ with [ch] = λ·g for an integral generator g of H_{n−4} modulo torsion.
 *  The sign of λ depends on the generator; |λ| does not.  Throws
 *  RankMismatch unless that homology group has free rank exactly 1. */
mpq_class class_coefficient(const RationalChain& ch, const SimplicialComplex& K);

}  // namespace pclass
