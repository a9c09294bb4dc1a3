#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pclass/simplex.hpp"

namespace pclass {

/** A permutation of vertex labels {1, ..., n}, stored as the image table
 *  img[v] for v in 1..n (index 0 unused).
 *
 *  Composition is right-to-left: (a * b)(x) = a(b(x)).
 */
class Permutation {
public:
    explicit Permutation(int n);

    /** Parses disjoint-cycle notation, e.g. "(1 2 3)(4 5)".  Fixed points
     *  may be omitted.  Vertices must lie in 1..n.  */
    static Permutation from_cycles(int n, const std::string& cycles);

    static Permutation identity(int n) { return Permutation(n); }

    int n() const { return static_cast<int>(img_.size()) - 1; }
    int apply(int v) const { return img_[static_cast<std::size_t>(v)]; }
    int operator()(int v) const { return apply(v); }

    Permutation inverse() const;

    /** Right-to-left composition: (a * b)(x) = a(b(x)). */
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    Permutation pow(int k) const;

    /** Image of a simplex under the permutation. */
    Simplex apply(const Simplex& s) const;

    bool is_identity() const;
    auto operator<=>(const Permutation&) const = default;

    std::string cycle_string() const;

private:
    std::vector<int> img_;
};

/** The subgroup generated by `gens` (all on the same ground set), as an
 *  explicit element list.  Breadth-first closure; intended for small groups.
 */
std::vector<Permutation> group_closure(const std::vector<Permutation>& gens);

/** Orbit of a simplex under a list of group elements (or generators; the
 *  orbit is closed either way when the list generates).  Sorted output.  */
std::vector<Simplex> orbit(const std::vector<Permutation>& group,
                           const Simplex& seed);

}  // namespace pclass
