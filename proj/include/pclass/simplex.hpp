#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace pclass {

/** Vertex label.  Labels are arbitrary positive integers chosen by whoever
 *  built the complex; they are never re-indexed by any operation.  */
using Vertex = int;

/** An abstract simplex: a finite set of vertex labels, stored sorted.
 *
 *  The empty simplex is allowed (dimension -1); it is the identity for
 *  joins and the link of a facet in itself.
 */
class Simplex {
public:
    Simplex() = default;

    /** Builds a simplex from an arbitrary vertex list; sorts and rejects
     *  duplicates.  */
    explicit Simplex(std::vector<Vertex> verts) : v_(std::move(verts)) {
        std::sort(v_.begin(), v_.end());
        if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
            throw std::invalid_argument("Simplex: duplicate vertex");
    }

    Simplex(std::initializer_list<Vertex> verts)
        : Simplex(std::vector<Vertex>(verts)) {}

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    Vertex operator[](std::size_t i) const { return v_[i]; }
    const std::vector<Vertex>& vertices() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool contains(Vertex v) const {
        return std::binary_search(v_.begin(), v_.end(), v);
    }

    /** True when every vertex of `s` is a vertex of this simplex. */
    bool contains_all(const Simplex& s) const {
        return std::includes(v_.begin(), v_.end(), s.v_.begin(), s.v_.end());
    }

    bool intersects(const Simplex& s) const {
        auto a = v_.begin();
        auto b = s.v_.begin();
        while (a != v_.end() && b != s.v_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else return true;
        }
        return false;
    }

    /** Position of `v` in the sorted vertex list, or -1. */
    int index_of(Vertex v) const {
        auto it = std::lower_bound(v_.begin(), v_.end(), v);
        if (it == v_.end() || *it != v) return -1;
        return static_cast<int>(it - v_.begin());
    }

    /** Join: disjoint union of vertex sets.  Throws if the sets meet. */
    Simplex join(const Simplex& s) const {
        if (intersects(s))
            throw std::invalid_argument("Simplex::join: vertex sets meet");
        std::vector<Vertex> out;
        out.reserve(v_.size() + s.v_.size());
        std::merge(v_.begin(), v_.end(), s.v_.begin(), s.v_.end(),
                   std::back_inserter(out));
        Simplex r;
        r.v_ = std::move(out);
        return r;
    }

    Simplex with_vertex(Vertex v) const {
        return join(Simplex{v});
    }

    /** Face obtained by deleting one vertex (which must be present). */
    Simplex without_vertex(Vertex v) const {
        int i = index_of(v);
        if (i < 0) throw std::invalid_argument("Simplex: vertex not present");
        Simplex r;
        r.v_ = v_;
        r.v_.erase(r.v_.begin() + i);
        return r;
    }

    /** Set difference (the vertices of this simplex not in `s`). */
    Simplex minus(const Simplex& s) const {
        Simplex r;
        std::set_difference(v_.begin(), v_.end(), s.v_.begin(), s.v_.end(),
                            std::back_inserter(r.v_));
        return r;
    }

    Simplex intersect(const Simplex& s) const {
        Simplex r;
        std::set_intersection(v_.begin(), v_.end(), s.v_.begin(), s.v_.end(),
                              std::back_inserter(r.v_));
        return r;
    }

    auto operator<=>(const Simplex&) const = default;

    std::string str() const;

private:
    std::vector<Vertex> v_;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

/** FNV-1a over the vertex list; used for hash maps keyed by simplices. */
struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (Vertex v : s) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

/** Sign of the permutation that sorts the concatenation of two disjoint
 *  sorted vertex lists, i.e. the shuffle sign of (a, b).  Returns +1/-1.  */
int shuffle_sign(const Simplex& a, const Simplex& b);

}  // namespace pclass
