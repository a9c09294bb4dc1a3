#include <queue>
#include <stdexcept>

#include "pclass/complex.hpp"

namespace pclass {

int OrientedComplex::sign_of(const Simplex& facet) const {
    const auto& fs = complex.facets();
    auto it = std::lower_bound(fs.begin(), fs.end(), facet);
    if (it == fs.end() || *it != facet)
        throw std::invalid_argument("OrientedComplex::sign_of: not a facet");
    return signs[static_cast<std::size_t>(it - fs.begin())];
}

OrientedComplex OrientedComplex::reversed() const {
    OrientedComplex r = *this;
    for (int& s : r.signs) s = -s;
    return r;
}

std::uint64_t OrientedComplex::fingerprint() const {
    std::uint64_t h = complex.fingerprint();
    for (std::size_t i = 0; i < signs.size(); ++i) {
        h ^= (signs[i] > 0 ? 0x51ed2701a3c5e91bULL : 0xe3f7a9d85b31c647ULL) +
             i * 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
    }
    return h;
}

int induced_boundary_sign(const OrientedComplex& oc, const Simplex& facet,
                          int i) {
    int s = oc.sign_of(facet);
    return (i % 2 == 0) ? s : -s;
}

std::optional<OrientedComplex> orient(const SimplicialComplex& cx) {
    const auto& facets = cx.facets();
    if (facets.empty()) return std::nullopt;

    // Ridge → incident facet indices.
    std::unordered_map<Simplex, std::vector<int>, SimplexHash> inc;
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (Vertex v : facets[i])
            inc[facets[i].without_vertex(v)].push_back(static_cast<int>(i));

    std::vector<int> signs(facets.size(), 0);
    signs[0] = 1;  // facets() is sorted, so index 0 is the lex-least facet
    std::queue<int> q;
    q.push(0);
    std::size_t assigned = 1;
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        const Simplex& f = facets[static_cast<std::size_t>(i)];
        for (std::size_t pos = 0; pos < f.size(); ++pos) {
            Simplex ridge = f.without_vertex(f[pos]);
            const auto& around = inc.at(ridge);
            if (around.size() != 2) return std::nullopt;
            int j = around[0] == i ? around[1] : around[0];
            const Simplex& g = facets[static_cast<std::size_t>(j)];
            int posj = g.index_of(g.minus(ridge)[0]);
            // Adjacent facets must induce opposite orientations on the
            // shared ridge: sign_f * (-1)^pos = -sign_g * (-1)^posj.
            int needed = -signs[static_cast<std::size_t>(i)] *
                         ((pos % 2 == 0) ? 1 : -1) *
                         ((posj % 2 == 0) ? 1 : -1);
            int& sj = signs[static_cast<std::size_t>(j)];
            if (sj == 0) {
                sj = needed;
                ++assigned;
                q.push(j);
            } else if (sj != needed) {
                return std::nullopt;  // non-orientable
            }
        }
    }
    if (assigned != facets.size()) return std::nullopt;  // not connected
    return OrientedComplex{cx, std::move(signs)};
}

OrientedComplex induced_link_orientation(const OrientedComplex& oc,
                                         const Simplex& s) {
    SimplicialComplex lk = oc.complex.link(s);
    std::vector<int> signs;
    signs.reserve(lk.num_facets());
    for (const Simplex& t : lk.facets())
        signs.push_back(oc.sign_of(s.join(t)) * shuffle_sign(s, t));
    return OrientedComplex{std::move(lk), std::move(signs)};
}

std::vector<std::vector<int>> boundary_matrix(const SimplicialComplex& cx,
                                              int k) {
    std::vector<Simplex> rows = cx.faces(k - 1);
    std::vector<Simplex> cols = cx.faces(k);
    std::vector<std::vector<int>> m(rows.size(),
                                    std::vector<int>(cols.size(), 0));
    auto row_index = [&rows](const Simplex& s) {
        return static_cast<std::size_t>(
            std::lower_bound(rows.begin(), rows.end(), s) - rows.begin());
    };
    for (std::size_t j = 0; j < cols.size(); ++j) {
        int sign = 1;
        for (std::size_t i = 0; i < cols[j].size(); ++i) {
            m[row_index(cols[j].without_vertex(cols[j][i]))][j] = sign;
            sign = -sign;
        }
    }
    return m;
}

}  // namespace pclass
