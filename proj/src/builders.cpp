#include "pclass/builders.hpp"

#include <array>
#include <set>

#include "pclass/errors.hpp"

namespace pclass {

namespace {

constexpr int kGroundSet = 15;

Permutation perm(const char* cycles) {
    return Permutation::from_cycles(kGroundSet, cycles);
}

/** The twelve orbit seeds of the 415-facet core, on vertices 1..15. */
const std::array<std::array<int, 9>, 12> kCoreSeeds = {{
    {1, 2, 3, 6, 8, 11, 13, 14, 15},
    {1, 3, 6, 8, 9, 10, 11, 12, 13},
    {1, 2, 6, 9, 10, 11, 12, 14, 15},
    {1, 2, 3, 4, 7, 9, 12, 14, 15},
    {1, 2, 4, 7, 9, 10, 12, 13, 14},
    {1, 2, 6, 8, 9, 10, 11, 14, 15},
    {1, 2, 3, 4, 5, 6, 9, 11, 13},
    {1, 3, 5, 6, 8, 9, 10, 11, 12},
    {1, 3, 5, 6, 7, 8, 9, 10, 11},
    {1, 2, 3, 4, 5, 7, 10, 12, 15},
    {1, 2, 3, 7, 8, 10, 12, 13, 14},
    {2, 5, 6, 7, 8, 9, 10, 13, 14},
}};

/** Seeds of the two small orbits forming one 15-facet block. */
const std::array<int, 9> kBlockSeedL = {3, 4, 6, 7, 11, 12, 13, 14, 15};
const std::array<int, 9> kBlockSeedN = {3, 4, 6, 7, 10, 12, 13, 14, 15};

/** Checksums of the generated facet lists, guarding the embedded data
 *  constants against transcription drift.  */
constexpr std::array<std::uint64_t, 3> kM815Checksums = {
    0x040214853e01d68bULL,  // Plain
    0x3984c03997d97b63ULL,  // Tilde
    0xbc908a5f1bbb89afULL,  // DoubleTilde
};

Simplex seed_simplex(const std::array<int, 9>& a) {
    return Simplex(std::vector<Vertex>(a.begin(), a.end()));
}

/** One 15-facet block: the order-12 subgroup's orbits of the two block
 *  seeds (sizes 12 and 3), optionally mirrored by `t`, shifted by `shift`.
 */
std::vector<Simplex> block(const std::vector<Permutation>& g0,
                           const Permutation& shift, bool mirrored,
                           const Permutation& t) {
    std::vector<Simplex> out;
    for (const auto& seed : {kBlockSeedL, kBlockSeedN}) {
        Simplex s = seed_simplex(seed);
        if (mirrored) s = t.apply(s);
        for (const Simplex& f : orbit(g0, s)) out.push_back(shift.apply(f));
    }
    return out;
}

}  // namespace

std::pair<Permutation, Permutation> m815_symmetry_generators() {
    return {perm("(1 2 3 4 5)(6 7 8 9 10)(11 12 13 14 15)"),
            perm("(1 6 11)(2 15 14)(3 13 8)(4 7 5)(9 12 10)")};
}

SimplicialComplex build_M8_15(M815Variant variant) {
    const auto [P, S] = m815_symmetry_generators();
    const Permutation T = perm("(3 10)(4 14)(5 8)(6 11)(7 12)(13 15)");
    const Permutation R = perm("(2 5)(3 4)(7 10)(8 9)(12 15)(13 14)");

    const std::vector<Permutation> g1 = group_closure({P, S});
    const std::vector<Permutation> g0 = group_closure({R, S});
    PCLASS_CHECK(g1.size() == 60, "core symmetry group must have order 60");
    PCLASS_CHECK(g0.size() == 12, "block symmetry group must have order 12");

    std::set<Simplex> facets;
    for (const auto& seed : kCoreSeeds)
        for (const Simplex& f : orbit(g1, seed_simplex(seed)))
            facets.insert(f);
    PCLASS_CHECK(facets.size() == 415, "core orbit union must have 415 facets");

    // Five 15-facet blocks; slots 1 and 3 (1-based) take the mirrored block
    // in the Tilde / DoubleTilde variants.
    for (int n = 1; n <= 5; ++n) {
        bool mirrored = (n == 1 && variant != M815Variant::Plain) ||
                        (n == 3 && variant == M815Variant::DoubleTilde);
        for (const Simplex& f : block(g0, P.pow(n - 1), mirrored, T))
            facets.insert(f);
    }

    SimplicialComplex cx = SimplicialComplex::from_facets(
        std::vector<Simplex>(facets.begin(), facets.end()));
    PCLASS_CHECK(cx.num_facets() == 490,
                 "variant must assemble to exactly 490 facets");

    std::uint64_t expected = kM815Checksums[static_cast<std::size_t>(variant)];
    PCLASS_CHECK(cx.fingerprint() == expected,
                 "facet list checksum mismatch (data constants corrupted?)");
    return cx;
}

SimplicialComplex build_boundary_simplex(int n) {
    if (n < 1) throw UnknownBuiltin("boundary_simplex: index must be >= 1");
    std::vector<Simplex> facets;
    // All n-subsets of {1..n+1}: drop each vertex once.
    for (int skip = 1; skip <= n + 1; ++skip) {
        std::vector<Vertex> verts;
        for (int v = 1; v <= n + 1; ++v)
            if (v != skip) verts.push_back(v);
        facets.emplace_back(std::move(verts));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex build_cp2_9() {
    static const int kFacets[36][5] = {
        {1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}, {1, 2, 3, 5, 6}, {1, 2, 4, 5, 7},
        {1, 2, 4, 6, 8}, {1, 2, 4, 7, 8}, {1, 2, 5, 6, 7}, {1, 2, 6, 7, 9},
        {1, 2, 6, 8, 9}, {1, 2, 7, 8, 9}, {1, 3, 4, 5, 9}, {1, 3, 4, 6, 9},
        {1, 3, 5, 6, 7}, {1, 3, 5, 7, 8}, {1, 3, 5, 8, 9}, {1, 3, 6, 7, 9},
        {1, 3, 7, 8, 9}, {1, 4, 5, 7, 8}, {1, 4, 5, 8, 9}, {1, 4, 6, 8, 9},
        {2, 3, 4, 5, 9}, {2, 3, 4, 6, 8}, {2, 3, 4, 7, 8}, {2, 3, 4, 7, 9},
        {2, 3, 5, 6, 8}, {2, 3, 5, 8, 9}, {2, 3, 7, 8, 9}, {2, 4, 5, 7, 9},
        {2, 5, 6, 7, 9}, {2, 5, 6, 8, 9}, {3, 4, 6, 7, 8}, {3, 4, 6, 7, 9},
        {3, 5, 6, 7, 8}, {4, 5, 6, 7, 8}, {4, 5, 6, 7, 9}, {4, 5, 6, 8, 9},
    };
    std::vector<Simplex> facets;
    for (const auto& row : kFacets)
        facets.emplace_back(std::vector<Vertex>(row, row + 5));
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex build_builtin(const std::string& name) {
    if (name == "M8_15") return build_M8_15(M815Variant::Plain);
    if (name == "M8_15_tilde") return build_M8_15(M815Variant::Tilde);
    if (name == "M8_15_double_tilde")
        return build_M8_15(M815Variant::DoubleTilde);
    if (name == "cp2_9") return build_cp2_9();
    if (name.rfind("boundary_simplex:", 0) == 0) {
        try {
            return build_boundary_simplex(std::stoi(name.substr(17)));
        } catch (const std::exception&) {
            throw UnknownBuiltin("bad boundary_simplex parameter: " + name);
        }
    }
    throw UnknownBuiltin("unknown builtin complex: " + name);
}

std::vector<std::string> builtin_names() {
    return {"M8_15", "M8_15_tilde", "M8_15_double_tilde", "cp2_9",
            "boundary_simplex:<n>"};
}

bool verify_neighbourliness(const SimplicialComplex& cx, int k) {
    std::vector<Vertex> verts = cx.vertices();
    if (k < 0 || static_cast<std::size_t>(k) > verts.size()) return false;
    // Enumerate k-subsets of the vertex set.
    std::vector<std::size_t> idx(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    if (k == 0) return true;
    while (true) {
        std::vector<Vertex> sub;
        sub.reserve(idx.size());
        for (std::size_t i : idx) sub.push_back(verts[i]);
        if (!cx.has_face(Simplex(std::move(sub)))) return false;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                             verts.size() - static_cast<std::size_t>(k - i))
            --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < k; ++t)
            idx[static_cast<std::size_t>(t)] =
                idx[static_cast<std::size_t>(t - 1)] + 1;
    }
    return true;
}

bool verify_complementarity(const SimplicialComplex& cx) {
    std::vector<Vertex> verts = cx.vertices();
    const int m = static_cast<int>(verts.size()) - (cx.dim() + 1);
    if (m <= 0) return false;
    Simplex all(verts);
    // Every m-subset must be a face exactly when its complement is not a
    // facet.
    std::vector<std::size_t> idx(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    while (true) {
        std::vector<Vertex> sub;
        sub.reserve(idx.size());
        for (std::size_t i : idx) sub.push_back(verts[i]);
        Simplex s(std::move(sub));
        if (cx.has_face(s) == cx.has_facet(all.minus(s))) return false;
        int i = m - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                             verts.size() - static_cast<std::size_t>(m - i))
            --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < m; ++t)
            idx[static_cast<std::size_t>(t)] =
                idx[static_cast<std::size_t>(t - 1)] + 1;
    }
    return true;
}

}  // namespace pclass
