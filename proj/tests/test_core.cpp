#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "pclass/builders.hpp"
#include "pclass/complex.hpp"
#include "pclass/errors.hpp"
#include "pclass/io.hpp"
#include "pclass/simplex.hpp"

using namespace pclass;

namespace {

SimplicialComplex octahedron() {
    // Suspension of a square: poles 1, 2 over the cycle 3-4-5-6.
    return SimplicialComplex::from_facets({
        Simplex{1, 3, 4}, Simplex{1, 4, 5}, Simplex{1, 5, 6}, Simplex{1, 3, 6},
        Simplex{2, 3, 4}, Simplex{2, 4, 5}, Simplex{2, 5, 6}, Simplex{2, 3, 6},
    });
}

SimplicialComplex icosahedron() {
    // Pole 1 over ring 2..6, pole 12 under ring 7..11, antiprism band.
    std::vector<Simplex> f;
    auto u = [](int i) { return 2 + (i % 5); };
    auto l = [](int i) { return 7 + (i % 5); };
    for (int i = 0; i < 5; ++i) {
        f.push_back(Simplex{1, u(i), u(i + 1)});
        f.push_back(Simplex{12, l(i), l(i + 1)});
        f.push_back(Simplex{u(i), u(i + 1), l(i)});
        f.push_back(Simplex{u(i + 1), l(i), l(i + 1)});
    }
    return SimplicialComplex::from_facets(std::move(f));
}

SimplicialComplex projective_plane_6() {
    // The 6-vertex triangulation of the real projective plane.
    return SimplicialComplex::from_facets({
        Simplex{1, 2, 3}, Simplex{1, 3, 4}, Simplex{1, 4, 5}, Simplex{1, 5, 6},
        Simplex{1, 2, 6}, Simplex{2, 3, 5}, Simplex{2, 4, 5}, Simplex{2, 4, 6},
        Simplex{3, 4, 6}, Simplex{3, 5, 6},
    });
}

// Every ridge of an oriented complex must receive opposite induced
// orientations from its two facets.
bool orientation_consistent(const OrientedComplex& oc) {
    std::map<Simplex, int> ridge_sum;
    for (const Simplex& f : oc.complex.facets())
        for (std::size_t i = 0; i < f.size(); ++i)
            ridge_sum[f.without_vertex(f[i])] +=
                induced_boundary_sign(oc, f, static_cast<int>(i));
    return std::all_of(ridge_sum.begin(), ridge_sum.end(),
                       [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

TEST_CASE("simplex basics", "[core]") {
    Simplex s{3, 1, 2};
    CHECK(s.vertices() == std::vector<Vertex>{1, 2, 3});
    CHECK(s.dim() == 2);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(4));
    CHECK(s.index_of(3) == 2);
    CHECK(s.index_of(9) == -1);
    CHECK_THROWS(Simplex({1, 1, 2}));

    SECTION("join, faces, set operations") {
        Simplex t{4, 5};
        CHECK(s.join(t) == Simplex{1, 2, 3, 4, 5});
        CHECK_THROWS(s.join(Simplex{2}));
        CHECK(s.without_vertex(2) == Simplex{1, 3});
        CHECK(s.with_vertex(7) == Simplex{1, 2, 3, 7});
        CHECK(Simplex{1, 2, 3, 4}.minus(Simplex{2, 4}) == Simplex{1, 3});
        CHECK(Simplex{1, 2, 3}.intersect(Simplex{2, 3, 4}) == Simplex{2, 3});
        CHECK(Simplex{1, 2}.contains_all(Simplex{}));
    }

    SECTION("shuffle sign counts the transpositions of the merge") {
        CHECK(shuffle_sign(Simplex{1, 2}, Simplex{3, 4}) == +1);
        CHECK(shuffle_sign(Simplex{3}, Simplex{1, 2}) == +1);  // two jumps
        CHECK(shuffle_sign(Simplex{2}, Simplex{1}) == -1);
        CHECK(shuffle_sign(Simplex{}, Simplex{1, 5}) == +1);
    }
}

TEST_CASE("complex construction", "[core]") {
    SECTION("boundary of the tetrahedron") {
        auto d3 = SimplicialComplex::from_facets(
            {Simplex{1, 2, 3}, Simplex{1, 2, 4}, Simplex{1, 3, 4}, Simplex{2, 3, 4}});
        CHECK(d3.dim() == 2);
        CHECK(d3.num_facets() == 4);
        CHECK(d3.vertices() == std::vector<Vertex>{1, 2, 3, 4});
        CHECK(d3 == build_boundary_simplex(3));
    }

    SECTION("all 4-subsets of five vertices") {
        auto d4 = build_boundary_simplex(4);
        CHECK(d4.num_facets() == 5);
        CHECK(d4.dim() == 3);
        CHECK(d4.is_closed_pseudomanifold());
    }

    SECTION("mixed facet dimensions are rejected") {
        CHECK_THROWS(SimplicialComplex::from_facets({Simplex{1, 2}, Simplex{3, 4, 5}}));
    }

    SECTION("duplicate facets collapse") {
        auto cx = SimplicialComplex::from_facets(
            {Simplex{1, 2}, Simplex{2, 3}, Simplex{1, 2}, Simplex{1, 3}});
        CHECK(cx.num_facets() == 3);
    }
}

TEST_CASE("faces, links and stars", "[core]") {
    auto d4 = build_boundary_simplex(4);

    SECTION("link of a vertex in the 4-simplex boundary") {
        auto lk = d4.link(Simplex{1});
        CHECK(lk == build_boundary_simplex(3).relabeled(
                        {{1, 2}, {2, 3}, {3, 4}, {4, 5}}));
        CHECK(lk.dim() == 2);
    }

    SECTION("link of an edge") {
        auto lk = d4.link(Simplex{1, 2});
        CHECK(lk.num_facets() == 3);
        CHECK(lk.vertices() == std::vector<Vertex>{3, 4, 5});
        CHECK(lk.dim() == 1);
    }

    SECTION("link of a facet is the empty-simplex complex; non-face empty") {
        CHECK(d4.link(d4.facets()[0]).dim() == -1);
        CHECK_FALSE(d4.link(d4.facets()[0]).empty());
        CHECK(d4.link(Simplex{1, 2, 3, 4, 5}).empty());
    }

    SECTION("link of link equals link of union (exhaustive, small complexes)") {
        for (const SimplicialComplex& cx :
             {build_boundary_simplex(4), octahedron(), icosahedron()}) {
            for (int k1 = 0; k1 <= cx.dim(); ++k1)
                for (const Simplex& s : cx.faces(k1)) {
                    auto ls = cx.link(s);
                    for (int k2 = 0; k2 <= ls.dim(); ++k2)
                        for (const Simplex& t : ls.faces(k2))
                            CHECK(ls.link(t) == cx.link(s.join(t)));
                }
        }
    }

    SECTION("face counts and star") {
        CHECK(d4.faces(0).size() == 5);
        CHECK(d4.faces(1).size() == 10);
        CHECK(d4.star_facets(Simplex{1}).size() == 4);
        CHECK(d4.has_face(Simplex{2, 5}));
        CHECK_FALSE(d4.has_facet(Simplex{2, 5}));
    }
}

TEST_CASE("vertex degrees", "[core]") {
    CHECK(build_boundary_simplex(3).vertex_degree(2) == 3);
    auto oct = octahedron();
    for (Vertex v : oct.vertices()) CHECK(oct.vertex_degree(v) == 4);
    auto ico = icosahedron();
    for (Vertex v : ico.vertices()) CHECK(ico.vertex_degree(v) == 5);
    CHECK(ico.num_vertices() == 12);
    CHECK(ico.num_facets() == 20);
}

TEST_CASE("orientation", "[core]") {
    SECTION("spheres orient, first facet positive") {
        for (const SimplicialComplex& cx :
             {build_boundary_simplex(3), build_boundary_simplex(4), octahedron(),
              icosahedron()}) {
            auto oc = orient(cx);
            REQUIRE(oc.has_value());
            CHECK(oc->sign_of(cx.facets().front()) == +1);
            CHECK(orientation_consistent(*oc));
            CHECK(orientation_consistent(oc->reversed()));
        }
    }

    SECTION("the 6-vertex projective plane is non-orientable") {
        auto rp2 = projective_plane_6();
        REQUIRE(rp2.is_closed_pseudomanifold());
        CHECK(rp2.euler_characteristic() == 1);
        CHECK_FALSE(orient(rp2).has_value());
    }

    SECTION("induced link orientation is consistent and sign-linear") {
        auto oc = *orient(build_boundary_simplex(4));
        auto lk = induced_link_orientation(oc, Simplex{1});
        CHECK(orientation_consistent(lk));
        auto lk_rev = induced_link_orientation(oc.reversed(), Simplex{1});
        CHECK(lk_rev.complex == lk.complex);
        for (std::size_t i = 0; i < lk.signs.size(); ++i)
            CHECK(lk_rev.signs[i] == -lk.signs[i]);
    }
}

TEST_CASE("boundary matrices", "[core]") {
    SECTION("single edge") {
        auto cx = SimplicialComplex::from_facets({Simplex{1, 2}});
        auto d1 = boundary_matrix(cx, 1);
        REQUIRE(d1.size() == 2);  // two vertices
        REQUIRE(d1[0].size() == 1);
        CHECK(d1[0][0] == -1);
        CHECK(d1[1][0] == +1);
    }

    SECTION("boundary of boundary vanishes") {
        for (const SimplicialComplex& cx :
             {build_boundary_simplex(3), build_boundary_simplex(4), octahedron()}) {
            for (int k = 2; k <= cx.dim(); ++k) {
                auto a = boundary_matrix(cx, k - 1);
                auto b = boundary_matrix(cx, k);
                // (a*b)[i][j] must vanish identically.
                for (std::size_t i = 0; i < a.size(); ++i)
                    for (std::size_t j = 0; j < b[0].size(); ++j) {
                        long acc = 0;
                        for (std::size_t t = 0; t < b.size(); ++t)
                            acc += static_cast<long>(a[i][t]) * b[t][j];
                        REQUIRE(acc == 0);
                    }
            }
        }
    }
}

TEST_CASE("f-vector and Euler characteristic", "[core]") {
    CHECK(build_boundary_simplex(3).euler_characteristic() == 2);
    CHECK(build_boundary_simplex(4).euler_characteristic() == 0);
    CHECK(octahedron().f_vector() == std::vector<std::int64_t>{6, 12, 8});
    CHECK(icosahedron().f_vector() == std::vector<std::int64_t>{12, 30, 20});
}

TEST_CASE("pseudomanifold and connectivity checks", "[core]") {
    CHECK(build_boundary_simplex(4).is_closed_pseudomanifold());
    CHECK(octahedron().is_strongly_connected());
    // A single triangle has boundary edges in one facet only.
    CHECK_FALSE(SimplicialComplex::from_facets({Simplex{1, 2, 3}})
                    .is_closed_pseudomanifold());
    // Two disjoint tetrahedron boundaries: closed but not strongly connected.
    auto two = SimplicialComplex::from_facets([] {
        std::vector<Simplex> f;
        for (const Simplex& s : build_boundary_simplex(3).facets()) {
            f.push_back(s);
            std::vector<Vertex> shifted;
            for (Vertex v : s.vertices()) shifted.push_back(v + 10);
            f.push_back(Simplex(shifted));
        }
        return f;
    }());
    CHECK(two.is_closed_pseudomanifold());
    CHECK_FALSE(two.is_strongly_connected());
}

TEST_CASE("isomorphism search and relabeling", "[core]") {
    auto oct = octahedron();
    auto relab = oct.relabeled({{1, 9}, {2, 8}, {3, 7}, {4, 6}, {5, 5}, {6, 4}});
    auto iso = oct.isomorphism(relab);
    REQUIRE(iso.has_value());
    CHECK(oct.relabeled(*iso) == relab);
    // Octahedron and a stacked sphere with the same facet count differ.
    auto stacked = SimplicialComplex::from_facets({
        Simplex{1, 2, 4}, Simplex{1, 3, 4}, Simplex{2, 3, 4}, Simplex{1, 2, 5},
        Simplex{1, 3, 6}, Simplex{1, 5, 6}, Simplex{2, 3, 5}, Simplex{3, 5, 6},
    });
    CHECK(stacked.num_facets() == oct.num_facets());
    CHECK_FALSE(oct.isomorphism(stacked).has_value());
    // Pinning an impossible assignment blocks the search.
    CHECK_FALSE(oct.isomorphism(relab, {{1, 5}}).has_value());
}

TEST_CASE("facet text round-trips", "[core][io]") {
    auto cx = octahedron();
    auto text = write_facet_text(cx);
    CHECK(parse_facet_text(text) == cx);
    CHECK(write_facet_text(parse_facet_text(text)) == text);

    SECTION("comments and blank lines are skipped") {
        auto parsed = parse_facet_text("# comment\n\n1 2 3\n3 4 1\n2 4 1 \n2 3 4\n");
        CHECK(parsed == build_boundary_simplex(3));
    }

    SECTION("structured document round-trips") {
        auto doc = write_structured_text(cx);
        CHECK(parse_structured_text(doc) == cx);
        CHECK(write_structured_text(parse_structured_text(doc)) == doc);
    }

    SECTION("garbage is rejected") {
        CHECK_THROWS_AS(parse_facet_text("1 2\n3 x\n"), ParseError);
        CHECK_THROWS_AS(parse_facet_text("1 2 3\n4 5\n"), Error);
    }
}

TEST_CASE("fingerprints are label-sensitive and order-insensitive", "[core]") {
    auto oct = octahedron();
    auto same = SimplicialComplex::from_facets([&] {
        auto f = oct.facets();
        std::reverse(f.begin(), f.end());
        return f;
    }());
    CHECK(oct.fingerprint() == same.fingerprint());
    CHECK(oct.fingerprint() !=
          oct.relabeled({{1, 2}, {2, 1}, {3, 3}, {4, 4}, {5, 5}, {6, 6}}).fingerprint());
}
