#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "helpers.hpp"
#include "mackit/simplicial.hpp"

using namespace mackit;
using namespace mackit::testing;

TEST_CASE("membership") {
    auto K = pentagon();
    REQUIRE(K.is_simplex({1, 2}));
    REQUIRE(K.is_simplex(std::vector<int>{}));
    REQUIRE_FALSE(K.is_simplex({1, 3}));
    REQUIRE_THROWS_AS(K.is_simplex({0}), input_error);
    REQUIRE_THROWS_AS(K.is_simplex({6}), input_error);
}

TEST_CASE("facets are incomparable after construction") {
    auto K = SimplicialComplex::from_facets(4, {{1, 2}, {1}, {2, 3, 4}, {2, 3}});
    REQUIRE(K.facets() == std::vector<std::vector<int>>{{1, 2}, {2, 3, 4}});
}

TEST_CASE("missing faces") {
    SECTION("heptagon sphere: the seven consecutive triples") {
        auto mf = missing_faces(heptagon_sphere());
        REQUIRE(mf.size() == 7);
        std::set<std::vector<int>> want = {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6},
                                           {5, 6, 7}, {1, 6, 7}, {1, 2, 7}};
        REQUIRE(std::set<std::vector<int>>(mf.begin(), mf.end()) == want);
    }
    SECTION("full simplex has none") {
        REQUIRE(missing_faces(full_simplex(4)).empty());
    }
    SECTION("two isolated vertices") {
        REQUIRE(missing_faces(two_points()) ==
                std::vector<std::vector<int>>{{1, 2}});
    }
    SECTION("ghost vertex appears as a missing singleton") {
        auto K = SimplicialComplex::from_facets(3, {{1, 2}});
        REQUIRE(missing_faces(K) == std::vector<std::vector<int>>{{3}});
    }
}

TEST_CASE("missing faces determine the complex") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        auto K = random_complex(rng, 1 + int(rng() % 6), trial % 3 == 0);
        auto back = SimplicialComplex::from_missing_faces(K.vertex_count(),
                                                          missing_faces(K));
        REQUIRE(back == K);
    }
}

TEST_CASE("full subcomplex") {
    SECTION("pentagon at a diagonal pair") {
        auto sub = full_subcomplex(pentagon(), {1, 3});
        REQUIRE(sub.vertex_count() == 2);
        REQUIRE(sub.facets() == std::vector<std::vector<int>>{{1}, {2}});
    }
    SECTION("empty subset") {
        auto sub = full_subcomplex(pentagon(), {});
        REQUIRE(sub.vertex_count() == 0);
        REQUIRE(sub.dimension() == -1);
    }
    SECTION("heptagon at {4,5,6,7}: two triangles sharing an edge plus {5,6}") {
        auto sub = full_subcomplex(heptagon_sphere(), {4, 5, 6, 7});
        // labels 4,5,6,7 -> 1,2,3,4
        REQUIRE(sub.facets() ==
                std::vector<std::vector<int>>{{1, 2, 4}, {1, 3, 4}, {2, 3}});
    }
}

TEST_CASE("link") {
    SECTION("pentagon at a vertex: the two neighbours") {
        auto lk = link(pentagon(), {1});
        REQUIRE(lk.facets() == std::vector<std::vector<int>>{{2}, {5}});
    }
    SECTION("empty simplex gives K back") {
        REQUIRE(link(pentagon(), {}) == pentagon());
    }
    SECTION("edge of the tetrahedron boundary: two points") {
        auto lk = link(boundary_simplex(4), {1, 2});
        REQUIRE(lk.facets() == std::vector<std::vector<int>>{{3}, {4}});
    }
    SECTION("non-simplex input") {
        REQUIRE_THROWS_AS(link(pentagon(), {1, 3}), input_error);
    }
}

TEST_CASE("derived complex") {
    SECTION("edge: barycentric subdivision is a path") {
        auto K = SimplicialComplex::from_facets(2, {{1, 2}});
        auto Kp = derived_complex(K, false);
        REQUIRE(Kp.vertex_count() == 3);
        REQUIRE(Kp.facets().size() == 2);
        for (const auto& f : Kp.facets()) REQUIRE(f.size() == 2);
    }
    SECTION("edge, augmented: cone over the path") {
        auto K = SimplicialComplex::from_facets(2, {{1, 2}});
        auto Kp = derived_complex(K, true);
        REQUIRE(Kp.vertex_count() == 4);
        REQUIRE(Kp.facets().size() == 2);
        for (const auto& f : Kp.facets()) REQUIRE(f.size() == 3);
    }
    SECTION("triangle boundary subdivides into a hexagon") {
        auto Kp = derived_complex(boundary_simplex(3), false);
        REQUIRE(Kp.vertex_count() == 6);
        REQUIRE(Kp.facets().size() == 6);
        for (const auto& f : Kp.facets()) REQUIRE(f.size() == 2);
    }
}

TEST_CASE("simplicial wedge") {
    SECTION("wedge of S^0 is the triangle boundary") {
        auto K = simplicial_wedge(two_points(), 1);
        REQUIRE(K == boundary_simplex(3));
    }
    SECTION("wedge of a point is an edge") {
        auto K = simplicial_wedge(point_complex(), 1);
        REQUIRE(K.vertex_count() == 2);
        REQUIRE(K.facets() == std::vector<std::vector<int>>{{1, 2}});
    }
    SECTION("wedging a non-vertex fails") {
        auto K = SimplicialComplex::from_facets(3, {{1, 2}});
        REQUIRE_THROWS_AS(simplicial_wedge(K, 3), input_error);
    }
}

TEST_CASE("K(J) construction") {
    SECTION("S^0 with J=(2,2) gives the tetrahedron boundary") {
        auto K = kj_construction(two_points(), JTuple({2, 2}));
        REQUIRE(K == boundary_simplex(4));
    }
    SECTION("identity blocks") {
        auto K = pentagon();
        REQUIRE(kj_construction(K, JTuple::ones(5)) == K);
    }
    SECTION("pentagon with J=(2,1,1,1,1) equals the wedge at vertex 1") {
        auto direct = kj_construction(pentagon(), JTuple({2, 1, 1, 1, 1}));
        REQUIRE(direct == simplicial_wedge(pentagon(), 1));
    }
    SECTION("ghost vertex inflates to a missing block") {
        auto K = SimplicialComplex::from_facets(1, {});  // {∅} with one ghost
        auto KJ = kj_construction(K, JTuple({2}));
        REQUIRE(KJ == two_points());
    }
    SECTION("J length mismatch") {
        REQUIRE_THROWS_AS(kj_construction(pentagon(), JTuple({1, 1})), input_error);
    }
}

TEST_CASE("K(J) equals the iterated wedge sequence") {
    std::mt19937_64 rng(23);
    int cases = 0;
    while (cases < 220) {
        int m = 1 + int(rng() % 5);
        auto K = random_complex(rng, m);
        std::vector<int> js(size_t(m), 1);
        int budget = 8 - m;
        for (int& j : js) {
            int extra = int(rng() % 3);
            extra = std::min(extra, budget);
            j += extra;
            budget -= extra;
        }
        JTuple J(js);
        INFO("m=" << m << " dJ=" << J.d());
        REQUIRE(kj_construction(K, J) == kj_wedge_sequence(K, J));
        ++cases;
    }
}

TEST_CASE("basic construction triangulations") {
    SECTION("a point gives an interval") {
        auto U = basic_construction_triangulation(point_complex());
        REQUIRE(U.vertex_count() == 3);
        REQUIRE(U.facets().size() == 2);
    }
    SECTION("S^0 gives the square boundary, subdivided at the corners") {
        auto U = basic_construction_triangulation(two_points());
        REQUIRE(U.vertex_count() == 8);
        REQUIRE(U.facets().size() == 8);
        for (const auto& f : U.facets()) REQUIRE(f.size() == 2);
    }
    SECTION("pentagon cell counts") {
        auto U = basic_construction_triangulation(pentagon());
        auto levels = U.simplices_by_card();
        REQUIRE(levels[1].size() == 152);
        REQUIRE(levels[2].size() == 480);
        REQUIRE(levels[3].size() == 320);
    }
    SECTION("cap") {
        REQUIRE_THROWS_AS(basic_construction_triangulation(heptagon_sphere(), 6),
                          resource_error);
    }
}
