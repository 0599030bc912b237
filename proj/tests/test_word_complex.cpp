#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "helpers.hpp"
#include "mackit/products.hpp"
#include "mackit/word_complex.hpp"

using namespace mackit;
using namespace mackit::testing;

namespace {

CellWord random_chain_word(std::mt19937_64& rng, const SimplicialComplex& K) {
    const int m = K.vertex_count();
    while (true) {
        vset s = vset(rng()) & vs::full(m);
        if (!K.is_simplex_mask(s)) continue;
        vset t = vset(rng()) & vs::full(m) & ~s;
        return CellWord::chain_word(s, t);
    }
}

CellWord random_cochain_word(std::mt19937_64& rng, const SimplicialComplex& K) {
    auto w = random_chain_word(rng, K);
    return CellWord::cochain_word(w.sigma, w.tau);
}

}  // namespace

TEST_CASE("boundary of words") {
    SECTION("edge word") {
        CellChain expect(WordFlavor::chain);
        expect.add(ch({2}, {1}), 1);
        expect.add(ch({1}, {2}), -1);
        REQUIRE(boundary(ch({1, 2}, {})) == expect);
    }
    SECTION("void word") { REQUIRE(boundary(ch({}, {})).zero()); }
    SECTION("boundary squared") {
        REQUIRE(boundary(boundary(CellChain(ch({1, 2, 3}, {4})))).zero());
    }
    SECTION("flavor guard") {
        REQUIRE_THROWS_AS(boundary(cw({1}, {})), input_error);
    }
}

TEST_CASE("coboundary of words") {
    auto P = pentagon();
    SECTION("u1 t3 is a cocycle on the pentagon") {
        REQUIRE(coboundary(cw({1}, {3}), P).zero());
    }
    SECTION("void cochain") {
        REQUIRE(coboundary(cw({}, {}), P).zero());
    }
    SECTION("u1 t2 hits the edge with a sign") {
        CellChain expect(WordFlavor::cochain);
        expect.add(cw({1, 2}, {}), -1);
        REQUIRE(coboundary(cw({1}, {2}), P) == expect);
    }
    SECTION("flavor guard") {
        REQUIRE_THROWS_AS(coboundary(ch({1}, {}), P), input_error);
    }
}

TEST_CASE("differentials square to zero on random words") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 400; ++trial) {
        auto K = random_complex(rng, 1 + int(rng() % 8), trial % 4 == 0);
        auto w = random_chain_word(rng, K);
        REQUIRE(boundary(boundary(CellChain(w))).zero());
        auto c = random_cochain_word(rng, K);
        REQUIRE(coboundary(coboundary(CellChain(c), K), K).zero());
    }
}

TEST_CASE("boundary agrees with the tensor-complex boundary") {
    // independent route: expand the word into product cells, apply the
    // product boundary slotwise, then convert back
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + int(rng() % 5);
        auto K = random_complex(rng, m, trial % 3 == 0);
        auto w = random_chain_word(rng, K);
        ProductExpr cells = word_to_product_chain(w, m);
        ProductExpr bd;
        for (const auto& [cell, c] : cells)
            for (const auto& [face, v] : product_cell_boundary(cell))
                expr_add(bd, face, c * v);
        REQUIRE(product_to_word_chain(bd, m) == boundary(CellChain(w)));
    }
}

TEST_CASE("coboundary agrees with the dual tensor route") {
    // d(c) evaluated by pairing c with the boundaries of all cells of A
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 1 + int(rng() % 4);
        auto K = random_complex(rng, m, trial % 3 == 0);
        auto A = real_mac_product_complex(K);
        auto c = random_cochain_word(rng, K);
        ProductExpr cc = word_to_product_cochain(c, m);
        ProductExpr dual;
        for (const auto& cell : A.cells()) {
            long long pair = 0;
            for (const auto& [face, v] : product_cell_boundary(cell)) {
                auto it = cc.find(face);
                if (it != cc.end()) pair += v * it->second;
            }
            if (pair) expr_add(dual, cell, pair);
        }
        REQUIRE(product_to_word_cochain(dual, m) == coboundary(CellChain(c), K));
    }
}

TEST_CASE("mu and eta isomorphisms") {
    auto P = pentagon();
    SECTION("void images") {
        REQUIRE(mu_iso(P, 0, 0) == ch({}, {}));
        REQUIRE(eta_iso(P, 0, 0) == cw({}, {}));
    }
    SECTION("direct definition") {
        REQUIRE(mu_iso(P, V({1, 2}), V({1, 2, 3})) == ch({1, 2}, {3}));
        REQUIRE(eta_iso(P, V({1}), V({1, 3})) == cw({1}, {3}));
    }
    SECTION("containment guard") {
        REQUIRE_THROWS_AS(mu_iso(P, V({1}), V({2, 3})), input_error);
        REQUIRE_THROWS_AS(eta_iso(P, V({1, 3}), V({1, 3})), input_error);
    }
}

namespace {

/// Augmented simplicial boundary of σ inside K_ω, pushed through μ.
CellChain mu_of_boundary(const SimplicialComplex& K, vset sigma, vset omega) {
    CellChain out(WordFlavor::chain);
    for (int i : vs::elements(sigma)) {
        int sign = vs::order_sign_exp(i, sigma) % 2 ? -1 : 1;
        out.add(mu_iso(K, vs::remove(sigma, i), omega), sign);
    }
    return out;
}

/// Augmented simplicial coboundary of σ* inside K_ω, pushed through η.
CellChain eta_of_coboundary(const SimplicialComplex& K, vset sigma, vset omega) {
    CellChain out(WordFlavor::cochain);
    for (int i : vs::elements(omega & ~sigma)) {
        vset bigger = vs::add(sigma, i);
        if (!K.is_simplex_mask(bigger)) continue;
        int sign = vs::order_sign_exp(i, sigma) % 2 ? -1 : 1;
        out.add(eta_iso(K, bigger, omega), sign);
    }
    return out;
}

}  // namespace

TEST_CASE("mu and eta commute with the differentials (pentagon, exhaustive)") {
    auto P = pentagon();
    const vset all = vs::full(5);
    int checked = 0;
    vs::for_each_subset(all, [&](vset omega) {
        vs::for_each_subset(omega, [&](vset sigma) {
            if (!P.is_simplex_mask(sigma)) return;
            REQUIRE(boundary(CellChain(mu_iso(P, sigma, omega))) ==
                    mu_of_boundary(P, sigma, omega));
            REQUIRE(coboundary(CellChain(eta_iso(P, sigma, omega)), P) ==
                    eta_of_coboundary(P, sigma, omega));
            ++checked;
        });
    });
    REQUIRE(checked > 100);
}

TEST_CASE("mu and eta are basis bijections (m <= 5, exhaustive)") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 1 + int(rng() % 5);
        auto K = random_complex(rng, m, trial % 3 == 0);
        for (int p = 0; p <= K.dimension() + 1; ++p) {
            auto basis = word_basis(K, p, WordFlavor::chain);
            std::set<CellWord> seen;
            vs::for_each_subset(vs::full(m), [&](vset omega) {
                vs::for_each_subset(omega, [&](vset sigma) {
                    if (vs::card(sigma) != p || !K.is_simplex_mask(sigma)) return;
                    seen.insert(mu_iso(K, sigma, omega));
                });
            });
            REQUIRE(seen.size() == basis.words.size());
        }
    }
}

TEST_CASE("cellular homology of the key examples") {
    SECTION("pentagon: genus-5 surface") {
        auto h = cellular_homology(pentagon());
        REQUIRE(h.lowest_degree == 0);
        REQUIRE(h.groups == std::vector<HomologyGroup>{Zn(1), Zn(10), Zn(1)});
    }
    SECTION("heptagon sphere: connected sum of seven S^2 x S^2") {
        auto h = cellular_homology(heptagon_sphere());
        REQUIRE(h.groups ==
                std::vector<HomologyGroup>{Zn(1), Zn(0), Zn(14), Zn(0), Zn(1)});
    }
    SECTION("S^0 gives the circle") {
        auto h = cellular_homology(two_points());
        REQUIRE(h.groups == std::vector<HomologyGroup>{Zn(1), Zn(1)});
    }
    SECTION("point gives a point") {
        auto h = cellular_homology(point_complex());
        REQUIRE(h.groups == std::vector<HomologyGroup>{Zn(1)});
    }
}

TEST_CASE("direct route equals the subset-sum route, torsion included") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 1 + int(rng() % 7);
        auto K = random_complex(rng, m, trial % 3 == 0);
        REQUIRE(cellular_homology_direct(K) == cellular_homology(K));
        REQUIRE(cellular_cohomology_direct(K) == cellular_cohomology(K));
    }
    SECTION("a complex with torsion in its word homology") {
        auto K = projective_plane();
        auto direct = cellular_homology_direct(K);
        auto split = cellular_homology(K);
        REQUIRE(direct == split);
        REQUIRE(direct.at(2).torsion == std::vector<long long>{2});
    }
}

TEST_CASE("word homology equals the basic construction triangulation") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        const int m = 1 + int(rng() % 5);
        auto K = random_complex(rng, m, trial % 3 == 0);
        auto U = basic_construction_triangulation(K, 5);
        auto hU = reduced_homology(U);
        GradedHomology expect = cellular_homology(K);
        if (!expect.groups.empty() && expect.lowest_degree == 0)
            expect.groups[0].rank -= 1;  // reduced vs unreduced H_0
        REQUIRE(hU == expect.trimmed());
    }
}

TEST_CASE("word rendering") {
    REQUIRE(ch({1, 2}, {3}).to_string() == "u{1,2}e{3}");
    REQUIRE(cw({1, 2}, {3}).to_string() == "u{1,2}t{3}");
    REQUIRE(ch({}, {}).to_string() == "1");
    CellChain z(WordFlavor::chain);
    REQUIRE(z.to_string() == "0");
}
