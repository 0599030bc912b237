#ifndef MACKIT_TEST_HELPERS_HPP
#define MACKIT_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "mackit/simplicial.hpp"
#include "mackit/word_complex.hpp"

namespace mackit::testing {

inline SimplicialComplex pentagon() {
    return SimplicialComplex::from_facets(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
}

/// Boundary sphere of the 7-vertex cyclic polytope: subsets of [7] are
/// simplices unless they contain three cyclically consecutive vertices.
inline SimplicialComplex heptagon_sphere() {
    std::vector<std::vector<int>> missing;
    for (int i = 1; i <= 7; ++i)
        missing.push_back({i, (i % 7) + 1, ((i + 1) % 7) + 1});
    return SimplicialComplex::from_missing_faces(7, missing);
}

/// Boundary complex dual to the truncated cube: the octahedron on {1..6}
/// (antipodal pairs (1,6),(2,4),(3,5)) with facet {4,5,6} stacked by 7.
inline SimplicialComplex truncated_cube_complex() {
    return SimplicialComplex::from_facets(
        7, {{1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 6}, {2, 5, 6},
            {3, 4, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}});
}

/// ∂Δ^{n-1} on [n].
inline SimplicialComplex boundary_simplex(int n) {
    std::vector<std::vector<int>> facets;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> f;
        for (int j = 1; j <= n; ++j)
            if (j != i) f.push_back(j);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

inline SimplicialComplex full_simplex(int n) {
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    return SimplicialComplex::from_facets(n, {all});
}

inline SimplicialComplex two_points() {
    return SimplicialComplex::from_facets(2, {{1}, {2}});
}

inline SimplicialComplex point_complex() {
    return SimplicialComplex::from_facets(1, {{1}});
}

inline SimplicialComplex two_disjoint_edges() {
    return SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}});
}

/// Minimal 6-vertex triangulation of the real projective plane.
inline SimplicialComplex projective_plane() {
    return SimplicialComplex::from_facets(
        6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6}, {2, 3, 6},
            {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}});
}

/// Random complex on [m]; every label in [m] is a vertex unless
/// allow_ghosts is set.
inline SimplicialComplex random_complex(std::mt19937_64& rng, int m,
                                        bool allow_ghosts = false) {
    std::uniform_int_distribution<int> nfac(1, std::max(2, m));
    std::uniform_int_distribution<vset> sub(0, vs::full(m));
    std::vector<std::vector<int>> facets;
    int count = nfac(rng);
    for (int i = 0; i < count; ++i) {
        vset s = sub(rng);
        if (s == 0) s = vs::single(1 + int(rng() % vset(m)));
        facets.push_back(vs::elements(s));
    }
    if (!allow_ghosts)
        for (int v = 1; v <= m; ++v) facets.push_back({v});
    return SimplicialComplex::from_facets(m, std::move(facets));
}

inline vset V(std::initializer_list<int> labels) {
    vset s = 0;
    for (int v : labels) s = vs::add(s, v);
    return s;
}

inline CellWord cw(std::initializer_list<int> sigma, std::initializer_list<int> tau) {
    return CellWord::cochain_word(V(sigma), V(tau));
}

inline CellWord ch(std::initializer_list<int> sigma, std::initializer_list<int> tau) {
    return CellWord::chain_word(V(sigma), V(tau));
}

inline HomologyGroup Zn(long long rank) { return HomologyGroup{rank, {}}; }

}  // namespace mackit::testing

#endif
