#ifndef MACKIT_HOMOLOGY_HPP
#define MACKIT_HOMOLOGY_HPP

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>
#include <vector>

#include "mackit/chain_complex.hpp"
#include "mackit/common.hpp"
#include "mackit/homology_group.hpp"
#include "mackit/simplicial.hpp"

namespace mackit {

/// Augmented (reduced) chain complex of K: internal degree q holds the
/// simplices of cardinality q, so q = 0 is the empty simplex and reduced
/// degree p corresponds to q = p + 1. ∂{i} = ∅ per the augmentation.
inline ChainComplex reduced_chain_complex(const SimplicialComplex& K) {
    auto levels = K.simplices_by_card();
    ChainComplex C;
    C.dims.resize(levels.size());
    C.boundary.resize(levels.size());
    std::vector<std::map<std::vector<int>, int>> index(levels.size());
    for (size_t q = 0; q < levels.size(); ++q) {
        C.dims[q] = int(levels[q].size());
        for (size_t i = 0; i < levels[q].size(); ++i)
            index[q][levels[q][i]] = int(i);
    }
    for (size_t q = 1; q < levels.size(); ++q) {
        C.boundary[q].resize(levels[q].size());
        for (size_t j = 0; j < levels[q].size(); ++j) {
            const auto& s = levels[q][j];
            int sign = 1;
            for (size_t k = 0; k < s.size(); ++k) {
                std::vector<int> face = s;
                face.erase(face.begin() + long(k));
                C.boundary[q][j].push_back({index[q - 1].at(face), Int(sign)});
                sign = -sign;
            }
        }
    }
    return C;
}

namespace detail {

/// Same complex, built from a closed family of simplex masks (m <= 32).
inline ChainComplex reduced_chain_complex_masks(const std::vector<vset>& simplices) {
    int maxc = 0;
    for (vset s : simplices) maxc = std::max(maxc, vs::card(s));
    std::vector<std::vector<vset>> levels(size_t(maxc) + 1);
    for (vset s : simplices) levels[size_t(vs::card(s))].push_back(s);
    for (auto& lv : levels) std::sort(lv.begin(), lv.end());

    ChainComplex C;
    C.dims.resize(levels.size());
    C.boundary.resize(levels.size());
    for (size_t q = 0; q < levels.size(); ++q) C.dims[q] = int(levels[q].size());
    for (size_t q = 1; q < levels.size(); ++q) {
        C.boundary[q].resize(levels[q].size());
        for (size_t j = 0; j < levels[q].size(); ++j) {
            vset s = levels[q][j];
            int sign = 1;
            for (vset t = s; t; t &= t - 1) {
                vset face = s & ~(t & -t);
                auto it = std::lower_bound(levels[q - 1].begin(), levels[q - 1].end(),
                                           face);
                C.boundary[q][j].push_back(
                    {int(it - levels[q - 1].begin()), Int(sign)});
                sign = -sign;
            }
        }
    }
    return C;
}

inline GradedHomology to_reduced(const std::vector<HomologyGroup>& h) {
    GradedHomology out;
    out.lowest_degree = -1;
    out.groups = h;
    return out.trimmed();
}

}  // namespace detail

/// Reduced homology of K, degrees from -1 (H̃_{-1}({∅}) = Z).
inline GradedHomology reduced_homology(const SimplicialComplex& K) {
    return detail::to_reduced(homology_all(reduced_chain_complex(K)));
}

/// Reduced cohomology of K (honest dual-complex computation; torsion lands
/// one degree above its homology counterpart, as usual).
inline GradedHomology reduced_cohomology(const SimplicialComplex& K) {
    return detail::to_reduced(cohomology_all(reduced_chain_complex(K)));
}

/// True if some vertex of the family cones the whole complex; such a
/// complex is contractible, so sweeps may skip its homology.
inline bool is_cone_masks(const std::vector<vset>& restricted_facets,
                          const std::vector<vset>& ambient_facets, vset omega) {
    if (restricted_facets.empty()) return false;
    auto member = [&](vset s) {
        for (vset f : ambient_facets)
            if ((s & ~f) == 0) return true;
        return false;
    };
    for (vset v = omega; v;) {
        vset bit = v & -v;
        v &= v - 1;
        bool cones = true;
        for (vset f : restricted_facets)
            if (!member(f | bit)) {
                cones = false;
                break;
            }
        if (cones) return true;
    }
    return false;
}

/// Full reduced (co)homology of one K_ω, by masks.
struct SubsetHomology {
    GradedHomology homology;
    GradedHomology cohomology;
};

namespace detail {

inline std::vector<vset> restricted_facet_masks(const std::vector<vset>& facets,
                                                vset omega) {
    std::vector<vset> out;
    for (vset f : facets) out.push_back(f & omega);
    std::sort(out.begin(), out.end(), [](vset a, vset b) {
        return vs::card(a) != vs::card(b) ? vs::card(a) > vs::card(b) : a < b;
    });
    std::vector<vset> maxi;
    for (vset f : out) {
        bool dominated = false;
        for (vset g : maxi)
            if ((f & ~g) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) maxi.push_back(f);
    }
    return maxi;
}

inline std::vector<vset> closure_masks(const std::vector<vset>& facets) {
    std::unordered_set<vset> seen;
    for (vset f : facets) {
        // enumerate subsets of f
        vset sub = 0;
        while (true) {
            seen.insert(sub);
            if (sub == f) break;
            sub = (sub - f) & f;
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace detail

inline SubsetHomology subset_homology(const SimplicialComplex& K, vset omega,
                                      bool cone_fast_path = true) {
    auto restricted = detail::restricted_facet_masks(K.facet_masks(), omega);
    if (cone_fast_path && is_cone_masks(restricted, K.facet_masks(), omega))
        return {};
    auto C = detail::reduced_chain_complex_masks(detail::closure_masks(restricted));
    SubsetHomology out;
    out.homology = detail::to_reduced(homology_all(C));
    out.cohomology = detail::to_reduced(cohomology_all(C));
    return out;
}

/// The Hochster table: reduced (co)homology of every full subcomplex K_ω,
/// ω enumerated as a binary counter (least vertex = least significant bit).
struct HochsterTable {
    int m = 0;
    std::vector<SubsetHomology> by_mask;  // size 2^m

    const SubsetHomology& at(vset omega) const { return by_mask[omega]; }

    std::vector<vset> nonvanishing() const {
        std::vector<vset> out;
        for (vset w = 0; w < by_mask.size(); ++w)
            if (!by_mask[w].homology.trivial()) out.push_back(w);
        return out;
    }

    /// ⊕_ω H̃_{p-1}(K_ω): homology of (D^1,S^0)^K in cellular degree p.
    GradedHomology word_homology() const {
        GradedHomology acc;
        for (const auto& sh : by_mask) {
            GradedHomology g = sh.homology;
            g.lowest_degree += 1;
            acc = graded_direct_sum(acc, g);
        }
        return acc.trimmed();
    }

    GradedHomology word_cohomology() const {
        GradedHomology acc;
        for (const auto& sh : by_mask) {
            GradedHomology g = sh.cohomology;
            g.lowest_degree += 1;
            acc = graded_direct_sum(acc, g);
        }
        return acc.trimmed();
    }
};

/// Reduced homology of all 2^m full subcomplexes. Independent per ω;
/// computed across `threads` workers (hardware default when 0).
inline HochsterTable reduced_homology_all_subsets(const SimplicialComplex& K,
                                                  int cap = 16, int threads = 0,
                                                  bool cone_fast_path = true) {
    const int m = K.vertex_count();
    if (m > cap)
        throw resource_error("reduced_homology_all_subsets: m = " + std::to_string(m) +
                             " exceeds cap " + std::to_string(cap));
    HochsterTable table;
    table.m = m;
    table.by_mask.resize(size_t(1) << m);
    K.facet_masks();  // materialize before sharing across threads

    int width = threads > 0 ? threads : int(std::thread::hardware_concurrency());
    if (width < 1) width = 1;
    width = std::min<int>(width, int(table.by_mask.size()));

    std::atomic<vset> next{0};
    std::atomic<bool> failed{false};
    std::string error_msg;
    std::mutex err_mutex;
    auto worker = [&]() {
        while (true) {
            vset w = next.fetch_add(1);
            if (w >= table.by_mask.size() || failed.load()) break;
            try {
                table.by_mask[w] = subset_homology(K, w, cone_fast_path);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lk(err_mutex);
                failed.store(true);
                error_msg = e.what();
            }
        }
    };
    if (width == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < width; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) throw invariant_error("subset homology failed: " + error_msg);
    return table;
}

/// Non-reduced Euler characteristic Σ (-1)^p (#p-simplices).
inline long long euler_characteristic(const SimplicialComplex& K) {
    auto levels = K.simplices_by_card();
    long long chi = 0;
    int sign = 1;
    for (size_t q = 1; q < levels.size(); ++q) {
        chi += sign * (long long)levels[q].size();
        sign = -sign;
    }
    return chi;
}

}  // namespace mackit

#endif
