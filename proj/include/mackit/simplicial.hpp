#ifndef MACKIT_SIMPLICIAL_HPP
#define MACKIT_SIMPLICIAL_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mackit/common.hpp"

namespace mackit {

/// Abstract simplicial complex on the vertex set [m], stored by facets.
/// Facets are strictly increasing label lists, mutually incomparable; the
/// empty simplex is always a member. Labels in [m] that appear in no facet
/// are ghost vertices and are preserved.
class SimplicialComplex {
  public:
    /// The empty complex {∅} on zero vertices.
    SimplicialComplex() : m_(0), facets_{{}} {}

    static SimplicialComplex from_facets(int m, std::vector<std::vector<int>> facets) {
        SimplicialComplex K;
        K.m_ = m;
        if (m < 0) throw input_error("vertex count must be nonnegative");
        for (auto& f : facets) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            for (int v : f) check_label_range(v, m);
        }
        K.facets_ = maximalize(std::move(facets));
        return K;
    }

    /// Complex determined by its minimal non-faces: the simplices are
    /// exactly the subsets of [m] containing none of them.
    static SimplicialComplex from_missing_faces(int m,
                                                std::vector<std::vector<int>> missing) {
        for (auto& f : missing) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            for (int v : f) check_label_range(v, m);
            if (f.empty())
                throw input_error("the empty set cannot be a missing face");
        }
        // facets = complements of minimal transversals of the non-face family
        std::vector<std::vector<int>> trans = {{}};
        for (const auto& e : missing) {
            std::vector<std::vector<int>> next;
            for (const auto& t : trans) {
                bool hits = std::find_first_of(t.begin(), t.end(), e.begin(),
                                               e.end()) != t.end();
                if (hits) {
                    next.push_back(t);
                } else {
                    for (int x : e) {
                        auto nt = t;
                        nt.insert(std::lower_bound(nt.begin(), nt.end(), x), x);
                        next.push_back(std::move(nt));
                    }
                }
            }
            // keep minimal ones only
            std::sort(next.begin(), next.end(),
                      [](const auto& a, const auto& b) { return a.size() < b.size(); });
            std::vector<std::vector<int>> mins;
            for (const auto& t : next) {
                bool dominated = false;
                for (const auto& s : mins)
                    if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                        dominated = true;
                        break;
                    }
                if (!dominated) mins.push_back(t);
            }
            trans = std::move(mins);
        }
        std::vector<std::vector<int>> facets;
        for (const auto& t : trans) {
            std::vector<int> f;
            for (int v = 1; v <= m; ++v)
                if (!std::binary_search(t.begin(), t.end(), v)) f.push_back(v);
            facets.push_back(std::move(f));
        }
        return from_facets(m, std::move(facets));
    }

    int vertex_count() const { return m_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    /// dim K = max facet cardinality - 1 (the complex {∅} has dimension -1).
    int dimension() const {
        size_t mx = 0;
        for (const auto& f : facets_) mx = std::max(mx, f.size());
        return int(mx) - 1;
    }

    bool is_pure() const {
        for (const auto& f : facets_)
            if (f.size() != facets_.front().size()) return false;
        return true;
    }

    bool is_simplex(const std::vector<int>& s) const {
        std::vector<int> t = s;
        std::sort(t.begin(), t.end());
        for (int v : t) check_label_range(v, m_);
        for (const auto& f : facets_)
            if (std::includes(f.begin(), f.end(), t.begin(), t.end())) return true;
        return false;
    }

    bool is_simplex_mask(vset s) const {
        if (m_ > 32) throw input_error("mask interface requires m <= 32");
        if (s & ~vs::full(m_)) throw input_error("vertex label out of range");
        for (vset f : facet_masks())
            if ((s & ~f) == 0) return true;
        return false;
    }

    /// Labels that occur in some facet (ghost vertices excluded).
    std::vector<int> vertices() const {
        std::set<int> vs;
        for (const auto& f : facets_) vs.insert(f.begin(), f.end());
        return {vs.begin(), vs.end()};
    }

    bool has_vertex(int i) const {
        for (const auto& f : facets_)
            if (std::binary_search(f.begin(), f.end(), i)) return true;
        return false;
    }

    const std::vector<vset>& facet_masks() const {
        if (m_ > 32) throw input_error("mask interface requires m <= 32");
        if (facet_masks_.empty() && !facets_.empty()) {
            for (const auto& f : facets_) facet_masks_.push_back(vs::from_labels(f));
        }
        return facet_masks_;
    }

    /// All simplices (the empty one included) grouped by cardinality.
    std::vector<std::vector<std::vector<int>>> simplices_by_card() const {
        std::set<std::vector<int>> seen;
        for (const auto& f : facets_) {
            const size_t n = f.size();
            if (n > 25) throw resource_error("simplex enumeration: facet too large");
            for (vset sub = 0; sub < (vset(1) << n); ++sub) {
                std::vector<int> s;
                for (size_t i = 0; i < n; ++i)
                    if (sub >> i & 1) s.push_back(f[i]);
                seen.insert(std::move(s));
            }
        }
        std::vector<std::vector<std::vector<int>>> out(size_t(dimension()) + 2);
        for (auto& s : seen) out[s.size()].push_back(s);
        return out;
    }

    size_t simplex_count() const {
        size_t n = 0;
        for (const auto& level : simplices_by_card()) n += level.size();
        return n;
    }

    bool operator==(const SimplicialComplex& o) const {
        return m_ == o.m_ && facets_ == o.facets_;
    }

  private:
    static std::vector<std::vector<int>> maximalize(std::vector<std::vector<int>> fs) {
        std::sort(fs.begin(), fs.end(),
                  [](const auto& a, const auto& b) { return a.size() > b.size(); });
        std::vector<std::vector<int>> out;
        for (auto& f : fs) {
            bool dominated = false;
            for (const auto& g : out)
                if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                    dominated = true;
                    break;
                }
            if (!dominated) out.push_back(std::move(f));
        }
        if (out.empty()) out.push_back({});
        std::sort(out.begin(), out.end());
        return out;
    }

    int m_ = 0;
    std::vector<std::vector<int>> facets_;
    mutable std::vector<vset> facet_masks_;
};

// ---------------------------------------------------------------------------
// J-tuples and blocks.
// ---------------------------------------------------------------------------

/// An m-tuple of positive integers (j_1, ..., j_m).
struct JTuple {
    std::vector<int> entries;

    JTuple() = default;
    explicit JTuple(std::vector<int> e) : entries(std::move(e)) {
        for (int j : entries)
            if (j < 1) throw input_error("J entries must be positive");
    }
    static JTuple ones(int m) { return JTuple(std::vector<int>(size_t(m), 1)); }
    static JTuple constant(int m, int j) {
        return JTuple(std::vector<int>(size_t(m), j));
    }

    int size() const { return int(entries.size()); }
    int operator[](int i) const { return entries[size_t(i) - 1]; }  // 1-based
    int d() const { return std::accumulate(entries.begin(), entries.end(), 0); }
    bool all_ones() const {
        return std::all_of(entries.begin(), entries.end(), [](int j) { return j == 1; });
    }

    /// Block B_i: the j_i consecutive labels assigned to vertex i.
    std::vector<int> block(int i) const {
        int start = 1;
        for (int k = 1; k < i; ++k) start += entries[size_t(k) - 1];
        std::vector<int> out(size_t(entries[size_t(i) - 1]));
        std::iota(out.begin(), out.end(), start);
        return out;
    }
};

// ---------------------------------------------------------------------------
// Operations.
// ---------------------------------------------------------------------------

inline bool is_simplex(const SimplicialComplex& K, const std::vector<int>& s) {
    return K.is_simplex(s);
}

/// Minimal non-faces of K.
inline std::vector<std::vector<int>> missing_faces(const SimplicialComplex& K) {
    const int m = K.vertex_count();
    if (m > 26) throw resource_error("missing_faces: vertex count too large");
    std::vector<std::vector<int>> out;
    const auto& fm = K.facet_masks();
    auto member = [&](vset s) {
        for (vset f : fm)
            if ((s & ~f) == 0) return true;
        return false;
    };
    for (vset s = 1; s < (vset(1) << m); ++s) {
        if (member(s)) continue;
        bool minimal = true;
        for (vset t = s; t && minimal; t &= t - 1) {
            vset sub = s & ~(t & -t);
            if (!member(sub)) minimal = false;
        }
        if (minimal) out.push_back(vs::elements(s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

/// K_ω, relabeled order-preservingly onto [card(ω)].
inline SimplicialComplex full_subcomplex(const SimplicialComplex& K,
                                         const std::vector<int>& omega) {
    std::vector<int> om = omega;
    std::sort(om.begin(), om.end());
    om.erase(std::unique(om.begin(), om.end()), om.end());
    for (int v : om) check_label_range(v, K.vertex_count());
    std::map<int, int> relabel;
    for (size_t i = 0; i < om.size(); ++i) relabel[om[size_t(i)]] = int(i) + 1;
    std::vector<std::vector<int>> facets;
    for (const auto& f : K.facets()) {
        std::vector<int> g;
        for (int v : f)
            if (relabel.count(v)) g.push_back(relabel[v]);
        facets.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(int(om.size()), std::move(facets));
}

/// Lk(σ, K) on the vertex set {1..m} \ σ (labels preserved, σ's labels
/// become ghosts). σ must be a simplex.
inline SimplicialComplex link(const SimplicialComplex& K, const std::vector<int>& sigma) {
    if (!K.is_simplex(sigma))
        throw input_error("link: σ is not a simplex of K");
    std::vector<int> s = sigma;
    std::sort(s.begin(), s.end());
    std::vector<std::vector<int>> facets;
    for (const auto& f : K.facets()) {
        if (!std::includes(f.begin(), f.end(), s.begin(), s.end())) continue;
        std::vector<int> g;
        std::set_difference(f.begin(), f.end(), s.begin(), s.end(),
                            std::back_inserter(g));
        facets.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(K.vertex_count(), std::move(facets));
}

/// The derived complex K' (vertices = nonempty simplices of K, simplices =
/// chains under proper inclusion) or its augmentation K'_+ (chains may start
/// at ∅; |K'_+| is the cone over |K'|). Vertices of the result are numbered
/// along the (cardinality, lexicographic) order of the simplices of K, with
/// ∅ numbered first when augmented.
inline SimplicialComplex derived_complex(const SimplicialComplex& K, bool augmented) {
    auto levels = K.simplices_by_card();
    std::map<std::vector<int>, int> vid;
    int next = 1;
    if (augmented) vid[{}] = next++;
    for (size_t c = 1; c < levels.size(); ++c)
        for (const auto& s : levels[c]) vid[s] = next++;

    std::vector<std::vector<int>> chains;
    std::vector<int> current;
    // enumerate full flags of each facet by recursion over permutations
    struct Rec {
        const std::map<std::vector<int>, int>& vid;
        std::vector<std::vector<int>>& chains;
        bool augmented;
        void flags(const std::vector<int>& facet, std::vector<int>& sofar,
                   std::vector<int>& chain) {
            if (sofar.size() == facet.size()) {
                std::vector<int> c = chain;
                if (augmented) c.push_back(vid.at({}));
                std::sort(c.begin(), c.end());
                chains.push_back(std::move(c));
                return;
            }
            for (int v : facet) {
                if (std::binary_search(sofar.begin(), sofar.end(), v)) continue;
                std::vector<int> ns = sofar;
                ns.insert(std::lower_bound(ns.begin(), ns.end(), v), v);
                chain.push_back(vid.at(ns));
                flags(facet, ns, chain);
                chain.pop_back();
            }
        }
    } rec{vid, chains, augmented};
    for (const auto& f : K.facets()) {
        if (f.empty()) {
            if (augmented) chains.push_back({vid.at({})});
            continue;
        }
        std::vector<int> sofar, chain;
        rec.flags(f, sofar, chain);
    }
    return SimplicialComplex::from_facets(next - 1, std::move(chains));
}

/// The simplicial wedge K(v_i) on [m+1]: labels > i are shifted up by one,
/// and {i}, {i+1} become the two cone points over K_{[m]\{i}} glued along
/// {i,i+1} * Lk(v_i, K).
inline SimplicialComplex simplicial_wedge(const SimplicialComplex& K, int i) {
    const int m = K.vertex_count();
    check_label_range(i, m);
    if (!K.has_vertex(i))
        throw input_error("simplicial_wedge: " + std::to_string(i) +
                          " is not a vertex of K");
    auto shift = [i](const std::vector<int>& s) {
        std::vector<int> out;
        for (int v : s) out.push_back(v <= i ? v : v + 1);
        return out;
    };
    std::vector<std::vector<int>> facets;
    for (const auto& f : K.facets()) {
        if (std::binary_search(f.begin(), f.end(), i)) {
            // {i,i+1} * Lk(v_i, K) from facets containing i
            std::vector<int> g;
            for (int v : f)
                if (v != i) g.push_back(v);
            g = shift(g);
            g.insert(g.begin(), {i, i + 1});
            std::sort(g.begin(), g.end());
            facets.push_back(std::move(g));
        } else {
            // two cones over K_{[m]\{i}} from facets avoiding i
            auto g = shift(f);
            auto a = g;
            a.insert(std::lower_bound(a.begin(), a.end(), i), i);
            auto b = g;
            b.insert(std::lower_bound(b.begin(), b.end(), i + 1), i + 1);
            facets.push_back(std::move(a));
            facets.push_back(std::move(b));
        }
    }
    return SimplicialComplex::from_facets(m + 1, std::move(facets));
}

/// K(J) on [d(J)], built directly from missing faces: each missing face τ of
/// K inflates to the union of the blocks B_i, i ∈ τ.
inline SimplicialComplex kj_construction(const SimplicialComplex& K, const JTuple& J) {
    if (J.size() != K.vertex_count())
        throw input_error("kj_construction: J length must equal the vertex count");
    std::vector<std::vector<int>> inflated;
    for (const auto& mf : missing_faces(K)) {
        std::vector<int> big;
        for (int i : mf) {
            auto b = J.block(i);
            big.insert(big.end(), b.begin(), b.end());
        }
        std::sort(big.begin(), big.end());
        inflated.push_back(std::move(big));
    }
    return SimplicialComplex::from_missing_faces(J.d(), std::move(inflated));
}

/// K(J) as the iterated simplicial wedge (the test oracle route): wedges are
/// applied from the last vertex down, j_k - 1 of them per vertex.
inline SimplicialComplex kj_wedge_sequence(const SimplicialComplex& K, const JTuple& J) {
    if (J.size() != K.vertex_count())
        throw input_error("kj_wedge_sequence: J length must equal the vertex count");
    SimplicialComplex cur = K;
    for (int k = J.size(); k >= 1; --k)
        for (int t = 0; t <= J[k] - 2; ++t) cur = simplicial_wedge(cur, k + t);
    return cur;
}

/// Triangulation of (D^1,S^0)^K: 2^m mirror copies of the cone over the
/// barycentric subdivision, glued along the subgroup generated by the
/// coordinates in the minimal simplex of each chain. Vertices of the result
/// are classes (σ, g restricted off σ). Intended as a homology oracle only.
inline SimplicialComplex basic_construction_triangulation(const SimplicialComplex& K,
                                                          int cap = 6) {
    const int m = K.vertex_count();
    if (m > cap)
        throw resource_error("basic_construction_triangulation: m > cap (" +
                             std::to_string(cap) + ")");
    if (m > 30) throw resource_error("basic_construction_triangulation: m too large");
    auto levels = K.simplices_by_card();

    std::map<std::pair<vset, vset>, int> vid;  // (σ, g & ~σ) -> label
    auto id_of = [&](vset sigma, vset g) {
        auto key = std::make_pair(sigma, vset(g & ~sigma));
        auto it = vid.find(key);
        if (it != vid.end()) return it->second;
        int fresh = int(vid.size()) + 1;
        vid.emplace(key, fresh);
        return fresh;
    };

    std::set<std::vector<int>> facets;
    // maximal chains of K'_+ : ∅ ⊂ σ_1 ⊂ ... ⊂ σ_k (a full flag of a facet)
    struct Rec {
        std::vector<std::vector<vset>> flags;
        void run(const std::vector<int>& facet, vset sofar, std::vector<vset>& chain) {
            if (vs::card(sofar) == int(facet.size())) {
                flags.push_back(chain);
                return;
            }
            for (int v : facet) {
                if (vs::contains(sofar, v)) continue;
                chain.push_back(vs::add(sofar, v));
                run(facet, vs::add(sofar, v), chain);
                chain.pop_back();
            }
        }
    } rec;
    for (const auto& f : K.facets()) {
        std::vector<vset> chain;
        rec.run(f, 0, chain);
    }

    const vset gall = vs::full(m);
    for (vset g = 0;; ++g) {
        for (const auto& flag : rec.flags) {
            std::vector<int> cell;
            cell.push_back(id_of(0, g));  // the cone apex (∅)
            for (vset s : flag) cell.push_back(id_of(s, g));
            std::sort(cell.begin(), cell.end());
            facets.insert(std::move(cell));
        }
        if (g == gall) break;
    }
    std::vector<std::vector<int>> fl(facets.begin(), facets.end());
    return SimplicialComplex::from_facets(int(vid.size()), std::move(fl));
}

}  // namespace mackit

#endif
