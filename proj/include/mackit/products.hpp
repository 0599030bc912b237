#ifndef MACKIT_PRODUCTS_HPP
#define MACKIT_PRODUCTS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mackit/common.hpp"
#include "mackit/presentation.hpp"
#include "mackit/simplicial.hpp"
#include "mackit/word_complex.hpp"

namespace mackit {

// ---------------------------------------------------------------------------
// Shuffle signs.
// ---------------------------------------------------------------------------

/// (p,q) = Σ_i q_i Σ_{j>i} p_j mod 2.
inline int shuffle_sign_exp(const std::vector<int>& p, const std::vector<int>& q) {
    if (p.size() != q.size())
        throw input_error("shuffle sign: degree vectors must have equal length");
    long long total = 0;
    long long suffix = 0;
    for (size_t i = p.size(); i-- > 0;) {
        total += q[i] * suffix;
        suffix += p[i];
    }
    return int(total & 1);
}

/// Same for 0/1 degree vectors given as vertex masks (p = v(σ), q = v(σ')).
inline int shuffle_sign_exp(vset p, vset q) {
    int total = 0;
    for (int i : vs::elements(q))
        total += __builtin_popcountll(static_cast<std::uint64_t>(p) >> i);
    return total & 1;
}

// ---------------------------------------------------------------------------
// Simplicial cup and cap products (ordered simplices, front/back faces).
// ---------------------------------------------------------------------------

using Simplex = std::vector<int>;               // strictly increasing labels
using SimplicialExpr = std::map<Simplex, long long>;  // chain or cochain

inline void expr_add(SimplicialExpr& e, const Simplex& s, long long c) {
    if (c == 0) return;
    auto it = e.find(s);
    if (it == e.end())
        e.emplace(s, c);
    else {
        it->second += c;
        if (it->second == 0) e.erase(it);
    }
}

/// (c^p ⌣ c^q)([v_0..v_{p+q}]) = c^p(front) c^q(back).
inline SimplicialExpr simplicial_cup(const SimplicialExpr& c1, const SimplicialExpr& c2,
                                     const SimplicialComplex& K) {
    SimplicialExpr out;
    for (const auto& [s1, a] : c1)
        for (const auto& [s2, b] : c2) {
            if (s1.empty() || s2.empty()) continue;
            if (s1.back() != s2.front()) continue;
            Simplex s = s1;
            s.insert(s.end(), s2.begin() + 1, s2.end());
            bool increasing = true;
            for (size_t i = 0; i + 1 < s.size(); ++i)
                if (s[i] >= s[i + 1]) increasing = false;
            if (!increasing) continue;
            if (!K.is_simplex(s)) continue;
            expr_add(out, s, a * b);
        }
    return out;
}

/// c^p ⌢ [i_0..i_r] = c^p([i_{r-p}..i_r]) [i_0..i_{r-p}].
inline SimplicialExpr simplicial_cap(const SimplicialExpr& c, const SimplicialExpr& z,
                                     const SimplicialComplex& K) {
    (void)K;
    SimplicialExpr out;
    for (const auto& [s, a] : c)
        for (const auto& [t, b] : z) {
            if (s.empty() || t.size() < s.size()) continue;
            const size_t p1 = s.size();  // p + 1 vertices
            bool match = std::equal(s.begin(), s.end(), t.end() - long(p1));
            if (!match) continue;
            Simplex front(t.begin(), t.end() - long(p1) + 1);
            expr_add(out, front, a * b);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Products of simplicial complexes as CW complexes, and Whitney's formulae
// on boundary-closed subcomplexes.
// ---------------------------------------------------------------------------

struct ProductCell {
    std::vector<Simplex> parts;  // one nonempty simplex per factor

    int degree() const {
        int d = 0;
        for (const auto& s : parts) d += int(s.size()) - 1;
        return d;
    }
    std::vector<int> degree_vector() const {
        std::vector<int> out;
        for (const auto& s : parts) out.push_back(int(s.size()) - 1);
        return out;
    }
    auto operator<=>(const ProductCell&) const = default;
};

using ProductExpr = std::map<ProductCell, long long>;

inline void expr_add(ProductExpr& e, const ProductCell& s, long long c) {
    if (c == 0) return;
    auto it = e.find(s);
    if (it == e.end())
        e.emplace(s, c);
    else {
        it->second += c;
        if (it->second == 0) e.erase(it);
    }
}

/// ∂(⊗ c_i) with the Koszul sign (-1)^{Σ_{j<i} deg c_j} on the i-th slot.
inline ProductExpr product_cell_boundary(const ProductCell& cell) {
    ProductExpr out;
    int presign = 0;
    for (size_t i = 0; i < cell.parts.size(); ++i) {
        const Simplex& s = cell.parts[i];
        if (s.size() >= 2) {
            int sign = 1;
            for (size_t k = 0; k < s.size(); ++k) {
                ProductCell face = cell;
                face.parts[i].erase(face.parts[i].begin() + long(k));
                expr_add(out, face, (presign % 2 ? -1 : 1) * sign);
                sign = -sign;
            }
        }
        presign += int(s.size()) - 1;
    }
    return out;
}

/// A cell subcomplex A of ∏|K_i|, stored as an explicit cell set.
class ProductComplex {
  public:
    ProductComplex(std::vector<SimplicialComplex> factors, std::set<ProductCell> cells)
        : factors_(std::move(factors)), cells_(std::move(cells)) {
        for (const auto& cell : cells_) {
            if (cell.parts.size() != factors_.size())
                throw input_error("product cell arity mismatch");
            for (size_t i = 0; i < cell.parts.size(); ++i)
                if (cell.parts[i].empty() ||
                    !factors_[i].is_simplex(cell.parts[i]))
                    throw input_error("product cell part is not a simplex");
            for (const auto& [face, c] : product_cell_boundary(cell))
                if (!cells_.count(face))
                    throw input_error("product subcomplex is not boundary-closed");
        }
    }

    const std::vector<SimplicialComplex>& factors() const { return factors_; }
    const std::set<ProductCell>& cells() const { return cells_; }
    bool contains(const ProductCell& c) const { return cells_.count(c) > 0; }

  private:
    std::vector<SimplicialComplex> factors_;
    std::set<ProductCell> cells_;
};

/// (⊗ c^{p_i}) ⌣ (⊗ c^{q_i}) = (-1)^{(p,q)} ⊗ (c^{p_i} ⌣ c^{q_i}), then
/// restricted to A (cells outside A are dropped).
inline ProductExpr whitney_cup(const ProductExpr& a, const ProductExpr& b,
                               const ProductComplex& A) {
    const auto& factors = A.factors();
    ProductExpr out;
    for (const auto& [ca, va] : a)
        for (const auto& [cb, vb] : b) {
            int sign = shuffle_sign_exp(ca.degree_vector(), cb.degree_vector());
            ProductCell res;
            res.parts.resize(factors.size());
            bool alive = true;
            for (size_t i = 0; i < factors.size() && alive; ++i) {
                SimplicialExpr f1{{ca.parts[i], 1}}, f2{{cb.parts[i], 1}};
                auto f = simplicial_cup(f1, f2, factors[i]);
                if (f.empty())
                    alive = false;
                else
                    res.parts[i] = f.begin()->first;  // single unit term
            }
            if (!alive) continue;
            if (!A.contains(res)) continue;
            expr_add(out, res, (sign ? -1 : 1) * va * vb);
        }
    return out;
}

/// (⊗ c^{p_i}) ⌢ (⊗ c_{r_i}) = (-1)^{(r-p,p)} ⊗ (c^{p_i} ⌢ c_{r_i}).
inline ProductExpr whitney_cap(const ProductExpr& a, const ProductExpr& z,
                               const ProductComplex& A) {
    const auto& factors = A.factors();
    ProductExpr out;
    for (const auto& [ca, va] : a)
        for (const auto& [cz, vz] : z) {
            auto p = ca.degree_vector();
            auto r = cz.degree_vector();
            std::vector<int> rp(p.size());
            for (size_t i = 0; i < p.size(); ++i) rp[i] = r[i] - p[i];
            int sign = shuffle_sign_exp(rp, p);
            ProductCell res;
            res.parts.resize(factors.size());
            bool alive = true;
            for (size_t i = 0; i < factors.size() && alive; ++i) {
                SimplicialExpr f1{{ca.parts[i], 1}}, f2{{cz.parts[i], 1}};
                auto f = simplicial_cap(f1, f2, factors[i]);
                if (f.empty())
                    alive = false;
                else
                    res.parts[i] = f.begin()->first;
            }
            if (!alive) continue;
            expr_add(out, res, (sign ? -1 : 1) * va * vz);
        }
    return out;
}

// ---------------------------------------------------------------------------
// The interval I = [-1,1] (vertex 1 = -1, vertex 2 = +1) and the cell
// subcomplex (D^1,S^0)^K of I^m, with the Def-3.3 change of basis between
// product cells and words.
// ---------------------------------------------------------------------------

inline SimplicialComplex interval_complex() {
    return SimplicialComplex::from_facets(2, {{1, 2}});
}

/// All cells of (D^1,S^0)^K inside I^m: the u-positions must span a simplex.
inline ProductComplex real_mac_product_complex(const SimplicialComplex& K) {
    const int m = K.vertex_count();
    if (m > 20) throw resource_error("product complex: m too large");
    std::vector<SimplicialComplex> factors(size_t(m), interval_complex());
    std::set<ProductCell> cells;
    const Simplex edge = {1, 2}, lo = {1}, hi = {2};
    for (vset sigma = 0; sigma < (vset(1) << m); ++sigma) {
        if (!K.is_simplex_mask(sigma)) continue;
        vset rest = vs::full(m) & ~sigma;
        vs::for_each_subset(rest, [&](vset his) {
            ProductCell cell;
            cell.parts.resize(size_t(m));
            for (int i = 1; i <= m; ++i) {
                if (vs::contains(sigma, i))
                    cell.parts[size_t(i) - 1] = edge;
                else if (vs::contains(his, i))
                    cell.parts[size_t(i) - 1] = hi;
                else
                    cell.parts[size_t(i) - 1] = lo;
            }
            cells.insert(std::move(cell));
        });
    }
    return ProductComplex(std::move(factors), std::move(cells));
}

/// u_σ ε_τ as a product chain: ε expands to (+1) - (-1) slotwise.
inline ProductExpr word_to_product_chain(const CellWord& w, int m) {
    if (w.flavor != WordFlavor::chain) throw input_error("expected a chain word");
    ProductExpr out;
    const int tau_card = vs::card(w.tau);
    vs::for_each_subset(w.tau, [&](vset his) {
        ProductCell cell;
        cell.parts.resize(size_t(m));
        for (int i = 1; i <= m; ++i) {
            if (vs::contains(w.sigma, i))
                cell.parts[size_t(i) - 1] = {1, 2};
            else if (vs::contains(his, i))
                cell.parts[size_t(i) - 1] = {2};
            else
                cell.parts[size_t(i) - 1] = {1};
        }
        int negs = tau_card - vs::card(his);
        expr_add(out, cell, negs % 2 ? -1 : 1);
    });
    return out;
}

/// u^σ t^τ as a product cochain: δ* expands to (-1)* + (+1)* slotwise.
inline ProductExpr word_to_product_cochain(const CellWord& w, int m) {
    if (w.flavor != WordFlavor::cochain) throw input_error("expected a cochain word");
    ProductExpr out;
    vset deltas = vs::full(m) & ~(w.sigma | w.tau);
    vs::for_each_subset(deltas, [&](vset his) {
        ProductCell cell;
        cell.parts.resize(size_t(m));
        for (int i = 1; i <= m; ++i) {
            if (vs::contains(w.sigma, i))
                cell.parts[size_t(i) - 1] = {1, 2};
            else if (vs::contains(w.tau, i) || vs::contains(his, i))
                cell.parts[size_t(i) - 1] = {2};
            else
                cell.parts[size_t(i) - 1] = {1};
        }
        expr_add(out, cell, 1);
    });
    return out;
}

inline ProductExpr word_to_product(const CellChain& z, int m) {
    ProductExpr out;
    for (const auto& [w, c] : z.terms()) {
        ProductExpr e = z.flavor() == WordFlavor::chain ? word_to_product_chain(w, m)
                                                        : word_to_product_cochain(w, m);
        for (const auto& [cell, v] : e) expr_add(out, cell, c * v);
    }
    return out;
}

/// Inverse change of basis: a product chain supported on I^m cells, written
/// in the word basis (t = ε + t̲ slotwise).
inline CellChain product_to_word_chain(const ProductExpr& e, int m) {
    CellChain out(WordFlavor::chain);
    for (const auto& [cell, c] : e) {
        vset sigma = 0, ts = 0;
        for (int i = 1; i <= m; ++i) {
            const Simplex& s = cell.parts[size_t(i) - 1];
            if (s.size() == 2)
                sigma = vs::add(sigma, i);
            else if (s[0] == 2)
                ts = vs::add(ts, i);
        }
        vs::for_each_subset(ts, [&](vset tau) {
            out.add(CellWord::chain_word(sigma, tau), c);
        });
    }
    return out;
}

/// A product cochain in the word basis (t̲* = δ* - t* slotwise).
inline CellChain product_to_word_cochain(const ProductExpr& e, int m) {
    CellChain out(WordFlavor::cochain);
    for (const auto& [cell, c] : e) {
        vset sigma = 0, los = 0, his = 0;
        for (int i = 1; i <= m; ++i) {
            const Simplex& s = cell.parts[size_t(i) - 1];
            if (s.size() == 2)
                sigma = vs::add(sigma, i);
            else if (s[0] == 2)
                his = vs::add(his, i);
            else
                los = vs::add(los, i);
        }
        vs::for_each_subset(los, [&](vset extra) {
            out.add(CellWord::cochain_word(sigma, his | extra),
                    vs::card(extra) % 2 ? -c : c);
        });
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closed forms on the word complex.
// ---------------------------------------------------------------------------

/// u^σ t^τ ⌣ u^{σ'} t^{τ'} = (-1)^{(v(σ),v(σ'))} u^{σ∪σ'} t^{τ∪(τ'\σ)},
/// provided σ' ∩ (σ∪τ) = ∅ and σ∪σ' ∈ K; zero otherwise.
inline CellChain word_cup(const CellWord& a, const CellWord& b,
                          const SimplicialComplex& K) {
    if (a.flavor != WordFlavor::cochain || b.flavor != WordFlavor::cochain)
        throw input_error("word_cup: expected cochain words");
    CellChain out(WordFlavor::cochain);
    if (b.sigma & (a.sigma | a.tau)) return out;
    vset s = a.sigma | b.sigma;
    if (!K.is_simplex_mask(s)) return out;
    int sign = shuffle_sign_exp(a.sigma, b.sigma);
    out.add(CellWord::cochain_word(s, a.tau | (b.tau & ~a.sigma)), sign ? -1 : 1);
    return out;
}

inline CellChain word_cup(const CellChain& a, const CellChain& b,
                          const SimplicialComplex& K) {
    CellChain out(WordFlavor::cochain);
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) out += (ca * cb) * word_cup(wa, wb, K);
    return out;
}

/// u^σ t^τ ⌢ u_{σ''} ε_{τ''} =
///   (-1)^{(v(σ''\σ),v(σ))} Σ_{γ ⊆ τ\σ''} u_{σ''\σ} ε_{τ''\γ},
/// provided σ ⊆ σ'' and τ ⊆ σ''∪τ''; zero otherwise.
inline CellChain word_cap(const CellWord& a, const CellWord& z,
                          const SimplicialComplex& K) {
    (void)K;
    if (a.flavor != WordFlavor::cochain) throw input_error("word_cap: cochain expected");
    if (z.flavor != WordFlavor::chain) throw input_error("word_cap: chain expected");
    CellChain out(WordFlavor::chain);
    if (a.sigma & ~z.sigma) return out;
    if (a.tau & ~(z.sigma | z.tau)) return out;
    int sign = shuffle_sign_exp(vset(z.sigma & ~a.sigma), a.sigma);
    vset free = a.tau & ~z.sigma;
    vs::for_each_subset(free, [&](vset gamma) {
        out.add(CellWord::chain_word(z.sigma & ~a.sigma, z.tau & ~gamma),
                sign ? -1 : 1);
    });
    return out;
}

inline CellChain word_cap(const CellChain& a, const CellChain& z,
                          const SimplicialComplex& K) {
    CellChain out(WordFlavor::chain);
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wz, cz] : z.terms()) out += (ca * cz) * word_cap(wa, wz, K);
    return out;
}

// ---------------------------------------------------------------------------
// (Co)homology classes of the word complex. Both differentials preserve
// ω = σ ∪ τ, so class reduction happens inside the small ω-graded pieces
// (each isomorphic to the reduced complex of K_ω through μ / η).
// ---------------------------------------------------------------------------

class WordClasses {
  public:
    WordClasses(const SimplicialComplex& K, WordFlavor flavor)
        : K_(K), flavor_(flavor) {}

    /// Per-(ω, degree) class coordinates of a degree-homogeneous cycle;
    /// ω-pieces whose coordinates vanish are omitted.
    std::map<vset, QuotientPresentation::ClassCoords> coords(const CellChain& z,
                                                             int degree) {
        std::map<vset, std::vector<std::pair<vset, long long>>> pieces;
        for (const auto& [w, c] : z.terms()) {
            if (w.flavor != flavor_ || w.degree() != degree)
                throw input_error("word class: wrong flavor or degree");
            pieces[w.sigma | w.tau].push_back({w.sigma, c});
        }
        std::map<vset, QuotientPresentation::ClassCoords> out;
        for (const auto& [omega, terms] : pieces) {
            const auto& basis = piece_basis(omega, degree);
            std::vector<Int> v(basis.size(), Int(0));
            for (const auto& [sigma, c] : terms) {
                auto it = std::lower_bound(basis.begin(), basis.end(), sigma,
                                           vs::lex_less);
                v[size_t(it - basis.begin())] = c;
            }
            auto cc = piece(omega, degree).coords(v);
            if (!cc.zero()) out.emplace(omega, std::move(cc));
        }
        return out;
    }

    bool is_trivial_class(const CellChain& z, int degree) {
        return coords(z, degree).empty();
    }

    bool same_class(const CellChain& a, const CellChain& b, int degree) {
        return coords(a - b, degree).empty();
    }

    /// Direct sum of the piece groups in degree p.
    HomologyGroup group(int p) {
        HomologyGroup acc;
        for (vset omega = 0;; ++omega) {
            if (vs::card(omega) >= p)
                acc = direct_sum(acc, piece(omega, p).group());
            if (omega == vs::full(K_.vertex_count())) break;
        }
        return acc;
    }

    /// Canonical cycle representatives of the free part of H in degree p:
    /// ω ascending as a binary counter, presentation generators in order.
    std::vector<CellChain> free_basis(int p) {
        std::vector<CellChain> out;
        for (vset omega = 0;; ++omega) {
            if (vs::card(omega) >= p) {
                auto& pres = piece(omega, p);
                for (int j = 0; j < pres.free_rank(); ++j)
                    out.push_back(from_vector(pres.free_generator(j), omega, p));
            }
            if (omega == vs::full(K_.vertex_count())) break;
        }
        return out;
    }

    /// Free coordinates of a cycle against the free_basis(p) ordering.
    std::vector<Int> free_coords(const CellChain& z, int p) {
        auto cc = coords(z, p);
        std::vector<Int> out;
        for (vset omega = 0;; ++omega) {
            if (vs::card(omega) >= p) {
                int rank = piece(omega, p).free_rank();
                auto it = cc.find(omega);
                for (int j = 0; j < rank; ++j)
                    out.push_back(it == cc.end() ? Int(0) : it->second.free[size_t(j)]);
            }
            if (omega == vs::full(K_.vertex_count())) break;
        }
        return out;
    }

  private:
    const std::vector<vset>& piece_basis(vset omega, int degree) {
        auto key = std::make_pair(omega, degree);
        auto it = bases_.find(key);
        if (it != bases_.end()) return it->second;
        std::vector<vset> basis;
        vs::for_each_subset(omega, [&](vset s) {
            if (vs::card(s) == degree && K_.is_simplex_mask(s)) basis.push_back(s);
        });
        std::sort(basis.begin(), basis.end(), vs::lex_less);
        return bases_.emplace(key, std::move(basis)).first->second;
    }

    QuotientPresentation& piece(vset omega, int degree) {
        auto key = std::make_pair(omega, degree);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        IntMat outgoing = flavor_ == WordFlavor::chain
                              ? piece_matrix(omega, degree, degree - 1)
                              : piece_matrix(omega, degree, degree + 1);
        IntMat incoming = flavor_ == WordFlavor::chain
                              ? piece_matrix(omega, degree + 1, degree)
                              : piece_matrix(omega, degree - 1, degree);
        return cache_.emplace(key, QuotientPresentation(outgoing, incoming))
            .first->second;
    }

    /// Differential matrix between the (ω, from) and (ω, to) piece bases
    /// (to = from ± 1 selects boundary vs coboundary direction).
    IntMat piece_matrix(vset omega, int from, int to) {
        const auto& src = piece_basis(omega, from);
        const auto& dst = piece_basis(omega, to);
        IntMat M(int(dst.size()), int(src.size()));
        for (size_t j = 0; j < src.size(); ++j) {
            CellChain img(flavor_);
            if (flavor_ == WordFlavor::chain)
                img = boundary(CellWord::chain_word(src[j], omega & ~src[j]));
            else
                img = coboundary(CellWord::cochain_word(src[j], omega & ~src[j]), K_);
            for (const auto& [w, c] : img.terms()) {
                auto it = std::lower_bound(dst.begin(), dst.end(), w.sigma,
                                           vs::lex_less);
                M(int(it - dst.begin()), int(j)) = c;
            }
        }
        return M;
    }

    CellChain from_vector(const std::vector<Int>& v, vset omega, int degree) {
        const auto& basis = piece_basis(omega, degree);
        CellChain out(flavor_);
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0)
                out.add(flavor_ == WordFlavor::chain
                            ? CellWord::chain_word(basis[i], omega & ~basis[i])
                            : CellWord::cochain_word(basis[i], omega & ~basis[i]),
                        static_cast<long long>(v[i]));
        return out;
    }

    SimplicialComplex K_;
    WordFlavor flavor_;
    std::map<std::pair<vset, int>, std::vector<vset>> bases_;
    std::map<std::pair<vset, int>, QuotientPresentation> cache_;
};

// ---------------------------------------------------------------------------
// Fundamental class and Poincaré duality.
// ---------------------------------------------------------------------------

/// Generator of H_n of the word complex (n = dim K + 1), as μ of a top
/// simplicial cycle of K, signed so the lexicographically least word gets
/// coefficient +1. Requires the top homology to be Z.
inline CellChain fundamental_class(const SimplicialComplex& K, int cap = 16,
                                   int threads = 0) {
    const int n = K.dimension() + 1;
    auto top = cellular_homology(K, cap, threads).at(n);
    if (top.rank != 1 || !top.torsion.empty())
        throw input_error(
            "fundamental_class: top homology is not Z (not an orientable "
            "homology manifold)");

    // kernel of the top simplicial boundary (card n -> card n-1), augmented
    auto levels = K.simplices_by_card();
    const auto& tops = levels[size_t(n)];
    const auto& subs = levels[size_t(n) - 1];
    std::map<std::vector<int>, int> sub_index;
    for (size_t i = 0; i < subs.size(); ++i) sub_index[subs[i]] = int(i);
    IntMat D(int(subs.size()), int(tops.size()));
    for (size_t j = 0; j < tops.size(); ++j) {
        int sign = 1;
        for (size_t k = 0; k < tops[j].size(); ++k) {
            std::vector<int> face = tops[j];
            face.erase(face.begin() + long(k));
            D(sub_index.at(face), int(j)) = sign;
            sign = -sign;
        }
    }
    auto dec = smith_decompose(D);
    IntMat ker = kernel_basis(dec);
    if (ker.cols() != 1)
        throw input_error("fundamental_class: top cycle space has rank != 1");

    const vset all = vs::full(K.vertex_count());
    CellChain out(WordFlavor::chain);
    for (size_t j = 0; j < tops.size(); ++j) {
        if (ker(int(j), 0) == 0) continue;
        vset s = vs::from_labels(tops[j]);
        out.add(CellWord::chain_word(s, all & ~s),
                static_cast<long long>(ker(int(j), 0)));
    }
    // lexicographically least supported word gets +1
    if (out.terms().begin()->second < 0) out = -1 * out;
    return out;
}

struct DualityLevel {
    int p = 0;
    long long rank_p = 0;
    long long rank_dual = 0;
    IntMat pairing;       // rows: H^p basis, cols: H_{n-p} coordinates
    bool unimodular = false;
};

struct DualityReport {
    int top_degree = 0;
    CellChain fundamental;
    std::vector<DualityLevel> levels;
    bool ok = false;
};

/// For each p, caps a basis of the free part of H^p with the fundamental
/// class and records the coordinate matrix on H_{n-p}; the duality holds
/// when every such matrix is square and unimodular.
inline DualityReport poincare_duality_check(const SimplicialComplex& K, int cap = 16,
                                            int threads = 0) {
    DualityReport rep;
    rep.fundamental = fundamental_class(K, cap, threads);
    const int n = rep.fundamental.terms().begin()->first.degree();
    rep.top_degree = n;
    rep.ok = true;
    WordClasses cochains(K, WordFlavor::cochain);
    WordClasses chains(K, WordFlavor::chain);
    for (int p = 0; p <= n; ++p) {
        DualityLevel lvl;
        lvl.p = p;
        auto basis = cochains.free_basis(p);
        lvl.rank_p = (long long)basis.size();
        lvl.rank_dual = chains.group(n - p).rank;
        lvl.pairing = IntMat(int(lvl.rank_p), int(lvl.rank_dual));
        for (size_t j = 0; j < basis.size(); ++j) {
            CellChain capped = word_cap(basis[j], rep.fundamental, K);
            auto coords = chains.free_coords(capped, n - p);
            for (size_t k = 0; k < coords.size(); ++k)
                lvl.pairing(int(j), int(k)) = coords[k];
        }
        if (lvl.rank_p != lvl.rank_dual) {
            lvl.unimodular = false;
        } else if (lvl.rank_p == 0) {
            lvl.unimodular = true;
        } else {
            auto [divs, rank] = smith_normal_form(lvl.pairing);
            lvl.unimodular = rank == lvl.rank_p &&
                             std::all_of(divs.begin(), divs.end(),
                                         [](const Int& d) { return d == 1; });
        }
        rep.ok = rep.ok && lvl.unimodular;
        rep.levels.push_back(std::move(lvl));
    }
    return rep;
}

}  // namespace mackit

#endif
