#ifndef MACKIT_WORD_COMPLEX_HPP
#define MACKIT_WORD_COMPLEX_HPP

#include <map>
#include <string>
#include <vector>

#include "mackit/chain_complex.hpp"
#include "mackit/common.hpp"
#include "mackit/homology.hpp"
#include "mackit/matrix.hpp"
#include "mackit/simplicial.hpp"

namespace mackit {

// ---------------------------------------------------------------------------
// The cellular (co)chain complex of (D^1,S^0)^K in the word basis:
// chains u_σ ε_τ and cochains u^σ t^τ with σ ∈ K, σ ∩ τ = ∅,
// deg = card(σ). The void word (σ = τ = ∅) renders as "1".
// ---------------------------------------------------------------------------

enum class WordFlavor { chain, cochain };

struct CellWord {
    vset sigma = 0;
    vset tau = 0;
    WordFlavor flavor = WordFlavor::chain;

    static CellWord chain_word(vset sigma, vset tau) {
        if (sigma & tau) throw input_error("word: σ and τ must be disjoint");
        return {sigma, tau, WordFlavor::chain};
    }
    static CellWord cochain_word(vset sigma, vset tau) {
        if (sigma & tau) throw input_error("word: σ and τ must be disjoint");
        return {sigma, tau, WordFlavor::cochain};
    }

    int degree() const { return vs::card(sigma); }
    bool is_void() const { return sigma == 0 && tau == 0; }

    bool operator==(const CellWord&) const = default;
    bool operator<(const CellWord& o) const {
        if (flavor != o.flavor) return flavor < o.flavor;
        if (sigma != o.sigma) return vs::lex_less(sigma, o.sigma);
        return vs::lex_less(tau, o.tau);
    }

    std::string to_string() const {
        if (is_void()) return "1";
        std::string out;
        if (sigma) out += "u" + vs::to_string(sigma);
        if (tau) out += (flavor == WordFlavor::chain ? "e" : "t") + vs::to_string(tau);
        return out;
    }
};

/// Sparse integer combination of words of one flavor (degrees may mix,
/// which cap products need).
class CellChain {
  public:
    CellChain() = default;
    explicit CellChain(WordFlavor f) : flavor_(f) {}
    explicit CellChain(const CellWord& w, long long c = 1) : flavor_(w.flavor) {
        add(w, c);
    }

    WordFlavor flavor() const { return flavor_; }
    const std::map<CellWord, long long>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const CellWord& w, long long c) {
        if (c == 0) return;
        if (terms_.empty())
            flavor_ = w.flavor;
        else if (w.flavor != flavor_)
            throw input_error("chain: mixed word flavors");
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    long long coefficient(const CellWord& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second;
    }

    CellChain& operator+=(const CellChain& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    CellChain& operator-=(const CellChain& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    friend CellChain operator+(CellChain a, const CellChain& b) { return a += b; }
    friend CellChain operator-(CellChain a, const CellChain& b) { return a -= b; }
    friend CellChain operator*(long long k, const CellChain& a) {
        CellChain out(a.flavor_);
        if (k != 0)
            for (const auto& [w, c] : a.terms_) out.add(w, k * c);
        return out;
    }
    bool operator==(const CellChain& o) const { return terms_ == o.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            if (!out.empty() || c < 0) out += (c < 0 ? " - " : " + ");
            long long a = c < 0 ? -c : c;
            if (a != 1) out += std::to_string(a) + "*";
            out += w.to_string();
        }
        return out;
    }

  private:
    WordFlavor flavor_ = WordFlavor::chain;
    std::map<CellWord, long long> terms_;
};

// ---------------------------------------------------------------------------
// Differentials.
// ---------------------------------------------------------------------------

/// ∂(u_σ ε_τ) = Σ_{i∈σ} (-1)^{(i,σ)} u_{σ\{i}} ε_{τ∪{i}}.
inline CellChain boundary(const CellWord& w) {
    if (w.flavor != WordFlavor::chain)
        throw input_error("boundary: expected a chain word");
    CellChain out(WordFlavor::chain);
    for (int i : vs::elements(w.sigma)) {
        int sign = vs::order_sign_exp(i, w.sigma) % 2 ? -1 : 1;
        out.add(CellWord::chain_word(vs::remove(w.sigma, i), vs::add(w.tau, i)), sign);
    }
    return out;
}

inline CellChain boundary(const CellChain& z) {
    if (z.flavor() != WordFlavor::chain)
        throw input_error("boundary: expected a chain");
    CellChain out(WordFlavor::chain);
    for (const auto& [w, c] : z.terms()) out += c * boundary(w);
    return out;
}

/// d(u^σ t^τ) = Σ_{(σ∪{i})∈K, i∈τ} (-1)^{(i,σ)} u^{σ∪{i}} t^{τ\{i}}.
inline CellChain coboundary(const CellWord& w, const SimplicialComplex& K) {
    if (w.flavor != WordFlavor::cochain)
        throw input_error("coboundary: expected a cochain word");
    CellChain out(WordFlavor::cochain);
    for (int i : vs::elements(w.tau)) {
        vset bigger = vs::add(w.sigma, i);
        if (!K.is_simplex_mask(bigger)) continue;
        int sign = vs::order_sign_exp(i, w.sigma) % 2 ? -1 : 1;
        out.add(CellWord::cochain_word(bigger, vs::remove(w.tau, i)), sign);
    }
    return out;
}

inline CellChain coboundary(const CellChain& z, const SimplicialComplex& K) {
    if (z.flavor() != WordFlavor::cochain)
        throw input_error("coboundary: expected a cochain");
    CellChain out(WordFlavor::cochain);
    for (const auto& [w, c] : z.terms()) out += c * coboundary(w, K);
    return out;
}

// ---------------------------------------------------------------------------
// The degree-shifting isomorphisms μ and η.
// ---------------------------------------------------------------------------

/// μ: σ_ω ∈ C̃_*(K_ω) ↦ u_σ ε_{ω\σ}; shifts degree up by one.
inline CellWord mu_iso(const SimplicialComplex& K, vset sigma, vset omega) {
    if (sigma & ~omega) throw input_error("mu_iso: σ must be contained in ω");
    if (!K.is_simplex_mask(sigma)) throw input_error("mu_iso: σ is not a simplex of K");
    return CellWord::chain_word(sigma, omega & ~sigma);
}

/// η: σ*_ω ∈ C̃^*(K_ω) ↦ u^σ t^{ω\σ}.
inline CellWord eta_iso(const SimplicialComplex& K, vset sigma, vset omega) {
    if (sigma & ~omega) throw input_error("eta_iso: σ must be contained in ω");
    if (!K.is_simplex_mask(sigma)) throw input_error("eta_iso: σ is not a simplex of K");
    return CellWord::cochain_word(sigma, omega & ~sigma);
}

// ---------------------------------------------------------------------------
// Word bases and matrices.
// ---------------------------------------------------------------------------

struct WordBasis {
    std::vector<CellWord> words;
    std::map<CellWord, int> index;

    int find(const CellWord& w) const {
        auto it = index.find(w);
        return it == index.end() ? -1 : it->second;
    }
};

/// All words of a given degree, ordered by (σ, τ) lexicographically on the
/// sorted label lists.
inline WordBasis word_basis(const SimplicialComplex& K, int degree, WordFlavor flavor) {
    const int m = K.vertex_count();
    if (m > 26) throw resource_error("word basis: vertex count too large");
    WordBasis out;
    std::vector<vset> sigmas;
    for (vset s = 0; s < (vset(1) << m); ++s)
        if (vs::card(s) == degree && K.is_simplex_mask(s)) sigmas.push_back(s);
    std::sort(sigmas.begin(), sigmas.end(), vs::lex_less);
    for (vset s : sigmas) {
        std::vector<vset> taus;
        vs::for_each_subset(vs::full(m) & ~s, [&](vset t) { taus.push_back(t); });
        std::sort(taus.begin(), taus.end(), vs::lex_less);
        for (vset t : taus)
            out.words.push_back(flavor == WordFlavor::chain
                                    ? CellWord::chain_word(s, t)
                                    : CellWord::cochain_word(s, t));
    }
    for (size_t i = 0; i < out.words.size(); ++i) out.index[out.words[i]] = int(i);
    return out;
}

inline std::vector<Int> chain_to_vector(const CellChain& z, const WordBasis& basis) {
    std::vector<Int> out(basis.words.size());
    for (const auto& [w, c] : z.terms()) {
        int i = basis.find(w);
        if (i < 0) throw input_error("chain contains a word outside the basis");
        out[size_t(i)] = c;
    }
    return out;
}

inline CellChain vector_to_chain(const std::vector<Int>& v, const WordBasis& basis) {
    CellChain out(basis.words.empty() ? WordFlavor::chain : basis.words[0].flavor);
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out.add(basis.words[i], static_cast<long long>(v[i]));
    return out;
}

/// ∂_p as a matrix over the degree-p (from) and degree-(p-1) (to) word bases.
inline IntMat word_boundary_matrix(const WordBasis& from, const WordBasis& to) {
    IntMat M(int(to.words.size()), int(from.words.size()));
    for (size_t j = 0; j < from.words.size(); ++j) {
        const CellChain bd = boundary(from.words[j]);
        for (const auto& [w, c] : bd.terms()) M(to.index.at(w), int(j)) = c;
    }
    return M;
}

/// d^p as a matrix over the degree-p and degree-(p+1) cochain bases.
inline IntMat word_coboundary_matrix(const SimplicialComplex& K, const WordBasis& from,
                                     const WordBasis& to) {
    IntMat M(int(to.words.size()), int(from.words.size()));
    for (size_t j = 0; j < from.words.size(); ++j) {
        const CellChain cb = coboundary(from.words[j], K);
        for (const auto& [w, c] : cb.terms()) M(to.index.at(w), int(j)) = c;
    }
    return M;
}

/// The whole word chain complex of (D^1,S^0)^K (degree = card σ).
inline ChainComplex word_chain_complex(const SimplicialComplex& K) {
    const int top = K.dimension() + 1;
    std::vector<WordBasis> bases;
    for (int p = 0; p <= top; ++p)
        bases.push_back(word_basis(K, p, WordFlavor::chain));
    ChainComplex C;
    C.dims.resize(size_t(top) + 1);
    C.boundary.resize(size_t(top) + 1);
    for (int p = 0; p <= top; ++p) C.dims[size_t(p)] = int(bases[size_t(p)].words.size());
    for (int p = 1; p <= top; ++p) {
        C.boundary[size_t(p)].resize(bases[size_t(p)].words.size());
        for (size_t j = 0; j < bases[size_t(p)].words.size(); ++j) {
            const CellChain bd = boundary(bases[size_t(p)].words[j]);
            for (const auto& [w, c] : bd.terms())
                C.boundary[size_t(p)][j].push_back(
                    {bases[size_t(p) - 1].index.at(w), Int(c)});
        }
    }
    return C;
}

// ---------------------------------------------------------------------------
// Homology of the word complex, two independent routes.
// ---------------------------------------------------------------------------

/// Route (b), the default: ⊕_ω H̃_{p-1}(K_ω) via the Hochster table.
inline GradedHomology cellular_homology(const SimplicialComplex& K, int cap = 16,
                                        int threads = 0) {
    return reduced_homology_all_subsets(K, cap, threads).word_homology();
}

inline GradedHomology cellular_cohomology(const SimplicialComplex& K, int cap = 16,
                                          int threads = 0) {
    return reduced_homology_all_subsets(K, cap, threads).word_cohomology();
}

/// Route (a): homology of the monolithic word complex (cross-validation and
/// fundamental-class work).
inline GradedHomology cellular_homology_direct(const SimplicialComplex& K) {
    auto h = homology_all(word_chain_complex(K));
    GradedHomology out;
    out.lowest_degree = 0;
    out.groups = h;
    return out.trimmed();
}

inline GradedHomology cellular_cohomology_direct(const SimplicialComplex& K) {
    auto h = cohomology_all(word_chain_complex(K));
    GradedHomology out;
    out.lowest_degree = 0;
    out.groups = h;
    return out.trimmed();
}

}  // namespace mackit

#endif
