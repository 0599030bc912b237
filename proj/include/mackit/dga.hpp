#ifndef MACKIT_DGA_HPP
#define MACKIT_DGA_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mackit/common.hpp"
#include "mackit/homology.hpp"
#include "mackit/presentation.hpp"
#include "mackit/simplicial.hpp"
#include "mackit/word_complex.hpp"

namespace mackit {

// ---------------------------------------------------------------------------
// R*_K(J): the free algebra on ṽ^i (degree j_i) and ũ^i (degree j_i - 1),
// modulo graded commutation, the idempotent/annihilation relations, and the
// Stanley-Reisner ideal. Every element is kept in square-free normal form:
// a Z-combination of monomials ṽ^σ ũ^τ with σ ∈ K, σ ∩ τ = ∅, generators
// ordered by position.
// ---------------------------------------------------------------------------

/// A normal-form monomial ṽ^σ ũ^τ.
struct DgaMonomial {
    vset sigma = 0;  // ṽ-support
    vset tau = 0;    // ũ-support

    bool operator==(const DgaMonomial&) const = default;
    bool operator<(const DgaMonomial& o) const {
        if (sigma != o.sigma) return vs::lex_less(sigma, o.sigma);
        return vs::lex_less(tau, o.tau);
    }

    std::string to_string() const {
        if (sigma == 0 && tau == 0) return "1";
        std::string out;
        if (sigma) out += "v" + vs::to_string(sigma);
        if (tau) out += "u" + vs::to_string(tau);
        return out;
    }
};

class Dga;

/// Integer combination of normal-form monomials over a fixed (K, J).
class DgaElement {
  public:
    DgaElement() = default;
    explicit DgaElement(std::shared_ptr<const Dga> algebra)
        : algebra_(std::move(algebra)) {}

    const std::map<DgaMonomial, long long>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    const std::shared_ptr<const Dga>& algebra() const { return algebra_; }

    void add(const DgaMonomial& mono, long long c) {
        if (c == 0) return;
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    DgaElement& operator+=(const DgaElement& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    DgaElement& operator-=(const DgaElement& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    friend DgaElement operator+(DgaElement a, const DgaElement& b) { return a += b; }
    friend DgaElement operator-(DgaElement a, const DgaElement& b) { return a -= b; }
    friend DgaElement operator*(long long k, const DgaElement& a) {
        DgaElement out(a.algebra_);
        if (k != 0)
            for (const auto& [m, c] : a.terms_) out.add(m, k * c);
        return out;
    }
    bool operator==(const DgaElement& o) const { return terms_ == o.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty() || c < 0) out += (c < 0 ? " - " : " + ");
            long long a = c < 0 ? -c : c;
            if (a != 1) out += std::to_string(a) + "*";
            out += m.to_string();
        }
        return out;
    }

  private:
    std::shared_ptr<const Dga> algebra_;
    std::map<DgaMonomial, long long> terms_;
    friend class Dga;
};

class Dga : public std::enable_shared_from_this<Dga> {
  public:
    static std::shared_ptr<const Dga> make(SimplicialComplex K, JTuple J) {
        if (J.size() != K.vertex_count())
            throw input_error("dga: J length must equal the vertex count");
        if (K.vertex_count() > 26) throw resource_error("dga: vertex count too large");
        return std::shared_ptr<const Dga>(new Dga(std::move(K), std::move(J)));
    }

    const SimplicialComplex& complex() const { return K_; }
    const JTuple& jtuple() const { return J_; }
    int m() const { return K_.vertex_count(); }

    bool same_context(const Dga& o) const {
        return K_ == o.K_ && J_.entries == o.J_.entries;
    }

    int generator_degree(int i, bool is_v) const {
        return is_v ? J_[i] : J_[i] - 1;
    }

    int degree(const DgaMonomial& mono) const {
        int d = 0;
        for (int i : vs::elements(mono.sigma)) d += J_[i];
        for (int i : vs::elements(mono.tau)) d += J_[i] - 1;
        return d;
    }

    /// True when the element is a Z-combination of monomials of one degree.
    std::optional<int> homogeneous_degree(const DgaElement& a) const {
        std::optional<int> deg;
        for (const auto& [m, c] : a.terms()) {
            int d = degree(m);
            if (deg && *deg != d) return std::nullopt;
            deg = d;
        }
        return deg;
    }

    DgaElement zero() const { return DgaElement(shared_from_this()); }

    DgaElement element(vset sigma, vset tau, long long coeff = 1) const {
        if (sigma & tau) throw input_error("dga monomial: supports must be disjoint");
        DgaElement out(shared_from_this());
        if (K_.is_simplex_mask(sigma)) out.add({sigma, tau}, coeff);
        return out;
    }

    DgaElement one() const { return element(0, 0); }
    DgaElement v(int i) const {
        check_label_range(i, m());
        return element(vs::single(i), 0);
    }
    DgaElement u(int i) const {
        check_label_range(i, m());
        return element(0, vs::single(i));
    }

    /// Product in normal form: merge position-ordered generator strings,
    /// commutation signs from crossing pairs, relations at equal positions,
    /// Stanley-Reisner kill at the end.
    DgaElement multiply(const DgaElement& a, const DgaElement& b) const {
        require_same(a);
        require_same(b);
        DgaElement out(shared_from_this());
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) {
                auto r = multiply_monomials(ma, mb);
                if (r) out.add(r->first, ca * cb * r->second);
            }
        return out;
    }

    /// d(ũ^i) = ṽ^i, d(ṽ^i) = 0, extended by the Leibniz rule over the
    /// position-ordered monomial.
    DgaElement differential(const DgaElement& a) const {
        require_same(a);
        DgaElement out(shared_from_this());
        for (const auto& [mono, c] : a.terms()) {
            for (int i : vs::elements(mono.tau)) {
                vset bigger = vs::add(mono.sigma, i);
                if (!K_.is_simplex_mask(bigger)) continue;
                int pre = 0;
                for (int k : vs::elements((mono.sigma | mono.tau) & vs::below(i)))
                    pre += vs::contains(mono.sigma, k) ? J_[k] : J_[k] - 1;
                out.add({bigger, vs::remove(mono.tau, i)}, pre % 2 ? -c : c);
            }
        }
        return out;
    }

    bool is_cocycle(const DgaElement& a) const { return differential(a).zero(); }

    /// η_J(σ*_ω) = (-1)^{(σ,ω)_J} ṽ^σ ũ^{ω\σ}.
    DgaElement eta_J(vset sigma, vset omega) const {
        if (sigma & ~omega) throw input_error("eta_J: σ must be contained in ω");
        if (!K_.is_simplex_mask(sigma)) throw input_error("eta_J: σ is not a simplex of K");
        int sign = sign_soJ(sigma, omega);
        return element(sigma, omega & ~sigma, sign ? -1 : 1);
    }

    /// (σ,ω)_J mod 2 per the wedge-reordering sign.
    int sign_soJ(vset sigma, vset omega) const {
        long long total = 0;
        for (int k : vs::elements(omega)) {
            const int jk1 = J_[k] - 1;
            if (jk1 == 0) continue;
            total += (long long)jk1 * vs::card(sigma & ~vs::below(k + 1));
            long long suf = 0;
            for (int r : vs::elements(omega & ~vs::below(k + 1))) suf += J_[r] - 1;
            total += (long long)jk1 * suf;
        }
        return int(total & 1);
    }

    /// Cohomology of (R*_K(J), d) by total degree, summed over the ω-graded
    /// pieces (monomials with σ ∪ τ = ω form a subcomplex).
    GradedHomology cohomology(int cap = 16, int threads = 0) const {
        if (J_.d() > cap)
            throw resource_error("dga cohomology: d(J) exceeds cap " +
                                 std::to_string(cap));
        std::vector<vset> omegas;
        for (vset w = 0; w < (vset(1) << m()); ++w) omegas.push_back(w);
        std::vector<GradedHomology> parts(omegas.size());
        auto work = [&](size_t idx) { parts[idx] = summand_cohomology(omegas[idx]); };
        int width = threads > 0 ? threads : int(std::thread::hardware_concurrency());
        if (width < 1) width = 1;
        if (width == 1 || omegas.size() < 32) {
            for (size_t i = 0; i < omegas.size(); ++i) work(i);
        } else {
            std::atomic<size_t> next{0};
            auto runner = [&]() {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= omegas.size()) break;
                    work(i);
                }
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < width; ++t) pool.emplace_back(runner);
            for (auto& th : pool) th.join();
        }
        GradedHomology acc;
        for (auto& g : parts) acc = graded_direct_sum(acc, g);
        return acc.trimmed();
    }

    /// Cohomology of the single ω-summand, graded by total degree.
    GradedHomology summand_cohomology(vset omega) const {
        auto levels = summand_levels(omega);
        const int card = vs::card(omega);
        // chain complex with degree q = card - |σ| so that ∂ = d lowers q
        ChainComplex C;
        C.dims.resize(size_t(card) + 1);
        C.boundary.assign(size_t(card) + 1, {});
        for (int l = 0; l <= card; ++l)
            C.dims[size_t(card - l)] = int(levels[size_t(l)].size());
        for (int l = 0; l + 1 <= card; ++l) {
            int q = card - l;  // boundary from q to q-1: level l -> level l+1
            C.boundary[size_t(q)].resize(levels[size_t(l)].size());
            for (size_t j = 0; j < levels[size_t(l)].size(); ++j) {
                DgaElement img = differential(element(levels[size_t(l)][j],
                                                      omega & ~levels[size_t(l)][j]));
                for (const auto& [mono, c] : img.terms()) {
                    auto& lv = levels[size_t(l) + 1];
                    auto it = std::lower_bound(lv.begin(), lv.end(), mono.sigma,
                                               vs::lex_less);
                    C.boundary[size_t(q)][j].push_back(
                        {int(it - lv.begin()), Int(c)});
                }
            }
        }
        auto h = homology_all(C);
        int base = 0;
        for (int i : vs::elements(omega)) base += J_[i] - 1;
        GradedHomology out;
        out.lowest_degree = base;
        out.groups.resize(size_t(card) + 1);
        for (int l = 0; l <= card; ++l) out.groups[size_t(l)] = h[size_t(card - l)];
        return out.trimmed();
    }

    /// Basis σ-masks of the ω-summand grouped by card(σ) (level).
    std::vector<std::vector<vset>> summand_levels(vset omega) const {
        const int card = vs::card(omega);
        std::vector<std::vector<vset>> levels(size_t(card) + 1);
        vs::for_each_subset(omega, [&](vset s) {
            if (K_.is_simplex_mask(s)) levels[size_t(vs::card(s))].push_back(s);
        });
        for (auto& lv : levels) std::sort(lv.begin(), lv.end(), vs::lex_less);
        return levels;
    }

  private:
    Dga(SimplicialComplex K, JTuple J) : K_(std::move(K)), J_(std::move(J)) {}

    void require_same(const DgaElement& a) const {
        if (!a.algebra() || !same_context(*a.algebra()))
            throw input_error("dga: element belongs to a different (K, J)");
    }

    std::optional<std::pair<DgaMonomial, int>> multiply_monomials(
        const DgaMonomial& a, const DgaMonomial& b) const {
        // annihilating collisions
        if (a.sigma & b.sigma) return std::nullopt;            // (ṽ^i)^2 = 0
        if (a.tau & b.sigma) return std::nullopt;              // ũ^i ṽ^i = 0
        for (int i : vs::elements((a.sigma & b.tau) | (a.tau & b.tau)))
            if (J_[i] != 1) return std::nullopt;  // ṽũ and ũũ die unless deg ũ = 0
        // crossing sign: pairs g1 ∈ a, g2 ∈ b with pos(g2) < pos(g1)
        long long cross = 0;
        for (int g2 : vs::elements(b.sigma | b.tau)) {
            int d2 = vs::contains(b.sigma, g2) ? J_[g2] : J_[g2] - 1;
            if (d2 == 0) continue;
            for (int g1 : vs::elements((a.sigma | a.tau) & ~vs::below(g2 + 1))) {
                int d1 = vs::contains(a.sigma, g1) ? J_[g1] : J_[g1] - 1;
                cross += (long long)d1 * d2;
            }
        }
        DgaMonomial res;
        res.sigma = a.sigma | b.sigma;
        res.tau = (a.tau | b.tau) & ~res.sigma;
        if (!K_.is_simplex_mask(res.sigma)) return std::nullopt;    // Stanley-Reisner
        return std::make_pair(res, cross % 2 ? -1 : 1);
    }

    SimplicialComplex K_;
    JTuple J_;
};

// ---------------------------------------------------------------------------
// The wedge maps ϖ_i and the block substitution ϖ_J.
// ---------------------------------------------------------------------------

/// ϖ_i : R*_K → R*_{K(v_i)} (both with J = (1,...,1)): relabel through χ_i
/// and append u^{i+1} when position i occurs in the monomial.
struct WedgeMap {
    std::shared_ptr<const Dga> source;
    std::shared_ptr<const Dga> target;
    int i = 0;

    DgaElement apply(const DgaElement& a) const {
        if (!a.algebra() || !source->same_context(*a.algebra()))
            throw input_error("varpi_i: element is not over the source algebra");
        auto chi = [this](vset s) {
            vset low = s & vs::below(i + 1);
            vset high = (s & ~vs::below(i + 1)) << 1;
            return low | high;
        };
        DgaElement out = target->zero();
        for (const auto& [mono, c] : a.terms()) {
            DgaElement img = target->element(chi(mono.sigma), chi(mono.tau), c);
            if (vs::contains(mono.sigma | mono.tau, i))
                img = target->multiply(img, target->v(i + 1));  // deg-1 generator
            out += img;
        }
        return out;
    }
};

inline WedgeMap varpi_i(const std::shared_ptr<const Dga>& source, int i) {
    if (!source->jtuple().all_ones())
        throw input_error("varpi_i: source must have J = (1,...,1)");
    if (!source->complex().has_vertex(i))
        throw input_error("varpi_i: " + std::to_string(i) + " is not a vertex");
    WedgeMap map;
    map.source = source;
    map.target = Dga::make(simplicial_wedge(source->complex(), i),
                           JTuple::ones(source->m() + 1));
    map.i = i;
    return map;
}

/// ϖ_J : R*_K(J) → R*_{K(J)}, the substitution ṽ^k ↦ u^{k̃} u^{B̃_k},
/// ũ^k ↦ t^{k̃} u^{B̃_k} (k̃ the first label of block B_k, B̃_k the rest).
/// It is a degree-preserving algebra map and a quasi-isomorphism.
struct VarpiJEmbedding {
    std::shared_ptr<const Dga> source;  // (K, J)
    std::shared_ptr<const Dga> target;  // (K(J), (1,...,1))

    int first_of_block(int k) const { return source->jtuple().block(k).front(); }

    vset block_tail(int k) const {
        auto b = source->jtuple().block(k);
        vset out = 0;
        for (size_t i = 1; i < b.size(); ++i) out = vs::add(out, b[i]);
        return out;
    }

    DgaElement v_image(int k) const {
        return target->element(vs::add(block_tail(k), first_of_block(k)), 0);
    }
    DgaElement u_image(int k) const {
        return target->element(block_tail(k), vs::single(first_of_block(k)));
    }

    DgaElement apply(const DgaElement& a) const {
        if (!a.algebra() || !source->same_context(*a.algebra()))
            throw input_error("varpi_J: element is not over the source algebra");
        DgaElement out = target->zero();
        for (const auto& [mono, c] : a.terms()) {
            vset sigma = 0, tau = 0;
            for (int k : vs::elements(mono.sigma)) {
                sigma = vs::add(sigma, first_of_block(k));
                sigma |= block_tail(k);
            }
            for (int k : vs::elements(mono.tau)) {
                tau = vs::add(tau, first_of_block(k));
                sigma |= block_tail(k);
            }
            DgaElement img = target->element(sigma, tau, c);
            if (img.zero())
                throw invariant_error("varpi_J: image left the Stanley-Reisner quotient");
            out += img;
        }
        return out;
    }
};

inline VarpiJEmbedding varpi_J_embedding(const SimplicialComplex& K, const JTuple& J,
                                         int cap = 16) {
    if (J.d() > cap) throw resource_error("varpi_J: d(J) exceeds cap");
    VarpiJEmbedding e;
    e.source = Dga::make(K, J);
    e.target = Dga::make(kj_construction(K, J), JTuple::ones(J.d()));
    return e;
}

// ---------------------------------------------------------------------------
// Cohomology classes of R*_K(J) and product tables.
// ---------------------------------------------------------------------------

/// Class coordinates inside the (ω, level)-graded pieces, cached per ω.
class DgaClassCalculator {
  public:
    explicit DgaClassCalculator(std::shared_ptr<const Dga> algebra)
        : algebra_(std::move(algebra)) {}

    const std::shared_ptr<const Dga>& algebra() const { return algebra_; }

    /// Coordinates of the class of a cocycle, as a map from (ω, level) to
    /// the coordinate list; absent keys are zero.
    std::map<std::pair<vset, int>, QuotientPresentation::ClassCoords> coords(
        const DgaElement& a) {
        if (!algebra_->is_cocycle(a)) throw input_error("dga class: not a cocycle");
        // split by ω and level
        std::map<std::pair<vset, int>, DgaElement> pieces;
        for (const auto& [mono, c] : a.terms()) {
            vset omega = mono.sigma | mono.tau;
            auto key = std::make_pair(omega, vs::card(mono.sigma));
            auto it = pieces.find(key);
            if (it == pieces.end()) {
                DgaElement piece = algebra_->zero();
                piece.add(mono, c);
                pieces.emplace(key, std::move(piece));
            } else {
                it->second.add(mono, c);
            }
        }
        std::map<std::pair<vset, int>, QuotientPresentation::ClassCoords> out;
        for (const auto& [key, piece] : pieces) {
            auto coords = presentation(key.first, key.second).coords(
                to_vector(piece, key.first, key.second));
            if (!coords.zero()) out.emplace(key, std::move(coords));
        }
        return out;
    }

    bool is_trivial_class(const DgaElement& a) { return coords(a).empty(); }

    bool same_class(const DgaElement& a, const DgaElement& b) {
        return coords(a) == coords(b);
    }

  private:
    QuotientPresentation& presentation(vset omega, int level) {
        auto key = std::make_pair(omega, level);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        auto levels = algebra_->summand_levels(omega);
        IntMat outgoing = level_matrix(levels, omega, level);
        IntMat incoming = level > 0
                              ? level_matrix(levels, omega, level - 1)
                              : IntMat(int(levels[size_t(level)].size()), 0);
        auto [jt, ok] = cache_.emplace(key, QuotientPresentation(outgoing, incoming));
        return jt->second;
    }

    IntMat level_matrix(const std::vector<std::vector<vset>>& levels, vset omega,
                        int level) {
        const auto& from = levels[size_t(level)];
        const auto& to = level + 1 < int(levels.size()) ? levels[size_t(level) + 1]
                                                        : empty_;
        IntMat M(int(to.size()), int(from.size()));
        for (size_t j = 0; j < from.size(); ++j) {
            DgaElement img = algebra_->differential(
                algebra_->element(from[j], omega & ~from[j]));
            for (const auto& [mono, c] : img.terms()) {
                auto it = std::lower_bound(to.begin(), to.end(), mono.sigma,
                                           vs::lex_less);
                M(int(it - to.begin()), int(j)) = c;
            }
        }
        return M;
    }

    std::vector<Int> to_vector(const DgaElement& piece, vset omega, int level) {
        auto levels = algebra_->summand_levels(omega);
        const auto& basis = levels[size_t(level)];
        std::vector<Int> out(basis.size());
        for (const auto& [mono, c] : piece.terms()) {
            auto it = std::lower_bound(basis.begin(), basis.end(), mono.sigma,
                                       vs::lex_less);
            out[size_t(it - basis.begin())] = c;
        }
        return out;
    }

    std::shared_ptr<const Dga> algebra_;
    std::map<std::pair<vset, int>, QuotientPresentation> cache_;
    std::vector<vset> empty_;
};

/// One entry of a product table: the product at cochain level plus its
/// class data.
struct RingTableEntry {
    DgaElement product;
    bool zero_cochain = true;
    bool zero_class = true;
    std::optional<int> degree;
};

struct RingProductTable {
    std::vector<DgaElement> classes;
    std::vector<std::vector<RingTableEntry>> pairwise;
};

/// All pairwise products of the given cocycles, reduced to cohomology
/// classes. Throws input_error on a non-cocycle input.
inline RingProductTable ring_product_table(std::shared_ptr<const Dga> algebra,
                                           std::vector<DgaElement> classes) {
    DgaClassCalculator calc(algebra);
    for (const auto& c : classes)
        if (!algebra->is_cocycle(c))
            throw input_error("ring_product_table: input is not a cocycle");
    RingProductTable out;
    out.classes = std::move(classes);
    out.pairwise.resize(out.classes.size());
    for (size_t i = 0; i < out.classes.size(); ++i) {
        out.pairwise[i].resize(out.classes.size());
        for (size_t j = 0; j < out.classes.size(); ++j) {
            RingTableEntry e;
            e.product = algebra->multiply(out.classes[i], out.classes[j]);
            e.zero_cochain = e.product.zero();
            e.zero_class = e.zero_cochain || calc.is_trivial_class(e.product);
            e.degree = algebra->homogeneous_degree(e.product);
            out.pairwise[i][j] = std::move(e);
        }
    }
    return out;
}

}  // namespace mackit

#endif
