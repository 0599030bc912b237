#ifndef MACKIT_CHAIN_COMPLEX_HPP
#define MACKIT_CHAIN_COMPLEX_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "mackit/common.hpp"
#include "mackit/homology_group.hpp"
#include "mackit/matrix.hpp"
#include "mackit/snf.hpp"

namespace mackit {

/// A finitely generated chain complex of free Z-modules. boundary[q] maps
/// degree q to degree q-1 and is stored by columns; boundary[0] is empty.
struct ChainComplex {
    std::vector<int> dims;                                      // dims[q]
    std::vector<std::vector<std::vector<std::pair<int, Int>>>> boundary;

    int top_degree() const { return int(dims.size()) - 1; }

    IntMat boundary_matrix(int q) const {
        int rows = q >= 1 && q <= top_degree() ? dims[size_t(q) - 1] : 0;
        int cols = q >= 0 && q <= top_degree() ? dims[size_t(q)] : 0;
        IntMat M(rows, cols);
        if (q >= 1 && q <= top_degree())
            for (int j = 0; j < cols; ++j)
                for (const auto& [r, v] : boundary[size_t(q)][size_t(j)])
                    M(r, j) = v;
        return M;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        int sign = 1;
        for (int d : dims) {
            chi += sign * d;
            sign = -sign;
        }
        return chi;
    }
};

/// Verifies ∂∘∂ = 0 exactly; throws invariant_error on violation.
inline void check_boundary_squared(const ChainComplex& C) {
    for (int q = 2; q <= C.top_degree(); ++q) {
        for (int j = 0; j < C.dims[size_t(q)]; ++j) {
            std::map<int, Int> acc;
            for (const auto& [mid, v] : C.boundary[size_t(q)][size_t(j)])
                for (const auto& [r, w] : C.boundary[size_t(q) - 1][size_t(mid)])
                    acc[r] += v * w;
            for (const auto& [r, v] : acc)
                if (v != 0)
                    throw invariant_error("boundary squared is nonzero in degree " +
                                          std::to_string(q));
        }
    }
}

namespace detail {

/// Gaussian cancellation of unit-pivot pairs, degree by degree. Preserves
/// homology; leaves small residual matrices for the Smith step.
template <class S>
struct ReducedComplex {
    std::vector<int> alive;                       // surviving cells per degree
    std::vector<std::map<int, std::map<int, S>>> cols;  // cols[q]: col -> row -> val
};

template <class S>
ReducedComplex<S> reduce_complex(const ChainComplex& C) {
    const int top = C.top_degree();
    ReducedComplex<S> R;
    R.alive.assign(size_t(top) + 1, 0);
    R.cols.assign(size_t(top) + 1, {});
    std::vector<std::map<int, std::set<int>>> rows(size_t(top) + 1);

    for (int q = 0; q <= top; ++q) R.alive[size_t(q)] = C.dims[size_t(q)];
    for (int q = 1; q <= top; ++q)
        for (int j = 0; j < C.dims[size_t(q)]; ++j)
            for (const auto& [r, v] : C.boundary[size_t(q)][size_t(j)]) {
                S sv;
                if constexpr (std::is_same_v<S, Int>)
                    sv = v;
                else
                    sv = S(static_cast<std::int64_t>(v));
                if (sv != S(0)) {
                    R.cols[size_t(q)][j][r] = sv;
                    rows[size_t(q)][r].insert(j);
                }
            }

    auto row_nnz = [&](int q, int r) -> size_t {
        auto it = rows[size_t(q)].find(r);
        return it == rows[size_t(q)].end() ? 0 : it->second.size();
    };

    for (int q = 1; q <= top; ++q) {
        auto& M = R.cols[size_t(q)];
        auto& Rw = rows[size_t(q)];
        size_t threshold = 0;
        while (true) {
            // collect one elimination candidate within the fill threshold
            int pa = -1, pb = -1;
            S pl(0);
            for (auto& [c, col] : M) {
                for (auto& [r, v] : col) {
                    if (v != S(1) && v != S(-1)) continue;
                    size_t cost = (col.size() - 1) * (row_nnz(q, r) - 1);
                    if (cost <= threshold) {
                        pa = c;
                        pb = r;
                        pl = v;
                        break;
                    }
                }
                if (pa >= 0) break;
            }
            if (pa < 0) {
                // no candidate at this fill level; raise it or stop
                bool any_unit = false;
                for (auto& [c, col] : M) {
                    for (auto& [r, v] : col)
                        if (v == S(1) || v == S(-1)) {
                            any_unit = true;
                            break;
                        }
                    if (any_unit) break;
                }
                if (!any_unit) break;
                threshold = threshold == 0 ? 4 : threshold * 4;
                continue;
            }

            std::map<int, S> pivcol = M[pa];
            // remove pivot column
            for (const auto& [r, v] : pivcol) {
                Rw[r].erase(pa);
                if (Rw[r].empty()) Rw.erase(r);
            }
            M.erase(pa);
            // update the other columns hitting row pb
            if (auto it = Rw.find(pb); it != Rw.end()) {
                std::vector<int> hit(it->second.begin(), it->second.end());
                for (int c : hit) {
                    auto& col = M[c];
                    S coef = col[pb] * pl;  // pl is its own inverse
                    for (const auto& [rr, vv] : pivcol) {
                        auto jt = col.find(rr);
                        S nv = (jt == col.end() ? S(0) : jt->second) - coef * vv;
                        if (nv == S(0)) {
                            if (jt != col.end()) {
                                col.erase(jt);
                                Rw[rr].erase(c);
                                if (Rw[rr].empty()) Rw.erase(rr);
                            }
                        } else {
                            if (jt == col.end()) Rw[rr].insert(c);
                            col[rr] = nv;
                        }
                    }
                    if (col.empty()) M.erase(c);
                }
            }
            // delete row pa from degree q+1
            if (q + 1 <= top) {
                auto& Rup = rows[size_t(q) + 1];
                if (auto it = Rup.find(pa); it != Rup.end()) {
                    for (int c : it->second) {
                        auto& col = R.cols[size_t(q) + 1][c];
                        col.erase(pa);
                        if (col.empty()) R.cols[size_t(q) + 1].erase(c);
                    }
                    Rup.erase(it);
                }
            }
            // delete column pb from degree q-1
            if (q - 1 >= 1) {
                auto it = R.cols[size_t(q) - 1].find(pb);
                if (it != R.cols[size_t(q) - 1].end()) {
                    for (const auto& [r, v] : it->second) {
                        rows[size_t(q) - 1][r].erase(pb);
                        if (rows[size_t(q) - 1][r].empty())
                            rows[size_t(q) - 1].erase(r);
                    }
                    R.cols[size_t(q) - 1].erase(it);
                }
            }
            R.alive[size_t(q)] -= 1;
            R.alive[size_t(q) - 1] -= 1;
        }
    }
    return R;
}

template <class S>
IntMat residual_matrix(const std::map<int, std::map<int, S>>& cols) {
    std::set<int> rowset;
    for (const auto& [c, col] : cols)
        for (const auto& [r, v] : col) rowset.insert(r);
    std::map<int, int> rix;
    int i = 0;
    for (int r : rowset) rix[r] = i++;
    IntMat M(int(rowset.size()), int(cols.size()));
    int j = 0;
    for (const auto& [c, col] : cols) {
        for (const auto& [r, v] : col) {
            if constexpr (std::is_same_v<S, Int>)
                M(rix[r], j) = v;
            else
                M(rix[r], j) = Int(v.v);
        }
        ++j;
    }
    return M;
}

template <class S>
std::vector<HomologyGroup> homology_all_impl(const ChainComplex& C) {
    const int top = C.top_degree();
    auto R = reduce_complex<S>(C);
    std::vector<int> rank(size_t(top) + 2, 0);
    std::vector<std::vector<Int>> divs(size_t(top) + 2);
    for (int q = 1; q <= top; ++q) {
        IntMat M = residual_matrix(R.cols[size_t(q)]);
        auto [d, r] = smith_normal_form(M);
        rank[size_t(q)] = r;
        divs[size_t(q)] = d;
    }
    std::vector<HomologyGroup> out(size_t(top) + 1);
    for (int q = 0; q <= top; ++q) {
        HomologyGroup g;
        g.rank = R.alive[size_t(q)] - rank[size_t(q)] - rank[size_t(q) + 1];
        for (const auto& d : divs[size_t(q) + 1])
            if (d > 1) g.torsion.push_back(static_cast<long long>(d));
        out[size_t(q)] = g;
    }
    return out;
}

}  // namespace detail

/// Homology in every degree. Exact: int64 with overflow detection first,
/// arbitrary precision on demand.
inline std::vector<HomologyGroup> homology_all(const ChainComplex& C) {
    if (C.dims.empty()) return {};
    bool small = true;
    for (const auto& mat : C.boundary)
        for (const auto& col : mat)
            for (const auto& [r, v] : col)
                if (!detail::fits_i64(v)) small = false;
    if (small) {
        try {
            return detail::homology_all_impl<ck64>(C);
        } catch (const overflow_signal&) {
        }
    }
    return detail::homology_all_impl<Int>(C);
}

/// H_p = ker ∂_p / im ∂_{p+1}. Precondition ∂∘∂ = 0 is checked.
inline HomologyGroup homology(const ChainComplex& C, int p) {
    check_boundary_squared(C);
    if (p < 0 || p > C.top_degree()) return {};
    return homology_all(C)[size_t(p)];
}

/// The transposed (cochain) complex, reindexed so that degree q of the
/// result is degree (top - q) of the dual. H^q(C) = H_{top-q}(transpose).
inline ChainComplex transpose_complex(const ChainComplex& C) {
    const int top = C.top_degree();
    ChainComplex out;
    out.dims.resize(size_t(top) + 1);
    out.boundary.assign(size_t(top) + 1, {});
    for (int q = 0; q <= top; ++q) out.dims[size_t(top - q)] = C.dims[size_t(q)];
    for (int q = 0; q <= top; ++q) {
        int qq = top - q;  // result degree whose boundary is d: C^q -> C^{q+1}
        out.boundary[size_t(qq)].assign(size_t(C.dims[size_t(q)]), {});
        if (qq == 0 || q + 1 > top) continue;
        for (int j = 0; j < C.dims[size_t(q) + 1]; ++j)
            for (const auto& [r, v] : C.boundary[size_t(q) + 1][size_t(j)])
                out.boundary[size_t(qq)][size_t(r)].push_back({j, v});
    }
    return out;
}

/// Cohomology groups of C in every degree (universal coefficients are not
/// applied here; this is the honest homology of the transposed complex).
inline std::vector<HomologyGroup> cohomology_all(const ChainComplex& C) {
    if (C.dims.empty()) return {};
    const int top = C.top_degree();
    auto h = homology_all(transpose_complex(C));
    std::vector<HomologyGroup> out(size_t(top) + 1);
    for (int q = 0; q <= top; ++q) out[size_t(q)] = h[size_t(top - q)];
    return out;
}

}  // namespace mackit

#endif
