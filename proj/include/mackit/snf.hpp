#ifndef MACKIT_SNF_HPP
#define MACKIT_SNF_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "mackit/common.hpp"
#include "mackit/matrix.hpp"

namespace mackit {

// ---------------------------------------------------------------------------
// Overflow-checked 64-bit scalar. Smith reduction runs on this first and is
// transparently redone with cpp_int when an intermediate entry blows up.
// ---------------------------------------------------------------------------

struct ck64 {
    std::int64_t v = 0;
    ck64() = default;
    ck64(std::int64_t x) : v(x) {}

    friend ck64 operator+(ck64 a, ck64 b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw overflow_signal{};
        return r;
    }
    friend ck64 operator-(ck64 a, ck64 b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw overflow_signal{};
        return r;
    }
    friend ck64 operator*(ck64 a, ck64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw overflow_signal{};
        return r;
    }
    friend ck64 operator/(ck64 a, ck64 b) {
        if (b.v == -1 && a.v == std::numeric_limits<std::int64_t>::min())
            throw overflow_signal{};
        return a.v / b.v;
    }
    ck64 operator-() const {
        if (v == std::numeric_limits<std::int64_t>::min()) throw overflow_signal{};
        return -v;
    }
    ck64& operator+=(ck64 o) { return *this = *this + o; }
    ck64& operator-=(ck64 o) { return *this = *this - o; }
    friend bool operator==(ck64 a, ck64 b) { return a.v == b.v; }
    friend bool operator!=(ck64 a, ck64 b) { return a.v != b.v; }
    friend bool operator<(ck64 a, ck64 b) { return a.v < b.v; }
    friend bool operator>(ck64 a, ck64 b) { return a.v > b.v; }
    friend ck64 operator%(ck64 a, ck64 b) { return a.v % b.v; }
};

template <class T>
inline T abs_val(const T& x) {
    return x < T(0) ? -x : x;
}

/// Quotient with balanced remainder: |a - q*b| <= |b|/2. Keeps entry growth
/// under control during the Smith reduction.
template <class T>
inline T balanced_quotient(const T& a, const T& b) {
    T q = a / b;
    T r = a - q * b;
    if (r != T(0)) {
        T rabs = abs_val(r);
        if (rabs + rabs > abs_val(b)) {
            bool same_sign = (r < T(0)) == (b < T(0));
            q += same_sign ? T(1) : T(-1);
        }
    }
    return q;
}

// ---------------------------------------------------------------------------
// Smith normal form.
// ---------------------------------------------------------------------------

template <class T>
struct SmithDecomp {
    Mat<T> S;               // S = U * A * V, diagonal
    Mat<T> U, Uinv, V;      // unimodular transforms (tracked on demand)
    int rank = 0;
    std::vector<T> divisors;  // the nonzero diagonal, d_1 | d_2 | ... | d_r
};

namespace detail {

template <class T, bool Transforms>
SmithDecomp<T> smith_impl(Mat<T> A) {
    const int n = A.rows(), m = A.cols();
    SmithDecomp<T> out;
    Mat<T> U, Uinv, V;
    if constexpr (Transforms) {
        U = Mat<T>::identity(n);
        Uinv = Mat<T>::identity(n);
        V = Mat<T>::identity(m);
    }

    auto row_add = [&](int i, int j, const T& c) {  // row_i += c * row_j
        for (int k = 0; k < m; ++k)
            if (A(j, k) != T(0)) A(i, k) += c * A(j, k);
        if constexpr (Transforms) {
            for (int k = 0; k < n; ++k) {
                if (U(j, k) != T(0)) U(i, k) += c * U(j, k);
                if (Uinv(k, i) != T(0)) Uinv(k, j) -= c * Uinv(k, i);
            }
        }
    };
    auto col_add = [&](int i, int j, const T& c) {  // col_i += c * col_j
        for (int k = 0; k < n; ++k)
            if (A(k, j) != T(0)) A(k, i) += c * A(k, j);
        if constexpr (Transforms) {
            for (int k = 0; k < m; ++k)
                if (V(k, j) != T(0)) V(k, i) += c * V(k, j);
        }
    };
    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        A.swap_rows(i, j);
        if constexpr (Transforms) {
            U.swap_rows(i, j);
            Uinv.swap_cols(i, j);
        }
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        A.swap_cols(i, j);
        if constexpr (Transforms) V.swap_cols(i, j);
    };
    auto row_negate = [&](int i) {
        for (int k = 0; k < m; ++k)
            if (A(i, k) != T(0)) A(i, k) = -A(i, k);
        if constexpr (Transforms) {
            for (int k = 0; k < n; ++k) {
                if (U(i, k) != T(0)) U(i, k) = -U(i, k);
                if (Uinv(k, i) != T(0)) Uinv(k, i) = -Uinv(k, i);
            }
        }
    };

    int t = 0;
    while (t < n && t < m) {
        // locate a pivot of minimal absolute value
        int pi = -1, pj = -1;
        for (int i = t; i < n; ++i)
            for (int j = t; j < m; ++j)
                if (A(i, j) != T(0) &&
                    (pi < 0 || abs_val(A(i, j)) < abs_val(A(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < n; ++i) {
                if (A(i, t) == T(0)) continue;
                T q = balanced_quotient(A(i, t), A(t, t));
                if (q != T(0)) row_add(i, t, -q);
                if (A(i, t) != T(0)) {  // remainder becomes the smaller pivot
                    row_swap(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < m; ++j) {
                if (A(t, j) == T(0)) continue;
                T q = balanced_quotient(A(t, j), A(t, t));
                if (q != T(0)) col_add(j, t, -q);
                if (A(t, j) != T(0)) {
                    col_swap(t, j);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide every remaining entry
                for (int i = t + 1; i < n && clean; ++i)
                    for (int j = t + 1; j < m && clean; ++j)
                        if (A(i, j) % A(t, t) != T(0)) {
                            row_add(t, i, T(1));
                            clean = false;
                        }
            }
        }
        if (A(t, t) < T(0)) row_negate(t);
        ++t;
    }
    out.rank = t;
    out.divisors.reserve(t);
    for (int i = 0; i < t; ++i) out.divisors.push_back(A(i, i));
    out.S = std::move(A);
    if constexpr (Transforms) {
        out.U = std::move(U);
        out.Uinv = std::move(Uinv);
        out.V = std::move(V);
    }
    return out;
}

inline bool fits_i64(const Int& x) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    return x >= lo && x <= hi;
}

}  // namespace detail

/// Elementary divisors (all nonzero, divisibility-chained) and the rank.
/// Runs a checked int64 pass first and promotes to cpp_int on overflow.
inline std::pair<std::vector<Int>, int> smith_normal_form(const IntMat& M) {
    bool small = true;
    for (int i = 0; i < M.rows() && small; ++i)
        for (int j = 0; j < M.cols() && small; ++j)
            if (!detail::fits_i64(M(i, j))) small = false;
    if (small) {
        try {
            Mat<ck64> A(M.rows(), M.cols());
            for (int i = 0; i < M.rows(); ++i)
                for (int j = 0; j < M.cols(); ++j)
                    A(i, j) = ck64(static_cast<std::int64_t>(M(i, j)));
            auto d = detail::smith_impl<ck64, false>(std::move(A));
            std::vector<Int> divs;
            divs.reserve(d.divisors.size());
            for (auto& x : d.divisors) divs.emplace_back(x.v);
            return {divs, d.rank};
        } catch (const overflow_signal&) {
            // fall through to the exact pass
        }
    }
    auto d = detail::smith_impl<Int, false>(M);
    return {d.divisors, d.rank};
}

inline SmithDecomp<Int> smith_decompose(const IntMat& M) {
    return detail::smith_impl<Int, true>(M);
}

/// Basis of the integer kernel lattice of M, one column per generator.
inline IntMat kernel_basis(const SmithDecomp<Int>& d) {
    const int m = d.V.rows();
    const int k = m - d.rank;
    IntMat out(m, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < m; ++i) out(i, j) = d.V(i, d.rank + j);
    return out;
}

/// Solve M x = b over the integers (d = smith_decompose(M)); nullopt if
/// no integral solution exists.
inline std::optional<std::vector<Int>> solve_linear(const SmithDecomp<Int>& d,
                                                    const std::vector<Int>& b) {
    const int n = d.S.rows(), m = d.S.cols();
    std::vector<Int> w = d.U.apply(b);
    std::vector<Int> y(m);
    for (int i = 0; i < n; ++i) {
        if (i < d.rank) {
            if (w[i] % d.divisors[i] != 0) return std::nullopt;
            if (i < m) y[i] = w[i] / d.divisors[i];
        } else if (w[i] != 0) {
            return std::nullopt;
        }
    }
    return d.V.apply(y);
}

}  // namespace mackit

#endif
