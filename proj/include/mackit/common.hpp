#ifndef MACKIT_COMMON_HPP
#define MACKIT_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mackit {

/// Arbitrary-precision integer used by all exact linear algebra.
using Int = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Error types. The CLI maps these onto exit codes (2 = bad input/parse,
// 3 = resource cap, 4 = invariant violation).
// ---------------------------------------------------------------------------

struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Signals that the int64 fast path overflowed and the computation must be
// redone with arbitrary precision. Never escapes the library.
struct overflow_signal {};

// ---------------------------------------------------------------------------
// Vertex sets as bitmasks. Labels are 1-based; label i occupies bit i-1.
// Used wherever the ambient vertex count fits in 32 bits (all enumeration
// caps are far below that).
// ---------------------------------------------------------------------------

using vset = std::uint32_t;

namespace vs {

inline int card(vset s) { return __builtin_popcount(s); }

inline bool contains(vset s, int label) { return (s >> (label - 1)) & 1u; }

inline vset add(vset s, int label) { return s | (vset(1) << (label - 1)); }

inline vset remove(vset s, int label) { return s & ~(vset(1) << (label - 1)); }

inline vset single(int label) { return vset(1) << (label - 1); }

inline vset full(int m) { return m == 32 ? ~vset(0) : (vset(1) << m) - 1; }

/// Mask of all labels strictly below `label`.
inline vset below(int label) { return (vset(1) << (label - 1)) - 1; }

/// (i,σ) = card{j ∈ σ : j < i}; parity drives every orientation sign.
inline int order_sign_exp(int label, vset sigma) {
    return __builtin_popcount(sigma & below(label));
}

inline std::vector<int> elements(vset s) {
    std::vector<int> out;
    while (s) {
        int b = __builtin_ctz(s);
        out.push_back(b + 1);
        s &= s - 1;
    }
    return out;
}

inline vset from_labels(const std::vector<int>& labels) {
    vset s = 0;
    for (int v : labels) s = add(s, v);
    return s;
}

inline std::string to_string(vset s) {
    std::string out = "{";
    bool first = true;
    for (int v : elements(s)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

/// Lexicographic order on the sorted label lists (not on mask values):
/// {1,4} < {2,3}. Empty set sorts first.
inline bool lex_less(vset a, vset b) {
    if (a == b) return false;
    if (a == 0) return true;
    if (b == 0) return false;
    vset diff = a ^ b;
    int low = __builtin_ctz(diff);
    return (a >> low) & 1u;
}

/// Enumerate subsets of `mask` in increasing binary-counter order.
template <class F>
void for_each_subset(vset mask, F&& f) {
    vset sub = 0;
    while (true) {
        f(sub);
        if (sub == mask) break;
        sub = (sub - mask) & mask;
    }
}

}  // namespace vs

inline void check_label_range(int label, int m) {
    if (label < 1 || label > m)
        throw input_error("vertex label " + std::to_string(label) +
                          " out of range [1," + std::to_string(m) + "]");
}

}  // namespace mackit

#endif
