#ifndef MACKIT_HOMOLOGY_GROUP_HPP
#define MACKIT_HOMOLOGY_GROUP_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "mackit/common.hpp"

namespace mackit {

/// A finitely generated abelian group: free rank plus invariant factors
/// (each >= 2, each dividing the next).
struct HomologyGroup {
    long long rank = 0;
    std::vector<long long> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;

    std::string to_string() const {
        if (trivial()) return "0";
        std::string out;
        if (rank == 1)
            out = "Z";
        else if (rank > 1)
            out = "Z^" + std::to_string(rank);
        for (long long t : torsion) {
            if (!out.empty()) out += " + ";
            out += "Z/" + std::to_string(t);
        }
        return out;
    }
};

namespace detail {

inline std::map<long long, std::vector<int>> prime_power_table(
    const std::vector<long long>& torsion) {
    std::map<long long, std::vector<int>> table;  // prime -> exponents
    for (long long t : torsion) {
        long long x = t;
        for (long long p = 2; p * p <= x; ++p) {
            if (x % p) continue;
            int e = 0;
            while (x % p == 0) x /= p, ++e;
            table[p].push_back(e);
        }
        if (x > 1) table[x].push_back(1);
    }
    return table;
}

}  // namespace detail

/// Direct sum, re-expressed with a divisibility-chained torsion list.
inline HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b) {
    HomologyGroup out;
    out.rank = a.rank + b.rank;
    std::vector<long long> all = a.torsion;
    all.insert(all.end(), b.torsion.begin(), b.torsion.end());
    auto table = detail::prime_power_table(all);
    size_t slots = 0;
    for (auto& [p, es] : table) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        slots = std::max(slots, es.size());
    }
    std::vector<long long> chain(slots, 1);
    for (auto& [p, es] : table)
        for (size_t k = 0; k < es.size(); ++k) {
            long long f = 1;
            for (int i = 0; i < es[k]; ++i) f *= p;
            chain[k] *= f;
        }
    std::sort(chain.begin(), chain.end());  // ascending: d_1 | d_2 | ...
    out.torsion = chain;
    return out;
}

/// Homology groups indexed by degree, with an arbitrary lowest degree
/// (reduced simplicial homology starts at -1).
struct GradedHomology {
    int lowest_degree = 0;
    std::vector<HomologyGroup> groups;

    HomologyGroup at(int degree) const {
        int i = degree - lowest_degree;
        if (i < 0 || i >= int(groups.size())) return {};
        return groups[size_t(i)];
    }
    int highest_degree() const { return lowest_degree + int(groups.size()) - 1; }

    bool trivial() const {
        for (const auto& g : groups)
            if (!g.trivial()) return false;
        return true;
    }

    /// Drop trivial groups at both ends (canonical form for comparisons).
    GradedHomology trimmed() const {
        int lo = 0, hi = int(groups.size());
        while (lo < hi && groups[size_t(lo)].trivial()) ++lo;
        while (hi > lo && groups[size_t(hi) - 1].trivial()) --hi;
        GradedHomology out;
        out.lowest_degree = lo == hi ? 0 : lowest_degree + lo;
        out.groups.assign(groups.begin() + lo, groups.begin() + hi);
        return out;
    }

    bool operator==(const GradedHomology& o) const {
        auto a = trimmed(), b = o.trimmed();
        return a.lowest_degree == b.lowest_degree && a.groups == b.groups;
    }
};

inline GradedHomology graded_direct_sum(const GradedHomology& a,
                                        const GradedHomology& b) {
    if (a.groups.empty()) return b;
    if (b.groups.empty()) return a;
    GradedHomology out;
    out.lowest_degree = std::min(a.lowest_degree, b.lowest_degree);
    int hi = std::max(a.highest_degree(), b.highest_degree());
    for (int d = out.lowest_degree; d <= hi; ++d)
        out.groups.push_back(direct_sum(a.at(d), b.at(d)));
    return out;
}

}  // namespace mackit

#endif
