#ifndef MACKIT_MANIFOLD_HPP
#define MACKIT_MANIFOLD_HPP

#include <string>
#include <vector>

#include "mackit/common.hpp"
#include "mackit/homology.hpp"
#include "mackit/simplicial.hpp"

namespace mackit {

struct SphereWitness {
    std::vector<int> simplex;   // the offending σ (∅ = the complex itself)
    int expected_sphere_dim = 0;
    GradedHomology link_homology;
    std::string reason;
};

struct SphereCheck {
    bool ok = false;
    int sphere_dim = -2;
    std::vector<SphereWitness> witnesses;
};

inline bool has_sphere_homology(const GradedHomology& h, int dim) {
    GradedHomology expected;
    expected.lowest_degree = dim;
    expected.groups = {HomologyGroup{1, {}}};
    if (dim < -1) expected = GradedHomology{};  // no sphere of dim < -1
    return h == expected;
}

/// Link condition: every simplex of K (the empty one included) must have a
/// link with the reduced homology of a sphere of complementary dimension.
/// Returns the verdict plus a witness for every failure.
inline SphereCheck is_generalized_homology_sphere(const SimplicialComplex& K,
                                                  int n_minus_1) {
    SphereCheck out;
    out.sphere_dim = n_minus_1;
    const int n = n_minus_1 + 1;

    if (K.dimension() != n_minus_1) {
        SphereWitness w;
        w.simplex = {};
        w.expected_sphere_dim = n_minus_1;
        w.link_homology = reduced_homology(K);
        w.reason = "dimension is " + std::to_string(K.dimension()) + ", expected " +
                   std::to_string(n_minus_1);
        out.witnesses.push_back(std::move(w));
        out.ok = false;
        return out;
    }
    if (!K.is_pure()) {
        for (const auto& f : K.facets())
            if (int(f.size()) != n) {
                SphereWitness w;
                w.simplex = f;
                w.expected_sphere_dim = n_minus_1 - int(f.size());
                w.reason = "complex is not pure: facet of cardinality " +
                           std::to_string(f.size());
                out.witnesses.push_back(std::move(w));
            }
    }

    auto levels = K.simplices_by_card();
    for (const auto& level : levels)
        for (const auto& s : level) {
            SimplicialComplex lk = link(K, s);
            GradedHomology h = reduced_homology(lk);
            int expected = n_minus_1 - int(s.size());
            if (!has_sphere_homology(h, expected)) {
                SphereWitness w;
                w.simplex = s;
                w.expected_sphere_dim = expected;
                w.link_homology = h;
                w.reason = "link homology differs from the " +
                           std::to_string(expected) + "-sphere";
                out.witnesses.push_back(std::move(w));
            }
        }
    out.ok = out.witnesses.empty();

    if (out.ok) {
        long long chi = euler_characteristic(K);
        long long expected_chi = n_minus_1 % 2 == 0 ? 2 : 0;
        if (chi != expected_chi)
            throw invariant_error(
                "homology sphere verdict contradicts the Euler characteristic");
    }
    return out;
}

enum class TopologicalStatus { yes, yes_by_low_dimension, conditional_on_pi1, no };

inline std::string to_string(TopologicalStatus s) {
    switch (s) {
        case TopologicalStatus::yes: return "yes";
        case TopologicalStatus::yes_by_low_dimension: return "yes-by-low-dimension";
        case TopologicalStatus::conditional_on_pi1: return "conditional-on-pi1";
        case TopologicalStatus::no: return "no";
    }
    return "?";
}

struct ManifoldVerdict {
    bool is_homology_manifold = false;
    int dimension = 0;  // n + d(J) - m when positive
    bool is_generalized_homology_sphere_input = false;
    HomologyGroup h1_of_K;
    TopologicalStatus topological_manifold_status = TopologicalStatus::no;
    std::vector<SphereWitness> witnesses;
};

/// Verdict for (D^1,S^0)^{K(J)}: a homology manifold of dimension
/// n + d(J) - m iff |K| is a generalized homology (n-1)-sphere; topological
/// when d(J) > m, or in dimensions <= 2; with J = (1,...,1) and n >= 3 only
/// π₁ remains undecided, so H₁(K) is reported as evidence.
inline ManifoldVerdict manifold_verdict(const SimplicialComplex& K, const JTuple& J) {
    if (J.size() != K.vertex_count())
        throw input_error("manifold_verdict: J length must equal the vertex count");
    const int m = K.vertex_count();
    const int n = K.dimension() + 1;

    ManifoldVerdict out;
    auto check = is_generalized_homology_sphere(K, n - 1);
    out.is_generalized_homology_sphere_input = check.ok;
    out.is_homology_manifold = check.ok;
    out.witnesses = std::move(check.witnesses);
    out.h1_of_K = reduced_homology(K).at(1);
    out.dimension = check.ok ? n + J.d() - m : -1;

    if (!check.ok)
        out.topological_manifold_status = TopologicalStatus::no;
    else if (J.d() > m)
        out.topological_manifold_status = TopologicalStatus::yes;
    else if (n <= 2)
        out.topological_manifold_status = TopologicalStatus::yes_by_low_dimension;
    else
        out.topological_manifold_status = TopologicalStatus::conditional_on_pi1;
    return out;
}

}  // namespace mackit

#endif
