#ifndef MACKIT_PRESENTATION_HPP
#define MACKIT_PRESENTATION_HPP

#include <utility>
#include <vector>

#include "mackit/common.hpp"
#include "mackit/homology_group.hpp"
#include "mackit/matrix.hpp"
#include "mackit/snf.hpp"

namespace mackit {

/// Presentation of one (co)homology group H = ker(D) / im(B) with explicit
/// coordinates: D is the outgoing differential on the middle term, B the
/// incoming one. Supplies canonical class coordinates and preferred basis
/// vectors for the free part (deterministic given the basis ordering of the
/// middle term).
class QuotientPresentation {
  public:
    QuotientPresentation(const IntMat& outgoing, const IntMat& incoming)
        : dim_(outgoing.cols()) {
        if (incoming.rows() != dim_)
            throw input_error("presentation: incompatible differential shapes");
        auto dec = smith_decompose(outgoing);
        kernel_ = kernel_basis(dec);
        kernel_dec_ = smith_decompose(kernel_);
        const int k = kernel_.cols();

        IntMat Y(k, incoming.cols());
        std::vector<Int> col(dim_);
        for (int j = 0; j < incoming.cols(); ++j) {
            for (int i = 0; i < dim_; ++i) col[size_t(i)] = incoming(i, j);
            auto y = solve_linear(kernel_dec_, col);
            if (!y)
                throw invariant_error(
                    "presentation: boundary column is not a cycle (d∘d != 0?)");
            for (int i = 0; i < k; ++i) Y(i, j) = (*y)[size_t(i)];
        }
        quo_ = smith_decompose(Y);
        group_.rank = k - quo_.rank;
        for (const auto& d : quo_.divisors)
            if (d > 1) group_.torsion.push_back(static_cast<long long>(d));
    }

    const HomologyGroup& group() const { return group_; }
    int ambient_dim() const { return dim_; }
    int free_rank() const { return int(group_.rank); }

    struct ClassCoords {
        std::vector<Int> free;     // coordinates on the free part
        std::vector<Int> torsion;  // normalized to [0, d_i)
        bool zero() const {
            for (const auto& x : free)
                if (x != 0) return false;
            for (const auto& x : torsion)
                if (x != 0) return false;
            return true;
        }
        bool operator==(const ClassCoords&) const = default;
    };

    /// Coordinates of the class of a cycle z (throws input_error if z is
    /// not a cycle of this degree).
    ClassCoords coords(const std::vector<Int>& z) const {
        if (int(z.size()) != dim_) throw input_error("class coords: wrong degree");
        auto y = solve_linear(kernel_dec_, z);
        if (!y) throw input_error("class coords: chain is not a cycle");
        std::vector<Int> w = quo_.U.apply(*y);
        ClassCoords out;
        const int k = kernel_.cols();
        for (int i = quo_.rank; i < k; ++i) out.free.push_back(w[size_t(i)]);
        for (int i = 0; i < quo_.rank; ++i) {
            if (quo_.divisors[size_t(i)] > 1) {
                Int r = w[size_t(i)] % quo_.divisors[size_t(i)];
                if (r < 0) r += quo_.divisors[size_t(i)];
                out.torsion.push_back(r);
            }
        }
        return out;
    }

    bool is_trivial_class(const std::vector<Int>& z) const { return coords(z).zero(); }

    /// A cycle representing the j-th free generator.
    std::vector<Int> free_generator(int j) const {
        const int k = kernel_.cols();
        std::vector<Int> e(k);
        for (int i = 0; i < k; ++i) e[size_t(i)] = quo_.Uinv(i, quo_.rank + j);
        return kernel_.apply(e);
    }

  private:
    int dim_;
    IntMat kernel_;
    SmithDecomp<Int> kernel_dec_;
    SmithDecomp<Int> quo_;
    HomologyGroup group_;
};

}  // namespace mackit

#endif
