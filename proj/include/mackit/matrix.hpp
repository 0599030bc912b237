#ifndef MACKIT_MATRIX_HPP
#define MACKIT_MATRIX_HPP

#include <vector>

#include "mackit/common.hpp"

namespace mackit {

/// Dense row-major matrix over an exact integer type.
template <class T>
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static Mat identity(int n) {
        Mat out(n, n);
        for (int i = 0; i < n; ++i) out(i, i) = T(1);
        return out;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Mat transposed() const {
        Mat out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    Mat operator*(const Mat& o) const {
        Mat out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (o(k, j) != 0) out(i, j) += a * o(k, j);
                }
            }
        return out;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        std::vector<T> out(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Mat<Int>;

}  // namespace mackit

#endif
