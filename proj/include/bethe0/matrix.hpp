// Dense integer matrices with exact determinant and Smith normal form.
#pragma once

#include <cstddef>
#include <vector>

#include "bethe0/rational.hpp"

namespace bethe0 {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, BigInt(0)) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    BigInt& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    IntMatrix operator*(const IntMatrix& o) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

private:
    std::size_t rows_, cols_;
    std::vector<BigInt> e_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// The empty 0x0 matrix has determinant 1. Throws on non-square input.
BigInt det(const IntMatrix& m);

/// U*S*V = input, U and V unimodular, S diagonal with
/// non-negative entries d1 | d2 | ... on the diagonal.
struct SNFDecomposition {
    IntMatrix u, s, v;
    std::vector<BigInt> diagonal() const;
};

SNFDecomposition smith_normal_form(const IntMatrix& m);

/// Solves m*x = rhs exactly over the rationals. Throws if m is singular.
std::vector<BigRat> solve_rational(const IntMatrix& m, const std::vector<BigRat>& rhs);

/// Exact inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

std::vector<BigRat> mat_vec(const IntMatrix& m, const std::vector<BigRat>& x);

}  // namespace bethe0
