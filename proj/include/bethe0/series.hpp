// Truncated multivariate power series over exact rationals.
//
// Truncation is by total degree. Every series carries the order through
// which its coefficients are valid; binary operations truncate to the
// smaller order of the operands, and differentiation loses one order.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "bethe0/rational.hpp"

namespace bethe0 {

class TruncSeries {
public:
    using Monomial = std::vector<int>;  // exponent per variable

    TruncSeries() : nvars_(0), order_(0) {}
    TruncSeries(int nvars, int order) : nvars_(nvars), order_(order) {}

    static TruncSeries constant(int nvars, int order, const BigRat& c);
    static TruncSeries variable(int nvars, int order, int index);

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    const std::map<Monomial, BigRat>& terms() const { return terms_; }

    BigRat coeff(const Monomial& m) const;
    BigRat constant_term() const { return coeff(Monomial(nvars_, 0)); }
    void set_coeff(const Monomial& m, const BigRat& c);

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator-() const;

    /// Multiplicative inverse; requires a nonzero constant term.
    TruncSeries inverse() const;
    /// Integer power; negative exponents go through inverse().
    TruncSeries pow_int(long e) const;
    /// Formal partial derivative; the result is valid one order lower.
    TruncSeries derivative(int index) const;

    /// Truncated copy valid (and stored) only through the given order.
    TruncSeries truncated(int order) const;

    /// Coefficientwise equality through min(order(), o.order()).
    bool agrees_with(const TruncSeries& o) const;
    /// First monomial whose coefficients differ within the shared order,
    /// or empty if none. Pair of (monomial, lhs coeff, rhs coeff) as strings.
    std::vector<std::string> first_mismatch(const TruncSeries& o) const;

    std::string str(const std::string& varname = "w") const;

private:
    int nvars_;
    int order_;
    std::map<Monomial, BigRat> terms_;  // nonzero, total degree <= order_

    void check_compatible(const TruncSeries& o) const;
};

int total_degree(const TruncSeries::Monomial& m);

/// Determinant of a square matrix of series by cofactor expansion.
TruncSeries series_det(const std::vector<std::vector<TruncSeries>>& m);

/// Jacobian determinant det(d f_i / d x_j) of a vector of series.
TruncSeries series_jacobian(const std::vector<TruncSeries>& f);

/// Solves the triangular fixed-point system
///   v_i = w_i * prod_{k=1..l} (1 - v_k)^{2*min(i,k)}
/// for v_1..v_l as series in w_1..w_l through the given order.
std::vector<TruncSeries> series_solve_v(int l, int order);

}  // namespace bethe0
