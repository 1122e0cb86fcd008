#include "bethe0/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace bethe0 {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

BigInt det(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("det: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return BigInt(1);
    IntMatrix w = m;
    int sign = 1;
    BigInt prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && w.at(r, k) == 0) ++r;
            if (r == n) return BigInt(0);
            w.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    BigInt d = w.at(n - 1, n - 1);
    return sign < 0 ? BigInt(-d) : d;
}

namespace {

// Row/column operations on S with mirrored inverse updates on U/V so that
// U*S*V stays equal to the input matrix throughout.
struct SNFWork {
    IntMatrix s, u, v;

    void row_swap(std::size_t a, std::size_t b) {
        s.swap_rows(a, b);
        u.swap_cols(a, b);
    }
    void col_swap(std::size_t a, std::size_t b) {
        s.swap_cols(a, b);
        v.swap_rows(a, b);
    }
    // row_i -= q*row_t  =>  col_t of U += q*col_i
    void row_sub(std::size_t i, std::size_t t, const BigInt& q) {
        for (std::size_t j = 0; j < s.cols(); ++j) s.at(i, j) -= q * s.at(t, j);
        for (std::size_t r = 0; r < u.rows(); ++r) u.at(r, t) += q * u.at(r, i);
    }
    // col_j -= q*col_t  =>  row_t of V += q*row_j
    void col_sub(std::size_t j, std::size_t t, const BigInt& q) {
        for (std::size_t i = 0; i < s.rows(); ++i) s.at(i, j) -= q * s.at(i, t);
        for (std::size_t c = 0; c < v.cols(); ++c) v.at(t, c) += q * v.at(j, c);
    }
    // row_t += row_i  =>  col_i of U -= col_t
    void row_add(std::size_t t, std::size_t i) {
        for (std::size_t j = 0; j < s.cols(); ++j) s.at(t, j) += s.at(i, j);
        for (std::size_t r = 0; r < u.rows(); ++r) u.at(r, i) -= u.at(r, t);
    }
    void row_negate(std::size_t i) {
        for (std::size_t j = 0; j < s.cols(); ++j) s.at(i, j) = -s.at(i, j);
        for (std::size_t r = 0; r < u.rows(); ++r) u.at(r, i) = -u.at(r, i);
    }
};

BigInt nearest_quotient(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    BigInt babs = abs(b);
    if (r * 2 > babs) q += 1;  // round to nearest keeps remainders small
    return q;
}

}  // namespace

SNFDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    SNFWork w{m, IntMatrix::identity(r), IntMatrix::identity(c)};

    for (std::size_t t = 0; t < std::min(r, c); ++t) {
        for (;;) {
            // smallest-absolute-value nonzero pivot in the trailing block
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    const BigInt& e = w.s.at(i, j);
                    if (e == 0) continue;
                    if (!found ||
                        mpz_cmpabs(e.get_mpz_t(), w.s.at(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) goto done;  // trailing block all zero
            w.row_swap(t, pi);
            w.col_swap(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (w.s.at(i, t) == 0) continue;
                BigInt q = nearest_quotient(w.s.at(i, t), w.s.at(t, t));
                if (q != 0) w.row_sub(i, t, q);
                if (w.s.at(i, t) != 0) dirty = true;  // remainder becomes next pivot
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (w.s.at(t, j) == 0) continue;
                BigInt q = nearest_quotient(w.s.at(t, j), w.s.at(t, t));
                if (q != 0) w.col_sub(j, t, q);
                if (w.s.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c && divides; ++j)
                    if (!mpz_divisible_p(w.s.at(i, j).get_mpz_t(), w.s.at(t, t).get_mpz_t())) {
                        w.row_add(t, i);
                        divides = false;
                    }
            if (divides) break;
        }
        if (w.s.at(t, t) < 0) w.row_negate(t);
    }
done:
    return SNFDecomposition{std::move(w.u), std::move(w.s), std::move(w.v)};
}

std::vector<BigInt> SNFDecomposition::diagonal() const {
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s.at(i, i));
    return d;
}

std::vector<BigRat> solve_rational(const IntMatrix& m, const std::vector<BigRat>& rhs) {
    if (!m.square() || m.rows() != rhs.size())
        throw std::invalid_argument("solve_rational: dimension mismatch");
    const std::size_t n = m.rows();
    std::vector<std::vector<BigRat>> a(n, std::vector<BigRat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = BigRat(m.at(i, j));
        a[i][n] = rhs[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) throw std::domain_error("solve_rational: singular matrix");
        std::swap(a[k], a[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            BigRat f = a[i][k] / a[k][k];
            for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    std::vector<BigRat> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = a[i][n] / a[i][i];
        x[i].canonicalize();
    }
    return x;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("unimodular_inverse: non-square matrix");
    const std::size_t n = m.rows();
    IntMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<BigRat> e(n, BigRat(0));
        e[j] = 1;
        std::vector<BigRat> col = solve_rational(m, e);
        for (std::size_t i = 0; i < n; ++i) {
            if (!is_integer(col[i]))
                throw std::domain_error("unimodular_inverse: matrix is not unimodular");
            inv.at(i, j) = col[i].get_num();
        }
    }
    return inv;
}

std::vector<BigRat> mat_vec(const IntMatrix& m, const std::vector<BigRat>& x) {
    if (m.cols() != x.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<BigRat> y(m.rows(), BigRat(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigRat acc(0);
        for (std::size_t j = 0; j < m.cols(); ++j) acc += BigRat(m.at(i, j)) * x[j];
        acc.canonicalize();
        y[i] = acc;
    }
    return y;
}

}  // namespace bethe0
