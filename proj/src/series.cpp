#include "bethe0/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bethe0 {

int total_degree(const TruncSeries::Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

TruncSeries TruncSeries::constant(int nvars, int order, const BigRat& c) {
    TruncSeries s(nvars, order);
    s.set_coeff(Monomial(nvars, 0), c);
    return s;
}

TruncSeries TruncSeries::variable(int nvars, int order, int index) {
    TruncSeries s(nvars, order);
    Monomial m(nvars, 0);
    m[index] = 1;
    if (order >= 1) s.set_coeff(m, BigRat(1));
    return s;
}

BigRat TruncSeries::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRat(0) : it->second;
}

void TruncSeries::set_coeff(const Monomial& m, const BigRat& c) {
    if (static_cast<int>(m.size()) != nvars_)
        throw std::invalid_argument("set_coeff: wrong monomial arity");
    if (c == 0 || total_degree(m) > order_)
        terms_.erase(m);
    else
        terms_[m] = c;
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("series arity mismatch");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    check_compatible(o);
    TruncSeries r(nvars_, std::min(order_, o.order_));
    for (const auto& [m, c] : terms_)
        if (total_degree(m) <= r.order_) r.terms_[m] = c;
    for (const auto& [m, c] : o.terms_) {
        if (total_degree(m) > r.order_) continue;
        BigRat s = r.coeff(m) + c;
        s.canonicalize();
        r.set_coeff(m, s);
    }
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(nvars_, order_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    check_compatible(o);
    TruncSeries r(nvars_, std::min(order_, o.order_));
    for (const auto& [m1, c1] : terms_) {
        int d1 = total_degree(m1);
        if (d1 > r.order_) continue;
        for (const auto& [m2, c2] : o.terms_) {
            if (d1 + total_degree(m2) > r.order_) continue;
            Monomial m(nvars_);
            for (int i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
            BigRat& slot = r.terms_[m];
            slot += c1 * c2;
            slot.canonicalize();
        }
    }
    // prune zeros produced by cancellation
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
    return r;
}

TruncSeries TruncSeries::inverse() const {
    BigRat c0 = constant_term();
    if (c0 == 0) throw std::domain_error("inverse of series with zero constant term");
    // f = c0*(1 - g) with g of positive valuation; 1/f = (1/c0) * sum g^k
    TruncSeries g = constant(nvars_, order_, BigRat(1)) - *this * constant(nvars_, order_, BigRat(1) / c0);
    TruncSeries acc = constant(nvars_, order_, BigRat(1));
    TruncSeries p = g;
    for (int k = 1; k <= order_ && !p.terms_.empty(); ++k) {
        acc = acc + p;
        p = p * g;
    }
    return acc * constant(nvars_, order_, BigRat(1) / c0);
}

TruncSeries TruncSeries::pow_int(long e) const {
    if (e < 0) return inverse().pow_int(-e);
    TruncSeries acc = constant(nvars_, order_, BigRat(1));
    TruncSeries base = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u > 0) {
        if (u & 1) acc = acc * base;
        base = base * base;
        u >>= 1;
    }
    return acc;
}

TruncSeries TruncSeries::derivative(int index) const {
    TruncSeries r(nvars_, order_ - 1);
    for (const auto& [m, c] : terms_) {
        if (m[index] == 0) continue;
        Monomial d = m;
        d[index] -= 1;
        if (total_degree(d) > r.order_) continue;
        BigRat v = c * m[index];
        v.canonicalize();
        r.terms_[d] = v;
    }
    return r;
}

TruncSeries TruncSeries::truncated(int order) const {
    TruncSeries r(nvars_, std::min(order, order_));
    for (const auto& [m, c] : terms_)
        if (total_degree(m) <= r.order_) r.terms_[m] = c;
    return r;
}

bool TruncSeries::agrees_with(const TruncSeries& o) const {
    return first_mismatch(o).empty();
}

std::vector<std::string> TruncSeries::first_mismatch(const TruncSeries& o) const {
    check_compatible(o);
    int ord = std::min(order_, o.order_);
    std::map<Monomial, char> support;
    for (const auto& [m, c] : terms_)
        if (total_degree(m) <= ord) support[m] = 1;
    for (const auto& [m, c] : o.terms_)
        if (total_degree(m) <= ord) support[m] = 1;
    for (const auto& [m, unused] : support) {
        BigRat a = coeff(m), b = o.coeff(m);
        if (a != b) {
            std::ostringstream mono;
            for (size_t i = 0; i < m.size(); ++i)
                if (m[i] != 0) mono << "w" << (i + 1) << "^" << m[i] << " ";
            std::string ms = mono.str();
            if (ms.empty()) ms = "1";
            return {ms, to_string(a), to_string(b)};
        }
    }
    return {};
}

std::string TruncSeries::str(const std::string& varname) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << to_string(c);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            os << "*" << varname << (i + 1);
            if (m[i] > 1) os << "^" << m[i];
        }
        first = false;
    }
    return os.str();
}

TruncSeries series_det(const std::vector<std::vector<TruncSeries>>& m) {
    const size_t n = m.size();
    if (n == 0) throw std::invalid_argument("series_det: empty matrix");
    if (n == 1) return m[0][0];
    // cofactor expansion along the first row; fine for the small sizes used here
    TruncSeries acc(m[0][0].nvars(), m[0][0].order());
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<TruncSeries>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<TruncSeries> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        TruncSeries term = m[0][j] * series_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

TruncSeries series_jacobian(const std::vector<TruncSeries>& f) {
    const size_t n = f.size();
    std::vector<std::vector<TruncSeries>> m(n, std::vector<TruncSeries>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = f[i].derivative(static_cast<int>(j));
    return series_det(m);
}

std::vector<TruncSeries> series_solve_v(int l, int order) {
    if (l < 1 || order < 1) throw std::invalid_argument("series_solve_v: need l >= 1, order >= 1");
    std::vector<TruncSeries> w, v;
    for (int i = 0; i < l; ++i) w.push_back(TruncSeries::variable(l, order, i));
    v = w;  // first-order seed: v_i = w_i + higher order
    TruncSeries one = TruncSeries::constant(l, order, BigRat(1));
    // each pass is exact to one more order; the correction term has
    // valuation >= 2, so at most `order` passes are needed
    for (int pass = 0; pass < order; ++pass) {
        std::vector<TruncSeries> next;
        bool changed = false;
        for (int i = 0; i < l; ++i) {
            TruncSeries rhs = w[i];
            for (int k = 0; k < l; ++k)
                rhs = rhs * (one - v[k]).pow_int(2 * std::min(i + 1, k + 1));
            changed = changed || !rhs.agrees_with(v[i]) || rhs.terms() != v[i].terms();
            next.push_back(std::move(rhs));
        }
        v = std::move(next);
        if (!changed) break;
    }
    return v;
}

}  // namespace bethe0
