// Integer-coefficient Laurent polynomials in one variable.
// Zero coefficients are never stored; equality is support-map equality.
#pragma once

#include <map>
#include <string>

#include "bethe0/rational.hpp"

namespace bethe0 {

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const BigInt& c) {
        if (c != 0) terms_[0] = c;
    }
    static LaurentPoly monomial(long exp, const BigInt& c) {
        LaurentPoly p;
        if (c != 0) p.terms_[exp] = c;
        return p;
    }

    const std::map<long, BigInt>& terms() const { return terms_; }
    BigInt coeff(long exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? BigInt(0) : it->second;
    }
    bool is_zero() const { return terms_.empty(); }
    long min_exp() const;
    long max_exp() const;

    void set_coeff(long exp, const BigInt& c) {
        if (c == 0)
            terms_.erase(exp);
        else
            terms_[exp] = c;
    }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    LaurentPoly pow(unsigned long e) const;

    /// True iff coeff(e) == coeff(-e) for all exponents.
    bool symmetric() const;

    std::string str(const std::string& var = "x") const;

private:
    std::map<long, BigInt> terms_;
};

}  // namespace bethe0
