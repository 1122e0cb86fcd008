#include "bethe0/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace bethe0 {

long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.set_coeff(e, r.coeff(e) + c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.set_coeff(e, r.coeff(e) - c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.set_coeff(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
    LaurentPoly acc(BigInt(1));
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool LaurentPoly::symmetric() const {
    for (const auto& [e, c] : terms_)
        if (coeff(-e) != c) return false;
    return true;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const BigInt& c = it->second;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        BigInt a = abs(c);
        if (a != 1 || it->first == 0) os << a.get_str();
        if (it->first != 0) {
            if (a != 1) os << "*";
            os << var;
            if (it->first != 1) os << "^" << it->first;
        }
        first = false;
    }
    return os.str();
}

}  // namespace bethe0
