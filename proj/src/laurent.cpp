#include "conifold/laurent.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace conifold {

LaurentPoly LaurentPoly::term(int w, Int c) {
    LaurentPoly p;
    if (c != 0) p.coeffs_.emplace(w, std::move(c));
    return p;
}

Int LaurentPoly::coeff(int w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (coeffs_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (coeffs_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

bool LaurentPoly::is_palindromic() const {
    for (const auto& [w, c] : coeffs_)
        if (coeff(-w) != c) return false;
    return true;
}

Int LaurentPoly::at_one() const {
    Int s = 0;
    for (const auto& [w, c] : coeffs_) s += c;
    return s;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [w, c] : coeffs_) r.coeffs_.emplace(w + k, c);
    return r;
}

void LaurentPoly::add_term(int w, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [w, c] : coeffs_) r.coeffs_.emplace(w, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [w, c] : o.coeffs_) add_term(w, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [w, c] : o.coeffs_) add_term(w, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [wa, ca] : a.coeffs_)
        for (const auto& [wb, cb] : b.coeffs_) r.add_term(wa + wb, ca * cb);
    return r;
}

LaurentPoly operator*(const Int& c, const LaurentPoly& p) {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [w, pc] : p.coeffs()) r.add_term(w, c * pc);
    return r;
}

namespace {

// t-power of s^w: "" for w == 0, "t" for w == 2, "t^2", "t^(1/2)", "t^(-3/2)".
std::string t_power(int w) {
    if (w == 0) return "";
    if (w == 2) return "t";
    std::ostringstream os;
    if (w % 2 == 0) {
        int e = w / 2;
        if (e < 0)
            os << "t^(" << e << ")";
        else
            os << "t^" << e;
    } else {
        os << "t^(" << w << "/2)";
    }
    return os.str();
}

} // namespace

std::string to_t_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : p.coeffs()) {
        const bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Int a = neg ? Int(-c) : c;
        const std::string pw = t_power(w);
        if (pw.empty())
            os << a;
        else if (a == 1)
            os << pw;
        else
            os << a << "*" << pw;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << to_t_string(p);
}

} // namespace conifold
