#pragma once

#include <map>
#include <string>
#include <iosfwd>

#include "conifold/integer.hpp"

namespace conifold {

// Laurent polynomial in the half-weight variable s, with t = s^2. Working in
// s keeps every exponent integral; renderers print s as t^(1/2).
//
// Zero coefficients are never stored: equality of polynomials is equality of
// the pruned exponent->coefficient maps.
class LaurentPoly {
public:
    LaurentPoly() = default;

    // c * s^w
    static LaurentPoly term(int w, Int c);
    static LaurentPoly one() { return term(0, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    Int coeff(int w) const;
    int min_exp() const; // throws std::domain_error on the zero polynomial
    int max_exp() const;

    // coef of s^w equals coef of s^-w for all w (true for the zero polynomial)
    bool is_palindromic() const;

    // Sum of all coefficients, i.e. the value at s = 1.
    Int at_one() const;

    // Multiply by s^k.
    LaurentPoly shifted(int k) const;

    void add_term(int w, const Int& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend LaurentPoly operator*(const Int& c, const LaurentPoly& p);

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    const std::map<int, Int>& coeffs() const { return coeffs_; }

private:
    std::map<int, Int> coeffs_; // s-exponent -> nonzero coefficient
};

// Canonical reader-facing rendering in powers of t, halves written out
// explicitly: s^2 -> "t", s^-1 -> "t^(-1/2)", s^4 -> "t^2". Shared by the
// whole CLI so identical polynomials always print identically.
std::string to_t_string(const LaurentPoly& p);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// The coefficient of T^l q^m in a six-dimensional series: the weight
// polynomial of the corresponding stable-pairs moduli space.
using RefinedInvariant = LaurentPoly;

// Weight polynomial of a variety (or of a twisted/shifted coefficient
// system on it), as built by the weightpoly combinators.
using WeightPoly = LaurentPoly;

} // namespace conifold
