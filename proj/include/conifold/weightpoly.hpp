#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "conifold/laurent.hpp"

namespace conifold {

// Weight polynomials of standard spaces and the combinators they obey.
// Everything is a Laurent polynomial in s with t = s^2; cut-and-paste
// additivity and product multiplicativity are the defining algebra, and the
// s = 1 value is the Euler characteristic.

// Affine n-space: t^n.
WeightPoly affine(int n);

// Projective n-space: 1 + t + ... + t^n.
WeightPoly projective(int n);

// An elliptic curve: 1 - 2 t^(1/2) + t.
WeightPoly elliptic_curve();

// The torus C^*: t - 1, from the affine line minus a point.
WeightPoly torus_gm();

WeightPoly sum(const WeightPoly& x, const WeightPoly& y);
WeightPoly product(const WeightPoly& x, const WeightPoly& y);
WeightPoly difference(const WeightPoly& x, const WeightPoly& y);

// Blow up a smooth point of x: its contribution 1 is replaced by a P^1.
WeightPoly blowup_point(const WeightPoly& x);

// Tate twist by i (half twists allowed): multiply by t^(-i/2) = s^-i.
WeightPoly tate_twist(const WeightPoly& x, int i);

// Cohomological shift by j: multiply by (-1)^j.
WeightPoly shift(const WeightPoly& x, int j);

// Parse failure, carrying the 1-based offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t offset)
        : std::runtime_error(what), offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

// Evaluate an expression in the prefix grammar
//
//   atom := A<n> | P<n> | Gm | E | pt
//   expr := atom | sum(e,e) | product(e,e) | difference(e,e)
//         | blowup(e) | twist(e,<i>) | shift(e,<j>)
//
// Whitespace is ignored; integer literals are decimal, signed for twist and
// shift. Throws ParseError with the offset of the first bad character.
WeightPoly parse_weight_expr(std::string_view text);

} // namespace conifold
