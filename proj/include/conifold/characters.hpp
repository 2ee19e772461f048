#pragma once

#include <map>
#include <optional>

#include "conifold/laurent.hpp"
#include "conifold/series.hpp"

namespace conifold {

// Characters of the symmetric and exterior algebras on the monomial basis of
// C[x, y]. The weight dictionary for a basis monomial x^a y^b is
//
//   4d:  q1^a q2^b, one unit of L per symmetric-algebra generator;
//   6d:  s^(a-b) q^(a+b+1), one unit of T per exterior-algebra generator,
//        with x, y odd, so a subset of generators carries the super sign
//        (-1)^(sum of polynomial degrees).
//
// The product-formula constructors and the brute-force enumeration oracles
// are independent routes to the same series and are tested against each
// other.

struct PlaneMonomial {
    int x = 0; // x-exponent, >= 0
    int y = 0; // y-exponent, >= 0
};

// Multiplicities of irreducible SL(2) characters chi_d = s^d + s^(d-2) + ... + s^(-d)
// in a palindromic Laurent polynomial. Multiplicities may be negative; the
// positivity statement is a separate check made by the caller.
struct SL2Decomp {
    std::map<int, Int> mult; // highest weight d -> multiplicity

    // sum_d mult(d) * chi_d
    LaurentPoly reconstruct() const;
};

// char Sym* C[x,y]: product over basis monomials with a + b + 1 <= N of the
// geometric series sum_k (q1^a q2^b L)^k, truncated to total degree N.
Series4D sym_char_4d(int order);

// Direct multiset enumeration of Sym* C[x,y]; guarded to order <= 12.
Series4D sym_char_oracle(int order);

// char Lambda* C[x,y] (degree_cap empty), or of Lambda* applied to the
// polynomials of degree < degree_cap: product over basis monomials of
// (1 - (-1)^(a+b+1) s^(a-b) q^(a+b+1) T), truncated to the box.
Series6D ext_char_6d(const Box& box, std::optional<int> degree_cap = std::nullopt);

// Signed subset enumeration of Lambda* C[x,y]; guarded to qmax <= 8.
Series6D ext_char_oracle(const Box& box, std::optional<int> degree_cap = std::nullopt);

// Greedy top-down peeling of a palindromic Laurent polynomial into SL(2)
// characters: repeatedly subtract coeff(s^d) copies of chi_d for d the
// current top exponent. Handles both exponent parities in one pass. Throws
// std::domain_error on non-palindromic input.
SL2Decomp sl2_decompose(const LaurentPoly& p);

// Value at s = 1 (equivalently t^(1/2) = 1): the Euler-characteristic
// specialization of a refined invariant.
Int specialize_s1(const LaurentPoly& p);

} // namespace conifold
