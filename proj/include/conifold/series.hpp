#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "conifold/integer.hpp"
#include "conifold/laurent.hpp"

namespace conifold {

// Exact sparse series arithmetic in two fixed variable contexts:
//
//   4d: variables (q1, q2, L) with L the instanton-counting variable,
//       truncated by total degree  a + b + c <= order;
//   6d: variables (q, T, s) with s = t^(1/2) a Laurent variable,
//       truncated by the rectangular box  q-deg <= qmax, T-deg <= tmax
//       (s unbounded).
//
// Monomial comparison is the deterministic serialization order:
// lex by (c, a, b) in 4d and by (l, m, w) in 6d.

struct TotalDegree {
    int order = 0; // retained monomials satisfy a + b + c <= order
};

struct Box {
    int qmax = 0; // retained monomials satisfy q-exponent <= qmax
    int tmax = 0; // and T-exponent <= tmax
    friend bool operator==(const Box&, const Box&) = default;
};

inline bool operator==(const TotalDegree& x, const TotalDegree& y) { return x.order == y.order; }
inline TotalDegree meet(const TotalDegree& x, const TotalDegree& y) {
    return {std::min(x.order, y.order)};
}
inline Box meet(const Box& x, const Box& y) {
    return {std::min(x.qmax, y.qmax), std::min(x.tmax, y.tmax)};
}

struct Monomial4D {
    using Trunc = TotalDegree;
    int q1 = 0;  // exponent of q1,  >= 0
    int q2 = 0;  // exponent of q2,  >= 0
    int lam = 0; // exponent of L,   >= 0

    bool is_unit() const { return q1 == 0 && q2 == 0 && lam == 0; }
    friend Monomial4D operator*(const Monomial4D& x, const Monomial4D& y) {
        return {x.q1 + y.q1, x.q2 + y.q2, x.lam + y.lam};
    }
    friend auto operator<=>(const Monomial4D& x, const Monomial4D& y) {
        return std::tie(x.lam, x.q1, x.q2) <=> std::tie(y.lam, y.q1, y.q2);
    }
    friend bool operator==(const Monomial4D&, const Monomial4D&) = default;
};

struct Monomial6D {
    using Trunc = Box;
    int q = 0; // exponent of q,        >= 0
    int T = 0; // exponent of T,        >= 0
    int s = 0; // exponent of s,        any sign

    bool is_unit() const { return q == 0 && T == 0 && s == 0; }
    friend Monomial6D operator*(const Monomial6D& x, const Monomial6D& y) {
        return {x.q + y.q, x.T + y.T, x.s + y.s};
    }
    friend auto operator<=>(const Monomial6D& x, const Monomial6D& y) {
        return std::tie(x.T, x.q, x.s) <=> std::tie(y.T, y.q, y.s);
    }
    friend bool operator==(const Monomial6D&, const Monomial6D&) = default;
};

inline bool admits(const TotalDegree& tr, const Monomial4D& m) {
    return m.q1 + m.q2 + m.lam <= tr.order;
}
inline bool admits(const Box& b, const Monomial6D& m) {
    return m.q <= b.qmax && m.T <= b.tmax;
}

// Grading used by the inversion recurrence; multiplication adds grades and
// any monomial of grade 0 other than the unit has no admissible bound on its
// powers (pure s-monomials in 6d).
inline int grade(const Monomial4D& m) { return m.q1 + m.q2 + m.lam; }
inline int grade(const Monomial6D& m) { return m.q + m.T; }
inline int max_grade(const TotalDegree& tr) { return tr.order; }
inline int max_grade(const Box& b) { return b.qmax + b.tmax; }

inline std::string to_string(const Monomial4D& m) {
    std::ostringstream os;
    os << "q1^" << m.q1 << " q2^" << m.q2 << " L^" << m.lam;
    return os.str();
}
inline std::string to_string(const Monomial6D& m) {
    std::ostringstream os;
    os << "T^" << m.T << " q^" << m.q << " s^" << m.s;
    return os.str();
}

// Sparse truncated series with exact integer coefficients. Immutable in
// spirit: all operations return new values. Stored terms are nonzero and
// respect the truncation bound; binary operations truncate to the meet of
// the operand bounds. Equality is equality of the pruned term maps.
template <typename Mono>
class Series {
public:
    using Trunc = typename Mono::Trunc;
    using TermMap = std::map<Mono, Int>;

    explicit Series(Trunc bound) : bound_(bound) {}

    static Series unit(Trunc bound) { return monomial(Mono{}, 1, bound); }

    static Series monomial(const Mono& m, Int c, Trunc bound) {
        Series r(bound);
        if (c != 0 && admits(bound, m)) r.terms_.emplace(m, std::move(c));
        return r;
    }

    const Trunc& bound() const { return bound_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Mono& m, const Int& c) {
        if (c == 0 || !admits(bound_, m)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool operator==(const Series& o) const { return terms_ == o.terms_; }
    bool operator!=(const Series& o) const { return !(*this == o); }

private:
    TermMap terms_;
    Trunc bound_;
};

using Series4D = Series<Monomial4D>;
using Series6D = Series<Monomial6D>;

template <typename Mono>
Series<Mono> operator+(const Series<Mono>& x, const Series<Mono>& y) {
    Series<Mono> r(meet(x.bound(), y.bound()));
    for (const auto& [m, c] : x.terms()) r.add_term(m, c);
    for (const auto& [m, c] : y.terms()) r.add_term(m, c);
    return r;
}

template <typename Mono>
Series<Mono> operator-(const Series<Mono>& x, const Series<Mono>& y) {
    Series<Mono> r(meet(x.bound(), y.bound()));
    for (const auto& [m, c] : x.terms()) r.add_term(m, c);
    for (const auto& [m, c] : y.terms()) r.add_term(m, -c);
    return r;
}

template <typename Mono>
Series<Mono> operator-(const Series<Mono>& x) {
    Series<Mono> r(x.bound());
    for (const auto& [m, c] : x.terms()) r.add_term(m, -c);
    return r;
}

// Distributive product; terms falling outside the meet of the bounds are
// dropped as they arise, never materialized.
template <typename Mono>
Series<Mono> operator*(const Series<Mono>& x, const Series<Mono>& y) {
    Series<Mono> r(meet(x.bound(), y.bound()));
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) r.add_term(mx * my, cx * cy);
    return r;
}

// Restriction to a smaller truncation bound.
template <typename Mono>
Series<Mono> clipped(const Series<Mono>& x, const typename Mono::Trunc& bound) {
    Series<Mono> r(meet(x.bound(), bound));
    for (const auto& [m, c] : x.terms()) r.add_term(m, c);
    return r;
}

// Multiplicative inverse within truncation. Requires the grade-zero part of
// x to be exactly 1 (the 6d context admits grade-zero monomials s^w, whose
// inverses would not be Laurent polynomials). The result is built grade by
// grade from y_g = -sum_{h=1..g} r_h y_{g-h} with r = x - 1, so coefficients
// stay integral.
template <typename Mono>
Series<Mono> invert(const Series<Mono>& x) {
    using Trunc = typename Mono::Trunc;
    const Trunc bound = x.bound();

    std::map<int, std::vector<std::pair<Mono, Int>>> r_slices;
    bool saw_unit = false;
    for (const auto& [m, c] : x.terms()) {
        const int g = grade(m);
        if (g == 0) {
            if (!m.is_unit() || c != 1)
                throw std::domain_error("invert: degree-zero part must be exactly 1");
            saw_unit = true;
        } else {
            r_slices[g].emplace_back(m, c);
        }
    }
    if (!saw_unit) throw std::domain_error("invert: degree-zero part must be exactly 1");

    const int gmax = max_grade(bound);
    std::vector<std::vector<std::pair<Mono, Int>>> y_slices(gmax + 1);
    y_slices[0].emplace_back(Mono{}, 1);

    Series<Mono> result(bound);
    result.add_term(Mono{}, 1);
    for (int g = 1; g <= gmax; ++g) {
        std::map<Mono, Int> slice;
        for (const auto& [h, r_terms] : r_slices) {
            if (h > g) break;
            for (const auto& [mr, cr] : r_terms)
                for (const auto& [my, cy] : y_slices[g - h]) {
                    const Mono m = mr * my;
                    if (!admits(bound, m)) continue;
                    auto [it, inserted] = slice.emplace(m, -cr * cy);
                    if (!inserted) it->second -= cr * cy;
                }
        }
        for (const auto& [m, c] : slice) {
            if (c == 0) continue;
            y_slices[g].emplace_back(m, c);
            result.add_term(m, c);
        }
    }
    return result;
}

// Expansion of (1 + sign*m)^exp within the bound; negative exponents use the
// binomial series, whose coefficients are integers. A nontrivial monomial of
// grade zero (pure s^w in 6d) has a Laurent-polynomial expansion only for
// exp >= 0.
template <typename Mono>
Series<Mono> geom_factor_power(const Mono& m, int sign, long long exp,
                               const typename Mono::Trunc& bound) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("geom_factor_power: sign must be +1 or -1");
    if (m.is_unit())
        throw std::invalid_argument("geom_factor_power: trivial monomial");
    if (exp < 0 && grade(m) == 0)
        throw std::invalid_argument(
            "geom_factor_power: negative power of a grade-zero factor is not a series");

    Series<Mono> r(bound);
    Mono mk{}; // m^k
    for (long long k = 0;; ++k) {
        if (!admits(bound, mk)) break;
        if (exp >= 0 && k > exp) break;
        // coefficient of u^k in (1+u)^exp, times sign^k
        Int c = exp >= 0 ? binomial(exp, k)
                         : ((k % 2 == 0 ? 1 : -1) * binomial(k - exp - 1, k));
        if (sign == -1 && k % 2 == 1) c = -c;
        r.add_term(mk, c);
        mk = mk * m;
    }
    return r;
}

// The Laurent polynomial in s multiplying T^l q^m.
inline RefinedInvariant coefficient(const Series6D& x, int l, int m) {
    if (l < 0 || m < 0 || m > x.bound().qmax || l > x.bound().tmax)
        throw std::out_of_range("coefficient: (l, m) outside box");
    RefinedInvariant p;
    for (const auto& [mono, c] : x.terms()) {
        if (mono.T != l) continue;
        if (mono.q == m) p.add_term(mono.s, c);
    }
    return p;
}

// Change of variables q1 = -s q, q2 = -s^-1 q, L = -T q: the monomial
// q1^a q2^b L^c maps to (-1)^(a+b+c) s^(a-b) q^(a+b+c) T^c. The image of a
// 4d series of total order >= qmax fills the box exactly; a smaller source
// order would leave the image underdetermined.
inline Series6D substitute_4d_to_6d(const Series4D& x, const Box& box) {
    if (x.bound().order < box.qmax)
        throw std::invalid_argument("substitute_4d_to_6d: source order below target q bound");
    Series6D r(box);
    for (const auto& [m, c] : x.terms()) {
        const int deg = m.q1 + m.q2 + m.lam;
        const Monomial6D image{deg, m.lam, m.q1 - m.q2};
        r.add_term(image, deg % 2 == 0 ? c : -c);
    }
    return r;
}

// Collapse s to 1: every s-exponent is sent to zero and coefficients of equal
// (q, T) part are summed. Specializes a refined series to its numerical one.
inline Series6D collapse_s1(const Series6D& x) {
    Series6D r(x.bound());
    for (const auto& [m, c] : x.terms()) r.add_term({m.q, m.T, 0}, c);
    return r;
}

template <typename Mono>
std::ostream& operator<<(std::ostream& os, const Series<Mono>& x) {
    if (x.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        if (!first) os << " + ";
        os << c << "*" << to_string(m);
        first = false;
    }
    return os;
}

} // namespace conifold
