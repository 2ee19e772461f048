#include "conifold/characters.hpp"

#include <stdexcept>
#include <vector>

namespace conifold {

namespace {

// Basis monomials x^a y^b of C[x,y] with a + b <= maxdeg, ordered by total
// degree, then x-exponent. This ordering fixes the factor order of every
// product constructor.
std::vector<PlaneMonomial> plane_basis(int maxdeg) {
    std::vector<PlaneMonomial> gens;
    for (int d = 0; d <= maxdeg; ++d)
        for (int a = d; a >= 0; --a) gens.push_back({a, d - a});
    return gens;
}

} // namespace

LaurentPoly SL2Decomp::reconstruct() const {
    LaurentPoly r;
    for (const auto& [d, c] : mult)
        for (int w = -d; w <= d; w += 2) r.add_term(w, c);
    return r;
}

Series4D sym_char_4d(int order) {
    if (order < 0) throw std::invalid_argument("sym_char_4d: negative order");
    const TotalDegree bound{order};
    Series4D z = Series4D::unit(bound);
    // A generator of total degree a + b contributes L-degree >= a + b + 1
    // per use, so generators with a + b + 1 > order are invisible.
    for (const PlaneMonomial& g : plane_basis(order - 1)) {
        const Monomial4D m{g.x, g.y, 1};
        Series4D factor(bound);
        Monomial4D mk{};
        for (int k = 0; admits(bound, mk); ++k, mk = mk * m) factor.add_term(mk, 1);
        z = z * factor;
    }
    return z;
}

namespace {

// Multisets over gens[i..] with total weight (sum of degrees + size) budget.
void sym_enumerate(const std::vector<PlaneMonomial>& gens, size_t i, int budget,
                   const Monomial4D& acc, Series4D& out) {
    out.add_term(acc, 1);
    for (size_t j = i; j < gens.size(); ++j) {
        const int cost = gens[j].x + gens[j].y + 1;
        if (cost > budget) continue;
        sym_enumerate(gens, j, budget - cost,
                      acc * Monomial4D{gens[j].x, gens[j].y, 1}, out);
    }
}

} // namespace

Series4D sym_char_oracle(int order) {
    if (order < 0) throw std::invalid_argument("sym_char_oracle: negative order");
    if (order > 12) throw std::invalid_argument("sym_char_oracle: order above guard 12");
    Series4D out(TotalDegree{order});
    sym_enumerate(plane_basis(order - 1), 0, order, Monomial4D{}, out);
    return out;
}

Series6D ext_char_6d(const Box& box, std::optional<int> degree_cap) {
    if (degree_cap && *degree_cap < 0)
        throw std::invalid_argument("ext_char_6d: negative degree cap");
    int maxdeg = box.qmax - 1;
    if (degree_cap) maxdeg = std::min(maxdeg, *degree_cap - 1);
    Series6D z = Series6D::unit(box);
    for (const PlaneMonomial& g : plane_basis(maxdeg)) {
        const int d = g.x + g.y;
        // (1 - (-1)^(d+1) s^(x-y) q^(d+1) T)
        const int sign = d % 2 == 0 ? 1 : -1;
        Series6D factor = Series6D::unit(box);
        factor.add_term({d + 1, 1, g.x - g.y}, sign);
        z = z * factor;
    }
    return z;
}

namespace {

// Subsets of gens[i..]: each generator appears at most once, total weight
// (sum of degrees + size) at most budget, at most tbudget elements.
void ext_enumerate(const std::vector<PlaneMonomial>& gens, size_t i, int budget,
                   int tbudget, int parity, const Monomial6D& acc, Series6D& out) {
    out.add_term(acc, parity);
    if (tbudget == 0) return;
    for (size_t j = i; j < gens.size(); ++j) {
        const int d = gens[j].x + gens[j].y;
        if (d + 1 > budget) continue;
        ext_enumerate(gens, j + 1, budget - d - 1, tbudget - 1,
                      d % 2 == 0 ? parity : -parity,
                      acc * Monomial6D{d + 1, 1, gens[j].x - gens[j].y}, out);
    }
}

} // namespace

Series6D ext_char_oracle(const Box& box, std::optional<int> degree_cap) {
    if (degree_cap && *degree_cap < 0)
        throw std::invalid_argument("ext_char_oracle: negative degree cap");
    if (box.qmax > 8) throw std::invalid_argument("ext_char_oracle: qmax above guard 8");
    int maxdeg = box.qmax - 1;
    if (degree_cap) maxdeg = std::min(maxdeg, *degree_cap - 1);
    Series6D out(box);
    ext_enumerate(plane_basis(maxdeg), 0, box.qmax, box.tmax, 1, Monomial6D{}, out);
    return out;
}

SL2Decomp sl2_decompose(const LaurentPoly& p) {
    if (!p.is_palindromic())
        throw std::domain_error("sl2_decompose: polynomial is not palindromic");
    SL2Decomp dec;
    LaurentPoly rest = p;
    while (!rest.is_zero()) {
        // The top exponent strictly decreases, so each d is peeled once.
        const int d = rest.max_exp();
        const Int c = rest.coeff(d);
        dec.mult.emplace(d, c);
        LaurentPoly chi;
        for (int w = -d; w <= d; w += 2) chi.add_term(w, 1);
        rest -= c * chi;
    }
    return dec;
}

Int specialize_s1(const LaurentPoly& p) { return p.at_one(); }

} // namespace conifold
