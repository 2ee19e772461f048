#include "conifold/partition_functions.hpp"

#include <sstream>
#include <stdexcept>

namespace conifold {

Chamber Chamber::index(int n) {
    if (n < 0) throw std::invalid_argument("Chamber::index: negative index");
    return Chamber(n);
}

int Chamber::n() const {
    if (is_pt()) throw std::logic_error("Chamber::n on the pt chamber");
    return *n_;
}

std::string Chamber::name() const { return is_pt() ? "pt" : std::to_string(*n_); }

Series4D nekrasov_r1(int order) {
    if (order < 0) throw std::invalid_argument("nekrasov_r1: negative order");
    const TotalDegree bound{order};
    Series4D z = Series4D::unit(bound);
    for (int i1 = 0; i1 + 1 <= order; ++i1)
        for (int i2 = 0; i1 + i2 + 1 <= order; ++i2) {
            Series4D factor = Series4D::unit(bound);
            factor.add_term({i1, i2, 1}, -1);
            z = z * invert(factor);
        }
    return z;
}

Series6D topstring_Z(const Box& box) {
    Series6D z = Series6D::unit(box);
    for (int n = 1; n <= box.qmax; ++n)
        z = z * geom_factor_power(Monomial6D{n, 1, 0}, n % 2 == 0 ? -1 : 1, n, box);
    return z;
}

namespace {

// One factor (1 - (-1)^m s^(-m+1+2j) q^m T) of the refined product, with an
// optional sign flip for negative controls.
Series6D refined_factor(const Box& box, int m, int j, const std::optional<FactorFlip>& flip) {
    int sign = m % 2 == 0 ? -1 : 1;
    if (flip && flip->m == m && flip->j == j) sign = -sign;
    Series6D factor = Series6D::unit(box);
    factor.add_term({m, 1, -m + 1 + 2 * j}, sign);
    return factor;
}

} // namespace

Series6D refined_conifold_Z(const Box& box, std::optional<FactorFlip> flip) {
    Series6D z = Series6D::unit(box);
    // Increasing m keeps partial products small early; the order is purely a
    // performance choice.
    for (int m = 1; m <= box.qmax; ++m)
        for (int j = 0; j < m; ++j) z = z * refined_factor(box, m, j, flip);
    return z;
}

Series6D chamber_Z(const Box& box, const Chamber& chamber, std::optional<FactorFlip> flip) {
    if (chamber.is_pt()) return refined_conifold_Z(box, flip);
    Series6D z = Series6D::unit(box);
    for (int m = 1; m <= std::min(chamber.n(), box.qmax); ++m)
        for (int j = 0; j < m; ++j) z = z * refined_factor(box, m, j, flip);
    return z;
}

namespace {

void collect_series_diff(const Series6D& got, const Series6D& expected, Report& report) {
    const Series6D diff = got - expected;
    for (const auto& [mono, c] : diff.terms()) {
        std::ostringstream where, detail;
        where << "l=" << mono.T << " m=" << mono.q << " w=" << mono.s;
        detail << "coefficient " << got.coeff(mono) << ", expected " << expected.coeff(mono);
        report.discrepancies.push_back({where.str(), detail.str()});
    }
    report.ok = report.discrepancies.empty();
}

} // namespace

Report verify_inverse_identity(const Box& box, std::optional<FactorFlip> flip) {
    Report report{"inverse", box, false, {}};
    const Series6D zx = refined_conifold_Z(box, flip);
    const Series6D znek = substitute_4d_to_6d(nekrasov_r1(box.qmax), box);
    collect_series_diff(zx * znek, Series6D::unit(box), report);
    return report;
}

Report verify_exterior_identity(const Box& box, const Chamber& chamber,
                                std::optional<FactorFlip> flip) {
    Report report{"exterior", box, false, {}};
    const std::optional<int> cap =
        chamber.is_pt() ? std::nullopt : std::optional<int>(chamber.n());
    collect_series_diff(chamber_Z(box, chamber, flip), ext_char_6d(box, cap), report);
    if (!chamber.is_pt()) {
        // The pt pair is part of the identity regardless of the chamber asked for.
        collect_series_diff(refined_conifold_Z(box, flip), ext_char_6d(box), report);
    }
    return report;
}

Report verify_topstring(const Box& box, std::optional<FactorFlip> flip) {
    Report report{"topstring", box, false, {}};
    collect_series_diff(collapse_s1(refined_conifold_Z(box, flip)), topstring_Z(box), report);
    return report;
}

Report verify_sl2_positivity(const Box& box, std::optional<FactorFlip> flip) {
    Report report{"sl2", box, false, {}};
    const Series6D zx = refined_conifold_Z(box, flip);
    for (int l = 0; l <= box.tmax; ++l)
        for (int m = 0; m <= box.qmax; ++m) {
            const RefinedInvariant w = coefficient(zx, l, m);
            std::ostringstream where;
            where << "l=" << l << " m=" << m;
            if (!w.is_palindromic()) {
                report.discrepancies.push_back({where.str(), "coefficient is not palindromic"});
                continue;
            }
            const LaurentPoly normalized = (l + m) % 2 == 0 ? w : -w;
            for (const auto& [d, mult] : sl2_decompose(normalized).mult)
                if (mult < 0) {
                    std::ostringstream detail;
                    detail << "negative multiplicity " << mult << " at highest weight " << d;
                    report.discrepancies.push_back({where.str(), detail.str()});
                }
        }
    report.ok = report.discrepancies.empty();
    return report;
}

InvariantTable invariant_table(const Box& box, const Chamber& chamber) {
    InvariantTable table{box, chamber, {}};
    const Series6D z = chamber_Z(box, chamber);
    for (int l = 0; l <= box.tmax; ++l)
        for (int m = 0; m <= box.qmax; ++m) {
            RefinedInvariant w = coefficient(z, l, m);
            if (w.is_zero()) continue;
            InvariantRow row;
            row.l = l;
            row.m = m;
            row.numeric = specialize_s1(w);
            row.sl2 = sl2_decompose((l + m) % 2 == 0 ? w : -w);
            row.refined = std::move(w);
            table.rows.push_back(std::move(row));
        }
    return table;
}

} // namespace conifold
