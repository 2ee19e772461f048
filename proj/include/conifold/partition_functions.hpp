#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conifold/characters.hpp"
#include "conifold/series.hpp"

namespace conifold {

// A stability chamber, addressed by its integer index n >= 0, or the n -> oo
// limit in which the truncated series stabilize to the stable-pairs one.
class Chamber {
public:
    static Chamber pt() { return Chamber(std::nullopt); }
    static Chamber index(int n);

    bool is_pt() const { return !n_.has_value(); }
    int n() const; // throws on the pt chamber

    std::string name() const; // "pt" or the decimal index

    friend bool operator==(const Chamber&, const Chamber&) = default;

private:
    explicit Chamber(std::optional<int> n) : n_(n) {}
    std::optional<int> n_;
};

// Sign flip of a single factor of the refined product, used as an injected
// bug for negative controls: the verifiers must locate it.
struct FactorFlip {
    int m = 0; // factor q-degree, 1 <= m
    int j = 0; // factor index within degree, 0 <= j <= m-1
};

// Rank-one Nekrasov partition function: product over (i1, i2) with
// i1 + i2 + 1 <= N of (1 - q1^i1 q2^i2 L)^-1, truncated to total degree N.
Series4D nekrasov_r1(int order);

// Reduced topological string / stable pairs series of the resolved conifold:
// product over n <= qmax of (1 - (-q)^n T)^n. No s-dependence.
Series6D topstring_Z(const Box& box);

// Refined stable-pairs series: product over 1 <= m <= qmax, 0 <= j <= m-1 of
// (1 - (-1)^m s^(-m+1+2j) q^m T).
Series6D refined_conifold_Z(const Box& box, std::optional<FactorFlip> flip = std::nullopt);

// Chamber-truncated refined series: the same product restricted to m <= n.
// The pt chamber delegates to the full refined series.
Series6D chamber_Z(const Box& box, const Chamber& chamber,
                   std::optional<FactorFlip> flip = std::nullopt);

struct Discrepancy {
    std::string where;  // offending cell or monomial, e.g. "l=1 m=2 w=-1"
    std::string detail; // what was found vs what was required
};

struct Report {
    std::string identity; // "inverse", "exterior", "topstring" or "sl2"
    Box box;
    bool ok = false;
    std::vector<Discrepancy> discrepancies;
};

// Inverse identity: refined series times the substituted Nekrasov series
// equals 1 exactly on the box.
Report verify_inverse_identity(const Box& box, std::optional<FactorFlip> flip = std::nullopt);

// Exterior-character identity: the chamber series equals the exterior
// character with the matching degree cap, and the full refined series equals
// the uncapped exterior character.
Report verify_exterior_identity(const Box& box, const Chamber& chamber,
                                std::optional<FactorFlip> flip = std::nullopt);

// Specialization consistency: the refined series collapsed at s = 1 equals
// the unrefined stable-pairs series.
Report verify_topstring(const Box& box, std::optional<FactorFlip> flip = std::nullopt);

// Character-level purity consequences: every (l, m) coefficient is
// palindromic and (-1)^(l+m) times it has nonnegative SL(2) multiplicities.
Report verify_sl2_positivity(const Box& box, std::optional<FactorFlip> flip = std::nullopt);

struct InvariantRow {
    int l = 0;
    int m = 0;
    RefinedInvariant refined; // nonzero
    Int numeric;              // value at s = 1
    SL2Decomp sl2;            // decomposition of (-1)^(l+m) * refined
};

// All nonzero (l, m) coefficients of the chamber series over the box, with
// their numerical specializations and SL(2) decompositions. Rows are ordered
// by (l, m).
struct InvariantTable {
    Box box;
    Chamber chamber = Chamber::pt();
    std::vector<InvariantRow> rows;
};

InvariantTable invariant_table(const Box& box, const Chamber& chamber);

} // namespace conifold
