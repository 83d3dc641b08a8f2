#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "dt/errors.hpp"
#include "dt/partitions.hpp"
#include "dt/rational.hpp"
#include "dt/series.hpp"

namespace dt {

/// A finite-colength monomial ideal in nvars variables, stored as its
/// staircase (the exponent tuples of the standard monomials of R/I).
/// The unit ideal has an empty staircase and colength 0.
struct MonomialIdeal {
    int nvars = 1;
    Staircase staircase; // sorted, downward closed

    MonomialIdeal() = default;
    MonomialIdeal(int nvars_, Staircase stairs) : nvars(nvars_), staircase(std::move(stairs)) {
        std::sort(staircase.begin(), staircase.end());
        for (const Exponent& e : staircase)
            if (static_cast<int>(e.size()) != nvars) throw DimensionMismatch("staircase tuple arity != nvars");
        if (!is_order_ideal(staircase)) throw Error("staircase is not downward closed");
    }

    int colength() const { return static_cast<int>(staircase.size()); }

    bool contains_standard_monomial(const Exponent& e) const {
        for (int v : e)
            if (v < 0) return false;
        return staircase_contains(staircase, e);
    }

    /// Minimal monomial generators: the minimal exponents outside the
    /// staircase. Unique, pairwise incomparable under divisibility.
    std::vector<Exponent> minimal_generators() const {
        std::vector<Exponent> candidates;
        if (staircase.empty()) {
            candidates.push_back(Exponent(static_cast<std::size_t>(nvars), 0));
            return candidates;
        }
        // Every minimal generator is a staircase element pushed one step
        // out of the staircase (all its predecessors are standard).
        for (const Exponent& e : staircase) {
            for (int i = 0; i < nvars; ++i) {
                Exponent c = e;
                ++c[i];
                if (!staircase_contains(staircase, c)) candidates.push_back(std::move(c));
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        std::vector<Exponent> gens;
        for (const Exponent& c : candidates) {
            bool minimal = true;
            for (const Exponent& d : candidates) {
                if (d == c) continue;
                if (divides(d, c)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) gens.push_back(c);
        }
        return gens;
    }

    static bool divides(const Exponent& a, const Exponent& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    }

    bool operator==(const MonomialIdeal& rhs) const = default;
    bool operator<(const MonomialIdeal& rhs) const {
        return std::tie(nvars, staircase) < std::tie(rhs.nvars, rhs.staircase);
    }
};

/// Torus fixed point of a rank-r Quot scheme: a direct sum of r monomial
/// ideals in the same variables; `total` is the sum of the colengths.
struct QuotFixedPoint {
    int rank = 1;
    std::vector<MonomialIdeal> ideals;
    int total = 0;

    QuotFixedPoint() = default;
    explicit QuotFixedPoint(std::vector<MonomialIdeal> parts) : rank(static_cast<int>(parts.size())), ideals(std::move(parts)) {
        for (const MonomialIdeal& I : ideals) total += I.colength();
    }

    bool operator==(const QuotFixedPoint& rhs) const = default;
};

/// Stacking bijection between n-dimensional partitions of m and colength-m
/// monomial ideals in n variables: box (t, k) is a standard monomial exactly
/// when the partition entry at t exceeds k.
inline MonomialIdeal partition_to_ideal(const NDPartition& p) { return MonomialIdeal(p.dim, p.staircase()); }

inline NDPartition ideal_to_partition(const MonomialIdeal& I) {
    if (I.nvars < 2) throw DimensionTooSmall("partitions are defined for dimension >= 2");
    return NDPartition::from_staircase(I.nvars, I.staircase);
}

/// All monomial ideals of the given colength, canonically ordered.
inline std::vector<MonomialIdeal> enumerate_monomial_ideals(int nvars, int colength) {
    if (nvars < 2) throw DimensionTooSmall("monomial-ideal enumeration needs nvars >= 2");
    if (colength < 0) throw OutOfRange("colength must be nonnegative");
    std::vector<MonomialIdeal> out;
    for (const Staircase& s : enumerate_order_ideals(nvars, colength)) out.emplace_back(nvars, s);
    return out;
}

/// All r-tuples of monomial ideals with colengths summing to `total`,
/// ordered lexicographically on (composition, component ideals).
inline std::vector<QuotFixedPoint> enumerate_quot_fixed_points(int nvars, int rank, int total) {
    if (nvars < 2) throw DimensionTooSmall("fixed-point enumeration needs nvars >= 2");
    if (rank < 1) throw OutOfRange("rank must be >= 1");
    if (total < 0) throw OutOfRange("total colength must be nonnegative");
    std::vector<QuotFixedPoint> out;
    std::vector<MonomialIdeal> current;
    detail::OrderIdealEnumerator shared;
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == rank) {
            out.push_back(QuotFixedPoint(current));
            return;
        }
        const int lo = (slot == rank - 1) ? remaining : 0;
        for (int c = lo; c <= remaining; ++c) {
            for (const Staircase& s : shared.run(nvars, c)) {
                current.emplace_back(nvars, s);
                self(self, slot + 1, remaining - c);
                current.pop_back();
            }
        }
    };
    rec(rec, 0, total);
    return out;
}

/// chi of the punctual rank-r Quot scheme in n variables at total length m,
/// computed by exhaustive fixed-point enumeration (not by formula, so the
/// generating-function identities stay genuine cross-checks).
inline long long chi_punctual_quot(int nvars, int rank, int total) {
    return static_cast<long long>(enumerate_quot_fixed_points(nvars, rank, total).size());
}

/// Generating series of Quot-scheme Euler characteristics for a rank-r
/// locally free sheaf on an n-fold with Euler characteristic chiY:
/// (sum_m P_n(m) q^m)^{r*chiY}. The answer depends on the sheaf only
/// through its rank, which is why only r is taken.
inline Series chi_quot_series(int n, int rank, long chiY, int order) {
    return int_pow(partition_series(n, order), static_cast<long>(rank) * chiY);
}

/// Euler characteristic of the configuration space of ell pairwise distinct
/// points: the falling factorial chiY (chiY-1) ... (chiY-ell+1).
inline Integer config_space_chi(long chiY, int ell) {
    if (ell < 0) throw OutOfRange("configuration-space length must be nonnegative");
    Integer acc = 1;
    for (int i = 0; i < ell; ++i) acc *= Integer(chiY - i);
    return acc;
}

/// Global Euler characteristic of a Quot scheme from its punctual series by
/// the stratification over the support: sum over ordinary partitions alpha
/// of m of chi(config space of length(alpha)) / |Aut(alpha)| times the
/// product of punctual coefficients at the parts. Equals the coefficient of
/// q^m in punctual^chiY.
inline Rational stratified_chi_quot(const Series& punctual, long chiY, int m) {
    if (m < 0) throw OutOfRange("stratified evaluation needs m >= 0");
    if (punctual.order() < m) throw BadPunctualSeries("punctual series order below requested weight");
    if (punctual.coefficient(0) != 1) throw BadPunctualSeries();
    Rational acc = 0;
    for (const std::vector<int>& alpha : enumerate_integer_partitions(m)) {
        const int ell = static_cast<int>(alpha.size());
        Rational term(config_space_chi(chiY, ell));
        Integer aut = 1;
        int run = 1;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            term *= punctual.coefficient(alpha[i]);
            if (i + 1 < alpha.size() && alpha[i + 1] == alpha[i]) {
                ++run;
            } else {
                for (int f = 2; f <= run; ++f) aut *= f;
                run = 1;
            }
        }
        acc += term / Rational(aut);
    }
    return acc;
}

} // namespace dt
