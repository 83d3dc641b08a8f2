#pragma once

#include <optional>
#include <string>
#include <utility>

#include "dt/chow.hpp"
#include "dt/errors.hpp"
#include "dt/partitions.hpp"
#include "dt/series.hpp"
#include "dt/torus.hpp"
#include "dt/walls.hpp"

namespace dt {

/// A computed Donaldson-Thomas generating series together with the data it
/// was assembled from. `weighted` records whether Behrend weighting applies
/// to the coefficients (for these families the weighted and unweighted
/// series differ at most by the global sign (-1)^k).
struct DTSeriesReport {
    Family family = Family::A;
    int eps1 = 0;              // family B parameters
    int eps2 = 0;
    Rational r = 0;            // family B polarization
    long long chiY = 0;
    long long k = 0;           // moduli dimension P^k (family B)
    Series series{0};
    bool weighted = true;
};

namespace detail {

/// Places f_j at q^{2j}, producing a series of the requested order.
inline Series square_substitute(const Series& f, int order) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int j = 0; j <= f.order() && 2 * j <= order; ++j) c[static_cast<std::size_t>(2 * j)] = f.coefficient(j);
    return Series(order, std::move(c));
}

/// DT coefficients are integers and all odd powers vanish; anything else is
/// a bug upstream.
inline void validate_dt_series(const Series& s) {
    for (int m = 0; m <= s.order(); ++m) {
        const Rational& c = s.coefficient(m);
        if (!is_integer(c)) throw IntegralityViolation("coefficient of q^" + std::to_string(m) + " is " + c.get_str());
        if (m % 2 != 0 && c != 0) throw Error("odd coefficient of q^" + std::to_string(m) + " is nonzero");
    }
}

} // namespace detail

/// Euler characteristic of the quartic-in-quadric Calabi-Yau 3-fold,
/// recomputed from intersection theory on every call.
inline long long chi_family_a() { return ci_euler(Ambient({5}), {{2}, {4}}); }

/// Euler characteristic of the (2,2,n+1) hypersurface in P^1 x P^1 x P^n.
inline long long chi_family_b(int n = 2) { return ci_euler(Ambient({1, 1, n}), {{2, 2, n + 1}}); }

/// DT generating series of family A: 2 M(q^2)^{2 chi(Y)}. Weighted and
/// unweighted coincide for this family.
inline DTSeriesReport theorem_a_series(int order) {
    if (order < 0) throw OutOfRange("order must be nonnegative");
    DTSeriesReport rep;
    rep.family = Family::A;
    rep.chiY = chi_family_a();
    rep.k = 0;
    Series m2 = detail::square_substitute(macmahon(order / 2), order);
    rep.series = int_pow(m2, 2 * rep.chiY) * Rational(2);
    rep.weighted = true;
    detail::validate_dt_series(rep.series);
    return rep;
}

/// DT generating series of family B at polarization r: the zero series
/// below the wall, (-1)^k (k+1) M(q^2)^{2 chi(Y)} inside the chamber.
/// On the wall and at or above the upper bound no formula applies and the
/// request is refused.
inline DTSeriesReport theorem_b_series(int eps1, int eps2, const Rational& r, int order) {
    if (order < 0) throw OutOfRange("order must be nonnegative");
    ChamberSpec spec(2, eps1, eps2, r);
    DTSeriesReport rep;
    rep.family = Family::B;
    rep.eps1 = eps1;
    rep.eps2 = eps2;
    rep.r = r;
    rep.k = k_value_3fold(eps1, eps2);
    rep.chiY = chi_family_b(2);
    rep.weighted = true;
    switch (classify(spec)) {
        case Chamber::OnWall:
            throw OnWallUnsupported();
        case Chamber::AtOrAboveUpper:
            throw AboveUpperUnsupported();
        case Chamber::BelowWall:
            rep.series = Series::zero(order);
            return rep;
        case Chamber::InChamber:
            break;
    }
    Series m2 = detail::square_substitute(macmahon(order / 2), order);
    const Rational sign_k((rep.k % 2 == 0) ? 1 : -1);
    rep.series = int_pow(m2, 2 * rep.chiY) * (sign_k * Rational(static_cast<long>(rep.k + 1)));
    detail::validate_dt_series(rep.series);
    return rep;
}

/// Unweighted Euler-characteristic series for the hypersurface family in
/// P^1 x P^1 x P^n: (k+1) (sum_m P_{n+1}(m) q^{2m})^{2 chi(Y)}. The
/// exponent base uses (n+1)-dimensional partitions because dim Y = n+1.
inline Series prop_e2_series(int n, int eps1, int eps2, int order) {
    if (n < 2) throw DimensionTooSmall("hypersurface family needs n >= 2");
    if (order < 0) throw OutOfRange("order must be nonnegative");
    const long long chi = chi_family_b(n);
    const long long k = k_value(n, eps1, eps2);
    Series base = detail::square_substitute(partition_series(n + 1, order / 2), order);
    Series out = int_pow(base, 2 * chi) * Rational(static_cast<long>(k + 1));
    detail::validate_dt_series(out);
    return out;
}

/// Exact integer DT invariant at q^m.
inline Integer dt_invariant(const DTSeriesReport& report, int m) {
    if (m < 0 || m > report.series.order()) throw OutOfRange("m outside the computed order");
    return to_integer(report.series.coefficient(m));
}

struct CrosscheckReport {
    Family family = Family::A;
    int m = 0;
    long long chiY = 0;
    long long multiplicity = 0;
    Rational closed_form;  // multiplicity * [q^m] (P_3 series)^{2 chi}
    Rational stratified;   // multiplicity * stratified sum over enumerated fixed points
};

/// Recomputes the unweighted coefficient at quotient length m two ways:
/// through the closed power formula and through punctual fixed-point
/// enumeration fed into the stratification sum. Throws RouteMismatch if
/// they ever differ.
inline CrosscheckReport crosscheck_quot_model(Family family, int m, int eps1 = 0, int eps2 = 0) {
    if (m < 0 || m > 6) throw OutOfRange("crosscheck supports 0 <= m <= 6");
    CrosscheckReport rep;
    rep.family = family;
    rep.m = m;
    if (family == Family::A) {
        rep.chiY = chi_family_a();
        rep.multiplicity = 2;
    } else {
        rep.chiY = chi_family_b(2);
        rep.multiplicity = k_value_3fold(eps1, eps2) + 1;
    }
    rep.closed_form = Rational(static_cast<long>(rep.multiplicity)) * coefficient(chi_quot_series(3, 2, rep.chiY, m), m);

    std::vector<Rational> punctual(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) punctual[static_cast<std::size_t>(j)] = Rational(static_cast<long>(chi_punctual_quot(3, 2, j)));
    rep.stratified = Rational(static_cast<long>(rep.multiplicity)) * stratified_chi_quot(Series(m, std::move(punctual)), rep.chiY, m);

    if (rep.closed_form != rep.stratified)
        throw RouteMismatch("quot-model crosscheck failed at m=" + std::to_string(m) + ": " + rep.closed_form.get_str() +
                            " vs " + rep.stratified.get_str());
    return rep;
}

} // namespace dt
