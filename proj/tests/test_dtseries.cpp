#include <catch2/catch_amalgamated.hpp>

#include "dt/dtseries.hpp"
#include "dt/localalg.hpp"

using dt::Rational;
using dt::Series;

TEST_CASE("family A series") {
    auto rep = dt::theorem_a_series(8);
    REQUIRE(rep.chiY == -176);
    REQUIRE(rep.weighted);
    REQUIRE(rep.series.coefficient(0) == 2);
    for (int m = 1; m <= 7; m += 2) REQUIRE(rep.series.coefficient(m) == 0);
    REQUIRE(rep.series.coefficient(2) == Rational(2L * 2 * -176));

    SECTION("equals the directly assembled power of M(q^2)") {
        Series direct = dt::int_pow(dt::substitute_power(dt::macmahon(8), 2), 2 * -176) * Rational(2);
        REQUIRE(rep.series == direct);
    }

    SECTION("order zero") { REQUIRE(dt::theorem_a_series(0).series.coefficient(0) == 2); }
}

TEST_CASE("family A series via the weighted punctual route") {
    const int order = 8;
    auto rep = dt::theorem_a_series(order);
    std::vector<Rational> w;
    for (int j = 0; 2 * j <= order; ++j) w.emplace_back(static_cast<long>(dt::weighted_chi_punctual_quot(j)));
    Series punctual(order / 2, std::move(w));
    for (int m = 0; 2 * m <= order; ++m) {
        Rational strat = dt::stratified_chi_quot(punctual, rep.chiY, m);
        REQUIRE(rep.series.coefficient(2 * m) == Rational(2) * strat);
    }
}

TEST_CASE("family B series") {
    SECTION("below the wall everything vanishes") {
        auto rep = dt::theorem_b_series(0, 0, Rational(1), 6);
        REQUIRE(rep.series.is_zero());
        REQUIRE(rep.k == 5);
    }

    SECTION("inside the chamber") {
        auto rep = dt::theorem_b_series(0, 0, Rational(3), 8);
        REQUIRE(rep.chiY == -144);
        REQUIRE(rep.k == 5);
        REQUIRE(rep.series.coefficient(0) == -6);
        REQUIRE(rep.series.coefficient(2) == Rational(-6L * 2 * -144));
        for (int m = 1; m <= 7; m += 2) REQUIRE(rep.series.coefficient(m) == 0);
    }

    SECTION("refusals") {
        REQUIRE_THROWS_AS(dt::theorem_b_series(0, 0, Rational(2), 4), dt::OnWallUnsupported);
        REQUIRE_THROWS_AS(dt::theorem_b_series(1, 0, Rational(4), 4), dt::AboveUpperUnsupported);
        REQUIRE_THROWS_AS(dt::theorem_b_series(1, 0, Rational(5), 4), dt::AboveUpperUnsupported);
    }

    SECTION("series is constant across the chamber") {
        auto r3 = dt::theorem_b_series(0, 0, Rational(3), 8);
        auto r52 = dt::theorem_b_series(0, 0, Rational(5, 2), 8);
        auto r100 = dt::theorem_b_series(0, 0, Rational(100), 8);
        REQUIRE(r3.series == r52.series);
        REQUIRE(r3.series == r100.series);
    }

    SECTION("matches the unweighted series up to the global sign") {
        for (int e1 : {0, 1}) {
            for (int e2 : {0, 1}) {
                auto bounds = dt::wall_bounds(2, e1, e2);
                Rational r = bounds.upper ? Rational((bounds.lower + *bounds.upper) / 2) : Rational(bounds.lower + 1);
                auto rep = dt::theorem_b_series(e1, e2, r, 8);
                Series unweighted = dt::prop_e2_series(2, e1, e2, 8);
                const Rational sign((rep.k % 2 == 0) ? 1 : -1);
                REQUIRE(rep.series == unweighted * sign);
            }
        }
    }
}

TEST_CASE("unweighted hypersurface series") {
    SECTION("leading coefficient is k + 1") {
        for (int e1 : {0, 1})
            for (int e2 : {0, 1})
                REQUIRE(dt::prop_e2_series(2, e1, e2, 4).coefficient(0) ==
                        Rational(static_cast<long>(dt::k_value(2, e1, e2) + 1)));
    }

    SECTION("n = 3 uses solid partitions and the 4-fold Euler characteristic") {
        const long long chi4 = dt::chi_family_b(3);
        REQUIRE(chi4 == 1824);
        Series s = dt::prop_e2_series(3, 0, 0, 4);
        const long long k = dt::k_value(3, 0, 0);
        REQUIRE(s.coefficient(0) == Rational(static_cast<long>(k + 1)));
        REQUIRE(s.coefficient(2) == Rational(static_cast<long>((k + 1) * 2 * chi4)));
        REQUIRE(s.coefficient(1) == 0);
    }

    REQUIRE_THROWS_AS(dt::prop_e2_series(1, 0, 0, 4), dt::DimensionTooSmall);
}

TEST_CASE("invariant extraction") {
    auto rep = dt::theorem_a_series(6);
    REQUIRE(dt::dt_invariant(rep, 0) == 2);
    REQUIRE(dt::dt_invariant(rep, 1) == 0);
    REQUIRE(dt::dt_invariant(rep, 2) == dt::Integer(-704));
    REQUIRE_THROWS_AS(dt::dt_invariant(rep, 7), dt::OutOfRange);
    REQUIRE_THROWS_AS(dt::dt_invariant(rep, -1), dt::OutOfRange);

    auto zero = dt::theorem_b_series(0, 0, Rational(1), 6);
    for (int m = 0; m <= 6; ++m) REQUIRE(dt::dt_invariant(zero, m) == 0);
}

TEST_CASE("quot-model crosscheck") {
    for (int m = 0; m <= 3; ++m) {
        auto rep = dt::crosscheck_quot_model(dt::Family::A, m);
        REQUIRE(rep.closed_form == rep.stratified);
        REQUIRE(rep.multiplicity == 2);
    }
    auto rep0 = dt::crosscheck_quot_model(dt::Family::A, 0);
    REQUIRE(rep0.closed_form == 2);

    for (int m = 0; m <= 2; ++m) {
        auto rep = dt::crosscheck_quot_model(dt::Family::B, m, 0, 0);
        REQUIRE(rep.closed_form == rep.stratified);
        REQUIRE(rep.multiplicity == 6);
    }
    auto rep1 = dt::crosscheck_quot_model(dt::Family::B, 1, 0, 0);
    REQUIRE(rep1.closed_form == Rational(6L * 2 * -144));

    REQUIRE_THROWS_AS(dt::crosscheck_quot_model(dt::Family::A, 7), dt::OutOfRange);
}

TEST_CASE("integrality and parity across the assembly surface") {
    std::vector<Series> emitted;
    emitted.push_back(dt::theorem_a_series(12).series);
    emitted.push_back(dt::theorem_b_series(0, 0, Rational(3), 10).series);
    emitted.push_back(dt::theorem_b_series(1, 1, Rational(1), 8).series);
    emitted.push_back(dt::prop_e2_series(2, 1, 0, 8));
    emitted.push_back(dt::prop_e2_series(3, 0, 1, 6));
    for (const Series& s : emitted) {
        for (int m = 0; m <= s.order(); ++m) {
            REQUIRE(dt::is_integer(s.coefficient(m)));
            if (m % 2 != 0) REQUIRE(s.coefficient(m) == 0);
        }
    }
}
