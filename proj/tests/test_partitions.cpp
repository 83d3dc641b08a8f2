#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "dt/partitions.hpp"
#include "oracles.hpp"

using dt::NDPartition;

TEST_CASE("ordinary partitions") {
    REQUIRE(dt::enumerate_ndpartitions(2, 0).size() == 1);
    REQUIRE(dt::enumerate_ndpartitions(2, 0)[0].entries.empty());
    REQUIRE(dt::enumerate_ndpartitions(2, 4).size() == 5);

    const long long expected[] = {1, 1, 2, 3, 5, 7, 11, 15};
    for (int m = 0; m <= 7; ++m) REQUIRE(dt::count_partitions(2, m) == expected[m]);

    SECTION("matches the DP counter up to weight 14") {
        for (int m = 0; m <= 14; ++m) REQUIRE(dt::count_partitions(2, m) == oracles::dp_partition_count(m));
    }
}

TEST_CASE("plane partitions") {
    REQUIRE(dt::enumerate_ndpartitions(3, 2).size() == 3);
    const long long expected[] = {1, 1, 3, 6, 13, 24, 48};
    for (int m = 0; m <= 6; ++m) REQUIRE(dt::count_partitions(3, m) == expected[m]);
}

TEST_CASE("dimension below 2 is rejected") {
    REQUIRE_THROWS_AS(dt::enumerate_ndpartitions(1, 3), dt::DimensionTooSmall);
    REQUIRE_THROWS_AS(dt::count_partitions(1, 3), dt::DimensionTooSmall);
    REQUIRE_THROWS_AS(dt::partition_series(1, 3), dt::DimensionTooSmall);
}

TEST_CASE("partition series") {
    dt::Series p2 = dt::partition_series(2, 4);
    REQUIRE(p2 == dt::Series(4, {1, 1, 2, 3, 5}));
    dt::Series p3 = dt::partition_series(3, 4);
    REQUIRE(p3 == dt::Series(4, {1, 1, 3, 6, 13}));
    for (int n = 2; n <= 5; ++n) REQUIRE(dt::partition_series(n, 3).coefficient(0) == 1);
}

TEST_CASE("macmahon equals plane-partition enumeration") {
    REQUIRE(dt::macmahon(12) == dt::partition_series(3, 12));
    REQUIRE(dt::macmahon(0).coefficient(0) == 1);
}

TEST_CASE("enumerated partitions are valid, distinct and canonically ordered") {
    for (int n : {2, 3, 4}) {
        for (int m = 0; m <= (n == 4 ? 5 : 7); ++m) {
            auto all = dt::enumerate_ndpartitions(n, m);
            std::set<dt::Staircase> seen;
            dt::Staircase prev;
            for (std::size_t i = 0; i < all.size(); ++i) {
                const NDPartition& p = all[i];
                REQUIRE(p.dim == n);
                REQUIRE(p.weight == m);
                REQUIRE(p.is_valid());
                dt::Staircase s = p.staircase();
                REQUIRE(dt::is_order_ideal(s));
                REQUIRE(seen.insert(s).second); // no duplicates
                if (i > 0) REQUIRE(prev < s);   // canonical order is stable
                prev = s;
            }
        }
    }
}

TEST_CASE("solid partitions, small weights") {
    // 4-dimensional partitions: 1, 1, 4, 10, 26, 59
    const long long expected[] = {1, 1, 4, 10, 26, 59};
    for (int m = 0; m <= 5; ++m) REQUIRE(dt::count_partitions(4, m) == expected[m]);
}

namespace {

// Independent route: grow ideals one addable box at a time, deduplicating.
std::set<dt::Staircase> grown_order_ideals(int d, int size) {
    std::set<dt::Staircase> current = {dt::Staircase{}};
    for (int step = 0; step < size; ++step) {
        std::set<dt::Staircase> next;
        for (const dt::Staircase& s : current) {
            // candidate boxes: origin, or any present box pushed one step
            std::set<dt::Exponent> candidates = {dt::Exponent(static_cast<std::size_t>(d), 0)};
            for (const dt::Exponent& e : s) {
                for (int i = 0; i < d; ++i) {
                    dt::Exponent c = e;
                    ++c[static_cast<std::size_t>(i)];
                    candidates.insert(std::move(c));
                }
            }
            for (const dt::Exponent& c : candidates) {
                if (dt::staircase_contains(s, c)) continue;
                bool addable = true;
                for (int i = 0; i < d && addable; ++i) {
                    if (c[static_cast<std::size_t>(i)] == 0) continue;
                    dt::Exponent pred = c;
                    --pred[static_cast<std::size_t>(i)];
                    addable = dt::staircase_contains(s, pred);
                }
                if (!addable) continue;
                dt::Staircase bigger = s;
                bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), c), c);
                next.insert(std::move(bigger));
            }
        }
        current = std::move(next);
    }
    return current;
}

} // namespace

TEST_CASE("layered enumeration agrees with box-growing enumeration") {
    for (int d : {1, 2, 3, 4}) {
        const int max_m = (d == 4) ? 5 : 6;
        for (int m = 0; m <= max_m; ++m) {
            auto layered = dt::enumerate_order_ideals(d, m);
            std::set<dt::Staircase> grown = grown_order_ideals(d, m);
            REQUIRE(layered.size() == grown.size());
            for (const auto& s : layered) REQUIRE(grown.count(s) == 1);
        }
    }
}

TEST_CASE("enumeration is deterministic across calls") {
    REQUIRE(dt::enumerate_order_ideals(3, 5) == dt::enumerate_order_ideals(3, 5));
    auto a = dt::enumerate_quot_fixed_points(3, 2, 3);
    auto b = dt::enumerate_quot_fixed_points(3, 2, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(a[i] == b[i]);
}

TEST_CASE("integer partition helper") {
    auto parts = dt::enumerate_integer_partitions(4);
    REQUIRE(parts.size() == 5);
    for (const auto& alpha : parts) {
        int total = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            total += alpha[i];
            if (i > 0) REQUIRE(alpha[i] <= alpha[i - 1]);
        }
        REQUIRE(total == 4);
    }
    REQUIRE(dt::enumerate_integer_partitions(0).size() == 1);
}
