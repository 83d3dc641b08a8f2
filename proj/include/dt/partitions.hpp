#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "dt/errors.hpp"
#include "dt/series.hpp"

namespace dt {

/// Exponent tuple in N^d.
using Exponent = std::vector<int>;

/// A finite downward-closed subset of N^d, kept sorted lexicographically.
/// This is the canonical form used for comparisons, map keys and output.
using Staircase = std::vector<Exponent>;

inline bool staircase_contains(const Staircase& s, const Exponent& e) {
    return std::binary_search(s.begin(), s.end(), e);
}

/// Checks downward closure: every componentwise predecessor is present.
inline bool is_order_ideal(const Staircase& s) {
    for (const Exponent& e : s) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0) return false;
            if (e[i] == 0) continue;
            Exponent pred = e;
            --pred[i];
            if (!staircase_contains(s, pred)) return false;
        }
    }
    return true;
}

namespace detail {

/// Enumerates order ideals of N^d of a prescribed size, optionally inside a
/// bounding ideal. An ideal in N^d is peeled into levels along the last
/// coordinate: a weakly decreasing chain of ideals in N^{d-1}. Results are
/// memoized on (d, size, bound) so one enumerator instance can serve many
/// related queries.
class OrderIdealEnumerator {
public:
    const std::vector<Staircase>& run(int d, int size, const std::optional<Staircase>& bound = std::nullopt) {
        if (d < 1) throw OutOfRange("order ideals need dimension >= 1");
        if (size < 0) throw OutOfRange("order ideal size must be nonnegative");
        Key key{d, size, bound.has_value(), bound.value_or(Staircase{})};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::vector<Staircase> out = compute(d, size, bound);
        std::sort(out.begin(), out.end());
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

private:
    using Key = std::tuple<int, int, bool, Staircase>;

    std::vector<Staircase> compute(int d, int size, const std::optional<Staircase>& bound) {
        std::vector<Staircase> out;
        if (size == 0) {
            out.push_back({});
            return out;
        }
        if (d == 1) {
            if (bound && static_cast<int>(bound->size()) < size) return out;
            Staircase s;
            for (int i = 0; i < size; ++i) s.push_back({i});
            out.push_back(std::move(s));
            return out;
        }
        // Split off level 0 (an ideal in N^{d-1}), then recurse on the rest
        // shifted down by one in the last coordinate. The rest is bounded by
        // level 0 (levels decrease) and by the shifted bound.
        std::optional<Staircase> level0_bound;
        if (bound) level0_bound = level_of(*bound, 0);
        for (int s0 = 1; s0 <= size; ++s0) {
            for (const Staircase& level0 : run(d - 1, s0, level0_bound)) {
                Staircase rest_bound = make_rest_bound(level0, size - s0, bound);
                for (const Staircase& rest : run(d, size - s0, rest_bound)) {
                    Staircase s;
                    s.reserve(static_cast<std::size_t>(size));
                    for (const Exponent& t : level0) {
                        Exponent e = t;
                        e.push_back(0);
                        s.push_back(std::move(e));
                    }
                    for (const Exponent& e : rest) {
                        Exponent lifted = e;
                        ++lifted.back();
                        s.push_back(std::move(lifted));
                    }
                    std::sort(s.begin(), s.end());
                    out.push_back(std::move(s));
                }
            }
        }
        return out;
    }

    static Staircase level_of(const Staircase& s, int k) {
        Staircase out;
        for (const Exponent& e : s) {
            if (e.back() == k) out.emplace_back(e.begin(), e.end() - 1);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    static Staircase make_rest_bound(const Staircase& level0, int rest_size, const std::optional<Staircase>& bound) {
        Staircase out;
        for (const Exponent& t : level0) {
            for (int k = 0; k < rest_size; ++k) {
                Exponent e = t;
                e.push_back(k);
                if (bound) {
                    Exponent in_bound = t;
                    in_bound.push_back(k + 1);
                    if (!staircase_contains(*bound, in_bound)) break;
                }
                out.push_back(std::move(e));
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::map<Key, std::vector<Staircase>> memo_;
};

} // namespace detail

/// All order ideals of N^d with exactly `size` elements, sorted
/// lexicographically on the (sorted) exponent list. Deterministic.
inline std::vector<Staircase> enumerate_order_ideals(int d, int size) {
    detail::OrderIdealEnumerator e;
    return e.run(d, size);
}

/// An n-dimensional partition of m: a finite array of positive integers
/// indexed by (n-1)-tuples, weakly decreasing in every direction, with
/// entries summing to m. n = 2 gives ordinary partitions, n = 3 plane
/// partitions. Stored alongside its weight; dimension is at least 2.
struct NDPartition {
    int dim = 2;
    std::map<Exponent, int> entries; // index tuple -> positive entry
    long long weight = 0;

    /// Staircase of the stacking bijection: (t, k) for 0 <= k < entry(t).
    Staircase staircase() const {
        Staircase s;
        for (const auto& [idx, height] : entries) {
            for (int k = 0; k < height; ++k) {
                Exponent e = idx;
                e.push_back(k);
                s.push_back(std::move(e));
            }
        }
        std::sort(s.begin(), s.end());
        return s;
    }

    static NDPartition from_staircase(int dim, const Staircase& s) {
        if (dim < 2) throw DimensionTooSmall();
        NDPartition p;
        p.dim = dim;
        for (const Exponent& e : s) {
            Exponent idx(e.begin(), e.end() - 1);
            ++p.entries[idx];
            ++p.weight;
        }
        return p;
    }

    int entry(const Exponent& idx) const {
        auto it = entries.find(idx);
        return it == entries.end() ? 0 : it->second;
    }

    /// Monotonicity, positivity, weight and downward-closed support.
    bool is_valid() const {
        long long total = 0;
        for (const auto& [idx, height] : entries) {
            if (static_cast<int>(idx.size()) != dim - 1) return false;
            if (height <= 0) return false;
            total += height;
            for (std::size_t i = 0; i < idx.size(); ++i) {
                if (idx[i] < 0) return false;
                if (idx[i] == 0) continue;
                Exponent pred = idx;
                --pred[i];
                if (entry(pred) < height) return false;
            }
        }
        return total == weight;
    }

    bool operator==(const NDPartition& rhs) const = default;
    bool operator<(const NDPartition& rhs) const { return staircase() < rhs.staircase(); }
};

/// All n-dimensional partitions of m, each exactly once, ordered
/// lexicographically by their staircases. Throws DimensionTooSmall for n < 2.
inline std::vector<NDPartition> enumerate_ndpartitions(int n, int m) {
    if (n < 2) throw DimensionTooSmall("partitions are defined for dimension >= 2");
    if (m < 0) throw OutOfRange("partition weight must be nonnegative");
    std::vector<NDPartition> out;
    for (const Staircase& s : enumerate_order_ideals(n, m)) out.push_back(NDPartition::from_staircase(n, s));
    return out;
}

/// P_n(m), the number of n-dimensional partitions of m, by enumeration.
inline long long count_partitions(int n, int m) {
    if (n < 2) throw DimensionTooSmall("partitions are defined for dimension >= 2");
    if (m < 0) throw OutOfRange("partition weight must be nonnegative");
    detail::OrderIdealEnumerator e;
    return static_cast<long long>(e.run(n, m).size());
}

/// sum_{m=0..N} P_n(m) q^m.
inline Series partition_series(int n, int order) {
    if (n < 2) throw DimensionTooSmall("partitions are defined for dimension >= 2");
    Series out(order);
    detail::OrderIdealEnumerator e; // shared memo across all weights
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) coeffs.emplace_back(static_cast<long>(e.run(n, m).size()));
    return Series(order, std::move(coeffs));
}

/// MacMahon function M(q) = prod_{k>=1} (1-q^k)^{-k}, the generating
/// series of plane partitions, truncated at the given order.
inline Series macmahon(int order) {
    std::vector<long> c;
    for (int k = 1; k <= order; ++k) c.push_back(k);
    return euler_product(c, order);
}

/// Ordinary integer partitions of m as weakly decreasing part lists, in
/// reverse lexicographic order starting from (m).
inline std::vector<std::vector<int>> enumerate_integer_partitions(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(parts);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, m, m == 0 ? 1 : m);
    return out;
}

} // namespace dt
