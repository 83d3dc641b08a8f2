#pragma once

#include <optional>
#include <vector>

#include "dt/errors.hpp"
#include "dt/rational.hpp"

namespace dt {

/// Which of the two sheaf families a computation refers to: the two-point
/// moduli family on the quartic-in-quadric 3-fold (A) or the projective-
/// space family on the P^1 x P^1 x P^n hypersurface (B).
enum class Family { A, B };

/// Stability data for family B: the hypersurface parameter n, the epsilons
/// entering the total Chern class, and the polarization parameter r > 0 of
/// the Q-line bundle L_r^Y.
struct ChamberSpec {
    int n = 2;
    int eps1 = 0;
    int eps2 = 0;
    Rational r = 1;

    ChamberSpec(int n_, int eps1_, int eps2_, Rational r_) : n(n_), eps1(eps1_), eps2(eps2_), r(std::move(r_)) {
        if (n < 2) throw OutOfRange("n must be >= 2");
        if ((eps1 != 0 && eps1 != 1) || (eps2 != 0 && eps2 != 1)) throw BadEpsilon();
        if (r <= 0) throw OutOfRange("polarization parameter must be positive");
    }
};

/// Candidate destabilizing twist O_Y(a, b, c) (x) I_{Z_1}.
struct DestabilizerTriple {
    int a = 0;
    int b = 0;
    int c = 0;
    bool operator==(const DestabilizerTriple&) const = default;
    auto operator<=>(const DestabilizerTriple&) const = default;
};

struct WallBounds {
    Rational lower;
    std::optional<Rational> upper; // nullopt = +infinity (e/0 with e > 0)
};

/// The chamber interval (n(2-e2)/(2+e1), n(2-e2)/e1); the upper endpoint is
/// +infinity when e1 = 0.
inline WallBounds wall_bounds(int n, int eps1, int eps2) {
    if ((eps1 != 0 && eps1 != 1) || (eps2 != 0 && eps2 != 1)) throw BadEpsilon();
    if (n < 2) throw OutOfRange("n must be >= 2");
    WallBounds out;
    out.lower = Rational(n * (2 - eps2), 2 + eps1);
    out.lower.canonicalize();
    if (eps1 == 0) {
        out.upper = std::nullopt;
    } else {
        Rational up(n * (2 - eps2), eps1);
        up.canonicalize();
        out.upper = up;
    }
    return out;
}

enum class Chamber { BelowWall, OnWall, InChamber, AtOrAboveUpper };

/// Strict exact-rational comparison of r against the wall bounds.
inline Chamber classify(const ChamberSpec& spec) {
    WallBounds b = wall_bounds(spec.n, spec.eps1, spec.eps2);
    if (spec.r < b.lower) return Chamber::BelowWall;
    if (spec.r == b.lower) return Chamber::OnWall;
    if (b.upper && spec.r >= *b.upper) return Chamber::AtOrAboveUpper;
    return Chamber::InChamber;
}

inline const char* chamber_name(Chamber c) {
    switch (c) {
        case Chamber::BelowWall: return "BelowWall";
        case Chamber::OnWall: return "OnWall";
        case Chamber::InChamber: return "InChamber";
        case Chamber::AtOrAboveUpper: return "AtOrAboveUpper";
    }
    return "?";
}

/// k = (1+e1) C(n+2-e2, n) - 1, the projective dimension of the moduli
/// space of the rank-2 bundles in the chamber.
inline long long k_value(int n, int eps1, int eps2) {
    if ((eps1 != 0 && eps1 != 1) || (eps2 != 0 && eps2 != 1)) throw BadEpsilon();
    if (n < 2) throw OutOfRange("n must be >= 2");
    // C(n+2-e2, n) = C(n+2-e2, 2-e2) with 2-e2 in {1, 2}.
    long long top = n + 2 - eps2;
    long long binom = (eps2 == 1) ? top : top * (top - 1) / 2;
    return (1 + eps1) * binom - 1;
}

/// The 3-fold (n = 2) specialization (1+e1)(4-e2)(3-e2)/2 - 1.
inline long long k_value_3fold(int eps1, int eps2) {
    if ((eps1 != 0 && eps1 != 1) || (eps2 != 0 && eps2 != 1)) throw BadEpsilon();
    return static_cast<long long>(1 + eps1) * (4 - eps2) * (3 - eps2) / 2 - 1;
}

/// Emptiness of the moduli space with total Chern class c_m: always for
/// negative or odd m, and everywhere below the wall for family B.
inline bool moduli_is_empty(long long m, Family family, const std::optional<ChamberSpec>& spec = std::nullopt) {
    if (m < 0 || m % 2 != 0) return true;
    if (family == Family::B) {
        if (!spec) throw Error("family B needs a chamber specification");
        if (classify(*spec) == Chamber::BelowWall) return true;
    }
    return false;
}

/// Upper endpoint of the admissible r0 window for the destabilizer search:
/// (2-e2)(n-1) / (2(2+e1)), the root of the Bogomolov bracket.
inline Rational bogomolov_window_upper(int n, int eps1, int eps2) {
    if ((eps1 != 0 && eps1 != 1) || (eps2 != 0 && eps2 != 1)) throw BadEpsilon();
    Rational w(static_cast<long>(2 - eps2) * (n - 1), 2L * (2 + eps1));
    w.canonicalize();
    return w;
}

/// Exhaustive search for destabilizing twists (a, b, c) in [-B, B]^3
/// satisfying, simultaneously and in exact arithmetic,
///   n[(2c-e2) + (n+1)a] + (2a+2b-e1) r0  > 0        (slope gain at r0)
///   n[(2c-e2) + (n+1)a] + (2a+2b-e1) r  <= 0        (semistability at r)
///   [2a+(2b-e1)](2c-e2) + (n+1)a(2b-e1) >= -(e1+2)(2-e2)
///   [(2c-e2)+2(n+1)a](2c-e2)            >= (2-e2)^2
///   (2c-e2)+(n+1)a > 0   and   2a+2b-e1 < 0.
/// For r inside the open chamber the result is exactly {(0,-1,1)}.
inline std::vector<DestabilizerTriple> destabilizer_search(int n, int eps1, int eps2, const Rational& r,
                                                           const Rational& r0, int bound) {
    if ((eps1 != 0 && eps1 != 1) || (eps2 != 0 && eps2 != 1)) throw BadEpsilon();
    if (n < 2) throw OutOfRange("n must be >= 2");
    if (bound < 3) throw OutOfRange("search bound must be >= 3");
    if (r0 <= 0 || r0 >= bogomolov_window_upper(n, eps1, eps2) || !(r0 < r))
        throw BadWindow("need 0 < r0 < (2-e2)(n-1)/(2(2+e1)) and r0 < r");

    std::vector<DestabilizerTriple> out;
    for (int a = -bound; a <= bound; ++a) {
        for (int b = -bound; b <= bound; ++b) {
            const long slope_coeff = 2L * a + 2 * b - eps1;
            if (slope_coeff >= 0) continue;
            for (int c = -bound; c <= bound; ++c) {
                const long axis = (2L * c - eps2) + (n + 1) * a;
                if (axis <= 0) continue;
                const Rational lead(static_cast<long>(n) * axis);
                if (!(lead + Rational(slope_coeff) * r0 > 0)) continue;
                if (!(lead + Rational(slope_coeff) * r <= 0)) continue;
                const long c2 = 2L * c - eps2;
                const long b1 = 2L * b - eps1;
                if (!((2L * a + b1) * c2 + static_cast<long>(n + 1) * a * b1 >= -static_cast<long>(eps1 + 2) * (2 - eps2)))
                    continue;
                if (!((c2 + 2L * (n + 1) * a) * c2 >= static_cast<long>(2 - eps2) * (2 - eps2))) continue;
                out.push_back({a, b, c});
            }
        }
    }
    return out;
}

} // namespace dt
