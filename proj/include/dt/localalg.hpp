#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "dt/errors.hpp"
#include "dt/linalg.hpp"
#include "dt/torus.hpp"

namespace dt {

/// One Taylor relation between a pair of minimal generators:
/// (lcm/m_i) e_i - (lcm/m_j) e_j, encoded by the two monomial multipliers.
struct TaylorSyzygy {
    std::size_t gi = 0;
    std::size_t gj = 0;
    Exponent multiplier_i; // lcm - deg(m_i)
    Exponent multiplier_j; // lcm - deg(m_j)
};

/// Presentation F1 -> F0 -> I -> 0 of a monomial ideal by its minimal
/// generators and the lcm-based pairwise relations. The Taylor relations
/// span the full syzygy module, so Hom(I, -) is the kernel of the induced
/// map Hom(F0, -) -> Hom(F1, -).
struct IdealPresentation {
    std::vector<Exponent> generators;
    std::vector<TaylorSyzygy> syzygies;
};

inline IdealPresentation taylor_presentation(const MonomialIdeal& I) {
    IdealPresentation p;
    p.generators = I.minimal_generators();
    const std::size_t g = p.generators.size();
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = i + 1; j < g; ++j) {
            TaylorSyzygy s;
            s.gi = i;
            s.gj = j;
            s.multiplier_i.resize(p.generators[i].size());
            s.multiplier_j.resize(p.generators[j].size());
            for (std::size_t v = 0; v < p.generators[i].size(); ++v) {
                const int l = std::max(p.generators[i][v], p.generators[j][v]);
                s.multiplier_i[v] = l - p.generators[i][v];
                s.multiplier_j[v] = l - p.generators[j][v];
            }
            p.syzygies.push_back(std::move(s));
        }
    }
    return p;
}

/// Vector-space basis of R/I: the staircase itself.
inline std::vector<Exponent> standard_basis(const MonomialIdeal& I) { return I.staircase; }

/// dim Hom_R(I, R/J) for monomial ideals in the same variables, computed
/// degreewise in the Z^n grading. In multidegree d a homomorphism assigns
/// to generator m_i a multiple of the standard monomial at deg(m_i)+d (zero
/// when that spot lies outside the staircase of J), subject to one linear
/// equation per Taylor pair whose lcm lands inside the staircase. Each
/// graded piece is an exact rational kernel computation; the dimensions add
/// up over the finitely many degrees that can support a nonzero piece.
inline int hom_dim(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars != J.nvars) throw DimensionMismatch("hom_dim needs matching variable counts");
    const int n = I.nvars;
    if (J.colength() == 0) return 0; // R/J = 0
    const IdealPresentation pres = taylor_presentation(I);
    const std::size_t g = pres.generators.size();

    std::vector<Exponent> lcms(pres.syzygies.size(), Exponent(static_cast<std::size_t>(n)));
    for (std::size_t s = 0; s < pres.syzygies.size(); ++s) {
        const TaylorSyzygy& syz = pres.syzygies[s];
        for (int v = 0; v < n; ++v)
            lcms[s][static_cast<std::size_t>(v)] =
                std::max(pres.generators[syz.gi][static_cast<std::size_t>(v)], pres.generators[syz.gj][static_cast<std::size_t>(v)]);
    }

    // Degrees that can carry a nonzero piece: d = s - deg(m_i) for a
    // standard monomial s of J and a generator m_i.
    std::set<Exponent> degrees;
    for (const Exponent& s : J.staircase) {
        for (const Exponent& a : pres.generators) {
            Exponent d(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)] = s[static_cast<std::size_t>(v)] - a[static_cast<std::size_t>(v)];
            degrees.insert(std::move(d));
        }
    }

    auto shifted_in_staircase = [&](const Exponent& base, const Exponent& d) {
        Exponent e(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            e[static_cast<std::size_t>(v)] = base[static_cast<std::size_t>(v)] + d[static_cast<std::size_t>(v)];
            if (e[static_cast<std::size_t>(v)] < 0) return false;
        }
        return staircase_contains(J.staircase, e);
    };

    int total = 0;
    for (const Exponent& d : degrees) {
        std::vector<int> column(g, -1);
        int ncols = 0;
        for (std::size_t i = 0; i < g; ++i)
            if (shifted_in_staircase(pres.generators[i], d)) column[i] = ncols++;
        if (ncols == 0) continue;

        RationalMatrix rows;
        for (std::size_t s = 0; s < pres.syzygies.size(); ++s) {
            if (!shifted_in_staircase(lcms[s], d)) continue; // relation lands in 0
            const TaylorSyzygy& syz = pres.syzygies[s];
            std::vector<Rational> row(static_cast<std::size_t>(ncols), Rational(0));
            bool nonzero = false;
            if (column[syz.gi] >= 0) {
                row[static_cast<std::size_t>(column[syz.gi])] += 1;
                nonzero = true;
            }
            if (column[syz.gj] >= 0) {
                row[static_cast<std::size_t>(column[syz.gj])] -= 1;
                nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
        total += kernel_dimension(rows, ncols);
    }
    return total;
}

/// Zariski tangent dimension of the Hilbert scheme at a monomial ideal:
/// dim Hom(I_Z, R/I_Z). Requires colength >= 1.
inline int hilb_tangent_dim(const MonomialIdeal& Z) {
    if (Z.colength() < 1) throw OutOfRange("tangent space needs colength >= 1");
    return hom_dim(Z, Z);
}

/// Zariski tangent dimension of the Quot scheme at a fixed point
/// I_1 + ... + I_r: the full double sum of Hom(I_i, R/I_j).
inline int quot_tangent_dim(const QuotFixedPoint& E) {
    int total = 0;
    for (const MonomialIdeal& a : E.ideals)
        for (const MonomialIdeal& b : E.ideals) total += hom_dim(a, b);
    return total;
}

/// (-1)^(dim T_P X - dim T_P X^T): the sign relating the Behrend function of
/// a scheme with torus action to that of the fixed locus.
inline int behrend_sign(int dim_tx, int dim_txt) {
    if (dim_txt < 0 || dim_tx < dim_txt) throw NegativeDimension();
    return ((dim_tx - dim_txt) % 2 == 0) ? 1 : -1;
}

/// Behrend-weighted Euler characteristic of the punctual rank-2 Quot scheme
/// in 3 variables at length m, computed two independent ways:
///   (a) over each torus-fixed point, the sign from behrend_sign applied to
///       the computed tangent dimensions (Quot vs product of Hilberts),
///       times (-1)^{l(Z_1)} (-1)^{l(Z_2)} for the Hilbert-scheme inputs;
///   (b) the unsigned fixed-point count.
/// The two must agree (the parity law makes every sign +1); a disagreement
/// throws RouteMismatch.
inline long long weighted_chi_punctual_quot(int m) {
    long long signed_sum = 0;
    long long count = 0;
    for (const QuotFixedPoint& E : enumerate_quot_fixed_points(3, 2, m)) {
        int hilb_sum = 0;
        int hilb_signs = 1;
        for (const MonomialIdeal& Z : E.ideals) {
            hilb_sum += hom_dim(Z, Z); // 0 for the empty subscheme
            if (Z.colength() % 2 != 0) hilb_signs = -hilb_signs;
        }
        const int sign = behrend_sign(quot_tangent_dim(E), hilb_sum);
        signed_sum += static_cast<long long>(sign) * hilb_signs;
        ++count;
    }
    if (signed_sum != count)
        throw RouteMismatch("signed and unsigned punctual Quot counts disagree at m=" + std::to_string(m));
    return signed_sum;
}

} // namespace dt
