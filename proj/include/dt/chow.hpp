#pragma once

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "dt/errors.hpp"
#include "dt/rational.hpp"

namespace dt {

/// Univariate polynomial over the rationals in one formal parameter (the
/// polarization). Coefficient vector is normalized: no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) { // NOLINT(google-explicit-constructor)
        if (c != 0) coeffs_.push_back(c);
    }
    Poly(long c) : Poly(Rational(c)) {} // NOLINT(google-explicit-constructor)

    /// The formal parameter itself.
    static Poly variable() {
        Poly p;
        p.coeffs_ = {Rational(0), Rational(1)};
        return p;
    }

    static Poly monomial(const Rational& c, int k) {
        Poly p;
        if (c == 0) return p;
        p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
        p.coeffs_.back() = c;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    Rational coeff(int k) const {
        if (k < 0 || k > degree()) return Rational(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    Poly operator+(const Poly& rhs) const {
        Poly out;
        out.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += coeffs_[i];
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out.coeffs_[i] += rhs.coeffs_[i];
        out.normalize();
        return out;
    }

    Poly operator-(const Poly& rhs) const { return *this + (rhs * Rational(-1)); }

    Poly operator*(const Poly& rhs) const {
        Poly out;
        if (is_zero() || rhs.is_zero()) return out;
        out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
        out.normalize();
        return out;
    }

    Poly operator*(const Rational& c) const {
        Poly out = *this;
        for (Rational& x : out.coeffs_) x *= c;
        out.normalize();
        return out;
    }

    bool operator==(const Poly& rhs) const = default;

    /// Rendering such as "16*r0 - 8"; the parameter name is caller-chosen.
    std::string str(const std::string& var = "r0") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const Rational& c = coeffs_[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            Rational a = abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            const bool unit = (a == 1) && k > 0;
            if (!unit) os << a.get_str();
            if (k > 0) {
                if (!unit) os << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Product of projective spaces P^{n_1} x ... x P^{n_s}. `cutoff` truncates
/// all classes above that total degree; it defaults to the total dimension
/// and is lowered when classes of a subvariety are carried inside the
/// ambient lattice (the "variety model").
struct Ambient {
    std::vector<int> dims;
    int cutoff;

    explicit Ambient(std::vector<int> dims_, int cutoff_ = -1) : dims(std::move(dims_)), cutoff(cutoff_) {
        for (int n : dims)
            if (n < 1) throw Error("projective factors need positive dimension");
        if (cutoff < 0) cutoff = total_dim();
    }

    int total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }
    int factors() const { return static_cast<int>(dims.size()); }

    bool operator==(const Ambient& rhs) const = default;
};

/// Element of the Chow ring of a product of projective spaces, with
/// coefficients polynomial in one formal parameter. Monomials h_1^{e_1}
/// ... h_s^{e_s} are truncated by h_i^{n_i+1} = 0 and by the ambient cutoff.
class ChowClass {
public:
    explicit ChowClass(Ambient amb) : amb_(std::move(amb)) {}

    static ChowClass constant(const Ambient& amb, const Poly& c) {
        ChowClass out(amb);
        out.add_term(std::vector<int>(static_cast<std::size_t>(amb.factors()), 0), c);
        return out;
    }

    static ChowClass one(const Ambient& amb) { return constant(amb, Poly(1)); }

    /// Hyperplane class h_i of the i-th factor.
    static ChowClass hyperplane(const Ambient& amb, int factor) {
        if (factor < 0 || factor >= amb.factors()) throw OutOfRange("no such factor");
        ChowClass out(amb);
        std::vector<int> e(static_cast<std::size_t>(amb.factors()), 0);
        e[static_cast<std::size_t>(factor)] = 1;
        out.add_term(e, Poly(1));
        return out;
    }

    /// Divisor sum_i d_i h_i.
    static ChowClass divisor(const Ambient& amb, const std::vector<int>& d) {
        if (static_cast<int>(d.size()) != amb.factors()) throw AmbientMismatch("divisor arity != number of factors");
        ChowClass out(amb);
        for (int i = 0; i < amb.factors(); ++i) {
            if (d[static_cast<std::size_t>(i)] == 0) continue;
            std::vector<int> e(static_cast<std::size_t>(amb.factors()), 0);
            e[static_cast<std::size_t>(i)] = 1;
            out.add_term(e, Poly(d[static_cast<std::size_t>(i)]));
        }
        return out;
    }

    const Ambient& ambient() const { return amb_; }
    const std::map<std::vector<int>, Poly>& terms() const { return terms_; }

    ChowClass operator+(const ChowClass& rhs) const {
        check_same(rhs);
        ChowClass out = *this;
        for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
        return out;
    }

    ChowClass operator-(const ChowClass& rhs) const { return *this + rhs * Rational(-1); }

    ChowClass operator*(const ChowClass& rhs) const {
        check_same(rhs);
        ChowClass out(amb_);
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : rhs.terms_) {
                std::vector<int> e(e1.size());
                bool alive = true;
                int deg = 0;
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = e1[i] + e2[i];
                    deg += e[i];
                    if (e[i] > amb_.dims[i]) {
                        alive = false;
                        break;
                    }
                }
                if (alive && deg <= amb_.cutoff) out.add_term(e, c1 * c2);
            }
        }
        return out;
    }

    ChowClass operator*(const Poly& c) const {
        ChowClass out(amb_);
        for (const auto& [e, p] : terms_) out.add_term(e, p * c);
        return out;
    }

    ChowClass operator*(const Rational& c) const { return *this * Poly(c); }

    bool operator==(const ChowClass& rhs) const { return amb_ == rhs.amb_ && terms_ == rhs.terms_; }

    /// Inverse of a class with degree-0 part 1, by the geometric series in
    /// the nilpotent higher-degree part.
    ChowClass inverse_of_unit() const {
        if (degree_part(0) != one(amb_)) throw NonUnit();
        ChowClass nil = *this - one(amb_);
        ChowClass out = one(amb_);
        ChowClass power = one(amb_);
        for (int k = 1; k <= amb_.cutoff; ++k) {
            power = power * nil;
            if (power.terms_.empty()) break;
            out = out + power * Rational((k % 2 == 0) ? 1 : -1);
        }
        return out;
    }

    /// Homogeneous part of total degree k.
    ChowClass degree_part(int k) const {
        ChowClass out(amb_);
        for (const auto& [e, c] : terms_)
            if (std::accumulate(e.begin(), e.end(), 0) == k) out.add_term(e, c);
        return out;
    }

    /// Coefficient of the top monomial h_1^{n_1} ... h_s^{n_s}.
    Poly integrate() const {
        auto it = terms_.find(amb_.dims);
        return it == terms_.end() ? Poly() : it->second;
    }

private:
    void check_same(const ChowClass& rhs) const {
        if (!(amb_ == rhs.amb_)) throw AmbientMismatch();
    }

    void add_term(const std::vector<int>& e, const Poly& c) {
        int deg = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] > amb_.dims[i]) return;
            deg += e[i];
        }
        if (deg > amb_.cutoff) return;
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Ambient amb_;
    std::map<std::vector<int>, Poly> terms_;
};

inline ChowClass chow_add(const ChowClass& a, const ChowClass& b) { return a + b; }
inline ChowClass chow_mul(const ChowClass& a, const ChowClass& b) { return a * b; }
inline ChowClass chow_inv_unit(const ChowClass& c) { return c.inverse_of_unit(); }
inline Poly integrate(const ChowClass& c) { return c.integrate(); }

/// Total Chern class of the tangent bundle: prod_i (1 + h_i)^{n_i + 1}.
inline ChowClass chern_tangent(const Ambient& amb) {
    ChowClass out = ChowClass::one(amb);
    for (int i = 0; i < amb.factors(); ++i) {
        ChowClass factor = ChowClass::one(amb) + ChowClass::hyperplane(amb, i);
        for (int k = 0; k <= amb.dims[static_cast<std::size_t>(i)]; ++k) out = out * factor;
    }
    return out;
}

/// Euler characteristic of the smooth complete intersection cut out by the
/// given divisors: the Gauss-Bonnet integral of c(T_amb)/prod(1+D_i)
/// in degree dim Y, paired with prod D_i. Must come out an integer.
inline long long ci_euler(const Ambient& amb, const std::vector<std::vector<int>>& degrees) {
    const int dim_y = amb.total_dim() - static_cast<int>(degrees.size());
    if (dim_y < 1) throw Error("complete intersection must have positive dimension");
    ChowClass chern = chern_tangent(amb);
    ChowClass volume = ChowClass::one(amb);
    for (const std::vector<int>& d : degrees) {
        ChowClass div = ChowClass::divisor(amb, d);
        chern = chern * (ChowClass::one(amb) + div).inverse_of_unit();
        volume = volume * div;
    }
    Poly val = (chern.degree_part(dim_y) * volume).integrate();
    if (val.degree() > 0) throw NonIntegerResult("Euler characteristic depends on the formal parameter");
    Rational v = val.coeff(0);
    if (!is_integer(v)) throw NonIntegerResult("Euler characteristic is not an integer: " + v.get_str());
    return static_cast<long long>(v.get_num().get_si());
}

/// Chow model for the quartic-in-quadric 3-fold in P^5 ("family A").
/// Classes of the 3-fold are carried in the ambient lattice, truncated at
/// total degree 3, with these normalizations for [Y] = 8 h^2:
///   H|_Y  = h,  P|_Y = h^2 / 2,  [y0] = h^3 / 8.
struct FamilyAModel {
    Ambient amb{std::vector<int>{5}, 3};
    ChowClass H = ChowClass::hyperplane(amb, 0);
    ChowClass P = ChowClass::hyperplane(amb, 0) * ChowClass::hyperplane(amb, 0) * Rational(1, 2);
    ChowClass y0 = ChowClass::hyperplane(amb, 0) * ChowClass::hyperplane(amb, 0) * ChowClass::hyperplane(amb, 0) * Rational(1, 8);
    ChowClass one = ChowClass::one(amb);
};

/// Total Chern class c_m = -m [y0] + (1 + H|_Y + P|_Y) for family A.
inline ChowClass class_cm_family_a(long m) {
    FamilyAModel md;
    return md.one + md.H + md.P - md.y0 * Rational(m);
}

/// Chow model for the Calabi-Yau hypersurface of P^1 x P^1 x P^2
/// ("family B"), truncated at total degree 3, with [Y] = 2u1 + 2u2 + 3v:
///   pullback (a,b) from P^1 x P^2 = a u2 + b v,   [y0] = u1 u2 v / 3.
struct FamilyBModel {
    Ambient amb{std::vector<int>{1, 1, 2}, 3};
    ChowClass one = ChowClass::one(amb);
    ChowClass y0 = ChowClass::hyperplane(amb, 0) * ChowClass::hyperplane(amb, 1) * ChowClass::hyperplane(amb, 2) * Rational(1, 3);

    /// pi^*(a, b) for the projection to the last two factors.
    ChowClass pullback(int a, int b) const {
        return ChowClass::hyperplane(amb, 1) * Rational(a) + ChowClass::hyperplane(amb, 2) * Rational(b);
    }
};

/// Total Chern class c_m = -m [y0] + (1 + pi^*(-1,1))(1 + pi^*(e1+1, e2-1))
/// for family B.
inline ChowClass class_cm_family_b(long m, int eps1, int eps2) {
    if ((eps1 != 0 && eps1 != 1) || (eps2 != 0 && eps2 != 1)) throw BadEpsilon();
    FamilyBModel md;
    ChowClass c0 = (md.one + md.pullback(-1, 1)) * (md.one + md.pullback(eps1 + 1, eps2 - 1));
    return c0 - md.y0 * Rational(m);
}

/// chi(I_{Z_2}, I_{Z_1}) for point-supported Z_i on a Calabi-Yau 3-fold, by
/// Riemann-Roch: l(Z_2) - l(Z_1).
inline long long rr_chi_ideal_pair(long long l1, long long l2) {
    if (l1 < 0 || l2 < 0) throw OutOfRange("lengths must be nonnegative");
    return l2 - l1;
}

/// (4 c_2(E) - c_1(E)^2) . c_1(L_{r0}^Y)^{n-1} on the double cover
/// Y -> P^1 x P^n, as a polynomial in the polarization parameter r0.
/// Computed two independent ways and compared:
///   (a) the closed form 2(2-e2) r0^{n-2} [2(2+e1) r0 - (2-e2)(n-1)];
///   (b) Chow arithmetic on P^1 x P^n with c_1(E) = pi^*(e1, e2),
///       c_2(E) = (2+e1-e2) uv - (1-e2) v^2 and int_Y = 2 int_X.
/// Throws RouteMismatch when the polynomials differ.
inline Poly bogomolov_discriminant(int n, int eps1, int eps2) {
    if ((eps1 != 0 && eps1 != 1) || (eps2 != 0 && eps2 != 1)) throw BadEpsilon();
    if (n < 2) throw OutOfRange("n must be >= 2");

    const Poly r0 = Poly::variable();

    // Route (a): closed form.
    Poly bracket = r0 * Rational(2 * (2 + eps1)) - Poly(Rational((2 - eps2) * (n - 1)));
    Poly closed = Poly::monomial(Rational(2 * (2 - eps2)), n - 2) * bracket;

    // Route (b): intersection numbers on X = P^1 x P^n.
    Ambient X(std::vector<int>{1, n});
    ChowClass u = ChowClass::hyperplane(X, 0);
    ChowClass v = ChowClass::hyperplane(X, 1);
    ChowClass c1 = u * Rational(eps1) + v * Rational(eps2);
    ChowClass c2 = u * v * Rational(2 + eps1 - eps2) - v * v * Rational(1 - eps2);
    ChowClass disc = c2 * Rational(4) - c1 * c1;
    ChowClass polar = u + v * r0;
    ChowClass power = ChowClass::one(X);
    for (int k = 0; k < n - 1; ++k) power = power * polar;
    Poly chow = (disc * power).integrate() * Rational(2); // double cover

    if (!(closed == chow))
        throw RouteMismatch("closed-form and Chow-arithmetic discriminants differ: " + closed.str() + " vs " + chow.str());
    return closed;
}

} // namespace dt
