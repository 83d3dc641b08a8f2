// Acceptance suite: every criterion is exercised at zero tolerance (all
// arithmetic exact) and reported as a single PASS/FAIL line. Exit code 0
// only if every criterion passes.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "dt/dtseries.hpp"
#include "dt/localalg.hpp"

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        ok = false;
        note = std::string(" (exception: ") + e.what() + ")";
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label << " [" << ms << " ms]" << note
              << "\n";
}

std::string run_cli(const std::string& args, int& exit_code) {
    const std::string cmd = std::string(DT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

bool series_integral_even(const nlohmann::json& j) {
    const auto coeffs = j.at("coeffs").get<std::vector<std::string>>();
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (coeffs[m].find('/') != std::string::npos) return false;
        if (m % 2 != 0 && coeffs[m] != "0") return false;
    }
    return true;
}

} // namespace

int main() {
    using dt::Rational;
    using dt::Series;

    criterion(1, "MacMahon product equals plane-partition enumeration to weight 10", [] {
        const long long frozen[] = {1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500};
        Series m = dt::macmahon(10);
        for (int w = 0; w <= 10; ++w) {
            const long long counted = dt::count_partitions(3, w);
            if (counted != frozen[w]) return false;
            if (m.coefficient(w) != Rational(static_cast<long>(counted))) return false;
        }
        return true;
    });

    criterion(2, "rank-2 punctual Quot fixed points factor as the partition-series square (m <= 5)", [] {
        Series square = dt::int_pow(dt::partition_series(3, 5), 2);
        for (int m = 0; m <= 5; ++m)
            if (Rational(static_cast<long>(dt::chi_punctual_quot(3, 2, m))) != square.coefficient(m)) return false;
        return true;
    });

    criterion(3, "plethystic exponential equals the euler product on 50 random sequences (order 10)", [] {
        std::mt19937 rng(1234);
        std::uniform_int_distribution<long> d(-5, 5);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<long> c;
            Series arg(10);
            for (int k = 1; k <= 10; ++k) {
                c.push_back(d(rng));
                arg = arg + Series::monomial(c.back(), k, 10);
            }
            if (!(dt::plethystic_exp(arg) == dt::euler_product(c, 10))) return false;
        }
        return true;
    });

    criterion(4, "Hom parity law, exhaustive over ideal pairs with colengths <= 3", [] {
        std::vector<dt::MonomialIdeal> all;
        for (int l = 0; l <= 3; ++l)
            for (auto& I : dt::enumerate_monomial_ideals(3, l)) all.push_back(std::move(I));
        for (const auto& a : all)
            for (const auto& b : all) {
                const int s = dt::hom_dim(a, b) + dt::hom_dim(b, a);
                if ((s - a.colength() - b.colength()) % 2 != 0) return false;
            }
        return true;
    });

    criterion(5, "weighted punctual Quot count equals the unsigned count (m <= 5)", [] {
        for (int m = 0; m <= 5; ++m) {
            long long unsigned_count = 0;
            for (int i = 0; i <= m; ++i) unsigned_count += dt::count_partitions(3, i) * dt::count_partitions(3, m - i);
            if (dt::weighted_chi_punctual_quot(m) != unsigned_count) return false; // throws RouteMismatch on sign failure
        }
        return true;
    });

    criterion(6, "Euler characteristics chi = -176 and chi = -144 match their oracles", [] {
        // Hodge-number oracle for the (2,4) intersection: 2 (h^{11} - h^{21})
        const long long hodge = 2 * (1 - 89);
        if (dt::ci_euler(dt::Ambient({5}), {{2}, {4}}) != hodge) return false;
        // hand expansion: degree-3 part -24abc - 18ac^2 - 18bc^2 paired with 2a+2b+3c
        const long long hand = (-24 * 3) + (-18 * 2) + (-18 * 2);
        if (hand != -144) return false;
        if (dt::ci_euler(dt::Ambient({1, 1, 2}), {{2, 2, 3}}) != hand) return false;
        return true;
    });

    criterion(7, "Bogomolov discriminant: closed form equals Chow arithmetic (n in {2,3}, all eps)", [] {
        for (int n : {2, 3}) {
            for (int e1 : {0, 1}) {
                for (int e2 : {0, 1}) {
                    dt::Poly got = dt::bogomolov_discriminant(n, e1, e2); // internal two-route compare
                    dt::Poly bracket =
                        dt::Poly::variable() * Rational(2 * (2 + e1)) - dt::Poly(Rational((2 - e2) * (n - 1)));
                    if (!(got == dt::Poly::monomial(Rational(2 * (2 - e2)), n - 2) * bracket)) return false;
                }
            }
        }
        return true;
    });

    criterion(8, "destabilizer search returns exactly (0,-1,1), stable from B=4 to B=6", [] {
        const std::vector<dt::DestabilizerTriple> expected = {{0, -1, 1}};
        for (int e1 : {0, 1}) {
            const Rational r = (e1 == 0) ? Rational(3) : Rational(2);
            const Rational r0 = (e1 == 0) ? Rational(1, 4) : Rational(1, 8);
            if (dt::destabilizer_search(2, e1, 0, r, r0, 4) != expected) return false;
            if (dt::destabilizer_search(2, e1, 0, r, r0, 6) != expected) return false;
        }
        return true;
    });

    criterion(9, "family A series: q^0 = 2, odd terms vanish, equals the stratified punctual route to order 8", [] {
        auto rep = dt::theorem_a_series(8);
        if (rep.series.coefficient(0) != 2) return false;
        for (int m = 1; m <= 8; m += 2)
            if (rep.series.coefficient(m) != 0) return false;
        if (rep.chiY != -176) return false;
        std::vector<Rational> w;
        for (int j = 0; j <= 4; ++j) w.emplace_back(static_cast<long>(dt::weighted_chi_punctual_quot(j)));
        Series punctual(4, std::move(w));
        for (int m = 0; m <= 4; ++m) {
            Rational via_strat = Rational(2) * dt::stratified_chi_quot(punctual, rep.chiY, m);
            if (rep.series.coefficient(2 * m) != via_strat) return false;
        }
        return true;
    });

    criterion(10, "family B series: zero below the wall, -6 leading in chamber, sign-matched to the unweighted series", [] {
        auto below = dt::theorem_b_series(0, 0, Rational(1), 8);
        if (!below.series.is_zero()) return false;
        auto in = dt::theorem_b_series(0, 0, Rational(3), 8);
        if (in.k != 5 || in.series.coefficient(0) != -6) return false;
        for (int e1 : {0, 1}) {
            for (int e2 : {0, 1}) {
                if (dt::k_value(2, e1, e2) != dt::k_value_3fold(e1, e2)) return false;
                auto bounds = dt::wall_bounds(2, e1, e2);
                Rational r = bounds.upper ? Rational((bounds.lower + *bounds.upper) / 2) : Rational(bounds.lower + 1);
                auto rep = dt::theorem_b_series(e1, e2, r, 8);
                Series unweighted = dt::prop_e2_series(2, e1, e2, 8);
                const Rational sign((rep.k % 2 == 0) ? 1 : -1);
                if (!(rep.series == unweighted * sign)) return false;
            }
        }
        return true;
    });

    criterion(11, "every CLI-emitted coefficient is an integer and every odd coefficient vanishes", [] {
        std::vector<std::string> matrix = {
            "theorem-a --order 4 --json",
            "theorem-a --order 8 --json",
            "theorem-a --order 12 --json",
            "theorem-b --eps1 0 --eps2 0 --r 3 --order 8 --json",
            "theorem-b --eps1 1 --eps2 0 --r 8/3 --order 8 --json",
            "theorem-b --eps1 0 --eps2 1 --r 2 --order 8 --json",
            "theorem-b --eps1 1 --eps2 1 --r 4/3 --order 8 --json",
            "theorem-b --eps1 0 --eps2 0 --r 1/2 --order 8 --json",
            "prop-e2 --n 2 --eps1 0 --eps2 0 --order 8 --json",
            "prop-e2 --n 3 --eps1 1 --eps2 1 --order 6 --json",
        };
        for (const std::string& args : matrix) {
            int code = -1;
            const std::string out = run_cli(args, code);
            if (code != 0) return false;
            if (!series_integral_even(nlohmann::json::parse(out))) return false;
        }
        return true;
    });

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
