// Command-line front end: one binary, one subcommand per module surface.
// Exit codes: 0 success, 2 refused parameter regions (on-wall / at-or-above
// the upper bound), 1 internal cross-check failure or other library error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dt/dtseries.hpp"
#include "dt/json_io.hpp"
#include "dt/localalg.hpp"

namespace {

using nlohmann::json;

int max_order_cap() {
    if (const char* env = std::getenv("DT_MAX_ORDER")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (...) {
            std::cerr << "ignoring unparsable DT_MAX_ORDER\n";
        }
    }
    return 16;
}

int clamp_order(int requested) {
    const int cap = max_order_cap();
    if (requested > cap) {
        std::cerr << "order " << requested << " capped at " << cap << " (set DT_MAX_ORDER to raise)\n";
        return cap;
    }
    return requested;
}

void print_series_table(const dt::Series& s) {
    std::cout << "  m   lambda\n";
    for (int m = 0; m <= s.order(); ++m) std::cout << "  " << m << "   " << s.coefficient(m).get_str() << "\n";
}

void emit_series(const dt::Series& s, bool as_json) {
    if (as_json)
        std::cout << dt::series_to_json(s).dump() << "\n";
    else
        print_series_table(s);
}

std::vector<std::vector<int>> chunk_divisors(const std::vector<int>& flat, int factors) {
    if (factors <= 0 || flat.size() % static_cast<std::size_t>(factors) != 0)
        throw dt::Error("divisor list length must be a multiple of the number of ambient factors");
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < flat.size(); i += static_cast<std::size_t>(factors))
        out.emplace_back(flat.begin() + static_cast<long>(i), flat.begin() + static_cast<long>(i) + factors);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Donaldson-Thomas generating series of two Calabi-Yau 3-fold families"};
    app.require_subcommand(1);

    // ---- dt theorem-a ----
    int a_order = 8;
    bool a_json = false;
    auto* cmd_a = app.add_subcommand("theorem-a", "DT series of the quartic-in-quadric family: 2 M(q^2)^{2 chi}");
    cmd_a->add_option("--order", a_order, "truncation order")->required();
    cmd_a->add_flag("--json", a_json, "emit series JSON");

    // ---- dt theorem-b ----
    int b_eps1 = 0, b_eps2 = 0, b_order = 8;
    std::string b_r = "3";
    bool b_json = false;
    auto* cmd_b = app.add_subcommand("theorem-b", "DT series of the P1xP1xP2 hypersurface family at polarization r");
    cmd_b->add_option("--eps1", b_eps1)->required();
    cmd_b->add_option("--eps2", b_eps2)->required();
    cmd_b->add_option("--r", b_r, "polarization (rational, e.g. 3 or 5/2)")->required();
    cmd_b->add_option("--order", b_order)->required();
    cmd_b->add_flag("--json", b_json);

    // ---- dt prop-e2 ----
    int p_n = 2, p_eps1 = 0, p_eps2 = 0, p_order = 8;
    bool p_json = false;
    auto* cmd_p = app.add_subcommand("prop-e2", "unweighted Euler-characteristic series for the (2,2,n+1) family");
    cmd_p->add_option("--n", p_n)->required();
    cmd_p->add_option("--eps1", p_eps1)->required();
    cmd_p->add_option("--eps2", p_eps2)->required();
    cmd_p->add_option("--order", p_order)->required();
    cmd_p->add_flag("--json", p_json);

    // ---- dt crosscheck ----
    std::string cc_family = "a";
    int cc_m = 0, cc_eps1 = 0, cc_eps2 = 0;
    auto* cmd_cc = app.add_subcommand("crosscheck", "closed form vs stratified fixed-point enumeration at weight m");
    cmd_cc->add_option("--family", cc_family, "a or b")->required()->check(CLI::IsMember({"a", "b"}));
    cmd_cc->add_option("--m", cc_m)->required();
    cmd_cc->add_option("--eps1", cc_eps1);
    cmd_cc->add_option("--eps2", cc_eps2);

    // ---- dt partitions ----
    auto* cmd_parts = app.add_subcommand("partitions", "n-dimensional partition counting");
    int pc_dim = 3, pc_weight = 0;
    auto* cmd_pc = cmd_parts->add_subcommand("count", "count partitions of a given weight");
    cmd_pc->add_option("--dim", pc_dim)->required();
    cmd_pc->add_option("--weight", pc_weight)->required();
    int ps_dim = 3, ps_order = 8;
    auto* cmd_ps = cmd_parts->add_subcommand("series", "generating series of partition counts");
    cmd_ps->add_option("--dim", ps_dim)->required();
    cmd_ps->add_option("--order", ps_order)->required();
    cmd_parts->require_subcommand(1);

    // ---- dt torus ----
    auto* cmd_torus = app.add_subcommand("torus", "torus fixed points of punctual Quot schemes");
    int tf_dim = 3, tf_rank = 2, tf_weight = 0;
    bool tf_list = false, tf_count = false;
    auto* cmd_tf = cmd_torus->add_subcommand("fixed-points", "enumerate or count fixed points");
    cmd_tf->add_option("--dim", tf_dim)->required();
    cmd_tf->add_option("--rank", tf_rank)->required();
    cmd_tf->add_option("--weight", tf_weight)->required();
    cmd_tf->add_flag("--list", tf_list, "include the staircases");
    cmd_tf->add_flag("--count", tf_count, "count only (default)");
    cmd_torus->require_subcommand(1);

    // ---- dt localalg ----
    auto* cmd_la = app.add_subcommand("localalg", "Hom dimensions and parity checks for monomial ideals");
    std::string la_i1, la_i2;
    auto* cmd_hom = cmd_la->add_subcommand("hom-dim", "dim Hom(I1, R/I2) from staircase JSON");
    cmd_hom->add_option("--ideal1", la_i1, "staircase JSON, e.g. [[0,0,0]]")->required();
    cmd_hom->add_option("--ideal2", la_i2, "staircase JSON")->required();
    int la_max = 3;
    auto* cmd_par = cmd_la->add_subcommand("parity-scan", "exhaustive Hom parity check up to a colength");
    cmd_par->add_option("--max-colength", la_max)->required();
    cmd_la->require_subcommand(1);

    // ---- dt chow ----
    auto* cmd_chow = app.add_subcommand("chow", "intersection theory on products of projective spaces");
    std::vector<int> ce_ambient, ce_degrees;
    auto* cmd_ce = cmd_chow->add_subcommand("euler", "Euler characteristic of a complete intersection");
    cmd_ce->add_option("--ambient", ce_ambient, "factor dimensions, e.g. 5 or 1,1,2")->required()->delimiter(',');
    cmd_ce->add_option("--degrees,--degree", ce_degrees, "divisor degrees, chunked by factor count")->required()->delimiter(',');
    int cb_n = 2, cb_eps1 = 0, cb_eps2 = 0;
    auto* cmd_cb = cmd_chow->add_subcommand("bogomolov", "discriminant polynomial (two-route checked)");
    cmd_cb->add_option("--n", cb_n)->required();
    cmd_cb->add_option("--eps1", cb_eps1)->required();
    cmd_cb->add_option("--eps2", cb_eps2)->required();
    cmd_chow->require_subcommand(1);

    // ---- dt walls ----
    auto* cmd_walls = app.add_subcommand("walls", "stability chambers and destabilizer search");
    int wc_n = 2, wc_eps1 = 0, wc_eps2 = 0;
    std::string wc_r = "3";
    auto* cmd_wc = cmd_walls->add_subcommand("classify", "locate r relative to the chamber walls");
    cmd_wc->add_option("--n", wc_n)->required();
    cmd_wc->add_option("--eps1", wc_eps1)->required();
    cmd_wc->add_option("--eps2", wc_eps2)->required();
    cmd_wc->add_option("--r", wc_r)->required();
    int wd_n = 2, wd_eps1 = 0, wd_eps2 = 0, wd_bound = 4;
    std::string wd_r = "3", wd_r0 = "1/4";
    auto* cmd_wd = cmd_walls->add_subcommand("destabilize", "search destabilizing twists (a,b,c)");
    cmd_wd->add_option("--n", wd_n)->required();
    cmd_wd->add_option("--eps1", wd_eps1)->required();
    cmd_wd->add_option("--eps2", wd_eps2)->required();
    cmd_wd->add_option("--r", wd_r)->required();
    cmd_wd->add_option("--r0", wd_r0)->required();
    cmd_wd->add_option("--bound", wd_bound)->required();
    cmd_walls->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_a->parsed()) {
            auto rep = dt::theorem_a_series(clamp_order(a_order));
            if (!a_json) std::cout << "family A, chi(Y) = " << rep.chiY << "\n";
            emit_series(rep.series, a_json);
        } else if (cmd_b->parsed()) {
            auto rep = dt::theorem_b_series(b_eps1, b_eps2, dt::parse_rational(b_r), clamp_order(b_order));
            if (!b_json)
                std::cout << "family B, eps=(" << b_eps1 << "," << b_eps2 << "), r = " << rep.r.get_str()
                          << ", chi(Y) = " << rep.chiY << ", k = " << rep.k << "\n";
            emit_series(rep.series, b_json);
        } else if (cmd_p->parsed()) {
            dt::Series s = dt::prop_e2_series(p_n, p_eps1, p_eps2, clamp_order(p_order));
            emit_series(s, p_json);
        } else if (cmd_cc->parsed()) {
            auto rep = dt::crosscheck_quot_model(cc_family == "a" ? dt::Family::A : dt::Family::B, cc_m, cc_eps1, cc_eps2);
            json out{{"family", cc_family},
                     {"m", rep.m},
                     {"chi", rep.chiY},
                     {"multiplicity", rep.multiplicity},
                     {"closed_form", rep.closed_form.get_str()},
                     {"stratified", rep.stratified.get_str()},
                     {"agree", true}};
            std::cout << out.dump() << "\n";
        } else if (cmd_pc->parsed()) {
            json out{{"dim", pc_dim}, {"weight", pc_weight}, {"count", dt::count_partitions(pc_dim, pc_weight)}};
            std::cout << out.dump() << "\n";
        } else if (cmd_ps->parsed()) {
            std::cout << dt::series_to_json(dt::partition_series(ps_dim, clamp_order(ps_order))).dump() << "\n";
        } else if (cmd_tf->parsed()) {
            auto points = dt::enumerate_quot_fixed_points(tf_dim, tf_rank, tf_weight);
            json out{{"dim", tf_dim}, {"rank", tf_rank}, {"weight", tf_weight}, {"count", points.size()}};
            if (tf_list && !tf_count) {
                json list = json::array();
                for (const auto& p : points) {
                    json tuple = json::array();
                    for (const auto& ideal : p.ideals) tuple.push_back(dt::staircase_to_json(ideal.staircase));
                    list.push_back(tuple);
                }
                out["points"] = list;
            }
            std::cout << out.dump() << "\n";
        } else if (cmd_hom->parsed()) {
            dt::MonomialIdeal i1 = dt::ideal_from_json(json::parse(la_i1));
            dt::MonomialIdeal i2 = dt::ideal_from_json(json::parse(la_i2), i1.nvars);
            json out{{"hom_dim", dt::hom_dim(i1, i2)}};
            std::cout << out.dump() << "\n";
        } else if (cmd_par->parsed()) {
            std::vector<dt::MonomialIdeal> all;
            for (int l = 0; l <= la_max; ++l)
                for (auto& I : dt::enumerate_monomial_ideals(3, l)) all.push_back(std::move(I));
            long long pairs = 0, failures = 0;
            for (const auto& a : all) {
                for (const auto& b : all) {
                    ++pairs;
                    const int s = dt::hom_dim(a, b) + dt::hom_dim(b, a);
                    if ((s - a.colength() - b.colength()) % 2 != 0) ++failures;
                }
            }
            std::cout << (failures == 0 ? "PASS" : "FAIL") << " parity scan: " << pairs << " pairs, " << failures
                      << " failures (colengths <= " << la_max << ")\n";
            if (failures != 0) return 1;
        } else if (cmd_ce->parsed()) {
            dt::Ambient amb(ce_ambient);
            auto divisors = chunk_divisors(ce_degrees, amb.factors());
            long long chi = dt::ci_euler(amb, divisors);
            json out{{"ambient", ce_ambient}, {"degrees", divisors}, {"chi", chi}};
            std::cout << out.dump() << "\n";
        } else if (cmd_cb->parsed()) {
            dt::Poly d = dt::bogomolov_discriminant(cb_n, cb_eps1, cb_eps2);
            json out{{"n", cb_n}, {"eps1", cb_eps1}, {"eps2", cb_eps2}, {"discriminant", d.str("r0")}};
            std::cout << out.dump() << "\n";
        } else if (cmd_wc->parsed()) {
            dt::ChamberSpec spec(wc_n, wc_eps1, wc_eps2, dt::parse_rational(wc_r));
            auto bounds = dt::wall_bounds(wc_n, wc_eps1, wc_eps2);
            json out{{"n", wc_n},
                     {"eps1", wc_eps1},
                     {"eps2", wc_eps2},
                     {"r", spec.r.get_str()},
                     {"lower", bounds.lower.get_str()},
                     {"upper", bounds.upper ? json(bounds.upper->get_str()) : json(nullptr)},
                     {"chamber", dt::chamber_name(dt::classify(spec))}};
            std::cout << out.dump() << "\n";
        } else if (cmd_wd->parsed()) {
            auto triples =
                dt::destabilizer_search(wd_n, wd_eps1, wd_eps2, dt::parse_rational(wd_r), dt::parse_rational(wd_r0), wd_bound);
            json list = json::array();
            for (const auto& t : triples) list.push_back({t.a, t.b, t.c});
            std::cout << list.dump() << "\n";
        }
    } catch (const dt::OnWallUnsupported& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const dt::AboveUpperUnsupported& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const dt::RouteMismatch& e) {
        std::cerr << "internal cross-check failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
