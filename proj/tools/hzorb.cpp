// hzorb: command-line front end for the Hirzebruch orbifold toolkit.
// Exit status: 0 success, 1 domain error, 2 usage error.
#include "hz/fan.hpp"
#include "hz/genfun.hpp"
#include "hz/hirzebruch.hpp"
#include "hz/json_io.hpp"
#include "hz/sheaf.hpp"
#include "hz/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hz;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    bool as_json = false;
    std::string out;
};

struct HzArgs {
    long a = 0, b = 0, r = 0, m = 0, n = 0;
};

void add_abr(CLI::App* c, HzArgs& h) {
    c->add_option("-a", h.a, "weight a")->required();
    c->add_option("-b", h.b, "weight b")->required();
    c->add_option("-r", h.r, "twist r")->required();
}

void add_abrmn(CLI::App* c, HzArgs& h) {
    add_abr(c, h);
    c->add_option("-m", h.m, "class m (c1 = m x/a + n y)")->required();
    c->add_option("-n", h.n, "class n")->required();
}

void emit(const Common& cm, const json& j, const std::string& text) {
    if (!cm.out.empty()) {
        std::ofstream f(cm.out);
        if (!f) throw DomainError("cannot write " + cm.out);
        f << j.dump(2) << "\n";
    }
    if (cm.as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

std::vector<Int> to_ints(const std::vector<std::string>& v) {
    std::vector<Int> out;
    for (const auto& s : v) {
        try {
            out.emplace_back(s);
        } catch (const std::invalid_argument&) {
            throw UsageError("not an integer: " + s);
        }
    }
    return out;
}

long parse_min2exp(const std::string& s) {
    Rat x;
    try {
        x = parse_rat(s);
    } catch (const DomainError&) {
        throw UsageError("--min-exp must be an integer or half-integer, got " + s);
    }
    Rat x2 = x * 2;
    if (!is_integer(x2)) throw UsageError("--min-exp must be an integer or half-integer, got " + s);
    return x2.get_num().get_si();
}

std::string fan_text(const StackyFan& f) {
    std::ostringstream os;
    os << "lattice: Z^" << f.lattice.free_rank;
    for (const auto& t : f.lattice.torsion) os << " + Z/" << to_string(t);
    os << "\nrays:\n";
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        os << "  " << i << ": (";
        for (std::size_t k = 0; k < f.rays[i].free.size(); ++k) os << (k ? "," : "") << to_string(f.rays[i].free[k]);
        os << ")";
        if (!f.rays[i].torsion.empty()) {
            os << " torsion (";
            for (std::size_t k = 0; k < f.rays[i].torsion.size(); ++k)
                os << (k ? "," : "") << to_string(f.rays[i].torsion[k]);
            os << ")";
        }
        os << "\n";
    }
    os << "cones:";
    for (const auto& c : f.cones) {
        os << " {";
        for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
        os << "}";
    }
    return os.str();
}

Incidence parse_incidence(const std::string& s) {
    auto bad = [&] { return UsageError("--type must be type1, type2:I or type3:I,J (1-based), got " + s); };
    if (s == "type1") return {IncidenceKind::type1, -1, -1};
    try {
        if (s.rfind("type2:", 0) == 0) return {IncidenceKind::type2, std::stoi(s.substr(6)) - 1, -1};
        if (s.rfind("type3:", 0) == 0) {
            auto rest = s.substr(6);
            auto comma = rest.find(',');
            if (comma == std::string::npos) throw bad();
            int i = std::stoi(rest.substr(0, comma)) - 1, j = std::stoi(rest.substr(comma + 1)) - 1;
            if (i > j) std::swap(i, j);
            return {IncidenceKind::type3, i, j};
        }
    } catch (const std::logic_error&) {
        throw bad();
    }
    throw bad();
}

std::string series_text(const SeriesWindow& s) {
    return s.series.str() + "  [exact for exponents >= " + to_string(make_rat(Int(s.min2exp), Int(2))) + "]";
}

std::string report_text(const CrosscheckReport& rep) {
    std::ostringstream os;
    for (const auto& run : rep.runs)
        os << engine_name(run.engine) << " (bound " << run.bounds.back() << (run.stabilized ? "" : ", unstable")
           << "): " << series_text(run.window) << "\n";
    os << (rep.pass ? "PASS" : "FAIL") << ": " << rep.detail;
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hirzebruch orbifold toolkit"};
    app.require_subcommand(1);
    Common cm;
    app.add_flag("--json", cm.as_json, "print JSON");
    app.add_option("--out", cm.out, "also write the JSON payload to FILE");
    HzArgs h;

    // fan
    auto* fan = app.add_subcommand("fan", "stacky fans");
    fan->require_subcommand(1);
    std::vector<std::string> weights, coeffs, divisors;
    auto* f_wps = fan->add_subcommand("wps", "weighted projective stack");
    f_wps->add_option("weights", weights)->required();
    auto* f_gerbe = fan->add_subcommand("gerbe", "weighted projective gerbe");
    f_gerbe->add_option("weights", weights)->required();
    auto* f_hz = fan->add_subcommand("hirzebruch", "Hirzebruch orbifold");
    add_abr(f_hz, h);
    auto* f_lb = fan->add_subcommand("linebundle", "total space of a line bundle over P(weights)");
    f_lb->add_option("--weights", weights)->required();
    f_lb->add_option("--coeffs", coeffs, "divisor coefficient per base ray")->required();
    auto* f_pb = fan->add_subcommand("projbundle", "projectivization of a sum of line bundles over P(weights)");
    f_pb->add_option("--weights", weights)->required();
    f_pb->add_option("--divisor", divisors, "comma-separated coefficients, one option per summand")->required();

    auto* charts = app.add_subcommand("charts", "chart stabilizers and torus weights");
    add_abr(charts, h);
    auto* euler = app.add_subcommand("euler", "Euler characteristic of a line bundle");
    add_abrmn(euler, h);
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert polynomial");
    add_abrmn(hilbert, h);
    auto* mhp = app.add_subcommand("mhp", "modified Hilbert polynomial");
    add_abrmn(mhp, h);
    auto* inertia = app.add_subcommand("inertia", "components of the inertia stack");
    add_abr(inertia, h);
    auto* coarse = app.add_subcommand("coarse", "Cartier and ample test on the coarse space");
    add_abr(coarse, h);
    std::vector<std::string> tcoef;
    coarse->add_option("--t", tcoef, "coefficients t1..t4")->required()->expected(4);

    // sheaf
    auto* sheaf = app.add_subcommand("sheaf", "equivariant sheaf data");
    sheaf->require_subcommand(1);
    std::vector<long> B;
    long B1 = 0, B2 = 0;
    std::vector<long> lambda;
    std::string type = "type1";
    auto* s_c1 = sheaf->add_subcommand("c1", "first Chern class of a line bundle");
    auto* s_gr = sheaf->add_subcommand("grading", "fine gradings of a line bundle");
    auto* s_gf = sheaf->add_subcommand("gaugefix", "gauge-fixed line bundle");
    for (auto* c : {s_c1, s_gr, s_gf}) {
        add_abr(c, h);
        c->add_option("--B", B, "B1..B4")->required()->expected(4);
    }
    auto* s_st = sheaf->add_subcommand("stable", "stability of rank-2 data");
    auto* s_chi = sheaf->add_subcommand("chi", "c1 and chi_E of rank-2 data");
    for (auto* c : {s_st, s_chi}) {
        add_abr(c, h);
        c->add_option("--B1", B1);
        c->add_option("--B2", B2);
        c->add_option("--lambda", lambda, "Lambda1..Lambda4")->required()->expected(4);
        c->add_option("--type", type, "type1, type2:I or type3:I,J");
    }

    // genfun
    auto* gen = app.add_subcommand("genfun", "generating functions");
    gen->require_subcommand(1);
    std::string min_exp, engine = "csets";
    bool experimental = false;
    long R = 2;
    auto* g_r1 = gen->add_subcommand("rank1", "rank-1 torsion-free series");
    auto* g_vb = gen->add_subcommand("rank2-vb", "rank-2 locally free series");
    auto* g_tf = gen->add_subcommand("rank2-tf", "rank-2 torsion-free series");
    auto* cross = app.add_subcommand("crosscheck", "run every applicable engine and compare");
    for (auto* c : {g_r1, g_vb, g_tf, cross}) {
        add_abrmn(c, h);
        c->add_option("--min-exp", min_exp, "lowest exact exponent, e.g. -4 or -7/2")->required();
    }
    for (auto* c : {g_vb, g_tf})
        c->add_option("--engine", engine, "csets, r0, closed, lambda or all")
            ->check(CLI::IsMember({"csets", "r0", "closed", "lambda", "all"}));
    for (auto* c : {g_vb, g_tf, cross}) c->add_flag("--experimental", experimental, "allow the lambda engine");

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    std::vector<int> only;
    verify->add_option("--only", only, "criterion numbers");

    std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
        a->fallthrough();
        for (auto* c : a->get_subcommands({})) fall(c);
    };
    fall(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fan->parsed()) {
            StackyFan f;
            if (f_wps->parsed())
                f = wps_fan(to_ints(weights));
            else if (f_gerbe->parsed())
                f = wps_gerbe_fan(to_ints(weights));
            else if (f_hz->parsed())
                f = hirzebruch_fan(h.a, h.b, h.r);
            else if (f_lb->parsed())
                f = line_bundle_total_space(wps_fan(to_ints(weights)), to_ints(coeffs));
            else {
                std::vector<std::vector<Int>> divs;
                for (const auto& d : divisors) {
                    std::vector<std::string> parts;
                    std::stringstream ss(d);
                    for (std::string x; std::getline(ss, x, ',');) parts.push_back(x);
                    divs.push_back(to_ints(parts));
                }
                f = projective_bundle(wps_fan(to_ints(weights)), divs);
            }
            emit(cm, fan_to_json(f), fan_text(f));
        } else if (charts->parsed()) {
            auto P = derive_params(h.a, h.b, h.r);
            json arr = json::array();
            std::ostringstream os;
            for (const auto& c : chart_weight_tables(P)) {
                arr.push_back({{"chart", c.chart},
                               {"order", c.order},
                               {"action", c.action},
                               {"action_mod", c.action_mod},
                               {"tweights", c.tweights},
                               {"overlap_tweights", c.overlap_tweights}});
                os << "chart " << c.chart << ": mu_" << c.order << " acts by (" << c.action_mod[0] << ","
                   << c.action_mod[1] << "), weights (" << c.tweights[0][0] << "," << c.tweights[0][1] << ") ("
                   << c.tweights[1][0] << "," << c.tweights[1][1] << ")\n";
            }
            emit(cm, {{"params", params_to_json(P)}, {"charts", arr}}, os.str());
        } else if (euler->parsed()) {
            auto P = derive_params(h.a, h.b, h.r);
            Rat chi = euler_characteristic(P, {h.m, h.n});
            emit(cm, {{"chi", to_string(chi)}}, to_string(chi));
        } else if (hilbert->parsed() || mhp->parsed()) {
            auto P = derive_params(h.a, h.b, h.r);
            auto p = hilbert->parsed() ? hilbert_polynomial(P, {h.m, h.n}) : modified_hilbert_polynomial(P, {h.m, h.n});
            emit(cm, poly_to_json(p), p.str());
        } else if (inertia->parsed()) {
            auto P = derive_params(h.a, h.b, h.r);
            auto comps = inertia_components(P);
            json arr = json::array();
            std::ostringstream os;
            for (const auto& c : comps) {
                arr.push_back({{"source", c.source}, {"ls", c.ls}, {"dimension", c.dimension}});
                os << c.source << ": dimension " << c.dimension << ", " << (c.ls.empty() ? 1 : c.ls.size()) << " component(s)\n";
            }
            os << "total " << inertia_component_count(comps);
            emit(cm, {{"components", arr}, {"count", inertia_component_count(comps)}}, os.str());
        } else if (coarse->parsed()) {
            auto P = derive_params(h.a, h.b, h.r);
            auto t = to_ints(tcoef);
            auto res = coarse_cartier_ample(P, {t[0], t[1], t[2], t[3]});
            emit(cm, {{"cartier", res.is_cartier}, {"ample", res.is_ample}},
                 std::string("cartier: ") + (res.is_cartier ? "yes" : "no") +
                     "\nample: " + (res.is_ample ? "yes" : "no"));
        } else if (sheaf->parsed()) {
            auto P = derive_params(h.a, h.b, h.r);
            if (s_c1->parsed() || s_gr->parsed() || s_gf->parsed()) {
                EquivLineBundle L{{B[0], B[1], B[2], B[3]}};
                if (s_c1->parsed()) {
                    auto c = underlying_c1(L, P);
                    emit(cm, {{"m", c.m}, {"n", c.n}}, "(" + std::to_string(c.m) + "," + std::to_string(c.n) + ")");
                } else if (s_gr->parsed()) {
                    auto g = fine_gradings(L, P);
                    emit(cm, {{"gradings", g}},
                         std::to_string(g[0]) + " " + std::to_string(g[1]) + " " + std::to_string(g[2]) + " " +
                             std::to_string(g[3]));
                } else {
                    auto g = gauge_fix(L, P);
                    emit(cm, {{"B", g.B}},
                         std::to_string(g.B[0]) + " " + std::to_string(g.B[1]) + " " + std::to_string(g.B[2]) + " " +
                             std::to_string(g.B[3]));
                }
            } else {
                Rank2Datum d;
                d.B1 = B1;
                d.B2 = B2;
                d.Lambda = {lambda[0], lambda[1], lambda[2], lambda[3]};
                d.incidence = parse_incidence(type);
                validate_rank2(d, P);
                if (s_st->parsed()) {
                    bool st = stability_check(d, P);
                    emit(cm, {{"stable", st}, {"euler_weight", euler_weight(d.incidence)}}, st ? "stable" : "unstable");
                } else {
                    auto inv = rank2_c1_chi(d, P);
                    emit(cm, {{"m", inv.c1.m}, {"n", inv.c1.n}, {"chi", to_string(inv.chi)}},
                         "c1 = (" + std::to_string(inv.c1.m) + "," + std::to_string(inv.c1.n) +
                             "), chi_E = " + to_string(inv.chi));
                }
            }
        } else if (gen->parsed() || cross->parsed()) {
            auto P = derive_params(h.a, h.b, h.r);
            long min2 = parse_min2exp(min_exp);
            PicClass cls{h.m, h.n};
            if (g_r1->parsed()) {
                auto s = rank1_series(P, cls, min2);
                emit(cm, series_to_json(s), series_text(s));
            } else if (cross->parsed() || engine == "all") {
                auto rep = crosscheck(P, cls, min2, experimental);
                if (g_tf->parsed())
                    for (auto& run : rep.runs) run.window = vb_to_tf(run.window, 2, P);
                emit(cm, report_to_json(rep), report_text(rep));
                return rep.pass ? 0 : 1;
            } else {
                Engine e = parse_engine(engine);
                if (e == Engine::lambda && !experimental)
                    throw UsageError("the lambda engine is experimental; pass --experimental");
                auto run = run_engine(e, P, cls, min2);
                auto s = g_tf->parsed() ? vb_to_tf(run.window, R, P) : run.window;
                emit(cm, series_to_json(s), series_text(s));
            }
        } else if (verify->parsed()) {
            AcceptanceOptions opt;
            opt.only = only;
            auto results = run_acceptance(opt);
            json arr = json::array();
            for (const auto& r : results)
                arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"notes", r.notes}});
            bool all = true;
            for (const auto& r : results) all = all && r.pass;
            std::ostringstream os;
            print_acceptance(os, results);
            emit(cm, {{"pass", all}, {"criteria", arr}}, os.str());
            return all ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
