#include "phtype/acceptance.hpp"
#include "phtype/catalog.hpp"
#include "phtype/check.hpp"
#include "phtype/extension.hpp"
#include "phtype/serialize.hpp"
#include "phtype/sums.hpp"
#include "phtype/tables.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace phtype;

namespace {

struct Globals {
    std::string format;
    std::uint64_t seed = 1;
    std::string out;
    bool quick = false;
};

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + g.out);
    f << text;
}

std::vector<StepKind> parse_steps(const std::vector<std::string>& tokens) {
    std::vector<StepKind> out;
    for (const auto& t : tokens) {
        std::string s = t;
        for (auto& c : s)
            if (c == ';') c = ' ';
        std::istringstream in(s);
        std::string one;
        while (in >> one) out.push_back(parse_step(one));
    }
    return out;
}

AlgebraPtr make_algebra(int r, int s, const std::vector<std::string>& steps, const std::vector<int>& sum,
                        bool allow_restriction = false) {
    AlgebraPtr a;
    if (allow_restriction && !default_chain(r, s)) {
        if (auto m = restricted_minimal(r, s)) a = *m;
    }
    if (!a) a = construct(r, s);
    for (auto st : parse_steps(steps)) a = extend(a, st);
    if (!sum.empty()) a = build_sum(a, sum.at(0), sum.at(1));
    return a;
}

std::string want_format(const std::string& given, std::initializer_list<const char*> allowed) {
    if (given.empty()) return *allowed.begin();
    for (const char* a : allowed)
        if (given == a) return given;
    std::string msg = "--format must be one of:";
    for (const char* a : allowed) msg += std::string(" ") + a;
    throw std::invalid_argument(msg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pseudo H-type Lie algebras: construction, tables, isomorphism certificates"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "json | md | csv | text, depending on the command");
    app.add_option("--seed", g.seed, "seed for random sampling");
    app.add_option("--out", g.out, "write the result to this file instead of stdout");
    app.add_flag("--quick", g.quick, "verify-paper: skip extensions beyond one step");
    app.fallthrough();

    int r = 0, s = 0, r2 = 0, s2 = 0;
    std::vector<std::string> steps;
    std::vector<int> sum;

    auto* build = app.add_subcommand("build", "construct n_(r,s) and print it as JSON");
    build->add_option("r", r)->required();
    build->add_option("s", s)->required();
    build->add_option("--extend", steps, "extension steps such as 8,0 0,8 4,4");
    build->add_option("--sum", sum, "direct sum multiplicities mu nu")->expected(2);

    auto* ext = app.add_subcommand("extend", "same as build --extend");
    ext->add_option("r", r)->required();
    ext->add_option("s", s)->required();
    ext->add_option("steps", steps)->required();

    bool jtable = false;
    auto* table = app.add_subcommand("table", "commutator table (md or csv)");
    table->add_option("r", r)->required();
    table->add_option("s", s)->required();
    table->add_option("--extend", steps);
    table->add_flag("--j", jtable, "print J_k v instead of the brackets");

    bool aut = false, anti = false;
    auto* check = app.add_subcommand("check", "isomorphism certificate for n_(r1,s1) and n_(r2,s2)");
    check->add_option("r1", r)->required();
    check->add_option("s1", s)->required();
    check->add_option("r2", r2)->required();
    check->add_option("s2", s2)->required();
    check->add_flag("--auto", aut, "look for an automorphism");
    check->add_flag("--anti", anti, "require an anti-isometric center action");

    int samples = 100;
    auto* sbg = app.add_subcommand("sbg", "strong bracket generation decision");
    sbg->add_option("r", r)->required();
    sbg->add_option("s", s)->required();
    sbg->add_option("--extend", steps);
    sbg->add_option("--sum", sum)->expected(2);
    sbg->add_option("--samples", samples);

    auto* verify = app.add_subcommand("verify-paper", "run the acceptance suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build || *ext) {
            want_format(g.format, {"json"});
            AlgebraPtr a = make_algebra(r, s, steps, sum);
            emit(g, algebra_to_json(*a).dump(2) + "\n");
            return 0;
        }
        if (*table) {
            TableFormat f = parse_table_format(want_format(g.format, {"md", "csv"}));
            AlgebraPtr a = make_algebra(r, s, steps, {});
            emit(g, jtable ? render_j_table(*a, f) : render_table(*a, f));
            return 0;
        }
        if (*check) {
            std::string f = want_format(g.format, {"json", "text"});
            CheckOptions opt{aut, anti, g.seed};
            Certificate c = check_isomorphism({r, s}, {r2, s2}, opt);
            if (f == "json")
                emit(g, certificate_to_json(c).dump(2) + "\n");
            else
                emit(g, std::string(to_string(c.kind)) + ": " + c.reason + "\n");
            return exit_code(c);
        }
        if (*sbg) {
            std::string f = want_format(g.format, {"json", "text"});
            AlgebraPtr a = make_algebra(r, s, steps, sum, true);
            Certificate c = sum.empty() ? sbg_decision(a, samples, g.seed) : sum_sbg(a, samples, g.seed);
            if (f == "json")
                emit(g, certificate_to_json(c).dump(2) + "\n");
            else
                emit(g, std::string(to_string(c.kind)) + ": " + c.reason + "\n");
            return c.kind == CertificateKind::INCONCLUSIVE ? 2 : 0;
        }
        if (*verify) {
            std::string f = want_format(g.format, {"text", "json"});
            AcceptanceOptions opt;
            opt.quick = g.quick;
            opt.seed = g.seed;
            auto results = run_acceptance(opt);
            bool ok = true;
            std::string text;
            Json j = Json::array();
            for (const auto& res : results) {
                ok = ok && res.ok;
                text += format_result(res) + "\n";
                j.push_back({{"criterion", res.id}, {"title", res.title}, {"pass", res.ok}, {"detail", res.detail},
                             {"seconds", res.seconds}, {"budget", res.budget}});
            }
            emit(g, f == "json" ? Json{{"pass", ok}, {"criteria", j}}.dump(2) + "\n" : text);
            return ok ? 0 : 1;
        }
    } catch (const UnsupportedSignature& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
