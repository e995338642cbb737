#include "phtype/acceptance.hpp"

#include "phtype/catalog.hpp"
#include "phtype/check.hpp"
#include "phtype/extension.hpp"
#include "phtype/morphism.hpp"
#include "phtype/obstruction.hpp"
#include "phtype/sums.hpp"
#include "phtype/tables.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

namespace phtype {

namespace {

std::vector<std::vector<std::string>> split_csv(const std::string& s) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

void require(const VerifyResult& v, const std::string& what) {
    if (!v) throw Failure(what + ": " + v.witness);
}

AlgebraPtr catalog(const AcceptanceOptions& opt, Signature id) {
    for (const auto& [sig, a] : opt.catalog_override)
        if (sig == id) return a;
    return base_algebra(id);
}

std::string name(Signature s) { return "n_" + s.str(); }

bool same_algebra(const Algebra& a, const Algebra& b) {
    return a.center_sig() == b.center_sig() && a.module_metric() == b.module_metric() && a.structure() == b.structure();
}

std::string criterion_tables(const AcceptanceOptions& opt) {
    int tables = 0, cells = 0;
    for (const auto& g : golden_tables()) {
        Signature id{g.name[1] - '0', g.name[2] - '0'};
        AlgebraPtr a = catalog(opt, id);
        std::string got = g.name[0] == 'j' ? render_j_table(*a, TableFormat::CSV) : render_table(*a, TableFormat::CSV);
        std::string d = diff_csv(g.csv, got);
        require(d.empty(), (g.name[0] == 'j' ? "J-table of " : "table of ") + name(id) + " " + d);
        auto rows = split_csv(g.csv);
        int n = static_cast<int>((rows.size() - 1) * (rows[0].size() - 1));
        if (g.name[0] == 'j') {
            require(n == 128, "J-table has " + std::to_string(n) + " cells, expected 128");
        } else {
            ++tables;
        }
        cells += n;
    }
    require(tables == 12, "expected 12 commutator tables, found " + std::to_string(tables));
    return std::to_string(tables) + " commutator tables and the 128-cell J-table match (" + std::to_string(cells) +
           " cells)";
}

std::string criterion_axioms(const AcceptanceOptions& opt) {
    int count = 0;
    for (auto id : catalog_ids()) {
        AlgebraPtr a = catalog(opt, id);
        require(verify_axioms(*a), name(id));
        ++count;
        for (auto st : {StepKind::BY_8_0, StepKind::BY_0_8, StepKind::BY_4_4}) {
            AlgebraPtr e = extend(a, st);
            require(verify_axioms(*e), name(id) + " + " + to_string(st));
            ++count;
        }
    }
    std::string extra;
    if (!opt.quick) {
        AlgebraPtr a = extension_chain(Signature{1, 0}, {StepKind::BY_8_0, StepKind::BY_0_8});
        require(a->dim_v() == 512, "n_(9,8) has module dimension " + std::to_string(a->dim_v()));
        require(verify_axioms(*a), "n_(9,8)");
        ++count;
        extra = ", including n_(9,8) (dim 512)";
    }
    return std::to_string(count) + " algebras pass Clifford, admissible, H-type and integral-basis checks" + extra;
}

void check_canonical(const AlgebraPtr& src, bool automorphism, const std::string& what) {
    auto f = canonical_iso(src);
    require(f.has_value(), what + ": no canonical isomorphism");
    require(as_integral(*f).has_value(), what + ": not integral");
    require(verify_homomorphism(*f), what + ": homomorphism");
    require(verify_conjugation(*f), what + ": conjugation");
    require(verify_isom_class(*f), what + ": A/B class");
    require(classify(*f).center_action == MapClass::ANTI_ISOMETRY, what + ": center is not an anti-isometry");
    auto nf = normalize_isomorphism(*f);
    require(nf.cc_sign == -1 && nf.mu == 1, what + ": normalization");
    if (automorphism) require(same_algebra(*f->dst, *src), what + ": target differs from source");
    auto g = canonical_iso(f->dst);
    require(g.has_value(), what + ": no inverse-direction map");
    LieMorphism h = compose(*g, *f);
    require(same_algebra(*h.dst, *src), what + ": round trip lands elsewhere");
    require(classify(h).center_action == MapClass::ISOMETRY, what + ": round trip center is not an isometry");
    require(verify_homomorphism(LieMorphism{src, src, h.A, h.B, h.C}), what + ": round trip is not an automorphism");
}

std::string criterion_isomorphisms(const AcceptanceOptions&) {
    int n = 0;
    auto run = [&](Signature sig) {
        check_canonical(construct(sig.pos, sig.neg), false, "phi_" + sig.str());
        ++n;
    };
    for (int r : {1, 2, 4, 8, 9, 10, 12, 16}) run({r, 0});
    for (int r : {1, 2, 4, 8}) {
        run({r, 8});
        run({8, r});
    }
    for (int r : {1, 2, 4, 8}) run({r + 4, 4});
    for (int r : {1, 2, 4}) {
        check_canonical(base_algebra({r, r}), true, "automorphism of n_(" + std::to_string(r) + "," + std::to_string(r) + ")");
        ++n;
    }
    run({5, 4});
    run({4, 5});
    check_canonical(extension_chain(Signature{1, 1}, {StepKind::BY_4_4}), true, "automorphism of n_(5,5)");
    ++n;
    return std::to_string(n) + " canonical maps verified (homomorphism, conjugation, class, normalization, round trip)";
}

std::string criterion_non_iso(const AcceptanceOptions& opt) {
    struct Case {
        Signature a, b;
        bool aut, anti;
        CertificateKind want;
    };
    std::vector<Case> cases = {{{3, 2}, {2, 3}, false, false, CertificateKind::NOT_ISO_PARITY},
                               {{3, 3}, {3, 3}, true, true, CertificateKind::NOT_ISO_PARITY},
                               {{3, 0}, {0, 3}, false, false, CertificateKind::NOT_ISO_DIM},
                               {{2, 0}, {1, 1}, false, false, CertificateKind::NOT_ISO_SIGNATURE}};
    std::string out;
    for (const auto& c : cases) {
        CheckOptions co{c.aut, c.anti, opt.seed};
        Certificate cert = check_isomorphism(c.a, c.b, co);
        std::string what = "check " + c.a.str() + " " + c.b.str();
        require(cert.kind == c.want, what + " gave " + to_string(cert.kind) + " (" + cert.reason + ")");
        require(verify_certificate(cert), what + " certificate");
        if (c.want == CertificateKind::NOT_ISO_DIM)
            require(cert.src_dim_v == 4 && cert.dst_dim_v == 8, what + ": expected 4 vs 8");
        if (!out.empty()) out += ", ";
        out += to_string(cert.kind);
    }
    return out;
}

std::string criterion_surjectivity(const AcceptanceOptions& opt) {
    for (auto id : {Signature{3, 2}, Signature{2, 3}, Signature{3, 3}}) {
        ScanOptions so;
        so.grid_radius = 1;
        so.random_samples = 0;
        so.rational_samples = 500;
        so.seed = opt.seed;
        ScanReport rep = surjectivity_scan(*base_algebra(id), so);
        require(rep.points == 6561 + 500, name(id) + ": scanned " + std::to_string(rep.points) + " points");
        require(rep.equivalence_holds(), name(id) + ": rank(M_X) = r+s does not match <X,X> != 0");
        require(rep.gram_mismatch == 0, name(id) + ": gram_det = 0 off the null cone");
    }
    AlgebraPtr a = extend(base_algebra({3, 2}), StepKind::BY_8_0);
    ExactVector x(a->dim_v());
    x[tensor_index(*a, 0, 0)] = 1;
    x[tensor_index(*a, 6, 1)] = 1;
    require(sgn(scalar_product(x, x, a->module_metric())) == 0, "n_(11,2) witness is not null");
    int rk = exact_rank(adjoint_matrix(*a, x).m);
    require(rk == a->dim_z(), "n_(11,2) witness has rank " + std::to_string(rk));
    return "3 x (6561 grid + 500 rational) points agree; null X = w1(x)u1 + w7(x)u2 in n_(11,2) has rank " +
           std::to_string(rk);
}

std::string criterion_sbg(const AcceptanceOptions& opt) {
    int yes = 0, no = 0;
    for (int r : {1, 2, 4, 8}) {
        for (auto sig : {Signature{r, 0}, Signature{0, r}}) {
            Certificate c = sbg_decision(base_algebra(sig), 100, opt.seed);
            require(c.kind == CertificateKind::SBG_YES && c.samples == 100, name(sig) + " gave " + to_string(c.kind));
            require(verify_certificate(c), name(sig));
            ++yes;
        }
    }
    for (auto id : catalog_ids()) {
        if (id.pos == 0 || id.neg == 0) continue;
        Certificate c = sbg_decision(base_algebra(id), 100, opt.seed);
        require(c.kind == CertificateKind::SBG_NO, name(id) + " gave " + to_string(c.kind));
        require(verify_certificate(c), name(id) + " witness");
        ++no;
    }
    Certificate c = sum_sbg(build_sum(base_algebra({2, 3}), 2, 1), 100, opt.seed);
    require(c.kind == CertificateKind::SBG_NO && verify_certificate(c), "n_(2,3)(2,1)");
    ++no;
    return std::to_string(yes) + " SBG_YES, " + std::to_string(no) + " SBG_NO with verified witnesses";
}

std::string criterion_sums(const AcceptanceOptions&) {
    AlgebraPtr s = build_sum(base_algebra({2, 3}), 1, 1);
    require(verify_axioms(*s), "n_(2,3)(1,1) axioms");
    Volume w1 = volume_element(*s, 0), w2 = volume_element(*s, 1);
    require(w2.omega == w1.omega.negated(), "volume elements of the two block types do not differ by a sign");
    int swaps = 0;
    for (auto id : {Signature{0, 1}, Signature{2, 3}})
        for (auto [mu, nu] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}}) {
            AlgebraPtr a = build_sum(base_algebra(id), mu, nu);
            LieMorphism f = swap_isomorphism(a);
            std::string what = name(id) + "(" + std::to_string(mu) + "," + std::to_string(nu) + ")";
            require(verify_homomorphism(f), what + " swap");
            require(verify_conjugation(f), what + " swap conjugation");
            LieMorphism g = swap_isomorphism(f.dst);
            LieMorphism h = compose(g, f);
            require(h.C == ExactMatrix::identity(a->dim_z()), what + " swap twice is not +Id on the center");
            ++swaps;
        }
    return std::string("n_(2,3)(1,1) passes; block volume elements ") + to_string(w1.action) + " / " +
           to_string(w2.action) + " with omega2 = -omega1; " + std::to_string(swaps) + " swap maps verified";
}

std::string criterion_general_htype(const AcceptanceOptions& opt) {
    for (auto id : {Signature{1, 0}, Signature{1, 1}, Signature{3, 2}, Signature{4, 4}})
        require(verify_general_htype(*base_algebra(id), 100, opt.seed), name(id));
    return "100 samples each on n_(1,0), n_(1,1), n_(3,2), n_(4,4)";
}

}  // namespace

std::string diff_csv(const std::string& expected, const std::string& actual) {
    auto e = split_csv(expected), a = split_csv(actual);
    if (e.empty() || a.empty()) return e.size() == a.size() ? "" : "empty table";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i >= a.size()) return "missing row " + e[i][0];
        for (size_t j = 0; j < e[i].size(); ++j) {
            std::string got = j < a[i].size() ? a[i][j] : "<missing>";
            if (got == e[i][j]) continue;
            if (i == 0 || j == 0) return "header mismatch at " + e[i][j] + ": got " + got;
            return "cell (" + e[i][0] + "," + e[0][j] + "): expected " + e[i][j] + ", got " + got;
        }
        if (a[i].size() != e[i].size()) return "row " + e[i][0] + " has extra cells";
    }
    if (a.size() != e.size()) return "extra rows";
    return "";
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
    struct Entry {
        int id;
        const char* title;
        double budget;
        std::function<std::string(const AcceptanceOptions&)> fn;
    };
    const std::vector<Entry> all = {
        {1, "table reproduction", 1, criterion_tables},
        {2, "axiom suite", 30, criterion_axioms},
        {3, "canonical isomorphisms", 60, criterion_isomorphisms},
        {4, "non-isomorphism certificates", 5, criterion_non_iso},
        {5, "surjectivity of ad_X", 60, criterion_surjectivity},
        {6, "strong bracket generation", 30, criterion_sbg},
        {7, "direct sums", 10, criterion_sums},
        {8, "general H-type spot check", 10, criterion_general_htype},
    };
    std::vector<CriterionResult> out;
    for (const auto& e : all) {
        if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), e.id) == opt.only.end()) continue;
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r{e.id, e.title, true, "", 0, e.budget};
        try {
            r.detail = e.fn(opt);
        } catch (const std::exception& ex) {
            r.ok = false;
            r.detail = ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.ok && r.seconds > r.budget) {
            r.ok = false;
            r.detail += " (over the time budget)";
        }
        out.push_back(r);
    }
    return out;
}

std::string format_result(const CriterionResult& r) {
    char t[64];
    std::snprintf(t, sizeof t, "%.2f s / %.0f s", r.seconds, r.budget);
    return std::string(r.ok ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + " (" + r.title + "): " +
           r.detail + " [" + t + "]";
}

}  // namespace phtype
