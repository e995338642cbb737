#include "doctest.h"

#include "phtype/acceptance.hpp"
#include "phtype/catalog.hpp"
#include "phtype/check.hpp"
#include "phtype/extension.hpp"
#include "phtype/serialize.hpp"
#include "phtype/tables.hpp"

#include <array>
#include <cstdio>
#include <sys/wait.h>

using namespace phtype;

namespace {

struct Run {
    int code;
    std::string out;
};

Run cli(const std::string& args) {
    std::string cmd = std::string(PHTYPE_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("json round trip") {
    for (auto id : catalog_ids()) {
        auto a = base_algebra(id);
        auto j = algebra_to_json(*a);
        auto b = algebra_from_json(Json::parse(j.dump()));
        INFO(id.str());
        CHECK(b->structure() == a->structure());
        CHECK(b->module_metric() == a->module_metric());
        CHECK(b->v_labels() == a->v_labels());
        CHECK(tensor_checksum(*b) == tensor_checksum(*a));
    }
    auto e = construct(9, 8);
    auto j = algebra_to_json(*e);
    CHECK(j["signature"] == Json::array({9, 8}));
    CHECK(j["dim_v"] == 512);
    CHECK(algebra_from_json(j)->structure() == e->structure());
    CHECK(algebra_to_json(*base_algebra({8, 0}))["structure"].size() == 128);
}

TEST_CASE("table rendering is deterministic") {
    for (auto id : catalog_ids()) {
        auto a = base_algebra(id);
        CHECK(render_table(*a, TableFormat::CSV) == render_table(*base_algebra(id), TableFormat::CSV));
        CHECK(render_table(*a, TableFormat::MD) == render_table(*a, TableFormat::MD));
    }
    CHECK_THROWS(parse_table_format("html"));
}

TEST_CASE("check certificates") {
    auto c = check_isomorphism({3, 2}, {2, 3});
    CHECK(c.kind == CertificateKind::NOT_ISO_PARITY);
    CHECK(verify_certificate(c));
    CHECK(exit_code(c) == 1);
    CHECK(check_isomorphism({3, 0}, {0, 3}).kind == CertificateKind::NOT_ISO_DIM);
    CHECK(check_isomorphism({2, 0}, {1, 1}).kind == CertificateKind::NOT_ISO_SIGNATURE);
    auto iso = check_isomorphism({4, 0}, {0, 4});
    CHECK(iso.kind == CertificateKind::ISO);
    CHECK(verify_certificate(iso));
    CHECK(exit_code(iso) == 0);
    CheckOptions aa{true, true, 1};
    CHECK(check_isomorphism({3, 3}, {3, 3}, aa).kind == CertificateKind::NOT_ISO_PARITY);
    CHECK(check_isomorphism({1, 1}, {1, 1}, aa).kind == CertificateKind::ISO);
    auto j = certificate_to_json(c);
    CHECK(j["kind"] == "NOT_ISO_PARITY");
}

TEST_CASE("command line") {
    auto b = cli("build 8 0");
    CHECK(b.code == 0);
    CHECK(Json::parse(b.out)["structure"].size() == 128);

    auto t = cli("table 0 8 --format csv");
    CHECK(t.code == 0);
    CHECK(t.out == cli("table 0 8 --format csv").out);
    CHECK(t.out.find("Z8~") != std::string::npos);

    CHECK(cli("check 4 0 0 4").code == 0);
    auto np = cli("check 3 2 2 3 --format text");
    CHECK(np.code == 1);
    CHECK(np.out.rfind("NOT_ISO_PARITY", 0) == 0);
    CHECK(cli("check 3 0 0 3").code == 1);
    CHECK(cli("check 7 7 7 7 --auto --anti").code == 2);

    auto s = cli("sbg 1 1 --format text");
    CHECK(s.code == 0);
    CHECK(s.out.rfind("SBG_NO", 0) == 0);
    CHECK(cli("sbg 0 3 --format text").out.rfind("SBG_YES", 0) == 0);
    CHECK(cli("sbg 2 3 --sum 2 1 --format text").out.rfind("SBG_NO", 0) == 0);

    auto e = cli("extend 1 0 8,0");
    CHECK(Json::parse(e.out)["signature"] == Json::array({9, 0}));
    CHECK(cli("build 3 0").code == 3);
    CHECK(cli("table 1 0 --format json").code == 3);
}

TEST_CASE("verify-paper quick") {
    auto r = cli("verify-paper --quick");
    CHECK(r.code == 0);
    int passes = 0;
    for (size_t p = r.out.find("PASS criterion"); p != std::string::npos; p = r.out.find("PASS criterion", p + 1)) ++passes;
    CHECK(passes == 8);
}

TEST_CASE("a corrupted catalog entry fails table reproduction") {
    auto a = base_algebra({3, 2});
    StructureTensor t = a->structure();
    int w1 = a->find_v_label("w1"), w2 = a->find_v_label("w2");
    auto cell = a->basis_bracket(w1, w2);
    REQUIRE(cell);
    t.set_entry(w1, w2, cell->first, -cell->second);
    auto bad = std::make_shared<const Algebra>(a->center_sig(), a->module_metric(), t, a->v_labels(), a->z_labels(),
                                               a->provenance(), a->pinned_partition());
    AcceptanceOptions opt;
    opt.quick = true;
    opt.only = {1};
    opt.catalog_override = {{Signature{3, 2}, bad}};
    auto res = run_acceptance(opt);
    REQUIRE(res.size() == 1);
    CHECK_FALSE(res[0].ok);
    CHECK(res[0].detail.find("cell (w1,w2)") != std::string::npos);

    opt.catalog_override.clear();
    CHECK(run_acceptance(opt)[0].ok);
}

TEST_CASE("csv diff") {
    CHECK(diff_csv("a,b\nx,1\n", "a,b\nx,1\n").empty());
    CHECK(diff_csv("a,b\nx,1\n", "a,b\nx,2\n") == "cell (x,b): expected 1, got 2");
}
