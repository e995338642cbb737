#include "doctest.h"

#include "phtype/acceptance.hpp"
#include "phtype/catalog.hpp"
#include "phtype/tables.hpp"

#include <fstream>
#include <map>
#include <sstream>

using namespace phtype;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::pair<int, int> bracket_of(const Algebra& a, const std::string& x, const std::string& y) {
    auto b = a.basis_bracket(a.find_v_label(x), a.find_v_label(y));
    REQUIRE(b);
    return *b;
}

}  // namespace

TEST_CASE("catalog entries from the printed tables") {
    auto n32 = base_algebra({3, 2});
    auto [k1, s1] = bracket_of(*n32, "w1", "w4");
    CHECK(n32->z_labels()[k1] == "Z0");
    CHECK(s1 == -1);
    auto n23 = base_algebra({2, 3});
    auto [k2, s2] = bracket_of(*n23, "w1", "w8");
    CHECK(n23->z_labels()[k2] == "Z5");
    CHECK(s2 == 1);
    auto n33 = base_algebra({3, 3});
    auto [k3, s3] = bracket_of(*n33, "w5", "w3");
    CHECK(n33->z_labels()[k3] == "Z5");
    CHECK(s3 == 1);
    CHECK_THROWS_AS(base_algebra({3, 0}), UnsupportedSignature);
}

TEST_CASE("catalog id list") {
    CHECK(catalog_ids().size() == 14);
    CHECK(is_catalog_id({4, 4}));
    CHECK_FALSE(is_catalog_id({3, 0}));
    CHECK(catalog_list().find("(3,3)") != std::string::npos);
}

TEST_CASE("minimal module dimensions") {
    CHECK(min_module_dim(3, 0) == 4);
    CHECK(min_module_dim(0, 3) == 8);
    CHECK(min_module_dim(8, 0) == 16);
    CHECK(min_module_dim(9, 8) == 512);
    CHECK_THROWS_AS(min_module_dim(-1, 0), std::domain_error);
    for (auto id : catalog_ids()) CHECK(min_module_dim(id.pos, id.neg) == base_algebra(id)->dim_v());
    for (int r = 0; r < 5; ++r)
        for (int s = 0; s < 5; ++s) {
            if (r + s == 0) continue;
            long long d;
            try {
                d = min_module_dim(r, s);
            } catch (const std::domain_error&) {
                continue;
            }
            CHECK(min_module_dim(r + 8, s) == 16 * d);
            CHECK(min_module_dim(r, s + 8) == 16 * d);
            CHECK(min_module_dim(r + 4, s + 4) == 16 * d);
        }
}

TEST_CASE("n_(8,0) and n_(0,8) agree after transport") {
    auto a = base_algebra({8, 0});
    auto b = base_algebra({0, 8});
    // u_i -> -v_i for i = 2..8, u_i -> v_i otherwise, Z_k -> Z~_k
    auto sg = [](int i) { return i >= 1 && i <= 7 ? -1 : 1; };
    for (const auto& e : a->structure().entries()) {
        auto t = b->basis_bracket(e.i, e.j);
        REQUIRE(t);
        CHECK(t->first == e.k);
        CHECK(t->second == e.sign * sg(e.i) * sg(e.j));
    }
    CHECK(a->structure().nonzero_count() == b->structure().nonzero_count());
}

TEST_CASE("J-operators of n_(8,0) reproduce the permutation table") {
    auto n80 = base_algebra({8, 0});
    for (const auto& g : golden_tables()) {
        if (g.name != "j80") continue;
        CHECK(render_j_table(*n80, TableFormat::CSV) == g.csv);
        int cells = 0;
        auto js = j_operators(*n80);
        CHECK(js.size() == 8);
        for (const auto& j : js) cells += j.size();
        CHECK(cells == 128);
    }
}

TEST_CASE("checksums lock the transcribed tables") {
    const std::map<std::pair<int, int>, std::uint64_t> pinned = {
        {{1, 0}, 0xd46e4b44b891b1dbull}, {{0, 1}, 0xb3d8688f95aaee12ull}, {{2, 0}, 0x510f1cd2912e13e1ull},
        {{0, 2}, 0x5c238e7b7d021831ull}, {{4, 0}, 0xb8bb085f68c400c7ull}, {{0, 4}, 0x4a3c0fa64347b0e7ull},
        {{8, 0}, 0x7075c591d4533b8bull}, {{0, 8}, 0x6459e6ba2134cf4bull}, {{1, 1}, 0xddc5048ac2e90d53ull},
        {{2, 2}, 0x3030e03e2f4e7d63ull}, {{3, 2}, 0x1ff2a415b21aae02ull}, {{2, 3}, 0xf0e850991e96cba2ull},
        {{3, 3}, 0x8ffdad7a0ae79703ull}, {{4, 4}, 0xe009ef43c5089523ull},
    };
    for (auto id : catalog_ids()) {
        INFO(id.str());
        CHECK(tensor_checksum(*base_algebra(id)) == pinned.at({id.pos, id.neg}));
    }
}

TEST_CASE("embedded golden tables match the fixture files") {
    CHECK(golden_tables().size() == 13);
    for (const auto& g : golden_tables()) {
        INFO(g.name);
        CHECK(read_file(std::string(PHTYPE_TABLE_DIR) + "/" + g.name + ".csv") == g.csv);
    }
}

TEST_CASE("rendered tables equal the printed ones") {
    for (const auto& g : golden_tables()) {
        if (g.name[0] != 'n') continue;
        Signature id{g.name[1] - '0', g.name[2] - '0'};
        INFO(g.name);
        CHECK(diff_csv(g.csv, render_table(*base_algebra(id), TableFormat::CSV)) == "");
    }
}

TEST_CASE("display order is a permutation") {
    for (auto id : catalog_ids()) {
        auto ord = table_order(id);
        std::vector<int> seen(base_algebra(id)->dim_v(), 0);
        for (int i : ord) ++seen.at(i);
        for (int c : seen) CHECK(c == 1);
    }
    CHECK(table_note({2, 3}).find("bar") != std::string::npos);
    CHECK(table_note({3, 2}).empty());
}
