#include "phtype/catalog.hpp"

#include <map>
#include <mutex>

namespace phtype {

namespace {

// one literal cell: [v_row, v_col] = sign(k) Z_|k|, all 1-based
struct Cell {
    int row;
    int col;
    int k;
};

using Grid = std::vector<std::vector<int>>;

std::vector<Cell> block(const std::vector<int>& rows, const std::vector<int>& cols, const Grid& g) {
    std::vector<Cell> out;
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            if (g[i][j]) out.push_back({rows[i], cols[j], g[i][j]});
    return out;
}

std::vector<int> range(int a, int b) {
    std::vector<int> v;
    for (int i = a; i <= b; ++i) v.push_back(i);
    return v;
}

const Grid kN20 = {{1, 2}, {-2, 1}};

const Grid kN40 = {
    {1, 2, 3, 4},
    {2, -1, -4, 3},
    {3, 4, -1, -2},
    {4, -3, 2, -1},
};

const Grid kN04 = {
    {1, 2, 3, 4},
    {-2, 1, 4, -3},
    {-3, -4, 1, 2},
    {-4, 3, -2, 1},
};

const Grid kN11 = {{1, 2}, {-2, -1}};

const Grid kN22 = {
    {1, 2, 3, 4},
    {2, -1, 4, -3},
    {3, -4, 1, -2},
    {4, 3, 2, 1},
};

// n_{3,2}: center printed as Z_0..Z_4, stored here shifted by one
const std::vector<Cell> kN32 = {
    {1, 4, -1}, {1, 2, 2},  {1, 3, 3},  {1, 5, 4},  {1, 6, 5},
    {4, 1, 1},  {4, 2, 3},  {4, 3, -2}, {4, 5, 5},  {4, 6, -4},
    {7, 8, -1}, {7, 2, 4},  {7, 3, -5}, {7, 5, 2},  {7, 6, -3},
    {8, 7, 1},  {8, 2, 5},  {8, 3, 4},  {8, 5, 3},  {8, 6, 2},
    {2, 3, -1}, {3, 2, 1},  {5, 6, 1},  {6, 5, -1},
};

const std::vector<Cell> kN23 = {
    {1, 8, 5},  {1, 2, 1},  {1, 3, 2},  {1, 5, 3},  {1, 6, 4},
    {4, 7, -5}, {4, 2, 2},  {4, 3, -1}, {4, 5, 4},  {4, 6, -3},
    {7, 4, 5},  {7, 2, 3},  {7, 3, -4}, {7, 5, 1},  {7, 6, -2},
    {8, 1, -5}, {8, 2, 4},  {8, 3, 3},  {8, 5, 2},  {8, 6, 1},
    {2, 6, 5},  {3, 5, 5},  {5, 3, -5}, {6, 2, -5},
};

const std::vector<Cell> kN33 = {
    {1, 2, 1},  {1, 6, 6},  {1, 3, 2},  {1, 4, 3},  {1, 7, 4},  {1, 8, 5},
    {2, 1, -1}, {2, 5, -6}, {2, 3, -3}, {2, 4, 2},  {2, 7, -5}, {2, 8, 4},
    {5, 2, 6},  {5, 6, 1},  {5, 3, 5},  {5, 4, 4},  {5, 7, 3},  {5, 8, 2},
    {6, 1, -6}, {6, 5, -1}, {6, 3, 4},  {6, 4, -5}, {6, 7, 2},  {6, 8, -3},
    {3, 1, -2}, {3, 2, 3},  {3, 5, -5}, {3, 6, -4}, {3, 4, -1}, {3, 7, 6},
    {4, 1, -3}, {4, 2, -2}, {4, 5, -4}, {4, 6, 5},  {4, 3, 1},  {4, 8, -6},
    {7, 1, -4}, {7, 2, 5},  {7, 5, -3}, {7, 6, -2}, {7, 3, -6}, {7, 8, 1},
    {8, 1, -5}, {8, 2, -4}, {8, 5, -2}, {8, 6, 3},  {8, 4, 6},  {8, 7, -1},
};

const Grid kN80 = {
    {1, 2, 3, 4, 5, 6, 7, 8},
    {2, -1, -4, 3, -6, 5, -8, 7},
    {3, 4, -1, -2, 8, 7, -6, -5},
    {4, -3, 2, -1, 7, -8, -5, 6},
    {5, 6, -8, -7, -1, -2, 4, 3},
    {6, -5, -7, 8, 2, -1, 3, -4},
    {7, 8, 6, 5, -4, -3, -1, -2},
    {8, -7, 5, -6, -3, 4, 2, -1},
};

const Grid kN08 = {
    {1, 2, 3, 4, 5, 6, 7, 8},
    {-2, 1, 4, -3, 6, -5, 8, -7},
    {-3, -4, 1, 2, -8, -7, 6, 5},
    {-4, 3, -2, 1, -7, 8, 5, -6},
    {-5, -6, 8, 7, 1, 2, -4, -3},
    {-6, 5, 7, -8, -2, 1, -3, 4},
    {-7, -8, -6, -5, 4, 3, 1, 2},
    {-8, 7, -5, 6, 3, -4, -2, 1},
};

const Grid kN44 = {
    {1, 2, 3, 4, 5, 6, 7, 8},
    {2, -1, -4, 3, 6, -5, 8, -7},
    {3, 4, -1, -2, 8, 7, -6, -5},
    {4, -3, 2, -1, -7, 8, 5, -6},
    {5, -6, -8, 7, 1, -2, 4, -3},
    {6, 5, -7, -8, 2, 1, -3, -4},
    {7, -8, 6, -5, -4, 3, 1, -2},
    {8, 7, 5, 6, 3, 4, 2, 1},
};

const std::vector<int> kRows44 = {1, 6, 7, 8, 13, 14, 15, 16};
const std::vector<int> kCols44 = {2, 3, 4, 5, 9, 10, 11, 12};

struct Recipe {
    Signature sig;
    int dim_v;
    bool neutral;
    std::string vname;
    std::string zname;
    int zfirst;
    std::vector<Cell> cells;
    std::vector<int> a_part;  // 1-based, empty when the table is not of block type
    std::vector<int> order;   // printed order, 1-based
    std::string note;
};

std::vector<Recipe> recipes() {
    std::vector<Recipe> rs;
    auto add = [&](Recipe r) { rs.push_back(std::move(r)); };
    add({{1, 0}, 2, false, "w", "Z", 1, {{1, 2, 1}}, {1}, {}, ""});
    add({{0, 1}, 2, true, "w", "Z", 1, {{1, 2, 1}}, {1}, {}, ""});
    add({{2, 0}, 4, false, "w", "Z", 1, block({1, 2}, {3, 4}, kN20), {1, 2}, {}, ""});
    add({{0, 2}, 4, true, "w", "Z", 1, block({1, 2}, {3, 4}, kN20), {1, 2}, {}, ""});
    add({{4, 0}, 8, false, "w", "Z", 1, block(range(1, 4), range(5, 8), kN40), range(1, 4), {}, ""});
    add({{0, 4}, 8, true, "w~", "Z~", 1, block(range(1, 4), range(5, 8), kN04), range(1, 4), {}, ""});
    add({{8, 0}, 16, false, "u", "Z", 1, block(range(1, 8), range(9, 16), kN80), range(1, 8), {}, ""});
    add({{0, 8}, 16, true, "v", "Z~", 1, block(range(1, 8), range(9, 16), kN08), range(1, 8), {}, ""});
    add({{1, 1}, 4, true, "w", "Z", 1, block({1, 4}, {2, 3}, kN11), {1, 4}, {1, 4, 2, 3}, ""});
    add({{2, 2}, 8, true, "w", "Z", 1, block({1, 4, 7, 8}, {2, 3, 5, 6}, kN22), {1, 4, 7, 8},
         {1, 4, 7, 8, 2, 3, 5, 6}, ""});
    add({{3, 2}, 8, true, "w", "Z", 0, kN32, {}, {1, 4, 7, 8, 2, 3, 5, 6}, ""});
    add({{2, 3}, 8, true, "w", "Z", 1, kN23, {}, {1, 4, 7, 8, 2, 3, 5, 6},
         "bars on basis labels dropped (w = w-bar, Z = Z-bar)"});
    add({{3, 3}, 8, true, "w", "Z", 1, kN33, {}, {1, 2, 5, 6, 3, 4, 7, 8}, ""});
    add({{4, 4}, 16, true, "y", "Z", 1, block(kRows44, kCols44, kN44), {1, 6, 7, 8, 13, 14, 15, 16},
         {1, 6, 7, 8, 13, 14, 15, 16, 2, 3, 4, 5, 9, 10, 11, 12}, ""});
    return rs;
}

const Recipe& recipe(Signature id) {
    static const std::vector<Recipe> all = recipes();
    for (const auto& r : all)
        if (r.sig == id) return r;
    throw UnsupportedSignature("n_" + id.str() + " has no commutator table; supported: " + catalog_list());
}

std::string label(const std::string& name, int index) {
    // decoration goes after the index: w1~, Z8~
    if (!name.empty() && name.back() == '~') return name.substr(0, name.size() - 1) + std::to_string(index) + "~";
    return name + std::to_string(index);
}

AlgebraPtr build(const Recipe& r) {
    StructureTensor t(r.dim_v, r.sig.dim());
    for (const auto& c : r.cells) {
        int i = c.row - 1, j = c.col - 1, k = std::abs(c.k) - 1, sg = c.k > 0 ? 1 : -1;
        if (auto existing = [&]() -> std::optional<BracketCell> {
                for (const auto& x : t.row(i))
                    if (x.col == j) return x;
                return std::nullopt;
            }()) {
            if (existing->k != k || existing->sign != sg)
                throw std::logic_error("catalog literal inconsistent for n_" + r.sig.str());
            continue;
        }
        t.set_pair(i, j, k, sg);
    }
    Metric m(r.dim_v, 1);
    if (r.neutral)
        for (int i = r.dim_v / 2; i < r.dim_v; ++i) m[i] = -1;
    std::vector<std::string> vl, zl;
    for (int i = 1; i <= r.dim_v; ++i) vl.push_back(label(r.vname, i));
    for (int k = 0; k < r.sig.dim(); ++k) zl.push_back(label(r.zname, k + r.zfirst));
    Provenance p;
    p.kind = Provenance::Kind::BASE;
    p.base = r.sig;
    std::optional<Partition> part;
    if (!r.a_part.empty()) {
        part = Partition(r.dim_v, 1);
        for (int i : r.a_part) (*part)[i - 1] = 0;
    }
    return std::make_shared<const Algebra>(r.sig, m, std::move(t), vl, zl, p, part);
}

}  // namespace

const std::vector<Signature>& catalog_ids() {
    static const std::vector<Signature> ids = {{1, 0}, {0, 1}, {2, 0}, {0, 2}, {4, 0}, {0, 4}, {8, 0},
                                               {0, 8}, {1, 1}, {2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 4}};
    return ids;
}

bool is_catalog_id(Signature id) {
    for (auto s : catalog_ids())
        if (s == id) return true;
    return false;
}

std::string catalog_list() {
    std::string s;
    for (auto id : catalog_ids()) s += (s.empty() ? "" : " ") + id.str();
    return s;
}

AlgebraPtr base_algebra(Signature id) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, AlgebraPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(id.pos, id.neg);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto a = build(recipe(id));
    cache.emplace(key, a);
    return a;
}

std::vector<int> table_order(Signature id) {
    const Recipe& r = recipe(id);
    std::vector<int> o;
    if (r.order.empty())
        for (int i = 0; i < r.dim_v; ++i) o.push_back(i);
    else
        for (int i : r.order) o.push_back(i - 1);
    return o;
}

std::string table_note(Signature id) { return recipe(id).note; }

std::uint64_t tensor_checksum(const Algebra& a) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](long v) {
        for (int b = 0; b < 8; ++b) {
            h ^= static_cast<std::uint64_t>((v >> (8 * b)) & 0xff);
            h *= 1099511628211ull;
        }
    };
    mix(a.r());
    mix(a.s());
    for (int e : a.module_metric()) mix(e);
    for (const auto& e : a.structure().entries()) {
        mix(e.i);
        mix(e.j);
        mix(e.k);
        mix(e.sign);
    }
    return h;
}

long long min_module_dim(int r, int s) {
    static const std::map<std::pair<int, int>, long long> base = {
        {{1, 0}, 2},  {{2, 0}, 4},  {{3, 0}, 4},  {{4, 0}, 8},  {{5, 0}, 8},  {{6, 0}, 8},  {{7, 0}, 8},
        {{8, 0}, 16}, {{0, 1}, 2},  {{0, 2}, 4},  {{0, 3}, 8},  {{0, 4}, 8},  {{0, 5}, 16}, {{0, 6}, 16},
        {{0, 7}, 16}, {{0, 8}, 16}, {{1, 1}, 4},  {{2, 2}, 8},  {{3, 2}, 8},  {{2, 3}, 8},  {{3, 3}, 8},
        {{4, 4}, 16},
    };
    if (r < 0 || s < 0) throw std::domain_error("negative signature");
    auto it = base.find({r, s});
    if (it != base.end()) return it->second;
    if (r >= 8) {
        try {
            return 16 * min_module_dim(r - 8, s);
        } catch (const std::domain_error&) {
        }
    }
    if (s >= 8) {
        try {
            return 16 * min_module_dim(r, s - 8);
        } catch (const std::domain_error&) {
        }
    }
    if (r >= 4 && s >= 4) {
        try {
            return 16 * min_module_dim(r - 4, s - 4);
        } catch (const std::domain_error&) {
        }
    }
    throw std::domain_error("minimal module dimension of (" + std::to_string(r) + "," + std::to_string(s) +
                            ") is not reducible to a known base entry");
}

}  // namespace phtype
