#include "phtype/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace phtype {

SignedPermutation SignedPermutation::identity(int n) {
    SignedPermutation p;
    p.image.resize(n);
    p.sign.assign(n, 1);
    for (int i = 0; i < n; ++i) p.image[i] = i;
    return p;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& inner) const {
    if (inner.size() != size()) throw std::invalid_argument("compose: size mismatch");
    SignedPermutation r;
    r.image.resize(size());
    r.sign.resize(size());
    for (int a = 0; a < size(); ++a) {
        int b = inner.image[a];
        r.image[a] = image[b];
        r.sign[a] = inner.sign[a] * sign[b];
    }
    return r;
}

SignedPermutation SignedPermutation::inverse() const {
    SignedPermutation r;
    r.image.assign(size(), -1);
    r.sign.assign(size(), 1);
    for (int a = 0; a < size(); ++a) {
        r.image[image[a]] = a;
        r.sign[image[a]] = sign[a];
    }
    return r;
}

SignedPermutation SignedPermutation::negated() const {
    SignedPermutation r = *this;
    for (int& s : r.sign) s = -s;
    return r;
}

bool SignedPermutation::is_permutation() const {
    std::vector<bool> seen(size(), false);
    for (int b : image) {
        if (b < 0 || b >= size() || seen[b]) return false;
        seen[b] = true;
    }
    return true;
}

ExactMatrix SignedPermutation::to_matrix() const {
    ExactMatrix m(size(), size());
    for (int a = 0; a < size(); ++a) m(image[a], a) = sign[a];
    return m;
}

ExactVector SignedPermutation::apply(const ExactVector& x) const {
    ExactVector y(size());
    for (int a = 0; a < size(); ++a)
        if (sgn(x[a]) != 0) y[image[a]] += sign[a] * x[a];
    return y;
}

StructureTensor::StructureTensor(int dim_v, int dim_z) : dim_v_(dim_v), dim_z_(dim_z), rows_(dim_v) {}

void StructureTensor::set_pair(int i, int j, int k, int sign) {
    set_entry(i, j, k, sign);
    set_entry(j, i, k, -sign);
}

void StructureTensor::set_entry(int i, int j, int k, int sign) {
    auto& row = rows_.at(i);
    row.erase(std::remove_if(row.begin(), row.end(), [j](const BracketCell& c) { return c.col == j; }),
              row.end());
    add_entry(i, j, k, sign);
}

void StructureTensor::add_entry(int i, int j, int k, int sign) {
    if (j < 0 || j >= dim_v_ || k < 0 || k >= dim_z_)
        throw std::out_of_range("structure entry index out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("structure constants must be +1 or -1");
    auto& row = rows_.at(i);
    BracketCell c{j, k, sign};
    auto pos = std::lower_bound(row.begin(), row.end(), c, [](const BracketCell& a, const BracketCell& b) {
        return a.col != b.col ? a.col < b.col : a.k < b.k;
    });
    row.insert(pos, c);
}

std::vector<StructureEntry> StructureTensor::entries() const {
    std::vector<StructureEntry> out;
    for (int i = 0; i < dim_v_; ++i)
        for (const auto& c : rows_[i]) out.push_back({i, c.col, c.k, c.sign});
    return out;
}

size_t StructureTensor::nonzero_count() const {
    size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

bool StructureTensor::operator==(const StructureTensor& o) const {
    return dim_v_ == o.dim_v_ && dim_z_ == o.dim_z_ && entries() == o.entries();
}

const char* to_string(StepKind k) {
    switch (k) {
        case StepKind::BY_8_0: return "8,0";
        case StepKind::BY_0_8: return "0,8";
        default: return "4,4";
    }
}

StepKind parse_step(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '(' && c != ')') t += c;
    if (t == "8,0" || t == "BY_8_0") return StepKind::BY_8_0;
    if (t == "0,8" || t == "BY_0_8") return StepKind::BY_0_8;
    if (t == "4,4" || t == "BY_4_4") return StepKind::BY_4_4;
    throw std::invalid_argument("unknown extension step '" + s + "' (expected 8,0 / 0,8 / 4,4)");
}

StepKind swapped(StepKind k) {
    switch (k) {
        case StepKind::BY_8_0: return StepKind::BY_0_8;
        case StepKind::BY_0_8: return StepKind::BY_8_0;
        default: return StepKind::BY_4_4;
    }
}

Algebra::Algebra(Signature center, Metric module_metric, StructureTensor structure,
                 std::vector<std::string> v_labels, std::vector<std::string> z_labels, Provenance provenance,
                 std::optional<Partition> pinned)
    : center_(center),
      metric_(std::move(module_metric)),
      tensor_(std::move(structure)),
      v_labels_(std::move(v_labels)),
      z_labels_(std::move(z_labels)),
      prov_(std::move(provenance)),
      pinned_(std::move(pinned)) {
    if (tensor_.dim_v() != dim_v() || tensor_.dim_z() != dim_z())
        throw std::invalid_argument("structure tensor shape does not match the signature");
    if (v_labels_.size() != metric_.size() || static_cast<int>(z_labels_.size()) != dim_z())
        throw std::invalid_argument("basis label count mismatch");
    if (pinned_ && static_cast<int>(pinned_->size()) != dim_v())
        throw std::invalid_argument("partition size mismatch");
}

std::optional<std::pair<int, int>> Algebra::basis_bracket(int i, int j) const {
    for (const auto& c : tensor_.row(i))
        if (c.col == j) return std::make_pair(c.k, c.sign);
    return std::nullopt;
}

int Algebra::find_v_label(const std::string& label) const {
    for (int i = 0; i < dim_v(); ++i)
        if (v_labels_[i] == label) return i;
    throw std::invalid_argument("no basis vector labelled " + label);
}

ExactVector bracket(const Algebra& a, const ExactVector& x, const ExactVector& y) {
    if (static_cast<int>(x.size()) != a.dim_v() || static_cast<int>(y.size()) != a.dim_v())
        throw std::invalid_argument("bracket: length mismatch");
    ExactVector z(a.dim_z());
    for (int i = 0; i < a.dim_v(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (const auto& c : a.structure().row(i)) {
            if (sgn(y[c.col]) == 0) continue;
            Rational t = x[i] * y[c.col];
            if (c.sign > 0)
                z[c.k] += t;
            else
                z[c.k] -= t;
        }
    }
    return z;
}

namespace {

std::string vlabel(const Algebra& a, int i) { return a.v_labels().at(i); }

}  // namespace

SignedPermutation j_operator(const Algebra& a, int k) {
    if (k < 1 || k > a.dim_z()) throw std::out_of_range("j_operator: center index out of range");
    int kk = k - 1;
    int ez = a.center_metric()[kk];
    const Metric& ev = a.module_metric();
    SignedPermutation p;
    p.image.assign(a.dim_v(), -1);
    p.sign.assign(a.dim_v(), 0);
    for (int al = 0; al < a.dim_v(); ++al) {
        for (const auto& c : a.structure().row(al)) {
            if (c.k != kk) continue;
            if (p.image[al] >= 0)
                throw IntegralBasisError("integral basis violated: (Z" + std::to_string(k) + ", " +
                                         vlabel(a, al) + ") has more than one partner");
            p.image[al] = c.col;
            // eps^v_b B = eps^z_k A
            p.sign[al] = ez * c.sign * ev[c.col];
        }
        if (p.image[al] < 0)
            throw IntegralBasisError("integral basis violated: (Z" + std::to_string(k) + ", " + vlabel(a, al) +
                                     ") has no partner");
    }
    if (!p.is_permutation())
        throw IntegralBasisError("integral basis violated: J_" + std::to_string(k) + " is not a permutation");
    return p;
}

std::vector<SignedPermutation> j_operators(const Algebra& a) {
    std::vector<SignedPermutation> js;
    js.reserve(a.dim_z());
    for (int k = 1; k <= a.dim_z(); ++k) js.push_back(j_operator(a, k));
    return js;
}

ExactMatrix j_matrix(const Algebra& a, const ExactVector& z) {
    if (static_cast<int>(z.size()) != a.dim_z()) throw std::invalid_argument("j_matrix: length mismatch");
    ExactMatrix m(a.dim_v(), a.dim_v());
    for (int k = 0; k < a.dim_z(); ++k) {
        if (sgn(z[k]) == 0) continue;
        SignedPermutation j = j_operator(a, k + 1);
        for (int al = 0; al < a.dim_v(); ++al) m(j.image[al], al) += j.sign[al] * z[k];
    }
    return m;
}

StructureTensor structure_from_j(const Algebra& a, const std::vector<SignedPermutation>& js) {
    StructureTensor t(a.dim_v(), a.dim_z());
    Metric ez = a.center_metric();
    for (int k = 0; k < a.dim_z(); ++k)
        for (int al = 0; al < a.dim_v(); ++al) {
            int b = js[k].image[al];
            t.add_entry(al, b, k, ez[k] * js[k].sign[al] * a.module_metric()[b]);
        }
    return t;
}

VerifyResult verify_antisymmetry(const Algebra& a) {
    const auto& t = a.structure();
    for (int i = 0; i < a.dim_v(); ++i)
        for (const auto& c : t.row(i)) {
            if (c.col == i) return VerifyResult::fail("[" + vlabel(a, i) + "," + vlabel(a, i) + "] != 0");
            bool found = false;
            for (const auto& d : t.row(c.col))
                if (d.col == i && d.k == c.k && d.sign == -c.sign) found = true;
            if (!found)
                return VerifyResult::fail("antisymmetry fails at (" + vlabel(a, i) + "," + vlabel(a, c.col) +
                                          ", Z" + std::to_string(c.k + 1) + ")");
        }
    return VerifyResult::pass();
}

VerifyResult verify_integral_basis(const Algebra& a) {
    const auto& t = a.structure();
    for (int i = 0; i < a.dim_v(); ++i) {
        const auto& row = t.row(i);
        for (size_t x = 1; x < row.size(); ++x)
            if (row[x].col == row[x - 1].col)
                return VerifyResult::fail("[" + vlabel(a, i) + "," + vlabel(a, row[x].col) +
                                          "] involves more than one center vector");
    }
    try {
        j_operators(a);
    } catch (const IntegralBasisError& e) {
        return VerifyResult::fail(e.what());
    }
    return VerifyResult::pass();
}

VerifyResult verify_clifford(const Algebra& a) {
    std::vector<SignedPermutation> js;
    try {
        js = j_operators(a);
    } catch (const IntegralBasisError& e) {
        return VerifyResult::fail(e.what());
    }
    Metric ez = a.center_metric();
    for (int k = 0; k < a.dim_z(); ++k)
        for (int m = k; m < a.dim_z(); ++m)
            for (int al = 0; al < a.dim_v(); ++al) {
                // J_k J_m v_al and J_m J_k v_al as signed basis vectors
                int b1 = js[m].image[al], s1 = js[m].sign[al];
                int c1 = js[k].image[b1], t1 = s1 * js[k].sign[b1];
                int b2 = js[k].image[al], s2 = js[k].sign[al];
                int c2 = js[m].image[b2], t2 = s2 * js[m].sign[b2];
                bool ok;
                if (k == m)
                    ok = c1 == al && t1 == -ez[k];
                else
                    ok = c1 == c2 && t1 == -t2;
                if (!ok) {
                    std::ostringstream w;
                    w << "J_" << k + 1 << "J_" << m + 1 << " + J_" << m + 1 << "J_" << k + 1
                      << " != -2<Z_" << k + 1 << ",Z_" << m + 1 << "> Id at " << vlabel(a, al);
                    return VerifyResult::fail(w.str());
                }
            }
    return VerifyResult::pass();
}

VerifyResult verify_admissible(const Algebra& a) {
    std::vector<SignedPermutation> js;
    try {
        js = j_operators(a);
    } catch (const IntegralBasisError& e) {
        return VerifyResult::fail(e.what());
    }
    const Metric& ev = a.module_metric();
    for (int k = 0; k < a.dim_z(); ++k) {
        const auto& j = js[k];
        for (int al = 0; al < a.dim_v(); ++al) {
            int b = j.image[al];
            // <J v_al, v_b> = sign_al eps_b ; <v_al, J v_b> = sign_b eps_al [J v_b ~ v_al]
            bool ok = j.image[b] == al && j.sign[al] * ev[b] == -j.sign[b] * ev[al];
            if (!ok)
                return VerifyResult::fail("<J_" + std::to_string(k + 1) + " " + vlabel(a, al) + ", " +
                                          vlabel(a, b) + "> != -<" + vlabel(a, al) + ", J_" +
                                          std::to_string(k + 1) + " " + vlabel(a, b) + ">");
        }
    }
    return VerifyResult::pass();
}

VerifyResult verify_htype(const Algebra& a) {
    std::vector<SignedPermutation> js;
    try {
        js = j_operators(a);
    } catch (const IntegralBasisError& e) {
        return VerifyResult::fail(e.what());
    }
    const Metric& ev = a.module_metric();
    Metric ez = a.center_metric();
    std::vector<SignedPermutation> inv;
    for (const auto& j : js) inv.push_back(j.inverse());
    // <J_k x, J_m y> for basis vectors
    auto pair_term = [&](int k, int m, int x, int y) {
        if (js[k].image[x] != js[m].image[y]) return 0;
        return js[k].sign[x] * js[m].sign[y] * ev[js[k].image[x]];
    };
    // fully polarized identity: <J_k a, J_m b> + <J_m a, J_k b> = 2 <Z_k,Z_m> <a,b>
    for (int k = 0; k < a.dim_z(); ++k)
        for (int m = k; m < a.dim_z(); ++m)
            for (int al = 0; al < a.dim_v(); ++al) {
                int cand[3] = {al, inv[m].image[js[k].image[al]], inv[k].image[js[m].image[al]]};
                for (int be : cand) {
                    int lhs = pair_term(k, m, al, be) + pair_term(m, k, al, be);
                    int rhs = (k == m && al == be) ? 2 * ez[k] * ev[al] : 0;
                    if (lhs != rhs) {
                        std::ostringstream w;
                        w << "H-type identity fails for (Z_" << k + 1 << ", Z_" << m + 1 << ", " << vlabel(a, al)
                          << ", " << vlabel(a, be) << ")";
                        return VerifyResult::fail(w.str());
                    }
                }
            }
    return VerifyResult::pass();
}

VerifyResult verify_general_htype_at(const Algebra& a, const ExactVector& v) {
    const Metric& ev = a.module_metric();
    Rational vv = scalar_product(v, v, ev);
    if (sgn(vv) == 0) throw std::invalid_argument("verify_general_htype: v is null");
    int n2 = a.dim_v();
    ExactMatrix m(a.dim_z(), n2);
    for (int b = 0; b < n2; ++b) {
        ExactVector col = bracket(a, v, unit_vector(n2, b));
        for (int k = 0; k < a.dim_z(); ++k) m(k, b) = col[k];
    }
    auto ker = nullspace(m);
    int kd = static_cast<int>(ker.size());
    ExactMatrix gram(kd, kd);
    for (int i = 0; i < kd; ++i)
        for (int j = 0; j < kd; ++j) gram(i, j) = scalar_product(ker[i], ker[j], ev);
    if (exact_rank(gram) < kd) {
        std::ostringstream w;
        w << "metric degenerate on ker(ad_v) for v = (";
        for (int i = 0; i < n2; ++i) w << (i ? "," : "") << v[i];
        w << ")";
        throw std::domain_error(w.str());
    }
    // V_v = ker^perp
    ExactMatrix perp(kd, n2);
    for (int i = 0; i < kd; ++i)
        for (int j = 0; j < n2; ++j) perp(i, j) = ev[j] * ker[i][j];
    auto basis = nullspace(perp);
    int d = static_cast<int>(basis.size());
    std::vector<ExactVector> img;
    for (const auto& b : basis) img.push_back(m.apply(b));
    Metric ez = a.center_metric();
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            Rational lhs = scalar_product(img[i], img[j], ez);
            Rational rhs = vv * scalar_product(basis[i], basis[j], ev);
            if (lhs != rhs)
                return VerifyResult::fail("scaled Gram identity fails on V_v basis pair (" + std::to_string(i + 1) +
                                          "," + std::to_string(j + 1) + ")");
        }
    ExactMatrix im(a.dim_z(), d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < a.dim_z(); ++k) im(k, j) = img[j][k];
    if (exact_rank(im) != a.dim_z()) return VerifyResult::fail("ad_v restricted to V_v is not surjective");
    return VerifyResult::pass();
}

VerifyResult verify_general_htype(const Algebra& a, int samples, std::uint64_t seed) {
    int n2 = a.dim_v();
    for (int b = 0; b < n2; ++b) {
        auto r = verify_general_htype_at(a, unit_vector(n2, b));
        if (!r) return VerifyResult::fail(r.witness + " at " + vlabel(a, b));
    }
    Rng rng(seed);
    int done = 0;
    while (done < samples) {
        ExactVector v(n2);
        for (auto& x : v) x = rng.uniform(-5, 5);
        if (sgn(scalar_product(v, v, a.module_metric())) == 0) continue;
        auto r = verify_general_htype_at(a, v);
        if (!r) {
            std::ostringstream w;
            w << r.witness << " at v = (";
            for (int i = 0; i < n2; ++i) w << (i ? "," : "") << v[i];
            w << ")";
            return VerifyResult::fail(w.str());
        }
        ++done;
    }
    return VerifyResult::pass();
}

VerifyResult verify_axioms(const Algebra& a) {
    if (auto r = verify_antisymmetry(a); !r) return r;
    if (auto r = verify_integral_basis(a); !r) return r;
    if (auto r = verify_clifford(a); !r) return r;
    if (auto r = verify_admissible(a); !r) return r;
    return verify_htype(a);
}

namespace {

std::vector<std::vector<int>> commutation_graph(const Algebra& a) {
    std::vector<std::vector<int>> adj(a.dim_v());
    for (int i = 0; i < a.dim_v(); ++i)
        for (const auto& c : a.structure().row(i)) {
            adj[i].push_back(c.col);
            adj[c.col].push_back(i);
        }
    for (auto& v : adj) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return adj;
}

}  // namespace

std::optional<Partition> block_decomposition(const Algebra& a) {
    int n = a.dim_v();
    auto adj = commutation_graph(a);
    Partition color(n, -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        comps.emplace_back();
        color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            comps.back().push_back(x);
            for (int y : adj[x]) {
                if (color[y] < 0) {
                    color[y] = 1 - color[x];
                    q.push_back(y);
                } else if (color[y] == color[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    // balance the halves by flipping whole components, earliest components kept as colored
    int half = n / 2;
    if (n % 2) return std::nullopt;
    int nc = static_cast<int>(comps.size());
    std::vector<int> zeros(nc), ones(nc);
    for (int c = 0; c < nc; ++c)
        for (int x : comps[c]) (color[x] == 0 ? zeros[c] : ones[c])++;
    // reach[c][t]: components c.. can contribute exactly t A-vertices
    std::vector<std::vector<char>> reach(nc + 1, std::vector<char>(n + 1, 0));
    reach[nc][0] = 1;
    for (int c = nc - 1; c >= 0; --c)
        for (int t = 0; t <= n; ++t) {
            if (t >= zeros[c] && reach[c + 1][t - zeros[c]]) reach[c][t] = 1;
            if (t >= ones[c] && reach[c + 1][t - ones[c]]) reach[c][t] = 1;
        }
    if (!reach[0][half]) return std::nullopt;
    int t = half;
    for (int c = 0; c < nc; ++c) {
        if (t >= zeros[c] && reach[c + 1][t - zeros[c]]) {
            t -= zeros[c];
        } else {
            for (int x : comps[c]) color[x] = 1 - color[x];
            t -= ones[c];
        }
    }
    return color;
}

VerifyResult verify_partition(const Algebra& a, const Partition& p) {
    if (static_cast<int>(p.size()) != a.dim_v()) return VerifyResult::fail("partition size mismatch");
    int na = static_cast<int>(std::count(p.begin(), p.end(), 0));
    if (2 * na != a.dim_v()) return VerifyResult::fail("parts have unequal size");
    for (int i = 0; i < a.dim_v(); ++i)
        for (const auto& c : a.structure().row(i))
            if (p[i] == p[c.col])
                return VerifyResult::fail("[" + vlabel(a, i) + "," + vlabel(a, c.col) + "] != 0 inside one part");
    return VerifyResult::pass();
}

std::optional<BDDecomposition> bd_from_partition(const Algebra& a, const Partition& p) {
    if (!verify_partition(a, p)) return std::nullopt;
    BDDecomposition d;
    const Metric& ev = a.module_metric();
    for (int i = 0; i < a.dim_v(); ++i) {
        if (p[i] == 0)
            (ev[i] > 0 ? d.a_plus : d.a_minus).push_back(i);
        else
            (ev[i] > 0 ? d.b_plus : d.b_minus).push_back(i);
    }
    size_t q = a.dim_v() / 4;
    if (a.dim_v() % 4 || d.a_plus.size() != q || d.a_minus.size() != q || d.b_plus.size() != q ||
        d.b_minus.size() != q)
        return std::nullopt;
    return d;
}

std::optional<BDDecomposition> bd_decomposition(const Algebra& a) {
    auto p = block_decomposition(a);
    if (!p) return std::nullopt;
    return bd_from_partition(a, *p);
}

}  // namespace phtype
