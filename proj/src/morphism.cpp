#include "phtype/morphism.hpp"

#include "phtype/catalog.hpp"
#include "phtype/extension.hpp"

#include <map>
#include <sstream>

namespace phtype {

namespace {

using SparseCol = std::vector<std::pair<int, Rational>>;

std::vector<SparseCol> sparse_columns(const ExactMatrix& m) {
    std::vector<SparseCol> cols(m.cols());
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (sgn(m(i, j)) != 0) cols[j].emplace_back(i, m(i, j));
    return cols;
}

SignedPermutation signed_perm(int n, std::initializer_list<std::pair<int, int>> moves) {
    // moves: (from, +-to), 1-based; unlisted indices fixed
    SignedPermutation p = SignedPermutation::identity(n);
    for (auto [from, to] : moves) {
        p.image[from - 1] = std::abs(to) - 1;
        p.sign[from - 1] = to > 0 ? 1 : -1;
    }
    return p;
}

std::optional<IntegralMap> base_map(Signature id) {
    auto negate = [](int n, int from, int to) {
        SignedPermutation p = SignedPermutation::identity(n);
        for (int i = from; i <= to; ++i) p.sign[i - 1] = -1;
        return p;
    };
    if (id == Signature{1, 0} || id == Signature{0, 1})
        return IntegralMap{SignedPermutation::identity(2), SignedPermutation::identity(1)};
    if (id == Signature{2, 0} || id == Signature{0, 2})
        return IntegralMap{SignedPermutation::identity(4), SignedPermutation::identity(2)};
    if (id == Signature{4, 0} || id == Signature{0, 4})
        return IntegralMap{negate(8, 2, 4), SignedPermutation::identity(4)};
    if (id == Signature{8, 0} || id == Signature{0, 8})
        return IntegralMap{negate(16, 2, 8), SignedPermutation::identity(8)};
    if (id == Signature{1, 1})
        return IntegralMap{signed_perm(4, {{2, 3}, {3, 2}}), signed_perm(2, {{1, 2}, {2, 1}})};
    if (id == Signature{2, 2})
        return IntegralMap{signed_perm(8, {{2, 5}, {5, 2}, {3, 6}, {6, 3}}),
                           signed_perm(4, {{1, 3}, {2, 4}, {3, 1}, {4, 2}})};
    if (id == Signature{4, 4})
        return IntegralMap{signed_perm(16, {{2, 9}, {3, 10}, {4, 12}, {5, 11}, {8, -8}, {9, 2}, {10, 3},
                                            {11, 5}, {12, 4}, {15, -15}}),
                           signed_perm(8, {{1, 5}, {2, 6}, {3, 8}, {4, 7}, {5, 1}, {6, 2}, {7, 4}, {8, 3}})};
    return std::nullopt;
}

struct Built {
    IntegralMap map;
    AlgebraPtr dst;
};

std::optional<Built> build_iso(const AlgebraPtr& src) {
    const Provenance& p = src->provenance();
    if (p.kind == Provenance::Kind::BASE) {
        auto m = base_map(p.base);
        if (!m) return std::nullopt;
        return Built{*m, base_algebra({p.base.neg, p.base.pos})};
    }
    if (p.kind != Provenance::Kind::EXTENDED) return std::nullopt;
    if (!p.parent->pinned_partition() || !p.factor->pinned_partition()) return std::nullopt;
    auto parent = build_iso(p.parent);
    if (!parent) return std::nullopt;
    StepKind step = p.steps.back();
    auto fmap = base_map(p.factor->provenance().base);
    AlgebraPtr dst = extend(parent->dst, swapped(step));

    const Partition& pp = *p.parent->pinned_partition();
    const Partition& fp = *p.factor->pinned_partition();
    const int L = p.parent->dim_v();
    IntegralMap m{SignedPermutation::identity(src->dim_v()), SignedPermutation::identity(src->dim_z())};
    // x (x) a -> -phi(x) (x) phi(a) when x and a both lie in B, + otherwise
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < 16; ++j) {
            int from = p.module_index[16 * i + j];
            int i2 = parent->map.module.image[i], j2 = fmap->module.image[j];
            int sg = parent->map.module.sign[i] * fmap->module.sign[j];
            if (pp[i] == 1 && fp[j] == 1) sg = -sg;
            m.module.image[from] = dst->provenance().module_index[16 * i2 + j2];
            m.module.sign[from] = sg;
        }
    std::map<std::pair<bool, int>, int> dst_slot;
    for (int k = 0; k < dst->dim_z(); ++k) {
        const auto& o = dst->provenance().center_origin[k];
        dst_slot[{o.from_factor, o.index}] = k;
    }
    for (int k = 0; k < src->dim_z(); ++k) {
        const auto& o = p.center_origin[k];
        const SignedPermutation& sub = o.from_factor ? fmap->center : parent->map.center;
        m.center.image[k] = dst_slot.at({o.from_factor, sub.image[o.index]});
        m.center.sign[k] = sub.sign[o.index];
    }
    return Built{m, dst};
}

std::string vlab(const Algebra& a, int i) { return a.v_labels().at(i); }

}  // namespace

LieMorphism make_morphism(AlgebraPtr src, AlgebraPtr dst, const IntegralMap& m) {
    if (m.module.size() != src->dim_v() || m.module.size() != dst->dim_v() || m.center.size() != src->dim_z() ||
        m.center.size() != dst->dim_z())
        throw std::invalid_argument("make_morphism: shape mismatch");
    LieMorphism f{src, dst, m.module.to_matrix(), ExactMatrix(dst->dim_z(), src->dim_v()), m.center.to_matrix()};
    return f;
}

LieMorphism identity_morphism(const AlgebraPtr& a) {
    return make_morphism(a, a, {SignedPermutation::identity(a->dim_v()), SignedPermutation::identity(a->dim_z())});
}

LieMorphism compose(const LieMorphism& g, const LieMorphism& f) {
    if (g.src->dim_v() != f.dst->dim_v() || g.src->dim_z() != f.dst->dim_z())
        throw std::invalid_argument("compose: shape mismatch");
    return {f.src, g.dst, g.A * f.A, g.B * f.A + g.C * f.B, g.C * f.C};
}

std::optional<IntegralMap> as_integral(const LieMorphism& f) {
    auto perm = [](const ExactMatrix& m) -> std::optional<SignedPermutation> {
        if (m.rows() != m.cols()) return std::nullopt;
        SignedPermutation p;
        p.image.assign(m.cols(), -1);
        p.sign.assign(m.cols(), 1);
        for (int j = 0; j < m.cols(); ++j)
            for (int i = 0; i < m.rows(); ++i) {
                if (sgn(m(i, j)) == 0) continue;
                if (p.image[j] >= 0 || (m(i, j) != 1 && m(i, j) != -1)) return std::nullopt;
                p.image[j] = i;
                p.sign[j] = sgn(m(i, j));
            }
        if (!p.is_permutation()) return std::nullopt;
        return p;
    };
    if (!f.B.is_zero()) return std::nullopt;
    auto a = perm(f.A), c = perm(f.C);
    if (!a || !c) return std::nullopt;
    return IntegralMap{*a, *c};
}

VerifyResult verify_homomorphism(const LieMorphism& f) {
    const Algebra& s = *f.src;
    const Algebra& d = *f.dst;
    if (f.A.rows() != d.dim_v() || f.A.cols() != s.dim_v() || f.C.rows() != d.dim_z() || f.C.cols() != s.dim_z())
        return VerifyResult::fail("shape mismatch");
    auto acols = sparse_columns(f.A);
    auto ccols = sparse_columns(f.C);
    const int n = d.dim_z();
    std::vector<Rational> lhs(n), rhs(n);
    for (int al = 0; al < s.dim_v(); ++al)
        for (int be = 0; be < s.dim_v(); ++be) {
            for (int k = 0; k < n; ++k) {
                lhs[k] = 0;
                rhs[k] = 0;
            }
            for (const auto& [x, xv] : acols[al])
                for (const auto& c : d.structure().row(x)) {
                    const Rational& y = f.A(c.col, be);
                    if (sgn(y) == 0) continue;
                    if (c.sign > 0)
                        lhs[c.k] += xv * y;
                    else
                        lhs[c.k] -= xv * y;
                }
            for (const auto& c : s.structure().row(al)) {
                if (c.col != be) continue;
                for (const auto& [k, cv] : ccols[c.k]) {
                    if (c.sign > 0)
                        rhs[k] += cv;
                    else
                        rhs[k] -= cv;
                }
            }
            if (lhs != rhs)
                return VerifyResult::fail("[A " + vlab(s, al) + ", A " + vlab(s, be) + "] != C[" + vlab(s, al) + ", " +
                                          vlab(s, be) + "]");
        }
    return VerifyResult::pass();
}

VerifyResult verify_conjugation(const LieMorphism& f) {
    const Algebra& s = *f.src;
    const Algebra& d = *f.dst;
    std::vector<SignedPermutation> js_src, js_dst;
    try {
        js_src = j_operators(s);
        js_dst = j_operators(d);
    } catch (const IntegralBasisError& e) {
        return VerifyResult::fail(e.what());
    }
    auto acols = sparse_columns(f.A);
    ExactMatrix at = metric_adjoint(f.A, s.module_metric(), d.module_metric());
    auto atcols = sparse_columns(at);
    ExactMatrix ct = metric_adjoint(f.C, s.center_metric(), d.center_metric());
    for (int k = 0; k < d.dim_z(); ++k) {
        const auto& jk = js_dst[k];
        ExactVector z = ct.column(k);
        for (int be = 0; be < s.dim_v(); ++be) {
            std::map<int, Rational> lhs, rhs;
            for (const auto& [x, xv] : acols[be]) {
                int y = jk.image[x];
                Rational w = jk.sign[x] * xv;
                for (const auto& [g, gv] : atcols[y]) lhs[g] += gv * w;
            }
            for (int m = 0; m < s.dim_z(); ++m) {
                if (sgn(z[m]) == 0) continue;
                rhs[js_src[m].image[be]] += js_src[m].sign[be] * z[m];
            }
            std::erase_if(lhs, [](const auto& kv) { return sgn(kv.second) == 0; });
            std::erase_if(rhs, [](const auto& kv) { return sgn(kv.second) == 0; });
            if (lhs != rhs)
                return VerifyResult::fail("A^t J_Z" + std::to_string(k + 1) + " A != J_{C^t Z" + std::to_string(k + 1) +
                                          "} on " + vlab(s, be));
        }
    }
    return VerifyResult::pass();
}

MorphismClass classify(const LieMorphism& f) {
    return {classify_map(f.C, f.src->center_metric(), f.dst->center_metric()), as_integral(f).has_value()};
}

VerifyResult verify_isom_class(const LieMorphism& f) {
    auto m = as_integral(f);
    if (!m) return VerifyResult::fail("map is not integral");
    const Algebra& s = *f.src;
    const Algebra& d = *f.dst;
    if (!s.pinned_partition() || !d.pinned_partition()) return VerifyResult::fail("no block decomposition recorded");
    const Partition& ps = *s.pinned_partition();
    const Partition& pd = *d.pinned_partition();
    for (int i = 0; i < s.dim_v(); ++i) {
        int j = m->module.image[i];
        bool flip = ps[i] == 1;
        int want = flip ? -s.module_metric()[i] : s.module_metric()[i];
        if (pd[j] != ps[i] || d.module_metric()[j] != want)
            return VerifyResult::fail(vlab(s, i) + " -> " + vlab(d, j) + " leaves its A+-/B+- class");
    }
    Metric sz = s.center_metric(), dz = d.center_metric();
    for (int k = 0; k < s.dim_z(); ++k)
        if (dz[m->center.image[k]] != -sz[k])
            return VerifyResult::fail("center map keeps the sign of Z" + std::to_string(k + 1));
    return VerifyResult::pass();
}

namespace {

// exact positive n-th root of a positive rational, if it exists
std::optional<Rational> rational_root(const Rational& x, unsigned long n) {
    Integer a, b;
    if (!mpz_root(a.get_mpz_t(), x.get_num_mpz_t(), n)) return std::nullopt;
    if (!mpz_root(b.get_mpz_t(), x.get_den_mpz_t(), n)) return std::nullopt;
    Rational r(a, b);
    r.canonicalize();
    return r;
}

}  // namespace

Normalized normalize_isomorphism(const LieMorphism& f) {
    const Algebra& s = *f.src;
    const Algebra& d = *f.dst;
    Rational mu = 1;
    if (!as_integral(f)) {
        ExactMatrix at = metric_adjoint(f.A, s.module_metric(), d.module_metric());
        Rational det = exact_det(at * f.A);
        if (sgn(det) == 0) throw std::domain_error("normalize_isomorphism: module block is singular");
        if (sgn(det) < 0) det = -det;
        auto root = rational_root(1 / det, 4ul * s.dim_v() / 2);
        if (!root) throw std::domain_error("normalize_isomorphism: scaling factor is irrational");
        mu = *root;
    }
    LieMorphism g{f.src, f.dst, mu * f.A, f.B, mu * mu * f.C};
    ExactMatrix ct = metric_adjoint(g.C, s.center_metric(), d.center_metric());
    ExactMatrix cc = g.C * ct;
    int n = d.dim_z();
    int sign = 0;
    if (cc == ExactMatrix::identity(n)) sign = 1;
    if (cc == Rational(-1) * ExactMatrix::identity(n)) sign = -1;
    if (sign == 0) throw std::domain_error("normalize_isomorphism: C C^t is not +-Id after scaling");
    if (!(s.center_sig() == d.center_sig()) && sign != -1)
        throw std::domain_error("normalize_isomorphism: expected C C^t = -Id");
    return {g, mu, sign};
}

std::optional<LieMorphism> canonical_iso(const AlgebraPtr& src) {
    auto b = build_iso(src);
    if (!b) return std::nullopt;
    return make_morphism(src, b->dst, b->map);
}

std::optional<LieMorphism> canonical_iso(int r, int s) {
    auto c = default_chain(r, s);
    if (!c) return std::nullopt;
    return canonical_iso(extension_chain(*c));
}

Obstruction center_signature_obstruction(Signature src, long long src_dim_v, Signature dst, long long dst_dim_v) {
    if (src_dim_v != dst_dim_v || src.dim() != dst.dim()) {
        std::ostringstream w;
        w << "dimensions differ: " << src_dim_v << "+" << src.dim() << " vs " << dst_dim_v << "+" << dst.dim();
        return {ObstructionKind::DIMENSION, w.str()};
    }
    if (!(dst == src) && !(dst == Signature{src.neg, src.pos}))
        return {ObstructionKind::SIGNATURE,
                "center signature " + dst.str() + " is neither " + src.str() + " nor its swap"};
    return {ObstructionKind::POSSIBLE, ""};
}

Obstruction center_signature_obstruction(const Algebra& src, const Algebra& dst) {
    return center_signature_obstruction(src.center_sig(), src.dim_v(), dst.center_sig(), dst.dim_v());
}

}  // namespace phtype
