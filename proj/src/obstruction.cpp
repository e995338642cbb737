#include "phtype/obstruction.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace phtype {

AdjointMatrix adjoint_matrix(const Algebra& a, const ExactVector& x) {
    if (static_cast<int>(x.size()) != a.dim_v()) throw std::invalid_argument("adjoint_matrix: X has wrong length");
    ExactMatrix m(a.dim_z(), a.dim_v());
    for (int al = 0; al < a.dim_v(); ++al) {
        if (sgn(x[al]) == 0) continue;
        for (const auto& c : a.structure().row(al)) {
            if (c.sign > 0)
                m(c.k, c.col) += x[al];
            else
                m(c.k, c.col) -= x[al];
        }
    }
    return {x, m};
}

Rational gram_det(const Algebra& a, const ExactVector& x) {
    ExactMatrix m = adjoint_matrix(a, x).m;
    return exact_det(m * m.transpose());
}

bool ad_surjective(const Algebra& a, const ExactVector& x) {
    return exact_rank(adjoint_matrix(a, x).m) == a.dim_z();
}

namespace {

void record(const Algebra& a, const ExactVector& x, const ScanOptions& opt, ScanReport& rep) {
    ++rep.points;
    bool null = sgn(scalar_product(x, x, a.module_metric())) == 0;
    ExactMatrix m = adjoint_matrix(a, x).m;
    bool onto = exact_rank(m) == a.dim_z();
    if (null) ++rep.null_points;
    if (null && onto && !is_zero(x)) {
        if (rep.null_surjective++ == 0) rep.null_surjective_witness = x;
    }
    if (!null && !onto) {
        if (rep.nonnull_not_surjective++ == 0) rep.nonnull_failure_witness = x;
    }
    if (opt.gram) {
        bool gzero = sgn(exact_det(m * m.transpose())) == 0;
        if (gzero != null) {
            if (rep.gram_mismatch++ == 0) rep.gram_witness = x;
        }
    }
}

bool done(const ScanOptions& opt, const ScanReport& rep) {
    return opt.stop_on_null_surjective && rep.null_surjective > 0;
}

ExactVector random_nonzero(Rng& rng, int n, long lo, long hi) {
    ExactVector x(n);
    do {
        for (auto& e : x) e = rng.uniform(lo, hi);
    } while (is_zero(x));
    return x;
}

}  // namespace

ScanReport surjectivity_scan(const Algebra& a, const ScanOptions& opt) {
    ScanReport rep;
    const int n = a.dim_v();
    int radius = opt.grid_radius >= 0 ? opt.grid_radius : (n <= 8 ? 1 : 0);
    int samples = opt.random_samples >= 0 ? opt.random_samples : (radius > 0 ? 0 : 2000);
    rep.grid_radius = radius;
    Rng rng(opt.seed);

    if (radius > 0) {
        std::vector<int> digit(n, -radius);
        ExactVector x(n);
        while (true) {
            for (int i = 0; i < n; ++i) x[i] = digit[i];
            record(a, x, opt, rep);
            if (done(opt, rep)) return rep;
            int i = 0;
            while (i < n && digit[i] == radius) digit[i++] = -radius;
            if (i == n) break;
            ++digit[i];
        }
    }
    for (int t = 0; t < samples; ++t) {
        record(a, random_nonzero(rng, n, -3, 3), opt, rep);
        if (done(opt, rep)) return rep;
    }
    for (int t = 0; t < opt.rational_samples; ++t) {
        ExactVector x = random_nonzero(rng, n, -9, 9);
        for (auto& e : x) {
            e /= rng.uniform(1, 9);
            e.canonicalize();
        }
        record(a, x, opt, rep);
        if (done(opt, rep)) return rep;
    }
    if (opt.null_samples && radius == 0) {
        const Metric& m = a.module_metric();
        std::vector<int> pos, neg;
        for (int i = 0; i < n; ++i) (m[i] > 0 ? pos : neg).push_back(i);
        // v_i + v_j with opposite signs
        std::vector<std::pair<int, int>> pairs;
        for (int i : pos)
            for (int j : neg) pairs.emplace_back(i, j);
        if (pairs.size() > 1000) {
            for (size_t k = 0; k < 1000; ++k) std::swap(pairs[k], pairs[k + rng.uniform(0, pairs.size() - k - 1)]);
            pairs.resize(1000);
        }
        for (auto [i, j] : pairs) {
            ExactVector x(n);
            x[i] = 1;
            x[j] = rng.uniform(0, 1) ? 1 : -1;
            record(a, x, opt, rep);
            if (done(opt, rep)) return rep;
        }
        // x+ on some positive coordinates, a signed rearrangement of it on negative ones
        const int k = static_cast<int>(std::min(pos.size(), neg.size()));
        for (int t = 0; k > 0 && t < 200; ++t) {
            ExactVector x(n);
            for (int q = 0; q < k; ++q) std::swap(pos[q], pos[q + rng.uniform(0, pos.size() - q - 1)]);
            for (int q = 0; q < k; ++q) std::swap(neg[q], neg[q + rng.uniform(0, neg.size() - q - 1)]);
            int used = static_cast<int>(rng.uniform(1, k));
            for (int q = 0; q < used; ++q) {
                long val = rng.uniform(-3, 3);
                x[pos[q]] = val;
                x[neg[q]] = rng.uniform(0, 1) ? val : -val;
            }
            if (is_zero(x)) continue;
            record(a, x, opt, rep);
            if (done(opt, rep)) return rep;
        }
    }
    return rep;
}

std::vector<ParityEdge> parity_constraints(const Algebra& src) {
    std::vector<ParityEdge> out;
    const Metric& m = src.module_metric();
    for (int al = 0; al < src.dim_v(); ++al)
        for (const auto& c : src.structure().row(al))
            if (al < c.col) out.push_back({al, c.col, -m[al] * m[c.col]});
    return out;
}

ParityResult solve_parity(const Algebra& src) {
    const int n = src.dim_v();
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (const auto& e : parity_constraints(src)) {
        adj[e.a].emplace_back(e.b, e.product);
        adj[e.b].emplace_back(e.a, e.product);
    }
    std::vector<int> s(n, 0), parent(n, -1), depth(n, 0);
    ParityResult res;
    for (int root = 0; root < n; ++root) {
        if (s[root] != 0) continue;
        s[root] = 1;
        std::deque<int> q{root};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (auto [y, p] : adj[x]) {
                if (s[y] == 0) {
                    s[y] = p * s[x];
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    q.push_back(y);
                } else if (s[x] * s[y] != p) {
                    // tree path x -> lca -> y, closed by the violated edge y -> x
                    std::vector<int> up{x}, down{y};
                    int a = x, b = y;
                    while (a != b) {
                        if (depth[a] >= depth[b]) {
                            a = parent[a];
                            up.push_back(a);
                        } else {
                            b = parent[b];
                            down.push_back(b);
                        }
                    }
                    down.pop_back();
                    std::vector<int> walk = up;
                    walk.insert(walk.end(), down.rbegin(), down.rend());
                    res.feasible = false;
                    for (size_t i = 0; i + 1 < walk.size(); ++i)
                        res.cycle.push_back({walk[i], walk[i + 1], s[walk[i]] * s[walk[i + 1]]});
                    res.cycle.push_back({y, x, p});
                    return res;
                }
            }
        }
    }
    res.assignment = s;
    return res;
}

VerifyResult verify_odd_cycle(const Algebra& src, const std::vector<ParityEdge>& cycle) {
    if (cycle.empty()) return VerifyResult::fail("empty cycle");
    const Metric& m = src.module_metric();
    int prod = 1;
    for (size_t i = 0; i < cycle.size(); ++i) {
        const auto& e = cycle[i];
        const auto& next = cycle[(i + 1) % cycle.size()];
        if (e.b != next.a) return VerifyResult::fail("cycle is not closed at edge " + std::to_string(i));
        if (!src.basis_bracket(e.a, e.b))
            return VerifyResult::fail(src.v_labels()[e.a] + " and " + src.v_labels()[e.b] + " commute");
        if (e.product != -m[e.a] * m[e.b]) return VerifyResult::fail("edge " + std::to_string(i) + " has wrong product");
        prod *= e.product;
    }
    if (prod != -1) return VerifyResult::fail("constraint product around the cycle is +1");
    return VerifyResult::pass();
}

const char* to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::ISO: return "ISO";
        case CertificateKind::NOT_ISO_DIM: return "NOT_ISO_DIM";
        case CertificateKind::NOT_ISO_SIGNATURE: return "NOT_ISO_SIGNATURE";
        case CertificateKind::NOT_ISO_PARITY: return "NOT_ISO_PARITY";
        case CertificateKind::INCONCLUSIVE: return "INCONCLUSIVE";
        case CertificateKind::SBG_YES: return "SBG_YES";
        case CertificateKind::SBG_NO: return "SBG_NO";
    }
    return "?";
}

ParityCertificate parity_certificate(const Algebra& src, const Algebra& dst, MapClass center_class,
                                     const ScanOptions& opt) {
    if (center_class != MapClass::ANTI_ISOMETRY)
        throw std::invalid_argument("parity_certificate: only the anti-isometric center class is supported");
    if (src.dim_v() != dst.dim_v() || src.dim_z() != dst.dim_z())
        throw std::invalid_argument("parity_certificate: dimensions differ");
    ParityCertificate pc;
    pc.result = solve_parity(src);
    ScanOptions o = opt;
    o.gram = false;
    o.stop_on_null_surjective = true;
    pc.scan = surjectivity_scan(dst, o);
    pc.precondition_ok = pc.scan.equivalence_holds();
    return pc;
}

VerifyResult verify_sbg_witness(const Algebra& a, const SbgWitness& w) {
    if (static_cast<int>(w.z0.size()) != a.dim_z() || static_cast<int>(w.v.size()) != a.dim_v())
        return VerifyResult::fail("witness has wrong shape");
    if (is_zero(w.z0)) return VerifyResult::fail("Z0 = 0");
    if (is_zero(w.v)) return VerifyResult::fail("v = 0");
    Metric zm = a.center_metric();
    ExactMatrix m = adjoint_matrix(a, w.v).m;
    for (int be = 0; be < a.dim_v(); ++be)
        if (sgn(scalar_product(w.z0, m.column(be), zm)) != 0)
            return VerifyResult::fail("<Z0, [v, " + a.v_labels()[be] + "]> != 0");
    return VerifyResult::pass();
}

std::optional<SbgWitness> sbg_witness(const Algebra& a) {
    if (a.r() == 0 || a.s() == 0) return std::nullopt;
    const int r = a.r();
    SbgWitness w;
    w.z0 = ExactVector(a.dim_z());
    w.z0[0] = 1;
    w.z0[r] = 1;
    SignedPermutation j1 = j_operator(a, 1), j2 = j_operator(a, r + 1);
    for (int u = 0; u < a.dim_v(); ++u) {
        ExactVector v(a.dim_v());
        v[j1.image[u]] += j1.sign[u];
        v[j2.image[u]] += j2.sign[u];
        if (is_zero(v)) continue;
        w.v = v;
        return w;
    }
    return std::nullopt;
}

Certificate sbg_decision(const AlgebraPtr& a, int samples, std::uint64_t seed) {
    Certificate c;
    c.src = a;
    c.src_sig = a->center_sig();
    c.src_dim_v = a->dim_v();
    if (a->r() == 0 || a->s() == 0) {
        Rng rng(seed);
        for (int t = 0; t < samples; ++t) {
            ExactVector v = random_nonzero(rng, a->dim_v(), -3, 3);
            if (!ad_surjective(*a, v)) {
                c.kind = CertificateKind::INCONCLUSIVE;
                c.reason = "sampled v with ad_v not onto the center";
                c.sbg = SbgWitness{ExactVector(a->dim_z()), v};
                return c;
            }
        }
        c.kind = CertificateKind::SBG_YES;
        c.samples = samples;
        c.reason = "ad_v onto the center for every sampled v";
        return c;
    }
    auto w = sbg_witness(*a);
    if (!w) throw std::runtime_error("sbg_decision: no witness found for an indefinite center");
    auto ok = verify_sbg_witness(*a, *w);
    if (!ok) throw std::runtime_error("sbg_decision: witness failed: " + ok.witness);
    c.kind = CertificateKind::SBG_NO;
    c.sbg = w;
    c.reason = "image of ad_v lies in Z0^perp for the null Z0 = Z1 + Z" + std::to_string(a->r() + 1);
    return c;
}

VerifyResult verify_certificate(const Certificate& c) {
    switch (c.kind) {
        case CertificateKind::ISO: {
            if (!c.morphism) return VerifyResult::fail("no morphism");
            auto h = verify_homomorphism(*c.morphism);
            if (!h) return h;
            if (!as_integral(*c.morphism) && exact_rank(c.morphism->A) != c.morphism->A.rows())
                return VerifyResult::fail("module block is singular");
            return VerifyResult::pass();
        }
        case CertificateKind::NOT_ISO_DIM:
        case CertificateKind::NOT_ISO_SIGNATURE: {
            auto o = center_signature_obstruction(c.src_sig, c.src_dim_v, c.dst_sig, c.dst_dim_v);
            auto want = c.kind == CertificateKind::NOT_ISO_DIM ? ObstructionKind::DIMENSION : ObstructionKind::SIGNATURE;
            if (o.kind != want) return VerifyResult::fail("obstruction does not reproduce");
            return VerifyResult::pass();
        }
        case CertificateKind::NOT_ISO_PARITY: {
            if (!c.src) return VerifyResult::fail("no source algebra");
            if (!c.precondition || !c.precondition->equivalence_holds())
                return VerifyResult::fail("surjectivity precondition not established");
            return verify_odd_cycle(*c.src, c.cycle);
        }
        case CertificateKind::SBG_NO:
            if (!c.src || !c.sbg) return VerifyResult::fail("no witness");
            return verify_sbg_witness(*c.src, *c.sbg);
        case CertificateKind::SBG_YES:
            if (!c.src || c.samples <= 0) return VerifyResult::fail("no samples");
            if (c.src->r() != 0 && c.src->s() != 0) return VerifyResult::fail("indefinite center");
            return VerifyResult::pass();
        case CertificateKind::INCONCLUSIVE: return VerifyResult::pass();
    }
    return VerifyResult::fail("unknown certificate");
}

}  // namespace phtype
