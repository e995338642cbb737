#include "phtype/check.hpp"

#include "phtype/catalog.hpp"
#include "phtype/morphism.hpp"

namespace phtype {

Chain automorphism_chain(int r) {
    if (r <= 0) throw std::invalid_argument("automorphism_chain: r must be positive");
    int b = (r - 1) % 4 + 1;
    return Chain{{b, b}, std::vector<StepKind>((r - b) / 4, StepKind::BY_4_4)};
}

int exit_code(const Certificate& c) {
    switch (c.kind) {
        case CertificateKind::ISO:
        case CertificateKind::SBG_YES:
        case CertificateKind::SBG_NO: return 0;
        case CertificateKind::INCONCLUSIVE: return 2;
        default: return 1;
    }
}

namespace {

std::optional<long long> module_dim(Signature sig) {
    try {
        return min_module_dim(sig.pos, sig.neg);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

bool same_algebra(const Algebra& a, const Algebra& b) {
    return a.center_sig() == b.center_sig() && a.module_metric() == b.module_metric() && a.structure() == b.structure();
}

Certificate iso(AlgebraPtr src, AlgebraPtr dst, LieMorphism f, std::string reason) {
    auto ok = verify_homomorphism(f);
    if (!ok) throw std::logic_error("constructed map is not a homomorphism: " + ok.witness);
    Certificate c;
    c.kind = CertificateKind::ISO;
    c.src = std::move(src);
    c.dst = std::move(dst);
    c.morphism = std::move(f);
    c.reason = std::move(reason);
    return c;
}

void run_parity(Certificate& c, const CheckOptions& opt) {
    ScanOptions so;
    so.seed = opt.seed;
    auto pc = parity_certificate(*c.src, *c.dst, MapClass::ANTI_ISOMETRY, so);
    c.parity = pc.result;
    c.precondition = pc.scan;
    if (pc.result.feasible) {
        c.kind = CertificateKind::INCONCLUSIVE;
        c.reason = "sign-parity system is feasible and no isomorphism was constructed";
    } else if (!pc.precondition_ok) {
        c.kind = CertificateKind::INCONCLUSIVE;
        c.cycle.clear();
        c.reason = "sign-parity system is infeasible, but the target has a null X with ad_X onto the center, "
                   "so the parity argument does not apply";
    } else {
        c.kind = CertificateKind::NOT_ISO_PARITY;
        c.cycle = pc.result.cycle;
        c.reason = "no isomorphism with anti-isometric center action: odd sign cycle of length " +
                   std::to_string(c.cycle.size());
        auto ok = verify_odd_cycle(*c.src, c.cycle);
        if (!ok) throw std::logic_error("parity cycle failed re-verification: " + ok.witness);
    }
}

}  // namespace

Certificate check_isomorphism(Signature s1, Signature s2, const CheckOptions& opt) {
    if (opt.automorphism && !(s1 == s2)) throw std::invalid_argument("--auto needs equal signatures");

    auto d1 = module_dim(s1), d2 = module_dim(s2);
    if (d1 && d2) {
        auto o = center_signature_obstruction(s1, *d1, s2, *d2);
        if (o.kind != ObstructionKind::POSSIBLE) {
            Certificate c;
            c.kind = o.kind == ObstructionKind::DIMENSION ? CertificateKind::NOT_ISO_DIM : CertificateKind::NOT_ISO_SIGNATURE;
            c.src_sig = s1;
            c.dst_sig = s2;
            c.src_dim_v = *d1;
            c.dst_dim_v = *d2;
            c.reason = o.reason;
            return c;
        }
    }
    auto chain = default_chain(s1.pos, s1.neg);
    if (!chain || !default_chain(s2.pos, s2.neg)) {
        construct(s1.pos, s1.neg);
        construct(s2.pos, s2.neg);
    }

    if (opt.automorphism) {
        Chain ch = s1.pos == s1.neg ? automorphism_chain(s1.pos) : *chain;
        AlgebraPtr a = extension_chain(ch);
        if (!opt.anti) return iso(a, a, identity_morphism(a), "identity automorphism (isometric center)");
        Certificate c;
        c.src = c.dst = a;
        c.src_sig = c.dst_sig = s1;
        c.src_dim_v = c.dst_dim_v = a->dim_v();
        if (s1.pos != s1.neg) {
            c.kind = CertificateKind::NOT_ISO_SIGNATURE;
            c.reason = "an anti-isometry of the center needs r = s";
            return c;
        }
        if (auto f = canonical_iso(a); f && same_algebra(*f->dst, *a)) {
            LieMorphism g{a, a, f->A, f->B, f->C};
            return iso(a, a, g, "automorphism with anti-isometric center");
        }
        run_parity(c, opt);
        return c;
    }

    AlgebraPtr a = extension_chain(*chain);
    if (s1 == s2) return iso(a, a, identity_morphism(a), "same algebra");
    if (auto f = canonical_iso(a)) return iso(a, f->dst, *f, "integral isomorphism built along " + chain->str());
    Certificate c;
    c.src = a;
    c.dst = extension_chain(swapped(*chain));
    c.src_sig = s1;
    c.dst_sig = s2;
    c.src_dim_v = c.dst_dim_v = a->dim_v();
    run_parity(c, opt);
    return c;
}

}  // namespace phtype
