#include "phtype/sums.hpp"

namespace phtype {

bool has_two_module_types(Signature sig) { return (((sig.pos - sig.neg) % 4) + 4) % 4 == 3; }

AlgebraPtr build_sum(const AlgebraPtr& base, int mu, int nu) {
    if (base->provenance().kind == Provenance::Kind::SUM)
        throw std::invalid_argument("build_sum: base is already a direct sum");
    if (mu < 0 || nu < 0 || mu + nu == 0) throw std::invalid_argument("build_sum: need mu, nu >= 0 and mu + nu > 0");
    if (nu > 0 && !has_two_module_types(base->center_sig()))
        throw std::invalid_argument("build_sum: nu > 0 requires r - s = 3 mod 4, got " + base->center_sig().str());
    const int L = base->dim_v(), blocks = mu + nu;
    Metric metric;
    std::vector<std::string> vl;
    StructureTensor t(L * blocks, base->dim_z());
    for (int b = 0; b < blocks; ++b) {
        int flip = b < mu ? 1 : -1;
        for (int i = 0; i < L; ++i) {
            metric.push_back(base->module_metric()[i]);
            vl.push_back(base->v_labels()[i] + "." + std::to_string(b + 1));
            for (const auto& c : base->structure().row(i)) t.add_entry(b * L + i, b * L + c.col, c.k, flip * c.sign);
        }
    }
    Provenance p;
    p.kind = Provenance::Kind::SUM;
    p.base = base->provenance().base;
    p.steps = base->provenance().steps;
    p.parent = base;
    p.mu = mu;
    p.nu = nu;
    std::optional<Partition> part;
    if (base->pinned_partition()) {
        part = Partition();
        for (int b = 0; b < blocks; ++b) part->insert(part->end(), base->pinned_partition()->begin(), base->pinned_partition()->end());
    }
    return std::make_shared<const Algebra>(base->center_sig(), metric, std::move(t), vl, base->z_labels(), p, part);
}

const char* to_string(VolumeAction v) {
    switch (v) {
        case VolumeAction::PLUS_ID: return "+Id";
        case VolumeAction::MINUS_ID: return "-Id";
        default: return "NEITHER";
    }
}

Volume volume_element(const Algebra& sum, int block) {
    int L = sum.dim_v();
    if (sum.provenance().kind == Provenance::Kind::SUM) {
        L = sum.provenance().parent->dim_v();
        if (block < 0 || block >= sum.provenance().mu + sum.provenance().nu)
            throw std::out_of_range("volume_element: no such block");
    } else if (block != 0) {
        throw std::out_of_range("volume_element: no such block");
    }
    SignedPermutation w = SignedPermutation::identity(sum.dim_v());
    for (int k = sum.dim_z(); k >= 1; --k) w = j_operator(sum, k).compose(w);
    Volume v{VolumeAction::NEITHER, SignedPermutation::identity(L)};
    for (int i = 0; i < L; ++i) {
        int g = block * L + i;
        int img = w.image[g] - block * L;
        if (img < 0 || img >= L) throw std::logic_error("volume_element: J leaves the block");
        v.omega.image[i] = img;
        v.omega.sign[i] = w.sign[g];
    }
    if (v.omega == SignedPermutation::identity(L)) v.action = VolumeAction::PLUS_ID;
    if (v.omega == SignedPermutation::identity(L).negated()) v.action = VolumeAction::MINUS_ID;
    return v;
}

LieMorphism swap_isomorphism(const AlgebraPtr& sum) {
    const auto& p = sum->provenance();
    if (p.kind != Provenance::Kind::SUM) throw std::invalid_argument("swap_isomorphism: not a direct sum");
    if (!has_two_module_types(sum->center_sig()))
        throw std::invalid_argument("swap_isomorphism: requires r - s = 3 mod 4");
    AlgebraPtr dst = build_sum(p.parent, p.nu, p.mu);
    const int L = p.parent->dim_v();
    IntegralMap m{SignedPermutation::identity(sum->dim_v()), SignedPermutation::identity(sum->dim_z()).negated()};
    for (int b = 0; b < p.mu + p.nu; ++b) {
        int target = b < p.mu ? p.nu + b : b - p.mu;
        for (int i = 0; i < L; ++i) m.module.image[b * L + i] = target * L + i;
    }
    return make_morphism(sum, dst, m);
}

Certificate sum_sbg(const AlgebraPtr& sum, int samples, std::uint64_t seed) {
    const auto& p = sum->provenance();
    if (p.kind != Provenance::Kind::SUM || sum->r() == 0 || sum->s() == 0) return sbg_decision(sum, samples, seed);
    auto bw = sbg_witness(*p.parent);
    if (!bw) throw std::runtime_error("sum_sbg: base has no witness");
    // w = v (+) 0 (+) ... (+) 0
    SbgWitness w{bw->z0, ExactVector(sum->dim_v())};
    std::copy(bw->v.begin(), bw->v.end(), w.v.begin());
    auto ok = verify_sbg_witness(*sum, w);
    if (!ok) throw std::runtime_error("sum_sbg: embedded witness failed: " + ok.witness);
    Certificate c;
    c.kind = CertificateKind::SBG_NO;
    c.src = sum;
    c.src_sig = sum->center_sig();
    c.src_dim_v = sum->dim_v();
    c.sbg = w;
    c.reason = "base witness embedded in the first summand";
    return c;
}

}  // namespace phtype
