#include "phtype/extension.hpp"

#include "phtype/catalog.hpp"

#include <array>

namespace phtype {

AlgebraPtr factor_algebra(StepKind step) {
    switch (step) {
        case StepKind::BY_8_0: return base_algebra({8, 0});
        case StepKind::BY_0_8: return base_algebra({0, 8});
        default: return base_algebra({4, 4});
    }
}

int parent_sign(StepKind step, int j) {
    switch (step) {
        case StepKind::BY_8_0: return j < 8 ? -1 : 1;
        case StepKind::BY_0_8: return -1;
        default: {
            // +A for j in {2..5, 13..16}, -A for j in {1, 6..12} (1-based)
            static const std::array<int, 16> s44 = {-1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1};
            return s44.at(j);
        }
    }
}

AlgebraPtr extend(const AlgebraPtr& a, StepKind step) {
    if (a->provenance().kind == Provenance::Kind::SUM)
        throw std::invalid_argument("extend: direct sums are not supported parents");
    if (!sign_sorted(a->module_metric()))
        throw std::invalid_argument("extend: parent module metric is not ordered (+...+,-...-)");
    AlgebraPtr f = factor_algebra(step);
    const int L = a->dim_v();
    const int r = a->r(), s = a->s(), n = a->dim_z();
    const int N = 16 * L;

    // center slots
    std::vector<int> parent_slot(n), factor_slot(8);
    for (int k = 0; k < n; ++k) {
        if (step == StepKind::BY_0_8)
            parent_slot[k] = k;
        else
            parent_slot[k] = k < r ? k : k + 8;
    }
    for (int k = 0; k < 8; ++k) factor_slot[k] = (step == StepKind::BY_0_8 ? r + s : r) + k;
    std::vector<CenterOrigin> origin(n + 8);
    for (int k = 0; k < n; ++k) origin[parent_slot[k]] = {false, k};
    for (int k = 0; k < 8; ++k) origin[factor_slot[k]] = {true, k};

    // module order: flattened 16*i+j, then positives first (stable)
    const Metric& pm = a->module_metric();
    const Metric& fm = f->module_metric();
    Metric flat(N);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < 16; ++j) flat[16 * i + j] = pm[i] * fm[j];
    std::vector<int> index(N);
    int next = 0;
    for (int x = 0; x < N; ++x)
        if (flat[x] > 0) index[x] = next++;
    for (int x = 0; x < N; ++x)
        if (flat[x] < 0) index[x] = next++;
    Metric metric(N);
    for (int x = 0; x < N; ++x) metric[index[x]] = flat[x];

    StructureTensor t(N, n + 8);
    // [x_i (x) a_j, x_p (x) a_p] : parent constants on j = q
    for (int i = 0; i < L; ++i)
        for (const auto& c : a->structure().row(i))
            for (int j = 0; j < 16; ++j)
                t.add_entry(index[16 * i + j], index[16 * c.col + j], parent_slot[c.k],
                            parent_sign(step, j) * c.sign);
    // factor constants on i = p, weighted by the parent metric
    for (int j = 0; j < 16; ++j)
        for (const auto& c : f->structure().row(j))
            for (int i = 0; i < L; ++i)
                t.add_entry(index[16 * i + j], index[16 * i + c.col], factor_slot[c.k], pm[i] * c.sign);

    std::vector<std::string> vl(N), zl(n + 8);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < 16; ++j)
            vl[index[16 * i + j]] = "(" + a->v_labels()[i] + "," + f->v_labels()[j] + ")";
    for (int k = 0; k < n + 8; ++k) zl[k] = "Z" + std::to_string(k + 1);

    Signature sig = a->center_sig();
    switch (step) {
        case StepKind::BY_8_0: sig.pos += 8; break;
        case StepKind::BY_0_8: sig.neg += 8; break;
        default: sig.pos += 4; sig.neg += 4;
    }

    Provenance p;
    p.kind = Provenance::Kind::EXTENDED;
    p.base = a->provenance().base;
    p.steps = a->provenance().steps;
    p.steps.push_back(step);
    p.parent = a;
    p.factor = f;
    p.module_index = index;
    p.center_origin = origin;

    // x (x) a lies in A iff both factors lie in A or both in B
    std::optional<Partition> part;
    if (a->pinned_partition() && f->pinned_partition()) {
        part = Partition(N);
        for (int i = 0; i < L; ++i)
            for (int j = 0; j < 16; ++j)
                (*part)[index[16 * i + j]] = (*a->pinned_partition())[i] == (*f->pinned_partition())[j] ? 0 : 1;
    }
    return std::make_shared<const Algebra>(sig, metric, std::move(t), vl, zl, p, part);
}

SignedPermutation operator_E(const Algebra& a8) {
    if (!(a8.center_sig() == Signature{8, 0}) || a8.dim_v() != 16)
        throw std::invalid_argument("operator_E: factor must be n_(8,0)");
    SignedPermutation e = SignedPermutation::identity(16);
    for (int k = 8; k >= 1; --k) e = j_operator(a8, k).compose(e);
    return e;
}

Signature Chain::signature() const {
    Signature sig = base;
    for (auto st : steps) {
        switch (st) {
            case StepKind::BY_8_0: sig.pos += 8; break;
            case StepKind::BY_0_8: sig.neg += 8; break;
            default: sig.pos += 4; sig.neg += 4;
        }
    }
    return sig;
}

std::string Chain::str() const {
    std::string s = base.str();
    for (auto st : steps) s += std::string(" + ") + to_string(st);
    return s;
}

Chain swapped(const Chain& c) {
    Chain o{{c.base.neg, c.base.pos}, {}};
    for (auto st : c.steps) o.steps.push_back(swapped(st));
    return o;
}

AlgebraPtr extension_chain(const Chain& c) {
    AlgebraPtr a = base_algebra(c.base);
    for (auto st : c.steps) a = extend(a, st);
    return a;
}

AlgebraPtr extension_chain(Signature base, const std::vector<StepKind>& steps) {
    return extension_chain(Chain{base, steps});
}

std::optional<Chain> default_chain(int r, int s) {
    if (r < 0 || s < 0) return std::nullopt;
    int max_steps = (r + s) / 4 + 1;
    for (int total = 0; total <= max_steps; ++total)
        for (int c = 0; c <= total; ++c)
            for (auto id : catalog_ids()) {
                int dr = r - id.pos - 4 * c, ds = s - id.neg - 4 * c;
                if (dr < 0 || ds < 0 || dr % 8 || ds % 8) continue;
                int x = dr / 8, y = ds / 8;
                if (x + y + c != total) continue;
                Chain ch{id, {}};
                ch.steps.insert(ch.steps.end(), x, StepKind::BY_8_0);
                ch.steps.insert(ch.steps.end(), y, StepKind::BY_0_8);
                ch.steps.insert(ch.steps.end(), c, StepKind::BY_4_4);
                return ch;
            }
    return std::nullopt;
}

AlgebraPtr construct(int r, int s) {
    auto c = default_chain(r, s);
    if (!c)
        throw UnsupportedSignature("n_(" + std::to_string(r) + "," + std::to_string(s) +
                                   ") is not constructible: not a catalog signature (" + catalog_list() +
                                   ") extended by (8,0), (0,8), (4,4) steps");
    return extension_chain(*c);
}

AlgebraPtr restrict_center(const AlgebraPtr& a, int keep_pos, int keep_neg) {
    if (keep_pos < 0 || keep_neg < 0 || keep_pos > a->r() || keep_neg > a->s() || keep_pos + keep_neg == 0)
        throw std::invalid_argument("restrict_center: bad counts");
    std::vector<int> slot(a->dim_z(), -1);
    std::vector<std::string> zl;
    for (int k = 0; k < keep_pos; ++k) {
        slot[k] = k;
        zl.push_back(a->z_labels()[k]);
    }
    for (int k = 0; k < keep_neg; ++k) {
        slot[a->r() + k] = keep_pos + k;
        zl.push_back(a->z_labels()[a->r() + k]);
    }
    StructureTensor t(a->dim_v(), keep_pos + keep_neg);
    for (const auto& e : a->structure().entries())
        if (slot[e.k] >= 0) t.set_entry(e.i, e.j, slot[e.k], e.sign);
    Provenance p;
    p.kind = Provenance::Kind::CUSTOM;
    return std::make_shared<const Algebra>(Signature{keep_pos, keep_neg}, a->module_metric(), std::move(t),
                                           a->v_labels(), zl, p);
}

std::optional<AlgebraPtr> restricted_minimal(int r, int s) {
    long long want;
    try {
        want = min_module_dim(r, s);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
    for (int extra = 1; extra <= 8; ++extra)
        for (int a = 0; a <= extra; ++a) {
            auto c = default_chain(r + a, s + extra - a);
            if (!c) continue;
            AlgebraPtr big = extension_chain(*c);
            if (big->dim_v() == want) return restrict_center(big, r, s);
        }
    return std::nullopt;
}

int tensor_index(const Algebra& extended, int i, int j) {
    const auto& p = extended.provenance();
    if (p.kind != Provenance::Kind::EXTENDED) throw std::invalid_argument("tensor_index: not an extended algebra");
    return p.module_index.at(16 * i + j);
}

}  // namespace phtype
