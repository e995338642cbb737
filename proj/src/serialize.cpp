#include "phtype/serialize.hpp"

#include "phtype/catalog.hpp"

#include <cstdio>

namespace phtype {

std::string algebra_name(const Algebra& a) {
    std::string n = "n_" + a.center_sig().str();
    const auto& p = a.provenance();
    if (p.kind == Provenance::Kind::SUM) n += "(" + std::to_string(p.mu) + "," + std::to_string(p.nu) + ")";
    return n;
}

std::string chain_string(const Algebra& a) {
    const auto& p = a.provenance();
    if (p.kind == Provenance::Kind::CUSTOM) return "custom";
    std::string s = p.base.str();
    for (auto st : p.steps) s += std::string(" + ") + to_string(st);
    return s;
}

namespace {

const char* kind_name(Provenance::Kind k) {
    switch (k) {
        case Provenance::Kind::BASE: return "base";
        case Provenance::Kind::EXTENDED: return "extended";
        case Provenance::Kind::SUM: return "sum";
        default: return "custom";
    }
}

}  // namespace

Json algebra_to_json(const Algebra& a) {
    Json j;
    j["name"] = algebra_name(a);
    j["signature"] = {a.r(), a.s()};
    j["dim_v"] = a.dim_v();
    j["dim_z"] = a.dim_z();
    j["module_metric"] = a.module_metric();
    j["v_labels"] = a.v_labels();
    j["z_labels"] = a.z_labels();
    Json entries = Json::array();
    for (const auto& e : a.structure().entries()) entries.push_back({e.i + 1, e.j + 1, e.k + 1, e.sign});
    j["structure"] = entries;
    const auto& p = a.provenance();
    Json prov;
    prov["kind"] = kind_name(p.kind);
    if (p.kind != Provenance::Kind::CUSTOM) {
        prov["base"] = {p.base.pos, p.base.neg};
        Json steps = Json::array();
        for (auto st : p.steps) steps.push_back(to_string(st));
        prov["steps"] = steps;
        prov["chain"] = chain_string(a);
    }
    j["provenance"] = prov;
    if (p.kind == Provenance::Kind::SUM) {
        j["blocks"] = Json::array({Json{{"type", 1}, {"count", p.mu}}, Json{{"type", 2}, {"count", p.nu}}});
    }
    if (a.pinned_partition()) j["partition"] = *a.pinned_partition();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(tensor_checksum(a)));
    j["checksum"] = buf;
    return j;
}

AlgebraPtr algebra_from_json(const Json& j) {
    Signature sig{j.at("signature").at(0).get<int>(), j.at("signature").at(1).get<int>()};
    Metric metric = j.at("module_metric").get<Metric>();
    StructureTensor t(static_cast<int>(metric.size()), sig.dim());
    for (const auto& e : j.at("structure")) {
        int i = e.at(0).get<int>() - 1, jj = e.at(1).get<int>() - 1, k = e.at(2).get<int>() - 1;
        int sign = e.at(3).get<int>();
        if (i < 0 || jj < 0 || k < 0 || i >= t.dim_v() || jj >= t.dim_v() || k >= t.dim_z() || (sign != 1 && sign != -1))
            throw std::invalid_argument("algebra_from_json: bad structure entry " + e.dump());
        t.set_entry(i, jj, k, sign);
    }
    Provenance p;
    if (j.contains("provenance") && j["provenance"].contains("base")) {
        p.base = {j["provenance"]["base"].at(0).get<int>(), j["provenance"]["base"].at(1).get<int>()};
        for (const auto& s : j["provenance"]["steps"]) p.steps.push_back(parse_step(s.get<std::string>()));
    }
    std::optional<Partition> part;
    if (j.contains("partition")) part = j["partition"].get<Partition>();
    return std::make_shared<const Algebra>(sig, metric, std::move(t), j.at("v_labels").get<std::vector<std::string>>(),
                                           j.at("z_labels").get<std::vector<std::string>>(), p, part);
}

Json rational_to_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

Json matrix_to_json(const ExactMatrix& m) {
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(i, c)));
        out.push_back(row);
    }
    return out;
}

Json vector_to_json(const ExactVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rational_to_json(x));
    return out;
}

Json morphism_to_json(const LieMorphism& f) {
    Json j;
    j["src"] = algebra_name(*f.src);
    j["src_chain"] = chain_string(*f.src);
    j["dst"] = algebra_name(*f.dst);
    j["dst_chain"] = chain_string(*f.dst);
    j["A"] = matrix_to_json(f.A);
    j["B"] = matrix_to_json(f.B);
    j["C"] = matrix_to_json(f.C);
    auto cls = classify(f);
    j["class"] = {{"center_action", to_string(cls.center_action)}, {"integral", cls.integral}};
    return j;
}

Json scan_to_json(const ScanReport& r) {
    Json j;
    j["points"] = r.points;
    j["grid_radius"] = r.grid_radius;
    j["null_points"] = r.null_points;
    j["null_surjective"] = r.null_surjective;
    j["nonnull_not_surjective"] = r.nonnull_not_surjective;
    j["gram_mismatch"] = r.gram_mismatch;
    j["equivalence_holds"] = r.equivalence_holds();
    if (r.null_surjective_witness) j["null_surjective_witness"] = vector_to_json(*r.null_surjective_witness);
    if (r.nonnull_failure_witness) j["nonnull_failure_witness"] = vector_to_json(*r.nonnull_failure_witness);
    return j;
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["kind"] = to_string(c.kind);
    j["reason"] = c.reason;
    if (c.src) {
        j["src"] = algebra_name(*c.src);
        j["src_chain"] = chain_string(*c.src);
    } else if (c.src_sig.dim() > 0) {
        j["src"] = "n_" + c.src_sig.str();
    }
    if (c.dst) {
        j["dst"] = algebra_name(*c.dst);
        j["dst_chain"] = chain_string(*c.dst);
    } else if (c.dst_sig.dim() > 0) {
        j["dst"] = "n_" + c.dst_sig.str();
    }
    if (c.kind == CertificateKind::NOT_ISO_DIM || c.kind == CertificateKind::NOT_ISO_SIGNATURE) {
        j["dims"] = {{"src", {{"module", c.src_dim_v}, {"center", c.src_sig.dim()}}},
                     {"dst", {{"module", c.dst_dim_v}, {"center", c.dst_sig.dim()}}}};
    }
    if (c.morphism) j["morphism"] = morphism_to_json(*c.morphism);
    if (!c.cycle.empty()) {
        Json cyc = Json::array();
        for (const auto& e : c.cycle)
            cyc.push_back({{"a", c.src->v_labels()[e.a]}, {"b", c.src->v_labels()[e.b]}, {"product", e.product}});
        j["cycle"] = cyc;
    }
    if (c.parity) {
        j["parity"] = {{"feasible", c.parity->feasible}};
        if (c.parity->feasible) j["parity"]["assignment"] = c.parity->assignment;
    }
    if (c.precondition) j["precondition"] = scan_to_json(*c.precondition);
    if (c.sbg) {
        j["witness"] = {{"Z0", vector_to_json(c.sbg->z0)}, {"v", vector_to_json(c.sbg->v)}};
    }
    if (c.samples > 0) j["samples"] = c.samples;
    return j;
}

}  // namespace phtype
