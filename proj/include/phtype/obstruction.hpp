#pragma once

#include "phtype/algebra.hpp"
#include "phtype/morphism.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace phtype {

struct AdjointMatrix {
    ExactVector x;
    ExactMatrix m;  // (r+s) x 2l, column beta = center coordinates of [X, v_beta]
};

AdjointMatrix adjoint_matrix(const Algebra& a, const ExactVector& x);
// det(M_X M_X^T)
Rational gram_det(const Algebra& a, const ExactVector& x);
bool ad_surjective(const Algebra& a, const ExactVector& x);

struct ScanOptions {
    int grid_radius = -1;     // -1: 1 when 2l <= 8, otherwise no grid
    int random_samples = -1;  // -1: 0 with a grid, 2000 without
    int rational_samples = 0;
    bool null_samples = true;  // structured null vectors (not counted on a grid)
    bool gram = true;          // also compare gram_det with the rank
    bool stop_on_null_surjective = false;
    std::uint64_t seed = 1;
};

struct ScanReport {
    long long points = 0;
    long long null_points = 0;
    long long null_surjective = 0;
    long long nonnull_not_surjective = 0;
    long long gram_mismatch = 0;  // gram_det = 0 disagreeing with <X,X> = 0
    int grid_radius = 0;
    std::optional<ExactVector> null_surjective_witness;
    std::optional<ExactVector> nonnull_failure_witness;
    std::optional<ExactVector> gram_witness;

    // rank(M_X) = r+s iff <X,X> != 0 on every point seen
    bool equivalence_holds() const { return null_surjective == 0 && nonnull_not_surjective == 0; }
};

ScanReport surjectivity_scan(const Algebra& a, const ScanOptions& opt = {});

struct ParityEdge {
    int a;
    int b;
    int product;  // required value of s_a s_b
};

struct ParityResult {
    bool feasible = true;
    std::vector<int> assignment;   // +-1 per module basis vector, when feasible
    std::vector<ParityEdge> cycle;  // closed walk a0-a1-...-a0, when infeasible
};

// s_a s_b = -eps_a eps_b for every pair with [v_a, v_b] != 0
std::vector<ParityEdge> parity_constraints(const Algebra& src);
ParityResult solve_parity(const Algebra& src);
// re-check without the solver: consecutive, closed, real edges, product -1
VerifyResult verify_odd_cycle(const Algebra& src, const std::vector<ParityEdge>& cycle);

enum class CertificateKind { ISO, NOT_ISO_DIM, NOT_ISO_SIGNATURE, NOT_ISO_PARITY, INCONCLUSIVE, SBG_YES, SBG_NO };
const char* to_string(CertificateKind k);

struct SbgWitness {
    ExactVector z0;
    ExactVector v;
};

struct Certificate {
    CertificateKind kind = CertificateKind::INCONCLUSIVE;
    std::string reason;
    AlgebraPtr src;
    AlgebraPtr dst;
    Signature src_sig{};
    Signature dst_sig{};
    long long src_dim_v = 0;
    long long dst_dim_v = 0;
    std::optional<LieMorphism> morphism;
    std::vector<ParityEdge> cycle;
    std::optional<ParityResult> parity;
    std::optional<ScanReport> precondition;
    std::optional<SbgWitness> sbg;
    int samples = 0;
};

struct ParityCertificate {
    ParityResult result;
    bool precondition_ok = false;
    ScanReport scan;
};

// the solver always runs; the result only refutes an anti-isometric
// isomorphism when precondition_ok (dst: ad_X onto iff <X,X> != 0)
ParityCertificate parity_certificate(const Algebra& src, const Algebra& dst, MapClass center_class,
                                     const ScanOptions& opt = {});

VerifyResult verify_sbg_witness(const Algebra& a, const SbgWitness& w);
std::optional<SbgWitness> sbg_witness(const Algebra& a);
Certificate sbg_decision(const AlgebraPtr& a, int samples = 100, std::uint64_t seed = 1);

// re-verifies the evidence carried by a certificate
VerifyResult verify_certificate(const Certificate& c);

}  // namespace phtype
