#pragma once

#include "phtype/algebra.hpp"

#include <optional>
#include <string>

namespace phtype {

struct LieMorphism {
    AlgebraPtr src;
    AlgebraPtr dst;
    ExactMatrix A;  // dst.dim_v x src.dim_v
    ExactMatrix B;  // dst.dim_z x src.dim_v
    ExactMatrix C;  // dst.dim_z x src.dim_z
};

// integral map: module and center as signed permutations
struct IntegralMap {
    SignedPermutation module;
    SignedPermutation center;
};

LieMorphism make_morphism(AlgebraPtr src, AlgebraPtr dst, const IntegralMap& m);
LieMorphism identity_morphism(const AlgebraPtr& a);
LieMorphism compose(const LieMorphism& g, const LieMorphism& f);
std::optional<IntegralMap> as_integral(const LieMorphism& f);

VerifyResult verify_homomorphism(const LieMorphism& f);
VerifyResult verify_conjugation(const LieMorphism& f);

struct MorphismClass {
    MapClass center_action;
    bool integral;
};
MorphismClass classify(const LieMorphism& f);

// A+- -> A+-, B+- -> B-+, center a signed permutation reversing the metric;
// partitions come from the pinned (provenance) decompositions
VerifyResult verify_isom_class(const LieMorphism& f);

struct Normalized {
    LieMorphism f;
    Rational mu;
    int cc_sign;  // C C^t = cc_sign * Id
};
Normalized normalize_isomorphism(const LieMorphism& f);

// isomorphism from src onto the algebra built from the swapped chain
std::optional<LieMorphism> canonical_iso(const AlgebraPtr& src);
std::optional<LieMorphism> canonical_iso(int r, int s);

enum class ObstructionKind { POSSIBLE, DIMENSION, SIGNATURE };
struct Obstruction {
    ObstructionKind kind;
    std::string reason;
};
Obstruction center_signature_obstruction(Signature src, long long src_dim_v, Signature dst, long long dst_dim_v);
Obstruction center_signature_obstruction(const Algebra& src, const Algebra& dst);

}  // namespace phtype
