#pragma once

#include "phtype/algebra.hpp"

#include <optional>
#include <vector>

namespace phtype {

// the minimal module used as the tensor factor of a step
AlgebraPtr factor_algebra(StepKind step);
// sign on the parent constants for the diagonal factor index j (0-based, 0..15)
int parent_sign(StepKind step, int j);

AlgebraPtr extend(const AlgebraPtr& a, StepKind step);

// E = J_1 J_2 ... J_8 on the n_{8,0} factor
SignedPermutation operator_E(const Algebra& a8);

struct Chain {
    Signature base;
    std::vector<StepKind> steps;

    Signature signature() const;
    std::string str() const;
};

Chain swapped(const Chain& c);
AlgebraPtr extension_chain(const Chain& c);
AlgebraPtr extension_chain(Signature base, const std::vector<StepKind>& steps);

// fewest steps; ties go to earlier catalog entries and fewer (4,4) steps
std::optional<Chain> default_chain(int r, int s);
// catalog algebra or the default chain; throws UnsupportedSignature otherwise
AlgebraPtr construct(int r, int s);

// keep the first keep_pos positive and first keep_neg negative center directions
AlgebraPtr restrict_center(const AlgebraPtr& a, int keep_pos, int keep_neg);
// n_(r,s) as a restriction of a constructible algebra whose module is already of minimal
// dimension for (r,s); used when (r,s) itself has no catalog chain
std::optional<AlgebraPtr> restricted_minimal(int r, int s);

// final index of the tensor vector (parent i, factor j), both 0-based
int tensor_index(const Algebra& extended, int i, int j);

}  // namespace phtype
