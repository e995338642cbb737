#pragma once

#include "phtype/algebra.hpp"
#include "phtype/morphism.hpp"
#include "phtype/obstruction.hpp"

namespace phtype {

// r - s = 3 mod 4: two non-equivalent minimal modules exist
bool has_two_module_types(Signature sig);

// mu type-1 copies of base, then nu type-2 copies (all J negated)
AlgebraPtr build_sum(const AlgebraPtr& base, int mu, int nu);

enum class VolumeAction { PLUS_ID, MINUS_ID, NEITHER };
const char* to_string(VolumeAction v);

struct Volume {
    VolumeAction action;
    SignedPermutation omega;  // J_1 ... J_{r+s} restricted to the block
};
// block is 0-based over the mu + nu summands
Volume volume_element(const Algebra& sum, int block);

// n_{r,s}(mu,nu) -> n_{r,s}(nu,mu): type-1 copy j to type-2 copy j, type-2 copy q to type-1 copy q, Z -> -Z
LieMorphism swap_isomorphism(const AlgebraPtr& sum);

Certificate sum_sbg(const AlgebraPtr& sum, int samples = 100, std::uint64_t seed = 1);

}  // namespace phtype
