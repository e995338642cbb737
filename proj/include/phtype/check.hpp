#pragma once

#include "phtype/extension.hpp"
#include "phtype/obstruction.hpp"

#include <cstdint>

namespace phtype {

struct CheckOptions {
    bool automorphism = false;
    bool anti = false;
    std::uint64_t seed = 1;
};

// (b,b) catalog base followed by (4,4) steps, so automorphisms act on one basis
Chain automorphism_chain(int r);

Certificate check_isomorphism(Signature src, Signature dst, const CheckOptions& opt = {});

// 0 iso, 1 not iso, 2 inconclusive
int exit_code(const Certificate& c);

}  // namespace phtype
