#pragma once

#include "phtype/algebra.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace phtype {

class UnsupportedSignature : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

const std::vector<Signature>& catalog_ids();
bool is_catalog_id(Signature id);
std::string catalog_list();

AlgebraPtr base_algebra(Signature id);

// printed row/column order of the commutator table, 0-based basis indices
std::vector<int> table_order(Signature id);
std::string table_note(Signature id);

std::uint64_t tensor_checksum(const Algebra& a);

// throws std::domain_error when no known base entry is reachable
long long min_module_dim(int r, int s);

}  // namespace phtype
