#pragma once

#include "phtype/algebra.hpp"

#include <string>

namespace phtype {

enum class TableFormat { MD, CSV };
TableFormat parse_table_format(const std::string& s);

// commutator table; catalog algebras use their printed row/column order
std::string render_table(const Algebra& a, TableFormat f);
// J_k v_alpha for every module vector (rows) and center index (columns)
std::string render_j_table(const Algebra& a, TableFormat f);

}  // namespace phtype
