#pragma once

#include "phtype/algebra.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace phtype {

struct GoldenTable {
    std::string name;  // n32, j80, ...
    std::string csv;
};
// generated at configure time from tests/data/tables
const std::vector<GoldenTable>& golden_tables();

struct AcceptanceOptions {
    bool quick = false;
    std::uint64_t seed = 1;
    std::vector<int> only;  // empty: all criteria
    // replaces catalog algebras in the table and axiom criteria
    std::vector<std::pair<Signature, AlgebraPtr>> catalog_override;
};

struct CriterionResult {
    int id;
    std::string title;
    bool ok;
    std::string detail;
    double seconds;
    double budget;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});
std::string format_result(const CriterionResult& r);

// first differing cell between two csv tables, empty when equal
std::string diff_csv(const std::string& expected, const std::string& actual);

}  // namespace phtype
