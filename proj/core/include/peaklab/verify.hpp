#pragma once

#include "peaklab/group_algebra.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace peaklab {

struct VerifyResult {
    std::string id;
    int n = 0;
    bool ok = false;
    bool expected = true;  // false for the registered negative results
    std::string detail;
    std::optional<std::string> counterexample;
};

struct TheoremEntry {
    std::string id;
    std::string statement;
    bool expected;  // whether the statement is claimed to hold
    std::function<VerifyResult(int n)> run;
    int min_n = 1;
};

// All registered checks, in a fixed order.
const std::vector<TheoremEntry>& theorem_registry();
const TheoremEntry& find_theorem(const std::string& id);  // throws std::invalid_argument

struct VerifyOptions {
    bool force = false;  // lift the default guards (S_n n <= 6, B_n n <= 4) to the group guards
};

VerifyResult verify_identity(int n, const std::string& id, VerifyOptions opt = {});
// Every id whose statement is claimed to hold. Ids whose size guard n exceeds are listed in
// `skipped` instead; if every id is out of range the resource error is rethrown.
std::vector<VerifyResult> verify_all(int n, VerifyOptions opt = {}, std::vector<std::string>* skipped = nullptr);

// One side of a product identity: family evaluated at x or at y.
struct Factor {
    StructureFamily family;
    bool at_y;
};
// Checks prod(factors) == rhs(xy) on the full grid 0..D x 0..D with D the largest degree.
VerifyResult check_product_identity(int n, const std::vector<Factor>& lhs, StructureFamily rhs);

struct TableCell {
    StructureFamily row, col;
    std::optional<StructureFamily> value;  // empty for cells without a claimed value
    bool ok = true;
};
// Products e^row_i e^col_j of idempotents against delta_ij e^value_i.
std::vector<TableCell> multiplication_table(int n);

// e_i e_j == delta_ij e_i for the family's idempotents.
VerifyResult check_idempotents(int n, StructureFamily f);

}  // namespace peaklab
