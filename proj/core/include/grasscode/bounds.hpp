#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grasscode/subspace.hpp"

namespace grasscode {

// Evaluation result: exact rational when feasible, otherwise only the log2
// value with the flag set.
struct BoundValue {
    std::optional<BigRat> exact;
    double log2_value = 0.0;
    bool log_only = false;
    std::string note;  // e.g. ratio exceeding 1 where a probability was expected
};

struct BoundQuery {
    std::string bound_id;
    // integer-valued parameters; x is carried separately since it may be rational
    std::map<std::string, std::int64_t> params;
    std::optional<BigRat> x;
};

struct CatalogEntry {
    std::string id;
    std::string formula;              // human-readable closed form
    std::vector<std::string> params;  // required parameter names
};

const std::vector<CatalogEntry>& bounds_catalog();

BoundValue evaluate_bound(const BoundQuery& query);

// Validation predicate for the weight bound w <= q^(k(k-1)/2).
bool weight_bound_holds(std::int64_t w, std::int64_t k, const BigInt& q);

} // namespace grasscode
