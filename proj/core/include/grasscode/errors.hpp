#pragma once

#include <stdexcept>
#include <string>

namespace grasscode {

// Domain failures (unsatisfiable queries, degenerate inputs, budget guards).
// Contract violations use std::invalid_argument directly.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

inline domain_error unsatisfiable_error(const std::string& msg) {
    return domain_error("unsatisfiable", msg);
}
inline domain_error degenerate_seed_error(const std::string& msg) {
    return domain_error("degenerate-seed", msg);
}
inline domain_error degenerate_code_error(const std::string& msg) {
    return domain_error("degenerate-code", msg);
}
inline domain_error unsupported_graph_error(const std::string& msg) {
    return domain_error("unsupported-graph", msg);
}
inline domain_error budget_error(const std::string& msg) {
    return domain_error("budget-exceeded", msg);
}
inline domain_error io_error(const std::string& msg) {
    return domain_error("io", msg);
}

} // namespace grasscode
