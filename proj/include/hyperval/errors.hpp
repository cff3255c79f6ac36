#pragma once

#include <stdexcept>
#include <string>

namespace hyperval {

// Error kinds surfaced through the CLI as exit code 2 (precondition) or 1
// (internal invariant failure).
enum class errc {
    rank_mismatch,
    index_out_of_range,
    zero_input,
    negative_input,
    division_by_zero,
    not_square_free,
    factor_degree_too_large,
    sqrt_not_representable,
    nonzero_sqrt_part,
    curve_mismatch,
    parse_error,
    precondition_unverified,
    witness_construction_failed,
    internal,
};

class error : public std::runtime_error {
public:
    error(errc k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc k, const std::string& msg) { throw error(k, msg); }

inline void require(bool cond, errc k, const std::string& msg) {
    if (!cond) fail(k, msg);
}

} // namespace hyperval
