#pragma once

#include <stdexcept>
#include <string>

namespace corona {

/// Error categories raised by the library. The names are stable and are
/// what the CLI reports on computation failures.
enum class errc {
    out_of_range,
    loop_edge,
    malformed_graph6,
    malformed_edge_list,
    bad_family_params,
    non_square,
    zero_denominator,
    zero_polynomial,
    complex_roots,
    degenerate_leading_coefficient,
    non_symmetric,
    empty_graph,
    not_regular,
    disconnected,
    rounding_guard_violated,
    hypothesis_violated,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }
    const char* code_name() const noexcept { return errc_name(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace corona
