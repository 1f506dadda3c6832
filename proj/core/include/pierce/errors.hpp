#pragma once

#include <stdexcept>
#include <string>

namespace pierce {

// Every recoverable failure in the toolkit carries one of these codes so the
// CLI can map it to a stable exit status and tests can assert on the exact
// failure kind instead of matching message text.
enum class Errc {
    dimension_mismatch,
    degenerate_support,
    witness_on_hyperplane,
    degenerate_vertices,
    retry_exhausted,
    not_separated,
    not_pinned,
    not_loose,
    no_transversal,
    invalid_r,
    invalid_k,
    index_out_of_range,
    empty_color_class,
    insufficient_points,
    too_few_points,
    clique_not_found,
    unsupported_dimension,
    empty_edge_set,
    density_too_low,
    parse_error,
    invalid_argument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace pierce
