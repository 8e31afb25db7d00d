#pragma once

#include <stdexcept>
#include <string>

namespace hyperavg {

// Error taxonomy for the whole library. Throwing operations document which
// codes they can raise; tests match on the code, not the message text.
enum class Errc {
  empty_edge,
  vertex_out_of_range,
  duplicate_vertex_in_edge,
  same_vertex,
  no_edges,
  too_few_vertices,
  non_integral_count,
  isolated_vertex,
  bad_parameters,
  overflow,
  no_convergence,
  spectral_connectivity_mismatch,
  zero_vector,
  disconnected,
  not_regular,
  degenerate_rate,
  not_codegree_regular,
  not_uniform,
  budget_exceeded,
  parse_error,
  unknown_builtin,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hyperavg
