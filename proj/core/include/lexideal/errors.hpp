#ifndef LEXIDEAL_ERRORS_HPP
#define LEXIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lexideal {

/// Structured error codes. Every throwing operation throws `Error` with one
/// of these codes so callers (and the CLI exit-code mapping) can dispatch
/// without parsing messages.
enum class Errc {
  ambient_mismatch,
  degree_mismatch,
  degree_out_of_range,
  no_successor,
  no_predecessor,
  empty_segment,
  mixed_degrees,
  zero_or_unit_ideal,
  unit_ideal,
  not_a_permutation,
  no_faces_of_that_dimension,
  too_large,
  too_many_variables,
  too_many_generators,
  guard_exceeded,
  normalization_violated,
  hypothesis_not_met,
  not_completely_lexsegment,
  recipe_constraint_violated,
  syntax_error,
  index_out_of_range,
  invalid_argument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

  /// True for the resource guards that the CLI maps to exit code 3.
  bool is_guard() const {
    return code_ == Errc::too_large || code_ == Errc::too_many_variables ||
           code_ == Errc::too_many_generators || code_ == Errc::guard_exceeded;
  }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lexideal

#endif
