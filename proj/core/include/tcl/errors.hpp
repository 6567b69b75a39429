#pragma once

#include <stdexcept>
#include <string>

namespace tcl {

enum class errc {
  invalid_argument,
  overflow,
  singular_model,
  bad_reduction,
  not_a_solution,
  no_normalization,
  normalization_bug,
  not_found,
  bad_dataset,
  unencoded_case,
};

const char* errc_name(errc e);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace tcl
