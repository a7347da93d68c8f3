#pragma once

#include <stdexcept>
#include <string>

namespace cartankit {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dimension or index mismatch between operands.
struct shape_error : error {
  using error::error;
};

/// A documented precondition was violated by the caller.
struct contract_error : error {
  using error::error;
};

/// Commutator of basis elements i and j left the span of the basis.
struct not_closed_error : contract_error {
  not_closed_error(std::size_t i_, std::size_t j_)
      : contract_error("basis is not closed under commutators at pair (" +
                       std::to_string(i_) + "," + std::to_string(j_) + ")"),
        i(i_), j(j_) {}
  std::size_t i, j;
};

struct dependent_basis_error : contract_error {
  dependent_basis_error() : contract_error("basis matrices are linearly dependent") {}
};

struct closure_cap_error : error {
  explicit closure_cap_error(std::size_t cap_)
      : error("group closure exceeded cap of " + std::to_string(cap_) + " elements"),
        cap(cap_) {}
  std::size_t cap;
};

/// Malformed input document; `path` names the offending field.
struct parse_error : error {
  parse_error(std::string path_, const std::string& what_)
      : error("at " + path_ + ": " + what_), path(std::move(path_)) {}
  std::string path;
};

}  // namespace cartankit
