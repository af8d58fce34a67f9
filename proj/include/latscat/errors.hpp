#pragma once

#include <stdexcept>
#include <string>

namespace latscat {

struct RuleDefinitionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotABasisMap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInjective : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoStabilization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotIsometry : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownOperator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace latscat
