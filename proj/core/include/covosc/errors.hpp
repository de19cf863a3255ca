#pragma once

#include <stdexcept>
#include <string>

namespace covosc {

// Base class for library errors that are not plain precondition violations.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A numerical routine could not reach its accuracy contract: quadrature
// estimates at successive orders disagree, a series truncation bound cannot
// be met, or an integrand produced a non-finite sample.
class AccuracyError : public Error {
 public:
  explicit AccuracyError(const std::string& what) : Error(what) {}
};

}  // namespace covosc
