#pragma once

#include <stdexcept>
#include <string>

namespace hearts {

enum class ErrorKind {
  Shape,
  InvalidPrime,
  InvalidAlgebra,
  PathCapExceeded,
  InvalidModule,
  InvalidMorphism,
  NotMono,
  NotEpi,
  NotExact,
  InvalidSubcategory,
  InvalidPair,
  ConstructionFailed,
  NotInHeart,
  Workspace,
  Usage,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hearts
