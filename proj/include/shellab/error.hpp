#pragma once

#include <stdexcept>
#include <string>

namespace shellab {

enum class Errc {
  CycleDetected,
  RedundantCover,
  NotBounded,
  NotComparable,
  UnknownElement,
  MissingLabel,
  NotADescent,
  NotANonCover,
  NotALattice,
  NotALinearExtension,
  ShapeMismatch,
  NotFromBottom,
  UnknownFixture,
  BadInput,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace shellab
