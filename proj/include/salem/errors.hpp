#pragma once

#include <stdexcept>
#include <string>

namespace salem {

/// A Sturm count was requested at an endpoint that is itself a root.
class EndpointRootError : public std::domain_error {
 public:
  EndpointRootError(const std::string& what, std::string hint)
      : std::domain_error(what), hint_(std::move(hint)) {}
  const std::string& hint() const noexcept { return hint_; }

 private:
  std::string hint_;
};

/// The trace polynomial does not have the form C_n * (x - 2 or x^2 - 4) * Q - 1.
class NoStructuralForm : public std::domain_error {
  using std::domain_error::domain_error;
};

/// (n, t) is covered by none of the constructions.
class UnsupportedParameters : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Generator hypotheses violated (degree, separability, root location,
/// coprimality with C_n, parity of t).
class InvalidGeneratorSpec : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A mathematical invariant that must hold by construction failed.
class InternalInvariantError : public std::logic_error {
  using std::logic_error::logic_error;
};

/// Too many consecutive shifts could not be decided.
class GenerationAborted : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace salem
