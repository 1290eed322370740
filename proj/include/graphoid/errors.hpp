#ifndef GRAPHOID_ERRORS_HPP
#define GRAPHOID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graphoid {

// Base class for all library errors. CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A triplet whose component sets are not pairwise disjoint, or whose
// variables fall outside the universe.
class InvalidTripletError : public Error {
 public:
  explicit InvalidTripletError(const std::string& what) : Error(what) {}
};

// An exhaustive scan was asked to run above its configured bound.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

// Conditioning on an event of probability zero; the query is undefined.
class ZeroEvidenceError : public Error {
 public:
  explicit ZeroEvidenceError(const std::string& what) : Error(what) {}
};

// A Gaussian model (or conditioning block) is not regular: non-positive
// definite covariance or a singular conditioning block beyond tolerance.
class RegularityError : public Error {
 public:
  explicit RegularityError(const std::string& what) : Error(what) {}
};

// Malformed or inconsistent input: bad JSON shape, unknown variable names,
// non-permutation orderings, invalid block lists.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

// Set arguments that violate an operation's preconditions (e.g. a subset
// relation that does not hold).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

}  // namespace graphoid

#endif  // GRAPHOID_ERRORS_HPP
