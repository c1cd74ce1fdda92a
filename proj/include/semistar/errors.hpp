//
// semistar - finite semigroup representation analysis
//
// Error hierarchy. InvariantViolation and its children signal internal
// consistency failures (oracle disagreements); everything else reports a
// problem with the caller's input.
//

#ifndef SEMISTAR_ERRORS_HPP_
#define SEMISTAR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace semistar {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  using Error::Error;
};

struct AssociativityError : Error {
  int a, b, c;
  AssociativityError(int a_, int b_, int c_)
      : Error("associativity fails at (" + std::to_string(a_) + ", "
              + std::to_string(b_) + ", " + std::to_string(c_) + ")"),
        a(a_),
        b(b_),
        c(c_) {}
};

struct ZeroAxiomError : Error {
  int a;
  explicit ZeroAxiomError(int a_)
      : Error("declared zero does not absorb element " + std::to_string(a_)),
        a(a_) {}
};

struct NotIdempotent : Error {
  using Error::Error;
};

struct NotRegularClass : Error {
  using Error::Error;
};

struct NotRegular : Error {
  using Error::Error;
};

struct NotInvolution : Error {
  using Error::Error;
};

struct NotEquivalent : Error {
  using Error::Error;
};

struct NotSemisimple : Error {
  using Error::Error;
};

struct NotReesCompatible : Error {
  using Error::Error;
};

struct NotCorollaryForm : Error {
  using Error::Error;
};

struct ConditionFails : Error {
  using Error::Error;
};

struct NoApex : Error {
  using Error::Error;
};

struct SizeLimit : Error {
  using Error::Error;
};

// A Hermitian matrix handed to positive_factor was not positive definite.
// Carries the signature (pos, neg) so callers can try the opposite sign.
struct IndefiniteError : Error {
  int pos, neg;
  IndefiniteError(int p, int q)
      : Error("matrix is not positive definite, signature ("
              + std::to_string(p) + ", " + std::to_string(q) + ")"),
        pos(p),
        neg(q) {}
};

struct FactorizationObstruction : Error {
  using Error::Error;
};

// Internal consistency failures.  These never indicate bad input; they mean
// two routes to the same answer disagreed.
struct InvariantViolation : Error {
  using Error::Error;
};

struct OracleMismatch : InvariantViolation {
  using InvariantViolation::InvariantViolation;
};

struct MultipleSurvivors : InvariantViolation {
  using InvariantViolation::InvariantViolation;
};

}  // namespace semistar

#endif  // SEMISTAR_ERRORS_HPP_
