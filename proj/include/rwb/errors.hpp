#ifndef RWB_ERRORS_HPP_
#define RWB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rwb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// tree-core
struct MalformedTree : Error {
  using Error::Error;
};
struct TreeMismatch : Error {
  using Error::Error;
};
struct EnumerationBudgetExceeded : Error {
  using Error::Error;
};

// semigroup-core
struct NotIdempotent : Error {
  using Error::Error;
};
struct PreconditionFailed : Error {
  using Error::Error;
};
struct MalformedAction : Error {
  using Error::Error;
};
struct NotLayered : Error {
  using Error::Error;
};
struct NoIdempotentInStage : Error {
  using Error::Error;
};

// words
struct DomainsOverlap : Error {
  using Error::Error;
};
struct NotAChain : Error {
  using Error::Error;
};
struct AlphabetMismatch : Error {
  using Error::Error;
};
struct ModeMismatch : Error {
  using Error::Error;
};

// search
struct BudgetExceeded : Error {
  using Error::Error;
};

// polynomial-delta
struct ArityMismatch : Error {
  using Error::Error;
};
struct UndefinedProduct : Error {
  using Error::Error;
};
struct NotIntegerValued : Error {
  explicit NotIntegerValued(const std::string& msg, std::string witness_point)
      : Error(msg), witness(std::move(witness_point)) {}
  std::string witness;
};
struct NonzeroAtOrigin : Error {
  using Error::Error;
};
struct EmptyBox : Error {
  using Error::Error;
};
struct OutOfWindow : Error {
  using Error::Error;
};

// dsl-cli
struct ParseError : Error {
  ParseError(int line_, int col_, const std::string& expected_)
      : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) +
              ": expected " + expected_),
        line(line_),
        col(col_),
        expected(expected_) {}
  int line;
  int col;
  std::string expected;
};
struct ResolutionError : Error {
  explicit ResolutionError(const std::string& name_)
      : Error("unresolved name: " + name_), name(name_) {}
  std::string name;
};

}  // namespace rwb

#endif  // RWB_ERRORS_HPP_
