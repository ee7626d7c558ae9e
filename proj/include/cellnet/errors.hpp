#pragma once

#include <stdexcept>
#include <string>

namespace cellnet {

// Base class for all domain errors.  `name()` is the stable machine-readable
// identifier (the CLI prints it verbatim and exits 1); what() carries a
// human-readable diagnostic.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& msg)
      : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define CELLNET_DEFINE_ERROR(Name)                        \
  class Name : public DomainError {                       \
   public:                                                \
    explicit Name(const std::string& msg)                 \
        : DomainError(#Name, msg) {}                      \
  }

CELLNET_DEFINE_ERROR(CellOutOfRange);       // cell index outside 1..n
CELLNET_DEFINE_ERROR(MissingInput);         // some cell lacks a type-l edge
CELLNET_DEFINE_ERROR(DuplicateInput);       // some cell has two type-l edges
CELLNET_DEFINE_ERROR(TypeIndexOutOfRange);  // input type index outside 1..k
CELLNET_DEFINE_ERROR(MismatchedCellCount);  // operation needs equal cell counts
CELLNET_DEFINE_ERROR(SizeMismatch);         // matrix/vector dimensions disagree
CELLNET_DEFINE_ERROR(NotSquare);            // operation requires a square matrix
CELLNET_DEFINE_ERROR(WrongSize);            // permutation size != cell count
CELLNET_DEFINE_ERROR(NotOneInput);          // operation requires exactly one input type
CELLNET_DEFINE_ERROR(SizeTooSmall);         // construction undefined below minimum size
CELLNET_DEFINE_ERROR(SizeLimitExceeded);    // exhaustive operation above guard (see guards.hpp)
CELLNET_DEFINE_ERROR(IndexOutOfRange);      // element index outside a table
CELLNET_DEFINE_ERROR(AmbiguousLargestCycle);// cycle extension has no canonical choice
CELLNET_DEFINE_ERROR(ParseError);           // malformed network file

#undef CELLNET_DEFINE_ERROR

}  // namespace cellnet
