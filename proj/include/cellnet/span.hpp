#pragma once

// Exact linear spans of matrix families.  A SpanForm is the unique reduced
// row echelon basis of span{vectorize(M) : M in family}; because RREF is
// canonical, two families span the same subspace iff their SpanForms are
// structurally equal.  All arithmetic is exact rational.

#include <cstddef>
#include <vector>

#include "cellnet/matrix.hpp"

namespace cellnet {

// Row-major flattening of a matrix into a coordinate vector.
std::vector<Rational> vectorize(const ExactMatrix& m);

class SpanForm {
 public:
  explicit SpanForm(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  // Adds a vector to the span.  Returns true if the rank grew.  The stored
  // basis stays fully reduced (leading 1s, zeros above and below each pivot,
  // rows ordered by pivot column), so the final basis does not depend on
  // insertion order.
  bool add(std::vector<Rational> v);

  // True iff v already lies in the span.
  bool contains(const std::vector<Rational>& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<std::vector<Rational>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool operator==(const SpanForm& o) const {
    return ambient_ == o.ambient_ && pivots_ == o.pivots_ && rows_ == o.rows_;
  }
  bool operator!=(const SpanForm& o) const { return !(*this == o); }

 private:
  // Reduces v against the current basis in place; returns the column of its
  // leading nonzero entry, or ambient_ if v reduced to zero.
  std::size_t reduce(std::vector<Rational>& v) const;

  std::size_t ambient_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

// Canonical form of the span of a matrix family.  All members must share one
// shape (else SizeMismatch).  An empty family is allowed only via the sized
// overload.
SpanForm span_form(const MatrixFamily& family);
SpanForm span_form(const MatrixFamily& family, std::size_t rows,
                   std::size_t cols);

// True iff m lies in span(family); shapes must agree.
bool in_span(const ExactMatrix& m, const SpanForm& family_form);

// True iff the two families span the same subspace (canonical forms equal).
bool span_equal(const MatrixFamily& a, const MatrixFamily& b);

}  // namespace cellnet
