#include "cellnet/span.hpp"

#include <algorithm>

namespace cellnet {

std::vector<Rational> vectorize(const ExactMatrix& m) {
  if (m.rows() != m.cols())
    throw NotSquare("vectorize expects a square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  return m.flat();
}

std::size_t SpanForm::reduce(std::vector<Rational>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivots_[r]];
    if (c == 0) continue;
    const Rational f = c;  // pivot entry is 1, so the multiplier is c itself
    for (std::size_t j = pivots_[r]; j < ambient_; ++j)
      if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
  }
  for (std::size_t j = 0; j < ambient_; ++j)
    if (v[j] != 0) return j;
  return ambient_;
}

bool SpanForm::add(std::vector<Rational> v) {
  if (v.size() != ambient_)
    throw SizeMismatch("span vector has wrong dimension");
  std::size_t p = reduce(v);
  if (p == ambient_) return false;
  // Normalize to a leading 1, then clear column p in the existing rows so the
  // basis stays fully reduced.
  const Rational lead = v[p];
  for (std::size_t j = p; j < ambient_; ++j)
    if (v[j] != 0) v[j] /= lead;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = rows_[r][p];
    if (c == 0) continue;
    for (std::size_t j = p; j < ambient_; ++j)
      if (v[j] != 0) rows_[r][j] -= c * v[j];
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

bool SpanForm::contains(const std::vector<Rational>& v) const {
  if (v.size() != ambient_)
    throw SizeMismatch("span vector has wrong dimension");
  std::vector<Rational> w = v;
  return reduce(w) == ambient_;
}

SpanForm span_form(const MatrixFamily& family, std::size_t rows,
                   std::size_t cols) {
  SpanForm f(rows * cols);
  for (const ExactMatrix& m : family) {
    if (m.rows() != rows || m.cols() != cols)
      throw SizeMismatch("span family members must share one shape");
    f.add(vectorize(m));
  }
  return f;
}

SpanForm span_form(const MatrixFamily& family) {
  if (family.empty())
    throw SizeMismatch("span of an empty family needs an explicit shape");
  return span_form(family, family.front().rows(), family.front().cols());
}

bool in_span(const ExactMatrix& m, const SpanForm& family_form) {
  if (m.rows() * m.cols() != family_form.ambient_dim())
    throw SizeMismatch("matrix shape does not match span ambient dimension");
  return family_form.contains(vectorize(m));
}

bool span_equal(const MatrixFamily& a, const MatrixFamily& b) {
  if (a.empty() || b.empty())
    throw SizeMismatch("span comparison needs nonempty families");
  if (a.front().rows() != b.front().rows() ||
      a.front().cols() != b.front().cols())
    throw SizeMismatch("span comparison needs equal cell counts");
  return span_form(a) == span_form(b);
}

}  // namespace cellnet
