#include "catalan/series_matrix.hpp"

#include <stdexcept>

namespace catalan {

SeriesMatrix::SeriesMatrix(int dim, const VarSet& ring)
    : dim_(dim), ring_(ring) {
  if (dim != 2 && dim != 4)
    throw std::invalid_argument("SeriesMatrix: dim must be 2 or 4");
  entries_.assign(dim_ * dim_, MPoly::zero(ring_));
}

SeriesMatrix SeriesMatrix::identity(int dim, const VarSet& ring) {
  SeriesMatrix m(dim, ring);
  for (int i = 0; i < dim; ++i) m.at(i, i) = MPoly::one(ring);
  return m;
}

SeriesMatrix& SeriesMatrix::operator+=(const SeriesMatrix& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("SeriesMatrix: dim mismatch");
  for (int i = 0; i < dim_ * dim_; ++i) entries_[i] += o.entries_[i];
  return *this;
}

SeriesMatrix& SeriesMatrix::operator-=(const SeriesMatrix& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("SeriesMatrix: dim mismatch");
  for (int i = 0; i < dim_ * dim_; ++i) entries_[i] -= o.entries_[i];
  return *this;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.dim_ != b.dim_)
    throw std::invalid_argument("SeriesMatrix: dim mismatch");
  SeriesMatrix r(a.dim_, a.ring_);
  for (int i = 0; i < a.dim_; ++i)
    for (int j = 0; j < a.dim_; ++j) {
      MPoly s(a.ring_);
      for (int k = 0; k < a.dim_; ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        s += a.at(i, k) * b.at(k, j);
      }
      r.at(i, j) = std::move(s);
    }
  return r;
}

bool SeriesMatrix::operator==(const SeriesMatrix& o) const {
  return dim_ == o.dim_ && entries_ == o.entries_;
}

SeriesMatrix SeriesMatrix::coefficient_of(int var, int deg) const {
  SeriesMatrix r(dim_, ring_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      r.at(i, j) = at(i, j).coefficient_of(var, deg);
  return r;
}

SeriesMatrix neumann_inverse(const SeriesMatrix& m) {
  const VarSet& R = m.ring();
  SeriesMatrix x = m - SeriesMatrix::identity(m.dim(), R);
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (!x.at(i, j).is_zero() && x.at(i, j).valuation(0) < 1)
        throw std::domain_error(
            "neumann_inverse: matrix is not the identity modulo " + R.name(0));
  SeriesMatrix inv = SeriesMatrix::identity(m.dim(), R);
  SeriesMatrix pw = x;
  Int sign = -1;
  for (int n = 1; n <= R.cap(0); ++n) {
    bool all_zero = true;
    for (int i = 0; i < m.dim() && all_zero; ++i)
      for (int j = 0; j < m.dim(); ++j)
        if (!pw.at(i, j).is_zero()) {
          all_zero = false;
          break;
        }
    if (all_zero) break;
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j) inv.at(i, j) += pw.at(i, j) * sign;
    pw = pw * x;
    sign = -sign;
  }
  return inv;
}

std::vector<MPoly> mat_vec(const SeriesMatrix& m, const std::vector<MPoly>& v) {
  if (static_cast<int>(v.size()) != m.dim())
    throw std::invalid_argument("mat_vec: size mismatch");
  std::vector<MPoly> r(m.dim(), MPoly::zero(m.ring()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
      r[i] += m.at(i, j) * v[j];
    }
  return r;
}

}  // namespace catalan
