#pragma once

#include <vector>

#include "catalan/mpoly.hpp"

namespace catalan {

// Small square matrix (2x2 or 4x4) over MPoly; all entries share one ring.
class SeriesMatrix {
 public:
  SeriesMatrix(int dim, const VarSet& ring);
  static SeriesMatrix identity(int dim, const VarSet& ring);

  int dim() const { return dim_; }
  const VarSet& ring() const { return ring_; }
  MPoly& at(int r, int c) { return entries_[r * dim_ + c]; }
  const MPoly& at(int r, int c) const { return entries_[r * dim_ + c]; }

  SeriesMatrix& operator+=(const SeriesMatrix& o);
  SeriesMatrix& operator-=(const SeriesMatrix& o);
  friend SeriesMatrix operator+(SeriesMatrix a, const SeriesMatrix& b) {
    return a += b;
  }
  friend SeriesMatrix operator-(SeriesMatrix a, const SeriesMatrix& b) {
    return a -= b;
  }
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);

  bool operator==(const SeriesMatrix& o) const;

  // Coefficient matrix of (grading variable)^deg.
  SeriesMatrix coefficient_of(int var, int deg) const;

 private:
  int dim_;
  VarSet ring_;
  std::vector<MPoly> entries_;
};

// Inverse of a matrix that is the identity modulo the grading variable
// (variable 0): I - X + X^2 - ... Throws std::domain_error otherwise.
SeriesMatrix neumann_inverse(const SeriesMatrix& m);

std::vector<MPoly> mat_vec(const SeriesMatrix& m, const std::vector<MPoly>& v);

}  // namespace catalan
