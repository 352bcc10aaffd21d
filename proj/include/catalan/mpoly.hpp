#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "catalan/bigint.hpp"

namespace catalan {

// Ordered list of series variables with per-variable truncation caps.
// Exponent vectors are packed into a single 64-bit key, 16 bits per variable,
// variable 0 in the most significant field; adding keys adds exponent vectors
// (caps are far below 2^15, so fields never carry into each other).
class VarSet {
 public:
  using Key = std::uint64_t;
  static constexpr int kMaxVars = 4;
  static constexpr int kFieldBits = 16;
  static constexpr int kMaxCap = 20000;

  VarSet() = default;
  VarSet(std::vector<std::string> names, std::vector<int> caps);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int cap(int i) const { return caps_[i]; }
  const std::vector<int>& caps() const { return caps_; }
  int cap_sum() const;

  // Index of a variable; index() throws on unknown names, find() returns -1.
  int index(std::string_view var) const;
  int find(std::string_view var) const;

  int shift(int i) const { return kFieldBits * (size() - 1 - i); }
  int exp(Key k, int i) const {
    return static_cast<int>((k >> shift(i)) & 0xffffu);
  }
  Key unit(int i) const { return Key{1} << shift(i); }
  Key pack(const std::vector<int>& exps) const;
  std::vector<int> unpack(Key k) const;
  bool within_caps(Key k) const;

  bool operator==(const VarSet&) const = default;
  std::string describe() const;

 private:
  std::vector<std::string> names_;
  std::vector<int> caps_;
};

// Sparse multivariate polynomial over Int, truncated to the ring caps.
// No stored coefficient is zero and no stored exponent exceeds its cap;
// within that window all arithmetic is exact.
class MPoly {
 public:
  using Key = VarSet::Key;
  using TermMap = std::unordered_map<Key, Int>;

  MPoly() = default;
  explicit MPoly(VarSet ring) : ring_(std::move(ring)) {}

  static MPoly zero(const VarSet& ring) { return MPoly(ring); }
  static MPoly constant(const VarSet& ring, Int c);
  static MPoly one(const VarSet& ring) { return constant(ring, 1); }
  static MPoly monomial(const VarSet& ring, const std::vector<int>& exps,
                        Int c = 1);
  static MPoly variable(const VarSet& ring, std::string_view var);

  const VarSet& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Int coeff(const std::vector<int>& exps) const;
  Int coeff_key(Key k) const;
  Int constant_term() const { return coeff_key(0); }

  // Largest/smallest exponent of `var` over all terms; -1 / INT_MAX for zero.
  int degree(int var) const;
  int valuation(int var) const;

  // Adds c * key, applying truncation and dropping a resulting zero.
  void add_term(Key k, const Int& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Int& c);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Int& c) { return a *= c; }
  friend MPoly operator*(const Int& c, MPoly a) { return a *= c; }
  MPoly operator-() const;

  bool operator==(const MPoly& o) const;

  // Canonical order: ascending in variable 0, then descending lexicographic
  // on the remaining exponents. This is the serialization order.
  std::vector<std::pair<Key, Int>> sorted_terms() const;

  // Coefficient of var^deg as a polynomial with that exponent zeroed out.
  MPoly coefficient_of(int var, int deg) const;

 private:
  void require_same_ring(const MPoly& o) const;

  VarSet ring_;
  TermMap terms_;
};

// Truncated inverse of a unit with constant term +1 or -1, via the geometric
// series; all caps are finite so the non-constant part is nilpotent. Throws
// std::domain_error if the constant term is not a unit.
MPoly geom_inverse(const MPoly& p);

// Collapses all exponents of `var` to zero (substitution var = 1).
MPoly eval_one(const MPoly& p, int var);
MPoly eval_one(const MPoly& p, std::string_view var);

// Substitution target -> scaler^k * target for a monomial scaler given by
// its exponent vector: each term with target-exponent j gains k*j copies of
// the scaler exponents.
MPoly subst_scale(const MPoly& p, int target, const std::vector<int>& scaler,
                  int k);

// Exchanges the exponents of two variables (their caps must agree).
MPoly swap_vars(const MPoly& p, int v1, int v2);

// Maps each exponent e of `var` to mult*e + shift. A negative image signals
// an internal inconsistency at the call site and throws std::logic_error,
// as does overflowing the cap.
MPoly remap_exponent(const MPoly& p, int var, int mult, int shift);

// q-Pochhammer product prod_{j=0}^{k-1} (1 - a*b^j); k = 0 gives 1.
MPoly pochhammer(const MPoly& a, const MPoly& b, int k);

}  // namespace catalan
