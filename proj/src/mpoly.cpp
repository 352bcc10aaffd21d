#include "catalan/mpoly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace catalan {

VarSet::VarSet(std::vector<std::string> names, std::vector<int> caps)
    : names_(std::move(names)), caps_(std::move(caps)) {
  if (names_.empty() || names_.size() > kMaxVars)
    throw std::invalid_argument("VarSet: need 1.." +
                                std::to_string(kMaxVars) + " variables");
  if (names_.size() != caps_.size())
    throw std::invalid_argument("VarSet: names/caps size mismatch");
  for (int c : caps_)
    if (c < 0 || c > kMaxCap)
      throw std::invalid_argument("VarSet: cap out of range");
}

int VarSet::cap_sum() const {
  int s = 0;
  for (int c : caps_) s += c;
  return s;
}

int VarSet::find(std::string_view var) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == var) return i;
  return -1;
}

int VarSet::index(std::string_view var) const {
  int i = find(var);
  if (i < 0)
    throw std::invalid_argument("VarSet: unknown variable '" +
                                std::string(var) + "' in " + describe());
  return i;
}

VarSet::Key VarSet::pack(const std::vector<int>& exps) const {
  if (static_cast<int>(exps.size()) != size())
    throw std::invalid_argument("VarSet::pack: wrong exponent count");
  Key k = 0;
  for (int i = 0; i < size(); ++i) {
    if (exps[i] < 0 || exps[i] > 0xffff)
      throw std::invalid_argument("VarSet::pack: exponent out of range");
    k |= Key(exps[i]) << shift(i);
  }
  return k;
}

std::vector<int> VarSet::unpack(Key k) const {
  std::vector<int> exps(size());
  for (int i = 0; i < size(); ++i) exps[i] = exp(k, i);
  return exps;
}

bool VarSet::within_caps(Key k) const {
  for (int i = 0; i < size(); ++i)
    if (exp(k, i) > caps_[i]) return false;
  return true;
}

std::string VarSet::describe() const {
  std::string s = "{";
  for (int i = 0; i < size(); ++i) {
    if (i) s += ", ";
    s += names_[i] + "<=" + std::to_string(caps_[i]);
  }
  return s + "}";
}

MPoly MPoly::constant(const VarSet& ring, Int c) {
  MPoly p(ring);
  if (c != 0) p.terms_.emplace(0, std::move(c));
  return p;
}

MPoly MPoly::monomial(const VarSet& ring, const std::vector<int>& exps,
                      Int c) {
  MPoly p(ring);
  Key k = ring.pack(exps);
  if (c != 0 && ring.within_caps(k)) p.terms_.emplace(k, std::move(c));
  return p;
}

MPoly MPoly::variable(const VarSet& ring, std::string_view var) {
  std::vector<int> exps(ring.size(), 0);
  exps[ring.index(var)] = 1;
  return monomial(ring, exps);
}

Int MPoly::coeff(const std::vector<int>& exps) const {
  return coeff_key(ring_.pack(exps));
}

Int MPoly::coeff_key(Key k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Int(0) : it->second;
}

int MPoly::degree(int var) const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, ring_.exp(k, var));
  return d;
}

int MPoly::valuation(int var) const {
  int v = std::numeric_limits<int>::max();
  for (const auto& [k, c] : terms_) v = std::min(v, ring_.exp(k, var));
  return v;
}

void MPoly::add_term(Key k, const Int& c) {
  if (c == 0 || !ring_.within_caps(k)) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MPoly::require_same_ring(const MPoly& o) const {
  if (!(ring_ == o.ring_))
    throw std::invalid_argument("MPoly: ring mismatch " + ring_.describe() +
                                " vs " + o.ring_.describe());
}

MPoly& MPoly::operator+=(const MPoly& o) {
  require_same_ring(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  require_same_ring(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r(*this);
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.require_same_ring(b);
  MPoly r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;

  // Bucket by the exponent of variable 0 (the grading variable in every
  // solver ring) so pairs that overflow it are skipped wholesale.
  const int g_cap = a.ring_.cap(0);
  auto bucket = [&](const MPoly& p) {
    std::vector<std::vector<std::pair<MPoly::Key, const Int*>>> bk(g_cap + 1);
    for (const auto& [k, c] : p.terms()) bk[a.ring_.exp(k, 0)].push_back({k, &c});
    return bk;
  };
  auto ba = bucket(a), bb = bucket(b);
  for (int ga = 0; ga <= g_cap; ++ga) {
    if (ba[ga].empty()) continue;
    for (int gb = 0; ga + gb <= g_cap; ++gb) {
      if (bb[gb].empty()) continue;
      for (const auto& [ka, ca] : ba[ga])
        for (const auto& [kb, cb] : bb[gb]) {
          MPoly::Key k = ka + kb;
          if (!a.ring_.within_caps(k)) continue;
          auto [it, inserted] = r.terms_.try_emplace(k, 0);
          it->second += (*ca) * (*cb);
        }
    }
  }
  for (auto it = r.terms_.begin(); it != r.terms_.end();)
    it = it->second == 0 ? r.terms_.erase(it) : std::next(it);
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

bool MPoly::operator==(const MPoly& o) const {
  return ring_ == o.ring_ && terms_ == o.terms_;
}

std::vector<std::pair<MPoly::Key, Int>> MPoly::sorted_terms() const {
  std::vector<std::pair<Key, Int>> v(terms_.begin(), terms_.end());
  const int s0 = ring_.shift(0);
  const Key rest = (Key{1} << s0) - 1;
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    Key xa = a.first >> s0, xb = b.first >> s0;
    if (xa != xb) return xa < xb;
    return (a.first & rest) > (b.first & rest);
  });
  return v;
}

MPoly MPoly::coefficient_of(int var, int deg) const {
  MPoly r(ring_);
  for (const auto& [k, c] : terms_)
    if (ring_.exp(k, var) == deg)
      r.terms_.emplace(k - (Key(deg) << ring_.shift(var)), c);
  return r;
}

MPoly geom_inverse(const MPoly& p) {
  const VarSet& R = p.ring();
  Int c0 = p.constant_term();
  if (c0 != 1 && c0 != -1)
    throw std::domain_error(
        "geom_inverse: constant term " + c0.str() +
        " is not a unit for Neumann inversion");
  // 1/p = c0 * sum_m (-c0 * (p - c0))^m; the sum is finite under truncation.
  MPoly rest = p - MPoly::constant(R, c0);
  MPoly t = c0 == 1 ? -rest : std::move(rest);
  MPoly acc = MPoly::one(R);
  MPoly pw = t;
  int guard = R.cap_sum() + 1;
  while (!pw.is_zero()) {
    if (--guard < 0)
      throw std::logic_error("geom_inverse: series failed to terminate");
    acc += pw;
    pw *= t;
  }
  if (c0 == -1) acc *= Int(-1);
  return acc;
}

MPoly eval_one(const MPoly& p, int var) {
  const VarSet& R = p.ring();
  MPoly r(R);
  const MPoly::Key mask = ~(MPoly::Key(0xffff) << R.shift(var));
  for (const auto& [k, c] : p.terms()) r.add_term(k & mask, c);
  return r;
}

MPoly eval_one(const MPoly& p, std::string_view var) {
  return eval_one(p, p.ring().index(var));
}

MPoly subst_scale(const MPoly& p, int target, const std::vector<int>& scaler,
                  int k) {
  const VarSet& R = p.ring();
  if (static_cast<int>(scaler.size()) != R.size())
    throw std::invalid_argument("subst_scale: scaler exponent count");
  MPoly r(R);
  for (const auto& [key, c] : p.terms()) {
    long long j = R.exp(key, target);
    std::vector<int> e = R.unpack(key);
    bool keep = true;
    for (int i = 0; i < R.size(); ++i) {
      long long ne = e[i] + k * j * static_cast<long long>(scaler[i]);
      if (ne > R.cap(i)) {
        keep = false;  // sound: exponents only ever grow downstream
        break;
      }
      e[i] = static_cast<int>(ne);
    }
    if (keep) r.add_term(R.pack(e), c);
  }
  return r;
}

MPoly swap_vars(const MPoly& p, int v1, int v2) {
  const VarSet& R = p.ring();
  if (R.cap(v1) != R.cap(v2))
    throw std::invalid_argument("swap_vars: caps differ");
  MPoly r(R);
  for (const auto& [key, c] : p.terms()) {
    std::vector<int> e = R.unpack(key);
    std::swap(e[v1], e[v2]);
    r.add_term(R.pack(e), c);
  }
  return r;
}

MPoly remap_exponent(const MPoly& p, int var, int mult, int shift) {
  const VarSet& R = p.ring();
  MPoly r(R);
  for (const auto& [key, c] : p.terms()) {
    long long e = R.exp(key, var);
    long long ne = mult * e + shift;
    if (ne < 0 || ne > R.cap(var))
      throw std::logic_error("remap_exponent: image " + std::to_string(ne) +
                             " of exponent " + std::to_string(e) +
                             " out of range for " + R.name(var));
    std::vector<int> exps = R.unpack(key);
    exps[var] = static_cast<int>(ne);
    r.add_term(R.pack(exps), c);
  }
  return r;
}

MPoly pochhammer(const MPoly& a, const MPoly& b, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative k");
  const VarSet& R = a.ring();
  MPoly prod = MPoly::one(R);
  MPoly bj = MPoly::one(R);
  for (int j = 0; j < k; ++j) {
    MPoly abj = a * bj;
    if (abj.is_zero()) break;  // remaining factors are 1 within caps
    prod *= MPoly::one(R) - abj;
    bj *= b;
  }
  return prod;
}

}  // namespace catalan
