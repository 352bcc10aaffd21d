#include "catalan/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace catalan {

Polyomino Polyomino::from_word(const CatalanWord& w) {
  Polyomino p;
  p.heights.reserve(w.letters.size());
  for (int l : w.letters) p.heights.push_back(l + 1);
  return p;
}

CatalanWord Polyomino::word() const {
  CatalanWord w;
  w.letters.reserve(heights.size());
  for (int h : heights) w.letters.push_back(h - 1);
  return w;
}

long long Polyomino::area() const {
  long long a = 0;
  for (int h : heights) a += h;
  return a;
}

bool is_valid_word(const std::vector<int>& letters, std::string* why) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] < 0) {
      if (why) *why = "letter " + std::to_string(i + 1) + " is negative";
      return false;
    }
    if (i == 0 && letters[0] != 0) {
      if (why) *why = "first letter must be 0";
      return false;
    }
    if (i > 0 && letters[i] > letters[i - 1] + 1) {
      if (why)
        *why = "letter " + std::to_string(i + 1) +
               " exceeds previous letter + 1";
      return false;
    }
  }
  return true;
}

bool is_valid_heights(const std::vector<int>& heights, std::string* why) {
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (heights[i] < 1) {
      if (why) *why = "column " + std::to_string(i + 1) + " is not positive";
      return false;
    }
    if (i == 0 && heights[0] != 1) {
      if (why) *why = "first column must have height 1";
      return false;
    }
    if (i > 0 && heights[i] > heights[i - 1] + 1) {
      if (why)
        *why = "column " + std::to_string(i + 1) +
               " exceeds previous column + 1";
      return false;
    }
  }
  return true;
}

long long black_capacity(const Polyomino& p) {
  long long bck = 0;
  for (int i = 0; i < p.length(); ++i) {
    int h = p.heights[i];
    bck += (i % 2 == 0) ? (h + 1) / 2 : h / 2;
  }
  return bck;
}

VerticalCapacities vertical_capacities(const Polyomino& p) {
  VerticalCapacities v;
  for (int i = 0; i < p.length(); ++i)
    (i % 2 == 0 ? v.ver : v.white) += p.heights[i];
  return v;
}

SPair s_statistics(const Polyomino& p) {
  VerticalCapacities v = vertical_capacities(p);
  SPair sp;
  if (p.length() % 2 == 1) {
    sp.s = v.ver;
    sp.s_bar = v.white;
  } else {
    sp.s = v.white;
    sp.s_bar = v.ver;
  }
  return sp;
}

Polyomino diagonal_bijection(const Polyomino& p) {
  int n = p.length();
  Polyomino q;
  q.heights.resize(n);
  for (int i = 0; i < n; ++i) {
    int m = 0;
    while (i + m < n && p.heights[i + m] >= m + 1) ++m;
    q.heights[n - 1 - i] = m;
  }
  return q;
}

long long dyck_black_cells(const Polyomino& p) {
  int n = p.length();
  if (n == 0) return 0;
  // Height profile of the lattice path at integer abscissas 0..2n.
  std::vector<int> prof;
  prof.reserve(2 * n + 1);
  int cur = 0;
  prof.push_back(0);
  for (int i = 0; i < n; ++i) {
    while (cur > p.heights[i] - 1) prof.push_back(--cur);
    prof.push_back(++cur);
  }
  while (cur > 0) prof.push_back(--cur);
  // Diamond centered at (a, b) lies under the path iff prof[a] >= b + 1;
  // black means b = a - 1 (mod 4).
  long long black = 0;
  for (int a = 1; a < 2 * n; ++a) {
    int top = prof[a] - 1;
    int r = ((a - 1) % 4 + 4) % 4;
    if (top >= r) black += (top - r) / 4 + 1;
  }
  return black;
}

unsigned long long catalan_number(int n) {
  if (n < 0 || n > 33)
    throw std::invalid_argument("catalan_number: n out of range");
  unsigned long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

int enumeration_cap() {
  if (const char* env = std::getenv("CATALAN_ENUM_CAP")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return kDefaultEnumerationCap;
}

std::vector<CatalanWord> catalan_words(int n) {
  if (n < 0) throw std::invalid_argument("catalan_words: negative length");
  std::vector<CatalanWord> out;
  if (n == 0) {
    out.push_back(CatalanWord{});
    return out;
  }
  out.reserve(catalan_number(std::min(n, 14)));
  for_each_polyomino(n, [&](const std::vector<int>& h, const RunningStats&) {
    CatalanWord w;
    w.letters.reserve(h.size());
    for (int hh : h) w.letters.push_back(hh - 1);
    out.push_back(std::move(w));
  });
  return out;
}

Stat stat_from_name(std::string_view name) {
  if (name == "bck") return Stat::Bck;
  if (name == "ver") return Stat::Ver;
  if (name == "white") return Stat::White;
  if (name == "last") return Stat::Last;
  if (name == "s") return Stat::S;
  if (name == "sbar") return Stat::SBar;
  throw std::invalid_argument("unknown statistic '" + std::string(name) +
                              "' (expected bck|ver|white|last|s|sbar)");
}

std::string_view stat_name(Stat s) {
  switch (s) {
    case Stat::Bck: return "bck";
    case Stat::Ver: return "ver";
    case Stat::White: return "white";
    case Stat::Last: return "last";
    case Stat::S: return "s";
    case Stat::SBar: return "sbar";
  }
  return "?";
}

long long stat_value(const RunningStats& st, Stat s) {
  switch (s) {
    case Stat::Bck: return st.bck;
    case Stat::Ver: return st.ver;
    case Stat::White: return st.white;
    case Stat::Last: return st.last;
    case Stat::S: return st.s();
    case Stat::SBar: return st.s_bar();
  }
  return 0;
}

DistributionTable distribution(int n, const std::vector<Stat>& stats,
                               int cap) {
  if (n < 1 || n > cap)
    throw std::invalid_argument(
        "distribution: length " + std::to_string(n) +
        " outside the enumeration cap " + std::to_string(cap) +
        " (raise CATALAN_ENUM_CAP to allow larger exhaustive runs)");
  DistributionTable t;
  t.n = n;
  t.stats = stats;
  std::vector<long long> key(stats.size());
  for_each_polyomino(n, [&](const std::vector<int>&, const RunningStats& st) {
    for (std::size_t i = 0; i < stats.size(); ++i)
      key[i] = stat_value(st, stats[i]);
    ++t.counts[key];
  });
  return t;
}

DistributionTable distribution(int n, const std::vector<Stat>& stats) {
  return distribution(n, stats, enumeration_cap());
}

std::vector<long long> capacity_sequence(Stat stat, int k_max, int cap) {
  if (stat != Stat::Bck && stat != Stat::Ver)
    throw std::invalid_argument("capacity_sequence: statistic must be bck|ver");
  if (k_max < 1) throw std::invalid_argument("capacity_sequence: k_max < 1");
  if (2 * k_max > cap)
    throw std::invalid_argument(
        "capacity_sequence: k_max " + std::to_string(k_max) +
        " needs enumeration up to length " + std::to_string(2 * k_max) +
        " which exceeds the cap " + std::to_string(cap) +
        " (raise CATALAN_ENUM_CAP to allow larger exhaustive runs)");
  std::vector<long long> counts(k_max + 1, 0);
  // Both statistics are nondecreasing under appending a column, so subtrees
  // past k_max cannot contribute.
  for_each_polyomino_upto(
      2 * k_max, [&](const std::vector<int>&, const RunningStats& st) {
        long long v = stat == Stat::Bck ? st.bck : st.ver;
        if (v > k_max) return false;
        ++counts[v];
        return true;
      });
  return {counts.begin() + 1, counts.end()};
}

std::vector<long long> capacity_sequence(Stat stat, int k_max) {
  return capacity_sequence(stat, k_max, enumeration_cap());
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> vals;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string part(text.substr(pos, next - pos));
    if (part.empty()) throw std::invalid_argument("empty list entry");
    std::size_t used = 0;
    int v = std::stoi(part, &used);
    if (used != part.size())
      throw std::invalid_argument("bad integer '" + part + "'");
    vals.push_back(v);
    pos = next + 1;
  }
  return vals;
}

}  // namespace

Polyomino parse_heights(std::string_view text) {
  Polyomino p;
  p.heights = parse_int_list(text);
  std::string why;
  if (!is_valid_heights(p.heights, &why))
    throw std::invalid_argument("invalid heights: " + why);
  return p;
}

CatalanWord parse_word(std::string_view text) {
  CatalanWord w;
  if (text.find(',') == std::string_view::npos &&
      !text.empty() &&
      std::all_of(text.begin(), text.end(),
                  [](char c) { return c >= '0' && c <= '9'; })) {
    for (char c : text) w.letters.push_back(c - '0');
  } else {
    w.letters = parse_int_list(text);
  }
  std::string why;
  if (!is_valid_word(w.letters, &why))
    throw std::invalid_argument("invalid word: " + why);
  return w;
}

std::string heights_text(const Polyomino& p) {
  std::string s;
  for (int i = 0; i < p.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.heights[i]);
  }
  return s;
}

}  // namespace catalan
