#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace catalan {

// A Catalan word: nonnegative letters with w[0] = 0 and w[i] <= w[i-1] + 1.
struct CatalanWord {
  std::vector<int> letters;
};

// The bargraph built from a Catalan word: column i has letters[i] + 1 cells,
// columns bottom-aligned. heights[0] = 1 and heights[i] <= heights[i-1] + 1.
struct Polyomino {
  std::vector<int> heights;

  static Polyomino from_word(const CatalanWord& w);
  CatalanWord word() const;

  int length() const { return static_cast<int>(heights.size()); }
  int last() const { return heights.empty() ? 0 : heights.back(); }
  long long area() const;
};

// Validation; on failure *why (if given) names the first violated constraint.
bool is_valid_word(const std::vector<int>& letters, std::string* why = nullptr);
bool is_valid_heights(const std::vector<int>& heights,
                      std::string* why = nullptr);

// Black cells under the chessboard coloring with the southwestern cell black:
// column i (1-based) contributes ceil(h/2) for odd i, floor(h/2) for even i.
long long black_capacity(const Polyomino& p);

// Total cells in odd-index / even-index columns.
struct VerticalCapacities {
  long long ver = 0;
  long long white = 0;
};
VerticalCapacities vertical_capacities(const Polyomino& p);

// s = ver for odd length else white; s_bar is the complement.
struct SPair {
  long long s = 0;
  long long s_bar = 0;
};
SPair s_statistics(const Polyomino& p);

// Reverses the sequence of northeast-diagonal lengths: the i-th diagonal has
// the largest m with h[i+t-1] >= t for t = 1..m, and the image polyomino
// lists those lengths back to front. Empty maps to empty.
Polyomino diagonal_bijection(const Polyomino& p);

// Independent route to black_capacity: lift the polyomino to the Dyck path
// whose i-th up-step starts at height h_i - 1 and count the unit diamonds
// below the path and above y = -1 whose center (a,b) has a - b = 1 (mod 4).
long long dyck_black_cells(const Polyomino& p);

unsigned long long catalan_number(int n);

// Exhaustive-enumeration guard; CATALAN_ENUM_CAP overrides the default.
inline constexpr int kDefaultEnumerationCap = 14;
int enumeration_cap();

// Statistics maintained incrementally along the enumeration.
struct RunningStats {
  int length = 0;
  int last = 0;
  long long area = 0;
  long long bck = 0;
  long long ver = 0;
  long long white = 0;

  long long s() const { return length % 2 == 1 ? ver : white; }
  long long s_bar() const { return length % 2 == 0 ? ver : white; }
};

namespace detail {

struct EnumState {
  std::vector<int> heights;
  RunningStats st;

  void push(int h) {
    heights.push_back(h);
    st.length += 1;
    st.last = h;
    st.area += h;
    if (st.length % 2 == 1) {
      st.bck += (h + 1) / 2;
      st.ver += h;
    } else {
      st.bck += h / 2;
      st.white += h;
    }
  }
  void pop() {
    int h = heights.back();
    heights.pop_back();
    if (st.length % 2 == 1) {
      st.bck -= (h + 1) / 2;
      st.ver -= h;
    } else {
      st.bck -= h / 2;
      st.white -= h;
    }
    st.length -= 1;
    st.last = heights.empty() ? 0 : heights.back();
    st.area -= h;
  }
};

template <class F>
void enum_exact(EnumState& s, int n, F& visit) {
  if (s.st.length == n) {
    visit(s.heights, s.st);
    return;
  }
  int hmax = s.heights.empty() ? 1 : s.heights.back() + 1;
  for (int h = 1; h <= hmax; ++h) {
    s.push(h);
    enum_exact(s, n, visit);
    s.pop();
  }
}

template <class F>
void enum_tree(EnumState& s, int n_max, F& visit) {
  if (s.st.length == n_max) return;
  int hmax = s.heights.empty() ? 1 : s.heights.back() + 1;
  for (int h = 1; h <= hmax; ++h) {
    s.push(h);
    if (visit(s.heights, s.st)) enum_tree(s, n_max, visit);
    s.pop();
  }
}

}  // namespace detail

// Visits every polyomino of length exactly n, in lexicographic word order.
template <class F>
void for_each_polyomino(int n, F&& visit) {
  detail::EnumState s;
  if (n == 0) return;
  detail::enum_exact(s, n, visit);
}

// Visits every polyomino of length 1..n_max (each prefix is itself Catalan),
// in lexicographic order by word; visit returns whether to descend further.
template <class F>
void for_each_polyomino_upto(int n_max, F&& visit) {
  detail::EnumState s;
  detail::enum_tree(s, n_max, visit);
}

// Materializes all C_n words of length n in lexicographic order.
std::vector<CatalanWord> catalan_words(int n);

enum class Stat { Bck, Ver, White, Last, S, SBar };
Stat stat_from_name(std::string_view name);
std::string_view stat_name(Stat s);
long long stat_value(const RunningStats& st, Stat s);

// Exact counts of the C_n polyominoes of length n grouped by a statistic
// tuple. The per-n marginal always sums to C_n.
struct DistributionTable {
  int n = 0;
  std::vector<Stat> stats;
  std::map<std::vector<long long>, long long> counts;
};
DistributionTable distribution(int n, const std::vector<Stat>& stats, int cap);
DistributionTable distribution(int n, const std::vector<Stat>& stats);

// Counts of polyominoes of any length with bck (or ver) equal to k, for
// k = 1..k_max. Finite because stat(P) >= ceil(length/2) bounds the length
// by 2k; refuses if 2*k_max exceeds the cap.
std::vector<long long> capacity_sequence(Stat stat, int k_max, int cap);
std::vector<long long> capacity_sequence(Stat stat, int k_max);

// Parsing/printing of the external text forms ("1,2,3,2,1" heights and
// comma-separated or bare-digit words).
Polyomino parse_heights(std::string_view text);
CatalanWord parse_word(std::string_view text);
std::string heights_text(const Polyomino& p);

}  // namespace catalan
