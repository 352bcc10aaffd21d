// Command-line front end: exhaustive enumeration, statistic distributions,
// generating-function series by any of the solver methods, cross-method
// verification, the diagonal bijection, and capacity sequences.
//
// Exit codes: 0 success, 1 usage error, 2 verification mismatch,
// 3 internal solver error.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalan/contfrac.hpp"
#include "catalan/funceq.hpp"
#include "catalan/parity_system.hpp"
#include "catalan/render.hpp"
#include "catalan/verify.hpp"
#include "catalan/vertical_system.hpp"
#include "catalan/words.hpp"

namespace {

using namespace catalan;

std::vector<Stat> parse_stats(const std::string& list) {
  std::vector<Stat> stats;
  std::size_t pos = 0;
  while (pos <= list.size() && !list.empty()) {
    std::size_t next = list.find(',', pos);
    if (next == std::string::npos) next = list.size();
    stats.push_back(stat_from_name(list.substr(pos, next - pos)));
    pos = next + 1;
    if (pos > list.size()) break;
  }
  return stats;
}

int cmd_enumerate(int n, const std::string& stats_list,
                  const std::string& format) {
  int cap = enumeration_cap();
  if (n < 1 || n > cap)
    throw std::invalid_argument("enumerate: --n must be within 1.." +
                                std::to_string(cap) +
                                " (raise CATALAN_ENUM_CAP for more)");
  std::vector<Stat> stats = parse_stats(stats_list);
  for_each_polyomino(n, [&](const std::vector<int>& h, const RunningStats& st) {
    Polyomino p{h};
    if (format == "json") {
      nlohmann::json rec;
      rec["heights"] = h;
      rec["word"] = p.word().letters;
      for (Stat s : stats) rec[std::string(stat_name(s))] = stat_value(st, s);
      std::cout << rec.dump() << "\n";
    } else if (format == "csv") {
      std::cout << '"' << heights_text(p) << '"';
      for (Stat s : stats) std::cout << ',' << stat_value(st, s);
      std::cout << "\n";
    } else {
      std::cout << heights_text(p);
      for (Stat s : stats)
        std::cout << ' ' << stat_name(s) << '=' << stat_value(st, s);
      std::cout << "\n";
    }
  });
  return 0;
}

int cmd_distribution(int n, const std::string& stats_list,
                     const std::string& format) {
  std::vector<Stat> stats = parse_stats(stats_list);
  if (stats.empty())
    throw std::invalid_argument("distribution: --stats is required");
  DistributionTable t = distribution(n, stats, enumeration_cap());
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [key, count] : t.counts) {
      nlohmann::json row;
      for (std::size_t i = 0; i < stats.size(); ++i)
        row[std::string(stat_name(stats[i]))] = key[i];
      row["count"] = count;
      rows.push_back(std::move(row));
    }
    std::cout << rows.dump(2) << "\n";
    return 0;
  }
  const char* sep = format == "csv" ? "," : " ";
  for (std::size_t i = 0; i < stats.size(); ++i)
    std::cout << (i ? sep : "") << stat_name(stats[i]);
  std::cout << sep << "count\n";
  for (const auto& [key, count] : t.counts) {
    for (long long v : key) std::cout << v << sep;
    std::cout << count << "\n";
  }
  return 0;
}

// Builds a two-variable polynomial from a (length, statistic) table so all
// series print through the one canonical renderer.
MPoly table_poly(const XQTable& t, int x_max, const std::string& var) {
  int stat_cap = 0;
  for (const auto& [k, c] : t) stat_cap = std::max(stat_cap, k.second);
  VarSet ring({"x", var}, {x_max, stat_cap});
  MPoly p(ring);
  for (const auto& [k, c] : t)
    if (k.first <= x_max) p.add_term(ring.pack({k.first, k.second}), c);
  return p;
}

XQTable brute_stat_table(int x_max, Stat stat, int parity) {
  XQTable t;
  for (int n = 1; n <= x_max; ++n) {
    if (parity >= 0 && n % 2 != parity) continue;
    DistributionTable d = distribution(n, {stat}, enumeration_cap());
    for (const auto& [key, count] : d.counts)
      t[{n, static_cast<int>(key[0])}] += count;
  }
  return t;
}

int cmd_series(const std::string& method, const std::string& gf, int x_max,
               const std::string& format) {
  if (x_max < 1) throw std::invalid_argument("series: --xmax must be >= 1");
  SolverConfig cfg{x_max};
  XQTable table;
  std::string var = "q";

  auto unsupported = [&]() {
    throw std::invalid_argument("series: method '" + method +
                                "' does not produce --gf " + gf);
  };

  if (method == "brute") {
    int cap = enumeration_cap();
    if (x_max > cap)
      throw std::invalid_argument(
          "series: brute force needs --xmax within the enumeration cap " +
          std::to_string(cap));
    if (gf == "F") {
      table = brute_stat_table(x_max, Stat::Bck, -1);
    } else if (gf == "A0") {
      table = brute_stat_table(x_max, Stat::Bck, -1);
      table[{0, 0}] = 1;
    } else if (gf == "OD") {
      table = brute_stat_table(x_max, Stat::Ver, 1);
      var = "y";
    } else if (gf == "EV") {
      table = brute_stat_table(x_max, Stat::White, 0);
      var = "z";
    } else if (gf == "C") {
      table = brute_stat_table(x_max, Stat::S, -1);
      var = "y";
    } else {
      unsupported();
    }
  } else if (method == "matrix") {
    if (gf != "F") unsupported();
    table = parity_table(x_max);
  } else if (method == "contfrac") {
    if (gf == "F") {
      table = contfrac_table(x_max);
    } else if (gf == "A0") {
      table = contfrac_table(x_max);
      table[{0, 0}] = 1;
    } else {
      unsupported();
    }
  } else if (method == "closed") {
    if (gf != "OD" && gf != "EV") unsupported();
    VerticalClosedFormResult r = vertical_closed_form(cfg);
    const VarSet& R = r.at_one.even.ring();
    if (gf == "OD") {
      table = xq_table(eval_one(r.at_one.odd, R.index("z")), R.index("x"),
                       R.index("y"), x_max);
      var = "y";
    } else {
      table = xq_table(eval_one(r.at_one.even, R.index("y")), R.index("x"),
                       R.index("z"), x_max);
      var = "z";
    }
  } else if (method == "funceq") {
    if (gf != "C") unsupported();
    table = funceq_table(x_max);
    var = "y";
  } else {
    throw std::invalid_argument(
        "series: unknown method '" + method +
        "' (expected brute|matrix|contfrac|closed|funceq)");
  }

  MPoly p = table_poly(table, x_max, var);
  if (format == "json") {
    nlohmann::json out;
    out["method"] = method;
    out["gf"] = gf;
    out["x_max"] = x_max;
    out["vars"] = p.ring().names();
    out["terms"] = nlohmann::json::parse(poly_json_terms(p));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << series_lines(p, x_max);
  }
  return 0;
}

int cmd_verify(int x_max) {
  VerifyOutcome v = verify_black_capacity(x_max, enumeration_cap());
  std::cout << agreement_report(v);
  return v.all_agree ? 0 : 2;
}

int cmd_bijection(const std::string& word_text, int n) {
  if (!word_text.empty()) {
    Polyomino p = Polyomino::from_word(parse_word(word_text));
    Polyomino q = diagonal_bijection(p);
    long long bck = black_capacity(p);
    VerticalCapacities vc = vertical_capacities(q);
    bool odd = p.length() % 2 == 1;
    long long target = odd ? vc.ver : vc.white;
    std::cout << "P  heights: " << heights_text(p) << "\n";
    std::cout << "f(P) heights: " << heights_text(q) << "\n";
    std::cout << "bck(P) = " << bck << ", " << (odd ? "ver" : "white")
              << "(f(P)) = " << target << " -> "
              << (bck == target ? "verified" : "MISMATCH") << "\n";
    return bck == target ? 0 : 2;
  }
  int cap = enumeration_cap();
  if (n < 1 || n > cap)
    throw std::invalid_argument("bijection: --n must be within 1.." +
                                std::to_string(cap));
  long long checked = 0;
  bool ok = true;
  for_each_polyomino(n, [&](const std::vector<int>& h, const RunningStats& st) {
    Polyomino p{h};
    Polyomino q = diagonal_bijection(p);
    VerticalCapacities vc = vertical_capacities(q);
    long long target = n % 2 == 1 ? vc.ver : vc.white;
    std::string why;
    if (st.bck != target || !is_valid_heights(q.heights, &why)) ok = false;
    ++checked;
  });
  std::cout << "length " << n << ": " << checked << " polyominoes, "
            << (ok ? "pass" : "FAIL") << "\n";
  return ok ? 0 : 2;
}

int cmd_sequence(const std::string& stat_name_, int k_max,
                 const std::string& format) {
  Stat stat = stat_from_name(stat_name_);
  std::vector<long long> seq =
      capacity_sequence(stat, k_max, enumeration_cap());
  if (format == "bfile") {
    for (int k = 1; k <= k_max; ++k)
      std::cout << k << " " << seq[k - 1] << "\n";
  } else {
    for (int k = 1; k <= k_max; ++k)
      std::cout << (k > 1 ? "," : "") << seq[k - 1];
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and generating functions for Catalan "
               "polyomino capacity statistics"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "List all polyominoes of a given length");
  int en_n = 1;
  std::string en_stats, en_format = "text";
  enumerate->add_option("--n", en_n, "length (number of columns)")->required();
  enumerate->add_option("--stats", en_stats, "comma list: bck,ver,white,last,s,sbar");
  enumerate->add_option("--format", en_format, "text|json|csv");

  auto* dist = app.add_subcommand("distribution", "Exact counts grouped by statistics");
  int di_n = 1;
  std::string di_stats, di_format = "text";
  dist->add_option("--n", di_n, "length")->required();
  dist->add_option("--stats", di_stats, "comma list: bck,ver,white,last,s,sbar")->required();
  dist->add_option("--format", di_format, "text|csv|json");

  auto* series = app.add_subcommand("series", "Generating-function series by method");
  std::string se_method, se_gf = "F", se_format = "text";
  int se_xmax = 8;
  series->add_option("--method", se_method, "brute|matrix|contfrac|closed|funceq")->required();
  series->add_option("--gf", se_gf, "F|OD|EV|C|A0");
  series->add_option("--xmax", se_xmax, "series order in x");
  series->add_option("--format", se_format, "text|json");

  auto* verify = app.add_subcommand("verify", "Cross-method agreement table");
  int ve_xmax = 10;
  verify->add_option("--xmax", ve_xmax, "series order in x (default 10)");

  auto* bijection = app.add_subcommand("bijection", "Apply/check the diagonal bijection");
  std::string bi_word;
  int bi_n = 0;
  bijection->add_option("--word", bi_word, "Catalan word (digits or comma-separated)");
  bijection->add_option("--n", bi_n, "check every polyomino of this length");

  auto* sequence = app.add_subcommand("sequence", "Capacity sequence (count by statistic value)");
  std::string sq_stat = "bck", sq_format = "plain";
  int sq_kmax = 8;
  sequence->add_option("--stat", sq_stat, "bck|ver")->required();
  sequence->add_option("--kmax", sq_kmax, "largest statistic value")->required();
  sequence->add_option("--format", sq_format, "plain|bfile");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // --help exits 0, any parse failure is usage
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(en_n, en_stats, en_format);
    if (dist->parsed()) return cmd_distribution(di_n, di_stats, di_format);
    if (series->parsed())
      return cmd_series(se_method, se_gf, se_xmax, se_format);
    if (verify->parsed()) return cmd_verify(ve_xmax);
    if (bijection->parsed()) {
      if (bi_word.empty() && bi_n == 0)
        throw std::invalid_argument("bijection: need --word or --n");
      return cmd_bijection(bi_word, bi_n);
    }
    if (sequence->parsed()) return cmd_sequence(sq_stat, sq_kmax, sq_format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
