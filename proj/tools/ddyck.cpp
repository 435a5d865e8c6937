// ddyck: command-line front end for the d-Dyck path library. Every
// subcommand is a thin wrapper over one library operation family and is
// deterministic: identical invocations produce byte-identical output.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ddyck/asymptotics.hpp"
#include "ddyck/bijection.hpp"
#include "ddyck/enumerate.hpp"
#include "ddyck/generating_functions.hpp"
#include "ddyck/json_io.hpp"
#include "ddyck/path.hpp"
#include "ddyck/recurrences.hpp"

namespace {

using namespace ddyck;

struct GlobalOpts {
  std::string format = "text";
  std::size_t max_exhaustive = default_exhaustive_bound();
  bool json() const { return format == "json"; }
};

// d parsed as an integer or the literal "-inf".
DParam parse_d(const std::string& text) {
  if (text == "-inf" || text == "-infinity") return DParam::unrestricted();
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return DParam::restricted(v);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--d", "expected an integer or '-inf', got '" + text + "'");
  }
}

std::string d_label(const DParam& d) {
  return d.is_unrestricted() ? std::string("-inf") : std::to_string(d.value());
}

// ---------------------------------------------------------------- count --

std::vector<std::pair<std::string, Int>> count_methods(const DParam& d, long long n,
                                                       const std::string& method,
                                                       std::size_t bound) {
  // Series-backed methods are capped to keep "all" responsive; the
  // recurrence methods scale to any n. The exhaustive oracle stays within
  // the configured bound, and for d < 0 it only applies from n = 1 on:
  // the counting sequences exclude the empty path while the semi-length-0
  // path set contains it.
  const bool in_bound = n >= 0 && static_cast<std::size_t>(n) <= bound;
  const bool oracle_applies = in_bound && (n >= 1 || d.is_unrestricted() || d.value() >= 0);
  if (method == "oracle" && !in_bound)
    throw std::domain_error("oracle method needs n within the exhaustive bound " +
                            std::to_string(bound) +
                            " (raise with --max-exhaustive or DDYCK_MAX_EXHAUSTIVE)");
  const bool series_ok = n <= 32;
  const bool oracle_ok = oracle_applies;
  std::vector<std::pair<std::string, Int>> rows;
  auto want = [&](const std::string& name) { return method == "all" || method == name; };
  auto order = static_cast<std::size_t>(std::max<long long>(n, 1));

  if (d.is_unrestricted()) {
    if (want("catalan")) rows.emplace_back("catalan", catalan(n));
    if (want("oracle") && (method == "oracle" || oracle_ok))
      rows.emplace_back("oracle", count_filtered(static_cast<std::size_t>(n),
                                                 PathFilter::d_dyck(d)));
  } else if (d.value() < 0) {
    const int e = -d.value();
    if (want("convolution") && e == 1)
      rows.emplace_back("convolution", r_minus1(n, RMinus1Method::convolution));
    if (want("p_recurrence") && e == 1)
      rows.emplace_back("p_recurrence", r_minus1(n, RMinus1Method::p_recurrence));
    if (want("double_sum") && e == 1)
      rows.emplace_back("double_sum", r_minus1(n, RMinus1Method::double_sum));
    if (want("le_system") && (method == "le_system" || series_ok))
      rows.emplace_back("le_system",
                        to_int_exact(eval_marker_at_one(solve_Le_system(e, order).L)[static_cast<std::size_t>(n)]));
    if (want("closed_form") && e == 1 && (method == "closed_form" || series_ok))
      rows.emplace_back("closed_form",
                        to_int_exact(eval_marker_at_one(series_L_closed_minus1(order))[static_cast<std::size_t>(n)]));
    if (want("lagrange") && (method == "lagrange" || series_ok))
      rows.emplace_back("lagrange", to_int_exact(lagrange_Le(e, order)[static_cast<std::size_t>(n)]));
    if (want("oracle") && (method == "oracle" || oracle_ok))
      rows.emplace_back("oracle", count_filtered(static_cast<std::size_t>(n),
                                                 PathFilter::d_dyck(d)));
  } else {
    if (want("recursion")) rows.emplace_back("recursion", r_nonneg(d.value(), n));
    if (want("closed_sum") && d.value() >= 1 && n >= 1)
      rows.emplace_back("closed_sum", r_nonneg_closed_sum(d.value(), n));
    if (want("series"))
      rows.emplace_back("series",
                        to_int_exact(eval_marker_at_one(series_L_nonneg(d.value(), order))[static_cast<std::size_t>(n)]));
    if (want("oracle") && (method == "oracle" || oracle_ok))
      rows.emplace_back("oracle", count_filtered(static_cast<std::size_t>(n),
                                                 PathFilter::d_dyck(d)));
  }
  if (rows.empty())
    throw std::domain_error("method '" + method + "' not applicable for d=" + d_label(d));
  return rows;
}

int run_count(const GlobalOpts& g, const std::string& d_text, long long n,
              const std::string& method) {
  DParam d = parse_d(d_text);
  auto rows = count_methods(d, n, method, g.max_exhaustive);
  bool agree = true;
  for (const auto& [name, v] : rows) agree = agree && v == rows.front().second;
  if (g.json()) {
    json methods = json::object();
    for (const auto& [name, v] : rows) methods[name] = v.str();
    json out{{"d", d_label(d)},
             {"n", n},
             {"value", rows.front().second.str()},
             {"methods", methods},
             {"agree", agree}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "r_{" << d_label(d) << "}(" << n << ") = " << rows.front().second << '\n';
    for (const auto& [name, v] : rows)
      std::cout << "  " << std::left << std::setw(13) << name << v << '\n';
    std::cout << (agree ? "all methods agree" : "METHOD DISAGREEMENT") << '\n';
  }
  return agree ? 0 : 1;
}

// ---------------------------------------------------------------- peaks --

int run_peaks(const GlobalOpts& g, const std::string& d_text, long long n) {
  DParam d = parse_d(d_text);
  if (n < 1) throw std::domain_error("peaks requires n >= 1");
  const auto un = static_cast<std::size_t>(n);
  std::map<long long, Int> hist;
  if (d.is_unrestricted()) {
    for (long long k = 1; k <= n; ++k) hist[k] = narayana(n, k);
  } else if (d.value() < 0) {
    BivariateSeries L = d.value() == -1 ? series_L_closed_minus1(un)
                                        : solve_Le_system(-d.value(), un).L;
    const MarkerPoly& c = L[un];
    for (int k = 1; k <= c.degree(); ++k)
      if (!c[static_cast<std::size_t>(k)].is_zero())
        hist[k] = to_int_exact(c[static_cast<std::size_t>(k)]);
  } else {
    for (long long k = 1; k <= n; ++k) {
      Int v = p_nonneg(d.value(), n, k);
      if (v != 0) hist[k] = v;
    }
  }
  if (un <= g.max_exhaustive) {
    auto oracle = statistic_distribution(un, PathFilter::d_dyck(d), PathStatistic::peaks);
    if (oracle != hist) throw std::logic_error("peaks: closed form and oracle disagree");
  }
  if (g.json()) {
    json h = json::array();
    for (const auto& [k, v] : hist) h.push_back(json::array({k, v.str()}));
    std::cout << json{{"d", d_label(d)}, {"n", n}, {"histogram", h}}.dump() << '\n';
  } else {
    for (const auto& [k, v] : hist) std::cout << k << '\t' << v << '\n';
  }
  return 0;
}

// ----------------------------------------------------------------- area --

int run_area(const GlobalOpts& g, const std::string& d_text, long long n, bool histogram) {
  DParam d = parse_d(d_text);
  if (!d.is_unrestricted() && d.value() != -1)
    throw std::domain_error("area supports --d -1 or --d -inf only");
  if (n < 1) throw std::domain_error("area requires n >= 1");
  const auto un = static_cast<std::size_t>(n);
  const bool oracle_ok = un <= g.max_exhaustive;

  std::vector<std::pair<std::string, Int>> rows;
  if (d.is_unrestricted()) {
    Int closed = Int(boost::multiprecision::pow(Int(4), static_cast<unsigned>(n))) -
                 binomial(2 * n + 1, n);
    rows.emplace_back("closed_form", closed);
    if (oracle_ok) rows.emplace_back("oracle", total_area(un, PathFilter{}));
  } else {
    rows.emplace_back("series_V", to_int_exact(series_V(un)[un]));
    rows.emplace_back("a_seq", a_seq(n));
    if (oracle_ok) rows.emplace_back("oracle", total_area(un, PathFilter::d_dyck(d)));
  }
  bool agree = true;
  for (const auto& [name, v] : rows) agree = agree && v == rows.front().second;

  std::map<long long, Int> hist;
  if (histogram) {
    if (!d.is_unrestricted()) {
      AreaSystem sys = solve_area_system(un);
      const MarkerPoly& c = sys.A[un];
      for (int k = 0; k <= c.degree(); ++k)
        if (!c[static_cast<std::size_t>(k)].is_zero())
          hist[k] = to_int_exact(c[static_cast<std::size_t>(k)]);
      if (oracle_ok &&
          hist != statistic_distribution(un, PathFilter::d_dyck(d), PathStatistic::area))
        throw std::logic_error("area: functional equation and oracle disagree");
    } else {
      if (!oracle_ok)
        throw std::domain_error("unrestricted area histogram needs n within the exhaustive bound");
      hist = statistic_distribution(un, PathFilter{}, PathStatistic::area);
    }
  }

  if (g.json()) {
    json methods = json::object();
    for (const auto& [name, v] : rows) methods[name] = v.str();
    json out{{"d", d_label(d)},
             {"n", n},
             {"total_area", rows.front().second.str()},
             {"methods", methods},
             {"agree", agree}};
    if (histogram) {
      json h = json::array();
      for (const auto& [k, v] : hist) h.push_back(json::array({k, v.str()}));
      out["histogram"] = h;
    }
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "total area d=" << d_label(d) << " n=" << n << ": " << rows.front().second
              << '\n';
    for (const auto& [name, v] : rows)
      std::cout << "  " << std::left << std::setw(13) << name << v << '\n';
    std::cout << (agree ? "all methods agree" : "METHOD DISAGREEMENT") << '\n';
    for (const auto& [k, v] : hist) std::cout << k << '\t' << v << '\n';
  }
  return agree ? 0 : 1;
}

// --------------------------------------------------------------- series --

int run_series(const GlobalOpts& g, const std::string& what, std::size_t order,
               int e, const std::string& d_text, bool at_one) {
  auto print_uni = [&](const Series& s, std::size_t start, const char* name) {
    if (g.json()) {
      json out = series_to_json(s);
      out["name"] = name;
      out["start"] = start;
      std::cout << out.dump() << '\n';
      return;
    }
    for (std::size_t k = start; k <= s.order(); ++k)
      std::cout << s[k] << (k == s.order() ? '\n' : ' ');
  };
  auto print_biv = [&](const BivariateSeries& s, std::size_t start, const char* name,
                       char marker) {
    if (at_one) {
      print_uni(eval_marker_at_one(s), start, name);
      return;
    }
    if (g.json()) {
      json out = series_to_json(s, std::string(1, marker));
      out["name"] = name;
      out["start"] = start;
      std::cout << out.dump() << '\n';
      return;
    }
    for (std::size_t k = start; k <= s.order(); ++k)
      std::cout << "x^" << k << ": " << s[k].to_string(marker) << '\n';
  };

  if (what == "V") {
    print_uni(series_V(order), 1, "V");
  } else if (what == "b") {
    print_uni(series_b(order), 0, "b");
  } else if (what == "L") {
    print_biv(series_L_closed_minus1(order), 1, "L", 'y');
  } else if (what == "Q") {
    print_biv(series_Q_closed(order), 1, "Q", 'y');
  } else if (what == "Le") {
    if (e < 1) throw CLI::ValidationError("--e", "series Le needs --e >= 1");
    print_biv(solve_Le_system(e, order).L, 1, "Le", 'y');
  } else if (what == "Lnonneg") {
    DParam d = parse_d(d_text);
    if (d.is_unrestricted() || d.value() < 0)
      throw CLI::ValidationError("--d", "series Lnonneg needs --d >= 0");
    print_biv(series_L_nonneg(d.value(), order), 0, "Lnonneg", 'y');
  } else if (what == "A") {
    print_biv(solve_area_system(order).A, 1, "A", 'q');
  } else if (what == "B") {
    print_biv(solve_area_system(order).B, 1, "B", 'q');
  } else {
    throw CLI::ValidationError("--what", "unknown series '" + what + "'");
  }
  return 0;
}

// ---------------------------------------------------------------- check --

int run_check(const GlobalOpts& g, const std::string& path_text, const std::string& d_text) {
  DParam d = parse_d(d_text);
  Path p = Path::parse(path_text);
  ValleyVector v = valley_vector(p);
  bool ok = is_d_dyck(p, d);
  std::optional<long long> min_diff;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    long long diff = v[i + 1] - v[i];
    if (!min_diff || diff < *min_diff) min_diff = diff;
  }
  auto levels = [&] {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  if (g.json()) {
    json out{{"path", p.to_string()}, {"d", d_label(d)}, {"is_d_dyck", ok},
             {"valley_levels", v}};
    if (min_diff) out["min_difference"] = *min_diff;
    std::cout << out.dump() << '\n';
  } else if (d.is_unrestricted()) {
    std::cout << "d-Dyck: unrestricted\n";
  } else if (v.size() <= 1) {
    std::cout << "d-Dyck: at most one valley\n";
  } else if (ok) {
    std::cout << "d-Dyck: valley levels " << levels() << ", min difference " << *min_diff
              << " >= " << d.value() << '\n';
  } else {
    std::cout << "not d-Dyck: valley levels " << levels() << ", min difference " << *min_diff
              << " < " << d.value() << '\n';
  }
  return 0;
}

// ------------------------------------------------------------ enumerate --

int run_enumerate(const GlobalOpts& g, long long n, const std::string& d_text,
                  long long peak_count, const std::string& last_valley) {
  if (n < 0) throw std::domain_error("enumerate requires n >= 0");
  if (static_cast<std::size_t>(n) > g.max_exhaustive)
    throw std::domain_error("n=" + std::to_string(n) + " exceeds the exhaustive bound " +
                            std::to_string(g.max_exhaustive) +
                            " (raise with --max-exhaustive or DDYCK_MAX_EXHAUSTIVE)");
  PathFilter f;
  if (!d_text.empty()) f.d = parse_d(d_text);
  if (peak_count >= 0) f.peak_count = static_cast<std::size_t>(peak_count);
  if (last_valley == "absent")
    f.last_valley = LastValleyCond::absent;
  else if (last_valley == "ground")
    f.last_valley = LastValleyCond::at_ground;
  else if (last_valley == "absent-or-ground")
    f.last_valley = LastValleyCond::absent_or_ground;
  else if (last_valley != "any")
    throw CLI::ValidationError("--last-valley",
                               "want any|absent|ground|absent-or-ground");

  if (g.json()) {
    // streamed by hand so large enumerations never materialize
    std::cout << "{\"n\":" << n << ",\"paths\":[";
    bool first = true;
    for_each_dyck(static_cast<std::size_t>(n), [&](const Path& p) {
      if (!f.matches(p)) return;
      std::cout << (first ? "" : ",") << '"' << p.to_string() << '"';
      first = false;
    });
    std::cout << "]}\n";
  } else {
    for_each_dyck(static_cast<std::size_t>(n), [&](const Path& p) {
      if (f.matches(p)) std::cout << p.to_string() << '\n';
    });
  }
  return 0;
}

// ------------------------------------------------------------ bijection --

int run_encode(const std::string& path_text) {
  Encoding enc = phi_inverse(Path::parse(path_text));
  std::cout << encoding_to_json(enc).dump() << '\n';
  return 0;
}

int run_decode(const std::string& encoding_text) {
  json j = json::parse(encoding_text, nullptr, true);
  std::cout << phi(encoding_from_json(j)).to_string() << '\n';
  return 0;
}

// ------------------------------------------------------------------ seq --

int run_seq(const GlobalOpts& g, const std::string& name, const std::string& d_text,
            long long from, long long to) {
  struct Spec {
    long long first;
    std::function<Int(long long)> value;
  };
  std::map<std::string, Spec> table{
      {"r", {0, [](long long n) { return r_minus1(n, RMinus1Method::convolution); }}},
      {"q", {1, [](long long n) { return q_seq(n); }}},
      {"b", {0, [](long long n) { return b_closed(n, BClosedFormula::narayana_sum); }}},
      {"A", {1, [](long long n) { return A_seq(n); }}},
      {"a", {1, [](long long n) { return a_seq(n); }}},
      {"catalan", {0, [](long long n) { return catalan(n); }}},
  };
  if (name == "r_nonneg") {
    DParam d = parse_d(d_text);
    if (d.is_unrestricted() || d.value() < 0)
      throw CLI::ValidationError("--d", "seq r_nonneg needs --d >= 0");
    int dv = d.value();
    table.emplace("r_nonneg", Spec{0, [dv](long long n) { return r_nonneg(dv, n); }});
  }
  auto it = table.find(name);
  if (it == table.end())
    throw CLI::ValidationError("--name", "want r | q | b | A | a | catalan | r_nonneg");
  long long start = from >= 0 ? from : it->second.first;
  if (start < it->second.first || to < start)
    throw std::domain_error("seq: empty or out-of-range index window");
  std::vector<Int> values;
  for (long long n = start; n <= to; ++n) values.push_back(it->second.value(n));
  if (g.json()) {
    std::cout << sequence_to_json(name, start, values).dump() << '\n';
  } else {
    for (long long n = start; n <= to; ++n)
      std::cout << n << '\t' << values[static_cast<std::size_t>(n - start)] << '\n';
  }
  return 0;
}

// ------------------------------------------------------------ asymptote --

int run_asymptote(const GlobalOpts& g, const std::string& n_list, int digits) {
  std::vector<long long> ns;
  std::stringstream ss(n_list);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    ns.push_back(std::stoll(tok));
  }
  if (ns.empty()) throw std::domain_error("asymptote: empty n list");
  SingularityData sd = compute_rho(digits);

  struct Row {
    long long n;
    std::string exact, estimate, rel;
  };
  std::vector<Row> rows;
  for (long long n : ns) {
    Int exact = r_p_recurrence(n);
    Real est = r_asymptotic(n, sd);
    Real rel = relative_error(est, to_real(exact));
    rows.push_back({n, exact.str(), est.str(12, std::ios_base::scientific),
                    rel.str(6, std::ios_base::scientific)});
  }
  if (g.json()) {
    json out = json::array();
    for (const Row& r : rows)
      out.push_back(json{{"n", r.n},
                         {"exact", r.exact},
                         {"estimate", r.estimate},
                         {"relative_error", r.rel}});
    std::cout << json{{"rho", sd.rho.str(digits)}, {"rows", out}}.dump() << '\n';
  } else {
    std::cout << "rho = " << sd.rho.str(digits) << '\n';
    std::size_t wn = 1, we = 5, ws = 8;
    for (const Row& r : rows) {
      wn = std::max(wn, std::to_string(r.n).size());
      we = std::max(we, r.exact.size());
      ws = std::max(ws, r.estimate.size());
    }
    std::cout << std::left << std::setw(static_cast<int>(wn) + 2) << "n"
              << std::setw(static_cast<int>(we) + 2) << "exact"
              << std::setw(static_cast<int>(ws) + 2) << "estimate"
              << "rel_error\n";
    for (const Row& r : rows)
      std::cout << std::left << std::setw(static_cast<int>(wn) + 2) << r.n
                << std::setw(static_cast<int>(we) + 2) << r.exact
                << std::setw(static_cast<int>(ws) + 2) << r.estimate << r.rel << '\n';
  }
  return 0;
}

// ------------------------------------------------------------- selftest --

int run_selftest(const GlobalOpts& g, long long max_n) {
  std::vector<std::pair<std::string, bool>> checks;
  auto check = [&](const std::string& name, bool ok) {
    checks.emplace_back(name, ok);
    if (!g.json()) std::cout << (ok ? "ok " : "FAIL ") << name << '\n';
  };

  const long long nmax = std::min<long long>(max_n, static_cast<long long>(g.max_exhaustive));

  {  // r(n) cross-validation triangle for d = -1
    bool ok = true;
    Series sys = eval_marker_at_one(solve_Le_system(1, static_cast<std::size_t>(nmax)).L);
    Series closed = eval_marker_at_one(series_L_closed_minus1(static_cast<std::size_t>(nmax)));
    Series lag = lagrange_Le(1, static_cast<std::size_t>(nmax));
    for (long long n = 1; n <= nmax; ++n) {
      Int oracle = count_filtered(static_cast<std::size_t>(n),
                                  PathFilter::d_dyck(DParam::restricted(-1)));
      Int conv = r_minus1(n, RMinus1Method::convolution);
      Int prec = r_minus1(n, RMinus1Method::p_recurrence);
      Int dsum = r_minus1(n, RMinus1Method::double_sum);
      Rat s = sys[static_cast<std::size_t>(n)];
      Rat c = closed[static_cast<std::size_t>(n)];
      Rat l = lag[static_cast<std::size_t>(n)];
      ok = ok && oracle == conv && conv == prec && prec == dsum && Rat(oracle) == s &&
           s == c && c == l;
    }
    check("count triangle d=-1 (oracle, system, closed, lagrange, 3 recurrences)", ok);
  }
  {  // d = -2..-4 series vs oracle
    bool ok = true;
    for (int e = 2; e <= 4; ++e) {
      Series sys = eval_marker_at_one(solve_Le_system(e, static_cast<std::size_t>(nmax)).L);
      for (long long n = 1; n <= nmax; ++n)
        ok = ok && Rat(count_filtered(static_cast<std::size_t>(n),
                                      PathFilter::d_dyck(DParam::restricted(-e)))) ==
                       sys[static_cast<std::size_t>(n)];
    }
    check("count d=-2..-4 system vs oracle", ok);
  }
  {  // peaks distributions
    bool ok = true;
    const long long pn = std::min<long long>(nmax, 8);
    BivariateSeries L = series_L_closed_minus1(static_cast<std::size_t>(pn));
    for (long long n = 1; n <= pn; ++n) {
      auto hist = statistic_distribution(static_cast<std::size_t>(n),
                                         PathFilter::d_dyck(DParam::restricted(-1)),
                                         PathStatistic::peaks);
      const MarkerPoly& c = L[static_cast<std::size_t>(n)];
      for (long long k = 1; k <= n; ++k) {
        Int want = hist.count(k) ? hist[k] : Int(0);
        ok = ok && Rat(want) == c[static_cast<std::size_t>(k)];
      }
    }
    check("peaks histograms vs closed form", ok);
  }
  {  // area totals and histograms
    bool ok = true;
    const long long an = std::min<long long>(nmax, 8);
    Series V = series_V(static_cast<std::size_t>(an));
    AreaSystem sys = solve_area_system(static_cast<std::size_t>(std::min<long long>(an, 6)));
    for (long long n = 1; n <= an; ++n) {
      Int oracle = total_area(static_cast<std::size_t>(n),
                              PathFilter::d_dyck(DParam::restricted(-1)));
      ok = ok && Rat(oracle) == V[static_cast<std::size_t>(n)] && oracle == a_seq(n);
    }
    for (long long n = 1; n <= std::min<long long>(an, 6); ++n) {
      auto hist = statistic_distribution(static_cast<std::size_t>(n),
                                         PathFilter::d_dyck(DParam::restricted(-1)),
                                         PathStatistic::area);
      const MarkerPoly& c = sys.A[static_cast<std::size_t>(n)];
      for (int k = 0; k <= c.degree(); ++k) {
        Int want = hist.count(k) ? hist[k] : Int(0);
        ok = ok && Rat(want) == c[static_cast<std::size_t>(k)];
      }
    }
    check("area totals (V, a_seq, oracle) and histograms", ok);
  }
  {  // b(n) three ways
    bool ok = true;
    Series b = series_b(static_cast<std::size_t>(nmax));
    for (long long n = 0; n <= nmax; ++n) {
      Int ie = b_closed(n, BClosedFormula::inclusion_exclusion);
      Int na = b_closed(n, BClosedFormula::narayana_sum);
      Int uudu = 0;
      for_each_dyck(static_cast<std::size_t>(n), [&](const Path& p) {
        if (p.to_string().find("UUDU") == std::string::npos) ++uudu;
      });
      ok = ok && ie == na && Rat(ie) == b[static_cast<std::size_t>(n)] && ie == uudu;
    }
    check("b(n): both closed formulas, series, UUDU-avoidance oracle", ok);
  }
  {  // bijection round trip
    bool ok = true;
    const long long bn = std::min<long long>(nmax, 8);
    for (long long n = 1; n <= bn; ++n)
      for_each_dyck(static_cast<std::size_t>(n), [&](const Path& p) {
        if (!is_d_dyck(p, DParam::restricted(-1))) return;
        ok = ok && phi(phi_inverse(p)) == p;
      });
    check("bijection phi . phi_inverse = id", ok);
  }
  {  // S_e algebraic residual
    bool ok = true;
    for (int e = 1; e <= 3; ++e) {
      const std::size_t order = 10;
      LeSystem sys = solve_Le_system(e, order);
      BivariateSeries one = BivariateSeries::one(order);
      BivariateSeries x = BivariateSeries::monomial(order, 1, MarkerPoly(Rat(1)));
      BivariateSeries y = BivariateSeries::constant(order, MarkerPoly::monomial(Rat(1), 1));
      BivariateSeries onemx = one - x;
      BivariateSeries xS = x * sys.S;
      BivariateSeries res = (one - xS).pow(static_cast<unsigned>(e)) * (y + xS - y * xS) -
                            sys.S * (one - xS).pow(static_cast<unsigned>(e + 1)) -
                            BivariateSeries::monomial(order, static_cast<std::size_t>(e) + 2,
                                                      MarkerPoly::monomial(Rat(1), 1))
                                    .div(onemx) *
                                sys.S;
      ok = ok && res == BivariateSeries(order);
    }
    check("S_e algebraic relation residual = 0 (e=1..3)", ok);
  }
  {  // asymptotic ladder
    SingularityData sd = compute_rho(50);
    bool ok = true;
    Real prev(0);
    bool first = true;
    for (long long n : {25LL, 50LL, 100LL, 200LL, 400LL}) {
      Real rel = relative_error(r_asymptotic(n, sd), to_real(r_p_recurrence(n)));
      if (!first) ok = ok && rel < prev;
      prev = rel;
      first = false;
    }
    check("asymptotic relative error decreasing on 25..400", ok);
  }

  bool passed = true;
  for (const auto& [name, ok] : checks) passed = passed && ok;
  if (g.json()) {
    json arr = json::array();
    for (const auto& [name, ok] : checks) arr.push_back(json{{"name", name}, {"ok", ok}});
    std::cout << json{{"checks", arr}, {"passed", passed}}.dump() << '\n';
  } else {
    std::cout << (passed ? "selftest passed" : "selftest FAILED") << '\n';
  }
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration toolkit for restricted d-Dyck paths"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-exhaustive", g.max_exhaustive,
                 "semi-length cap for exhaustive enumeration")
      ->capture_default_str();

  std::string d_text, method = "all", what, path_text, encoding_text;
  std::string n_list = "25,50,100,200,400", last_valley = "any";
  long long n = 0, peak_count = -1, max_n = 10;
  std::size_t order = 0;
  int e = 0, digits = 50;
  bool histogram = false, at_one = false;

  auto* c_count = app.add_subcommand("count", "number of d-Dyck paths, cross-validated");
  c_count->add_option("--d", d_text, "restriction parameter (integer or -inf)")->required();
  c_count->add_option("--n", n, "semi-length")->required();
  c_count->add_option("--method", method, "one method or 'all'")->capture_default_str();

  auto* c_peaks = app.add_subcommand("peaks", "peak-count distribution");
  c_peaks->add_option("--d", d_text)->required();
  c_peaks->add_option("--n", n)->required();

  auto* c_area = app.add_subcommand("area", "total area, optionally the full histogram");
  c_area->add_option("--d", d_text)->required();
  c_area->add_option("--n", n)->required();
  c_area->add_flag("--histogram", histogram, "print the area histogram");

  auto* c_series = app.add_subcommand("series", "generating-function coefficients");
  c_series->add_option("--what", what, "L | Le | Lnonneg | Q | b | V | A | B")->required();
  c_series->add_option("--order", order, "truncation order")->required();
  c_series->add_option("--e", e, "e = |d| for --what Le");
  c_series->add_option("--d", d_text, "d >= 0 for --what Lnonneg");
  c_series->add_flag("--at-one", at_one, "print the marker=1 marginal of a bivariate series");

  auto* c_check = app.add_subcommand("check", "test a path for d-Dyck membership");
  c_check->add_option("--path", path_text, "path over U/D (aliases X/Y)")->required();
  c_check->add_option("--d", d_text)->required();

  auto* c_enum = app.add_subcommand("enumerate", "stream matching paths, one per line");
  c_enum->add_option("--n", n)->required();
  c_enum->add_option("--d", d_text, "optional d-Dyck filter");
  c_enum->add_option("--peaks", peak_count, "restrict to an exact peak count");
  c_enum->add_option("--last-valley", last_valley, "any | absent | ground | absent-or-ground")
      ->capture_default_str();

  auto* c_bij = app.add_subcommand("bijection", "encode/decode the (-1)-Dyck bijection");
  c_bij->require_subcommand(1);
  auto* c_enc = c_bij->add_subcommand("encode", "path -> JSON encoding");
  c_enc->add_option("--path", path_text)->required();
  auto* c_dec = c_bij->add_subcommand("decode", "JSON encoding -> path");
  c_dec->add_option("--encoding", encoding_text, "JSON with components/exponents")->required();

  auto* c_seq = app.add_subcommand("seq", "sequence table, one n<TAB>value line per entry");
  long long seq_from = -1, seq_to = 0;
  std::string seq_name;
  c_seq->add_option("--name", seq_name, "r | q | b | A | a | catalan | r_nonneg")->required();
  c_seq->add_option("--d", d_text, "d >= 0 for r_nonneg");
  c_seq->add_option("--from", seq_from, "first index (defaults to the sequence's natural start)");
  c_seq->add_option("--to", seq_to, "last index")->required();

  auto* c_asym = app.add_subcommand("asymptote", "asymptotic estimate vs exact r(n)");
  c_asym->add_option("--n", n_list, "comma-separated n values")->capture_default_str();
  c_asym->add_option("--digits", digits, "rho precision in decimal digits")
      ->capture_default_str();

  auto* c_self = app.add_subcommand("selftest", "cross-validation triangle; CI smoke test");
  c_self->add_option("--max-n", max_n, "exhaustive cross-check bound")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (*c_count) return run_count(g, d_text, n, method);
    if (*c_peaks) return run_peaks(g, d_text, n);
    if (*c_area) return run_area(g, d_text, n, histogram);
    if (*c_series) return run_series(g, what, order, e, d_text, at_one);
    if (*c_check) return run_check(g, path_text, d_text);
    if (*c_enum) return run_enumerate(g, n, d_text, peak_count, last_valley);
    if (*c_bij) {
      if (*c_enc) return run_encode(path_text);
      if (*c_dec) return run_decode(encoding_text);
    }
    if (*c_seq) return run_seq(g, seq_name, d_text, seq_from, seq_to);
    if (*c_asym) return run_asymptote(g, n_list, digits);
    if (*c_self) return run_selftest(g, max_n);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
