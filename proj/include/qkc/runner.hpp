// Batch driver: check registry, selector matching, report assembly.
//
// The registry enumerates every parameterized check instance for a given
// rank; execution order is fixed by check name, so reports are byte-stable
// apart from wall-clock fields.

#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qkc/verify.hpp"

namespace qkc {

struct RunConfig {
  int n = 2;
  int qdeg = 3;
  std::vector<std::string> checks{"*"};
  int seed = 0;
  int seed2 = 1;
  std::string out;             // empty = stdout
  std::string format = "json"; // json | md
};

namespace detail {

inline bool glob_match(const std::string& pat, const std::string& s) {
  // '*' and '?' wildcards
  std::size_t p = 0, i = 0, star = std::string::npos, mark = 0;
  while (i < s.size()) {
    if (p < pat.size() && (pat[p] == '?' || pat[p] == s[i])) {
      ++p;
      ++i;
    } else if (p < pat.size() && pat[p] == '*') {
      star = p++;
      mark = i;
    } else if (star != std::string::npos) {
      p = star + 1;
      i = ++mark;
    } else {
      return false;
    }
  }
  while (p < pat.size() && pat[p] == '*') ++p;
  return p == pat.size();
}

}  // namespace detail

struct CheckSpec {
  std::string name;
  std::function<CheckResult(VerifyContext&)> fn;
};

inline std::vector<CheckSpec> build_registry(int n) {
  std::vector<CheckSpec> reg;
  auto add = [&](std::string name, std::function<CheckResult(VerifyContext&)> fn) {
    reg.push_back({std::move(name), std::move(fn)});
  };

  add("edge_equiv", [](VerifyContext& cx) { return check_edge_equivalence(cx); });
  add("rank1_oracle", [](VerifyContext& cx) { return check_rank1_oracle(cx); });
  add("q0_degeneration", [](VerifyContext& cx) { return check_q0_degeneration(cx); });
  add("classical_limit", [](VerifyContext& cx) { return check_classical_limit(cx); });
  add("whitney3", [](VerifyContext& cx) { return check_whitney_rel3(cx); });
  add("presentation", [](VerifyContext& cx) { return check_presentation(cx); });

  for (int k = 1; k <= n; ++k) {
    add("whitney1_k" + std::to_string(k),
        [k](VerifyContext& cx) { return check_whitney_rel1(cx, k); });
    add("whitney2_k" + std::to_string(k),
        [k](VerifyContext& cx) { return check_whitney_rel2(cx, k); });
  }
  for (int j = 1; j <= n; ++j)
    add("quantum_inverse_j" + std::to_string(j),
        [j](VerifyContext& cx) { return check_quantum_inverse(cx, j); });
  for (int d = 0; d <= 2 * n; ++d)
    add("borel_d" + std::to_string(d), [d](VerifyContext& cx) { return check_borel(cx, d); });
  for (int d = 1; d <= 2 * n; ++d)
    for (int p = 1; p <= n; ++p)
      add("lemma_products_d" + std::to_string(d) + "_p" + std::to_string(p),
          [d, p](VerifyContext& cx) { return check_lemma_products(cx, d, p); });
  for (int k = 2; k <= n; ++k) {
    for (const auto& J : detail::all_subsets(1, k - 1)) {
      for (int sign : {-1, +1}) {
        std::string name = std::string("multiple_line_") + (sign < 0 ? "minus" : "plus") +
                           "_k" + std::to_string(k) + "_J" + detail::set_str(J);
        add(name, [J, k, sign](VerifyContext& cx) { return check_multiple_line(cx, J, k, sign); });
      }
    }
  }
  for (const auto& J : detail::all_subsets(1, n)) {
    for (int sign : {-1, +1}) {
      std::string tag = std::string(sign < 0 ? "minus" : "plus") + "_J" + detail::set_str(J);
      add("qam_am_" + tag, [J, sign](VerifyContext& cx) { return check_qam_am(cx, J, sign); });
      add("chain_indep_" + tag,
          [J, sign](VerifyContext& cx) { return check_chain_independence(cx, J, sign); });
    }
  }

  std::sort(reg.begin(), reg.end(),
            [](const CheckSpec& a, const CheckSpec& b) { return a.name < b.name; });
  return reg;
}

struct RunReport {
  std::vector<CheckResult> results;
  int passed = 0, failed = 0;
  double wall_ms = 0.0;
};

inline std::vector<const CheckSpec*> select_checks(const std::vector<CheckSpec>& reg,
                                                   const std::vector<std::string>& selectors) {
  std::vector<const CheckSpec*> out;
  for (const std::string& sel : selectors) {
    bool any = false;
    for (const CheckSpec& c : reg) {
      if (detail::glob_match(sel, c.name)) any = true;
    }
    if (!any) {
      std::string msg = "no check matches selector '" + sel + "'; available checks:";
      for (const CheckSpec& c : reg) msg += "\n  " + c.name;
      throw std::invalid_argument(msg);
    }
  }
  for (const CheckSpec& c : reg) {
    for (const std::string& sel : selectors) {
      if (detail::glob_match(sel, c.name)) {
        out.push_back(&c);
        break;
      }
    }
  }
  return out;
}

inline RunReport execute(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > 4) throw std::invalid_argument("rank must be between 1 and 4");
  if (cfg.n > 3)
    std::cerr << "warning: rank " << cfg.n << " may be slow; the suite is tuned for n <= 3\n";
  if (cfg.qdeg < 1) throw std::invalid_argument("truncation degree must be >= 1");
  auto reg = build_registry(cfg.n);
  auto selected = select_checks(reg, cfg.checks);
  VerifyContext cx(cfg.n, cfg.qdeg, cfg.seed, cfg.seed2);
  RunReport rep;
  detail::CheckTimer total;
  for (const CheckSpec* spec : selected) {
    CheckResult r = spec->fn(cx);
    (r.pass ? rep.passed : rep.failed) += 1;
    rep.results.push_back(std::move(r));
  }
  rep.wall_ms = total.ms();
  return rep;
}

inline nlohmann::ordered_json report_json(const RunConfig& cfg, const RunReport& rep) {
  nlohmann::ordered_json j;
  j["config"] = {{"n", cfg.n},       {"qdeg", cfg.qdeg}, {"checks", cfg.checks},
                 {"seed", cfg.seed}, {"seed2", cfg.seed2}, {"format", cfg.format}};
  j["results"] = nlohmann::ordered_json::array();
  for (const CheckResult& r : rep.results) {
    nlohmann::ordered_json e;
    e["name"] = r.name;
    e["params"] = r.params;
    e["status"] = r.pass ? "pass" : "fail";
    e["residual"] = r.residual;
    e["wall_time_ms"] = r.wall_ms;
    j["results"].push_back(std::move(e));
  }
  j["summary"] = {{"passed", rep.passed},
                  {"failed", rep.failed},
                  {"total", rep.passed + rep.failed},
                  {"wall_time_ms", rep.wall_ms}};
  return j;
}

inline std::string report_markdown(const RunConfig& cfg, const RunReport& rep) {
  std::ostringstream os;
  os << "# Identity check report\n\n";
  os << "rank n = " << cfg.n << ", truncation degree = " << cfg.qdeg << ", seeds = ("
     << cfg.seed << ", " << cfg.seed2 << ")\n\n";
  os << "| check | status | wall ms | residual |\n";
  os << "|---|---|---|---|\n";
  for (const CheckResult& r : rep.results) {
    std::string res = r.residual;
    if (res.size() > 120) res = res.substr(0, 117) + "...";
    os << "| " << r.name << " | " << (r.pass ? "pass" : "FAIL") << " | " << r.wall_ms
       << " | " << res << " |\n";
  }
  os << "\n" << rep.passed << " passed, " << rep.failed << " failed, "
     << (rep.passed + rep.failed) << " total\n";
  return os.str();
}

inline void write_output(const std::string& out_path, const std::string& body) {
  if (out_path.empty()) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output path: " + out_path);
  f << body;
}

// exit status 0 iff all selected checks pass
inline int run(const RunConfig& cfg) {
  RunReport rep = execute(cfg);
  std::string body = cfg.format == "md" ? report_markdown(cfg, rep)
                                        : report_json(cfg, rep).dump(2);
  write_output(cfg.out, body);
  return rep.failed == 0 ? 0 : 1;
}

// --------------------------------------------------------------------------
// Debug dumps

inline nlohmann::ordered_json qbg_json(int n) {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["vertices"] = nlohmann::ordered_json::array();
  j["edges"] = nlohmann::ordered_json::array();
  const auto roots = positive_roots(n);
  for (const SignedPerm& w : all_elements(n)) {
    j["vertices"].push_back(w.str());
    for (const Root& a : roots) {
      EdgeKind k = edge_type_by_pattern(w, a);
      if (k == EdgeKind::None) continue;
      nlohmann::ordered_json e;
      e["from"] = w.str();
      e["to"] = w.reflect(a).str();
      e["root"] = a.str();
      e["kind"] = edge_kind_name(k);
      j["edges"].push_back(std::move(e));
    }
  }
  return j;
}

inline nlohmann::ordered_json chain_json(const Weight& lambda, int seed) {
  LambdaChain c = reduced_chain(lambda, seed);
  nlohmann::ordered_json j;
  j["lambda"] = lambda.str();
  j["seed"] = seed;
  j["steps"] = nlohmann::ordered_json::array();
  for (const ChainStep& s : c.steps)
    j["steps"].push_back({{"root", s.gamma.str()}, {"level", s.level}});
  return j;
}

}  // namespace qkc
