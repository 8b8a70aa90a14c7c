#include "jc/cli.hpp"

#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "jc/fforacle.hpp"
#include "jc/formulas.hpp"
#include "jc/symfunc.hpp"

namespace jc {

namespace {

nlohmann::json int_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Budget budget_of(const RunConfig& c) {
  Budget b;
  b.max_free = c.max_free;
  b.max_group_order = c.max_group_order;
  b.threads = c.threads;
  return b;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

void RunConfig::validate() const {
  if (command != "table" && command != "verify" && command != "brute")
    throw UsageError("unknown command '" + command + "'");
  if (threads < 1) throw UsageError("--threads must be positive");
  if (max_group_order < 1) throw UsageError("--max-group-order must be positive");
  if (format != "md" && format != "json" && format != "csv") throw UsageError("--format must be md, json or csv");
  for (int q : primes)
    if (!is_prime(q)) throw UsageError("not a prime: " + std::to_string(q));
  if (!is_prime(p)) throw UsageError("--p must be prime");
  try {
    for (const auto* sel : {&h, &h1, &h2})
      if (*sel) HessenbergFunction{**sel};
    if (lambda) Partition{*lambda};
    if (mu) Partition{*mu};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (h1 && h2 && h1->size() != h2->size()) throw UsageError("--h1 and --h2 must have the same length");
}

void RunConfig::merge_json(const nlohmann::json& j) {
  auto list = [&](const char* key, std::optional<std::vector<int>>& dst) {
    if (j.contains(key)) dst = j.at(key).get<std::vector<int>>();
  };
  if (j.contains("command")) command = j.at("command").get<std::string>();
  if (j.contains("n")) n = j.at("n").get<int>();
  list("h", h);
  list("lambda", lambda);
  list("mu", mu);
  list("h1", h1);
  list("h2", h2);
  if (j.contains("primes")) primes = j.at("primes").get<std::vector<int>>();
  if (j.contains("p")) p = j.at("p").get<int>();
  if (j.contains("cosets")) cosets = j.at("cosets").get<bool>();
  if (j.contains("max_free")) max_free = j.at("max_free").get<int>();
  if (j.contains("max_group_order")) max_group_order = j.at("max_group_order").get<long>();
  if (j.contains("format")) format = j.at("format").get<std::string>();
  if (j.contains("out")) out = j.at("out").get<std::string>();
  if (j.contains("suite")) suite = j.at("suite").get<std::string>();
  if (j.contains("threads")) threads = j.at("threads").get<int>();
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const RunConfig& c, std::ostream& out) {
  if (!c.h && !c.lambda) throw UsageError("table needs --h or --lambda");
  struct Row {
    Partition mu;
    CountReport report;
  };
  std::vector<Row> rows;
  std::string label, title;
  if (c.h) {
    HessenbergFunction h(*c.h);
    label = h.str();
    title = "F_{mu h}(q) for h = " + label;
    for (const auto& mu : partitions_of(h.n())) rows.push_back({mu, F_mu_h_tableaux(mu, h)});
  } else {
    Partition lambda(*c.lambda);
    label = lambda.str();
    title = "F_{mu lambda}(q) for lambda = " + label;
    for (const auto& mu : partitions_of(lambda.size()))
      if (dominates(lambda, conjugate(mu))) rows.push_back({mu, F_mu_lambda(mu, lambda)});
  }
  if (c.format == "json") {
    nlohmann::json rj = nlohmann::json::array();
    for (const auto& r : rows) rj.push_back(r.report.to_json(r.mu, label));
    out << nlohmann::json{{"title", title}, {"rows", rj}}.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "mu,poly,factored\n";
    for (const auto& r : rows)
      out << csv_quote(r.mu.str()) << "," << csv_quote(r.report.value.str()) << ","
          << csv_quote(r.report.factors.str()) << "\n";
  } else {
    out << "### " << title << "\n\n| mu | F(q) | factored |\n|---|---|---|\n";
    for (const auto& r : rows)
      out << "| " << r.mu.str() << " | " << r.report.value.str() << " | " << r.report.factors.str()
          << " |\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

namespace {

struct Check {
  std::string suite;
  std::string input;
  // returns an empty string on success, otherwise a description of the failure
  std::function<std::string()> run;
};

struct Outcome {
  enum Kind { kPass, kFail, kBudget } kind = kPass;
  std::string message;
};

std::vector<Outcome> run_checks(const std::vector<Check>& checks, int threads) {
  std::vector<Outcome> results(checks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < checks.size(); i = next++) {
      Outcome o;
      try {
        o.message = checks[i].run();
        o.kind = o.message.empty() ? Outcome::kPass : Outcome::kFail;
      } catch (const BudgetExceeded& e) {
        o = {Outcome::kBudget, e.what()};
      } catch (const std::exception& e) {
        o = {Outcome::kFail, e.what()};
      }
      results[i] = std::move(o);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::string expect_eq(const IntLaurent& a, const IntLaurent& b) {
  return a == b ? "" : a.str() + " != " + b.str();
}

int size_or(const RunConfig& c, int fallback) { return c.n > 0 ? c.n : fallback; }

void add_routes(const RunConfig& c, std::vector<Check>& out) {
  const int N = size_or(c, 5);
  for (int n = 1; n <= N; ++n)
    for (const auto& mu : partitions_of(n))
      for (const auto& lam : partitions_of(n))
        out.push_back({"routes", "mu=" + mu.str() + " lambda=" + lam.str(), [=] {
                         IntLaurent f = F_mu_lambda(mu, lam).value;
                         for (const auto& L : rearrangements(lam)) {
                           std::string e = expect_eq(f, F_mu_lambda_recursive(mu, L).value);
                           if (!e.empty()) return "recursive " + L.str() + ": " + e;
                         }
                         HessenbergFunction k = from_composition(lam);
                         std::string e = expect_eq(f, F_mu_h_tableaux(mu, k).value);
                         if (!e.empty()) return "tableaux: " + e;
                         if (n <= 5) {
                           e = expect_eq(f, F_mu_h_chromatic(mu, k).value);
                           if (!e.empty()) return "chromatic: " + e;
                         }
                         return std::string();
                       }});
}

void add_modular(const RunConfig& c, std::vector<Check>& out) {
  const int N = size_or(c, 5);
  const IntLaurent qp1 = IntLaurent::from_coeffs({1, 1});
  for (int n = 1; n <= N; ++n)
    for (const auto& t : enumerate_compatible_triples(n))
      out.push_back({"modular", t.h0.str() + " " + t.h1.str() + " " + t.h2.str(), [=] {
                       for (const auto& mu : partitions_of(n)) {
                         IntLaurent lhs = qp1 * F_mu_h(mu, t.h1).value;
                         IntLaurent rhs = F_mu_h(mu, t.h0).value + F_mu_h(mu, t.h2).value.shifted(1);
                         if (!(lhs == rhs)) return "mu=" + mu.str() + ": " + lhs.str() + " != " + rhs.str();
                       }
                       return std::string();
                     }});
}

void add_bruteforce(const RunConfig& c, std::vector<Check>& out) {
  const int N = size_or(c, 4);
  const Budget b = budget_of(c);
  for (int q : c.primes)
    for (int n = 1; n <= N; ++n)
      for (const auto& h : enumerate_hessenberg(n))
        out.push_back({"bruteforce", "p=" + std::to_string(q) + " h=" + h.str(), [=] {
                         Tally t = tally_ideal(h, q, b);
                         for (const auto& mu : partitions_of(n)) {
                           Int want = t.count(mu) ? t.at(mu) : Int(0);
                           Int got = F_mu_h(mu, h).value.eval_int(q);
                           if (got != want)
                             return "mu=" + mu.str() + ": formula " + got.get_str() + ", brute " +
                                    want.get_str();
                         }
                         return std::string();
                       }});
}

void add_macdonald(const RunConfig& c, std::vector<Check>& out) {
  const int N = size_or(c, 6);
  for (int n = 1; n <= N; ++n) {
    for (int k = 0; 2 * k <= n; ++k)
      out.push_back({"macdonald", "two-row n=" + std::to_string(n) + " k=" + std::to_string(k), [=] {
                       Partition mu({n - k, k});
                       if (!(convert(jing_jozefiak_Q(n, k), Basis::M) == macdonald_Q0(mu)))
                         return std::string("Jing-Jozefiak expansion differs from Q_(n-k,k)");
                       if (two_var_P(n, k) != restrict_to_two_vars(macdonald_P0(mu, true)))
                         return std::string("two-variable P differs");
                       return std::string();
                     }});
    for (const auto& mu : partitions_of(n))
      out.push_back({"macdonald", "mu=" + mu.str(), [=] {
                       for (const auto& lam : partitions_of(n)) {
                         IntLaurent num = q_factorial(lam);
                         IntLaurent den(1);
                         for (int i = 0; i < mu.length(); ++i) den *= q_factorial(mu[i] - mu[i + 1]);
                         IntLaurent lhs = coeff_b(mu, lam) * den;
                         IntLaurent rhs = coeff_a(mu, lam) * num;
                         if (!(lhs == rhs)) return "b/a relation fails at lambda=" + lam.str();
                       }
                       // Schur expansion of P_{mu'}(x;q,0)
                       SymPoly s = convert(macdonald_P0(conjugate(mu)), Basis::S);
                       for (const auto& [eta, kq] : s.terms()) {
                         if (!dominates(eta, conjugate(mu))) return "Schur support escapes at " + eta.str();
                         if (!kq.is_laurent() || !kq.num().is_polynomial())
                           return "Schur coefficient not a polynomial at " + eta.str();
                         for (const auto& [e, v] : kq.num().terms())
                           if (v < 0) return "negative Schur coefficient at " + eta.str();
                       }
                       for (const auto& lam : partitions_of(n)) {
                         QRational sum;
                         for (const auto& [eta, kq] : s.terms()) sum += kq * QRational(Int(kostka(eta, lam)));
                         if (sum != QRational(coeff_a(conjugate(mu), lam)))
                           return "Kostka decomposition fails at lambda=" + lam.str();
                       }
                       return std::string();
                     }});
  }
}

void add_hermite(const RunConfig& c, std::vector<Check>& out) {
  std::vector<Partition> lams;
  if (c.lambda) {
    lams.emplace_back(*c.lambda);
  } else {
    for (int n = 1; n <= size_or(c, 6); ++n)
      for (const auto& l : partitions_of(n)) lams.push_back(l);
  }
  for (const auto& l : lams)
    out.push_back({"hermite", "lambda=" + l.str(), [=] {
                     if (!kirillov_identity_check(l))
                       return "Kirillov identity fails: lhs " + wpoly_str(kirillov_lhs(l)) + ", rhs " +
                              wpoly_str(kirillov_rhs(l));
                     C_lambda(l);
                     return std::string();
                   }});
  if (!c.lambda)
    for (int n = 1; n <= 2 * size_or(c, 6); ++n)
      out.push_back({"hermite", "C_n n=" + std::to_string(n), [=] {
                       C_n_closed(n);
                       return std::string();
                     }});
}

void add_cosets(const RunConfig& c, std::vector<Check>& out) {
  const int N = size_or(c, 3);
  const Budget b = budget_of(c);
  for (int q : c.primes)
    for (int n = 1; n <= N; ++n)
      for (const auto& h1 : enumerate_hessenberg(n))
        for (const auto& h2 : enumerate_hessenberg(n))
          out.push_back({"cosets", "p=" + std::to_string(q) + " " + h1.str() + " " + h2.str(), [=] {
                           Int want = double_coset_count_brute(h1, h2, q, b);
                           Int got = double_coset_count(h1, h2).eval_int(q);
                           if (got != want) return "formula " + got.get_str() + ", brute " + want.get_str();
                           return std::string();
                         }});
}

}  // namespace

int cmd_verify(const RunConfig& c, std::ostream& out) {
  static const std::vector<std::pair<std::string, void (*)(const RunConfig&, std::vector<Check>&)>> suites = {
      {"routes", add_routes},       {"modular", add_modular}, {"bruteforce", add_bruteforce},
      {"macdonald", add_macdonald}, {"hermite", add_hermite}, {"cosets", add_cosets}};
  std::vector<Check> checks;
  bool known = c.suite == "all";
  for (const auto& [name, add] : suites)
    if (c.suite == "all" || c.suite == name) {
      add(c, checks);
      known = true;
    }
  if (!known) throw UsageError("unknown suite '" + c.suite + "'");
  std::vector<Outcome> results = run_checks(checks, c.threads);

  nlohmann::json report = nlohmann::json::object();
  int failures = 0, budget = 0;
  for (size_t i = 0; i < checks.size(); ++i) {
    auto& s = report[checks[i].suite];
    if (s.is_null()) s = {{"checks", 0}, {"failures", nlohmann::json::array()}, {"budget", nlohmann::json::array()}};
    s["checks"] = s["checks"].get<int>() + 1;
    if (results[i].kind == Outcome::kFail) {
      ++failures;
      s["failures"].push_back({{"input", checks[i].input}, {"error", results[i].message}});
    } else if (results[i].kind == Outcome::kBudget) {
      ++budget;
      s["budget"].push_back({{"input", checks[i].input}, {"error", results[i].message}});
    }
  }
  if (c.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    for (const auto& [name, s] : report.items()) {
      out << name << ": " << s["checks"].get<int>() << " checks, " << s["failures"].size() << " failed";
      if (!s["budget"].empty()) out << ", " << s["budget"].size() << " over budget";
      out << "\n";
      for (const auto& f : s["failures"]) out << "  FAIL " << f.dump() << "\n";
      for (const auto& f : s["budget"]) out << "  BUDGET " << f.dump() << "\n";
    }
  }
  if (failures) return kExitInvariant;
  if (budget) return kExitBudget;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// brute

int cmd_brute(const RunConfig& c, std::ostream& out) {
  const Budget b = budget_of(c);
  nlohmann::json j;
  if (c.cosets) {
    if (!c.h1 || !c.h2) throw UsageError("brute --cosets needs --h1 and --h2");
    HessenbergFunction h1(*c.h1), h2(*c.h2);
    if (c.n && c.n != h1.n()) throw UsageError("--n does not match --h1");
    j = {{"h1", *c.h1}, {"h2", *c.h2}, {"p", c.p}, {"count", int_json(double_coset_count_brute(h1, h2, c.p, b))}};
  } else {
    if (!c.h) throw UsageError("brute needs --h (or --cosets with --h1/--h2)");
    HessenbergFunction h(*c.h);
    nlohmann::json tally = nlohmann::json::object();
    for (const auto& [mu, count] : tally_ideal(h, c.p, b)) tally[mu.str()] = int_json(count);
    j = {{"h", *c.h}, {"p", c.p}, {"tally", tally}};
  }
  out << j.dump(c.format == "json" ? 2 : -1) << "\n";
  return kExitOk;
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.out.empty()) {
      file.open(config.out);
      if (!file) throw UsageError("cannot open output file " + config.out);
      sink = &file;
    }
    if (config.command == "table") return cmd_table(config, *sink);
    if (config.command == "verify") return cmd_verify(config, *sink);
    return cmd_brute(config, *sink);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget refused: " << e.what() << " (needs " << e.required().get_str() << ")\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace jc
