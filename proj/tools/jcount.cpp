#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "jc/cli.hpp"
#include "jc/partitions.hpp"

namespace {

struct ListFlag {
  std::string text;
  bool given() const { return !text.empty(); }
};

void add_list(CLI::App* app, const std::string& name, ListFlag& dst, const std::string& help) {
  app->add_option(name, dst.text, help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jcount: Jordan type counts in ad-nilpotent ideals over finite fields"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help");
  app.fallthrough();

  jc::RunConfig cfg;
  std::string config_file;
  ListFlag h, lambda, mu, h1, h2, primes;
  int n = 0, p = 2, max_free = -1, threads = 1;
  long max_group_order = 0;
  std::string format, out, suite;
  bool cosets = false;

  app.add_option("--config", config_file, "JSON file with default options")->check(CLI::ExistingFile);

  auto common = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "print this help");
    add_list(sub, "--h", h, "Hessenberg function, e.g. 1,3,3");
    add_list(sub, "--lambda", lambda, "partition lambda, e.g. 2,2,2,2");
    add_list(sub, "--mu", mu, "Jordan type");
    sub->add_option("--n", n, "size");
    sub->add_option("--format", format, "md, json or csv");
    sub->add_option("--out", out, "write the report here instead of stdout");
    sub->add_option("--max-free", max_free, "largest number of free entries to enumerate");
    sub->add_option("--max-group-order", max_group_order, "largest group to scan");
    sub->add_option("--threads", threads, "worker threads");
  };

  CLI::App* table = app.add_subcommand("table", "tabulate F_{mu h}(q) or F_{mu lambda}(q)");
  common(table);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  verify->add_option("--suite", suite, "routes, modular, bruteforce, macdonald, hermite, cosets or all");
  add_list(verify, "--primes", primes, "primes for brute-force checks, e.g. 2,3");

  CLI::App* brute = app.add_subcommand("brute", "count by enumeration over F_p");
  common(brute);
  brute->add_option("--p", p, "prime");
  brute->add_flag("--cosets", cosets, "count double cosets U_h1 \\ GL_n / U_h2");
  add_list(brute, "--h1", h1, "left Hessenberg function");
  add_list(brute, "--h2", h2, "right Hessenberg function");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return jc::kExitUsage;
  }

  try {
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      cfg.merge_json(nlohmann::json::parse(in));
    }
    cfg.command = app.get_subcommands().front()->get_name();
    auto list = [](const ListFlag& f, std::optional<std::vector<int>>& dst) {
      if (f.given()) dst = jc::parse_int_list(f.text);
    };
    list(h, cfg.h);
    list(lambda, cfg.lambda);
    list(mu, cfg.mu);
    list(h1, cfg.h1);
    list(h2, cfg.h2);
    if (primes.given()) cfg.primes = jc::parse_int_list(primes.text);
    CLI::App* sub = app.get_subcommands().front();
    auto given = [sub](const std::string& name) {
      const CLI::Option* o = sub->get_option_no_throw(name);
      return o != nullptr && o->count() > 0;
    };
    if (given("--n")) cfg.n = n;
    if (given("--p")) cfg.p = p;
    if (cosets) cfg.cosets = true;
    if (given("--max-free")) cfg.max_free = max_free;
    if (given("--max-group-order")) cfg.max_group_order = max_group_order;
    if (given("--threads")) cfg.threads = threads;
    if (!format.empty()) cfg.format = format;
    if (!out.empty()) cfg.out = out;
    if (!suite.empty()) cfg.suite = suite;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return jc::kExitUsage;
  }
  return jc::run_command(cfg, std::cout, std::cerr);
}
