// Command-line front end. Links only the C API; rationals cross the
// boundary as exact strings. Exit codes: 0 success / all identities passed,
// 1 identity failure, 2 usage or input error. Nothing else.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rbellkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;

using OwnedString = std::unique_ptr<char, void (*)(char*)>;

OwnedString owned(char* p) { return OwnedString(p, &rbk_free_string); }

using OwnedFamily = std::unique_ptr<rbk_family, void (*)(rbk_family*)>;

[[noreturn]] void fail(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitUsage);
}

[[noreturn]] void fail_api() { fail(rbk_last_error()); }

OwnedFamily parse_family(const std::string& text) {
  rbk_family* fam = nullptr;
  if (rbk_family_parse(text.c_str(), &fam) != RBK_OK) fail_api();
  return OwnedFamily(fam, &rbk_family_free);
}

void print_value_record(const std::string& command,
                        const std::vector<std::pair<std::string, std::string>>& inputs,
                        const std::vector<std::string>& values, int order,
                        const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json rec;
    rec["command"] = command;
    nlohmann::ordered_json in;
    for (const auto& [key, value] : inputs) in[key] = value;
    rec["inputs"] = std::move(in);
    rec["values"] = values;
    rec["order"] = order;
    std::cout << rec.dump() << "\n";
  } else {
    for (const std::string& v : values) std::cout << v << "\n";
  }
}

struct RbellArgs {
  std::string a, b;
  int n = 0, k = 0, r = 0, max_n = 0;
  bool table = false;
  bool has_n = false, has_k = false, has_max_n = false;
  std::string format = "text";
};

int run_rbell(const RbellArgs& args) {
  const OwnedFamily fa = parse_family(args.a);
  const OwnedFamily fb = parse_family(args.b);
  if (args.table) {
    if (!args.has_max_n) fail("rbell --table requires --max-n");
    rbk_table* table = nullptr;
    if (rbk_table_compute(fa.get(), fb.get(), args.r, args.max_n, &table) != RBK_OK) fail_api();
    const std::unique_ptr<rbk_table, void (*)(rbk_table*)> owner(table, &rbk_table_free);
    if (args.format == "json") {
      std::vector<std::string> values;
      for (int n = 0; n <= args.max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
          char* v = nullptr;
          if (rbk_table_value(table, n, k, &v) != RBK_OK) fail_api();
          values.push_back(owned(v).get());
        }
      }
      print_value_record("rbell",
                         {{"a", args.a},
                          {"b", args.b},
                          {"r", std::to_string(args.r)},
                          {"max_n", std::to_string(args.max_n)},
                          {"table", "true"}},
                         values, args.max_n, "json");
    } else {  // text and csv coincide for tables
      char* csv = nullptr;
      if (rbk_table_to_csv(table, &csv) != RBK_OK) fail_api();
      std::cout << owned(csv).get();
    }
    return kExitOk;
  }
  if (!args.has_n || !args.has_k) fail("rbell requires --n and --k (or --table with --max-n)");
  if (args.format == "csv") fail("csv output requires --table");
  char* value = nullptr;
  if (rbk_partial_r_bell(fa.get(), fb.get(), args.n, args.k, args.r, &value) != RBK_OK)
    fail_api();
  print_value_record("rbell",
                     {{"a", args.a},
                      {"b", args.b},
                      {"n", std::to_string(args.n)},
                      {"k", std::to_string(args.k)},
                      {"r", std::to_string(args.r)}},
                     {owned(value).get()}, args.n, args.format);
  return kExitOk;
}

struct PolyArgs {
  std::string family;
  std::string alpha, beta, x, y, a, b;
  int n = 0;
  bool has_n = false;
  std::string format = "text";
};

int run_poly(const PolyArgs& args) {
  auto need = [&](const std::string& text, const char* flag) -> const std::string& {
    if (text.empty()) fail("poly " + args.family + " requires " + flag);
    return text;
  };
  if (!args.has_n) fail("poly requires --n");
  char* value = nullptr;
  std::vector<std::pair<std::string, std::string>> inputs = {{"family", args.family}};
  if (args.family == "bernoulli1" || args.family == "bernoulli2") {
    const std::string& alpha = need(args.alpha, "--alpha");
    const std::string& x = need(args.x, "--x");
    const auto fn = args.family == "bernoulli1" ? rbk_bernoulli_first : rbk_bernoulli_second;
    if (fn(alpha.c_str(), x.c_str(), args.n, &value) != RBK_OK) fail_api();
    inputs.insert(inputs.end(), {{"alpha", alpha}, {"x", x}});
  } else if (args.family == "laguerre") {
    const std::string& alpha = need(args.alpha, "--alpha");
    const std::string& beta = need(args.beta, "--beta");
    const std::string& x = need(args.x, "--x");
    if (rbk_laguerre(alpha.c_str(), beta.c_str(), x.c_str(), args.n, &value) != RBK_OK)
      fail_api();
    inputs.insert(inputs.end(), {{"alpha", alpha}, {"beta", beta}, {"x", x}});
  } else if (args.family == "t-poly") {
    const std::string& alpha = need(args.alpha, "--alpha");
    const std::string& x = need(args.x, "--x");
    const OwnedFamily fa = parse_family(need(args.a, "--a"));
    if (rbk_t_poly(fa.get(), alpha.c_str(), x.c_str(), args.n, &value) != RBK_OK) fail_api();
    inputs.insert(inputs.end(), {{"a", args.a}, {"alpha", alpha}, {"x", x}});
  } else if (args.family == "p-bivariate") {
    const std::string& alpha = need(args.alpha, "--alpha");
    const std::string& x = need(args.x, "--x");
    const std::string& y = need(args.y, "--y");
    const OwnedFamily fa = parse_family(need(args.a, "--a"));
    const OwnedFamily fb = parse_family(need(args.b, "--b"));
    if (rbk_p_bivariate(fa.get(), fb.get(), alpha.c_str(), x.c_str(), y.c_str(), args.n,
                        &value) != RBK_OK)
      fail_api();
    inputs.insert(inputs.end(),
                  {{"a", args.a}, {"b", args.b}, {"alpha", alpha}, {"x", x}, {"y", y}});
  } else {
    fail("unknown poly family '" + args.family +
         "' (expected bernoulli1, bernoulli2, laguerre, p-bivariate, t-poly)");
  }
  inputs.emplace_back("n", std::to_string(args.n));
  print_value_record("poly", inputs, {owned(value).get()}, args.n, args.format);
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string config;
  std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
  std::string config_text;
  if (!args.config.empty()) {
    std::ifstream in(args.config);
    if (!in) fail("cannot read configuration file '" + args.config + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    config_text = buf.str();
    config_text += "\n";
  }
  config_text += "suites=" + args.suite + "\n";

  const auto start = std::chrono::steady_clock::now();
  rbk_suite* suite = nullptr;
  if (rbk_suite_run(config_text.c_str(), &suite) != RBK_OK) fail_api();
  const std::unique_ptr<rbk_suite, void (*)(rbk_suite*)> owner(suite, &rbk_suite_free);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            start);

  char* json = nullptr;
  if (rbk_suite_reports_json(suite, &json) != RBK_OK) fail_api();
  const OwnedString reports_text = owned(json);
  const bool passed = rbk_suite_passed(suite) == 1;

  if (args.format == "json") {
    nlohmann::ordered_json rec;
    rec["command"] = "verify";
    rec["inputs"] = {{"suite", args.suite}, {"config", args.config}};
    rec["passed"] = passed;
    rec["reports"] = nlohmann::ordered_json::parse(reports_text.get());
    std::cout << rec.dump() << "\n";
  } else {
    const auto reports = nlohmann::json::parse(reports_text.get());
    for (const auto& rep : reports) {
      const auto& defects = rep.at("defects");
      std::size_t failed = 0;
      for (const auto& d : defects)
        if (d.get<std::string>() != "0") ++failed;
      if (rep.at("passed").get<bool>()) {
        std::cout << rep.at("id").get<std::string>() << ": pass (" << defects.size()
                  << " checks)\n";
      } else {
        std::cout << rep.at("id").get<std::string>() << ": FAIL (" << failed << " of "
                  << defects.size() << " checks failed)\n";
      }
    }
    std::cout << "suite: " << (passed ? "pass" : "FAIL") << "\n";
  }
  // Timing stays on stderr so stdout is byte-stable across runs.
  std::cerr << "verify: " << elapsed.count() << " ms\n";
  return passed ? kExitOk : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact partial r-Bell triangles, Whitney-style numbers, and bivariate "
               "polynomial families"};
  app.require_subcommand(1);

  RbellArgs rbell;
  CLI::App* rbell_cmd = app.add_subcommand("rbell", "Triangle entry or whole triangle");
  rbell_cmd->add_option("--a", rbell.a, "a-role family")->required();
  rbell_cmd->add_option("--b", rbell.b, "b-role family")->required();
  auto* opt_n = rbell_cmd->add_option("--n", rbell.n, "row index");
  auto* opt_k = rbell_cmd->add_option("--k", rbell.k, "column index");
  rbell_cmd->add_option("--r", rbell.r, "weight r (default 0)");
  rbell_cmd->add_flag("--table", rbell.table, "emit the whole triangle");
  auto* opt_max_n = rbell_cmd->add_option("--max-n", rbell.max_n, "largest row for --table");
  rbell_cmd->add_option("--format", rbell.format, "text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  PolyArgs poly;
  CLI::App* poly_cmd = app.add_subcommand("poly", "Polynomial family value");
  poly_cmd->add_option("family", poly.family,
                       "bernoulli1, bernoulli2, laguerre, p-bivariate, or t-poly")
      ->required();
  poly_cmd->add_option("--alpha", poly.alpha, "rational parameter");
  poly_cmd->add_option("--beta", poly.beta, "rational parameter");
  poly_cmd->add_option("--x", poly.x, "rational argument");
  poly_cmd->add_option("--y", poly.y, "rational argument");
  poly_cmd->add_option("--a", poly.a, "a-role family (t-poly, p-bivariate)");
  poly_cmd->add_option("--b", poly.b, "b-role family (p-bivariate)");
  auto* poly_n = poly_cmd->add_option("--n", poly.n, "index");
  poly_cmd->add_option("--format", poly.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run identity verification suites");
  verify_cmd->add_option("--suite", verify.suite, "suite group or report id (default all)");
  verify_cmd->add_option("--config", verify.config, "key=value configuration file");
  verify_cmd->add_option("--format", verify.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (rbell_cmd->parsed()) {
      rbell.has_n = opt_n->count() > 0;
      rbell.has_k = opt_k->count() > 0;
      rbell.has_max_n = opt_max_n->count() > 0;
      return run_rbell(rbell);
    }
    if (poly_cmd->parsed()) {
      poly.has_n = poly_n->count() > 0;
      return run_poly(poly);
    }
    if (verify_cmd->parsed()) return run_verify(verify);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
