#include "rbellkit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "rbell.hpp"
#include "verify.hpp"

using rbellkit::Rational;

struct rbk_family {
  rbellkit::SequenceFamily impl;
};

struct rbk_table {
  rbellkit::RBellTable impl;
};

struct rbk_suite {
  std::vector<rbellkit::IdentityReport> reports;
  bool passed;
};

namespace {

thread_local std::string g_last_error = "no error";

void set_error(const char* what) { g_last_error = what; }

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs fn inside the exception-to-status boundary. fn performs its own
// output assignment, so outputs stay untouched on failure.
template <typename Fn>
rbk_status guarded(Fn&& fn) {
  try {
    fn();
    return RBK_OK;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return RBK_ERR_INVALID;
  } catch (const std::out_of_range& e) {
    set_error(e.what());
    return RBK_ERR_INVALID;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return RBK_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return RBK_ERR_NOMEM;
  } catch (const std::exception& e) {
    set_error(e.what());
    return RBK_ERR_INTERNAL;
  }
}

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

Rational parse_arg(const char* text, const char* name) {
  require(text != nullptr, name);
  return rbellkit::parse_rational(text);
}

}  // namespace

extern "C" {

const char* rbk_version(void) { return "1.0.0"; }

const char* rbk_last_error(void) { return g_last_error.c_str(); }

void rbk_free_string(char* s) { std::free(s); }

rbk_status rbk_family_parse(const char* text, rbk_family** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "rbk_family_parse: NULL argument");
    auto fam = rbellkit::SequenceFamily::parse(text);
    *out = new rbk_family{std::move(fam)};
  });
}

rbk_status rbk_family_describe(const rbk_family* family, char** out) {
  return guarded([&] {
    require(family != nullptr && out != nullptr, "rbk_family_describe: NULL argument");
    *out = dup_string(family->impl.describe());
  });
}

void rbk_family_free(rbk_family* family) { delete family; }

rbk_status rbk_partial_r_bell(const rbk_family* a, const rbk_family* b, int n, int k, int r,
                              char** out_value) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out_value != nullptr,
            "rbk_partial_r_bell: NULL argument");
    *out_value = dup_string(rbellkit::to_string(rbellkit::partial_r_bell(a->impl, b->impl, n, k, r)));
  });
}

rbk_status rbk_table_compute(const rbk_family* a, const rbk_family* b, int r, int max_n,
                             rbk_table** out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "rbk_table_compute: NULL argument");
    *out = new rbk_table{rbellkit::RBellTable(a->impl, b->impl, r, max_n)};
  });
}

rbk_status rbk_table_value(const rbk_table* table, int n, int k, char** out_value) {
  return guarded([&] {
    require(table != nullptr && out_value != nullptr, "rbk_table_value: NULL argument");
    *out_value = dup_string(rbellkit::to_string(table->impl.value(n, k)));
  });
}

rbk_status rbk_table_to_csv(const rbk_table* table, char** out_text) {
  return guarded([&] {
    require(table != nullptr && out_text != nullptr, "rbk_table_to_csv: NULL argument");
    *out_text = dup_string(table->impl.to_csv());
  });
}

rbk_status rbk_table_to_json(const rbk_table* table, char** out_text) {
  return guarded([&] {
    require(table != nullptr && out_text != nullptr, "rbk_table_to_json: NULL argument");
    *out_text = dup_string(table->impl.to_json());
  });
}

void rbk_table_free(rbk_table* table) { delete table; }

rbk_status rbk_whitney_second(const char* m, int r, int n, int k, char** out_value) {
  return guarded([&] {
    require(out_value != nullptr, "rbk_whitney_second: NULL argument");
    const Rational mval = parse_arg(m, "rbk_whitney_second: NULL m");
    *out_value = dup_string(rbellkit::to_string(rbellkit::whitney_second(mval, r, n, k)));
  });
}

rbk_status rbk_whitney_first(const char* m, int r, int n, int k, char** out_value) {
  return guarded([&] {
    require(out_value != nullptr, "rbk_whitney_first: NULL argument");
    const Rational mval = parse_arg(m, "rbk_whitney_first: NULL m");
    *out_value = dup_string(rbellkit::to_string(rbellkit::whitney_first(mval, r, n, k)));
  });
}

rbk_status rbk_bernoulli_first(const char* alpha, const char* x, int n, char** out_value) {
  return guarded([&] {
    require(out_value != nullptr, "rbk_bernoulli_first: NULL argument");
    *out_value = dup_string(rbellkit::to_string(
        rbellkit::bernoulli_first(parse_arg(alpha, "rbk_bernoulli_first: NULL alpha"),
                                  parse_arg(x, "rbk_bernoulli_first: NULL x"), n)));
  });
}

rbk_status rbk_bernoulli_second(const char* alpha, const char* x, int n, char** out_value) {
  return guarded([&] {
    require(out_value != nullptr, "rbk_bernoulli_second: NULL argument");
    *out_value = dup_string(rbellkit::to_string(
        rbellkit::bernoulli_second(parse_arg(alpha, "rbk_bernoulli_second: NULL alpha"),
                                   parse_arg(x, "rbk_bernoulli_second: NULL x"), n)));
  });
}

rbk_status rbk_bernoulli_first_closed(int n, int p, const char* m, int r, char** out_value) {
  return guarded([&] {
    require(out_value != nullptr, "rbk_bernoulli_first_closed: NULL argument");
    *out_value = dup_string(rbellkit::to_string(rbellkit::bernoulli_first_closed(
        n, p, parse_arg(m, "rbk_bernoulli_first_closed: NULL m"), r)));
  });
}

rbk_status rbk_bernoulli_second_closed(int n, int p, const char* m, int r, char** out_value) {
  return guarded([&] {
    require(out_value != nullptr, "rbk_bernoulli_second_closed: NULL argument");
    *out_value = dup_string(rbellkit::to_string(rbellkit::bernoulli_second_closed(
        n, p, parse_arg(m, "rbk_bernoulli_second_closed: NULL m"), r)));
  });
}

rbk_status rbk_bernoulli_first_mixed(int n, int p, const char* m, int r, int s,
                                     char** out_value) {
  return guarded([&] {
    require(out_value != nullptr, "rbk_bernoulli_first_mixed: NULL argument");
    *out_value = dup_string(rbellkit::to_string(rbellkit::bernoulli_first_mixed(
        n, p, parse_arg(m, "rbk_bernoulli_first_mixed: NULL m"), r, s)));
  });
}

rbk_status rbk_bernoulli_second_mixed(int n, int p, const char* m, int r, int s,
                                      char** out_value) {
  return guarded([&] {
    require(out_value != nullptr, "rbk_bernoulli_second_mixed: NULL argument");
    *out_value = dup_string(rbellkit::to_string(rbellkit::bernoulli_second_mixed(
        n, p, parse_arg(m, "rbk_bernoulli_second_mixed: NULL m"), r, s)));
  });
}

rbk_status rbk_laguerre(const char* alpha, const char* beta, const char* x, int n,
                        char** out_value) {
  return guarded([&] {
    require(out_value != nullptr, "rbk_laguerre: NULL argument");
    *out_value = dup_string(rbellkit::to_string(
        rbellkit::laguerre_like(parse_arg(alpha, "rbk_laguerre: NULL alpha"),
                                parse_arg(beta, "rbk_laguerre: NULL beta"),
                                parse_arg(x, "rbk_laguerre: NULL x"), n)));
  });
}

rbk_status rbk_t_poly(const rbk_family* a, const char* alpha, const char* x, int n,
                      char** out_value) {
  return guarded([&] {
    require(a != nullptr && out_value != nullptr, "rbk_t_poly: NULL argument");
    if (n < 0) throw std::out_of_range("rbk_t_poly: n must be nonnegative");
    const rbellkit::Series A = a->impl.to_series(n + 1, 0);
    *out_value = dup_string(rbellkit::to_string(
        rbellkit::t_poly(parse_arg(alpha, "rbk_t_poly: NULL alpha"),
                         parse_arg(x, "rbk_t_poly: NULL x"), A, n)));
  });
}

rbk_status rbk_p_bivariate(const rbk_family* a, const rbk_family* b, const char* alpha,
                           const char* x, const char* y, int n, char** out_value) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out_value != nullptr,
            "rbk_p_bivariate: NULL argument");
    if (n < 0) throw std::out_of_range("rbk_p_bivariate: n must be nonnegative");
    const rbellkit::FamilySpec spec =
        rbellkit::FamilySpec::from_families(a->impl, b->impl, n + 1);
    *out_value = dup_string(rbellkit::to_string(
        rbellkit::p_bivariate(parse_arg(alpha, "rbk_p_bivariate: NULL alpha"),
                              parse_arg(x, "rbk_p_bivariate: NULL x"),
                              parse_arg(y, "rbk_p_bivariate: NULL y"), spec, n)));
  });
}

rbk_status rbk_suite_run(const char* config_text, rbk_suite** out) {
  return guarded([&] {
    require(out != nullptr, "rbk_suite_run: NULL argument");
    const rbellkit::SuiteConfig cfg = (config_text == nullptr || *config_text == '\0')
                                          ? rbellkit::SuiteConfig()
                                          : rbellkit::SuiteConfig::parse_text(config_text);
    auto reports = rbellkit::run_full_suite(cfg);
    bool passed = true;
    for (const auto& r : reports) passed = passed && r.passed;
    *out = new rbk_suite{std::move(reports), passed};
  });
}

int rbk_suite_passed(const rbk_suite* suite) {
  return (suite != nullptr && suite->passed) ? 1 : 0;
}

rbk_status rbk_suite_reports_json(const rbk_suite* suite, char** out_text) {
  return guarded([&] {
    require(suite != nullptr && out_text != nullptr, "rbk_suite_reports_json: NULL argument");
    *out_text = dup_string(rbellkit::reports_to_json(suite->reports));
  });
}

void rbk_suite_free(rbk_suite* suite) { delete suite; }

}  // extern "C"
