#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rbellkit.h>

#include <cstring>
#include <string>

namespace {

// Takes ownership of a C string result and frees it.
std::string take(char* s) {
  std::string out = s ? s : "";
  rbk_free_string(s);
  return out;
}

struct FamilyHandle {
  rbk_family* f = nullptr;
  explicit FamilyHandle(const char* text) { REQUIRE(rbk_family_parse(text, &f) == RBK_OK); }
  ~FamilyHandle() { rbk_family_free(f); }
};

}  // namespace

TEST_CASE("version and error plumbing") {
  CHECK(rbk_version() != nullptr);
  CHECK(std::strlen(rbk_version()) > 0);
  CHECK(rbk_last_error() != nullptr);

  rbk_family* f = nullptr;
  CHECK(rbk_family_parse("garbage-kind", &f) == RBK_ERR_INVALID);
  CHECK(f == nullptr);
  CHECK(std::string(rbk_last_error()).find("garbage-kind") != std::string::npos);
  CHECK(rbk_family_parse(nullptr, &f) == RBK_ERR_INVALID);
  CHECK(rbk_family_parse("ones", nullptr) == RBK_ERR_INVALID);
}

TEST_CASE("family parse and describe") {
  FamilyHandle fam("exponential:m=2");
  char* text = nullptr;
  REQUIRE(rbk_family_describe(fam.f, &text) == RBK_OK);
  CHECK(take(text) == "exponential:m=2");
}

TEST_CASE("triangle values") {
  FamilyHandle ones("ones");
  char* value = nullptr;
  REQUIRE(rbk_partial_r_bell(ones.f, ones.f, 3, 2, 0, &value) == RBK_OK);
  CHECK(take(value) == "3");
  // out-of-triangle index maps to the invalid status, output untouched
  char* untouched = nullptr;
  CHECK(rbk_partial_r_bell(ones.f, ones.f, 2, 3, 0, &untouched) == RBK_ERR_INVALID);
  CHECK(untouched == nullptr);
  CHECK(rbk_partial_r_bell(ones.f, ones.f, 2, 1, -1, &untouched) == RBK_ERR_INVALID);
}

TEST_CASE("table compute, value, export") {
  FamilyHandle ones("ones");
  rbk_table* table = nullptr;
  REQUIRE(rbk_table_compute(ones.f, ones.f, 0, 2, &table) == RBK_OK);
  char* value = nullptr;
  REQUIRE(rbk_table_value(table, 2, 1, &value) == RBK_OK);
  CHECK(take(value) == "1");
  CHECK(rbk_table_value(table, 3, 0, &value) == RBK_ERR_INVALID);
  char* csv = nullptr;
  REQUIRE(rbk_table_to_csv(table, &csv) == RBK_OK);
  CHECK(take(csv).rfind("n,k,value\n", 0) == 0);
  char* json = nullptr;
  REQUIRE(rbk_table_to_json(table, &json) == RBK_OK);
  CHECK(take(json).find("\"rows\"") != std::string::npos);
  rbk_table_free(table);
}

TEST_CASE("whitney values") {
  char* value = nullptr;
  REQUIRE(rbk_whitney_second("2", 1, 2, 1, &value) == RBK_OK);
  CHECK(take(value) == "4");
  REQUIRE(rbk_whitney_first("2", 1, 2, 1, &value) == RBK_OK);
  CHECK(take(value) == "-4");
  CHECK(rbk_whitney_second("not-a-number", 1, 2, 1, &value) == RBK_ERR_INVALID);
  CHECK(rbk_whitney_second("0", 1, 2, 1, &value) == RBK_ERR_INVALID);
}

TEST_CASE("polynomial families") {
  char* value = nullptr;
  REQUIRE(rbk_bernoulli_first("3", "1", 1, &value) == RBK_OK);
  CHECK(take(value) == "-1/2");
  REQUIRE(rbk_bernoulli_second("1", "0", 1, &value) == RBK_OK);
  CHECK(take(value) == "1/2");
  REQUIRE(rbk_laguerre("1", "1", "2", 1, &value) == RBK_OK);
  CHECK(take(value) == "-3");
  REQUIRE(rbk_bernoulli_first_closed(2, 1, "2", 1, &value) == RBK_OK);
  const std::string closed = take(value);
  REQUIRE(rbk_bernoulli_first("4", "1/2", 2, &value) == RBK_OK);
  CHECK(take(value) == closed);
  REQUIRE(rbk_bernoulli_second_mixed(1, 1, "1", 0, 0, &value) == RBK_OK);
  CHECK(take(value) == "1/2");
  CHECK(rbk_bernoulli_first("1/0", "1", 1, &value) == RBK_ERR_INVALID);
}

TEST_CASE("status mapping keeps domain errors distinct") {
  FamilyHandle ones("ones");
  FamilyHandle scaled("falling-factorial:beta=3");  // leading entry 3, not 1
  char* value = nullptr;
  // structural misuse: negative index
  CHECK(rbk_t_poly(ones.f, "1", "0", -1, &value) == RBK_ERR_INVALID);
  // domain: the bivariate spec requires a unit leading entry
  CHECK(rbk_p_bivariate(scaled.f, ones.f, "1", "0", "0", 1, &value) == RBK_ERR_DOMAIN);
  CHECK(std::string(rbk_last_error()).find("A'(0)") != std::string::npos);
  CHECK(value == nullptr);
  // working call on the same handles afterwards
  REQUIRE(rbk_p_bivariate(ones.f, ones.f, "1", "0", "0", 2, &value) == RBK_OK);
  CHECK(take(value) == "1/6");
}

TEST_CASE("t_poly over an explicit family") {
  FamilyHandle a("explicit:[1,-2]");
  char* value = nullptr;
  REQUIRE(rbk_t_poly(a.f, "0", "1", 1, &value) == RBK_OK);
  CHECK(take(value) == "-2");
}

TEST_CASE("suite run through the C boundary") {
  rbk_suite* suite = nullptr;
  REQUIRE(rbk_suite_run("suites=whitney\n", &suite) == RBK_OK);
  CHECK(rbk_suite_passed(suite) == 1);
  char* json = nullptr;
  REQUIRE(rbk_suite_reports_json(suite, &json) == RBK_OK);
  const std::string text = take(json);
  CHECK(text.find("ex1-whitney") != std::string::npos);
  rbk_suite_free(suite);

  rbk_suite* bad = nullptr;
  CHECK(rbk_suite_run("suites=unknown-group\n", &bad) == RBK_ERR_INVALID);
  CHECK(bad == nullptr);
  CHECK(rbk_suite_run("typo=1\n", &bad) == RBK_ERR_INVALID);
}
