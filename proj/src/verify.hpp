#pragma once

#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "rbell.hpp"

namespace rbellkit {

// Outcome of checking one identity over a parameter grid. Every grid entry
// records the full parameter assignment; defects line up with grid entries
// and are exact (an identity passes only if every defect is exactly zero).
struct IdentityReport {
  std::string identity_id;
  std::vector<std::string> grid;
  std::vector<Rational> defects;
  bool passed = true;
  std::string notes;

  void add(std::string label, Rational defect);
  void merge(const IdentityReport& other);  // same identity_id
};

// Deterministic serialization: {"id", "grid", "defects", "passed", "notes"}.
std::string report_to_json(const IdentityReport& report);
std::string reports_to_json(const std::vector<IdentityReport>& reports);

// Plain key=value configuration ('#' comments allowed). Unknown keys are
// rejected so typos cannot silently shrink a verification run.
struct SuiteConfig {
  unsigned long seed = 1;
  int random_pairs = 5;
  int thm1_max_n = 10;
  int thm2_max_n = 8;
  int prop_max_n = 8;
  int prop_max_p = 3;
  int laguerre_max_n = 8;
  int bern_max_n = 8;
  int closed_max_np = 6;
  std::vector<std::string> suites;  // empty means all

  static SuiteConfig parse_text(const std::string& text);
  static SuiteConfig load_file(const std::string& path);
};

// Orthogonality of the triangle built from (a; b) against the triangle built
// from its inverse pair: Kronecker double sums for all 0 <= j <= n <= max_n
// plus transform round trips on seeded random vectors.
IdentityReport verify_theorem1(const SequenceFamily& a, const SequenceFamily& b, int r,
                               int max_n, unsigned long seed);

// The pair of inverse summation formulas connecting P_n^{(alpha)}(x, y) with
// the shifted-index diagonal P_k^{(k+1+alpha)}, in both directions, plus the
// substitution step used to derive them.
IdentityReport verify_theorem2(const Rational& alpha, const Rational& x, const Rational& y,
                               const SequenceFamily& a, const SequenceFamily& b, int r,
                               int max_n);

// Inverse relations for A = (1-t)^beta - 1, B = (1-t)^alpha. The series-level
// construction is the ground truth; the named factorial sequences are checked
// against it and the sign findings are recorded in the notes.
IdentityReport verify_corollary_beta(const Rational& alpha, const Rational& beta, int r,
                                     int max_n);

// B = A + 1 (the shifted family): the inverse pair's b-role collapses to the
// signed factorial sequence.
IdentityReport verify_corollary_shift(const SequenceFamily& a, int r, int max_n);

// Convolution and reflection identities of the two-parameter Laguerre-like
// family, one parameter tuple per call.
IdentityReport verify_laguerre(const Rational& alpha, const Rational& beta, const Rational& x,
                               const Rational& y, int max_n);

// Derivative-at-zero expansions of (t/A)^p B^{r-s} and (t/A)^p B^r (A')^{-s}
// as double sums over the two triangles.
IdentityReport verify_proposition1(const SequenceFamily& a, const SequenceFamily& b, int p,
                                   int r, int s, int max_n);
IdentityReport verify_proposition2(const SequenceFamily& a, const SequenceFamily& b, int p,
                                   int r, int s, int max_n);

// All identities over their default grids, one aggregated report per
// identity id, emitted in a fixed order. config.suites restricts the run.
std::vector<IdentityReport> run_full_suite(const SuiteConfig& config);

// Group name (or exact report id) -> report ids, as used by config.suites.
std::vector<std::string> suite_report_ids(const std::string& group);

// Deterministic random explicit family pairs (32 entries each, leading
// entries nonzero) used in the verification grids.
std::vector<std::pair<SequenceFamily, SequenceFamily>> random_family_pairs(unsigned long seed,
                                                                           int count);

// P_k^{(k+1+alpha)}(x, y | spec) for k = 0..max_n via one base series and
// repeated multiplication by t/A.
std::vector<Rational> p_diagonal(const Rational& alpha, const Rational& x, const Rational& y,
                                 const FamilySpec& spec, int max_n);

// P_k^{(alpha)}(x, y | spec) for k = 0..max_n read off a single series.
std::vector<Rational> p_vector(const Rational& alpha, const Rational& x, const Rational& y,
                               const FamilySpec& spec, int max_n);

// [t^j] (1-t)^alpha exp(x ((1-t)^beta - 1)) for j = 0..max_n.
std::vector<Rational> laguerre_row(const Rational& alpha, const Rational& beta,
                                   const Rational& x, int max_n);

}  // namespace rbellkit
