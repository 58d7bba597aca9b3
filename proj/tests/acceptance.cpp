// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <string>

#include "selfsim/error.hpp"
#include "selfsim/suites.hpp"

namespace {

struct Criterion {
  int number;
  const char* suite;
  const char* summary;
};

constexpr Criterion kCriteria[] = {
    {1, "example1", "Example 1 closed forms phi_{k,l} at depth 8"},
    {2, "example2", "Example 2 identities, restriction and membership at depth 10"},
    {3, "example3", "Example 3 conjugators agree at depth 10"},
    {4, "dmj", "D_m(j): relator, closure size, relations, pro-m generators"},
    {5, "theorem8", "random power systems: abelian, annihilated, peel round trip"},
    {6, "oracle", "level_perm_fast equals portrait level permutations, l <= 6"},
    {7, "quotient", "quotient normal form: idempotent, homomorphic, binary expansions"},
    {8, "congruence", "congruence exponent witnesses and AllDivisible"},
    {9, "prop3", "transversal change conjugation identity at depth 8"},
    {10, "gap", "zeta(z beta) = zeta(beta) = j on Stab(1) samples"},
    {11, "exponent", "torsion exponent equals lcm(m1, m2)"},
};

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string status, detail;
    try {
      const auto r = selfsim::suites::run_suite(c.suite);
      status = r.passed() ? "PASS" : "FAIL";
      detail = std::to_string(r.checks.size() - r.failures()) + "/" + std::to_string(r.checks.size()) + " checks";
      for (const auto& chk : r.checks) {
        if (!chk.pass) {
          detail += "; first failure: " + chk.name + (chk.detail.empty() ? "" : " (" + chk.detail + ")");
          break;
        }
      }
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (status != "PASS") ++failed;
    std::printf("[%s] criterion %2d  %-62s %s, %.2fs\n", status.c_str(), c.number, c.summary, detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(kCriteria)) - failed, std::size(kCriteria));
  return failed == 0 ? 0 : 1;
}
