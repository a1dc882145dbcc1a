#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace schubert::verify {

struct SuiteReport {
  std::string name;
  std::int64_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  void check(bool ok, const std::string& what);
};

// Self-consistency suites over S_n:
//   bijection   rc-graphs <-> increasing chains to w0, both directions
//   routes      the three skew routes agree (exhaustive for n <= 4, else 100
//               seeded random pairs)
//   corollary   I_alpha(u,w) = sum_v c^w_{u,v} I_alpha(w0 v, w0)
//   pieri       chain Pieri rule vs polynomial products; psi_alpha both ways
//   stability   x^-delta S_{w/u} unchanged in S_{n+1} and S_{n+2}
SuiteReport run_suite(std::string_view name, int n, std::uint64_t seed = 1);

// Every suite, or the single named one; "all" expands to the full list.
std::vector<SuiteReport> run_suites(std::string_view name, int n, std::uint64_t seed = 1);

const std::vector<std::string>& suite_names();

}  // namespace schubert::verify
