// Cross-module identity checks with rendered reports.
#pragma once

#include <string>
#include <vector>

#include "moduli/divisor.hpp"

namespace moduli {

struct CheckResult {
  std::string name;
  bool pass;
  std::string lhs;  // rendered left side
  std::string rhs;  // rendered right side
  std::string note;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// The five table identities: the four monomials covered by both source
/// tables against their common values, and the vanishing L.L.D entry.
VerifyReport verify_tables(const TrilinearForm& form);

/// t1..t7 and their sum against the displayed coefficients.
VerifyReport verify_trace();

/// The coefficient-level comparison behind c2.L:
///  (a) k^3 of d*rr equals the Yamazaki k^3 coefficient,
///  (b) k^2 of d*rr - yamazaki equals the trace k^2,
///  (c) the k^1 identity closes with c2.L = (p^2-1)(p^3+121p+60)/720.
/// With use_paper_display the k^1 coefficient of d*rr - yamazaki is
/// replaced by the printed comparison polynomial, which fails (c) by
/// (p^2-1)^2 (484 p^14 + 1200 p^13)/34560.
VerifyReport verify_star_identity(const TrilinearForm& form,
                                  bool use_paper_display = false);

/// k^1 coefficient of the closed dimension formula equals the cubic's
/// bracket coefficient plus 4p^3 + 484p + 240.
VerifyReport dim_final_consistency(const TrilinearForm& form);

/// Chern numbers, genus values and the census/count identities over a
/// prime range.
VerifyReport verify_chern(const TrilinearForm& form, long p_min = 5,
                          long p_max = 37);

/// All of the above in one report.
std::vector<VerifyReport> verify_all(const TrilinearForm& form, long p_min = 5,
                                     long p_max = 37,
                                     bool use_paper_display = false);

}  // namespace moduli
