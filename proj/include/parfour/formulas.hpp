#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parfour/series.hpp"

namespace parfour {

enum class FormulaKind { theorem1, corollary1, andrews, theorem2_paper, theorem2_derived };

struct FormulaId {
  FormulaKind kind = FormulaKind::theorem1;
  std::optional<RestrictionSpec> spec;  // required by the theorem2 variants
};

// Accepts "theorem1", "corollary1", "andrews", "theorem2-paper", "theorem2-derived".
FormulaId make_formula_id(const std::string& name,
                          const std::optional<RestrictionSpec>& spec = std::nullopt);
std::string format_formula_id(const FormulaId& id);

// Brute-force oracles: sums of weight monomials over every partition of each
// size <= N. threads > 1 splits sizes across workers; merging is exact and
// order-independent, so results are identical for any thread count.
Series4 brute_phi(long long N, int threads = 1);
Series4 brute_psi(long long N, int threads = 1);
Series4 brute_phi_restricted(const RestrictionSpec& spec, long long N, int threads = 1);
Series3 brute_andrews(long long N, int threads = 1);

// Factor-list builders. Lists are finite: a factor is emitted only while its
// monomial grade is <= N (higher factors are the identity after truncation).
std::vector<FactorSpec4> theorem1_factors(long long N);
std::vector<FactorSpec4> corollary1_factors(long long N);
std::vector<FactorSpec3> andrews_factors(long long N);

// Literal transcription of the printed S*T product shape; exponents are
// written down, not derived. Its fidelity is settled empirically by verify.
std::vector<FactorSpec4> theorem2_paper_factors(const RestrictionSpec& spec, long long N);

// S*T assembled from block semantics: Type I denominators at lengths
// i, i+k, ...; Type II numerators at lengths i+k, i+2k, ...; the boundary
// (i,0) numerator; width-2k odd-height rectangle denominators; and rho
// removal factors. Every monomial comes from cell counting.
std::vector<FactorSpec4> theorem2_derived_factors(const RestrictionSpec& spec, long long N);

struct VerifyReport {
  std::string formula;
  long long degree = 0;
  bool pass = false;
  std::optional<std::vector<long long>> diff_e;  // first differing exponent
  std::string diff_lhs;  // expansion coefficient at diff_e (decimal)
  std::string diff_rhs;  // oracle coefficient at diff_e (decimal)
  long long elapsed_ms = 0;
};

// Expands the formula's factor list and compares against its oracle.
VerifyReport verify(const FormulaId& id, long long N, int threads = 1);

// {"formula":...,"degree":N,"pass":...,"first_diff":{...}|null,"elapsed_ms":...}
std::string report_json(const VerifyReport& r);

// Deterministic text form; elapsed time is measurement, not payload.
std::string report_text(const VerifyReport& r);

}  // namespace parfour
