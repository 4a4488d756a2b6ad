#pragma once

#include "labcount/numeric.hpp"

#include <optional>
#include <vector>

namespace labcount {

/// Quasi-polynomial with exact rational constituents. constituents[j] governs
/// arguments congruent to j mod period and is stored low degree first,
/// trimmed, with an identically-zero constituent kept as the single
/// coefficient 0. Evaluation is exact at any integer; the constituent is
/// selected by the nonnegative residue of the argument.
struct QuasiPolynomial {
  int period = 1;
  std::vector<std::vector<Rat>> constituents;
  long long valid_from = 0;

  Rat evaluate(long long t) const;
  int degree() const;  // max constituent degree; 0 for the zero quasi-polynomial
  bool is_zero() const;
};

/// Exact interpolation of each residue class on d+1 samples, validated on
/// every remaining sample with argument >= offset. Requires d+2 samples per
/// class (usage_error otherwise); returns nothing on any validation mismatch.
std::optional<QuasiPolynomial> fit_fixed(const std::vector<Int>& sequence, int period,
                                         int degree, long long offset);

struct FitReport {
  enum class Status { found, inconclusive, no_fit };
  Status status = Status::inconclusive;
  int period = 0;
  int degree = 0;
  long long offset = 0;
  std::optional<QuasiPolynomial> qp;
};

/// Scans (period, degree, offset) in lexicographic order, period first, and
/// returns the first candidate fit_fixed accepts. Candidates without enough
/// validation data are skipped; if nothing fits, the report says whether some
/// candidate was untestable (inconclusive) or all testable ones failed.
FitReport detect_minimal(const std::vector<Int>& sequence, int max_period,
                         int degree_bound, long long max_offset);

/// Rational generating function sum f(k) z^k = numerator / prod (1 - z^f).
/// Period <= 2 fits use the minimal (1-z)^a (1-z^2)^b denominator; larger
/// periods use (1-z^p)^(degree+1).
struct GeneratingFunctionForm {
  std::vector<Int> numerator;  // ascending powers of z
  std::vector<int> factors;    // one entry f per factor (1 - z^f)

  bool is_ab_form() const;
  int a() const;  // multiplicity of (1 - z)
  int b() const;  // multiplicity of (1 - z^2)
};

/// Requires valid_from == 0 and integer values on all of Z>=0.
GeneratingFunctionForm to_generating_function(const QuasiPolynomial& qp);

/// Formal power-series expansion of the form, first `terms` coefficients.
std::vector<Int> expand_series(const GeneratingFunctionForm& gf, int terms);

}  // namespace labcount
