#include "labcount/quasipoly.hpp"

#include "labcount/errors.hpp"

#include <algorithm>

namespace labcount {

namespace {

void trim(std::vector<Rat>& coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) coeffs.push_back(Rat(0));
}

Rat eval_poly(const std::vector<Rat>& coeffs, long long t) {
  Rat x(t);
  Rat acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int poly_degree(const std::vector<Rat>& coeffs) {  // -1 for the zero polynomial
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (coeffs[i] != 0) return i;
  return -1;
}

// Newton divided differences on (x_i, y_i), expanded to monomial coefficients.
std::vector<Rat> interpolate(const std::vector<long long>& xs, const std::vector<Rat>& ys) {
  const int m = static_cast<int>(xs.size());
  std::vector<Rat> dd = ys;
  for (int level = 1; level < m; ++level)
    for (int i = m - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - level]);

  std::vector<Rat> coeffs{Rat(0)};
  for (int i = m - 1; i >= 0; --i) {
    // coeffs = coeffs * (x - xs[i]) + dd[i]
    coeffs.insert(coeffs.begin(), Rat(0));
    for (std::size_t j = 0; j + 1 < coeffs.size(); ++j)
      coeffs[j] -= Rat(xs[i]) * coeffs[j + 1];
    coeffs[0] += dd[i];
  }
  trim(coeffs);
  return coeffs;
}

}  // namespace

Rat QuasiPolynomial::evaluate(long long t) const {
  long long residue = ((t % period) + period) % period;
  return eval_poly(constituents[static_cast<std::size_t>(residue)], t);
}

int QuasiPolynomial::degree() const {
  int d = 0;
  for (const auto& c : constituents) d = std::max(d, std::max(poly_degree(c), 0));
  return d;
}

bool QuasiPolynomial::is_zero() const {
  for (const auto& c : constituents)
    if (poly_degree(c) >= 0) return false;
  return true;
}

std::optional<QuasiPolynomial> fit_fixed(const std::vector<Int>& sequence, int period,
                                         int degree, long long offset) {
  if (period < 1) throw usage_error("period must be >= 1");
  if (degree < 0) throw usage_error("degree must be >= 0");
  if (offset < 0) throw usage_error("offset must be >= 0");

  const long long n = static_cast<long long>(sequence.size());
  QuasiPolynomial qp;
  qp.period = period;
  qp.valid_from = offset;
  qp.constituents.resize(static_cast<std::size_t>(period));

  for (int j = 0; j < period; ++j) {
    std::vector<long long> args;
    for (long long a = offset; a < n; ++a)
      if (a % period == j) args.push_back(a);
    if (static_cast<int>(args.size()) < degree + 2)
      throw usage_error("residue class " + std::to_string(j) + " has " +
                        std::to_string(args.size()) + " samples; need degree+2 = " +
                        std::to_string(degree + 2));

    std::vector<long long> xs(args.begin(), args.begin() + degree + 1);
    std::vector<Rat> ys;
    for (long long x : xs) ys.push_back(Rat(sequence[static_cast<std::size_t>(x)]));
    auto coeffs = interpolate(xs, ys);

    for (long long a : args)
      if (eval_poly(coeffs, a) != Rat(sequence[static_cast<std::size_t>(a)]))
        return std::nullopt;
    qp.constituents[static_cast<std::size_t>(j)] = std::move(coeffs);
  }
  return qp;
}

FitReport detect_minimal(const std::vector<Int>& sequence, int max_period,
                         int degree_bound, long long max_offset) {
  FitReport report;
  bool any_untestable = false;
  bool any_tested = false;
  const long long n = static_cast<long long>(sequence.size());

  for (int p = 1; p <= max_period; ++p) {
    for (int d = 0; d <= degree_bound; ++d) {
      for (long long k0 = 0; k0 <= max_offset; ++k0) {
        // Enough samples: every residue class needs d+2 arguments >= k0.
        bool testable = true;
        for (int j = 0; j < p && testable; ++j) {
          long long count = 0;
          for (long long a = k0; a < n; ++a)
            if (a % p == j) ++count;
          if (count < d + 2) testable = false;
        }
        if (!testable) {
          any_untestable = true;
          continue;
        }
        any_tested = true;
        if (auto qp = fit_fixed(sequence, p, d, k0)) {
          report.status = FitReport::Status::found;
          report.period = p;
          report.degree = d;
          report.offset = k0;
          report.qp = std::move(qp);
          return report;
        }
      }
    }
  }
  report.status = any_untestable || !any_tested ? FitReport::Status::inconclusive
                                                : FitReport::Status::no_fit;
  return report;
}

bool GeneratingFunctionForm::is_ab_form() const {
  return std::all_of(factors.begin(), factors.end(), [](int f) { return f == 1 || f == 2; });
}

int GeneratingFunctionForm::a() const {
  return static_cast<int>(std::count(factors.begin(), factors.end(), 1));
}

int GeneratingFunctionForm::b() const {
  return static_cast<int>(std::count(factors.begin(), factors.end(), 2));
}

GeneratingFunctionForm to_generating_function(const QuasiPolynomial& qp) {
  if (qp.valid_from != 0)
    throw usage_error("to_generating_function requires valid_from = 0");

  GeneratingFunctionForm gf;
  if (qp.is_zero()) return gf;  // 0 / (empty product)

  if (qp.period <= 2) {
    // f(k) = P(k) + (-1)^k Q(k); minimal denominator (1-z)^a (1-z^2)^b has
    // b = deg Q + 1 and a + b = deg f + 1.
    std::vector<Rat> even = qp.constituents[0];
    std::vector<Rat> odd = qp.period == 2 ? qp.constituents[1] : qp.constituents[0];
    std::size_t len = std::max(even.size(), odd.size());
    even.resize(len, Rat(0));
    odd.resize(len, Rat(0));
    std::vector<Rat> p(len), qpoly(len);
    for (std::size_t i = 0; i < len; ++i) {
      p[i] = (even[i] + odd[i]) / 2;
      qpoly[i] = (even[i] - odd[i]) / 2;
    }
    int dp = poly_degree(p), dq = poly_degree(qpoly);
    int bcount = dq + 1;
    int acount = std::max(dp, dq) + 1 - bcount;
    gf.factors.insert(gf.factors.end(), static_cast<std::size_t>(acount), 1);
    gf.factors.insert(gf.factors.end(), static_cast<std::size_t>(bcount), 2);
  } else {
    gf.factors.assign(static_cast<std::size_t>(qp.degree() + 1), qp.period);
  }

  // numerator = (sum f(k) z^k) * prod (1 - z^f), truncated; the tail beyond
  // the denominator degree must vanish, which we verify on a safety margin.
  int den_degree = 0;
  for (int f : gf.factors) den_degree += f;
  std::vector<Int> den{Int(1)};
  for (int f : gf.factors) {
    std::vector<Int> nd(den.size() + static_cast<std::size_t>(f), Int(0));
    for (std::size_t i = 0; i < den.size(); ++i) {
      nd[i] += den[i];
      nd[i + static_cast<std::size_t>(f)] -= den[i];
    }
    den = std::move(nd);
  }
  int check_terms = den_degree + qp.period * (qp.degree() + 2) + 2;
  std::vector<Rat> values;
  for (int k = 0; k < check_terms; ++k) values.push_back(qp.evaluate(k));
  for (int j = 0; j < check_terms; ++j) {
    Rat c(0);
    for (std::size_t i = 0; i < den.size() && static_cast<int>(i) <= j; ++i)
      c += Rat(den[i]) * values[static_cast<std::size_t>(j - static_cast<int>(i))];
    if (j < den_degree) {
      if (!rat_is_integer(c))
        throw usage_error("quasi-polynomial is not integer-valued; no integer numerator");
      gf.numerator.push_back(rat_numer(c));
    } else if (c != 0) {
      throw usage_error("generating function residue check failed");
    }
  }
  while (!gf.numerator.empty() && gf.numerator.back() == 0) gf.numerator.pop_back();
  return gf;
}

std::vector<Int> expand_series(const GeneratingFunctionForm& gf, int terms) {
  std::vector<Int> coeffs(static_cast<std::size_t>(terms), Int(0));
  for (std::size_t i = 0; i < gf.numerator.size() && static_cast<int>(i) < terms; ++i)
    coeffs[i] = gf.numerator[i];
  for (int f : gf.factors)  // dividing by (1 - z^f) is a strided prefix sum
    for (int j = f; j < terms; ++j)
      coeffs[static_cast<std::size_t>(j)] += coeffs[static_cast<std::size_t>(j - f)];
  return coeffs;
}

}  // namespace labcount
