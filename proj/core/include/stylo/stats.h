#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace stylo {

// a: in-category with word, b: in-category without,
// c: out-of-category with word, d: out-of-category without.
struct Contingency2x2 {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t d = 0;

  std::uint64_t total() const { return a + b + c + d; }
};

// Pearson chi-squared without continuity correction,
// N (ad - bc)^2 / ((a+b)(c+d)(a+c)(b+d)). Throws AnalysisError if any
// margin is zero.
double chi_squared_2x2(const Contingency2x2& t);

struct MannWhitneyOptions {
  double alpha = 0.05;
  // Exact null distribution is used when there are no ties and
  // n1 * n2 <= this; otherwise the tie-corrected normal approximation.
  std::size_t exact_max_product = 400;
};

struct RankTestResult {
  double u_statistic = 0.0;  // min(U_x, U_y)
  double u_x = 0.0;          // pairs with x > y, ties counted 1/2
  double p_value = 1.0;      // two-sided
  bool significant = false;  // p_value < alpha
  bool exact = false;
  std::size_t n_x = 0;
  std::size_t n_y = 0;

  // Only meaningful when significant.
  bool x_higher() const { return 2.0 * u_x > double(n_x) * double(n_y); }
};

// Throws AnalysisError if either sample is empty.
RankTestResult mann_whitney_u(std::span<const double> xs,
                              std::span<const double> ys,
                              const MannWhitneyOptions& options = {});

// P(U <= u) under the no-ties null for sample sizes n1, n2, by counting
// arrangements. u may be fractional; it is floored.
double mann_whitney_exact_cdf(std::size_t n1, std::size_t n2, double u);

// Directed divergence sum_i p_i log2(p_i / q_i) in bits, with 0 log 0 = 0.
// Throws AnalysisError on size mismatch or any q_i <= 0.
double kl_divergence(std::span<const double> p, std::span<const double> q);

// Harmonic mean of the two directed divergences; 0 when both are 0.
double symmetrized_kl(std::span<const double> p, std::span<const double> q);

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace stylo
