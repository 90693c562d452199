#include "stylo/stats.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "stylo/error.h"

namespace stylo {
namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kExactCellLimit = std::uint64_t{1} << 31;

}  // namespace

double chi_squared_2x2(const Contingency2x2& t) {
  const std::uint64_t row1 = t.a + t.b, row2 = t.c + t.d;
  const std::uint64_t col1 = t.a + t.c, col2 = t.b + t.d;
  if (row1 == 0 || row2 == 0 || col1 == 0 || col2 == 0) {
    throw AnalysisError("chi-squared undefined: contingency table has a zero margin");
  }
  const std::uint64_t n = t.total();
  if (std::max({t.a, t.b, t.c, t.d}) < kExactCellLimit) {
    // Integer numerator and denominator keep the value exactly invariant
    // under any reordering of the table.
    const std::uint64_t ad = t.a * t.d, bc = t.b * t.c;
    const u128 diff = ad > bc ? ad - bc : bc - ad;
    const u128 numerator = u128{n} * diff * diff;
    const u128 denominator = u128{row1} * row2 * col1 * col2;
    return static_cast<double>(static_cast<long double>(numerator) /
                               static_cast<long double>(denominator));
  }
  const long double diff = static_cast<long double>(t.a) * t.d -
                           static_cast<long double>(t.b) * t.c;
  const long double denominator = static_cast<long double>(row1) * row2 *
                                  static_cast<long double>(col1) * col2;
  return static_cast<double>(static_cast<long double>(n) * diff * diff / denominator);
}

double mann_whitney_exact_cdf(std::size_t n1, std::size_t n2, double u) {
  if (u < 0) return 0.0;
  const std::size_t max_u = n1 * n2;
  // counts[j][k]: arrangements of i first-sample and j second-sample items
  // with U = k, built up over i.
  std::vector<std::vector<double>> counts(n2 + 1, std::vector<double>{1.0});
  for (std::size_t i = 1; i <= n1; ++i) {
    std::vector<std::vector<double>> next(n2 + 1);
    next[0] = {1.0};
    for (std::size_t j = 1; j <= n2; ++j) {
      // Last item from the first sample (beats all j) or from the second.
      std::vector<double> row(i * j + 1, 0.0);
      const auto& with_first = counts[j];
      for (std::size_t k = 0; k < with_first.size(); ++k) row[k + j] += with_first[k];
      const auto& with_second = next[j - 1];
      for (std::size_t k = 0; k < with_second.size(); ++k) row[k] += with_second[k];
      next[j] = std::move(row);
    }
    counts = std::move(next);
  }
  const auto& dist = counts[n2];
  const double total = std::accumulate(dist.begin(), dist.end(), 0.0);
  const std::size_t limit =
      std::min(max_u, static_cast<std::size_t>(std::floor(u)));
  double below = 0.0;
  for (std::size_t k = 0; k <= limit; ++k) below += dist[k];
  return std::min(1.0, below / total);
}

RankTestResult mann_whitney_u(std::span<const double> xs,
                              std::span<const double> ys,
                              const MannWhitneyOptions& options) {
  if (xs.empty() || ys.empty()) {
    throw AnalysisError("Mann-Whitney U needs two non-empty samples");
  }
  const std::size_t n1 = xs.size(), n2 = ys.size(), n = n1 + n2;
  struct Item {
    double value;
    bool first;
  };
  std::vector<Item> items;
  items.reserve(n);
  for (double x : xs) items.push_back({x, true});
  for (double y : ys) items.push_back({y, false});
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.value < b.value; });

  double rank_sum_x = 0.0;
  double tie_term = 0.0;  // sum of t^3 - t over tie groups
  bool ties = false;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    std::size_t firsts = 0;
    while (j < n && items[j].value == items[i].value) firsts += items[j++].first;
    const double t = static_cast<double>(j - i);
    const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    rank_sum_x += midrank * static_cast<double>(firsts);
    if (j - i > 1) {
      ties = true;
      tie_term += t * t * t - t;
    }
    i = j;
  }

  RankTestResult result;
  result.n_x = n1;
  result.n_y = n2;
  const double pairs = static_cast<double>(n1) * static_cast<double>(n2);
  result.u_x = rank_sum_x - static_cast<double>(n1) * static_cast<double>(n1 + 1) / 2.0;
  result.u_statistic = std::min(result.u_x, pairs - result.u_x);

  if (!ties && n1 * n2 <= options.exact_max_product) {
    result.exact = true;
    result.p_value =
        std::min(1.0, 2.0 * mann_whitney_exact_cdf(n1, n2, result.u_statistic));
  } else {
    const double nd = static_cast<double>(n);
    const double variance =
        pairs / 12.0 * ((nd + 1.0) - tie_term / (nd * (nd - 1.0)));
    if (variance <= 0.0) {
      result.p_value = 1.0;
    } else {
      const double shift = std::max(0.0, std::abs(result.u_x - pairs / 2.0) - 0.5);
      const double z = shift / std::sqrt(variance);
      result.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
    }
  }
  result.significant = result.p_value < options.alpha;
  return result;
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw AnalysisError("KL divergence between distributions of different sizes (" +
                        std::to_string(p.size()) + " vs " + std::to_string(q.size()) + ")");
  }
  CompensatedSum sum;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(q[i] > 0.0)) {
      throw AnalysisError("KL divergence undefined: reference distribution has a "
                          "zero cell; smooth it first");
    }
    if (p[i] > 0.0) sum.add(p[i] * std::log2(p[i] / q[i]));
  }
  return std::max(0.0, sum.value());
}

double symmetrized_kl(std::span<const double> p, std::span<const double> q) {
  const double forward = kl_divergence(p, q);
  const double backward = kl_divergence(q, p);
  const double total = forward + backward;
  if (total == 0.0) return 0.0;
  return 2.0 * forward * backward / total;
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

}  // namespace stylo
