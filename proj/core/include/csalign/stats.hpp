#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace csalign::stats {

/// Ranks with ties receiving the average of the ranks they occupy.
/// Ranks are 1-based.
std::vector<double> average_ranks(std::span<const double> values);

/// Pearson correlation. Throws std::invalid_argument if either sequence is
/// constant (undefined correlation) or lengths differ.
double pearson(std::span<const double> x, std::span<const double> y);

/// Spearman rank correlation: Pearson on average-ranked data.
/// Requires length >= 3 and at least two distinct values per sequence.
double spearman(std::span<const double> x, std::span<const double> y);

struct TTestResult {
  double t = 0.0;
  double df = 0.0;         // pooled: n_a + n_b - 2; drives the p-value
  double df_paired = 0.0;  // min(n_a, n_b) - 1, reported alongside
  double p = 0.0;          // two-sided
};

/// Two-sample Student's t with pooled variance.
/// Throws on samples smaller than 2 or zero pooled variance.
TTestResult t_test_independent(std::span<const double> a, std::span<const double> b);

/// One-sample t of `sample` against the fixed value mu0.
TTestResult t_test_one_sample(std::span<const double> sample, double mu0);

/// Step-down Holm-Bonferroni: decision per hypothesis, true = reject.
std::vector<bool> holm_bonferroni(std::span<const double> p_values, double alpha);

struct Envelope {
  double mean = 0.0;
  double sd = 0.0;  // sample sd (n-1 denominator), 0 for a single sample
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

Envelope envelope(std::span<const double> samples);

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

/// Lower-tail CDF of Student's t with `df` degrees of freedom.
double student_t_cdf(double t, double df);

/// Two-sided p-value for a t statistic.
double two_sided_p_from_t(double t, double df);

}  // namespace csalign::stats
