// P-value data model and the step processes derived from it.
//
// R(t) = #{i : p_i <= t} is the rejection count at threshold t, and
// L(t) = t / max{R(t), 1} is the scaled inverse rejection process. Both are
// right-continuous step/piecewise-linear processes whose breakpoints are the
// distinct p-values; L can only jump downward.

#pragma once

#include <string>
#include <vector>

namespace sfdr {

// Raw p-values, validated to lie in [0,1]. Order and duplicates are preserved.
struct PValueSample {
  std::vector<double> values;

  int m() const { return static_cast<int>(values.size()); }
};

// Validates raw values; throws std::invalid_argument naming the first offending
// index and value, or complaining about empty input.
PValueSample validate_sample(std::vector<double> raw);

// Order statistics of a sample with ties collapsed into multiplicities:
//   distinct: p_(1) < ... < p_(n)
//   mult:     n_i   = multiplicity of p_(i)
//   cum:      T_j   = n_1 + ... + n_j  (so T_n = m)
// plus the sentinels p_(0) = 0 and p_(n+1) = max{p_(n), 1}.
struct OrderedSummary {
  std::vector<double> source;  // original values, kept for index-level decisions
  std::vector<double> distinct;
  std::vector<int> mult;
  std::vector<int> cum;
  double p0 = 0.0;
  double pnp1 = 1.0;

  int m() const { return cum.empty() ? 0 : cum.back(); }
  int n() const { return static_cast<int>(distinct.size()); }
};

OrderedSummary order_summary(const PValueSample& sample);

// R(t): 0 on [0, p_(1)), T_j on [p_(j), p_(j+1)), m on [p_(n), p_(n+1)].
// Right-continuous. Throws if t is outside [0,1].
int rejection_count(const OrderedSummary& summary, double t);

// L(t) = t / max{R(t), 1}: t on [0, p_(1)), t/T_j on [p_(j), p_(j+1)),
// t/m on [p_(n), p_(n+1)]. Right-continuous, strictly increasing within each
// interval. Throws if t is outside [0,1].
double scaled_inverse_rejection(const OrderedSummary& summary, double t);

struct Jump {
  double location;  // p_(i)
  double size;      // L(p_(i)-) - L(p_(i)), >= 0; 0 only possible at p_(1)
};

// One entry per distinct p-value. For i >= 2 the size equals the closed form
// p_(i) n_i / (R(p_(i)) [R(p_(i)) - n_i]); at i = 1 that denominator vanishes
// (R - n_1 = 0), so the entry carries the direct difference
// p_(1) (1 - 1/n_1), which is 0 when p_(1) is not tied.
std::vector<Jump> jump_sizes(const OrderedSummary& summary);

enum class StepKind { PiecewiseConstant, PiecewiseLinear };
enum class StepProcess { Rejections, ScaledInverse };

struct StepTrace {
  std::vector<double> breakpoints;  // strictly increasing, within [0, p_(n+1)]
  std::vector<double> values;       // exact process value at each breakpoint
  StepKind kind = StepKind::PiecewiseConstant;
};

// Samples the chosen process at samples_per_segment points per interval plus
// the closing endpoint; emitted values reproduce the process exactly.
StepTrace export_trace(const OrderedSummary& summary, StepProcess process,
                       int samples_per_segment);

const char* to_string(StepKind kind);

}  // namespace sfdr
