#pragma once

#include <vector>

namespace rblab {

// Finite atomic measure space: atom i has weight w_i > 0.
struct DiscreteMeasureSpace {
  std::vector<double> weights;

  double total_measure() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
  }
  int atoms() const { return static_cast<int>(weights.size()); }

  static DiscreteMeasureSpace uniform(int n, double total = 1.0);
};

// Simple function sum_i v_i 1_{atom i}.
struct StepFunction {
  DiscreteMeasureSpace space;
  std::vector<double> values;
};

// Decreasing rearrangement f* as a step profile on (0, total_measure):
// f*(s) = steps[k].value for s in [cum_{k-1}, cum_k). Values strictly
// decreasing (equal values merged), lengths positive, lengths sum to the
// total measure.
struct RearrangedProfile {
  struct Step {
    double value;
    double length;
  };
  std::vector<Step> steps;

  double total_length() const;
  // f*(s); s >= total length gives 0
  double value_at(double s) const;
};

// (sum_i w_i |v_i|^p)^{1/p}; p = infinity gives max |v_i|.
// p < 1 is rejected.
double lp_norm(const StepFunction& f, double p);

// Sorted by |value| descending, ties broken by original atom index; equal
// values merge into one step. A trailing zero-value step is kept so the
// profile covers the whole measure.
RearrangedProfile decreasing_rearrangement(const StepFunction& f);

enum class LorentzForm { rearrangement, distribution };

// Lorentz L^{p,q} norm of a step function, exact closed form on step data
// (no quadrature):
//   rearrangement, q < inf: ((p/q) sum_k v_k^q (s_k^{q/p} - s_{k-1}^{q/p}))^{1/q}
//   distribution,  q < inf: ((p/q) sum_j W_j^{q/p} (u_j^q - u_{j-1}^q))^{1/q}
//     with u_j the distinct |values| ascending and W_j = mu(|f| >= u_j)
//   q = inf (either form): weak-type sup, max_k s_k^{1/p} v_k.
// The two q < inf forms agree to 1e-10 on all step data (identical sums after
// Abel summation). p = inf is only allowed with q = inf (gives the sup norm);
// p or q below 1 is rejected.
double lorentz_norm(const StepFunction& f, double p, double q,
                    LorentzForm form = LorentzForm::rearrangement);

}  // namespace rblab
