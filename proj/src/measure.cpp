#include "rblab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rblab/errors.hpp"

namespace rblab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const StepFunction& f) {
  if (f.values.size() != f.space.weights.size())
    throw DimensionError("step function: values/weights length mismatch");
  for (double w : f.space.weights)
    if (!(w > 0.0)) throw InvalidParameter("step function: weights must be positive");
}

}  // namespace

DiscreteMeasureSpace DiscreteMeasureSpace::uniform(int n, double total) {
  if (n <= 0 || !(total > 0.0)) throw InvalidParameter("uniform space: need n >= 1, total > 0");
  return DiscreteMeasureSpace{std::vector<double>(static_cast<std::size_t>(n), total / n)};
}

double RearrangedProfile::total_length() const {
  double s = 0.0;
  for (const auto& st : steps) s += st.length;
  return s;
}

double RearrangedProfile::value_at(double s) const {
  double cum = 0.0;
  for (const auto& st : steps) {
    cum += st.length;
    if (s < cum) return st.value;
  }
  return 0.0;
}

double lp_norm(const StepFunction& f, double p) {
  validate(f);
  if (!(p >= 1.0)) throw InvalidParameter("lp_norm: p must be >= 1");
  if (p == kInf) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::fabs(v));
    return m;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    acc += f.space.weights[i] * std::pow(std::fabs(f.values[i]), p);
  return std::pow(acc, 1.0 / p);
}

RearrangedProfile decreasing_rearrangement(const StepFunction& f) {
  validate(f);
  std::vector<std::size_t> order(f.values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(f.values[a]) > std::fabs(f.values[b]);
  });
  RearrangedProfile out;
  for (std::size_t idx : order) {
    double v = std::fabs(f.values[idx]);
    double w = f.space.weights[idx];
    if (!out.steps.empty() && out.steps.back().value == v) {
      out.steps.back().length += w;
    } else {
      out.steps.push_back({v, w});
    }
  }
  return out;
}

namespace {

double lorentz_sup_form(const RearrangedProfile& prof, double p) {
  // sup_t t^{1/p} f*(t) approached at the right end of each step
  double cum = 0.0;
  double best = 0.0;
  for (const auto& st : prof.steps) {
    cum += st.length;
    if (st.value == 0.0) continue;
    double cand = (p == kInf) ? st.value : std::pow(cum, 1.0 / p) * st.value;
    best = std::max(best, cand);
  }
  return best;
}

double lorentz_rearrangement_form(const RearrangedProfile& prof, double p, double q) {
  // ((p/q) sum_k v_k^q (s_k^{q/p} - s_{k-1}^{q/p}))^{1/q}
  double e = q / p;
  double acc = 0.0;
  double prev = 0.0;
  double cum = 0.0;
  for (const auto& st : prof.steps) {
    cum += st.length;
    double cur = std::pow(cum, e);
    if (st.value > 0.0) acc += std::pow(st.value, q) * (cur - prev);
    prev = cur;
  }
  return std::pow(acc * (p / q), 1.0 / q);
}

double lorentz_distribution_form(const StepFunction& f, double p, double q) {
  // distinct |values| ascending with cumulative tail measures
  std::vector<std::pair<double, double>> vw;  // (|v|, w), sorted ascending
  vw.reserve(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i)
    vw.emplace_back(std::fabs(f.values[i]), f.space.weights[i]);
  std::sort(vw.begin(), vw.end());
  // W_j = mu(|f| >= u_j) computed back-to-front over distinct values
  double acc = 0.0;
  double tail = 0.0;
  std::size_t i = vw.size();
  double u_upper = 0.0;  // u_j for the block being closed
  // Walk distinct values from largest to smallest, accumulating
  // W^{q/p} (u_j^q - u_{j-1}^q) where u_{j-1} is the next smaller distinct
  // value (0 below the smallest).
  while (i > 0) {
    double u = vw[i - 1].first;
    double w = 0.0;
    while (i > 0 && vw[i - 1].first == u) {
      w += vw[i - 1].second;
      --i;
    }
    tail += w;
    if (u == 0.0) break;  // mu(|f| > t) for t < smallest positive value only
    u_upper = u;
    double u_lower = (i > 0) ? vw[i - 1].first : 0.0;
    acc += std::pow(tail, q / p) * (std::pow(u_upper, q) - std::pow(u_lower, q));
  }
  (void)u_upper;
  return std::pow(acc * (p / q), 1.0 / q);
}

double lorentz_distribution_sup(const StepFunction& f, double p) {
  // sup_t t mu(|f| > t)^{1/p} = max_j u_j W_j^{1/p}
  std::vector<std::pair<double, double>> vw;
  vw.reserve(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i)
    vw.emplace_back(std::fabs(f.values[i]), f.space.weights[i]);
  std::sort(vw.begin(), vw.end());
  double best = 0.0;
  double tail = 0.0;
  std::size_t i = vw.size();
  while (i > 0) {
    double u = vw[i - 1].first;
    double w = 0.0;
    while (i > 0 && vw[i - 1].first == u) {
      w += vw[i - 1].second;
      --i;
    }
    tail += w;
    if (u > 0.0) {
      double cand = (p == kInf) ? u : u * std::pow(tail, 1.0 / p);
      best = std::max(best, cand);
    }
  }
  return best;
}

}  // namespace

double lorentz_norm(const StepFunction& f, double p, double q, LorentzForm form) {
  validate(f);
  if (!(p >= 1.0)) throw InvalidParameter("lorentz_norm: p must be >= 1");
  if (!(q >= 1.0)) throw InvalidParameter("lorentz_norm: q must be >= 1");
  if (p == kInf && q != kInf)
    throw InvalidParameter("lorentz_norm: p = inf requires q = inf");
  if (q == kInf) {
    if (form == LorentzForm::rearrangement)
      return lorentz_sup_form(decreasing_rearrangement(f), p);
    return lorentz_distribution_sup(f, p);
  }
  if (form == LorentzForm::rearrangement)
    return lorentz_rearrangement_form(decreasing_rearrangement(f), p, q);
  return lorentz_distribution_form(f, p, q);
}

}  // namespace rblab
