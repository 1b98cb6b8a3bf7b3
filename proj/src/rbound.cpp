#include "rblab/rbound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rblab/errors.hpp"
#include "rblab/parallel.hpp"
#include "rblab/random.hpp"

namespace rblab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_family(const OperatorFamily& family) {
  if (family.operators.empty()) throw InvalidParameter("family: no operators");
  for (const auto& m : family.operators) {
    if (m.rows != family.codomain.dim || m.cols != family.domain.dim)
      throw DimensionError("family: matrix shape does not match domain/codomain");
  }
}

void validate_assignment(const OperatorFamily& family, const Assignment& a) {
  if (a.operator_indices.size() != a.vectors.size())
    throw DimensionError("assignment: index/vector count mismatch");
  if (a.operator_indices.empty()) throw DegenerateInput("assignment: empty");
  for (int k : a.operator_indices)
    if (k < 0 || k >= static_cast<int>(family.operators.size()))
      throw InvalidParameter("assignment: operator index out of range");
  bool any_nonzero = false;
  for (const auto& x : a.vectors) {
    if (!spaces_equal(x.space, family.domain))
      throw DimensionError("assignment: vector space does not match family domain");
    for (double c : x.coords)
      if (c != 0.0) any_nonzero = true;
  }
  if (!any_nonzero) throw DegenerateInput("assignment: all vectors zero");
}

double ratio_unchecked(const OperatorFamily& family, const std::vector<int>& idx,
                       const std::vector<std::vector<double>>& coords, const RandomConfig& cfg) {
  const int n = static_cast<int>(idx.size());
  std::vector<Vector> xs, ys;
  xs.reserve(n);
  ys.reserve(n);
  for (int k = 0; k < n; ++k) {
    xs.push_back(Vector{family.domain, coords[k]});
    ys.push_back(Vector{family.codomain, matvec(family.operators[idx[k]], coords[k])});
  }
  double den = rademacher_moment(xs, 2.0, cfg).value;
  if (den == 0.0) return 0.0;
  return rademacher_moment(ys, 2.0, cfg).value / den;
}

struct Candidate {
  double value = -1.0;
  std::vector<int> idx;
  std::vector<std::vector<double>> coords;
  std::int64_t evals = 0;
};

void take_better(Candidate& best, const Candidate& cand) {
  best.evals += cand.evals;
  if (cand.value > best.value) {
    best.value = cand.value;
    best.idx = cand.idx;
    best.coords = cand.coords;
  }
}

std::vector<double> random_unit(int dim, Rng& rng) {
  std::vector<double> v(static_cast<std::size_t>(dim));
  double nrm = 0.0;
  do {
    nrm = 0.0;
    for (double& c : v) {
      c = rng.normal();
      nrm += c * c;
    }
    nrm = std::sqrt(nrm);
  } while (nrm < 1e-12);
  for (double& c : v) c /= nrm;
  return v;
}

// Deterministic N=1 probes: every operator against every basis direction and
// a few seeded random unit vectors. Included by all strategies.
Candidate singleton_probes(const OperatorFamily& family, const RandomConfig& cfg) {
  Candidate best;
  const int dim = family.domain.dim;
  const int ops = static_cast<int>(family.operators.size());
  for (int k = 0; k < ops; ++k) {
    for (int i = 0; i < dim; ++i) {
      std::vector<std::vector<double>> c{basis_vector(family.domain, i).coords};
      std::vector<int> idx{k};
      Candidate cand{ratio_unchecked(family, idx, c, cfg), idx, c, 1};
      take_better(best, cand);
    }
    Rng rng(derive_seed(cfg.seed, 0x5e0a0000u + static_cast<std::uint64_t>(k)));
    for (int t = 0; t < 4; ++t) {
      std::vector<std::vector<double>> c{random_unit(dim, rng)};
      std::vector<int> idx{k};
      Candidate cand{ratio_unchecked(family, idx, c, cfg), idx, c, 1};
      take_better(best, cand);
    }
  }
  return best;
}

double l2norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

// Greedy index re-picks plus perturbation/rescale moves on each vector.
// Step starts at 0.1 and halves on failure (per vector). Mutates cand.
void coordinate_ascent_refine(const OperatorFamily& family, Candidate& cand, Rng& rng,
                              const RandomConfig& cfg, int sweeps, bool indices_fixed) {
  const int n = static_cast<int>(cand.idx.size());
  const int ops = static_cast<int>(family.operators.size());
  const bool hilbert = family.domain.exponent == 2.0 && family.codomain.exponent == 2.0 &&
                       family.domain.weights.empty() && family.codomain.weights.empty();
  std::vector<double> step(static_cast<std::size_t>(n), 0.1);
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    bool improved = false;
    if (!indices_fixed && ops > 1) {
      for (int slot = 0; slot < n; ++slot) {
        int cur = cand.idx[slot];
        for (int k = 0; k < ops; ++k) {
          if (k == cur) continue;
          std::vector<int> idx = cand.idx;
          idx[slot] = k;
          double r = ratio_unchecked(family, idx, cand.coords, cfg);
          ++cand.evals;
          if (r > cand.value) {
            cand.value = r;
            cand.idx = idx;
            improved = true;
          }
        }
      }
    }
    for (int slot = 0; slot < n; ++slot) {
      auto& x = cand.coords[slot];
      double xn = l2norm(x);
      if (xn < 1e-300) continue;
      bool slot_improved = false;
      // direction move, renormalized to keep ||x|| fixed
      {
        auto dir = random_unit(static_cast<int>(x.size()), rng);
        auto trial = cand.coords;
        for (std::size_t i = 0; i < x.size(); ++i) trial[slot][i] = x[i] + step[slot] * xn * dir[i];
        double tn = l2norm(trial[slot]);
        if (tn > 1e-300) {
          for (double& c : trial[slot]) c *= xn / tn;
          double r = ratio_unchecked(family, cand.idx, trial, cfg);
          ++cand.evals;
          if (r > cand.value) {
            cand.value = r;
            cand.coords = trial;
            slot_improved = true;
          }
        }
      }
      // scale moves
      for (double fac : {1.0 + step[slot], 1.0 / (1.0 + step[slot])}) {
        auto trial = cand.coords;
        for (double& c : trial[slot]) c *= fac;
        double r = ratio_unchecked(family, cand.idx, trial, cfg);
        ++cand.evals;
        if (r > cand.value) {
          cand.value = r;
          cand.coords = trial;
          slot_improved = true;
        }
      }
      // power-iteration style probe; exact-direction candidate in the
      // Hilbert case, a harmless extra candidate otherwise
      if (hilbert) {
        const Matrix& m = family.operators[cand.idx[slot]];
        auto y = matvec(m, cand.coords[slot]);
        auto z = matvec(transpose(m), y);
        double zn = l2norm(z);
        if (zn > 1e-300) {
          auto trial = cand.coords;
          double cn = l2norm(cand.coords[slot]);
          for (std::size_t i = 0; i < z.size(); ++i) trial[slot][i] = z[i] * (cn / zn);
          double r = ratio_unchecked(family, cand.idx, trial, cfg);
          ++cand.evals;
          if (r > cand.value) {
            cand.value = r;
            cand.coords = trial;
            slot_improved = true;
          }
        }
      }
      if (slot_improved) {
        improved = true;
      } else {
        step[slot] *= 0.5;
      }
    }
    if (!improved) {
      bool all_small = true;
      for (double s : step)
        if (s > 1e-7) all_small = false;
      if (all_small) break;
    }
  }
}

Candidate random_assignment(const OperatorFamily& family, int N, Rng& rng,
                            const RandomConfig& cfg) {
  Candidate cand;
  cand.idx.resize(static_cast<std::size_t>(N));
  cand.coords.resize(static_cast<std::size_t>(N));
  const int ops = static_cast<int>(family.operators.size());
  for (int k = 0; k < N; ++k) {
    cand.idx[k] = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(ops)));
    cand.coords[k] = random_unit(family.domain.dim, rng);
  }
  cand.value = ratio_unchecked(family, cand.idx, cand.coords, cfg);
  cand.evals = 1;
  return cand;
}

}  // namespace

double rbound_ratio(const OperatorFamily& family, const Assignment& a, const RandomConfig& cfg) {
  validate_family(family);
  validate_assignment(family, a);
  std::vector<std::vector<double>> coords;
  coords.reserve(a.vectors.size());
  for (const auto& v : a.vectors) coords.push_back(v.coords);
  return ratio_unchecked(family, a.operator_indices, coords, cfg);
}

RBoundEstimate rbound_lower(const OperatorFamily& family, int N, const RandomConfig& cfg,
                            SearchStrategy strategy) {
  validate_family(family);
  if (N < 1) throw InvalidParameter("rbound_lower: N must be >= 1");
  const int ops = static_cast<int>(family.operators.size());

  Candidate best = singleton_probes(family, cfg);

  if (strategy == SearchStrategy::random) {
    const std::int64_t budget = cfg.samples;
    const std::int64_t block = 4096;
    std::vector<Candidate> draws;
    for (std::int64_t base = 0; base < budget; base += block) {
      const int count = static_cast<int>(std::min(block, budget - base));
      draws.assign(static_cast<std::size_t>(count), Candidate{});
      parallel_for(count, [&](int i) {
        Rng rng(derive_seed(cfg.seed,
                            0xA11D0000u + static_cast<std::uint64_t>(base + i)));
        draws[static_cast<std::size_t>(i)] = random_assignment(family, N, rng, cfg);
      });
      for (const auto& d : draws) take_better(best, d);
    }
  } else if (strategy == SearchStrategy::coordinate_ascent) {
    const int restarts = cfg.restarts < 1 ? 1 : cfg.restarts;
    std::vector<Candidate> results(static_cast<std::size_t>(restarts));
    parallel_for(restarts, [&](int r) {
      Rng rng(derive_seed(cfg.seed, 0xCA5C0000u + static_cast<std::uint64_t>(r)));
      Candidate cand;
      if (r == 0) {
        // start restart 0 from the best singleton probe, padded to length N
        Candidate probe = singleton_probes(family, cfg);
        cand.idx.assign(static_cast<std::size_t>(N), probe.idx[0]);
        cand.coords.assign(static_cast<std::size_t>(N), probe.coords[0]);
        // perturb duplicates so moves can separate them
        for (int k = 1; k < N; ++k) {
          auto dir = random_unit(family.domain.dim, rng);
          for (std::size_t i = 0; i < cand.coords[k].size(); ++i)
            cand.coords[k][i] += 0.01 * dir[i];
        }
        cand.value = ratio_unchecked(family, cand.idx, cand.coords, cfg);
        cand.evals = 1;
      } else {
        cand = random_assignment(family, N, rng, cfg);
      }
      coordinate_ascent_refine(family, cand, rng, cfg, 200, false);
      results[static_cast<std::size_t>(r)] = cand;
    });
    for (const auto& r : results) take_better(best, r);
  } else {  // exhaustive_small
    double tuples = std::pow(static_cast<double>(ops), N);
    if (static_cast<double>(N) * tuples > 1e5)
      throw InvalidParameter("rbound_lower: exhaustive_small needs N*|family|^N <= 1e5");
    const std::int64_t count = static_cast<std::int64_t>(tuples);
    std::vector<Candidate> results(static_cast<std::size_t>(count));
    parallel_for(static_cast<int>(count), [&](int t) {
      std::vector<int> idx(static_cast<std::size_t>(N));
      int rem = t;
      for (int k = 0; k < N; ++k) {
        idx[k] = rem % ops;
        rem /= ops;
      }
      Rng rng(derive_seed(cfg.seed, 0xE40A0000u + static_cast<std::uint64_t>(t)));
      Candidate cand;
      cand.idx = idx;
      cand.coords.resize(static_cast<std::size_t>(N));
      for (int k = 0; k < N; ++k) cand.coords[k] = random_unit(family.domain.dim, rng);
      cand.value = ratio_unchecked(family, cand.idx, cand.coords, cfg);
      cand.evals = 1;
      coordinate_ascent_refine(family, cand, rng, cfg, 50, true);
      results[static_cast<std::size_t>(t)] = cand;
    });
    for (const auto& r : results) take_better(best, r);
  }

  RBoundEstimate out;
  out.lower_bound = best.value;
  out.strategy = strategy;
  out.ratio_evals = best.evals;
  out.witness.operator_indices = best.idx;
  for (const auto& c : best.coords) out.witness.vectors.push_back(Vector{family.domain, c});
  return out;
}

double uniform_norm_lower(const OperatorFamily& family, const RandomConfig& cfg) {
  validate_family(family);
  const NormedSpace& X = family.domain;
  const NormedSpace& Y = family.codomain;
  double best = 0.0;
  for (std::size_t k = 0; k < family.operators.size(); ++k) {
    const Matrix& m = family.operators[k];
    // exact branches
    if (X.exponent == 2.0 && Y.exponent == 2.0) {
      // weighted singular value: scale rows by sqrt(wY), columns by 1/sqrt(wX)
      Matrix scaled = m;
      for (int r = 0; r < m.rows; ++r) {
        double wy = Y.weights.empty() ? 1.0 : Y.weights[static_cast<std::size_t>(r)];
        for (int c = 0; c < m.cols; ++c) {
          double wx = X.weights.empty() ? 1.0 : X.weights[static_cast<std::size_t>(c)];
          scaled.at(r, c) = m.at(r, c) * std::sqrt(wy) / std::sqrt(wx);
        }
      }
      best = std::max(best, sigma_max(scaled));
      continue;
    }
    if (is_diagonal(m) && X.exponent == Y.exponent && X.exponent != kInf) {
      double mx = 0.0;
      int d = std::min(m.rows, m.cols);
      for (int i = 0; i < d; ++i) {
        double wx = X.weights.empty() ? 1.0 : X.weights[static_cast<std::size_t>(i)];
        double wy = Y.weights.empty() ? 1.0 : Y.weights[static_cast<std::size_t>(i)];
        mx = std::max(mx, std::fabs(m.at(i, i)) * std::pow(wy / wx, 1.0 / X.exponent));
      }
      best = std::max(best, mx);
      continue;
    }
    // basis directions are exact for p = 1 domains and a sound probe otherwise
    double cand = 0.0;
    for (int i = 0; i < X.dim; ++i) {
      Vector e = basis_vector(X, i);
      cand = std::max(cand, vector_norm(Y, matvec(m, e.coords)) / vector_norm(e));
    }
    Rng rng(derive_seed(cfg.seed, 0x0b0e0000u + static_cast<std::uint64_t>(k)));
    std::vector<double> x = random_unit(X.dim, rng);
    double xr = vector_norm(X, x);
    double r0 = vector_norm(Y, matvec(m, x)) / xr;
    cand = std::max(cand, r0);
    // short multiplicative ascent on the best random start
    double step = 0.25;
    double cur = r0;
    for (int it = 0; it < 400 && step > 1e-6; ++it) {
      auto dir = random_unit(X.dim, rng);
      auto trial = x;
      for (int i = 0; i < X.dim; ++i) trial[i] += step * dir[i];
      double tn = vector_norm(X, trial);
      if (tn < 1e-300) {
        step *= 0.5;
        continue;
      }
      double r = vector_norm(Y, matvec(m, trial)) / tn;
      if (r > cur) {
        cur = r;
        x = trial;
      } else {
        step *= 0.75;
      }
    }
    best = std::max(best, std::max(cand, cur));
  }
  return best;
}

OperatorFamily adjoint_family(const OperatorFamily& family) {
  validate_family(family);
  OperatorFamily out;
  out.domain = dual_space(family.codomain);
  out.codomain = dual_space(family.domain);
  out.operators.reserve(family.operators.size());
  for (const auto& m : family.operators) out.operators.push_back(transpose(m));
  return out;
}

double hilbert_rbound_cap(const OperatorFamily& family) {
  validate_family(family);
  if (family.domain.exponent != 2.0 || family.codomain.exponent != 2.0)
    throw InvalidParameter("hilbert_rbound_cap: both exponents must be 2");
  double cap = 0.0;
  for (const auto& m : family.operators) {
    Matrix scaled = m;
    for (int r = 0; r < m.rows; ++r) {
      double wy = family.codomain.weights.empty() ? 1.0
                                                  : family.codomain.weights[static_cast<std::size_t>(r)];
      for (int c = 0; c < m.cols; ++c) {
        double wx =
            family.domain.weights.empty() ? 1.0 : family.domain.weights[static_cast<std::size_t>(c)];
        scaled.at(r, c) = m.at(r, c) * std::sqrt(wy) / std::sqrt(wx);
      }
    }
    cap = std::max(cap, sigma_max(scaled));
  }
  return cap;
}

double operator_norm_upper(const Matrix& m, const NormedSpace& domain, const NormedSpace& codomain) {
  // ||Tx|| <= sum_j |x_j| ||col_j|| <= ||x||_p ||(||col_j||/w_j^{1/p})||_{p'}
  // (weights folded in so that the bound is sound for weighted domains)
  std::vector<double> colnorms(static_cast<std::size_t>(m.cols));
  for (int j = 0; j < m.cols; ++j) {
    std::vector<double> col(static_cast<std::size_t>(m.rows));
    for (int r = 0; r < m.rows; ++r) col[static_cast<std::size_t>(r)] = m.at(r, j);
    double wj = domain.weights.empty() ? 1.0 : domain.weights[static_cast<std::size_t>(j)];
    colnorms[static_cast<std::size_t>(j)] =
        vector_norm(codomain, col) / std::pow(wj, 1.0 / domain.exponent);
  }
  double p = domain.exponent;
  if (p == 1.0) {
    double mx = 0.0;
    for (double c : colnorms) mx = std::max(mx, c);
    return mx;
  }
  if (p == kInf) {
    double s = 0.0;
    for (double c : colnorms) s += c;
    return s;
  }
  double pd = p / (p - 1.0);
  double acc = 0.0;
  for (double c : colnorms) acc += std::pow(c, pd);
  return std::pow(acc, 1.0 / pd);
}

}  // namespace rblab
