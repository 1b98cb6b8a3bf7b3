#include "rblab/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rblab/errors.hpp"
#include "rblab/random.hpp"

namespace rblab {

void GammaOperator::validate() const {
  if (h_dim < 1) throw InvalidParameter("gamma operator: h_dim must be >= 1");
  if (matrix.rows != codomain.dim || matrix.cols != h_dim)
    throw DimensionError("gamma operator: matrix shape must be codomain.dim x h_dim");
}

MomentEstimate gamma_norm(const GammaOperator& psi, const RandomConfig& cfg) {
  psi.validate();
  // columns of the matrix are the images of the coordinate basis of H
  std::vector<Vector> cols;
  cols.reserve(static_cast<std::size_t>(psi.h_dim));
  for (int k = 0; k < psi.h_dim; ++k) {
    std::vector<double> c(static_cast<std::size_t>(psi.codomain.dim));
    for (int r = 0; r < psi.codomain.dim; ++r) c[static_cast<std::size_t>(r)] = psi.matrix.at(r, k);
    cols.push_back(Vector{psi.codomain, std::move(c)});
  }
  return gaussian_moment(cols, 2.0, cfg);
}

namespace {

double gamma_norm_of_flat(const std::vector<double>& flat, const NormedSpace& codomain, int h_dim,
                          const RandomConfig& cfg) {
  GammaOperator psi;
  psi.matrix = Matrix{codomain.dim, h_dim, flat};
  psi.codomain = codomain;
  psi.h_dim = h_dim;
  return gamma_norm(psi, cfg).value;
}

}  // namespace

GammaMultiplierReport verify_gamma_multiplier(const std::vector<GammaOperator>& psis,
                                              const std::vector<Vector>& fs,
                                              const RandomConfig& cfg) {
  if (psis.size() != fs.size()) throw DimensionError("gamma multiplier: Psi/f count mismatch");
  if (psis.empty()) throw DegenerateInput("gamma multiplier: empty system");
  const NormedSpace& codomain = psis.front().codomain;
  const int h_dim = psis.front().h_dim;
  for (const auto& p : psis) {
    p.validate();
    if (!spaces_equal(p.codomain, codomain) || p.h_dim != h_dim)
      throw DimensionError("gamma multiplier: operators must share domain and codomain");
  }
  NormedSpace hspace = NormedSpace::lp(h_dim, 2.0);
  for (const auto& f : fs)
    if (static_cast<int>(f.coords.size()) != h_dim)
      throw DimensionError("gamma multiplier: f does not live in H");

  GammaMultiplierReport rep;
  rep.n = static_cast<int>(psis.size());

  // lhs: Rademacher moment of the vectors Psi_n f_n in the codomain
  std::vector<Vector> ys;
  ys.reserve(psis.size());
  for (std::size_t i = 0; i < psis.size(); ++i)
    ys.push_back(Vector{codomain, matvec(psis[i].matrix, fs[i].coords)});
  rep.lhs = rademacher_moment(ys, 2.0, cfg).value;

  for (const auto& f : fs) rep.sup_f = std::max(rep.sup_f, vector_norm(Vector{hspace, f.coords}));

  // gamma factor: E over sign patterns of ||sum eps_n Psi_n||_gamma^2, outer
  // enumeration exact for small n, Monte Carlo beyond the threshold
  const int n = rep.n;
  std::vector<std::vector<double>> flats;
  flats.reserve(psis.size());
  for (const auto& p : psis) flats.push_back(p.matrix.a);
  const int flat_dim = codomain.dim * h_dim;
  double acc = 0.0;
  if (n <= cfg.exact_threshold) {
    std::int64_t count = 0;
    std::int64_t inner = 0;
    for_each_sign_pattern(flats, flat_dim, [&](const std::vector<double>& sum) {
      RandomConfig inner_cfg = cfg;
      inner_cfg.seed = derive_seed(cfg.seed, 0x3A77A000u + static_cast<std::uint64_t>(inner++));
      double g = gamma_norm_of_flat(sum, codomain, h_dim, inner_cfg);
      acc += g * g;
      ++count;
    });
    rep.gamma_factor = std::sqrt(acc / static_cast<double>(count));
  } else {
    Rng rng(derive_seed(cfg.seed, 0x3A77B000u));
    std::vector<double> sum(static_cast<std::size_t>(flat_dim));
    for (std::int64_t s = 0; s < cfg.samples; ++s) {
      std::fill(sum.begin(), sum.end(), 0.0);
      for (int i = 0; i < n; ++i) {
        double e = rng.sign();
        for (int j = 0; j < flat_dim; ++j)
          sum[static_cast<std::size_t>(j)] += e * flats[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
      RandomConfig inner_cfg = cfg;
      inner_cfg.seed = derive_seed(cfg.seed, 0x3A77C000u + static_cast<std::uint64_t>(s));
      double g = gamma_norm_of_flat(sum, codomain, h_dim, inner_cfg);
      acc += g * g;
    }
    rep.gamma_factor = std::sqrt(acc / static_cast<double>(cfg.samples));
  }

  rep.rhs = rep.sup_f * rep.gamma_factor;
  if (rep.rhs == 0.0) {
    if (rep.lhs > 1e-12)
      throw std::logic_error("gamma multiplier: upper factor vanished with nonzero lower side");
    rep.ratio = 0.0;
  } else {
    rep.ratio = rep.lhs / rep.rhs;
  }
  return rep;
}

}  // namespace rblab
