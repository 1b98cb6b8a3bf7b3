#include "rblab/spaces.hpp"

#include <cmath>
#include <limits>

#include "rblab/errors.hpp"

namespace rblab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const NormedSpace& s) {
  if (s.dim <= 0) throw InvalidParameter("space: dim must be >= 1");
  if (!(s.exponent >= 1.0)) throw InvalidParameter("space: exponent must be >= 1");
  if (!s.weights.empty()) {
    if (static_cast<int>(s.weights.size()) != s.dim)
      throw DimensionError("space: weights length must equal dim");
    for (double w : s.weights)
      if (!(w > 0.0)) throw InvalidParameter("space: weights must be positive");
  }
}
}  // namespace

bool spaces_equal(const NormedSpace& a, const NormedSpace& b) {
  if (a.dim != b.dim || a.exponent != b.exponent) return false;
  bool ua = a.weights.empty(), ub = b.weights.empty();
  if (ua && ub) return true;
  for (int i = 0; i < a.dim; ++i) {
    double wa = ua ? 1.0 : a.weights[i];
    double wb = ub ? 1.0 : b.weights[i];
    if (wa != wb) return false;
  }
  return true;
}

Vector make_vector(const NormedSpace& space, std::vector<double> coords) {
  validate(space);
  if (static_cast<int>(coords.size()) != space.dim)
    throw DimensionError("vector: coordinate count does not match space dim");
  return Vector{space, std::move(coords)};
}

Vector basis_vector(const NormedSpace& space, int i) {
  validate(space);
  if (i < 0 || i >= space.dim) throw InvalidParameter("basis_vector: index out of range");
  std::vector<double> c(static_cast<std::size_t>(space.dim), 0.0);
  c[static_cast<std::size_t>(i)] = 1.0;
  return Vector{space, std::move(c)};
}

double vector_norm(const NormedSpace& space, const std::vector<double>& coords) {
  validate(space);
  if (static_cast<int>(coords.size()) != space.dim)
    throw DimensionError("vector_norm: coordinate count does not match space dim");
  double p = space.exponent;
  if (p == kInf) {
    double m = 0.0;
    for (double c : coords) m = std::max(m, std::fabs(c));
    return m;
  }
  double acc = 0.0;
  if (space.weights.empty()) {
    if (p == 2.0) {
      for (double c : coords) acc += c * c;
      return std::sqrt(acc);
    }
    if (p == 1.0) {
      for (double c : coords) acc += std::fabs(c);
      return acc;
    }
    for (double c : coords) acc += std::pow(std::fabs(c), p);
  } else {
    if (p == 2.0) {
      for (int i = 0; i < space.dim; ++i) acc += space.weights[i] * coords[i] * coords[i];
      return std::sqrt(acc);
    }
    for (int i = 0; i < space.dim; ++i)
      acc += space.weights[i] * std::pow(std::fabs(coords[i]), p);
    if (p == 1.0) return acc;
  }
  return std::pow(acc, 1.0 / p);
}

NormedSpace dual_space(const NormedSpace& s) {
  validate(s);
  if (s.exponent == 1.0 || s.exponent == kInf)
    throw UnsupportedDual("dual_space: exponent must lie in (1, inf)");
  double pd = s.exponent / (s.exponent - 1.0);
  NormedSpace out{s.dim, pd, {}};
  if (!s.weights.empty()) {
    out.weights.resize(s.weights.size());
    for (std::size_t i = 0; i < s.weights.size(); ++i)
      out.weights[i] = std::pow(s.weights[i], 1.0 - pd);
  }
  return out;
}

}  // namespace rblab
