#include "weyl/random.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace weyl {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ stream) ^ index);
}

Scalar random_scalar(Rng& rng) {
  std::uniform_int_distribution<long> num(-5, 4);
  std::uniform_int_distribution<long> den(1, 3);
  long n = num(rng);
  if (n >= 0) ++n;  // skip zero
  return make_scalar(n, den(rng));
}

WeylElement random_element(Rng& rng, Index max_deg, std::size_t max_terms) {
  std::uniform_int_distribution<Index> exp(0, max_deg);
  std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, max_terms));
  WeylElement p;
  const std::size_t n = count(rng);
  while (p.is_zero() || p.size() < n) {
    const LatticePoint e{exp(rng), exp(rng)};
    if (!p.contains(e)) p.add_term(e, random_scalar(rng));
  }
  return p;
}

WeylElement random_homogeneous(Rng& rng, const Direction& d, Index max_deg) {
  std::uniform_int_distribution<Index> exp(0, max_deg);
  const LatticePoint base{exp(rng), exp(rng)};
  const LatticePoint step = d.edge_step();
  std::vector<LatticePoint> line;
  for (Index t = -2 * max_deg - 2; t <= 2 * max_deg + 2; ++t) {
    const LatticePoint pt = base + t * step;
    if (pt.i >= 0 && pt.j >= 0 && pt.i <= max_deg && pt.j <= max_deg) line.push_back(pt);
  }
  std::shuffle(line.begin(), line.end(), rng);
  std::uniform_int_distribution<std::size_t> count(1, std::min<std::size_t>(line.size(), 4));
  line.resize(count(rng));
  WeylElement p;
  for (const auto& pt : line) p.add_term(pt, random_scalar(rng));
  return p;
}

Direction random_positive_direction(Rng& rng, Index max_abs) {
  std::uniform_int_distribution<Index> comp(-max_abs, max_abs);
  while (true) {
    const Index rho = comp(rng);
    const Index sigma = comp(rng);
    if (rho + sigma > 0 && std::gcd(rho, sigma) == 1) return Direction(rho, sigma);
  }
}

UniPoly random_unipoly(Rng& rng, std::int64_t max_deg, std::size_t min_terms) {
  static const Scalar kCoeffs[] = {Scalar(2), Scalar(-2), Scalar(1), Scalar(-1), make_scalar(1, 2), make_scalar(-1, 2)};
  std::uniform_int_distribution<std::int64_t> exp(0, max_deg);
  std::uniform_int_distribution<std::size_t> pick(0, 5);
  std::uniform_int_distribution<std::size_t> count(min_terms, static_cast<std::size_t>(max_deg) + 1);
  const std::size_t n = count(rng);
  UniPoly f;
  while (f.size() < n) {
    const std::int64_t e = exp(rng);
    if (f.coeff(e) == 0) f.add_term(e, kCoeffs[pick(rng)]);
  }
  return f;
}

}  // namespace weyl
