#include "netee/genome.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace netee {

void Genotype::validate() const {
  if (values.empty()) throw std::invalid_argument("genotype must be non-empty");
  if (!(lb < ub)) throw std::invalid_argument("genotype bounds require lb < ub");
  for (double v : values)
    if (v < lb || v > ub)
      throw std::invalid_argument("gene " + std::to_string(v) + " outside [" +
                                  std::to_string(lb) + ", " + std::to_string(ub) + "]");
}

void OperatorParams::validate() const {
  if (cp < 0.0 || cp > 1.0) throw std::invalid_argument("cp must be in [0, 1]");
  if (cr < 0.0 || cr > 1.0) throw std::invalid_argument("cr must be in [0, 1]");
  if (!(mr > 0.0)) throw std::invalid_argument("mr must be > 0");
}

Genotype random_init(std::size_t len, double lb, double ub, Rng& rng) {
  if (len == 0) throw std::invalid_argument("genotype length must be >= 1");
  if (!(lb < ub)) throw std::invalid_argument("bounds require lb < ub");
  Genotype g;
  g.lb = lb;
  g.ub = ub;
  g.values.resize(len);
  for (double& v : g.values) v = rng.uniform(lb, ub);
  return g;
}

Genotype uniform_crossover(const Genotype& self_g, const Genotype& partner,
                           double cr, Rng& rng) {
  if (self_g.size() != partner.size())
    throw std::invalid_argument("crossover parents differ in length");
  if (cr < 0.0 || cr > 1.0) throw std::invalid_argument("cr must be in [0, 1]");
  Genotype child = partner;
  for (std::size_t i = 0; i < child.values.size(); ++i)
    if (rng.uniform01() < cr) child.values[i] = self_g.values[i];
  return child;
}

Genotype arithmetic_crossover(const Genotype& self_g, const Genotype& partner) {
  if (self_g.size() != 1 || partner.size() != 1)
    throw std::invalid_argument("arithmetic crossover needs single-parameter genotypes");
  Genotype child = self_g;
  child.values[0] = 0.5 * (self_g.values[0] + partner.values[0]);
  return child;
}

Genotype gaussian_mutate(const Genotype& g, double mr, Rng& rng) {
  if (!(mr > 0.0)) throw std::invalid_argument("mr must be > 0");
  Genotype out = g;
  for (double& v : out.values)
    v = std::clamp(v + rng.gaussian(mr), g.lb, g.ub);
  return out;
}

}  // namespace netee
