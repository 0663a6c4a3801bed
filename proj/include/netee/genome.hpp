#pragma once

#include <cstddef>
#include <vector>

#include "netee/rng.hpp"

namespace netee {

/// Bounded real vector of behavior parameters. Every public operator keeps
/// all values inside [lb, ub].
struct Genotype {
  std::vector<double> values;
  double lb = 0.0;
  double ub = 1.0;

  std::size_t size() const { return values.size(); }
  void validate() const;
};

/// cp: probability that the crossover operator fires at all.
/// cr: per-gene exchange probability of uniform crossover.
/// mr: standard deviation of the Gaussian mutation.
struct OperatorParams {
  double cp = 0.0;
  double cr = 0.5;
  double mr = 0.001;

  void validate() const;
};

/// Each element i.i.d. uniform on [lb, ub].
Genotype random_init(std::size_t len, double lb, double ub, Rng& rng);

/// Offspring starts as a copy of `partner`; each gene is then overwritten
/// with `self_g`'s gene independently with probability cr. The cp gate is the
/// caller's job.
Genotype uniform_crossover(const Genotype& self_g, const Genotype& partner,
                           double cr, Rng& rng);

/// Mean of two single-parameter parents.
Genotype arithmetic_crossover(const Genotype& self_g, const Genotype& partner);

/// Adds an independent N(0, mr) perturbation to each gene, then clamps to
/// [lb, ub].
Genotype gaussian_mutate(const Genotype& g, double mr, Rng& rng);

}  // namespace netee
