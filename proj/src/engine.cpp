#include "netee/engine.hpp"

#include <stdexcept>

namespace netee {

namespace {

// Substream tags. Each draw purpose gets its own domain so that variants
// which skip an operator leave the remaining streams untouched; this is what
// makes e.g. XoverRand with cp=0 reproduce HillClimbing bit for bit.
enum : std::uint64_t {
  kDomainInit = 0x49,
  kDomainPartner = 0x50,
  kDomainGate = 0x47,
  kDomainXover = 0x58,
  kDomainMutate = 0x4d,
};

bool improves(double candidate, double incumbent, Direction dir) {
  return dir == Direction::kMinimize ? candidate < incumbent : candidate > incumbent;
}

}  // namespace

Variant Variant::from_name(const std::string& name) {
  if (name == "HillClimbing") return hill_climbing();
  if (name == "CopyBest") return copy_best();
  if (name == "CopyRand") return copy_rand();
  if (name == "XoverBest") return xover_best();
  if (name == "XoverRand") return xover_rand();
  throw std::invalid_argument("unknown variant '" + name + "'");
}

std::string Variant::name() const {
  validate();
  if (partner == PartnerSelection::kNone) return "HillClimbing";
  const bool best = partner == PartnerSelection::kBestNeighbor;
  if (recombination == Recombination::kCopy) return best ? "CopyBest" : "CopyRand";
  return best ? "XoverBest" : "XoverRand";
}

void Variant::validate() const {
  const bool self_only = recombination == Recombination::kSelfOnly;
  const bool no_partner = partner == PartnerSelection::kNone;
  if (self_only != no_partner)
    throw std::invalid_argument("invalid variant combination");
}

std::vector<AgentState> make_initial_agents(const Problem& problem,
                                            std::uint64_t run_key) {
  std::vector<AgentState> agents(problem.node_count());
  for (NodeId n = 0; n < agents.size(); ++n) {
    AgentState& a = agents[n];
    a.rng = Rng(mix_seed(run_key, n));
    const GenomeSpec spec = problem.genome_spec(n);
    Rng init = a.rng.substream(kDomainInit);
    a.genotype = random_init(spec.length, spec.lb, spec.ub, init);
    a.fitness = problem.evaluate(n, a.genotype);
    if (problem.has_test_metric()) a.test_metric = problem.test_metric(n, a.genotype);
  }
  return agents;
}

NodeId best_neighbor(const std::vector<AgentState>& agents, const Topology& topo,
                     NodeId n, Direction dir) {
  const std::vector<NodeId> nbrs = topo.neighbors(n);
  if (nbrs.empty()) throw std::invalid_argument("empty neighborhood");
  NodeId best = nbrs.front();
  for (std::size_t k = 1; k < nbrs.size(); ++k)
    if (improves(agents[nbrs[k]].fitness, agents[best].fitness, dir)) best = nbrs[k];
  return best;
}

NodeId random_neighbor(const Topology& topo, NodeId n, Rng& rng) {
  const std::vector<NodeId> nbrs = topo.neighbors(n);
  if (nbrs.empty()) throw std::invalid_argument("empty neighborhood");
  return nbrs[rng.uniform_index(nbrs.size())];
}

std::vector<AgentState> step_generation(const std::vector<AgentState>& agents,
                                        const Topology& topo, const Problem& problem,
                                        const Variant& variant,
                                        const OperatorParams& params, Direction dir,
                                        std::uint64_t generation) {
  variant.validate();
  params.validate();
  if (agents.size() != topo.node_count())
    throw std::invalid_argument("agent count does not match topology");

  std::vector<AgentState> next = agents;
  for (NodeId n = 0; n < agents.size(); ++n) {
    const AgentState& self = agents[n];
    const std::uint64_t gen_key = mix_seed(self.rng.key(), generation);

    // Resolve the partner, if the variant uses one and a neighbor exists.
    const AgentState* partner = nullptr;
    if (variant.uses_neighbors()) {
      const std::vector<NodeId> nbrs = topo.neighbors(n);
      if (!nbrs.empty()) {
        if (variant.partner == PartnerSelection::kBestNeighbor) {
          NodeId best = nbrs.front();
          for (std::size_t k = 1; k < nbrs.size(); ++k)
            if (improves(agents[nbrs[k]].fitness, agents[best].fitness, dir))
              best = nbrs[k];
          partner = &agents[best];
        } else {
          Rng partner_rng(mix_seed(gen_key, kDomainPartner));
          partner = &agents[nbrs[partner_rng.uniform_index(nbrs.size())]];
        }
      }
    }

    const Genotype* base = &self.genotype;
    Genotype crossed;
    if (partner != nullptr) {
      if (variant.recombination == Recombination::kCopy) {
        base = &partner->genotype;
      } else {
        Rng gate(mix_seed(gen_key, kDomainGate));
        if (gate.uniform01() < params.cp) {
          if (self.genotype.size() == 1) {
            crossed = arithmetic_crossover(self.genotype, partner->genotype);
          } else {
            Rng xover(mix_seed(gen_key, kDomainXover));
            crossed = uniform_crossover(self.genotype, partner->genotype,
                                        params.cr, xover);
          }
          base = &crossed;
        }
      }
    }

    Rng mutate(mix_seed(gen_key, kDomainMutate));
    Genotype offspring = gaussian_mutate(*base, params.mr, mutate);

    const double f = problem.evaluate(n, offspring);
    if (improves(f, self.fitness, dir)) {
      next[n].genotype = std::move(offspring);
      next[n].fitness = f;
      if (problem.has_test_metric())
        next[n].test_metric = problem.test_metric(n, next[n].genotype);
    }
  }
  return next;
}

double collective_fitness(const std::vector<AgentState>& agents) {
  if (agents.empty()) throw std::invalid_argument("no agents");
  double sum = 0.0;
  for (const AgentState& a : agents) sum += a.fitness;
  return sum / static_cast<double>(agents.size());
}

double collective_test_metric(const std::vector<AgentState>& agents) {
  if (agents.empty()) throw std::invalid_argument("no agents");
  double sum = 0.0;
  for (const AgentState& a : agents) sum += a.test_metric;
  return sum / static_cast<double>(agents.size());
}

}  // namespace netee
