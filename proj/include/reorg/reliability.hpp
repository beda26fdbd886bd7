#ifndef REORG_RELIABILITY_HPP
#define REORG_RELIABILITY_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "reorg/agents.hpp"
#include "reorg/ontology.hpp"

namespace reorg {

/// Per-resource demand entry: required >= 1 (irrelevant resources are never
/// listed), available >= 0, survival probability in [0,1].
struct DemandEntry {
    int required = 0;
    int available = 0;
    double p = 1.0;
};

using ResourceDemandProfile = std::map<std::string, DemandEntry>;

/// Flattened per-resource minima across a functionality set, merged by MAX;
/// zero-requirement resources omitted.
std::map<std::string, int> required_cardinalities(const ResourceModel& model,
                                                  const std::set<std::string>& functionalities);

/// Available counts for exactly the resources in required_cardinalities.
std::map<std::string, int> available_cardinalities(const ResourceModel& model,
                                                   const GeneralAgentType& type,
                                                   const std::set<std::string>& functionalities);

ResourceDemandProfile demand_profile(const ResourceModel& model, const GeneralAgentType& type,
                                     const std::set<std::string>& functionalities);

/// Block reliability of one resource type: r required, n available instances
/// each surviving with probability p; 0 when n < r, else 1 - (1 - p^r)^(n/r)
/// with a real-valued exponent.
double rsub(int required, int available, double p);

/// Redundancy-weighted survival probability of an agent type with respect to
/// a functionality set: product of rsub over the demand profile.
double reliability(const ResourceModel& model, const GeneralAgentType& type,
                   const std::set<std::string>& functionalities);

/// Minimum reliability across the operative agents of a coalition structure,
/// each judged against its assigned functionality set.
double reliability_cs(const ResourceModel& model, const CoalitionStructure& cs,
                      const std::map<GeneralAgent, std::set<std::string>>& a2f);

struct MonteCarloResult {
    double estimate = 0.0;
    double stderr_ = 0.0;
};

/// Instance-level survival sampling: each resource instance lives with its
/// concept's probability; a trial succeeds iff every required resource has at
/// least its required count of survivors. Deterministic under a fixed seed.
MonteCarloResult monte_carlo_reliability(const ResourceModel& model,
                                         const GeneralAgentType& type,
                                         const std::set<std::string>& functionalities,
                                         std::uint64_t trials, std::uint64_t seed);

} // namespace reorg

#endif
