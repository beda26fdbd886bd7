#ifndef REORG_POLICIES_HPP
#define REORG_POLICIES_HPP

#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "reorg/agents.hpp"

namespace reorg {

class ResourceModel;

/// Keep candidate subsets whose size satisfies `|A| op value`.
struct SizeSel {
    enum class Op { Lt, Le, Gt, Ge, Eq };
    Op op = Op::Eq;
    int value = 1;
};

/// Keep candidate subsets whose type has the functionality.
struct FuncSel {
    std::string functionality;
};

/// Keep candidate subsets attaining the extremum of a numeric property.
struct PropSel {
    enum class Op { ArgMax, ArgMin };
    Op op = Op::ArgMax;
    std::string property;
};

/// Collapse the candidate set to one uniformly picked subset (empty from empty).
struct RandomSel {};

using PolicyStep = std::variant<SizeSel, FuncSel, PropSel, RandomSel>;

/// Chain of subselection steps applied to the powerset of an agent's atoms.
/// Steps are stored in application order: front() runs first.
struct SelectionPolicy {
    std::string name;
    std::vector<PolicyStep> steps;
};

/// Reference to a named policy, optionally inverted (A \ sel(A)).
struct PolicyRef {
    std::string name;
    bool inverted = false;
};

/// One signed summation term of an inference rule.
struct RuleTerm {
    int sign = +1; // +1 or -1
    PolicyRef policy;
    std::string property;
};

/// Composite numeric property as a signed sum of policy-selected sums.
struct InferenceRule {
    std::string target;
    std::vector<RuleTerm> terms;
};

std::set<AtomicAgent> eval_policy(const ResourceModel& model,
                                  const SelectionPolicy& policy,
                                  const GeneralAgent& agent,
                                  std::uint64_t seed);

std::set<AtomicAgent> inverse_policy(const ResourceModel& model,
                                     const SelectionPolicy& policy,
                                     const GeneralAgent& agent,
                                     std::uint64_t seed);

/// Sum of the property value over the given atoms; 0 for the empty set.
double compose_sum(const ResourceModel& model,
                   const std::set<AtomicAgent>& atoms,
                   const std::string& property);

/// Numeric property of a (possibly composite) agent type: direct resolution
/// for singletons, otherwise evaluation of the matching inference rule.
double pvalue_composite(const ResourceModel& model,
                        const GeneralAgentType& type,
                        const std::string& property,
                        std::uint64_t seed = 0);

/// Total consumed energy (J) of an agent type operating for t seconds at
/// nominal power consumption.
double ocost(const ResourceModel& model, const GeneralAgentType& type, double t_seconds);

/// The built-in transport-provider selection chain:
/// func_sel(TransportProvider), size_sel(=,1), prop_sel(argmax,tcap), random_sel.
SelectionPolicy transport_provider_policy();

} // namespace reorg

#endif
