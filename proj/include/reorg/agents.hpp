#ifndef REORG_AGENTS_HPP
#define REORG_AGENTS_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace reorg {

class ResourceModel;

/// A monolithic physical robot, identified by a unique instance name.
struct AtomicAgent {
    std::string id;
    std::string type;

    auto operator<=>(const AtomicAgent&) const = default;
};

/// Multiset of atomic agent types: maps a type name to its cardinality.
/// Zero-count entries are normalized away, so equality is count-wise.
class GeneralAgentType {
public:
    GeneralAgentType() = default;
    explicit GeneralAgentType(std::map<std::string, int> counts);

    static GeneralAgentType single(const std::string& type, int count = 1);

    int count(const std::string& type) const;
    int total() const;
    bool empty() const { return counts_.empty(); }

    void add(const std::string& type, int count = 1);
    void remove(const std::string& type, int count = 1);

    /// Count-wise sum of two types.
    GeneralAgentType unionWith(const GeneralAgentType& other) const;
    /// True iff every count of this type is <= the other's (count-wise subset).
    bool containedIn(const GeneralAgentType& other) const;

    const std::map<std::string, int>& counts() const { return counts_; }

    bool operator==(const GeneralAgentType&) const = default;
    auto operator<=>(const GeneralAgentType&) const = default;

    std::string str() const;

private:
    std::map<std::string, int> counts_;
};

/// Non-empty set of atomic agents acting as one physical coalition.
class GeneralAgent {
public:
    GeneralAgent() = default;
    explicit GeneralAgent(std::set<AtomicAgent> members);

    const std::set<AtomicAgent>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool composite() const { return members_.size() > 1; }
    bool contains(const AtomicAgent& a) const { return members_.count(a) > 0; }

    GeneralAgentType type() const;

    bool operator==(const GeneralAgent&) const = default;
    auto operator<=>(const GeneralAgent&) const = default;

    std::string str() const;

private:
    std::set<AtomicAgent> members_;
};

/// Disjoint partition of an atomic-agent pool into operative general agents.
class CoalitionStructure {
public:
    CoalitionStructure() = default;
    /// Throws ValidationError if blocks overlap or any block is empty.
    explicit CoalitionStructure(std::vector<GeneralAgent> agents);

    const std::vector<GeneralAgent>& agents() const { return agents_; }
    std::set<AtomicAgent> pool() const;
    std::size_t size() const { return agents_.size(); }

    bool operator==(const CoalitionStructure&) const = default;

    std::string str() const;

private:
    std::vector<GeneralAgent> agents_; // kept sorted for canonical compare
};

/// Typed placeholder for an anonymous agent instance.
struct Role {
    std::string name;
    std::string type;

    auto operator<=>(const Role&) const = default;
};

GeneralAgentType type_of(const GeneralAgent& agent);
GeneralAgentType union_types(const GeneralAgentType& a, const GeneralAgentType& b);

/// True iff the atoms implied by `type` can form one connected structure where
/// every link consumes exactly one free male and one free female compatible
/// interface on two distinct atoms; singletons are trivially feasible.
bool connection_feasible(const ResourceModel& model, const GeneralAgentType& type);

/// All type-distinct non-empty sub-multisets of `pool` with total count <= bound
/// that pass connection_feasible, in lexicographic order over the sorted type
/// sequence.
std::vector<GeneralAgentType> enumerate_dormant_types(const ResourceModel& model,
                                                      const GeneralAgentType& pool,
                                                      int bound);

} // namespace reorg

#endif
