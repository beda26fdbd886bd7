#ifndef REORG_ONTOLOGY_HPP
#define REORG_ONTOLOGY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reorg/agents.hpp"
#include "reorg/policies.hpp"

namespace reorg {

enum class ConceptKind { Resource, Functionality, Interface, AgentType };

struct ResourceConcept {
    std::string id;
    std::optional<std::string> parent;
    ConceptKind kind = ConceptKind::Resource;
    /// Survival probability of one instance of this resource, in [0,1].
    std::optional<double> p_survival;
};

enum class Gender { Male, Female };

struct InterfaceSpec {
    std::string type;
    Gender gender = Gender::Male;
    int count = 0;
};

struct AgentTypeDefinition {
    std::string id;
    std::map<std::string, int> resources;
    std::vector<InterfaceSpec> interfaces;
    std::map<std::string, double> properties;
};

/// Arithmetic relation deriving one property from others on the same concept.
struct DerivedPropertyFormula {
    std::string target;
    std::string expression;
};

/// Immutable taxonomy of resource/functionality concepts, agent type
/// definitions, data properties, derivation formulas and inference rules.
/// Built once by load_model; all queries are const and thread-safe.
class ResourceModel {
public:
    bool has_concept(const std::string& id) const;
    const ResourceConcept& concept_of(const std::string& id) const;
    const AgentTypeDefinition& agent_type(const std::string& id) const;
    bool has_agent_type(const std::string& id) const;
    std::vector<std::string> agent_type_names() const;
    bool has_functionality(const std::string& id) const;

    /// True iff `concept_id` equals `ancestor` or `ancestor` lies on its
    /// parent chain.
    bool is_instance_of(const std::string& concept_id, const std::string& ancestor) const;

    /// Minimum count of instances of c (or subconcepts) required by f, after
    /// recursively flattening functionality dependencies with MAX-merge.
    int card_min(const std::string& c, const std::string& f) const;

    /// Maximum count of instances of c available in the agent type, counting
    /// subconcept instances.
    int card_max(const std::string& c, const GeneralAgentType& type) const;

    /// Flattened per-resource minima of one functionality (MAX-merged).
    std::map<std::string, int> flattened_requirements(const std::string& f) const;

    /// Direct or formula-derived numeric property of an atomic agent type.
    double resolve_property(const std::string& agent_type, const std::string& property) const;
    bool has_property(const std::string& agent_type, const std::string& property) const;

    /// Effective survival probability for instances of `c` counted in `type`:
    /// minimum across contributing resource concepts; 1.0 when none declares one.
    double survival_probability(const std::string& c, const GeneralAgentType& type) const;
    /// Declared (or inherited) survival probability of a single concept.
    double survival_probability(const std::string& c) const;

    const SelectionPolicy& policy(const std::string& name) const;
    bool has_rule(const std::string& property) const;
    const InferenceRule& rule(const std::string& property) const;

    friend ResourceModel load_model(const std::string& text, const std::string& origin);

private:
    void validate(const std::string& origin) const;

    std::map<std::string, ResourceConcept> concepts_;
    std::map<std::string, std::map<std::string, int>> functionality_requirements_;
    std::map<std::string, AgentTypeDefinition> agent_types_;
    std::map<std::string, DerivedPropertyFormula> formulas_;
    std::map<std::string, SelectionPolicy> policies_;
    std::map<std::string, InferenceRule> rules_;
};

/// Parses and validates a model document (YAML, see docs/model_schema.md).
/// `origin` names the document in error messages.
ResourceModel load_model(const std::string& text, const std::string& origin = "<model>");
ResourceModel load_model_file(const std::string& path);

bool is_instance_of(const ResourceModel& model, const std::string& concept_id,
                    const std::string& ancestor);
int card_min(const ResourceModel& model, const std::string& c, const std::string& f);
int card_max(const ResourceModel& model, const std::string& c, const GeneralAgentType& type);
double resolve_property(const ResourceModel& model, const std::string& agent_type,
                        const std::string& property);

/// Evaluates an arithmetic expression (+,-,*,/ and parentheses) over the
/// provided variable resolver. Throws ParseError / DivisionByZero.
double eval_expression(const std::string& expression,
                       const std::map<std::string, double>& variables);

} // namespace reorg

#endif
