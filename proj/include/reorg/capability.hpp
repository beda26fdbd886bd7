#ifndef REORG_CAPABILITY_HPP
#define REORG_CAPABILITY_HPP

#include <cstdint>
#include <set>
#include <string>

#include "reorg/agents.hpp"
#include "reorg/ontology.hpp"

namespace reorg {

/// Exact non-negative rational, kept normalized with positive denominator.
/// Avoids tie-breaking artifacts at the full-support threshold.
class Ratio {
public:
    Ratio() = default;
    Ratio(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend auto operator<=>(const Ratio& a, const Ratio& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Resource support for a functionality: 0 none, >=1 full, in (0,1) partial.
using SupportLevel = Ratio;

SupportLevel support_resource(const ResourceModel& model, const GeneralAgentType& type,
                              const std::string& c, const std::string& f);

SupportLevel support_functionality(const ResourceModel& model, const GeneralAgentType& type,
                                   const std::string& f);

SupportLevel support_set(const ResourceModel& model, const GeneralAgentType& type,
                         const std::set<std::string>& functionalities);

bool has_functionality(const ResourceModel& model, const GeneralAgentType& type,
                       const std::string& f);

int efficacy_type(const ResourceModel& model, const GeneralAgentType& type,
                  const std::set<std::string>& functionalities);

int efficacy_cs(const ResourceModel& model, const CoalitionStructure& cs,
                const std::set<std::string>& functionalities);

} // namespace reorg

#endif
