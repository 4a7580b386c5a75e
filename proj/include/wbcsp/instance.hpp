#pragma once

#include "wbcsp/function.hpp"
#include "wbcsp/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wbcsp {

// Default cap on 2^|V| brute-force enumeration; callers may raise it.
inline constexpr uint32_t kDefaultBruteVarLimit = 24;

// One constraint: a function of the attached language applied to a scope
// of declared variables.  Scopes may repeat a variable.
struct Constraint {
    uint32_t function;            // index into the language
    std::vector<uint32_t> scope;  // variable indices, length = arity
};

// A total assignment of {0,1} to the instance variables, aligned with
// Instance::variables().
using Configuration = std::vector<uint8_t>;

// An instance I = (V, C) over a constraint language.  Immutable after
// construction; all evaluation entry points are pure functions.
class Instance {
public:
    Instance(ConstraintLanguage language, std::vector<std::string> variables);

    void add_constraint(const std::string& function_name, const std::vector<std::string>& scope);
    void add_constraint(uint32_t function_index, std::vector<uint32_t> scope);

    const ConstraintLanguage& language() const { return language_; }
    const std::vector<std::string>& variables() const { return variables_; }
    uint32_t num_variables() const { return static_cast<uint32_t>(variables_.size()); }
    const std::vector<Constraint>& constraints() const { return constraints_; }

    uint32_t variable_index(const std::string& name) const;

private:
    ConstraintLanguage language_;
    std::vector<std::string> variables_;
    std::vector<Constraint> constraints_;
};

// Exact product of constraint values under a configuration; 1 for an
// empty constraint list.
Rational weight(const Instance& instance, const Configuration& sigma);

// Same, with the configuration packed as bit v = value of variable v.
Rational weight(const Instance& instance, uint64_t assignment);

// The partition function by exhaustive enumeration of all 2^|V|
// configurations.  Exact and deterministic; throws ResourceLimitError
// beyond max_vars.
Rational brute_z(const Instance& instance, uint32_t max_vars = kDefaultBruteVarLimit);

}  // namespace wbcsp
