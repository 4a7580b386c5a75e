#include "wbcsp/instance.hpp"

#include "wbcsp/errors.hpp"

#include <set>

namespace wbcsp {

Instance::Instance(ConstraintLanguage language, std::vector<std::string> variables)
    : language_(std::move(language)), variables_(std::move(variables)) {
    std::set<std::string> seen;
    for (const std::string& v : variables_)
        if (!seen.insert(v).second) throw PreconditionError("duplicate variable '" + v + "'");
}

uint32_t Instance::variable_index(const std::string& name) const {
    for (uint32_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == name) return i;
    throw PreconditionError("unknown variable '" + name + "'");
}

void Instance::add_constraint(const std::string& function_name, const std::vector<std::string>& scope) {
    auto idx = language_.index_of(function_name);
    if (!idx) throw PreconditionError("unknown function '" + function_name + "'");
    std::vector<uint32_t> indices;
    indices.reserve(scope.size());
    for (const std::string& v : scope) indices.push_back(variable_index(v));
    add_constraint(*idx, std::move(indices));
}

void Instance::add_constraint(uint32_t function_index, std::vector<uint32_t> scope) {
    if (function_index >= language_.size()) throw PreconditionError("function index out of range");
    const BooleanFunction& fn = language_.at(function_index);
    if (scope.size() != fn.arity())
        throw PreconditionError("scope length does not match arity of '" +
                                language_.name_at(function_index) + "'");
    for (uint32_t v : scope)
        if (v >= variables_.size()) throw PreconditionError("scope variable index out of range");
    constraints_.push_back(Constraint{function_index, std::move(scope)});
}

Rational weight(const Instance& instance, uint64_t assignment) {
    Rational w(1);
    for (const Constraint& c : instance.constraints()) {
        const BooleanFunction& fn = instance.language().at(c.function);
        uint32_t k = fn.arity();
        uint32_t index = 0;
        for (uint32_t t = 0; t < k; ++t)
            if ((assignment >> c.scope[t]) & 1) index |= uint32_t{1} << (k - 1 - t);
        const Rational& value = fn.value_at_index(index);
        if (value == 0) return Rational(0);
        w *= value;
    }
    return w;
}

Rational weight(const Instance& instance, const Configuration& sigma) {
    if (sigma.size() != instance.num_variables())
        throw PreconditionError("configuration must assign every variable");
    uint64_t assignment = 0;
    for (uint32_t v = 0; v < sigma.size(); ++v)
        if (sigma[v]) assignment |= uint64_t{1} << v;
    return weight(instance, assignment);
}

Rational brute_z(const Instance& instance, uint32_t max_vars) {
    uint32_t n = instance.num_variables();
    if (n > max_vars)
        throw ResourceLimitError("brute_z: " + std::to_string(n) + " variables exceeds the bound of " +
                                 std::to_string(max_vars));
    Rational total(0);
    uint64_t count = uint64_t{1} << n;
    for (uint64_t assignment = 0; assignment < count; ++assignment)
        total += weight(instance, assignment);
    return total;
}

}  // namespace wbcsp
