#include "wbcsp/function.hpp"

#include "wbcsp/errors.hpp"
#include "wbcsp/gf2.hpp"

namespace wbcsp {

BooleanFunction::BooleanFunction(uint32_t arity, std::vector<Rational> values)
    : arity_(arity), values_(std::move(values)) {
    if (arity < 1 || arity > kMaxArity)
        throw PreconditionError("function arity must be in [1, " + std::to_string(kMaxArity) + "]");
    if (values_.size() != (size_t{1} << arity))
        throw PreconditionError("truth table must have 2^arity values");
}

const Rational& BooleanFunction::operator()(const std::vector<uint8_t>& args) const {
    if (args.size() != arity_) throw PreconditionError("argument count does not match arity");
    uint32_t index = 0;
    for (uint32_t t = 0; t < arity_; ++t)
        if (args[t]) index |= uint32_t{1} << (arity_ - 1 - t);
    return values_[index];
}

std::vector<uint64_t> BooleanFunction::support() const {
    std::vector<uint64_t> masks;
    for (uint32_t i = 0; i < table_size(); ++i)
        if (values_[i] != 0) masks.push_back(gf2::index_to_assignment(i, arity_));
    std::sort(masks.begin(), masks.end());
    return masks;
}

bool BooleanFunction::is_zero() const {
    for (const Rational& v : values_)
        if (v != 0) return false;
    return true;
}

bool BooleanFunction::is_nonnegative() const {
    for (const Rational& v : values_)
        if (v < 0) return false;
    return true;
}

BooleanFunction delta0() { return BooleanFunction(1, {Rational(1), Rational(0)}); }
BooleanFunction delta1() { return BooleanFunction(1, {Rational(0), Rational(1)}); }
BooleanFunction theta(const Rational& lambda) { return BooleanFunction(1, {Rational(1), lambda}); }
BooleanFunction chi_eq() {
    return BooleanFunction(2, {Rational(1), Rational(0), Rational(0), Rational(1)});
}
BooleanFunction chi_neq() {
    return BooleanFunction(2, {Rational(0), Rational(1), Rational(1), Rational(0)});
}

BooleanFunction builtin_function(BuiltinKind kind, const Rational& lambda) {
    switch (kind) {
        case BuiltinKind::delta0: return delta0();
        case BuiltinKind::delta1: return delta1();
        case BuiltinKind::theta: return theta(lambda);
        case BuiltinKind::chi_eq: return chi_eq();
        case BuiltinKind::chi_neq: return chi_neq();
    }
    throw PreconditionError("unknown builtin kind");
}

void ConstraintLanguage::add(const std::string& name, BooleanFunction fn) {
    if (contains(name)) throw PreconditionError("duplicate function name '" + name + "'");
    functions_.emplace_back(name, std::move(fn));
}

bool ConstraintLanguage::contains(const std::string& name) const {
    return index_of(name).has_value();
}

const BooleanFunction& ConstraintLanguage::at(const std::string& name) const {
    if (auto idx = index_of(name)) return functions_[*idx].second;
    throw PreconditionError("unknown function '" + name + "'");
}

std::optional<uint32_t> ConstraintLanguage::index_of(const std::string& name) const {
    for (uint32_t i = 0; i < functions_.size(); ++i)
        if (functions_[i].first == name) return i;
    return std::nullopt;
}

}  // namespace wbcsp
