#pragma once

#include "wbcsp/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wbcsp {

// Truth tables beyond this arity are rejected; keeps tables at 2^16 values.
inline constexpr uint32_t kMaxArity = 16;

// A rational-valued function on Boolean tuples, stored as a closed truth
// table.  Index i with binary digits b_{k-1}..b_0 encodes x_1 = b_{k-1}
// (most significant) through x_k = b_0.
class BooleanFunction {
public:
    BooleanFunction(uint32_t arity, std::vector<Rational> values);

    uint32_t arity() const { return arity_; }
    uint32_t table_size() const { return uint32_t{1} << arity_; }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& value_at_index(uint32_t index) const { return values_[index]; }
    const Rational& operator()(const std::vector<uint8_t>& args) const;

    // Tuples where the function is nonzero, as assignment masks (bit v =
    // value of x_{v+1}), ascending.
    std::vector<uint64_t> support() const;
    bool is_zero() const;
    bool is_nonnegative() const;

    bool operator==(const BooleanFunction& other) const = default;

private:
    uint32_t arity_;
    std::vector<Rational> values_;
};

// The named builtins used throughout the reductions.
BooleanFunction delta0();                    // [1, 0]
BooleanFunction delta1();                    // [0, 1]
BooleanFunction theta(const Rational& lambda);  // [1, lambda]
BooleanFunction chi_eq();                    // [1, 0, 0, 1]
BooleanFunction chi_neq();                   // [0, 1, 1, 0]

enum class BuiltinKind { delta0, delta1, theta, chi_eq, chi_neq };

// Dispatch form of the builtins; lambda is only read for theta.
BooleanFunction builtin_function(BuiltinKind kind, const Rational& lambda = Rational(1));

// A finite set of named functions.  Names are unique; insertion order is
// preserved and meaningful for deterministic reports.
class ConstraintLanguage {
public:
    ConstraintLanguage() = default;

    void add(const std::string& name, BooleanFunction fn);
    bool contains(const std::string& name) const;
    uint32_t size() const { return static_cast<uint32_t>(functions_.size()); }
    bool empty() const { return functions_.empty(); }

    const BooleanFunction& at(const std::string& name) const;
    const BooleanFunction& at(uint32_t index) const { return functions_[index].second; }
    const std::string& name_at(uint32_t index) const { return functions_[index].first; }
    std::optional<uint32_t> index_of(const std::string& name) const;

    bool operator==(const ConstraintLanguage& other) const = default;

private:
    std::vector<std::pair<std::string, BooleanFunction>> functions_;
};

}  // namespace wbcsp
