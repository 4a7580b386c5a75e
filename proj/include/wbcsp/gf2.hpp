#pragma once

#include "wbcsp/rational.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace wbcsp::gf2 {

// A monomial is a sorted set of distinct variable indices; the empty
// monomial is the constant 1.
using Monomial = std::vector<uint32_t>;

// Multilinear polynomial over GF(2), stored sparsely as the set of its
// ANF monomials.  Variables are 0-based indices; the owning context maps
// them to names (x1..xk for function tables, declared names for
// instances).
class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly one();
    static Poly var(uint32_t v);
    static Poly constant(bool b) { return b ? one() : zero(); }

    bool is_zero() const { return monomials_.empty(); }
    bool is_one() const;
    // Zero and one both have degree 0.
    int degree() const;

    const std::set<Monomial>& monomials() const { return monomials_; }
    std::vector<uint32_t> variables() const;
    bool depends_on(uint32_t v) const;

    // XOR a single monomial in or out.
    void toggle(Monomial m);

    bool evaluate(uint64_t assignment) const;  // bit v of assignment = value of variable v
    bool evaluate(const std::vector<uint8_t>& assignment) const;

    Poly operator^(const Poly& other) const;
    Poly& operator^=(const Poly& other);
    Poly operator*(const Poly& other) const;

    // Substitute an affine expression for variable v (x_v := replacement).
    Poly substitute(uint32_t v, const Poly& replacement) const;
    // Relabel variable v -> mapping[v]; repeated targets collapse (x*x = x).
    Poly rename(const std::vector<uint32_t>& mapping) const;

    bool operator==(const Poly& other) const = default;

    // "x1*x2+x3+1" with ascending monomials; "0" for the zero polynomial.
    std::string to_string() const;
    std::string to_string(const std::function<std::string(uint32_t)>& name) const;

private:
    std::set<Monomial> monomials_;
};

// One linear equation <coeffs, x> = rhs with packed coefficient bits.
struct LinearEquation {
    std::vector<uint64_t> coeffs;
    bool rhs = false;

    explicit LinearEquation(uint32_t num_vars = 0, bool rhs = false)
        : coeffs((num_vars + 63) / 64, 0), rhs(rhs) {}

    bool get(uint32_t v) const { return (coeffs[v / 64] >> (v % 64)) & 1; }
    void set(uint32_t v, bool b) {
        uint64_t mask = uint64_t{1} << (v % 64);
        if (b) coeffs[v / 64] |= mask; else coeffs[v / 64] &= ~mask;
    }
    void toggle(uint32_t v) { coeffs[v / 64] ^= uint64_t{1} << (v % 64); }
    void xor_with(const LinearEquation& other);
    bool coeffs_zero() const;
    // Highest set coefficient index, -1 when all zero.
    int top_variable() const;
    bool evaluate(uint64_t assignment) const;  // <coeffs, x> xor rhs
};

// System of linear equations over a fixed variable universe.
struct LinearSystem {
    uint32_t num_vars = 0;
    std::vector<LinearEquation> equations;

    LinearSystem() = default;
    explicit LinearSystem(uint32_t num_vars) : num_vars(num_vars) {}

    void add(LinearEquation eq) { equations.push_back(std::move(eq)); }
    bool satisfied_by(uint64_t assignment) const;
    std::string to_string(const std::function<std::string(uint32_t)>& name) const;
};

// Unique multilinear polynomial reproducing a 0/1 table (Moebius
// transform).  Table index convention matches BooleanFunction: index i
// with binary digits b_{m-1}..b_0 assigns x_1 = b_{m-1} (variable 0)
// through x_m = b_0 (variable m-1).
Poly anf_from_table(const std::vector<uint8_t>& bits, uint32_t num_vars);

// Truth-table index (x1 most significant) <-> assignment mask (bit v =
// variable v).
uint32_t index_to_assignment(uint32_t index, uint32_t num_vars);
uint32_t assignment_to_index(uint32_t assignment, uint32_t num_vars);

// Whether S (tuples given as assignment masks) is an affine subspace of
// GF(2)^k; the empty set counts as affine.
bool affine_support_test(const std::vector<uint64_t>& tuples, uint32_t num_vars);

// Linear system whose solution set is exactly the given nonempty affine
// set.  Canonical form: each equation solves a distinct pivot variable in
// terms of strictly lower free variables, equations ordered by ascending
// pivot.  Throws on empty or non-affine input.
LinearSystem support_to_system(const std::vector<uint64_t>& tuples, uint32_t num_vars);

// Pivot variable of each equation of a canonical system (ascending).
std::vector<uint32_t> system_pivots(const LinearSystem& sys);

// Exact number of solutions of the system in {0,1}^n.
BigInt count_linear(const LinearSystem& sys);

// Called once per hyperbolic elimination step of count_quadratic with the
// polynomial before the step, the isolated pair, the split parts and the
// residual; used by tests to check the step identity
// N(q, n) = 2^(n-2) + 2 N(r, n-2).
struct QuadraticStep {
    const Poly& q;
    uint32_t xi, xj;
    const Poly& a;  // factor paired with xj
    const Poly& b;  // factor paired with xi
    const Poly& residual;
    uint32_t num_vars;
};
using QuadraticStepObserver = std::function<void(const QuadraticStep&)>;

// Exact |{x in {0,1}^n : q(x) = 0}| for deg(q) <= 2, in time polynomial
// in n.  Throws PreconditionError when deg(q) > 2.
BigInt count_quadratic(const Poly& q, uint32_t num_vars,
                       const QuadraticStepObserver& observer = nullptr);

// Simultaneous solutions of q = 0 and every equation of sys, by
// eliminating one pinned variable per equation and counting the reduced
// quadratic.  deg(q) <= 2 required.
BigInt count_quadratic_with_linear(const Poly& q, const LinearSystem& sys, uint32_t num_vars,
                                   const QuadraticStepObserver& observer = nullptr);

}  // namespace wbcsp::gf2
