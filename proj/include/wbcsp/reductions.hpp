#pragma once

#include "wbcsp/function.hpp"
#include "wbcsp/instance.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wbcsp::reductions {

// 2x2 rational matrix in the order (f(0,0) f(0,1); f(1,0) f(1,1)).
struct Matrix2 {
    Rational a00, a01, a10, a11;

    Matrix2 transpose() const { return {a00, a10, a01, a11}; }
    Matrix2 entrywise_square() const;
    Matrix2 operator*(const Matrix2& other) const;
    Rational determinant() const { return a00 * a11 - a01 * a10; }
    bool is_symmetric() const { return a01 == a10; }
    bool operator==(const Matrix2& other) const = default;
    std::string to_string() const;
};

// Directed multigraph; loops and parallel edges allowed.
struct DirectedMultigraph {
    std::vector<std::string> vertices;
    std::vector<std::pair<uint32_t, uint32_t>> edges;

    uint32_t add_vertex(const std::string& name);
    void add_edge(uint32_t from, uint32_t to);
};

// g(..) = sum over y of f(.., y, ..) with y in (1-based) position i.
BooleanFunction project_out(const BooleanFunction& f, uint32_t position);

// g(x1,x2) = sum over y,z of f(x1,y,z) f(y,z,x2); f must be ternary.
BooleanFunction contract(const BooleanFunction& f);

// Pointwise q*f for q != 0.
BooleanFunction scale(const BooleanFunction& f, const Rational& q);

// Number m of constraints of `instance` using the named function, and the
// exact factor q^m by which scaling that function scales Z.
std::pair<uint32_t, Rational> scale_instance_check(const Instance& instance,
                                                   const std::string& function_name,
                                                   const Rational& q);

// Pointwise square; the language version squares every member.
BooleanFunction square_function(const BooleanFunction& f);
ConstraintLanguage square_language(const ConstraintLanguage& language);

// The instance with the extra constraint delta_c(v); the pinning function
// is added to the attached language under a fresh name if needed.
Instance pin_gadget(const Instance& instance, const std::string& variable, bool value);

// Matrix of a binary function in paper order.
Matrix2 to_matrix(const BooleanFunction& f);

// Z_A(G) = sum over sigma: V -> {0,1} of prod over edges (x,y) of
// A[sigma(x)][sigma(y)].  Brute evaluation, bounded: the general problem
// is the hard side of the dichotomy.
Rational eval_matrix(const Matrix2& a, const DirectedMultigraph& g, uint32_t max_vertices = 20);

enum class GadgetKind {
    square_entries,  // G1: duplicate every edge;            Z_{A^(2)}(G)  = Z_A(G1)
    a_at,            // G2: edge (x,y) -> (x,v_e),(y,v_e);   Z_{A A^T}(G)  = Z_A(G2)
    ta_a,            // G3: edge (x,y) -> (v_e,x),(v_e,y);   Z_{A^T A}(G)  = Z_A(G3)
    a_squared,       // G4: edge (x,y) -> (x,v_e),(v_e,y);   Z_{A^2}(G)    = Z_A(G4)
};

DirectedMultigraph graph_gadget(const DirectedMultigraph& g, GadgetKind kind);

// The #P-hardness conditions on a 2x2 matrix: symmetric, nonnegative,
// rank 2, and at most one zero entry.
bool bulatov_grohe_check(const Matrix2& a);

// One row of the ternary degree-3 sign polynomial table: the polynomial,
// the arity-reduction method, and the expected matrices.
struct Table1Row {
    std::string polynomial;               // e.g. "xyz+xy+z"
    std::vector<std::vector<uint32_t>> monomials;  // variable indices 0=x,1=y,2=z
    bool use_contract;                    // otherwise project
    uint32_t project_position;            // 1-based, meaningful when projecting
    std::array<std::array<int, 2>, 2> expected_a;
    std::array<std::array<int, 2>, 2> expected_a_prime;
};

struct Table1RowResult {
    const Table1Row* row;
    std::string method;   // "Project out z" / "Contract"
    Matrix2 a;
    Matrix2 a_prime;      // (A A^T)^(2)
    bool a_matches;
    bool a_prime_matches;
    bool bulatov_grohe;
    bool pass() const { return a_matches && a_prime_matches && bulatov_grohe; }
};

const std::vector<Table1Row>& table1_rows();

// Rebuilds every row's matrices from (-1)^s and compares against the
// transcribed table; each row must also satisfy bulatov_grohe_check.
std::vector<Table1RowResult> table1_verify();

}  // namespace wbcsp::reductions
