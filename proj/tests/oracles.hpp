#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check: solution counting by exhaustive truth tables, classification by
// exhaustive search over supports, sign polynomials and constraint sets,
// and the direct combinatorial counts behind the two graph identities.

#include "wbcsp/classify.hpp"
#include "wbcsp/function.hpp"
#include "wbcsp/gf2.hpp"
#include "wbcsp/parity.hpp"
#include "wbcsp/rational.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace wbcsp::test {

// Bit pattern of variable v over assignment indices (bit i of the table
// word = value of variable v in assignment i).
inline uint64_t variable_pattern(uint32_t v, uint64_t word_index) {
    static constexpr std::array<uint64_t, 6> low = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
    };
    if (v < 6) return low[v];
    return ((word_index >> (v - 6)) & 1) ? ~0ull : 0ull;
}

// Exhaustive count of assignments with q = 0 and every system equation
// satisfied, via packed truth tables over all 2^n assignments.
inline BigInt oracle_count_solutions(const gf2::Poly& q, const gf2::LinearSystem* sys, uint32_t n) {
    const uint64_t nbits = uint64_t{1} << n;
    const uint64_t words = (nbits + 63) / 64;
    BigInt total = 0;
    for (uint64_t w = 0; w < words; ++w) {
        uint64_t sat = ~0ull;
        uint64_t qbits = 0;
        for (const gf2::Monomial& m : q.monomials()) {
            uint64_t term = ~0ull;
            for (uint32_t v : m) term &= variable_pattern(v, w);
            qbits ^= term;
        }
        sat &= ~qbits;
        if (sys) {
            for (const gf2::LinearEquation& eq : sys->equations) {
                uint64_t bits = eq.rhs ? ~0ull : 0ull;
                for (uint32_t v = 0; v < sys->num_vars; ++v)
                    if (eq.get(v)) bits ^= variable_pattern(v, w);
                sat &= ~bits;
            }
        }
        if (nbits < 64) sat &= (uint64_t{1} << nbits) - 1;
        total += std::popcount(sat);
    }
    return total;
}

// All multilinear polynomials over k variables, identified by a bitmask
// over the 2^k monomials (monomial id = variable subset mask).
inline bool poly_id_evaluate(uint32_t poly_id, uint32_t k, uint32_t assignment) {
    bool acc = false;
    for (uint32_t m = 0; m < (uint32_t{1} << k); ++m)
        if ((poly_id >> m) & 1) acc ^= (assignment & m) == m;
    return acc;
}

inline int poly_id_degree(uint32_t poly_id, uint32_t k) {
    int deg = 0;
    for (uint32_t m = 0; m < (uint32_t{1} << k); ++m)
        if ((poly_id >> m) & 1) deg = std::max(deg, std::popcount(m));
    return deg;
}

// Minimal degree over all sign polynomials matching f's signs on its
// support, by enumerating every multilinear polynomial; k <= 3 keeps the
// search at 256 candidates.
inline int oracle_min_sign_degree(const BooleanFunction& f) {
    const uint32_t k = f.arity();
    int best = k + 1;
    for (uint32_t poly_id = 0; poly_id < (uint32_t{1} << (uint32_t{1} << k)); ++poly_id) {
        bool ok = true;
        for (uint32_t i = 0; i < f.table_size() && ok; ++i) {
            const Rational& value = f.value_at_index(i);
            if (value == 0) continue;
            uint32_t assignment = gf2::index_to_assignment(i, k);
            ok = poly_id_evaluate(poly_id, k, assignment) == (value < 0);
        }
        if (ok) best = std::min(best, poly_id_degree(poly_id, k));
    }
    return best;
}

// Affine test by triple closure: S is affine iff a ^ b ^ c stays in S.
inline bool oracle_affine(const std::vector<uint64_t>& tuples) {
    for (uint64_t a : tuples)
        for (uint64_t b : tuples)
            for (uint64_t c : tuples) {
                uint64_t x = a ^ b ^ c;
                bool found = false;
                for (uint64_t t : tuples) found = found || t == x;
                if (!found) return false;
            }
    return true;
}

struct OracleAffineResult {
    bool pure_affine;
    int degree;  // meaningful when pure_affine
};

inline OracleAffineResult oracle_classify_pure_affine(const BooleanFunction& f) {
    if (f.is_zero()) return {true, 0};
    Rational magnitude(0);
    for (const Rational& v : f.values()) {
        if (v == 0) continue;
        Rational m = abs_rational(v);
        if (magnitude == 0) magnitude = m;
        else if (m != magnitude) return {false, 0};
    }
    if (!oracle_affine(f.support())) return {false, 0};
    return {true, oracle_min_sign_degree(f)};
}

struct OracleProductResult {
    bool product_type;
    int degree;
};

// Product-type test by exhausting candidate constraint sets (3 choices
// per variable pin, 3 per pair link).  When a candidate defines exactly
// the support, the magnitudes become a positive function of the class
// bits, which factorizes over the classes iff it is log-modular on the
// class-bit hypercube.
inline OracleProductResult oracle_classify_product_type(const BooleanFunction& f) {
    const uint32_t k = f.arity();
    if (f.is_zero()) return {true, 0};
    std::vector<uint64_t> support = f.support();

    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    for (uint32_t i = 0; i < k; ++i)
        for (uint32_t j = i + 1; j < k; ++j) pairs.push_back({i, j});
    const uint32_t slots = k + static_cast<uint32_t>(pairs.size());

    uint64_t combos = 1;
    for (uint32_t s = 0; s < slots; ++s) combos *= 3;

    auto magnitude_at = [&](uint64_t t) {
        return abs_rational(f.value_at_index(gf2::assignment_to_index(static_cast<uint32_t>(t), k)));
    };

    for (uint64_t combo = 0; combo < combos; ++combo) {
        uint64_t c = combo;
        std::vector<int> pin(k), link(pairs.size());
        for (uint32_t v = 0; v < k; ++v, c /= 3) pin[v] = static_cast<int>(c % 3);  // 0 none, 1 =0, 2 =1
        for (size_t p = 0; p < pairs.size(); ++p, c /= 3) link[p] = static_cast<int>(c % 3);

        std::vector<uint64_t> defined;
        for (uint64_t t = 0; t < (uint64_t{1} << k); ++t) {
            bool ok = true;
            for (uint32_t v = 0; v < k && ok; ++v)
                if (pin[v]) ok = ((t >> v) & 1) == static_cast<uint64_t>(pin[v] - 1);
            for (size_t p = 0; p < pairs.size() && ok; ++p)
                if (link[p]) {
                    bool parity = ((t >> pairs[p].first) ^ (t >> pairs[p].second)) & 1;
                    ok = parity == (link[p] == 2);
                }
            if (ok) defined.push_back(t);
        }
        if (defined != support) continue;

        ParityClasses classes(k);
        for (uint32_t v = 0; v < k; ++v)
            if (pin[v]) classes.pin(v, pin[v] == 2);
        for (size_t p = 0; p < pairs.size(); ++p)
            if (link[p]) classes.merge(pairs[p].first, pairs[p].second, link[p] == 2);
        if (classes.contradiction()) continue;

        std::vector<uint32_t> roots;
        for (uint32_t v = 0; v < k; ++v) {
            auto [root, parity] = classes.find(v);
            if (root == v && !classes.pinned_value(v))
                roots.push_back(v);
        }
        const uint32_t num_classes = static_cast<uint32_t>(roots.size());
        if (support.size() != (size_t{1} << num_classes)) continue;

        // Tuple reached from a vector of class bits.
        auto tuple_of = [&](uint32_t bits) {
            uint64_t t = 0;
            for (uint32_t v = 0; v < k; ++v) {
                bool value;
                if (auto pv = classes.pinned_value(v)) {
                    value = *pv;
                } else {
                    auto [root, parity] = classes.find(v);
                    uint32_t cls = 0;
                    while (roots[cls] != root) ++cls;
                    value = (((bits >> cls) & 1) != 0) ^ parity;
                }
                if (value) t |= uint64_t{1} << v;
            }
            return t;
        };

        bool modular = true;
        for (uint32_t u = 0; u < (uint32_t{1} << num_classes) && modular; ++u)
            for (uint32_t v = 0; v < (uint32_t{1} << num_classes) && modular; ++v)
                modular = magnitude_at(tuple_of(u)) * magnitude_at(tuple_of(v)) ==
                          magnitude_at(tuple_of(u & v)) * magnitude_at(tuple_of(u | v));
        if (modular) return {true, oracle_min_sign_degree(f)};
    }
    return {false, 0};
}

// Number of vertex subsets inducing an even number of edges.
inline BigInt oracle_even_edge_induced_subgraphs(uint32_t n,
                                                 const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
    BigInt count = 0;
    for (uint64_t subset = 0; subset < (uint64_t{1} << n); ++subset) {
        uint32_t inside = 0;
        for (const auto& [u, v] : edges)
            if (((subset >> u) & 1) && ((subset >> v) & 1)) ++inside;
        if (inside % 2 == 0) ++count;
    }
    return count;
}

inline bool oracle_all_degrees_even(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
    std::vector<uint32_t> degree(n, 0);
    for (const auto& [u, v] : edges) {
        degree[u] += 1;
        degree[v] += 1;
    }
    for (uint32_t d : degree)
        if (d % 2) return false;
    return true;
}

}  // namespace wbcsp::test
