#include "wbcsp/gf2.hpp"

#include "wbcsp/errors.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

namespace wbcsp::gf2 {

namespace {

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string default_name(uint32_t v) { return "x" + std::to_string(v + 1); }

}  // namespace

Poly Poly::one() {
    Poly p;
    p.monomials_.insert(Monomial{});
    return p;
}

Poly Poly::var(uint32_t v) {
    Poly p;
    p.monomials_.insert(Monomial{v});
    return p;
}

bool Poly::is_one() const {
    return monomials_.size() == 1 && monomials_.begin()->empty();
}

int Poly::degree() const {
    size_t d = 0;
    for (const Monomial& m : monomials_) d = std::max(d, m.size());
    return static_cast<int>(d);
}

std::vector<uint32_t> Poly::variables() const {
    std::vector<uint32_t> vars;
    for (const Monomial& m : monomials_) vars.insert(vars.end(), m.begin(), m.end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

bool Poly::depends_on(uint32_t v) const {
    for (const Monomial& m : monomials_)
        if (std::binary_search(m.begin(), m.end(), v)) return true;
    return false;
}

void Poly::toggle(Monomial m) {
    assert(std::is_sorted(m.begin(), m.end()));
    auto it = monomials_.find(m);
    if (it != monomials_.end())
        monomials_.erase(it);
    else
        monomials_.insert(std::move(m));
}

bool Poly::evaluate(uint64_t assignment) const {
    bool acc = false;
    for (const Monomial& m : monomials_) {
        bool term = true;
        for (uint32_t v : m) term &= (assignment >> v) & 1;
        acc ^= term;
    }
    return acc;
}

bool Poly::evaluate(const std::vector<uint8_t>& assignment) const {
    bool acc = false;
    for (const Monomial& m : monomials_) {
        bool term = true;
        for (uint32_t v : m) term &= assignment[v] != 0;
        acc ^= term;
    }
    return acc;
}

Poly Poly::operator^(const Poly& other) const {
    Poly out = *this;
    out ^= other;
    return out;
}

Poly& Poly::operator^=(const Poly& other) {
    for (const Monomial& m : other.monomials_) toggle(m);
    return *this;
}

Poly Poly::operator*(const Poly& other) const {
    Poly out;
    for (const Monomial& a : monomials_)
        for (const Monomial& b : other.monomials_) out.toggle(merge_monomials(a, b));
    return out;
}

Poly Poly::substitute(uint32_t v, const Poly& replacement) const {
    Poly out;
    for (const Monomial& m : monomials_) {
        if (!std::binary_search(m.begin(), m.end(), v)) {
            out.toggle(m);
            continue;
        }
        Monomial rest;
        rest.reserve(m.size() - 1);
        for (uint32_t u : m)
            if (u != v) rest.push_back(u);
        for (const Monomial& r : replacement.monomials_) out.toggle(merge_monomials(rest, r));
    }
    return out;
}

Poly Poly::rename(const std::vector<uint32_t>& mapping) const {
    Poly out;
    for (const Monomial& m : monomials_) {
        Monomial mapped;
        mapped.reserve(m.size());
        for (uint32_t v : m) mapped.push_back(mapping.at(v));
        std::sort(mapped.begin(), mapped.end());
        mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
        out.toggle(std::move(mapped));
    }
    return out;
}

std::string Poly::to_string() const { return to_string(default_name); }

std::string Poly::to_string(const std::function<std::string(uint32_t)>& name) const {
    if (monomials_.empty()) return "0";
    std::vector<const Monomial*> order;
    order.reserve(monomials_.size());
    for (const Monomial& m : monomials_) order.push_back(&m);
    std::sort(order.begin(), order.end(), [](const Monomial* a, const Monomial* b) {
        if (a->size() != b->size()) return a->size() > b->size();
        return *a < *b;
    });
    std::ostringstream out;
    bool first = true;
    for (const Monomial* m : order) {
        if (!first) out << '+';
        first = false;
        if (m->empty()) {
            out << '1';
            continue;
        }
        for (size_t i = 0; i < m->size(); ++i) {
            if (i) out << '*';
            out << name((*m)[i]);
        }
    }
    return out.str();
}

void LinearEquation::xor_with(const LinearEquation& other) {
    assert(coeffs.size() == other.coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] ^= other.coeffs[i];
    rhs ^= other.rhs;
}

bool LinearEquation::coeffs_zero() const {
    for (uint64_t w : coeffs)
        if (w) return false;
    return true;
}

int LinearEquation::top_variable() const {
    for (size_t i = coeffs.size(); i-- > 0;)
        if (coeffs[i]) return static_cast<int>(i * 64 + 63 - std::countl_zero(coeffs[i]));
    return -1;
}

bool LinearEquation::evaluate(uint64_t assignment) const {
    // Only meaningful for universes of at most 64 variables.
    uint64_t overlap = coeffs.empty() ? 0 : (coeffs[0] & assignment);
    return ((std::popcount(overlap) & 1) != 0) != rhs;
}

bool LinearSystem::satisfied_by(uint64_t assignment) const {
    for (const LinearEquation& eq : equations)
        if (eq.evaluate(assignment)) return false;
    return true;
}

std::string LinearSystem::to_string(const std::function<std::string(uint32_t)>& name) const {
    std::ostringstream out;
    bool first_eq = true;
    for (const LinearEquation& eq : equations) {
        if (!first_eq) out << " ; ";
        first_eq = false;
        bool first = true;
        for (uint32_t v = 0; v < num_vars; ++v) {
            if (!eq.get(v)) continue;
            if (!first) out << '+';
            first = false;
            out << name(v);
        }
        if (first) out << '0';
        out << '=' << (eq.rhs ? '1' : '0');
    }
    return out.str();
}

Poly anf_from_table(const std::vector<uint8_t>& bits, uint32_t num_vars) {
    if (num_vars > 26 || bits.size() != (size_t{1} << num_vars))
        throw PreconditionError("anf_from_table: table size must be 2^num_vars");
    std::vector<uint8_t> work(bits);
    for (uint32_t j = 0; j < num_vars; ++j) {
        uint32_t bit = uint32_t{1} << j;
        for (uint32_t i = 0; i < work.size(); ++i)
            if (i & bit) work[i] ^= work[i ^ bit];
    }
    Poly out;
    for (uint32_t i = 0; i < work.size(); ++i) {
        if (!work[i]) continue;
        Monomial m;
        for (uint32_t b = 0; b < num_vars; ++b)
            if (i & (uint32_t{1} << b)) m.push_back(num_vars - 1 - b);
        std::sort(m.begin(), m.end());
        out.toggle(std::move(m));
    }
    return out;
}

uint32_t index_to_assignment(uint32_t index, uint32_t num_vars) {
    uint32_t assignment = 0;
    for (uint32_t v = 0; v < num_vars; ++v)
        if (index & (uint32_t{1} << (num_vars - 1 - v))) assignment |= uint32_t{1} << v;
    return assignment;
}

uint32_t assignment_to_index(uint32_t assignment, uint32_t num_vars) {
    return index_to_assignment(assignment, num_vars);
}

namespace {

// Reduces v against the basis (masks keyed by their top set bit); inserts
// and returns true when independent.
bool basis_insert(std::vector<uint64_t>& basis_by_top, uint64_t v) {
    while (v) {
        int top = 63 - std::countl_zero(v);
        uint64_t& slot = basis_by_top[top];
        if (!slot) {
            slot = v;
            return true;
        }
        v ^= slot;
    }
    return false;
}

std::vector<uint64_t> sorted_unique(std::vector<uint64_t> tuples) {
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    return tuples;
}

}  // namespace

bool affine_support_test(const std::vector<uint64_t>& tuples, uint32_t num_vars) {
    if (num_vars > 63) throw PreconditionError("affine_support_test: more than 63 variables");
    std::vector<uint64_t> s = sorted_unique(tuples);
    if (s.empty()) return true;
    std::vector<uint64_t> basis(64, 0);
    uint32_t dim = 0;
    for (uint64_t t : s)
        if (basis_insert(basis, t ^ s[0])) ++dim;
    return s.size() == (size_t{1} << dim);
}

LinearSystem support_to_system(const std::vector<uint64_t>& tuples, uint32_t num_vars) {
    if (num_vars > 63) throw PreconditionError("support_to_system: more than 63 variables");
    std::vector<uint64_t> s = sorted_unique(tuples);
    if (s.empty()) throw PreconditionError("support_to_system: empty support");

    uint64_t base = s[0];
    std::vector<uint64_t> basis(64, 0);
    uint32_t dim = 0;
    for (uint64_t t : s)
        if (basis_insert(basis, t ^ base)) ++dim;
    if (s.size() != (size_t{1} << dim))
        throw PreconditionError("support_to_system: support is not affine");

    // RREF of the span basis, pivots ascending, to read off the null space.
    std::vector<uint64_t> rows;
    for (uint64_t b : basis)
        if (b) rows.push_back(b);
    std::vector<uint32_t> pivots;
    size_t next_row = 0;
    for (uint32_t col = 0; col < num_vars && next_row < rows.size(); ++col) {
        size_t found = next_row;
        while (found < rows.size() && !((rows[found] >> col) & 1)) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[next_row], rows[found]);
        for (size_t r = 0; r < rows.size(); ++r)
            if (r != next_row && ((rows[r] >> col) & 1)) rows[r] ^= rows[next_row];
        pivots.push_back(col);
        ++next_row;
    }

    std::vector<bool> is_pivot(num_vars, false);
    for (uint32_t p : pivots) is_pivot[p] = true;

    // One dual vector per free column: orthogonal to every span row.
    struct Row {
        uint64_t mask;
        bool rhs;
    };
    std::vector<Row> dual;
    for (uint32_t f = 0; f < num_vars; ++f) {
        if (is_pivot[f]) continue;
        uint64_t mask = uint64_t{1} << f;
        for (size_t r = 0; r < pivots.size(); ++r)
            if ((rows[r] >> f) & 1) mask |= uint64_t{1} << pivots[r];
        dual.push_back({mask, (std::popcount(mask & base) & 1) != 0});
    }

    // Canonical form: eliminate from the highest column down, so each
    // equation solves its highest variable in terms of lower free ones.
    std::vector<Row> reduced;
    size_t used = 0;
    for (int col = static_cast<int>(num_vars) - 1; col >= 0 && used < dual.size(); --col) {
        size_t found = used;
        while (found < dual.size() && !((dual[found].mask >> col) & 1)) ++found;
        if (found == dual.size()) continue;
        std::swap(dual[used], dual[found]);
        for (size_t r = 0; r < dual.size(); ++r)
            if (r != used && ((dual[r].mask >> col) & 1)) {
                dual[r].mask ^= dual[used].mask;
                dual[r].rhs ^= dual[used].rhs;
            }
        ++used;
    }
    std::sort(dual.begin(), dual.end(), [](const Row& a, const Row& b) {
        return (63 - std::countl_zero(a.mask)) < (63 - std::countl_zero(b.mask));
    });

    LinearSystem sys(num_vars);
    for (const Row& row : dual) {
        LinearEquation eq(num_vars, row.rhs);
        for (uint32_t v = 0; v < num_vars; ++v)
            if ((row.mask >> v) & 1) eq.set(v, true);
        sys.add(std::move(eq));
    }
    return sys;
}

std::vector<uint32_t> system_pivots(const LinearSystem& sys) {
    std::vector<uint32_t> pivots;
    pivots.reserve(sys.equations.size());
    for (const LinearEquation& eq : sys.equations) {
        int top = eq.top_variable();
        if (top >= 0) pivots.push_back(static_cast<uint32_t>(top));
    }
    return pivots;
}

BigInt count_linear(const LinearSystem& sys) {
    std::vector<LinearEquation> reduced;
    std::vector<int> pivot_of;
    for (LinearEquation eq : sys.equations) {
        for (size_t i = 0; i < reduced.size(); ++i)
            if (eq.get(static_cast<uint32_t>(pivot_of[i]))) eq.xor_with(reduced[i]);
        if (eq.coeffs_zero()) {
            if (eq.rhs) return 0;
            continue;
        }
        pivot_of.push_back(eq.top_variable());
        reduced.push_back(std::move(eq));
    }
    return pow2(sys.num_vars - static_cast<uint32_t>(reduced.size()));
}

namespace {

void check_degree_and_range(const Poly& q, uint32_t num_vars, const char* who) {
    if (q.degree() > 2) throw PreconditionError(std::string(who) + ": polynomial degree exceeds 2");
    std::vector<uint32_t> vars = q.variables();
    if (!vars.empty() && vars.back() >= num_vars)
        throw PreconditionError(std::string(who) + ": variable index out of range");
}

// num_vars is the count of free variables; indices may be sparse (after
// linear elimination the surviving variables keep their original ids).
BigInt count_quadratic_sparse(const Poly& q, uint32_t num_vars, const QuadraticStepObserver& observer) {
    Poly cur = q;
    uint32_t vars_left = num_vars;
    BigInt scale = 1;
    BigInt offset = 0;

    for (;;) {
        const Monomial* pair = nullptr;
        for (const Monomial& m : cur.monomials())
            if (m.size() == 2) {
                pair = &m;
                break;
            }
        if (!pair) break;

        uint32_t xi = (*pair)[0], xj = (*pair)[1];
        Poly a, b, c;  // cur = xi*xj ^ xi*a ^ xj*b ^ c
        for (const Monomial& m : cur.monomials()) {
            bool has_i = std::binary_search(m.begin(), m.end(), xi);
            bool has_j = std::binary_search(m.begin(), m.end(), xj);
            Monomial rest;
            for (uint32_t v : m)
                if (v != xi && v != xj) rest.push_back(v);
            if (has_i && has_j)
                continue;  // the isolated pair itself
            else if (has_i)
                a.toggle(std::move(rest));
            else if (has_j)
                b.toggle(std::move(rest));
            else
                c.toggle(std::move(rest));
        }
        Poly residual = (a * b) ^ c;

        // The step is only valid if (xi^b)(xj^a) ^ residual recomposes to
        // the polynomial being counted.
        Poly recomposed = ((Poly::var(xi) ^ b) * (Poly::var(xj) ^ a)) ^ residual;
        if (!(recomposed == cur))
            throw std::logic_error("count_quadratic: hyperbolic split failed to recompose");
        if (observer) observer(QuadraticStep{cur, xi, xj, a, b, residual, vars_left});

        // N(cur, v) = 2^(v-2) + 2 N(residual, v-2)
        offset += scale * pow2(vars_left - 2);
        scale *= 2;
        cur = std::move(residual);
        vars_left -= 2;
    }

    BigInt base;
    if (cur.is_zero())
        base = pow2(vars_left);
    else if (cur.is_one())
        base = 0;
    else
        base = pow2(vars_left - 1);
    return offset + scale * base;
}

}  // namespace

BigInt count_quadratic(const Poly& q, uint32_t num_vars, const QuadraticStepObserver& observer) {
    check_degree_and_range(q, num_vars, "count_quadratic");
    return count_quadratic_sparse(q, num_vars, observer);
}

BigInt count_quadratic_with_linear(const Poly& q, const LinearSystem& sys, uint32_t num_vars,
                                   const QuadraticStepObserver& observer) {
    check_degree_and_range(q, num_vars, "count_quadratic_with_linear");
    if (sys.num_vars != num_vars)
        throw PreconditionError("count_quadratic_with_linear: system universe mismatch");

    Poly reduced = q;
    std::vector<LinearEquation> rows = sys.equations;
    uint32_t eliminated = 0;
    while (!rows.empty()) {
        LinearEquation eq = std::move(rows.back());
        rows.pop_back();
        if (eq.coeffs_zero()) {
            if (eq.rhs) return 0;
            continue;
        }
        uint32_t pivot = static_cast<uint32_t>(eq.top_variable());
        // x_pivot = rhs xor (sum of the other variables in eq)
        Poly h = Poly::constant(eq.rhs);
        for (uint32_t v = 0; v < num_vars; ++v)
            if (v != pivot && eq.get(v)) h ^= Poly::var(v);
        reduced = reduced.substitute(pivot, h);
        for (LinearEquation& r : rows)
            if (r.get(pivot)) r.xor_with(eq);
        ++eliminated;
    }
    return count_quadratic_sparse(reduced, num_vars - eliminated, observer);
}

}  // namespace wbcsp::gf2
