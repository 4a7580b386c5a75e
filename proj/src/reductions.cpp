#include "wbcsp/reductions.hpp"

#include "wbcsp/errors.hpp"

#include <algorithm>
#include <sstream>

namespace wbcsp::reductions {

Matrix2 Matrix2::entrywise_square() const {
    return {a00 * a00, a01 * a01, a10 * a10, a11 * a11};
}

Matrix2 Matrix2::operator*(const Matrix2& other) const {
    return {a00 * other.a00 + a01 * other.a10, a00 * other.a01 + a01 * other.a11,
            a10 * other.a00 + a11 * other.a10, a10 * other.a01 + a11 * other.a11};
}

std::string Matrix2::to_string() const {
    std::ostringstream out;
    out << "[[" << format_rational(a00) << ',' << format_rational(a01) << "],[" << format_rational(a10)
        << ',' << format_rational(a11) << "]]";
    return out.str();
}

uint32_t DirectedMultigraph::add_vertex(const std::string& name) {
    for (uint32_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) throw PreconditionError("duplicate vertex '" + name + "'");
    vertices.push_back(name);
    return static_cast<uint32_t>(vertices.size() - 1);
}

void DirectedMultigraph::add_edge(uint32_t from, uint32_t to) {
    if (from >= vertices.size() || to >= vertices.size())
        throw PreconditionError("edge endpoint out of range");
    edges.emplace_back(from, to);
}

BooleanFunction project_out(const BooleanFunction& f, uint32_t position) {
    const uint32_t k = f.arity();
    if (k < 2) throw PreconditionError("project_out: arity must be at least 2");
    if (position < 1 || position > k) throw PreconditionError("project_out: position out of range");

    std::vector<Rational> values(size_t{1} << (k - 1), Rational(0));
    for (uint32_t i = 0; i < f.table_size(); ++i) {
        uint32_t out = 0;
        for (uint32_t t = 0, slot = 0; t < k; ++t) {
            if (t + 1 == position) continue;
            if (i & (uint32_t{1} << (k - 1 - t))) out |= uint32_t{1} << (k - 2 - slot);
            ++slot;
        }
        values[out] += f.value_at_index(i);
    }
    return BooleanFunction(k - 1, std::move(values));
}

BooleanFunction contract(const BooleanFunction& f) {
    if (f.arity() != 3) throw PreconditionError("contract: function must be ternary");
    std::vector<Rational> values(4, Rational(0));
    for (uint32_t x1 = 0; x1 < 2; ++x1)
        for (uint32_t x2 = 0; x2 < 2; ++x2)
            for (uint32_t y = 0; y < 2; ++y)
                for (uint32_t z = 0; z < 2; ++z)
                    values[(x1 << 1) | x2] += f.value_at_index((x1 << 2) | (y << 1) | z) *
                                              f.value_at_index((y << 2) | (z << 1) | x2);
    return BooleanFunction(2, std::move(values));
}

BooleanFunction scale(const BooleanFunction& f, const Rational& q) {
    if (q == 0) throw PreconditionError("scale: factor must be nonzero");
    std::vector<Rational> values = f.values();
    for (Rational& v : values) v *= q;
    return BooleanFunction(f.arity(), std::move(values));
}

std::pair<uint32_t, Rational> scale_instance_check(const Instance& instance,
                                                   const std::string& function_name, const Rational& q) {
    if (q == 0) throw PreconditionError("scale: factor must be nonzero");
    auto idx = instance.language().index_of(function_name);
    if (!idx) throw PreconditionError("unknown function '" + function_name + "'");
    uint32_t m = 0;
    for (const Constraint& c : instance.constraints())
        if (c.function == *idx) ++m;
    return {m, pow_rational(q, m)};
}

BooleanFunction square_function(const BooleanFunction& f) {
    std::vector<Rational> values = f.values();
    for (Rational& v : values) v *= v;
    return BooleanFunction(f.arity(), std::move(values));
}

ConstraintLanguage square_language(const ConstraintLanguage& language) {
    ConstraintLanguage squared;
    for (uint32_t i = 0; i < language.size(); ++i)
        squared.add(language.name_at(i), square_function(language.at(i)));
    return squared;
}

Instance pin_gadget(const Instance& instance, const std::string& variable, bool value) {
    uint32_t var = instance.variable_index(variable);
    BooleanFunction pin_fn = value ? delta1() : delta0();
    std::string base_name = value ? "delta1" : "delta0";

    ConstraintLanguage language = instance.language();
    std::string name = base_name;
    for (uint32_t suffix = 1; language.contains(name) && !(language.at(name) == pin_fn); ++suffix)
        name = base_name + "_" + std::to_string(suffix);
    if (!language.contains(name)) language.add(name, pin_fn);

    Instance out(std::move(language), instance.variables());
    for (const Constraint& c : instance.constraints()) out.add_constraint(c.function, c.scope);
    out.add_constraint(*out.language().index_of(name), {var});
    return out;
}

Matrix2 to_matrix(const BooleanFunction& f) {
    if (f.arity() != 2) throw PreconditionError("to_matrix: function must be binary");
    return {f.value_at_index(0), f.value_at_index(1), f.value_at_index(2), f.value_at_index(3)};
}

Rational eval_matrix(const Matrix2& a, const DirectedMultigraph& g, uint32_t max_vertices) {
    const uint32_t n = static_cast<uint32_t>(g.vertices.size());
    if (n > max_vertices)
        throw ResourceLimitError("eval_matrix: " + std::to_string(n) + " vertices exceeds the bound of " +
                                 std::to_string(max_vertices));
    const Rational* entries[2][2] = {{&a.a00, &a.a01}, {&a.a10, &a.a11}};
    Rational total(0);
    for (uint64_t coloring = 0; coloring < (uint64_t{1} << n); ++coloring) {
        Rational term(1);
        for (const auto& [x, y] : g.edges) {
            const Rational& entry = *entries[(coloring >> x) & 1][(coloring >> y) & 1];
            if (entry == 0) {
                term = 0;
                break;
            }
            term *= entry;
        }
        total += term;
    }
    return total;
}

namespace {

uint32_t add_gadget_vertex(DirectedMultigraph& g, size_t edge_index) {
    std::string name = "v_e" + std::to_string(edge_index);
    while (std::find(g.vertices.begin(), g.vertices.end(), name) != g.vertices.end()) name += "'";
    return g.add_vertex(name);
}

}  // namespace

DirectedMultigraph graph_gadget(const DirectedMultigraph& g, GadgetKind kind) {
    DirectedMultigraph out;
    out.vertices = g.vertices;
    if (kind == GadgetKind::square_entries) {
        for (const auto& e : g.edges) {
            out.edges.push_back(e);
            out.edges.push_back(e);
        }
        return out;
    }
    for (size_t i = 0; i < g.edges.size(); ++i) {
        auto [x, y] = g.edges[i];
        uint32_t mid = add_gadget_vertex(out, i);
        switch (kind) {
            case GadgetKind::a_at:
                out.add_edge(x, mid);
                out.add_edge(y, mid);
                break;
            case GadgetKind::ta_a:
                out.add_edge(mid, x);
                out.add_edge(mid, y);
                break;
            case GadgetKind::a_squared:
                out.add_edge(x, mid);
                out.add_edge(mid, y);
                break;
            case GadgetKind::square_entries:
                break;
        }
    }
    return out;
}

bool bulatov_grohe_check(const Matrix2& a) {
    if (!a.is_symmetric()) return false;
    int zeros = 0;
    for (const Rational* v : {&a.a00, &a.a01, &a.a10, &a.a11}) {
        if (*v < 0) return false;
        if (*v == 0) ++zeros;
    }
    return zeros <= 1 && a.determinant() != 0;
}

}  // namespace wbcsp::reductions
