#include "wbcsp/io.hpp"

#include "wbcsp/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace wbcsp::io {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

// Tokenized non-blank lines with '#' comments stripped.
std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream split(raw);
        Line line{number, {}};
        std::string token;
        while (split >> token) line.tokens.push_back(token);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

void expect_header(const std::vector<Line>& lines, const std::string& kind) {
    if (lines.empty()) throw ParseError(0, "empty document, expected '" + kind + " v1'");
    const Line& first = lines[0];
    if (first.tokens.size() != 2 || first.tokens[0] != kind || first.tokens[1] != "v1")
        throw ParseError(first.number, "expected header '" + kind + " v1'");
}

Rational parse_value(const std::string& token, int line) {
    try {
        return parse_rational(token);
    } catch (const PreconditionError& e) {
        throw ParseError(line, e.what());
    }
}

uint32_t parse_uint(const std::string& token, int line, const char* what) {
    try {
        size_t pos = 0;
        unsigned long value = std::stoul(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        return static_cast<uint32_t>(value);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + token + "'");
    }
}

// fn <name> <arity> : <2^arity values>
void parse_fn_line(const Line& line, ConstraintLanguage& language) {
    if (line.tokens.size() < 4 || line.tokens[3] != ":")
        throw ParseError(line.number, "expected 'fn <name> <arity> : <values>'");
    const std::string& name = line.tokens[1];
    uint32_t arity = parse_uint(line.tokens[2], line.number, "an arity");
    if (arity < 1 || arity > kMaxArity)
        throw ParseError(line.number, "arity must be in [1, " + std::to_string(kMaxArity) + "]");
    size_t expected = size_t{1} << arity;
    if (line.tokens.size() - 4 != expected)
        throw ParseError(line.number, "function '" + name + "' needs " + std::to_string(expected) +
                                          " values, got " + std::to_string(line.tokens.size() - 4));
    std::vector<Rational> values;
    values.reserve(expected);
    for (size_t i = 4; i < line.tokens.size(); ++i)
        values.push_back(parse_value(line.tokens[i], line.number));
    if (language.contains(name)) throw ParseError(line.number, "duplicate function '" + name + "'");
    language.add(name, BooleanFunction(arity, std::move(values)));
}

std::string dirname_of(const std::string& path) {
    size_t slash = path.find_last_of('/');
    if (slash == std::string::npos) return ".";
    return path.substr(0, slash);
}

}  // namespace

ConstraintLanguage parse_language(std::istream& in) {
    std::vector<Line> lines = read_lines(in);
    expect_header(lines, "wbcsp-language");
    ConstraintLanguage language;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].tokens[0] != "fn")
            throw ParseError(lines[i].number, "unexpected directive '" + lines[i].tokens[0] + "'");
        parse_fn_line(lines[i], language);
    }
    if (language.empty()) throw ParseError(0, "language defines no functions");
    return language;
}

ConstraintLanguage parse_language_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_language(in);
}

std::string serialize_language(const ConstraintLanguage& language) {
    std::ostringstream out;
    out << "wbcsp-language v1\n";
    for (uint32_t i = 0; i < language.size(); ++i) {
        const BooleanFunction& fn = language.at(i);
        out << "fn " << language.name_at(i) << ' ' << fn.arity() << " :";
        for (const Rational& v : fn.values()) out << ' ' << format_rational(v);
        out << '\n';
    }
    return out.str();
}

Instance parse_instance(std::istream& in, const std::string& base_dir) {
    std::vector<Line> lines = read_lines(in);
    expect_header(lines, "wbcsp-instance");

    ConstraintLanguage language;
    bool language_loaded = false;
    std::vector<std::string> variables;
    struct PendingConstraint {
        int line;
        std::string function;
        std::vector<std::string> scope;
    };
    std::vector<PendingConstraint> pending;

    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& directive = line.tokens[0];
        if (directive == "language") {
            if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'language <path>'");
            if (language_loaded) throw ParseError(line.number, "language referenced twice");
            std::string path = line.tokens[1];
            if (!path.empty() && path[0] != '/') path = base_dir + "/" + path;
            ConstraintLanguage referenced = parse_language_file(path);
            for (uint32_t j = 0; j < referenced.size(); ++j) {
                if (language.contains(referenced.name_at(j)))
                    throw ParseError(line.number, "duplicate function '" + referenced.name_at(j) + "'");
                language.add(referenced.name_at(j), referenced.at(j));
            }
            language_loaded = true;
        } else if (directive == "fn") {
            parse_fn_line(line, language);
        } else if (directive == "var") {
            if (line.tokens.size() < 2) throw ParseError(line.number, "expected 'var <name>...'");
            for (size_t j = 1; j < line.tokens.size(); ++j) {
                for (const std::string& existing : variables)
                    if (existing == line.tokens[j])
                        throw ParseError(line.number, "duplicate variable '" + line.tokens[j] + "'");
                variables.push_back(line.tokens[j]);
            }
        } else if (directive == "constraint") {
            if (line.tokens.size() < 2) throw ParseError(line.number, "expected 'constraint <fn> <vars>'");
            PendingConstraint c{line.number, line.tokens[1], {}};
            c.scope.assign(line.tokens.begin() + 2, line.tokens.end());
            if (!language.contains(c.function))
                throw ParseError(line.number, "function '" + c.function + "' not declared before use");
            for (const std::string& v : c.scope)
                if (std::find(variables.begin(), variables.end(), v) == variables.end())
                    throw ParseError(line.number, "variable '" + v + "' not declared before use");
            pending.push_back(std::move(c));
        } else {
            throw ParseError(line.number, "unexpected directive '" + directive + "'");
        }
    }

    if (language.empty()) throw ParseError(0, "instance has no language");
    if (variables.empty()) throw ParseError(0, "instance declares no variables");

    Instance instance(std::move(language), std::move(variables));
    for (const PendingConstraint& c : pending) {
        try {
            instance.add_constraint(c.function, c.scope);
        } catch (const PreconditionError& e) {
            throw ParseError(c.line, e.what());
        }
    }
    return instance;
}

Instance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_instance(in, dirname_of(path));
}

std::string serialize_instance(const Instance& instance, const std::string& language_path) {
    std::ostringstream out;
    out << "wbcsp-instance v1\n";
    if (!language_path.empty()) {
        out << "language " << language_path << '\n';
    } else {
        const ConstraintLanguage& lang = instance.language();
        for (uint32_t i = 0; i < lang.size(); ++i) {
            const BooleanFunction& fn = lang.at(i);
            out << "fn " << lang.name_at(i) << ' ' << fn.arity() << " :";
            for (const Rational& v : fn.values()) out << ' ' << format_rational(v);
            out << '\n';
        }
    }
    for (const std::string& v : instance.variables()) out << "var " << v << '\n';
    for (const Constraint& c : instance.constraints()) {
        out << "constraint " << instance.language().name_at(c.function);
        for (uint32_t v : c.scope) out << ' ' << instance.variables()[v];
        out << '\n';
    }
    return out.str();
}

reductions::DirectedMultigraph parse_graph(std::istream& in) {
    std::vector<Line> lines = read_lines(in);
    expect_header(lines, "wbcsp-graph");
    reductions::DirectedMultigraph graph;
    auto vertex_index = [&](const std::string& name, int line_no) {
        for (uint32_t i = 0; i < graph.vertices.size(); ++i)
            if (graph.vertices[i] == name) return i;
        throw ParseError(line_no, "vertex '" + name + "' not declared before use");
    };
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens[0] == "vertex") {
            if (line.tokens.size() < 2) throw ParseError(line.number, "expected 'vertex <name>...'");
            for (size_t j = 1; j < line.tokens.size(); ++j) {
                try {
                    graph.add_vertex(line.tokens[j]);
                } catch (const PreconditionError& e) {
                    throw ParseError(line.number, e.what());
                }
            }
        } else if (line.tokens[0] == "edge") {
            if (line.tokens.size() != 3) throw ParseError(line.number, "expected 'edge <from> <to>'");
            uint32_t from = vertex_index(line.tokens[1], line.number);
            uint32_t to = vertex_index(line.tokens[2], line.number);
            graph.add_edge(from, to);
        } else {
            throw ParseError(line.number, "unexpected directive '" + line.tokens[0] + "'");
        }
    }
    return graph;
}

reductions::DirectedMultigraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_graph(in);
}

std::string serialize_graph(const reductions::DirectedMultigraph& graph) {
    std::ostringstream out;
    out << "wbcsp-graph v1\n";
    for (const std::string& v : graph.vertices) out << "vertex " << v << '\n';
    for (const auto& [from, to] : graph.edges)
        out << "edge " << graph.vertices[from] << ' ' << graph.vertices[to] << '\n';
    return out.str();
}

std::string serialize_matrix(const reductions::Matrix2& matrix) {
    std::ostringstream out;
    out << "wbcsp-matrix v1\n";
    out << "row " << format_rational(matrix.a00) << ' ' << format_rational(matrix.a01) << '\n';
    out << "row " << format_rational(matrix.a10) << ' ' << format_rational(matrix.a11) << '\n';
    return out.str();
}

namespace {

std::string var_name(uint32_t v) { return "x" + std::to_string(v + 1); }

std::string describe_affine(const PureAffineForm& form) {
    std::ostringstream out;
    out << "degree " << form.degree << " weight " << format_rational(form.weight) << " sign "
        << form.sign.to_string() << " support ";
    if (form.support.equations.empty())
        out << "none";
    else
        out << form.support.to_string(var_name);
    return out.str();
}

std::string describe_product(const ProductForm& form) {
    std::ostringstream out;
    out << "degree " << form.degree << " sign " << form.sign.to_string() << " pins ";
    if (form.pins.empty()) out << "none";
    for (size_t i = 0; i < form.pins.size(); ++i) {
        if (i) out << ';';
        out << var_name(form.pins[i].first) << '=' << (form.pins[i].second ? '1' : '0');
    }
    out << " links ";
    if (form.links.empty()) out << "none";
    for (size_t i = 0; i < form.links.size(); ++i) {
        if (i) out << ';';
        out << var_name(form.links[i].keep) << (form.links[i].parity ? "!=" : "=")
            << var_name(form.links[i].determined);
    }
    out << " unaries ";
    for (size_t i = 0; i < form.unary.size(); ++i) {
        if (i) out << ';';
        out << '(' << format_rational(form.unary[i].first) << ',' << format_rational(form.unary[i].second)
            << ')';
    }
    return out.str();
}

}  // namespace

std::string verdict_report(const LanguageVerdict& verdict) {
    std::ostringstream out;
    out << "wbcsp-verdict v1\n";
    for (const FunctionReport& fn : verdict.functions) {
        out << "function " << fn.name << " pure-affine ";
        if (fn.affine.form)
            out << "yes " << describe_affine(*fn.affine.form);
        else
            out << "no reason " << to_string(*fn.affine.reason);
        out << '\n';
        out << "function " << fn.name << " product-type ";
        if (fn.product.form)
            out << "yes " << describe_product(*fn.product.form);
        else
            out << "no reason " << to_string(*fn.product.reason);
        out << '\n';
    }
    out << "verdict " << to_string(verdict.outcome) << '\n';
    if (verdict.certificate) {
        out << "certificate affine " << verdict.certificate->affine_witness << ' '
            << to_string(verdict.certificate->affine_reason) << " product "
            << verdict.certificate->product_witness << ' ' << to_string(verdict.certificate->product_reason)
            << '\n';
    }
    return out.str();
}

}  // namespace wbcsp::io
