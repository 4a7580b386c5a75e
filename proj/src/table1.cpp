#include "wbcsp/reductions.hpp"

namespace wbcsp::reductions {

namespace {

// Variables 0=x, 1=y, 2=z.  Monomial shorthands for the table.
const std::vector<uint32_t> XYZ{0, 1, 2};
const std::vector<uint32_t> XY{0, 1};
const std::vector<uint32_t> XZ{0, 2};
const std::vector<uint32_t> YZ{1, 2};
const std::vector<uint32_t> X{0};
const std::vector<uint32_t> Y{1};
const std::vector<uint32_t> Z{2};

Table1Row row(std::string polynomial, std::vector<std::vector<uint32_t>> monomials, int project_position,
              std::array<std::array<int, 2>, 2> a, std::array<std::array<int, 2>, 2> a_prime) {
    return Table1Row{std::move(polynomial), std::move(monomials), project_position == 0,
                     static_cast<uint32_t>(project_position), a, a_prime};
}

std::vector<Table1Row> build_rows() {
    // Transcribed row by row; 0 in the third argument means contraction.
    return {
        row("xyz", {XYZ}, 3, {{{2, 2}, {2, 0}}}, {{{64, 16}, {16, 16}}}),
        row("xyz+x", {XYZ, X}, 3, {{{2, 2}, {-2, 0}}}, {{{64, 16}, {16, 16}}}),
        row("xyz+x+y", {XYZ, X, Y}, 3, {{{2, -2}, {-2, 0}}}, {{{64, 16}, {16, 16}}}),
        row("xyz+x+y+z", {XYZ, X, Y, Z}, 0, {{{4, -2}, {-2, 4}}}, {{{400, 256}, {256, 400}}}),
        row("xyz+xy", {XYZ, XY}, 3, {{{2, 2}, {2, 0}}}, {{{64, 16}, {16, 16}}}),
        row("xyz+xy+x", {XYZ, XY, X}, 3, {{{2, 2}, {-2, 0}}}, {{{64, 16}, {16, 16}}}),
        row("xyz+xy+x+y", {XYZ, XY, X, Y}, 3, {{{2, -2}, {-2, 0}}}, {{{64, 16}, {16, 16}}}),
        row("xyz+xy+z", {XYZ, XY, Z}, 2, {{{2, -2}, {0, -2}}}, {{{64, 16}, {16, 16}}}),
        row("xyz+xy+x+z", {XYZ, XY, X, Z}, 2, {{{2, -2}, {0, 2}}}, {{{64, 16}, {16, 16}}}),
        row("xyz+xy+x+y+z", {XYZ, XY, X, Y, Z}, 0, {{{2, -4}, {0, 2}}}, {{{400, 64}, {64, 16}}}),
        row("xyz+xy+xz", {XYZ, XY, XZ}, 3, {{{2, 2}, {0, -2}}}, {{{64, 16}, {16, 16}}}),
        row("xyz+xy+xz+x", {XYZ, XY, XZ, X}, 3, {{{2, 2}, {0, 2}}}, {{{64, 16}, {16, 16}}}),
        row("xyz+xy+xz+y", {XYZ, XY, XZ, Y}, 3, {{{2, -2}, {0, 2}}}, {{{64, 16}, {16, 16}}}),
        row("xyz+xy+xz+x+y", {XYZ, XY, XZ, X, Y}, 3, {{{2, -2}, {0, -2}}}, {{{64, 16}, {16, 16}}}),
        row("xyz+xy+xz+y+z", {XYZ, XY, XZ, Y, Z}, 0, {{{2, -4}, {0, 2}}}, {{{400, 64}, {64, 16}}}),
        row("xyz+xy+xz+x+y+z", {XYZ, XY, XZ, X, Y, Z}, 1, {{{0, -2}, {-2, 2}}}, {{{16, 16}, {16, 64}}}),
        row("xyz+xy+xz+yz", {XYZ, XY, XZ, YZ}, 0, {{{4, -2}, {-2, 4}}}, {{{400, 256}, {256, 400}}}),
        row("xyz+xy+xz+yz+x", {XYZ, XY, XZ, YZ, X}, 1, {{{0, 2}, {2, -2}}}, {{{16, 16}, {16, 64}}}),
        row("xyz+xy+xz+yz+x+y", {XYZ, XY, XZ, YZ, X, Y}, 2, {{{0, 2}, {-2, 2}}}, {{{16, 16}, {16, 64}}}),
        row("xyz+xy+xz+yz+x+y+z", {XYZ, XY, XZ, YZ, X, Y, Z}, 3, {{{0, -2}, {-2, -2}}},
            {{{16, 16}, {16, 64}}}),
    };
}

BooleanFunction sign_function(const Table1Row& row) {
    std::vector<Rational> values(8);
    for (uint32_t i = 0; i < 8; ++i) {
        bool s = false;
        for (const std::vector<uint32_t>& m : row.monomials) {
            bool term = true;
            for (uint32_t v : m) term &= (i >> (2 - v)) & 1;  // index bit order x, y, z
            s ^= term;
        }
        values[i] = s ? Rational(-1) : Rational(1);
    }
    return BooleanFunction(3, std::move(values));
}

Matrix2 from_ints(const std::array<std::array<int, 2>, 2>& m) {
    return {Rational(m[0][0]), Rational(m[0][1]), Rational(m[1][0]), Rational(m[1][1])};
}

}  // namespace

const std::vector<Table1Row>& table1_rows() {
    static const std::vector<Table1Row> rows = build_rows();
    return rows;
}

std::vector<Table1RowResult> table1_verify() {
    std::vector<Table1RowResult> results;
    for (const Table1Row& row : table1_rows()) {
        BooleanFunction f = sign_function(row);
        BooleanFunction reduced = row.use_contract ? contract(f) : project_out(f, row.project_position);

        Table1RowResult result;
        result.row = &row;
        result.method =
            row.use_contract ? "Contract" : std::string("Project out ") + "xyz"[row.project_position - 1];
        result.a = to_matrix(reduced);
        result.a_prime = (result.a * result.a.transpose()).entrywise_square();
        result.a_matches = result.a == from_ints(row.expected_a);
        result.a_prime_matches = result.a_prime == from_ints(row.expected_a_prime);
        result.bulatov_grohe = bulatov_grohe_check(result.a_prime);
        results.push_back(std::move(result));
    }
    return results;
}

}  // namespace wbcsp::reductions
