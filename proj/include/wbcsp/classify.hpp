#pragma once

#include "wbcsp/function.hpp"
#include "wbcsp/gf2.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wbcsp {

// Why a function falls outside a class; doubles as the HARD certificate
// detail.
enum class FailureReason {
    non_uniform_magnitude,
    non_affine_support,
    support_not_pin_link_definable,
    weight_non_factorizable,
    degree_too_high,
};

std::string to_string(FailureReason reason);

// f(x) = w * (-1)^{s(x)} when x satisfies the support system, 0 otherwise.
// s is degree-minimized: no polynomial of strictly lower degree matches
// the signs on the support.
struct PureAffineForm {
    Rational weight;             // w > 0
    gf2::LinearSystem support;   // over the k function variables
    gf2::Poly sign;              // s, mentions only free (non-pivot) variables
    int degree = 0;              // deg(s)

    Rational evaluate(uint64_t assignment) const;
};

// f(x) = (-1)^{s(x)} * U_1(x_1)...U_k(x_k) * [pins and links hold].
// Normalized: every link's determined endpoint is the higher-indexed
// variable, determined and pinned variables have trivial unaries and are
// absent from s, and s is degree-minimized.
struct ProductForm {
    struct Link {
        uint32_t keep;        // class representative (lower index)
        uint32_t determined;  // higher index, fixed by this link
        bool parity;          // x_keep xor x_determined = parity (0: equal, 1: unequal)
    };

    std::vector<std::pair<Rational, Rational>> unary;  // (U_i(0), U_i(1)), nonnegative
    std::vector<std::pair<uint32_t, bool>> pins;       // x_i = c
    std::vector<Link> links;
    gf2::Poly sign;
    int degree = 0;
    std::vector<uint8_t> pinned;
    std::vector<uint8_t> determined;

    Rational evaluate(uint64_t assignment) const;
};

// Minimal-degree sign polynomial of f on its (nonempty, affine) support:
// parametrize the support by its free coordinates, take the ANF of the
// sign bit over them, and read it back through the identity substitution.
// Returns (degree, s).
std::pair<int, gf2::Poly> min_degree_sign(const BooleanFunction& f);

struct AffineClassification {
    std::optional<PureAffineForm> form;
    std::optional<FailureReason> reason;  // set iff form is absent
};

struct ProductClassification {
    std::optional<ProductForm> form;
    std::optional<FailureReason> reason;
};

AffineClassification classify_pure_affine(const BooleanFunction& f);
ProductClassification classify_product_type(const BooleanFunction& f);

enum class LanguageClass { FP_AFFINE, FP_PRODUCT, HARD };

std::string to_string(LanguageClass outcome);

struct FunctionReport {
    std::string name;
    uint32_t arity = 0;
    AffineClassification affine;
    ProductClassification product;
};

// Witnesses for a HARD verdict: f not pure affine of degree <= 2, g not
// of product type of degree <= 1.
struct HardCertificate {
    std::string affine_witness;
    FailureReason affine_reason;
    std::string product_witness;
    FailureReason product_reason;
};

struct LanguageVerdict {
    LanguageClass outcome;
    std::vector<FunctionReport> functions;
    std::optional<HardCertificate> certificate;  // present iff HARD
};

// The dichotomy decision: FP_AFFINE if every function is pure affine of
// degree <= 2, else FP_PRODUCT if every function is of product type of
// degree <= 1, else HARD with both witnesses.
LanguageVerdict classify_language(const ConstraintLanguage& language);

}  // namespace wbcsp
