#pragma once

#include "wbcsp/classify.hpp"
#include "wbcsp/instance.hpp"

#include <string>

namespace wbcsp {

enum class EvalPolicy { auto_select, force_affine, force_product, brute };
enum class EvalMethod { affine, product, brute };

std::string to_string(EvalMethod method);

struct EvalResult {
    Rational z;
    EvalMethod method;
    LanguageClass verdict;
};

// Polynomial-time Z for an all-pure-affine language of degree <= 2:
// Z = W * (N0 - N1) where N0/N1 count solutions of the combined support
// system with the combined sign polynomial equal to 0/1.
Rational eval_affine(const Instance& instance);

// Polynomial-time Z for an all-product-type language of degree <= 1:
// signs fold into signed unary factors, links build parity classes, and
// Z factors over the classes.
Rational eval_product(const Instance& instance);

// Dispatcher over the dichotomy.  auto_select routes FP_AFFINE ->
// eval_affine, FP_PRODUCT -> eval_product, HARD -> brute_z when |V| is
// within max_brute_vars and otherwise throws IntractableError carrying
// the certificate.  Forcing an inapplicable method throws
// PreconditionError.
EvalResult eval(const Instance& instance, EvalPolicy policy = EvalPolicy::auto_select,
                uint32_t max_brute_vars = kDefaultBruteVarLimit);

}  // namespace wbcsp
