#include "wbcsp/eval.hpp"

#include "wbcsp/errors.hpp"
#include "wbcsp/gf2.hpp"
#include "wbcsp/parity.hpp"

#include <map>

namespace wbcsp {

std::string to_string(EvalMethod method) {
    switch (method) {
        case EvalMethod::affine: return "affine";
        case EvalMethod::product: return "product";
        case EvalMethod::brute: return "brute";
    }
    return "?";
}

namespace {

Rational eval_affine_classified(const Instance& instance, const LanguageVerdict& verdict) {
    const uint32_t n = instance.num_variables();
    Rational total_weight(1);
    gf2::LinearSystem system(n);
    gf2::Poly sign;

    for (const Constraint& c : instance.constraints()) {
        const PureAffineForm& form = *verdict.functions[c.function].affine.form;
        total_weight *= form.weight;
        for (const gf2::LinearEquation& eq : form.support.equations) {
            gf2::LinearEquation mapped(n, eq.rhs);
            for (uint32_t v = 0; v < form.support.num_vars; ++v)
                if (eq.get(v)) mapped.toggle(c.scope[v]);  // repeated scope variables cancel
            system.add(std::move(mapped));
        }
        sign ^= form.sign.rename(c.scope);
    }

    BigInt n0 = gf2::count_quadratic_with_linear(sign, system, n);
    BigInt n1 = gf2::count_quadratic_with_linear(sign ^ gf2::Poly::one(), system, n);
    return total_weight * Rational(n0 - n1);
}

Rational eval_product_classified(const Instance& instance, const LanguageVerdict& verdict) {
    const uint32_t n = instance.num_variables();
    ParityClasses classes(n);
    std::vector<std::pair<Rational, Rational>> factor(n, {Rational(1), Rational(1)});
    std::vector<uint8_t> sign_parity(n, 0);
    bool global_flip = false;

    for (const Constraint& c : instance.constraints()) {
        const ProductForm& form = *verdict.functions[c.function].product.form;
        // Degree <= 1: the sign is a constant plus a sum of variables and
        // folds into per-variable sign flips.
        for (const gf2::Monomial& m : form.sign.monomials()) {
            if (m.empty())
                global_flip = !global_flip;
            else
                sign_parity[c.scope[m[0]]] ^= 1;
        }
        for (uint32_t v = 0; v < form.unary.size(); ++v) {
            factor[c.scope[v]].first *= form.unary[v].first;
            factor[c.scope[v]].second *= form.unary[v].second;
        }
        for (const auto& [v, value] : form.pins) classes.pin(c.scope[v], value);
        for (const ProductForm::Link& link : form.links) {
            uint32_t a = c.scope[link.keep], b = c.scope[link.determined];
            if (a == b) {
                if (link.parity) return Rational(0);  // x != x
                continue;                             // x = x
            }
            classes.merge(a, b, link.parity);
        }
        if (classes.contradiction()) return Rational(0);
    }
    if (classes.contradiction()) return Rational(0);

    for (uint32_t v = 0; v < n; ++v)
        if (sign_parity[v]) factor[v].second = -factor[v].second;

    std::map<uint32_t, std::vector<uint32_t>> members_by_root;
    for (uint32_t v = 0; v < n; ++v) members_by_root[classes.find(v).first].push_back(v);

    Rational z = global_flip ? Rational(-1) : Rational(1);
    for (auto& [root, members] : members_by_root) {
        std::optional<bool> pinned = classes.pinned_value(root);
        if (pinned) {
            for (uint32_t v : members) {
                bool value = *pinned ^ classes.find(v).second;
                z *= value ? factor[v].second : factor[v].first;
            }
        } else {
            Rational alpha(1), beta(1);
            for (uint32_t v : members) {
                bool parity = classes.find(v).second;
                alpha *= parity ? factor[v].second : factor[v].first;
                beta *= parity ? factor[v].first : factor[v].second;
            }
            z *= alpha + beta;
        }
        if (z == 0) return z;
    }
    return z;
}

}  // namespace

Rational eval_affine(const Instance& instance) {
    LanguageVerdict verdict = classify_language(instance.language());
    if (verdict.outcome != LanguageClass::FP_AFFINE)
        throw PreconditionError("eval_affine: language is not pure affine of degree <= 2");
    return eval_affine_classified(instance, verdict);
}

Rational eval_product(const Instance& instance) {
    LanguageVerdict verdict = classify_language(instance.language());
    if (verdict.outcome != LanguageClass::FP_PRODUCT)
        throw PreconditionError("eval_product: language is not of product type of degree <= 1");
    return eval_product_classified(instance, verdict);
}

EvalResult eval(const Instance& instance, EvalPolicy policy, uint32_t max_brute_vars) {
    LanguageVerdict verdict = classify_language(instance.language());

    switch (policy) {
        case EvalPolicy::force_affine:
            if (verdict.outcome != LanguageClass::FP_AFFINE)
                throw PreconditionError("eval: affine method forced on a language that is not FP_AFFINE");
            return {eval_affine_classified(instance, verdict), EvalMethod::affine, verdict.outcome};
        case EvalPolicy::force_product:
            if (verdict.outcome != LanguageClass::FP_PRODUCT)
                throw PreconditionError("eval: product method forced on a language that is not FP_PRODUCT");
            return {eval_product_classified(instance, verdict), EvalMethod::product, verdict.outcome};
        case EvalPolicy::brute:
            return {brute_z(instance, max_brute_vars), EvalMethod::brute, verdict.outcome};
        case EvalPolicy::auto_select:
            break;
    }

    switch (verdict.outcome) {
        case LanguageClass::FP_AFFINE:
            return {eval_affine_classified(instance, verdict), EvalMethod::affine, verdict.outcome};
        case LanguageClass::FP_PRODUCT:
            return {eval_product_classified(instance, verdict), EvalMethod::product, verdict.outcome};
        case LanguageClass::HARD:
            if (instance.num_variables() <= max_brute_vars)
                return {brute_z(instance, max_brute_vars), EvalMethod::brute, verdict.outcome};
            throw IntractableError(
                "eval: language is FP^#P-complete and the instance exceeds the brute-force bound "
                "(witnesses: " + verdict.certificate->affine_witness + " is not pure affine of degree <= 2, " +
                    verdict.certificate->product_witness + " is not of product type of degree <= 1)",
                verdict.certificate->affine_witness, verdict.certificate->product_witness);
    }
    throw std::logic_error("eval: unreachable");
}

}  // namespace wbcsp
