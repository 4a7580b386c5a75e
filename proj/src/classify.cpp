#include "wbcsp/classify.hpp"

#include "wbcsp/errors.hpp"
#include "wbcsp/parity.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace wbcsp {

std::string to_string(FailureReason reason) {
    switch (reason) {
        case FailureReason::non_uniform_magnitude: return "non-uniform-magnitude";
        case FailureReason::non_affine_support: return "non-affine-support";
        case FailureReason::support_not_pin_link_definable: return "support-not-pin-link-definable";
        case FailureReason::weight_non_factorizable: return "weight-non-factorizable";
        case FailureReason::degree_too_high: return "degree-too-high";
    }
    return "?";
}

std::string to_string(LanguageClass outcome) {
    switch (outcome) {
        case LanguageClass::FP_AFFINE: return "FP_AFFINE";
        case LanguageClass::FP_PRODUCT: return "FP_PRODUCT";
        case LanguageClass::HARD: return "HARD";
    }
    return "?";
}

Rational PureAffineForm::evaluate(uint64_t assignment) const {
    if (!support.satisfied_by(assignment)) return Rational(0);
    return sign.evaluate(assignment) ? Rational(-weight) : weight;
}

Rational ProductForm::evaluate(uint64_t assignment) const {
    for (const auto& [v, c] : pins)
        if ((((assignment >> v) & 1) != 0) != c) return Rational(0);
    for (const Link& link : links) {
        bool a = (assignment >> link.keep) & 1;
        bool b = (assignment >> link.determined) & 1;
        if ((a ^ b) != link.parity) return Rational(0);
    }
    Rational value(1);
    for (uint32_t v = 0; v < unary.size(); ++v) {
        const Rational& u = ((assignment >> v) & 1) ? unary[v].second : unary[v].first;
        if (u == 0) return Rational(0);
        value *= u;
    }
    return sign.evaluate(assignment) ? Rational(-value) : value;
}

std::pair<int, gf2::Poly> min_degree_sign(const BooleanFunction& f) {
    const uint32_t k = f.arity();
    std::vector<uint64_t> support = f.support();
    if (support.empty()) throw PreconditionError("min_degree_sign: empty support");

    gf2::LinearSystem sys = gf2::support_to_system(support, k);
    std::vector<uint32_t> pivots = gf2::system_pivots(sys);
    std::vector<bool> is_pivot(k, false);
    for (uint32_t p : pivots) is_pivot[p] = true;
    std::vector<uint32_t> free_vars;
    for (uint32_t v = 0; v < k; ++v)
        if (!is_pivot[v]) free_vars.push_back(v);

    // Sign bit over the free coordinates; each free assignment extends
    // uniquely to a support point through the canonical system.
    const uint32_t d = static_cast<uint32_t>(free_vars.size());
    std::vector<uint8_t> sign_table(size_t{1} << d);
    for (uint32_t idx = 0; idx < sign_table.size(); ++idx) {
        uint64_t assignment = 0;
        for (uint32_t t = 0; t < d; ++t)
            if (idx & (uint32_t{1} << (d - 1 - t))) assignment |= uint64_t{1} << free_vars[t];
        for (size_t r = 0; r < sys.equations.size(); ++r) {
            const gf2::LinearEquation& eq = sys.equations[r];
            bool value = eq.rhs;
            for (uint32_t v = 0; v < k; ++v)
                if (v != pivots[r] && eq.get(v)) value ^= (assignment >> v) & 1;
            if (value) assignment |= uint64_t{1} << pivots[r];
        }
        uint32_t index = gf2::assignment_to_index(static_cast<uint32_t>(assignment), k);
        const Rational& value = f.value_at_index(index);
        assert(value != 0);
        sign_table[idx] = value < 0 ? 1 : 0;
    }

    gf2::Poly local = gf2::anf_from_table(sign_table, d);
    gf2::Poly sign = local.rename(free_vars);
    return {sign.degree(), sign};
}

AffineClassification classify_pure_affine(const BooleanFunction& f) {
    if (f.is_zero()) {
        // w (-1)^0 times an unsatisfiable support system.
        gf2::LinearSystem empty_support(f.arity());
        empty_support.add(gf2::LinearEquation(f.arity(), true));
        return {PureAffineForm{Rational(1), std::move(empty_support), gf2::Poly::zero(), 0},
                std::nullopt};
    }

    Rational magnitude(0);
    for (const Rational& v : f.values()) {
        if (v == 0) continue;
        Rational m = abs_rational(v);
        if (magnitude == 0)
            magnitude = m;
        else if (m != magnitude)
            return {std::nullopt, FailureReason::non_uniform_magnitude};
    }

    std::vector<uint64_t> support = f.support();
    if (!gf2::affine_support_test(support, f.arity()))
        return {std::nullopt, FailureReason::non_affine_support};

    auto [degree, sign] = min_degree_sign(f);
    return {PureAffineForm{magnitude, gf2::support_to_system(support, f.arity()), std::move(sign), degree},
            std::nullopt};
}

ProductClassification classify_product_type(const BooleanFunction& f) {
    const uint32_t k = f.arity();

    if (f.is_zero()) {
        ProductForm form;
        form.unary.assign(k, {Rational(1), Rational(1)});
        form.unary[0] = {Rational(0), Rational(0)};
        form.sign = gf2::Poly::zero();
        form.degree = 0;
        form.pinned.assign(k, 0);
        form.determined.assign(k, 0);
        return {std::move(form), std::nullopt};
    }

    std::vector<uint64_t> support = f.support();

    // Variables whose projection over the support is a single value.
    std::vector<int8_t> pin_value(k, -1);
    std::vector<uint32_t> unpinned;
    for (uint32_t v = 0; v < k; ++v) {
        bool saw[2] = {false, false};
        for (uint64_t t : support) saw[(t >> v) & 1] = true;
        if (saw[0] && saw[1])
            unpinned.push_back(v);
        else
            pin_value[v] = saw[1] ? 1 : 0;
    }

    // Pairs whose joint projection has exactly two tuples are linked with
    // the parity those tuples show.
    ParityClasses classes(k);
    for (size_t a = 0; a < unpinned.size(); ++a) {
        for (size_t b = a + 1; b < unpinned.size(); ++b) {
            uint32_t i = unpinned[a], j = unpinned[b];
            bool seen[4] = {false, false, false, false};
            uint32_t distinct = 0;
            for (uint64_t t : support) {
                uint32_t pair = static_cast<uint32_t>(((t >> i) & 1) | (((t >> j) & 1) << 1));
                if (!seen[pair]) {
                    seen[pair] = true;
                    ++distinct;
                    if (distinct > 2) break;
                }
            }
            if (distinct != 2) continue;
            bool parity = seen[1] || seen[2];  // {01,10} disagree, {00,11} agree
            bool ok = classes.merge(i, j, parity);
            assert(ok && "projections of a common support cannot conflict");
            (void)ok;
        }
    }

    std::map<uint32_t, std::vector<uint32_t>> members_by_root;
    for (uint32_t v : unpinned) members_by_root[classes.find(v).first].push_back(v);
    const uint32_t num_classes = static_cast<uint32_t>(members_by_root.size());

    // Pins and links hold on all of the support, so the defined set
    // contains it; sizes agree exactly when it *is* the support.
    if (support.size() != (size_t{1} << num_classes))
        return {std::nullopt, FailureReason::support_not_pin_link_definable};

    const uint64_t base = support[0];
    const Rational base_magnitude =
        abs_rational(f.value_at_index(gf2::assignment_to_index(static_cast<uint32_t>(base), k)));

    struct ClassInfo {
        uint32_t rep;
        std::vector<std::pair<uint32_t, bool>> members;  // (variable, parity vs rep)
        Rational ratio;
        uint64_t flip_mask = 0;
    };
    std::vector<ClassInfo> class_infos;
    for (auto& [root, members] : members_by_root) {
        ClassInfo info;
        info.rep = *std::min_element(members.begin(), members.end());
        auto [rep_root, rep_parity] = classes.find(info.rep);
        for (uint32_t v : members) {
            info.flip_mask |= uint64_t{1} << v;
            if (v == info.rep) continue;
            info.members.push_back({v, classes.find(v).second != rep_parity});
        }
        std::sort(info.members.begin(), info.members.end());
        uint64_t flipped = base ^ info.flip_mask;
        info.ratio = abs_rational(f.value_at_index(gf2::assignment_to_index(static_cast<uint32_t>(flipped), k))) /
                     base_magnitude;
        class_infos.push_back(std::move(info));
    }
    std::sort(class_infos.begin(), class_infos.end(),
              [](const ClassInfo& a, const ClassInfo& b) { return a.rep < b.rep; });

    // Magnitudes must equal the base magnitude scaled by the ratio of
    // every flipped class.
    for (uint64_t t : support) {
        Rational expected = base_magnitude;
        for (const ClassInfo& info : class_infos)
            if (((t >> info.rep) & 1) != ((base >> info.rep) & 1)) expected *= info.ratio;
        if (abs_rational(f.value_at_index(gf2::assignment_to_index(static_cast<uint32_t>(t), k))) != expected)
            return {std::nullopt, FailureReason::weight_non_factorizable};
    }

    ProductForm form;
    form.unary.assign(k, {Rational(1), Rational(1)});
    form.pinned.assign(k, 0);
    form.determined.assign(k, 0);

    for (uint32_t v = 0; v < k; ++v)
        if (pin_value[v] >= 0) {
            form.pins.push_back({v, pin_value[v] == 1});
            form.pinned[v] = 1;
        }
    for (const ClassInfo& info : class_infos) {
        bool base_bit = (base >> info.rep) & 1;
        (base_bit ? form.unary[info.rep].first : form.unary[info.rep].second) = info.ratio;
        for (const auto& [v, parity] : info.members) {
            form.links.push_back({info.rep, v, parity});
            form.determined[v] = 1;
        }
    }

    // Fold the base-point magnitude into the first representative, or
    // into a pinned variable when the support is a single point.
    if (!class_infos.empty()) {
        form.unary[class_infos[0].rep].first *= base_magnitude;
        form.unary[class_infos[0].rep].second *= base_magnitude;
    } else {
        uint32_t p = form.pins[0].first;
        (form.pins[0].second ? form.unary[p].second : form.unary[p].first) = base_magnitude;
    }

    auto [degree, sign] = min_degree_sign(f);
    form.sign = std::move(sign);
    form.degree = degree;
    return {std::move(form), std::nullopt};
}

LanguageVerdict classify_language(const ConstraintLanguage& language) {
    if (language.empty()) throw PreconditionError("classify_language: empty language");

    LanguageVerdict verdict;
    verdict.functions.reserve(language.size());
    for (uint32_t i = 0; i < language.size(); ++i) {
        FunctionReport report;
        report.name = language.name_at(i);
        report.arity = language.at(i).arity();
        report.affine = classify_pure_affine(language.at(i));
        report.product = classify_product_type(language.at(i));
        verdict.functions.push_back(std::move(report));
    }

    auto affine_ok = [](const FunctionReport& r) { return r.affine.form && r.affine.form->degree <= 2; };
    auto product_ok = [](const FunctionReport& r) { return r.product.form && r.product.form->degree <= 1; };

    if (std::all_of(verdict.functions.begin(), verdict.functions.end(), affine_ok)) {
        verdict.outcome = LanguageClass::FP_AFFINE;
        return verdict;
    }
    if (std::all_of(verdict.functions.begin(), verdict.functions.end(), product_ok)) {
        verdict.outcome = LanguageClass::FP_PRODUCT;
        return verdict;
    }

    verdict.outcome = LanguageClass::HARD;
    HardCertificate cert;
    for (const FunctionReport& r : verdict.functions)
        if (!affine_ok(r)) {
            cert.affine_witness = r.name;
            cert.affine_reason = r.affine.form ? FailureReason::degree_too_high : *r.affine.reason;
            break;
        }
    for (const FunctionReport& r : verdict.functions)
        if (!product_ok(r)) {
            cert.product_witness = r.name;
            cert.product_reason = r.product.form ? FailureReason::degree_too_high : *r.product.reason;
            break;
        }
    verdict.certificate = std::move(cert);
    return verdict;
}

}  // namespace wbcsp
