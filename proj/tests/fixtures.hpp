#pragma once

// Named functions used across the tests: the two binary sign functions,
// binary OR, the worked 5-ary product-type function, and the hard
// two-variable function (-1)^{xy} Theta_2(x) Theta_3(y).

#include "wbcsp/function.hpp"

namespace wbcsp::test {

// f(x,y) = (-1)^{xy}
inline BooleanFunction neg_pow_xy() {
    return BooleanFunction(2, {Rational(1), Rational(1), Rational(1), Rational(-1)});
}

// f(x,y) = (-1)^{x+y}
inline BooleanFunction neg_pow_x_plus_y() {
    return BooleanFunction(2, {Rational(1), Rational(-1), Rational(-1), Rational(1)});
}

inline BooleanFunction or_function() {
    return BooleanFunction(2, {Rational(0), Rational(1), Rational(1), Rational(1)});
}

// f(x,y,z) = (-1)^{xyz}
inline BooleanFunction neg_pow_xyz() {
    std::vector<Rational> values(8, Rational(1));
    values[7] = Rational(-1);
    return BooleanFunction(3, std::move(values));
}

// The 5-ary function with f(0,0,1,0,1)=8, f(0,1,1,0,1)=10,
// f(1,0,0,1,1)=-12, f(1,1,0,1,1)=15 and 0 elsewhere; of product type of
// degree 2 with links x1 != x3, x1 = x4 and pin x5 = 1.
inline BooleanFunction five_ary_product_function() {
    std::vector<Rational> values(32, Rational(0));
    auto set = [&](int x1, int x2, int x3, int x4, int x5, int v) {
        values[(x1 << 4) | (x2 << 3) | (x3 << 2) | (x4 << 1) | x5] = Rational(v);
    };
    set(0, 0, 1, 0, 1, 8);
    set(0, 1, 1, 0, 1, 10);
    set(1, 0, 0, 1, 1, -12);
    set(1, 1, 0, 1, 1, 15);
    return BooleanFunction(5, std::move(values));
}

// f(x,y) = (-1)^{xy} Theta_2(x) Theta_3(y): matrix (1 3; 2 -6)
inline BooleanFunction signed_theta_product() {
    return BooleanFunction(2, {Rational(1), Rational(3), Rational(2), Rational(-6)});
}

}  // namespace wbcsp::test
