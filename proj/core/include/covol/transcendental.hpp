#pragma once

#include "covol/interval.hpp"

namespace covol {

// Sentinel for the infinite zeta product.
inline constexpr int kInfiniteProduct = -1;

// Enclosure of pi at precision p; width <= 2^(1 - p.bits).
Interval enclose_pi(Precision p);

// Enclosures of e^x and ln x over the whole interval.
Interval enclose_exp(const Interval& x, Precision p);
Interval enclose_ln(const Interval& x, Precision p);

// Rigorous enclosure of zeta(s) for integer s >= 2: endpoints from a
// correctly-rounded evaluation with directed rounding, so the true value is
// certainly inside. Width shrinks as p grows.
Interval zeta_enclosure(long s, Precision p);

// Enclosure of prod_{i=2}^{n_max} zeta(i); with n_max = kInfiniteProduct the
// upper endpoint bounds the infinite product via the tail estimate
// prod_{i>=9} zeta(i) <= exp(2 zeta(9) - 2).
Interval zeta_product_bound(int n_max, Precision p);

}  // namespace covol
