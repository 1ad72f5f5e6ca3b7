#pragma once

#include <vector>

#include "covol/rational.hpp"
#include "covol/interval.hpp"

namespace covol {

struct SizeLimitExceeded : std::domain_error {
  SizeLimitExceeded() : std::domain_error("flag enumeration size limit exceeded") {}
};

// Ordered composition n_1 + ... + n_k = n; proper (k >= 2) compositions
// correspond to proper parabolic subgroups.
struct Composition {
  std::vector<long> parts;

  explicit Composition(std::vector<long> p);
  long n() const;
  bool proper() const { return parts.size() >= 2; }
  Composition reversed() const;
};

// |SL_n(F_q)| = prod_{j=0}^{n-1} (q^n - q^j) / (q - 1).
Integer order_sl(long n, long q);

// [SL_n(F_q) : P] for the parabolic P of type c: the Gaussian multinomial
// prod_{j=1}^n (q^j - 1) / prod_i prod_{j=1}^{n_i} (q^j - 1).
Integer parabolic_index(const Composition& c, long q);

// q^{(n^2 - sum n_i^2)/2}, the index lower bound; >= q^{n-1} for proper c.
Integer parabolic_index_lower(const Composition& c, long q);

// Independent oracle: counts chains 0 < V_1 < ... < F_q^n with dimension
// jumps n_1, ..., n_k by direct enumeration of row-reduced subspace bases.
// q must be prime; sizes beyond (max_n, max_q) are rejected.
Integer brute_force_flag_count(const Composition& c, long q, long max_n = 4,
                               long max_q = 3);

// All compositions of n, in lexicographic order.
std::vector<Composition> all_compositions(long n);

}  // namespace covol
