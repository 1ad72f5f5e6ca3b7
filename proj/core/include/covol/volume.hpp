#pragma once

#include <vector>

#include "covol/interval.hpp"
#include "covol/pi_monomial.hpp"

namespace covol {

struct InconsistentLocalCase : std::domain_error {
  explicit InconsistentLocalCase(const std::string& what)
      : std::domain_error(what) {}
};

struct InconsistentInput : std::domain_error {
  explicit InconsistentInput(const std::string& what)
      : std::domain_error(what) {}
};

enum class Form { inner, outer };

// Global shape of the case: degree m = [k:Q], rank parameter n, and whether
// the quasi-split inner form splits over k (inner) or over a quadratic
// extension l (outer).
struct CaseParams {
  long m = 1;
  long n = 3;
  Form form = Form::inner;
};

enum class LocalKind {
  T_place,              // G nonsplit at v, division-algebra index d_v >= 2
  special,              // special but not hyperspecial parahoric
  nonspecial_nonsplit,  // nonspecial parahoric, l_w/k_v nonsplit
  nonspecial_split,     // nonspecial parahoric, split case
  hyperspecial
};

// One finite place's data feeding a local factor bound.
struct LocalCase {
  long q = 2;     // residue cardinality q_v
  long n_v = 1;   // with d_v = n / n_v
  long d_v = 1;
  LocalKind kind = LocalKind::hyperspecial;
};

struct DiscriminantData {
  Integer D_k = 1;
  Integer D_l = 1;
  Integer rel_norm = 1;  // D_l / D_k^{[l:k]}
};

// 1 if n odd, 2 if n even.
inline long n_tilde(long n) { return (n % 2 == 0) ? 2 : 1; }

// s(G) = 0 split; r(r+3)/2 for r = n-1 even; (r-1)(r+2)/2 for r odd.
long s_qs(long n, Form form);

// e(P_v) = prod_{i=2}^n (1 - q^{-i})^{-1}, exact.
Rational euler_factor_split_hyperspecial(long n, long q);

// Lower bound on the combined factor Xi^{-1} e(P_v) for the case kinds the
// argument uses. exponent_denom selects between the generic q^{n^2/4 - 1}
// bound and the n = 3 variant q^{n^2/3 - 1}.
Interval euler_factor_lower_bound(const LocalCase& c, long n,
                                  long exponent_denom = 4);

// Volume formula: mu = D_k^{(n^2-1)/2} (D_l / D_k^{[l:k]})^{s/2} V_n^m
// prod e(P_v), with the Euler product supplied as an enclosure or rigorous
// lower bound.
Interval prasad_volume_bound(const CaseParams& cp, const DiscriminantData& dd,
                             const Interval& euler, Precision p);

// Enclosure of V_n * prod_{i=2}^n zeta(i), the covolume of SL_n(Z).
Interval covolume_slnz(long n, Precision p);

}  // namespace covol
