#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covol/certificate.hpp"
#include "covol/interval.hpp"
#include "covol/volume.hpp"

namespace covol {

struct SExponentDegenerate : std::domain_error {
  SExponentDegenerate() : std::domain_error("s exponent <= 2, bound degenerate") {}
};

struct MissingDiscriminantOverride : std::domain_error {
  MissingDiscriminantOverride()
      : std::domain_error("H(m) with m <= 4 needs a snapshot discriminant minimum") {}
};

// One row of discriminant lower-bound constants: D > a_real^r1 *
// a_complex^(2 r2) * e^(-e_const / h). Configuration data, never computed.
struct OdlyzkoRow {
  std::string name;
  Rational a_real;
  Rational a_complex;
  Rational e_const;
  std::string citation;
};

struct OdlyzkoTable {
  std::map<std::string, OdlyzkoRow> rows;

  const OdlyzkoRow& row(const std::string& name) const;
  static OdlyzkoTable builtin();
  static OdlyzkoTable load(const std::string& path);
};

// --- Index bounds (exact integers) ---

// h_k * nt * n^(m-1) * prod d_v; for m = 1 exactly nt * prod d_v.
Integer index_bound_inner(const Integer& h_k, long n, long m,
                          const std::vector<long>& d_list);

// h_l * nt^(m+delta) * n * prod d_v * prod xi, delta = 1 iff k = Q.
Integer index_bound_outer(const Integer& h_l, long n, long m,
                          const std::vector<long>& d_list,
                          const std::vector<long>& xi_list, bool k_is_Q);

// mu_quotient * nt^(m-1) * n^m1 * class_torsion, dropping nt^(m-1) when the
// norm is surjective.
Integer dirichlet_units_bound(long n, long m, long m1,
                              const Integer& mu_quotient,
                              const Integer& class_torsion,
                              bool norm_surjective);

// --- Bounding functions ---

// E(n,q) = n^-1 (q-1) q^(n^2/denom - 1), denom in {4, 3}.
Interval fn_E1(long n, long q, long exponent_denom = 4, Precision p = {});

// nt^-1 (q+1)^-1 q^ceil((n+1)/2), exact.
Interval fn_E2(long n, long q);

// M(m,n) = (1/(100 nt^m)) (12/pi)^2m (m^m/m!)^(n^2-5) V_n^(m-1) / n.
Interval fn_M(long m, long n, Precision p);

// M'(m,n): as M with (A^m E)^(n^2-5) in place of (m^m/m!)^(n^2-5),
// A = 29.534^(1/2), E = e^-4.13335.
Interval fn_Mprime(long m, long n, Precision p);

// N(n) = (1/(100 nt^2)) (12/pi)^2 40^((n^2-n-6)/4) / n.
Interval fn_N(long n, Precision p);

// N'(n) = nt^-2 n^-1 5^((n^2-n-2)/4).
Interval fn_Nprime(long n, Precision p);

// C(m,n) = (230 nt^m (pi/12)^2m V_n^(1-m) n)^(2/(n^2-5)).
Interval fn_C(long m, long n, Precision p);

// Upper bound on D_l / D_k^2:
// (230 nt^m (pi/12)^2m D_k^((5-n^2)/2) V_n^(1-m) n)^(2/(s-2)); the refined
// m = 4 variant replaces 230 by 67.9029.
Interval rel_disc_bound(long m, long n, const Integer& D_k, Precision p,
                        bool refined_m4 = false);

// h_l <= 100 e^(-0.82 - 0.1 m) (2 pi)^-2m zeta(2)^2m D_l.
Interval class_number_upper(long m, const Integer& D_l, Precision p);

// Class-number lower bound H(m) = D_l^2 V_3^(m-1) / (3 zeta(2) zeta(3)) at
// the minimal admissible D_l: the configured discriminant row for m >= 5,
// a snapshot minimum for m <= 4.
Interval fn_H(long m, Precision p,
              std::optional<Integer> dl_min_override = std::nullopt,
              const OdlyzkoTable& table = OdlyzkoTable::builtin());

// Lower bound on D_l from the Hilbert class field:
// 60.015^2 * 22.210^(2m-2) * e^(-80.001/h).
Interval hilbert_cf_disc_bound(long m, const Interval& h, Precision p,
                               const OdlyzkoTable& table = OdlyzkoTable::builtin());

// (m^m / m!)^2, exact.
Rational minkowski_disc_lower(long m);

// a_real^r1 * a_complex^(2 r2) * e^(-e_const/h), h defaulting to 1.
Interval odlyzko_disc_lower(const OdlyzkoRow& row, long r1, long r2,
                            Precision p,
                            std::optional<Interval> h = std::nullopt);

// --- Monotonicity certification ---

enum class MonotoneLemma { E1, E2, M, Mprime, N, Nprime };

// Appends steps certifying the growth claims by re-running the proof
// structure (closed-form base cases plus cross-ratio facts), then grid smoke
// tests of adjacent ratios up to grid_max.
void verify_monotonicity(MonotoneLemma which, CertBuilder& cb,
                         long grid_max = 20);

}  // namespace covol
