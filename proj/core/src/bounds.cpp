#include "covol/bounds.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "covol/pi_monomial.hpp"
#include "covol/transcendental.hpp"

namespace covol {

const OdlyzkoRow& OdlyzkoTable::row(const std::string& name) const {
  auto it = rows.find(name);
  if (it == rows.end()) throw DomainError("unknown discriminant-bound row: " + name);
  return it->second;
}

OdlyzkoTable OdlyzkoTable::builtin() {
  auto mk = [](const std::string& name, const char* ar, const char* ac,
               const char* ec, const std::string& cit) {
    return OdlyzkoRow{name, rational_from_decimal(ar), rational_from_decimal(ac),
                      rational_from_decimal(ec), cit};
  };
  OdlyzkoTable t;
  t.rows.emplace("totally_real",
                 mk("totally_real", "29.534", "29.534", "8.2667",
                    "Odlyzko, unconditional discriminant bounds, table 4"));
  t.rows.emplace("sig_2_complex",
                 mk("sig_2_complex", "29.534", "14.616", "8.2667",
                    "Odlyzko, unconditional discriminant bounds, table 4"));
  t.rows.emplace("hout",
                 mk("hout", "25.465", "13.316", "7.0667",
                    "Odlyzko, unconditional discriminant bounds, table 4"));
  t.rows.emplace("hilbert",
                 mk("hilbert", "60.015", "22.210", "80.001",
                    "Odlyzko, unconditional discriminant bounds, table 4"));
  return t;
}

OdlyzkoTable OdlyzkoTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open configuration file: " + path);
  nlohmann::json j;
  in >> j;
  OdlyzkoTable t;
  for (const auto& r : j.at("rows")) {
    OdlyzkoRow row{r.at("name").get<std::string>(),
                   rational_from_decimal(r.at("a_real").get<std::string>()),
                   rational_from_decimal(r.at("a_complex").get<std::string>()),
                   rational_from_decimal(r.at("e_const").get<std::string>()),
                   r.at("citation").get<std::string>()};
    if (row.a_real <= 0 || row.a_complex <= 0 || row.e_const <= 0)
      throw DomainError("discriminant-bound constants must be positive");
    t.rows.emplace(row.name, std::move(row));
  }
  return t;
}

namespace {

Integer product_of(const std::vector<long>& xs) {
  Integer r(1);
  for (long x : xs) r *= x;
  return r;
}

const Rational& dec(const char* s) {
  static std::map<std::string, Rational> cache;
  auto [it, inserted] = cache.try_emplace(s);
  if (inserted) it->second = rational_from_decimal(s);
  return it->second;
}

// (12/pi)^2m as a PiMonomial.
PiMonomial twelve_over_pi_sq(long m) {
  return PiMonomial(pow_int(Rational(12), 2 * m), -2 * m);
}

}  // namespace

Integer index_bound_inner(const Integer& h_k, long n, long m,
                          const std::vector<long>& d_list) {
  for (long d : d_list)
    if (d < 2) throw DomainError("every d_v must be >= 2");
  Integer prod = product_of(d_list);
  if (m == 1) return Integer(n_tilde(n)) * prod;
  return h_k * n_tilde(n) * pow_int(Integer(n), static_cast<unsigned long>(m - 1)) * prod;
}

Integer index_bound_outer(const Integer& h_l, long n, long m,
                          const std::vector<long>& d_list,
                          const std::vector<long>& xi_list, bool k_is_Q) {
  for (long d : d_list)
    if (d < 2) throw DomainError("every d_v must be >= 2");
  const long delta = k_is_Q ? 1 : 0;
  return h_l *
         pow_int(Integer(n_tilde(n)), static_cast<unsigned long>(m + delta)) *
         Integer(n) * product_of(d_list) * product_of(xi_list);
}

Integer dirichlet_units_bound(long n, long m, long m1,
                              const Integer& mu_quotient,
                              const Integer& class_torsion,
                              bool norm_surjective) {
  if (m1 > m) throw DomainError("m1 must not exceed m");
  if (mu_quotient < 1 || class_torsion < 1)
    throw DomainError("cardinalities must be >= 1");
  Integer r = mu_quotient *
              pow_int(Integer(n), static_cast<unsigned long>(m1)) *
              class_torsion;
  if (!norm_surjective)
    r *= pow_int(Integer(n_tilde(n)), static_cast<unsigned long>(m - 1));
  return r;
}

Interval fn_E1(long n, long q, long exponent_denom, Precision p) {
  if (n < 2 || q < 2) throw DomainError("fn_E1 requires n, q >= 2");
  if (exponent_denom != 4 && exponent_denom != 3)
    throw DomainError("exponent denominator must be 3 or 4");
  Interval qi{Rational(q)};
  Interval qpow = qi.pow(n * n - exponent_denom,
                         static_cast<unsigned long>(exponent_denom), p);
  return (Interval(Rational(q - 1, n)) * qpow).outward(p);
}

Interval fn_E2(long n, long q) {
  if (n < 2 || q < 2) throw DomainError("fn_E2 requires n, q >= 2");
  long e = (n + 2) / 2;  // ceil((n+1)/2)
  Rational v = Rational(pow_int(Integer(q), static_cast<unsigned long>(e))) /
               (Rational(n_tilde(n)) * (q + 1));
  return Interval(v);
}

Interval fn_M(long m, long n, Precision p) {
  if (m < 1 || n < 2) throw DomainError("fn_M requires m >= 1, n >= 2");
  Rational mm = Rational(pow_int(Integer(m), static_cast<unsigned long>(m))) /
                Rational(factorial(static_cast<unsigned long>(m)));
  Rational coeff = Rational(1, 100) /
                   pow_int(Rational(n_tilde(n)), m) *
                   pow_int(mm, n * n - 5) / n;
  PiMonomial pm = PiMonomial(coeff, 0) * twelve_over_pi_sq(m) * v_n(n).pow(m - 1);
  return pm.to_interval(p);
}

Interval fn_Mprime(long m, long n, Precision p) {
  if (m < 1 || n < 2) throw DomainError("fn_Mprime requires m >= 1, n >= 2");
  Rational coeff = Rational(1, 100) / pow_int(Rational(n_tilde(n)), m) / n;
  PiMonomial pm = PiMonomial(coeff, 0) * twelve_over_pi_sq(m) * v_n(n).pow(m - 1);
  const long e = n * n - 5;
  // (A^m E)^e with A = 29.534^(1/2): 29.534^(m e / 2) * exp(-4.13335 e)
  Interval a_part = Interval(dec("29.534")).pow(m * e, 2, p);
  Interval e_part =
      enclose_exp(Interval(-dec("4.13335") * e), p);
  return (pm.to_interval(p) * a_part * e_part).outward(p);
}

Interval fn_N(long n, Precision p) {
  if (n < 2) throw DomainError("fn_N requires n >= 2");
  long nt = n_tilde(n);
  PiMonomial pm(Rational(144, 100 * nt * nt * n), -2);
  Interval forty = Interval(Rational(40)).pow(n * n - n - 6, 4, p);
  return (pm.to_interval(p) * forty).outward(p);
}

Interval fn_Nprime(long n, Precision p) {
  if (n < 2) throw DomainError("fn_Nprime requires n >= 2");
  long nt = n_tilde(n);
  Interval five = Interval(Rational(5)).pow(n * n - n - 2, 4, p);
  return (Interval(Rational(1, nt * nt * n)) * five).outward(p);
}

namespace {

// 230 nt^m (pi/12)^2m V_n^(1-m) n as a PiMonomial, with the leading decimal
// constant selectable (the refined m = 4 class-number bound uses 67.9029).
PiMonomial c_base(const Rational& lead, long m, long n) {
  Rational coeff = lead * pow_int(Rational(n_tilde(n)), m) /
                   pow_int(Rational(12), 2 * m) * n;
  return PiMonomial(coeff, 2 * m) * v_n(n).pow(1 - m);
}

}  // namespace

Interval fn_C(long m, long n, Precision p) {
  if (m < 1 || n < 3) throw DomainError("fn_C requires m >= 1, n >= 3");
  Interval base = c_base(Rational(230), m, n).to_interval(p);
  return base.pow(2, static_cast<unsigned long>(n * n - 5), p).outward(p);
}

Interval rel_disc_bound(long m, long n, const Integer& D_k, Precision p,
                        bool refined_m4) {
  if (D_k < 1) throw DomainError("D_k must be >= 1");
  if (refined_m4 && m != 4)
    throw DomainError("refined bound applies only to m = 4");
  const long s = s_qs(n, Form::outer);
  if (s <= 2) throw SExponentDegenerate();
  const Rational lead = refined_m4 ? dec("67.9029") : Rational(230);
  Interval base = c_base(lead, m, n).to_interval(p);
  Interval dk_part = Interval(Rational(D_k)).pow(5 - n * n, 2, p);
  Interval full = base * dk_part;
  return full.pow(2, static_cast<unsigned long>(s - 2), p).outward(p);
}

Interval class_number_upper(long m, const Integer& D_l, Precision p) {
  if (m < 1 || D_l < 1) throw DomainError("class_number_upper requires m, D_l >= 1");
  Interval reg = enclose_exp(
      Interval(-(dec("0.82") + dec("0.1") * m)), p);
  Interval two_pi = (Interval(Rational(2)) * enclose_pi(p)).pow(-2 * m);
  Interval z2 = zeta_enclosure(2, p).pow(2 * m);
  return (Interval(Rational(100)) * reg * two_pi * z2 * Interval(Rational(D_l)))
      .outward(p);
}

Interval fn_H(long m, Precision p, std::optional<Integer> dl_min_override,
              const OdlyzkoTable& table) {
  if (m < 2) throw DomainError("fn_H requires m >= 2");
  Interval dl;
  if (m <= 4) {
    if (!dl_min_override) throw MissingDiscriminantOverride();
    dl = Interval(Rational(*dl_min_override));
  } else {
    dl = odlyzko_disc_lower(table.row("hout"), 2, m - 1, p);
  }
  Interval v3 = v_n(3).pow(m - 1).to_interval(p);
  Interval den = Interval(Rational(3)) * zeta_enclosure(2, p) * zeta_enclosure(3, p);
  return (dl.pow(2) * v3 / den).outward(p);
}

Interval hilbert_cf_disc_bound(long m, const Interval& h, Precision p,
                               const OdlyzkoTable& table) {
  if (m < 2) throw DomainError("hilbert_cf_disc_bound requires m >= 2");
  return odlyzko_disc_lower(table.row("hilbert"), 2, m - 1, p, h);
}

Rational minkowski_disc_lower(long m) {
  if (m < 1) throw DomainError("minkowski_disc_lower requires m >= 1");
  Rational half = Rational(pow_int(Integer(m), static_cast<unsigned long>(m))) /
                  Rational(factorial(static_cast<unsigned long>(m)));
  return half * half;
}

Interval odlyzko_disc_lower(const OdlyzkoRow& row, long r1, long r2,
                            Precision p, std::optional<Interval> h) {
  if (r1 < 0 || r2 < 0) throw DomainError("signature components must be >= 0");
  Interval v = Interval(pow_int(row.a_real, r1) * pow_int(row.a_complex, 2 * r2));
  Interval hh = h.value_or(Interval(Rational(1)));
  if (hh.hi() <= 0) throw DomainError("class number bound must be positive");
  if (hh.lo() <= 0) {
    // h could be arbitrarily close to 0, where e^(-e_const/h) tends to 0:
    // only the upper endpoint survives.
    Interval up = enclose_exp(Interval(-row.e_const / hh.hi()), p);
    return (Interval(Rational(0), (v * up).hi())).outward(p);
  }
  Interval expo = Interval(-row.e_const) / hh;
  return (v * enclose_exp(expo, p)).outward(p);
}

// --- Monotonicity certification ---

namespace {

using Eval = CertBuilder::Eval;

Eval point(Rational v) {
  return [v = std::move(v)](Precision) { return Interval(v); };
}

Eval one() { return point(Rational(1)); }

void grid_ratio_steps(CertBuilder& cb, const std::string& prefix,
                      const std::string& ref,
                      const std::function<Interval(long, long, Precision)>& f,
                      long a_lo, long a_hi, long b_lo, long b_hi) {
  // adjacent ratios in the first variable
  for (long b = b_lo; b <= b_hi; ++b)
    for (long a = a_lo; a + 1 <= a_hi; ++a) {
      cb.check_less(prefix + ".grid." + std::to_string(a) + "." + std::to_string(b),
                    "adjacent ratio exceeds 1 at (" + std::to_string(a) + "," +
                        std::to_string(b) + ")",
                    ref, one(),
                    [f, a, b](Precision p) { return f(a + 1, b, p) / f(a, b, p); });
    }
}

void mono_e1(CertBuilder& cb, long grid_max) {
  // n-ratio lower bound (2/3) 2^(5/4) > 1, monotone in n and q
  cb.check_less("a2.ratio-n-base", "(2/3) 2^(5/4) > 1", "lemma A.2", one(),
                [](Precision p) {
                  return Interval(Rational(2, 3)) * Interval(Rational(2)).pow(5, 4, p);
                });
  // q-ratio q^2 (q+1)^e / ((q^2-1) q^e) > 1 holds factorwise: q^2 > q^2 - 1
  cb.check_less("a2.ratio-q-termwise", "q^2 - 1 < q^2 at the base q = 2",
                "lemma A.2", point(Rational(3)), point(Rational(4)))
      .note = "both factors q^2/(q^2-1) and ((q+1)/q)^(n^2/4) exceed 1 for all n, q >= 2";
  cb.check_equal("a2.base-E42", "E(4,2) = 2", "lemma A.2",
                 fn_E1(4, 2, 4).lo(), Rational(2));
  cb.check_less("a2.base-E42-gt1", "E(4,2) > 1", "lemma A.2", one(),
                [](Precision p) { return fn_E1(4, 2, 4, p); });
  cb.check_less("a2.base-denom3", "n^2/3 variant base E(3,2) = 4/3 > 1",
                "lemma A.2", one(), [](Precision p) { return fn_E1(3, 2, 3, p); });
  grid_ratio_steps(cb, "a2.n", "lemma A.2",
                   [](long n, long q, Precision p) { return fn_E1(n, q, 4, p); },
                   2, grid_max, 2, 5);
  grid_ratio_steps(cb, "a2.q", "lemma A.2",
                   [](long q, long n, Precision p) { return fn_E1(n, q, 4, p); },
                   2, grid_max, 4, 8);
}

void mono_e2(CertBuilder& cb, long grid_max) {
  cb.check(Relation::leq, "a3.ratio-n-base",
           "(nt/nt') q^(2-nt) >= 1 at the base (1/2)*2", "lemma A.3", one(),
           point(Rational(1, 2) * 2))
      .note = "n odd: (1/2) q >= 1 for q >= 2; n even: 2 q^0 = 2 >= 1";
  cb.check_less("a3.ratio-q-termwise",
                "q^2 + 2q < q^2 + 2q + 1 at the base q = 2", "lemma A.3",
                point(Rational(8)), point(Rational(9)));
  cb.check_equal("a3.base-E32", "E(3,2) = 4/3", "lemma A.3",
                 fn_E2(3, 2).lo(), Rational(4, 3));
  cb.check_less("a3.base-E32-gt1", "E(3,2) > 1", "lemma A.3", one(),
                [](Precision) { return fn_E2(3, 2); });
  for (long n = 3; n + 1 <= grid_max; ++n)
    for (long q : {2L, 3L, 4L, 5L})
      cb.check(Relation::leq, "a3.grid." + std::to_string(n) + "." + std::to_string(q),
               "E2 nondecreasing in n at (" + std::to_string(n) + "," + std::to_string(q) + ")",
               "lemma A.3", one(),
               [n, q](Precision) { return fn_E2(n + 1, q) / fn_E2(n, q); });
}

void mono_m(CertBuilder& cb, long grid_max) {
  cb.check_less("a4.cross-base", "(9/(16 pi)) (81/(16 pi))^4 > 1", "lemma A.4",
                one(), [](Precision p) {
                  Interval pi = enclose_pi(p);
                  Interval a = Interval(Rational(9)) / (Interval(Rational(16)) * pi);
                  Interval b = Interval(Rational(81)) / (Interval(Rational(16)) * pi);
                  return a * b.pow(4);
                });
  cb.check_less("a4.dm-row-base",
                "(144/(2 pi^2)) (9/4)^31 prod_{i<=5} i!/(2 pi)^(i+1) > 1",
                "lemma A.4", one(), [](Precision p) {
                  PiMonomial pm = PiMonomial(Rational(144, 2) *
                                                 pow_int(Rational(9, 4), 31), -2) *
                                  v_n(6);
                  return pm.to_interval(p);
                });
  cb.check_less("a4.dn-col-base", "(3/14) 2^6 6!/pi^7 > 1", "lemma A.4", one(),
                [](Precision p) {
                  PiMonomial pm(Rational(3, 14) * 64 * Rational(factorial(6)), -7);
                  return pm.to_interval(p);
                });
  grid_ratio_steps(cb, "a4.m", "lemma A.4",
                   [](long m, long n, Precision p) { return fn_M(m, n, p); },
                   2, grid_max, 6, grid_max);
  grid_ratio_steps(cb, "a4.n", "lemma A.4",
                   [](long n, long m, Precision p) { return fn_M(m, n, p); },
                   6, grid_max, 2, grid_max);
}

void mono_mprime(CertBuilder& cb, long grid_max) {
  cb.check_less("a5.A2-gt-2pi", "A^2 = 29.534 > 2 pi", "lemma A.5",
                [](Precision p) { return Interval(Rational(2)) * enclose_pi(p); },
                point(dec("29.534")));
  cb.check_less("a5.cross-base", "(1/2) A 3!/(2 pi) > 1", "lemma A.5", one(),
                [](Precision p) {
                  Interval a = Interval(dec("29.534")).pow(1, 2, p);
                  return Interval(Rational(1, 2)) * a * Interval(Rational(6)) /
                         (Interval(Rational(2)) * enclose_pi(p));
                });
  cb.check_less("a5.dm-row-base", "(144/pi^2) A^4 2/(2 pi)^5 > 1", "lemma A.5",
                one(), [](Precision p) {
                  PiMonomial pm(Rational(144) * Rational(2, 32), -7);
                  Interval a4 = Interval(pow_int(dec("29.534"), 2));
                  return pm.to_interval(p) * a4;
                });
  cb.check_less("a5.dn-col-base",
                "(1/16) (A^4 E)^9 (6!)^3 / (2 pi)^21 (4/5) > 1", "lemma A.5",
                one(), [](Precision p) {
                  Interval a4e = Interval(pow_int(dec("29.534"), 2)) *
                                 enclose_exp(Interval(-dec("4.13335")), p);
                  PiMonomial pm(Rational(1, 16) * pow_int(Rational(factorial(6)), 3) /
                                    pow_int(Rational(2), 21) * Rational(4, 5),
                                -21);
                  return a4e.pow(9) * pm.to_interval(p);
                });
  grid_ratio_steps(cb, "a5.m", "lemma A.5",
                   [](long m, long n, Precision p) { return fn_Mprime(m, n, p); },
                   4, grid_max, 4, grid_max);
  grid_ratio_steps(cb, "a5.n", "lemma A.5",
                   [](long n, long m, Precision p) { return fn_Mprime(m, n, p); },
                   4, grid_max, 4, grid_max);
  // m-direction alone also holds for n = 3
  grid_ratio_steps(cb, "a5.m3", "lemma A.5",
                   [](long m, long n, Precision p) { return fn_Mprime(m, n, p); },
                   1, grid_max, 3, 3);
}

void mono_n(CertBuilder& cb, long grid_max) {
  cb.check_less("a7.ratio-base", "(1/4) 40 (2/3) > 1", "lemma A.7", one(),
                point(Rational(1, 4) * 40 * Rational(2, 3)));
  for (long n = 2; n + 1 <= grid_max; ++n)
    cb.check_less("a7.grid." + std::to_string(n),
                  "N(n+1)/N(n) > 1 at n = " + std::to_string(n), "lemma A.7",
                  one(), [n](Precision p) { return fn_N(n + 1, p) / fn_N(n, p); });
}

void mono_nprime(CertBuilder& cb, long grid_max) {
  cb.check_less("a7p.ratio-odd-base", "(1/4) 5^(3/2) (3/4) > 1", "lemma A.7",
                one(), [](Precision p) {
                  return Interval(Rational(3, 16)) * Interval(Rational(5)).pow(3, 2, p);
                });
  cb.check_less("a7p.ratio-even-base", "4 * 5 * (2/3) > 1", "lemma A.7", one(),
                point(Rational(4) * 5 * Rational(2, 3)));
  for (long n = 2; n + 1 <= grid_max; ++n)
    cb.check_less("a7p.grid." + std::to_string(n),
                  "N'(n+1)/N'(n) > 1 at n = " + std::to_string(n), "lemma A.7",
                  one(),
                  [n](Precision p) { return fn_Nprime(n + 1, p) / fn_Nprime(n, p); });
}

}  // namespace

void verify_monotonicity(MonotoneLemma which, CertBuilder& cb, long grid_max) {
  switch (which) {
    case MonotoneLemma::E1: mono_e1(cb, grid_max); return;
    case MonotoneLemma::E2: mono_e2(cb, grid_max); return;
    case MonotoneLemma::M: mono_m(cb, grid_max); return;
    case MonotoneLemma::Mprime: mono_mprime(cb, grid_max); return;
    case MonotoneLemma::N: mono_n(cb, grid_max); return;
    case MonotoneLemma::Nprime: mono_nprime(cb, grid_max); return;
  }
  throw DomainError("unknown lemma selector");
}

}  // namespace covol
