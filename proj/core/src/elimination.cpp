#include "covol/elimination.hpp"

#include <map>
#include <sstream>

#include "covol/finite_groups.hpp"
#include "covol/transcendental.hpp"

namespace covol {

namespace {

using Eval = CertBuilder::Eval;

Eval point(Rational v) {
  return [v = std::move(v)](Precision) { return Interval(v); };
}

Eval point_i(const Integer& v) { return point(Rational(v)); }

// Sound integer cap for a quantity known to be strictly below the enclosed
// value: t < X <= hi implies t <= ceil(hi) - 1.
Integer ceil_minus_one(const Rational& x) { return -floor_rational(-x) - 1; }

std::string istr(const Integer& v) { return v.get_str(); }

Eval zeta23() {
  return [](Precision p) { return zeta_product_bound(3, p); };
}

// 2.3 V_n, the strict upper bound on the reference covolume.
Eval covol_cap(long n) {
  return [n](Precision p) {
    return (Interval(rational_from_decimal("2.3")) * v_n(n).to_interval(p))
        .outward(p);
  };
}

// Lower bound for the candidate covolume in the outer case after dividing by
// the index bound: nt^-m n^-1 h^-1 D_k^((n^2-1)/2) rel^(s/2) V_n^m.
Eval bout_lower(long m, long n, Integer h, Integer dk, Integer rel) {
  const long s = s_qs(n, Form::outer);
  return [=](Precision p) {
    Interval v = v_n(n).pow(m).to_interval(p);
    Interval dk_pow = Interval(Rational(dk)).pow(n * n - 1, 2, p);
    Interval rel_pow = Interval(Rational(rel)).pow(s, 2, p);
    Rational pref =
        Rational(1) /
        (Rational(pow_int(Integer(n_tilde(n)), static_cast<unsigned long>(m))) *
         Rational(n) * Rational(h));
    return (Interval(pref) * dk_pow * rel_pow * v).outward(p);
  };
}

Eval brel_eval(long m, long n, Integer dk, bool refined) {
  return [=](Precision p) { return rel_disc_bound(m, n, dk, p, refined); };
}

std::string case_prefix(long m, long n, const Integer& dk) {
  return "outer.m" + std::to_string(m) + ".n" + std::to_string(n) + ".D" +
         istr(dk);
}

std::string list_fields(const std::vector<FieldRecord>& recs) {
  std::ostringstream os;
  for (size_t i = 0; i < recs.size(); ++i) {
    if (i) os << ", ";
    os << recs[i].label << " (|disc|=" << istr(recs[i].disc_abs)
       << ", h=" << istr(recs[i].class_number) << ")";
  }
  return os.str();
}

// One base field k in the outer case, 2 <= m <= 4: cap the relative
// discriminant, enumerate the quadratic extensions l, and beat the reference
// covolume for each.
void eliminate_outer_field(CertBuilder& cb, const Snapshot& s, long m, long n,
                           const FieldRecord& k, const std::string& fields_id) {
  const std::string pre = case_prefix(m, n, k.disc_abs);
  const Precision scout{192};

  bool refined = false;
  Interval brel = rel_disc_bound(m, n, k.disc_abs, scout, false);
  Integer rmax = ceil_minus_one(brel.hi());
  if (m == 4 && rmax > 1) {
    // The sharper degree-4 constant 67.9029 replaces 230.
    refined = true;
    brel = rel_disc_bound(m, n, k.disc_abs, scout, true);
    rmax = ceil_minus_one(brel.hi());
  }

  if (rmax < 1) {
    cb.check_less(pre + ".brel", "relative discriminant bound below 1, no l",
                  "5.2", brel_eval(m, n, k.disc_abs, refined),
                  point(Rational(1)), {fields_id});
    return;
  }

  cb.check(Relation::leq, pre + ".brel",
           "D_l / D_k^2 <= " + istr(rmax) + " for D_k = " + istr(k.disc_abs),
           "5.2", brel_eval(m, n, k.disc_abs, refined),
           point_i(rmax + 1), {fields_id})
      .note = refined ? "refined degree-4 constant 67.9029"
                      : "generic constant 230";

  const std::string constraint = (m == 4) ? "has_proper_subfield" : "";
  QueryResult cand = quadratic_extension_candidates(s, k, rmax, constraint);
  const bool certain = cand.certainty == Certainty::Certain;
  if (cand.records.empty()) {
    cb.data_step(Relation::nonexistence, pre + ".cands",
                 "no field of degree " + std::to_string(2 * m) +
                     ", signature (2," + std::to_string(m - 1) +
                     "), disc divisible by D_k^2, D_l <= " +
                     istr(k.disc_abs * k.disc_abs * rmax),
                 "5.2", true, certain, "window certified complete: " +
                     std::string(certain ? "yes" : "NO"),
                 {pre + ".brel"});
    return;
  }
  cb.data_step(Relation::existence, pre + ".cands",
               std::to_string(cand.records.size()) +
                   " candidate quadratic extension(s) of D_k = " +
                   istr(k.disc_abs),
               "5.2", true, certain, list_fields(cand.records),
               {pre + ".brel"});
  for (const FieldRecord& l : cand.records) {
    const Integer rel = l.disc_abs / (k.disc_abs * k.disc_abs);
    cb.check_less(
        pre + ".rel" + istr(rel),
        "candidate " + l.label + " has covolume above the reference", "5.2",
        covol_cap(n), bout_lower(m, n, l.class_number, k.disc_abs, rel),
        {pre + ".cands", "zeta.prod-all"});
  }
}

// Degree 5: the relative discriminant bound sits below 3, while the decic
// discriminant lower bound forces D_l / D_k^2 >= 3.
void eliminate_outer_m5(CertBuilder& cb, long n, const FieldRecord& k,
                        const std::string& fields_id) {
  const std::string pre = case_prefix(5, n, k.disc_abs);
  cb.check_less(pre + ".brel", "D_l / D_k^2 < 3 for D_k = " + istr(k.disc_abs),
                "5.2", brel_eval(5, n, k.disc_abs, false), point(Rational(3)),
                {fields_id});
  const Integer dk2_twice = 2 * k.disc_abs * k.disc_abs;
  cb.check_less(
      pre + ".odlyzko",
      "any signature (2,4) decic has |disc| > 2 D_k^2, so D_l / D_k^2 >= 3",
      "table A.2",
      point_i(dk2_twice),
      [](Precision p) {
        const OdlyzkoTable t = OdlyzkoTable::builtin();
        return odlyzko_disc_lower(t.row("sig_2_complex"), 2, 4, p);
      },
      {pre + ".brel"});
}

}  // namespace

DiscWindow disc_window(const Snapshot& s, long m, long n, Precision p) {
  DiscWindow w;
  w.lo = min_disc(s, m, m, 0).value;
  w.hi = ceil_minus_one(fn_C(m, n, p).hi());
  return w;
}

void exclude_outer_large(CertBuilder& cb, long grid_max) {
  cb.check_less("zeta.prod-all", "prod_{i>=2} zeta(i) < 2.3", "lemma 4.3",
                [](Precision p) { return zeta_product_bound(kInfiniteProduct, p); },
                point(rational_from_decimal("2.3")));
  cb.check_less("zeta.z2z3", "zeta(2) zeta(3) < 1.97731", "section 9",
                zeta23(), point(rational_from_decimal("1.97731")));
  cb.check_less("outer.large.M-2-9", "2.3 < M(2,9)", "table A.3",
                point(rational_from_decimal("2.3")),
                [](Precision p) { return fn_M(2, 9, p); },
                {"zeta.prod-all"});
  cb.check_less("outer.large.Mp-6-4", "2.3 < M'(6,4)", "table A.5",
                point(rational_from_decimal("2.3")),
                [](Precision p) { return fn_Mprime(6, 4, p); },
                {"zeta.prod-all"});
  cb.check_less("outer.large.Mp-16-3", "zeta(2) zeta(3) < M'(16,3)",
                "table A.5", zeta23(),
                [](Precision p) { return fn_Mprime(16, 3, p); });
  verify_monotonicity(MonotoneLemma::M, cb, grid_max);
  verify_monotonicity(MonotoneLemma::Mprime, cb, grid_max);
}

void case_outer_small(CertBuilder& cb, const Snapshot& s) {
  // Minimal totally real discriminants per degree, from data.
  std::map<long, MinDiscResult> mins;
  for (long m = 2; m <= 5; ++m) {
    mins.emplace(m, min_disc(s, m, m, 0));
    const MinDiscResult& md = mins.at(m);
    cb.data_step(Relation::existence, "outer.data.min-disc-m" + std::to_string(m),
                 "minimal totally real degree-" + std::to_string(m) +
                     " discriminant is " + istr(md.value),
                 "table A.7", true, md.certainty == Certainty::Certain,
                 "witness " + md.record->label);
  }

  const Precision wp{256};
  for (long m = 2; m <= 5; ++m) {
    for (long n = 4; n <= 8; ++n) {
      const DiscWindow w = disc_window(s, m, n, wp);
      const std::string base = "outer.m" + std::to_string(m) + ".n" +
                               std::to_string(n);
      const std::string min_id = "outer.data.min-disc-m" + std::to_string(m);
      if (w.empty()) {
        cb.check_less(base + ".window-empty",
                      "C(" + std::to_string(m) + "," + std::to_string(n) +
                          ") below the minimal degree-" + std::to_string(m) +
                          " discriminant",
                      "table A.6",
                      [m, n](Precision p) { return fn_C(m, n, p); },
                      point_i(w.lo), {min_id});
        continue;
      }
      cb.check_less(base + ".window",
                    "admissible D_k lie in [" + istr(w.lo) + ", " +
                        istr(w.hi) + "]",
                    "table A.6", point_i(w.hi),
                    [m, n](Precision p) { return fn_C(m, n, p); }, {min_id});
      QueryResult fields = query_window(s, m, m, 0, w.lo, w.hi);
      const std::string fields_id = base + ".fields";
      cb.data_step(Relation::existence, fields_id,
                   std::to_string(fields.records.size()) +
                       " totally real degree-" + std::to_string(m) +
                       " field(s) in the window",
                   "5.2", true, fields.certainty == Certainty::Certain,
                   list_fields(fields.records), {base + ".window"});
      for (const FieldRecord& k : fields.records) {
        if (m == 5)
          eliminate_outer_m5(cb, n, k, fields_id);
        else
          eliminate_outer_field(cb, s, m, n, k, fields_id);
      }
    }
  }
}

void case_n3(CertBuilder& cb, const Snapshot& s) {
  // Minimal discriminants of the quadratic extension signatures, from data.
  const MinDiscResult d21 = min_disc(s, 4, 2, 1);
  const MinDiscResult d22 = min_disc(s, 6, 2, 2);
  const MinDiscResult d23 = min_disc(s, 8, 2, 3);
  cb.data_step(Relation::existence, "n3.data.min-disc-21",
               "minimal |disc| of signature (2,1) quartics is " +
                   istr(d21.value),
               "table A.8", true, d21.certainty == Certainty::Certain,
               "witness " + d21.record->label);
  cb.data_step(Relation::existence, "n3.data.min-disc-22",
               "minimal |disc| of signature (2,2) sextics is " +
                   istr(d22.value),
               "table A.8", true, d22.certainty == Certainty::Certain,
               "witness " + d22.record->label);
  cb.data_step(Relation::existence, "n3.data.min-disc-23",
               "minimal |disc| of signature (2,3) octics is " +
                   istr(d23.value),
               "table A.8", true, d23.certainty == Certainty::Certain,
               "witness " + d23.record->label);

  // m >= 16 is covered by M'(16,3) with its growth certification.

  // 4 <= m <= 15: the class number forced by the covolume, fed through the
  // Hilbert class field, pushes D_l past the admissible range.
  for (long m = 4; m <= 15; ++m) {
    std::vector<std::string> inputs;
    std::optional<Integer> dl_min;
    if (m == 4) {
      dl_min = d23.value;
      inputs.push_back("n3.data.min-disc-23");
    }
    Eval rhs = [m, dl_min](Precision p) {
      Interval h = fn_H(m, p, dl_min);
      Interval dl = hilbert_cf_disc_bound(m, h, p);
      PiMonomial pref(pow_int(Rational(12), 2 * m) / 300, -2 * m);
      Interval vm = v_n(3).pow(m).to_interval(p);
      return (pref.to_interval(p) * dl * vm).outward(p);
    };
    Eval lhs = [](Precision p) {
      return (zeta_product_bound(3, p) * v_n(3).to_interval(p)).outward(p);
    };
    cb.check_less("n3.m" + std::to_string(m) + ".excluded",
                  "class-number chain: forced D_l exceeds the m = " +
                      std::to_string(m) + " window at n = 3",
                  "tables A.8, A.9", lhs, rhs, inputs)
        .note =
        "h_l >= H(m) = D_l^2 V_3^(m-1) / (3 zeta(2) zeta(3)) at minimal D_l; "
        "then D_l >= 60.015^2 22.210^(2m-2) e^(-80.001/h); then "
        "(1/300)(12/pi)^2m D_l V_3^m > zeta(2) zeta(3) V_3";
  }

  // m = 3 and m = 2: the window is small enough that data bounds every class
  // number by 2, while H(m) > 2.
  struct SmallM {
    long m;
    long deg, r1, r2;
    const MinDiscResult* dmin;
    const char* data_id;
  };
  const SmallM cases[] = {{3, 6, 2, 2, &d22, "n3.data.min-disc-22"},
                          {2, 4, 2, 1, &d21, "n3.data.min-disc-21"}};
  for (const SmallM& c : cases) {
    const std::string pre = "n3.m" + std::to_string(c.m);
    Eval window = [m = c.m](Precision p) {
      // W = 300 (pi/12)^2m zeta(2) zeta(3) V_3^(1-m)
      PiMonomial pref(Rational(300) / pow_int(Rational(12), 2 * m), 2 * m);
      Interval v = v_n(3).pow(1 - m).to_interval(p);
      return (pref.to_interval(p) * zeta_product_bound(3, p) * v).outward(p);
    };
    const Integer wmax = ceil_minus_one(window(Precision{256}).hi());
    cb.check_less(pre + ".window",
                  "candidates at m = " + std::to_string(c.m) +
                      " have D_l <= " + istr(wmax),
                  "section 5.2", point_i(wmax), window, {});
    QueryResult q = query_window(s, c.deg, c.r1, c.r2, 1, wmax);
    bool all_h_le_2 = true;
    for (const FieldRecord& r : q.records)
      if (r.class_number > 2) all_h_le_2 = false;
    cb.data_step(Relation::nonexistence, pre + ".h-data",
                 "every signature (" + std::to_string(c.r1) + "," +
                     std::to_string(c.r2) + ") field with |disc| <= " +
                     istr(wmax) + " has class number <= 2",
                 "section 5.2", all_h_le_2,
                 q.certainty == Certainty::Certain,
                 std::to_string(q.records.size()) + " field(s) in window",
                 {pre + ".window"});
    cb.check_less(pre + ".H",
                  "2 < H(" + std::to_string(c.m) + ") at the minimal |disc|",
                  "table A.8", point(Rational(2)),
                  [m = c.m, dm = c.dmin->value](Precision p) {
                    return fn_H(m, p, dm);
                  },
                  {c.data_id, pre + ".h-data"})
        .note = "contradiction: data gives h_l <= 2, covolume forces h_l > 2";
  }
}

void case_inner_nonsplit_l(CertBuilder& cb, const Snapshot& s) {
  const MinDiscResult rq = min_disc(s, 2, 2, 0);
  cb.data_step(Relation::existence, "nonsplit.data.min-rq",
               "minimal real quadratic discriminant is " + istr(rq.value),
               "section 6", true, rq.certainty == Certainty::Certain,
               "witness " + rq.record->label);
  QueryResult small = query_window(s, 2, 2, 0, 1, 39);
  bool all_h1 = true;
  for (const FieldRecord& r : small.records)
    if (r.class_number != 1) all_h1 = false;
  cb.data_step(Relation::nonexistence, "nonsplit.data.h1-below-40",
               "every real quadratic field with disc < 40 has class number 1",
               "section 6", all_h1, small.certainty == Certainty::Certain,
               std::to_string(small.records.size()) + " field(s) below 40");

  // h_l >= 2 branch: D_l >= 40 and N beats the covolume cap.
  cb.check_less("nonsplit.h2.N4", "2.3 < N(4)", "section 6",
                point(rational_from_decimal("2.3")),
                [](Precision p) { return fn_N(4, p); },
                {"nonsplit.data.h1-below-40", "zeta.prod-all"});
  cb.check_less("nonsplit.h2.n3",
                "zeta(2) zeta(3) < (1/300)(12/pi)^2 40^(3/2)", "section 6",
                zeta23(),
                [](Precision p) {
                  PiMonomial pref(Rational(144, 300), -2);
                  Interval forty = Interval(Rational(40)).pow(3, 2, p);
                  return (pref.to_interval(p) * forty).outward(p);
                },
                {"nonsplit.data.h1-below-40"})
      .note = "right side exceeds 12.3035";
  verify_monotonicity(MonotoneLemma::N, cb);

  // h_l = 1 branch: D_l >= 5 and N' beats the covolume cap.
  cb.check_less("nonsplit.h1.N4", "2.3 < N'(4)", "section 6",
                point(rational_from_decimal("2.3")),
                [](Precision p) { return fn_Nprime(4, p); },
                {"nonsplit.data.min-rq", "zeta.prod-all"});
  cb.check_less("nonsplit.h1.n3", "zeta(2) zeta(3) < (1/3) 5^(5/2)",
                "section 6", zeta23(),
                [](Precision p) {
                  Interval five = Interval(Rational(5)).pow(5, 2, p);
                  return (Interval(Rational(1, 3)) * five).outward(p);
                },
                {"nonsplit.data.min-rq"})
      .note = "right side exceeds 18.6338";
  verify_monotonicity(MonotoneLemma::Nprime, cb);
  verify_monotonicity(MonotoneLemma::E2, cb);
}

void case_hyperspecial(CertBuilder& cb) {
  cb.axiom("split.hasse",
           "a nonsplit inner form over Q is nonsplit at two or more finite "
           "places, with d_v >= 2 at each (d_v = 3 when n = 3)",
           "section 7");

  // T nonempty, n >= 4: the two cheapest places already contribute 27.
  // E(n,q) = n^-1 (q-1) q^(n^2/4 - 1) is exact at n = 4.
  const Rational e42 = Rational(1, 4) * 1 * 8;
  const Rational e43 = Rational(1, 4) * 2 * 27;
  cb.check(Relation::leq, "split.T.n4.product",
           "27 <= E(4,2) E(4,3)", "lemma 7.2", point(Rational(27)),
           point(e42 * e43), {"split.hasse"})
      .note = "E(4,2) = 2, E(4,3) = 27/2; equality is attained";
  cb.check_less("split.T.n4.beats", "nt 2.3 < 27 with nt = 2", "section 7",
                point(2 * rational_from_decimal("2.3")), point(Rational(27)),
                {"split.T.n4.product", "zeta.prod-all"});
  verify_monotonicity(MonotoneLemma::E1, cb);

  // T nonempty, n = 3: d_v = 3, exponent denominator 3, product exactly 8.
  // E(n,q) = n^-1 (q-1) q^(n^2/3 - 1) is exact at n = 3.
  const Rational e323 = Rational(1, 3) * 1 * 4;
  const Rational e333 = Rational(1, 3) * 2 * 9;
  cb.check_equal("split.T.n3.product", "E(3,2) E(3,3) = 8 at d_v = 3",
                 "lemma 7.2", e323 * e333, Rational(8), {"split.hasse"});
  cb.check_less("split.T.n3.beats", "zeta(2) zeta(3) < 8", "section 7",
                zeta23(), point(Rational(8)), {"split.T.n3.product"});

  // Non-hyperspecial parahorics: each place contributes n^-1 q^(n-1).
  cb.check(Relation::leq, "split.parahoric.ratio-base",
           "1 <= (1/3) 2^2, the smallest per-place factor n^-1 q^(n-1)",
           "lemma 7.3", point(Rational(1)), point(Rational(4, 3)))
      .note = "the factor increases in q, and in n since q n/(n+1) >= 3/2";
  cb.check_equal("split.parahoric.equality",
                 "nt^-1 n^-1 q^(n-1) = 1 at n = 4, q = 2", "section 7",
                 Rational(1, 2) * Rational(1, 4) * 8, Rational(1));
  const Integer iwahori = parabolic_index_lower(Composition({1, 1, 1, 1}), 2);
  cb.check_equal("split.parahoric.iwahori",
                 "Iwahori flag-count lower bound 2^6 = 64 at n = 4, q = 2",
                 "lemma 7.4", Rational(iwahori), Rational(64));
  cb.check_less("split.parahoric.refined",
                "1 < (1/2)(1/4) 64, breaking the equality case", "section 7",
                point(Rational(1)),
                point(Rational(1, 2) * Rational(1, 4) * Rational(iwahori)),
                {"split.parahoric.equality", "split.parahoric.iwahori"});
}

Certificate certify_all(const Snapshot& s, const EliminationConfig& cfg) {
  CertBuilder cb(cfg.precision_cap);
  cb.axiom("reduce.rank", "n >= 3; the n = 2 case is classical", "section 1");
  cb.axiom("reduce.arithmeticity",
           "a minimal-covolume lattice is arithmetic, by Margulis and the "
           "rank-1 volume bounds",
           "section 3");
  cb.axiom("reduce.forms",
           "arithmetic lattices arise from quasi-split inner or outer forms "
           "over a totally real k of degree m, split over k or a quadratic l",
           "section 4.2");
  cb.axiom("reduce.local-global",
           "the covolume factors as D_k^((n^2-1)/2) rel^(s/2) V_n^m prod "
           "e(P_v) divided by an index bounded through class and unit data",
           "section 8");
  exclude_outer_large(cb, cfg.n_max);
  case_outer_small(cb, s);
  case_n3(cb, s);
  case_inner_nonsplit_l(cb, s);
  case_hyperspecial(cb);

  Certificate cert;
  cert.tool_version = cfg.tool_version;
  cert.snapshot_fingerprint = s.fingerprint;
  cert.precision_cap = cfg.precision_cap;
  cert.steps = cb.take();
  cert.finalize(kConclusion);
  return cert;
}

}  // namespace covol
