#pragma once

#include <string>

#include "covol/bounds.hpp"
#include "covol/certificate.hpp"
#include "covol/field_data.hpp"

namespace covol {

struct EliminationConfig {
  long n_max = 12;
  long precision_cap = 4096;
  std::string tool_version = "covol-cert 0.1.0";
};

// Admissible discriminant window [lo, hi] for a totally real base field of
// degree m in the outer case at rank parameter n; empty when hi < lo.
struct DiscWindow {
  Integer lo;
  Integer hi;
  bool empty() const { return hi < lo; }
};

DiscWindow disc_window(const Snapshot& s, long m, long n, Precision p);

// Large-parameter exclusions: M(2,9), M'(6,4), M'(16,3) against the zeta
// products, plus the growth certification making them cover the unbounded
// region.
void exclude_outer_large(CertBuilder& cb, long grid_max = 20);

// The outer case with 2 <= m <= 5, 4 <= n <= 8: windows, relative
// discriminant bounds, and the per-field eliminations.
void case_outer_small(CertBuilder& cb, const Snapshot& s);

// The outer case at n = 3: class-number lower bounds, the class-field
// discriminant bounds, and the small-degree data checks.
void case_n3(CertBuilder& cb, const Snapshot& s);

// k = Q with l a proper quadratic extension: the N / N' arguments.
void case_inner_nonsplit_l(CertBuilder& cb, const Snapshot& s);

// k = l = Q: nonsplit places and non-hyperspecial parahorics are excluded.
void case_hyperspecial(CertBuilder& cb);

// Full chain; the conclusion is set only if every critical step verifies.
Certificate certify_all(const Snapshot& s, const EliminationConfig& cfg = {});

inline const char* kConclusion =
    "minimal covolume forces k=Q, inner form, all parahorics hyperspecial";

}  // namespace covol
