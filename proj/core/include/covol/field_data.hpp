#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "covol/rational.hpp"

namespace covol {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};
struct DuplicateLabel : std::runtime_error {
  explicit DuplicateLabel(const std::string& label)
      : std::runtime_error("duplicate field label: " + label) {}
};
struct NoData : std::runtime_error {
  explicit NoData(const std::string& what) : std::runtime_error(what) {}
};

enum class Certainty { Certain, Incomplete, Heuristic };

std::string to_string(Certainty c);

struct FieldRecord {
  std::string label;
  long degree = 0;
  long r1 = 0;  // real embeddings
  long r2 = 0;  // complex places
  Integer disc_abs;
  int disc_sign = 1;
  Integer class_number = 1;
  std::string source;
  std::string base_label;  // optional: certified base field of the extension
};

// A claim that the snapshot lists every field of the given signature with
// |disc| up to the bound; `constraint` optionally restricts the claim (e.g.
// only fields possessing a proper subfield).
struct CompletenessRange {
  long degree = 0;
  long r1 = 0;
  long r2 = 0;
  Integer abs_disc_max;
  std::string constraint;
  std::string source;
};

struct Snapshot {
  std::vector<FieldRecord> records;
  std::vector<CompletenessRange> completeness;
  std::string metadata;
  std::uint64_t fingerprint = 0;

  bool covers(long degree, long r1, long r2, const Integer& disc_hi,
              const std::string& constraint = "") const;
};

// Line-delimited file: a header object (schema, metadata, completeness
// ranges), then one record object per line.
Snapshot load_snapshot(const std::string& path);

struct MinDiscResult {
  Integer value;
  Certainty certainty;
  const FieldRecord* record = nullptr;
};

MinDiscResult min_disc(const Snapshot& s, long degree, long r1, long r2);

struct QueryResult {
  std::vector<FieldRecord> records;
  Certainty certainty = Certainty::Incomplete;
};

QueryResult query_window(const Snapshot& s, long degree, long r1, long r2,
                         const Integer& disc_lo, const Integer& disc_hi,
                         const std::string& constraint = "");

// Candidate quadratic extensions l of a totally real base field k: degree
// 2 [k:Q], signature (2, [k:Q]-1), D_l divisible by D_k^2 with
// D_l/D_k^2 <= rel_norm_max. Candidates certified by a base_label are
// Certain when the window is complete; divisibility-only matches downgrade
// the answer to Heuristic.
// completeness_constraint selects which completeness claim may certify the
// answer (e.g. a range listing only fields with a proper subfield, which
// every extension of the base necessarily is).
QueryResult quadratic_extension_candidates(
    const Snapshot& s, const FieldRecord& base, const Integer& rel_norm_max,
    const std::string& completeness_constraint = "");

}  // namespace covol
