#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "covol/interval.hpp"

namespace covol {

enum class StepStatus {
  Verified,
  Failed,
  Undecided,
  DataDependentVerified,
  DataDependentUnverified,
  Axiom  // non-numeric reduction recorded with its reference, never computed
};

enum class Relation { less, leq, equal, nonexistence, existence, axiom };

std::string to_string(StepStatus s);
std::string to_string(Relation r);

// One verified claim. For inequality steps the enclosures that decided the
// claim are retained; evaluators are kept (unserialized) so a step can be
// re-evaluated at a different precision.
struct Step {
  std::string id;
  std::string claim;
  Relation relation = Relation::less;
  std::optional<Interval> lhs;
  std::optional<Interval> rhs;
  StepStatus status = StepStatus::Undecided;
  std::string ref;    // section / equation / lemma / table identifier
  std::vector<std::string> inputs;
  std::string note;
  bool critical = true;

  // Present only for interval-comparison steps.
  std::function<Interval(Precision)> lhs_eval;
  std::function<Interval(Precision)> rhs_eval;
  long decided_bits = 0;
};

struct Certificate {
  std::string tool_version;
  std::uint64_t snapshot_fingerprint = 0;
  long precision_cap = 4096;
  std::vector<Step> steps;
  std::string conclusion;
  bool conclusion_reached = false;

  void finalize(const std::string& conclusion_text);
  bool all_critical_ok() const;
  const Step* find(const std::string& id) const;

  // Line-delimited serialization: one header object, then one object per step.
  void write(std::ostream& os) const;
};

// Assembles steps, deciding interval comparisons adaptively: precision starts
// at 128 bits and doubles until the comparison separates or the cap is hit.
class CertBuilder {
 public:
  explicit CertBuilder(long precision_cap = 4096)
      : precision_cap_(precision_cap) {}

  using Eval = std::function<Interval(Precision)>;

  Step& check(Relation rel, std::string id, std::string claim, std::string ref,
              Eval lhs, Eval rhs, std::vector<std::string> inputs = {});

  Step& check_less(std::string id, std::string claim, std::string ref,
                   Eval lhs, Eval rhs, std::vector<std::string> inputs = {}) {
    return check(Relation::less, std::move(id), std::move(claim),
                 std::move(ref), std::move(lhs), std::move(rhs),
                 std::move(inputs));
  }

  // Exact equality of two point intervals (integer identities).
  Step& check_equal(std::string id, std::string claim, std::string ref,
                    const Rational& lhs, const Rational& rhs,
                    std::vector<std::string> inputs = {});

  // Existence / nonexistence facts certified by snapshot data.
  Step& data_step(Relation rel, std::string id, std::string claim,
                  std::string ref, bool holds, bool certain, std::string note,
                  std::vector<std::string> inputs = {});

  Step& axiom(std::string id, std::string claim, std::string ref,
              std::vector<std::string> inputs = {});

  long precision_cap() const { return precision_cap_; }
  std::vector<Step>& steps() { return steps_; }
  const std::vector<Step>& steps() const { return steps_; }
  std::vector<Step> take() { return std::move(steps_); }

 private:
  long precision_cap_;
  std::vector<Step> steps_;
};

// Re-evaluates an interval-comparison step at the given precision; returns
// the freshly decided step (same id). Used for soundness spot checks.
Step reevaluate(const Step& s, Precision p);

// FNV-1a 64-bit over a byte string; fingerprints snapshot files.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace covol
