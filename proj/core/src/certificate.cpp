#include "covol/certificate.hpp"

#include <nlohmann/json.hpp>

namespace covol {

std::string to_string(StepStatus s) {
  switch (s) {
    case StepStatus::Verified: return "Verified";
    case StepStatus::Failed: return "Failed";
    case StepStatus::Undecided: return "Undecided";
    case StepStatus::DataDependentVerified: return "DataDependent-Verified";
    case StepStatus::DataDependentUnverified: return "DataDependent-Unverified";
    case StepStatus::Axiom: return "Axiom";
  }
  return "?";
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::less: return "<";
    case Relation::leq: return "<=";
    case Relation::equal: return "=";
    case Relation::nonexistence: return "nonexistence";
    case Relation::existence: return "existence";
    case Relation::axiom: return "axiom";
  }
  return "?";
}

namespace {

// Decides lhs rel rhs from enclosures; nullopt when the enclosures overlap.
std::optional<bool> decide(Relation rel, const Interval& lhs,
                           const Interval& rhs) {
  switch (rel) {
    case Relation::less:
      if (lhs.hi() < rhs.lo()) return true;
      if (lhs.lo() >= rhs.hi()) return false;
      return std::nullopt;
    case Relation::leq:
      if (lhs.hi() <= rhs.lo()) return true;
      if (lhs.lo() > rhs.hi()) return false;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

void decide_step(Step& s, long precision_cap) {
  for (long bits = 128; bits <= precision_cap; bits *= 2) {
    Precision p{bits};
    Interval lhs, rhs;
    try {
      lhs = s.lhs_eval(p);
      rhs = s.rhs_eval(p);
    } catch (const DivisionByEnclosedZero&) {
      // An intermediate enclosure collapsed onto zero at this coarse dyadic
      // grid; the comparison is merely undecided here, so raise precision.
      continue;
    }
    auto verdict = decide(s.relation, lhs, rhs);
    if (verdict.has_value()) {
      s.lhs = lhs;
      s.rhs = rhs;
      s.status = *verdict ? StepStatus::Verified : StepStatus::Failed;
      s.decided_bits = bits;
      return;
    }
    if (bits * 2 > precision_cap) {
      s.lhs = lhs;
      s.rhs = rhs;
      s.decided_bits = bits;
    }
  }
  s.status = StepStatus::Undecided;
}

}  // namespace

Step& CertBuilder::check(Relation rel, std::string id, std::string claim,
                         std::string ref, Eval lhs, Eval rhs,
                         std::vector<std::string> inputs) {
  Step s;
  s.id = std::move(id);
  s.claim = std::move(claim);
  s.relation = rel;
  s.ref = std::move(ref);
  s.inputs = std::move(inputs);
  s.lhs_eval = std::move(lhs);
  s.rhs_eval = std::move(rhs);
  decide_step(s, precision_cap_);
  steps_.push_back(std::move(s));
  return steps_.back();
}

Step& CertBuilder::check_equal(std::string id, std::string claim,
                               std::string ref, const Rational& lhs,
                               const Rational& rhs,
                               std::vector<std::string> inputs) {
  Step s;
  s.id = std::move(id);
  s.claim = std::move(claim);
  s.relation = Relation::equal;
  s.ref = std::move(ref);
  s.inputs = std::move(inputs);
  s.lhs = Interval(lhs);
  s.rhs = Interval(rhs);
  s.status = (lhs == rhs) ? StepStatus::Verified : StepStatus::Failed;
  steps_.push_back(std::move(s));
  return steps_.back();
}

Step& CertBuilder::data_step(Relation rel, std::string id, std::string claim,
                             std::string ref, bool holds, bool certain,
                             std::string note,
                             std::vector<std::string> inputs) {
  Step s;
  s.id = std::move(id);
  s.claim = std::move(claim);
  s.relation = rel;
  s.ref = std::move(ref);
  s.inputs = std::move(inputs);
  s.note = std::move(note);
  if (!holds)
    s.status = StepStatus::Failed;
  else
    s.status = certain ? StepStatus::DataDependentVerified
                       : StepStatus::DataDependentUnverified;
  steps_.push_back(std::move(s));
  return steps_.back();
}

Step& CertBuilder::axiom(std::string id, std::string claim, std::string ref,
                         std::vector<std::string> inputs) {
  Step s;
  s.id = std::move(id);
  s.claim = std::move(claim);
  s.relation = Relation::axiom;
  s.ref = std::move(ref);
  s.inputs = std::move(inputs);
  s.status = StepStatus::Axiom;
  s.critical = false;
  steps_.push_back(std::move(s));
  return steps_.back();
}

Step reevaluate(const Step& s, Precision p) {
  if (!s.lhs_eval || !s.rhs_eval)
    throw DomainError("step has no evaluators to re-run");
  Step out = s;
  Interval lhs = s.lhs_eval(p);
  Interval rhs = s.rhs_eval(p);
  out.lhs = lhs;
  out.rhs = rhs;
  out.decided_bits = p.bits;
  auto verdict = decide(s.relation, lhs, rhs);
  if (!verdict.has_value())
    out.status = StepStatus::Undecided;
  else
    out.status = *verdict ? StepStatus::Verified : StepStatus::Failed;
  return out;
}

void Certificate::finalize(const std::string& conclusion_text) {
  conclusion_reached = all_critical_ok();
  conclusion = conclusion_reached ? conclusion_text : "withheld";
}

bool Certificate::all_critical_ok() const {
  for (const Step& s : steps) {
    if (!s.critical) continue;
    if (s.status != StepStatus::Verified &&
        s.status != StepStatus::DataDependentVerified)
      return false;
  }
  return true;
}

const Step* Certificate::find(const std::string& id) const {
  for (const Step& s : steps)
    if (s.id == id) return &s;
  return nullptr;
}

void Certificate::write(std::ostream& os) const {
  nlohmann::json header{
      {"tool_version", tool_version},
      {"snapshot_fingerprint", snapshot_fingerprint},
      {"precision_cap", precision_cap},
      {"conclusion", conclusion},
      {"conclusion_reached", conclusion_reached},
      {"steps", steps.size()},
  };
  os << header.dump() << "\n";
  for (const Step& s : steps) {
    nlohmann::json j{
        {"id", s.id},
        {"claim", s.claim},
        {"relation", to_string(s.relation)},
        {"status", to_string(s.status)},
        {"ref", s.ref},
        {"inputs", s.inputs},
    };
    if (s.lhs) j["lhs"] = {to_exact_string(s.lhs->lo()), to_exact_string(s.lhs->hi())};
    if (s.rhs) j["rhs"] = {to_exact_string(s.rhs->lo()), to_exact_string(s.rhs->hi())};
    if (!s.note.empty()) j["note"] = s.note;
    if (s.decided_bits) j["bits"] = s.decided_bits;
    os << j.dump() << "\n";
  }
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace covol
