#include "covol/field_data.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "covol/certificate.hpp"

namespace covol {

std::string to_string(Certainty c) {
  switch (c) {
    case Certainty::Certain: return "Certain";
    case Certainty::Incomplete: return "Incomplete";
    case Certainty::Heuristic: return "Heuristic";
  }
  return "?";
}

bool Snapshot::covers(long degree, long r1, long r2, const Integer& disc_hi,
                      const std::string& constraint) const {
  for (const CompletenessRange& c : completeness) {
    if (c.degree == degree && c.r1 == r1 && c.r2 == r2 &&
        c.constraint == constraint && c.abs_disc_max >= disc_hi)
      return true;
  }
  return false;
}

namespace {

Integer json_integer(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_string()) return Integer(v.get<std::string>(), 10);
  if (v.is_number_unsigned() || v.is_number_integer())
    return Integer(static_cast<long>(v.get<long long>()));
  throw SchemaError(std::string("field '") + key + "' must be an integer");
}

FieldRecord parse_record(const nlohmann::json& j) {
  FieldRecord r;
  r.label = j.at("label").get<std::string>();
  r.degree = j.at("degree").get<long>();
  r.r1 = j.at("r1").get<long>();
  r.r2 = j.at("r2").get<long>();
  r.disc_abs = json_integer(j, "disc_abs");
  r.disc_sign = j.at("disc_sign").get<int>();
  r.class_number = json_integer(j, "class_number");
  r.source = j.value("source", std::string{});
  r.base_label = j.value("base_label", std::string{});
  if (r.r1 + 2 * r.r2 != r.degree)
    throw SchemaError("record " + r.label + ": r1 + 2 r2 != degree");
  if (r.disc_sign != 1 && r.disc_sign != -1)
    throw SchemaError("record " + r.label + ": disc_sign must be +-1");
  if (r.disc_abs < 1) throw SchemaError("record " + r.label + ": disc_abs < 1");
  if (r.class_number < 1)
    throw SchemaError("record " + r.label + ": class_number < 1");
  return r;
}

}  // namespace

Snapshot load_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open snapshot file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();

  Snapshot s;
  s.fingerprint = fnv1a64(bytes);

  std::istringstream lines(bytes);
  std::string line;
  bool have_header = false;
  std::set<std::string> labels;
  long lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    try {
      if (!have_header) {
        if (j.value("schema", std::string{}) != "covol-snapshot")
          throw SchemaError("first line must be a covol-snapshot header");
        s.metadata = j.value("metadata", std::string{});
        for (const auto& c : j.value("completeness", nlohmann::json::array())) {
          CompletenessRange cr;
          cr.degree = c.at("degree").get<long>();
          cr.r1 = c.at("r1").get<long>();
          cr.r2 = c.at("r2").get<long>();
          cr.abs_disc_max = json_integer(c, "abs_disc_max");
          cr.constraint = c.value("constraint", std::string{});
          cr.source = c.value("source", std::string{});
          if (cr.r1 + 2 * cr.r2 != cr.degree)
            throw SchemaError("completeness range: r1 + 2 r2 != degree");
          s.completeness.push_back(std::move(cr));
        }
        have_header = true;
        continue;
      }
      FieldRecord r = parse_record(j);
      if (!labels.insert(r.label).second) throw DuplicateLabel(r.label);
      s.records.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_header) throw SchemaError(path + ": missing snapshot header");
  return s;
}

MinDiscResult min_disc(const Snapshot& s, long degree, long r1, long r2) {
  const FieldRecord* best = nullptr;
  for (const FieldRecord& r : s.records) {
    if (r.degree != degree || r.r1 != r1 || r.r2 != r2) continue;
    if (!best || r.disc_abs < best->disc_abs) best = &r;
  }
  if (!best)
    throw NoData("no field of degree " + std::to_string(degree) +
                 " signature (" + std::to_string(r1) + "," +
                 std::to_string(r2) + ") in snapshot");
  MinDiscResult out;
  out.value = best->disc_abs;
  out.record = best;
  out.certainty = s.covers(degree, r1, r2, best->disc_abs)
                      ? Certainty::Certain
                      : Certainty::Incomplete;
  return out;
}

QueryResult query_window(const Snapshot& s, long degree, long r1, long r2,
                         const Integer& disc_lo, const Integer& disc_hi,
                         const std::string& constraint) {
  if (disc_lo > disc_hi) throw NoData("empty window: disc_lo > disc_hi");
  QueryResult out;
  for (const FieldRecord& r : s.records) {
    if (r.degree != degree || r.r1 != r1 || r.r2 != r2) continue;
    if (r.disc_abs < disc_lo || r.disc_abs > disc_hi) continue;
    out.records.push_back(r);
  }
  std::sort(out.records.begin(), out.records.end(),
            [](const FieldRecord& a, const FieldRecord& b) {
              return a.disc_abs < b.disc_abs;
            });
  out.certainty = s.covers(degree, r1, r2, disc_hi, constraint)
                      ? Certainty::Certain
                      : Certainty::Incomplete;
  return out;
}

QueryResult quadratic_extension_candidates(
    const Snapshot& s, const FieldRecord& base, const Integer& rel_norm_max,
    const std::string& completeness_constraint) {
  if (base.r2 != 0)
    throw NoData("extension candidates only supported over totally real bases");
  QueryResult out;
  if (rel_norm_max < 1) {
    out.certainty = Certainty::Certain;
    return out;
  }
  const Integer dk2 = base.disc_abs * base.disc_abs;
  const Integer disc_hi = dk2 * rel_norm_max;
  bool any_uncertified = false;
  for (const FieldRecord& r : s.records) {
    if (r.degree != 2 * base.degree || r.r1 != 2 || r.r2 != base.degree - 1)
      continue;
    if (!r.base_label.empty()) {
      if (r.base_label != base.label) continue;
      if (r.disc_abs % dk2 != 0 || r.disc_abs > disc_hi) continue;
    } else {
      if (r.disc_abs % dk2 != 0 || r.disc_abs > disc_hi) continue;
      any_uncertified = true;
    }
    out.records.push_back(r);
  }
  std::sort(out.records.begin(), out.records.end(),
            [](const FieldRecord& a, const FieldRecord& b) {
              return a.disc_abs < b.disc_abs;
            });
  const bool complete = s.covers(2 * base.degree, 2, base.degree - 1, disc_hi,
                                 completeness_constraint);
  if (!complete)
    out.certainty = Certainty::Incomplete;
  else
    out.certainty = any_uncertified ? Certainty::Heuristic : Certainty::Certain;
  return out;
}

}  // namespace covol
