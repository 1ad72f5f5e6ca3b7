#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "covol/field_data.hpp"

using namespace covol;

namespace {

const char* kHeader =
    R"({"schema":"covol-snapshot","metadata":"test","completeness":[)"
    R"({"degree":2,"r1":2,"r2":0,"abs_disc_max":"100"}]})";

// Writes lines to a fresh temp file and returns its path.
struct TempSnapshot {
  std::filesystem::path path;
  explicit TempSnapshot(const std::string& body) {
    path = std::filesystem::temp_directory_path() /
           ("covol-test-" + std::to_string(counter++) + ".jsonl");
    std::ofstream(path) << body;
  }
  ~TempSnapshot() { std::filesystem::remove(path); }
  static inline int counter = 0;
};

std::string ref_path() { return COVOL_DATA_DIR "/reference_snapshot.jsonl"; }

}  // namespace

TEST_CASE("minimal valid snapshot loads") {
  TempSnapshot t(std::string(kHeader) + "\n" +
                 R"({"label":"2.2.5.1","degree":2,"r1":2,"r2":0,)"
                 R"("disc_abs":"5","disc_sign":1,"class_number":"1"})" + "\n");
  Snapshot s = load_snapshot(t.path.string());
  CHECK(s.records.size() == 1);
  CHECK(s.records[0].disc_abs == Integer(5));
  CHECK(s.fingerprint != 0);
}

TEST_CASE("schema violations are rejected") {
  SUBCASE("signature mismatch") {
    TempSnapshot t(std::string(kHeader) + "\n" +
                   R"({"label":"x","degree":3,"r1":2,"r2":0,)"
                   R"("disc_abs":"5","disc_sign":1,"class_number":"1"})");
    CHECK_THROWS_AS(load_snapshot(t.path.string()), SchemaError);
  }
  SUBCASE("duplicate label") {
    std::string rec = R"({"label":"x","degree":2,"r1":2,"r2":0,)"
                      R"("disc_abs":"5","disc_sign":1,"class_number":"1"})";
    TempSnapshot t(std::string(kHeader) + "\n" + rec + "\n" + rec + "\n");
    CHECK_THROWS_AS(load_snapshot(t.path.string()), DuplicateLabel);
  }
  SUBCASE("missing header") {
    TempSnapshot t(R"({"label":"x","degree":2,"r1":2,"r2":0,)"
                   R"("disc_abs":"5","disc_sign":1,"class_number":"1"})");
    CHECK_THROWS_AS(load_snapshot(t.path.string()), SchemaError);
  }
  SUBCASE("bad sign and class number") {
    TempSnapshot t(std::string(kHeader) + "\n" +
                   R"({"label":"x","degree":2,"r1":2,"r2":0,)"
                   R"("disc_abs":"5","disc_sign":2,"class_number":"1"})");
    CHECK_THROWS_AS(load_snapshot(t.path.string()), SchemaError);
    TempSnapshot u(std::string(kHeader) + "\n" +
                   R"({"label":"x","degree":2,"r1":2,"r2":0,)"
                   R"("disc_abs":"5","disc_sign":1,"class_number":"0"})");
    CHECK_THROWS_AS(load_snapshot(u.path.string()), SchemaError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_snapshot("/no/such/file.jsonl"), ParseError);
  }
}

TEST_CASE("completeness governs certainty") {
  TempSnapshot t(std::string(kHeader) + "\n" +
                 R"({"label":"2.2.5.1","degree":2,"r1":2,"r2":0,)"
                 R"("disc_abs":"5","disc_sign":1,"class_number":"1"})" + "\n");
  Snapshot s = load_snapshot(t.path.string());
  CHECK(query_window(s, 2, 2, 0, Integer(1), Integer(50)).certainty ==
        Certainty::Certain);
  CHECK(query_window(s, 2, 2, 0, Integer(1), Integer(200)).certainty ==
        Certainty::Incomplete);
  // Empty in-range window: a certified nonexistence answer.
  QueryResult empty = query_window(s, 2, 2, 0, Integer(6), Integer(7));
  CHECK(empty.records.empty());
  CHECK(empty.certainty == Certainty::Certain);
}

TEST_CASE("reference snapshot: totally real minima") {
  Snapshot s = load_snapshot(ref_path());
  CHECK(min_disc(s, 2, 2, 0).value == Integer(5));
  CHECK(min_disc(s, 3, 3, 0).value == Integer(49));
  CHECK(min_disc(s, 4, 4, 0).value == Integer(725));
  CHECK(min_disc(s, 5, 5, 0).value == Integer(14641));
  CHECK(min_disc(s, 6, 6, 0).value == Integer(300125));
  CHECK(min_disc(s, 5, 5, 0).certainty == Certainty::Certain);
  CHECK_THROWS_AS(min_disc(s, 12, 12, 0), NoData);
}

TEST_CASE("reference snapshot: printed windows") {
  Snapshot s = load_snapshot(ref_path());
  QueryResult q4 = query_window(s, 4, 4, 0, Integer(725), Integer(1741));
  REQUIRE(q4.records.size() == 3);
  CHECK(q4.records[0].disc_abs == Integer(725));
  CHECK(q4.records[1].disc_abs == Integer(1125));
  CHECK(q4.records[2].disc_abs == Integer(1600));
  CHECK(q4.certainty == Certainty::Certain);

  QueryResult q3 = query_window(s, 3, 3, 0, Integer(49), Integer(194));
  REQUIRE(q3.records.size() == 4);
  CHECK(q3.records[0].disc_abs == Integer(49));
  CHECK(q3.records[3].disc_abs == Integer(169));
}

TEST_CASE("reference snapshot: quadratic extension candidates") {
  Snapshot s = load_snapshot(ref_path());
  const FieldRecord* k49 = nullptr;
  const FieldRecord* k8 = nullptr;
  for (const FieldRecord& r : s.records) {
    if (r.degree == 3 && r.disc_abs == Integer(49)) k49 = &r;
    if (r.degree == 2 && r.disc_abs == Integer(8)) k8 = &r;
  }
  REQUIRE(k49);
  REQUIRE(k8);

  QueryResult e49 = quadratic_extension_candidates(s, *k49, Integer(155));
  CHECK(e49.records.size() == 6);
  for (const FieldRecord& r : e49.records) {
    CHECK(r.class_number == Integer(1));
    CHECK(r.disc_abs % (Integer(49) * Integer(49)) == 0);
  }
  CHECK(e49.certainty == Certainty::Certain);

  QueryResult e8 = quadratic_extension_candidates(s, *k8, Integer(38));
  CHECK(e8.records.size() == 11);
  CHECK(e8.records[0].disc_abs == Integer(64 * 7));
  for (const FieldRecord& r : e8.records) CHECK(r.class_number == Integer(1));

  QueryResult none = quadratic_extension_candidates(s, *k8, Integer(0));
  CHECK(none.records.empty());
  CHECK(none.certainty == Certainty::Certain);
}

TEST_CASE("divisibility-only candidates downgrade to Heuristic") {
  TempSnapshot t(
      R"({"schema":"covol-snapshot","metadata":"t","completeness":[)"
      R"({"degree":2,"r1":2,"r2":0,"abs_disc_max":"100"},)"
      R"({"degree":4,"r1":2,"r2":1,"abs_disc_max":"1000"}]})"
      "\n"
      R"({"label":"k","degree":2,"r1":2,"r2":0,"disc_abs":"5",)"
      R"("disc_sign":1,"class_number":"1"})"
      "\n"
      R"({"label":"l","degree":4,"r1":2,"r2":1,"disc_abs":"275",)"
      R"("disc_sign":-1,"class_number":"1"})"
      "\n");
  Snapshot s = load_snapshot(t.path.string());
  QueryResult q = quadratic_extension_candidates(s, s.records[0], Integer(20));
  REQUIRE(q.records.size() == 1);  // 275 = 25 * 11, no base_label
  CHECK(q.certainty == Certainty::Heuristic);
}
