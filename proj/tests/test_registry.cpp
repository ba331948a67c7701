// Registry parsing, check selection, the three verification modes, report
// rendering, and mutation checks proving the runner actually detects wrong
// statements.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "qseries/registry.hpp"
#include "qseries/report.hpp"

using namespace qseries;

namespace {

CheckResult run_single(const std::string& text, const RunOptions& opt = {}) {
  auto specs = parse_registry(text);
  REQUIRE(specs.size() == 1);
  auto results = run_suite(specs, opt);
  REQUIRE(results.size() == 1);
  return results[0];
}

}  // namespace

TEST_CASE("default registry parses with unique ids and the expected census") {
  auto specs = default_registry();
  CHECK(specs.size() == 126);

  std::set<std::string> ids;
  long identities = 0, congruences = 0, leading = 0;
  for (const auto& s : specs) {
    CHECK(ids.insert(s.id).second);
    switch (s.kind) {
      case CheckKind::SeriesIdentity: ++identities; break;
      case CheckKind::Congruence: ++congruences; break;
      case CheckKind::LeadingTerms: ++leading; break;
    }
    CHECK_FALSE(s.note.empty());  // every entry carries its statement
  }
  CHECK(identities == 47);
  CHECK(congruences == 63);
  CHECK(leading == 16);
}

TEST_CASE("check selection: exact id, dash prefix, glob") {
  auto all = default_registry();
  CHECK(select_checks(all, "").size() == all.size());
  CHECK(select_checks(all, "CPHI2").size() == 1);        // exact, no dash spillover
  CHECK(select_checks(all, "CPHI5").size() == 4);        // CPHI5-* family
  CHECK(select_checks(all, "C-CPHI8").size() == 4);
  CHECK(select_checks(all, "*17*").size() == 7);
  CHECK(select_checks(all, "C-ANDREWS-*").size() == 6);
  CHECK(select_checks(all, "NO-SUCH-ID").empty());
  CHECK(select_checks(all, "CPHI").empty());  // prefix must end at a dash
}

TEST_CASE("a sample of each kind passes at reduced depth") {
  auto all = default_registry();
  std::vector<CheckSpec> picked;
  for (const auto& id : {"JTP-T3", "DISS3", "CPHI5-THETA40", "C-CPHI2-5N3", "H2-EXP"}) {
    auto sel = select_checks(all, id);
    REQUIRE(sel.size() == 1);
    picked.push_back(sel[0]);
  }
  RunOptions opt;
  opt.prec = 40;
  opt.nmax = 60;
  opt.jobs = 2;
  auto results = run_suite(picked, opt);
  REQUIRE(results.size() == picked.size());
  for (const auto& r : results) {
    INFO(r.id << ": " << r.message);
    CHECK(r.passed());
  }
  // Results come back sorted by id regardless of completion order.
  CHECK(std::is_sorted(results.begin(), results.end(),
                       [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; }));
}

TEST_CASE("series-identity depth control") {
  RunOptions opt;
  opt.prec = 7;
  CheckResult r = run_single(
      "check T3\n"
      "kind series-identity\n"
      "note theta3 via the triple product\n"
      "lhs (theta3 1)\n"
      "rhs (jf 1 1)\n"
      "end\n",
      opt);
  CHECK(r.passed());
  CHECK(r.compared_up_to == 7);
}

TEST_CASE("mutated series identity fails at the planted exponent") {
  CheckResult r = run_single(
      "check T3-BROKEN\n"
      "kind series-identity\n"
      "note deliberately wrong: extra q^7\n"
      "lhs (theta3 1)\n"
      "rhs (+ (jf 1 1) (q 7))\n"
      "nmax 40\n"
      "end\n");
  CHECK(r.status == "fail");
  REQUIRE(r.mismatch.has_value());
  CHECK(r.mismatch->exponent == 7);
  CHECK(r.mismatch->lhs == "0");
  CHECK(r.mismatch->rhs == "1");
}

TEST_CASE("mutated congruence progression fails at the first bad term") {
  // cphi_2(5n+3) == 0 mod 5 holds; shifting the residue to 2 breaks it at
  // n = 0 because cphi_2(2) = 9.
  CheckResult r = run_single(
      "check BAD-PROGRESSION\n"
      "kind congruence\n"
      "note deliberately wrong residue class\n"
      "mod 5\n"
      "progression 5 2\n"
      "lhs (cphi 2)\n"
      "rhs 0\n"
      "nmax 40\n"
      "end\n");
  CHECK(r.status == "fail");
  REQUIRE(r.mismatch.has_value());
  CHECK(r.mismatch->exponent == 2);  // reported on the undissected exponent grid
  CHECK(r.mismatch->lhs == "4");     // 9 mod 5
  CHECK(r.mismatch->rhs == "0");
}

TEST_CASE("full-series congruence without progressions") {
  CheckResult ok = run_single(
      "check SELF\n"
      "kind congruence\n"
      "note trivially zero difference\n"
      "mod 7\n"
      "lhs (- (cphi 2) (cphi 2))\n"
      "rhs 0\n"
      "nmax 25\n"
      "end\n");
  CHECK(ok.passed());

  CheckResult bad = run_single(
      "check NONZERO\n"
      "kind congruence\n"
      "note q is not divisible by 2\n"
      "mod 2\n"
      "lhs (q 1)\n"
      "rhs 0\n"
      "nmax 10\n"
      "end\n");
  CHECK(bad.status == "fail");
  REQUIRE(bad.mismatch.has_value());
  CHECK(bad.mismatch->exponent == 1);
  CHECK(bad.mismatch->lhs == "1");
}

TEST_CASE("mutated leading-terms window fails at the planted coefficient") {
  CheckResult r = run_single(
      "check HEAD-BROKEN\n"
      "kind leading-terms\n"
      "note deliberately wrong q^3 coefficient (true value 20)\n"
      "through 4\n"
      "lhs (cphi 2)\n"
      "rhs (+ 1 (* 4 (q 1)) (* 9 (q 2)) (* 19 (q 3)))\n"
      "end\n");
  CHECK(r.status == "fail");
  REQUIRE(r.mismatch.has_value());
  CHECK(r.mismatch->exponent == 3);
  CHECK(r.mismatch->lhs == "20");
  CHECK(r.mismatch->rhs == "19");

  CheckResult pts = run_single(
      "check POINTS\n"
      "kind leading-terms\n"
      "note isolated coefficient probes beyond the window\n"
      "through 2\n"
      "points 3 5\n"
      "lhs (cphi 2)\n"
      "rhs (+ 1 (* 4 (q 1)) (* 9 (q 2)) (* 20 (q 3)) (* 42 (q 4)) (* 80 (q 5)))\n"
      "end\n");
  INFO(pts.message);
  CHECK(pts.passed());
}

TEST_CASE("evaluation failures surface as errors, not crashes") {
  CheckResult r = run_single(
      "check H13\n"
      "kind series-identity\n"
      "note h is undefined below ell = 17\n"
      "lhs (h 13)\n"
      "rhs 0\n"
      "nmax 5\n"
      "end\n");
  CHECK(r.status == "error");
  CHECK_FALSE(r.message.empty());
}

TEST_CASE("parse errors carry line numbers") {
  auto message_of = [](const std::string& text) {
    try {
      parse_registry(text);
    } catch (const SeriesError& ex) {
      return std::string(ex.what());
    }
    return std::string();
  };

  std::string dup =
      "check A\nkind series-identity\nnote x\nlhs 1\nrhs 1\nend\n"
      "check A\nkind series-identity\nnote x\nlhs 1\nrhs 1\nend\n";
  CHECK(message_of(dup).find("duplicate id") != std::string::npos);
  CHECK(message_of(dup).find("line 12") != std::string::npos);

  CHECK(message_of("  lhs 1\n").find("line 1") != std::string::npos);
  CHECK(message_of("note orphan\n").find("outside of a check entry") != std::string::npos);

  std::string nomod = "check C\nkind congruence\nnote x\nlhs 1\nrhs 1\nend\n";
  CHECK(message_of(nomod).find("missing mod") != std::string::npos);

  std::string badkw = "check D\nkindd whatever\n";
  CHECK(message_of(badkw).find("unknown keyword") != std::string::npos);
  CHECK(message_of(badkw).find("line 2") != std::string::npos);

  std::string unclosed = "check E\nkind series-identity\nnote x\nlhs 1\nrhs 1\n";
  CHECK(message_of(unclosed).find("not closed") != std::string::npos);

  std::string badprog = "check F\nkind congruence\nmod 5\nprogression 5 7\n";
  CHECK(message_of(badprog).find("residue in [0, step)") != std::string::npos);

  std::string nested = "check G\nkind series-identity\ncheck H\n";
  CHECK(message_of(nested).find("before the previous entry's 'end'") != std::string::npos);

  // Continuation lines extend the most recent lhs/rhs/note.
  auto spec = parse_registry(
      "check CONT\n"
      "kind series-identity\n"
      "note first half\n"
      "  second half\n"
      "lhs (+ 1\n"
      "  (q 1))\n"
      "rhs (+ 1 (q 1))\n"
      "end\n");
  REQUIRE(spec.size() == 1);
  CHECK(spec[0].note == "first half second half");
  CHECK(spec[0].lhs_source == "(+ 1 (q 1))");
}

TEST_CASE("reports are stable across thread counts") {
  auto picked = select_checks(default_registry(), "CPHI5");
  REQUIRE(picked.size() == 4);
  RunOptions serial;
  serial.prec = 30;
  serial.nmax = 30;
  RunOptions parallel = serial;
  parallel.jobs = 4;

  auto r1 = run_suite(picked, serial);
  auto r2 = run_suite(picked, parallel);

  auto scrub = [](const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    for (auto& row : j["results"]) row["wall_ms"] = nullptr;
    return j;
  };
  CHECK(scrub(render_json(r1)) == scrub(render_json(r2)));
}

TEST_CASE("report rendering") {
  auto picked = select_checks(default_registry(), "JTP-T3");
  RunOptions opt;
  opt.prec = 20;
  auto results = run_suite(picked, opt);
  REQUIRE(results.size() == 1);

  std::string text = render_text(results);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("JTP-T3") != std::string::npos);
  CHECK(text.find("1 passed") != std::string::npos);

  auto j = nlohmann::json::parse(render_json(results));
  CHECK(j["schema_version"] == 1);
  CHECK(j["total"] == 1);
  CHECK(j["passed"] == 1);
  CHECK(j["results"][0]["id"] == "JTP-T3");
  CHECK(j["results"][0]["status"] == "pass");
  CHECK(j["results"][0]["mismatch"].is_null());

  std::string csv = render_csv(results);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);  // header + one row

  CHECK(render_report(results, "text") == text);
  CHECK_THROWS_AS(render_report(results, "yaml"), SeriesError);
}
