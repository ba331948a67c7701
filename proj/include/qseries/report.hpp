#pragma once

// Rendering of check results as text, JSON, or CSV.  All big numbers are
// emitted as decimal strings; JSON schema:
//   { "schema_version": 1,
//     "total": N, "passed": N, "failed": N, "errors": N,
//     "results": [ { "id", "kind", "status", "compared_up_to",
//                    "mismatch": null | {"exponent","lhs","rhs"},
//                    "message", "wall_ms" } ... ] }

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "qseries/registry.hpp"
#include "json.hpp"

namespace qseries {

struct ReportTotals {
  size_t total = 0, passed = 0, failed = 0, errors = 0;
};

inline ReportTotals report_totals(const std::vector<CheckResult>& results) {
  ReportTotals t;
  t.total = results.size();
  for (const auto& r : results) {
    if (r.status == "pass") ++t.passed;
    else if (r.status == "fail") ++t.failed;
    else ++t.errors;
  }
  return t;
}

namespace detail {

inline std::vector<const CheckResult*> sorted_view(const std::vector<CheckResult>& results) {
  std::vector<const CheckResult*> v;
  v.reserve(results.size());
  for (const auto& r : results) v.push_back(&r);
  std::sort(v.begin(), v.end(),
            [](const CheckResult* a, const CheckResult* b) { return a->id < b->id; });
  return v;
}

}  // namespace detail

inline std::string render_text(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  size_t idw = 2;
  for (const auto& r : results) idw = std::max(idw, r.id.size());
  for (const CheckResult* r : detail::sorted_view(results)) {
    std::string tag = r->status == "pass" ? "PASS" : (r->status == "fail" ? "FAIL" : "ERROR");
    out << std::left << std::setw(5) << tag << ' ' << std::setw(static_cast<int>(idw)) << r->id
        << "  " << std::setw(15) << check_kind_name(r->kind) << "  up to q^"
        << r->compared_up_to.get_str() << "  (" << std::fixed << std::setprecision(1)
        << r->wall_ms << " ms)\n";
    if (r->mismatch) {
      out << "      first mismatch at q^" << r->mismatch->exponent.get_str()
          << ": lhs = " << r->mismatch->lhs << ", rhs = " << r->mismatch->rhs << "\n";
    }
    if (!r->message.empty()) out << "      " << r->message << "\n";
  }
  ReportTotals t = report_totals(results);
  out << t.total << " checks: " << t.passed << " passed, " << t.failed << " failed, " << t.errors
      << " errors\n";
  return out.str();
}

inline std::string render_json(const std::vector<CheckResult>& results) {
  nlohmann::json root;
  root["schema_version"] = 1;
  ReportTotals t = report_totals(results);
  root["total"] = t.total;
  root["passed"] = t.passed;
  root["failed"] = t.failed;
  root["errors"] = t.errors;
  root["results"] = nlohmann::json::array();
  for (const CheckResult* r : detail::sorted_view(results)) {
    nlohmann::json item;
    item["id"] = r->id;
    item["kind"] = check_kind_name(r->kind);
    item["status"] = r->status;
    item["compared_up_to"] = r->compared_up_to.get_str();
    if (r->mismatch) {
      item["mismatch"] = {{"exponent", r->mismatch->exponent.get_str()},
                         {"lhs", r->mismatch->lhs},
                         {"rhs", r->mismatch->rhs}};
    } else {
      item["mismatch"] = nullptr;
    }
    item["message"] = r->message;
    item["wall_ms"] = r->wall_ms;
    root["results"].push_back(std::move(item));
  }
  return root.dump(2) + "\n";
}

inline std::string render_csv(const std::vector<CheckResult>& results) {
  auto esc = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += "\"\"";
      else out += c;
    }
    out += "\"";
    return out;
  };
  std::ostringstream out;
  out << "id,kind,status,compared_up_to,mismatch_exponent,mismatch_lhs,mismatch_rhs,message,"
         "wall_ms\n";
  for (const CheckResult* r : detail::sorted_view(results)) {
    out << esc(r->id) << ',' << check_kind_name(r->kind) << ',' << r->status << ','
        << r->compared_up_to.get_str() << ',';
    if (r->mismatch) {
      out << esc(r->mismatch->exponent.get_str()) << ',' << esc(r->mismatch->lhs) << ','
          << esc(r->mismatch->rhs);
    } else {
      out << ",,";
    }
    out << ',' << esc(r->message) << ',' << std::fixed << std::setprecision(3) << r->wall_ms
        << "\n";
  }
  return out.str();
}

inline std::string render_report(const std::vector<CheckResult>& results,
                                 const std::string& format) {
  if (format == "json") return render_json(results);
  if (format == "csv") return render_csv(results);
  if (format == "text") return render_text(results);
  throw SeriesError("unknown report format '" + format + "' (expected text, json, or csv)");
}

}  // namespace qseries
