#pragma once

// Flat report records for decisions: one CSV row or one JSON object per line.

#include "pgst/decider.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pgst {

struct ReportRecord {
  int n = 0;
  int a = 0;
  int b = 0;
  Answer verdict = Answer::no;
  Reason reason = Reason::not_cospectral;
  std::optional<std::vector<BigInt>> witness;  // full length n, l_j at j - 1
  bool theorem2_match = false;                 // (n, a) lies in the 2^t p - 1 family
  std::optional<bool> end_rule_match;          // end-vertex rows only

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

/// Builds the record for a verdict, expanding any witness to full length.
ReportRecord make_record(const PgstVerdict& verdict);

inline constexpr const char* kCsvHeader = "n,a,b,verdict,reason,theorem2_match,end_rule_match";

std::string to_csv_row(const ReportRecord& record);

/// Witness entries are JSON numbers when they fit in 64 bits, else strings.
nlohmann::ordered_json to_json(const ReportRecord& record);
/// Throws InvalidArgument on malformed input.
ReportRecord record_from_json(const nlohmann::json& value);

/// Single-line JSON with a stable key order.
std::string to_json_line(const ReportRecord& record);

}  // namespace pgst
