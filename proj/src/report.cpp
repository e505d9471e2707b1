#include "pgst/report.hpp"

#include <limits>

namespace pgst {
namespace {

nlohmann::ordered_json integer_to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

BigInt integer_from_json(const nlohmann::json& value) {
  if (value.is_number_integer()) return BigInt(value.get<std::int64_t>());
  if (value.is_string()) return BigInt(value.get<std::string>());
  detail::fail_argument("witness entries must be integers");
}

}  // namespace

ReportRecord make_record(const PgstVerdict& verdict) {
  ReportRecord record;
  record.n = verdict.n;
  record.a = verdict.a;
  record.b = verdict.b;
  record.verdict = verdict.answer;
  record.reason = verdict.reason;
  if (verdict.witness) {
    std::vector<BigInt> full(static_cast<std::size_t>(verdict.n), BigInt(0));
    for (std::size_t i = 0; i < verdict.support.size(); ++i) {
      full[static_cast<std::size_t>(verdict.support[i] - 1)] = (*verdict.witness)[i];
    }
    record.witness = std::move(full);
  }
  record.theorem2_match = in_internal_pgst_family(verdict.n, verdict.a);
  return record;
}

std::string to_csv_row(const ReportRecord& record) {
  std::string row = std::to_string(record.n) + "," + std::to_string(record.a) + "," + std::to_string(record.b) + ",";
  row += std::string(to_string(record.verdict)) + "," + std::string(to_string(record.reason)) + ",";
  row += record.theorem2_match ? "true" : "false";
  row += ",";
  if (record.end_rule_match) row += *record.end_rule_match ? "true" : "false";
  return row;
}

nlohmann::ordered_json to_json(const ReportRecord& record) {
  nlohmann::ordered_json out;
  out["n"] = record.n;
  out["a"] = record.a;
  out["b"] = record.b;
  out["verdict"] = std::string(to_string(record.verdict));
  out["reason"] = std::string(to_string(record.reason));
  if (record.witness) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& x : *record.witness) arr.push_back(integer_to_json(x));
    out["witness"] = std::move(arr);
  } else {
    out["witness"] = nullptr;
  }
  out["theorem2_match"] = record.theorem2_match;
  if (record.end_rule_match) {
    out["end_rule_match"] = *record.end_rule_match;
  } else {
    out["end_rule_match"] = nullptr;
  }
  return out;
}

ReportRecord record_from_json(const nlohmann::json& value) {
  try {
    ReportRecord record;
    record.n = value.at("n").get<int>();
    record.a = value.at("a").get<int>();
    record.b = value.at("b").get<int>();
    record.verdict = parse_answer(value.at("verdict").get<std::string>());
    record.reason = parse_reason(value.at("reason").get<std::string>());
    const auto& witness = value.at("witness");
    if (!witness.is_null()) {
      std::vector<BigInt> entries;
      for (const auto& x : witness) entries.push_back(integer_from_json(x));
      record.witness = std::move(entries);
    }
    record.theorem2_match = value.at("theorem2_match").get<bool>();
    const auto& end_rule = value.at("end_rule_match");
    if (!end_rule.is_null()) record.end_rule_match = end_rule.get<bool>();
    return record;
  } catch (const nlohmann::json::exception& e) {
    detail::fail_argument(std::string("malformed report record: ") + e.what());
  }
}

std::string to_json_line(const ReportRecord& record) { return to_json(record).dump(); }

}  // namespace pgst
