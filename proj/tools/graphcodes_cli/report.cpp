#include "graphcodes_cli/report.hpp"

#include <algorithm>
#include <limits>

namespace graphcodes::cli {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Skipped:
      return "SKIPPED";
  }
  return "?";
}

Status status_from_string(const std::string& s) {
  if (s == "PASS") return Status::Pass;
  if (s == "FAIL") return Status::Fail;
  if (s == "SKIPPED") return Status::Skipped;
  throw InvalidParams("unknown status: " + s);
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Equal:
      return "eq";
    case Relation::AtMost:
      return "le";
    case Relation::AtLeast:
      return "ge";
    case Relation::Between:
      return "between";
  }
  return "?";
}

Relation relation_from_string(const std::string& s) {
  if (s == "eq") return Relation::Equal;
  if (s == "le") return Relation::AtMost;
  if (s == "ge") return Relation::AtLeast;
  if (s == "between") return Relation::Between;
  throw InvalidParams("unknown relation: " + s);
}

std::size_t VerifyReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const CheckRow& c) { return c.status == s; }));
}

json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt big_from_json(const json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw InvalidParams("expected an integer in report JSON");
}

namespace {

json opt(const std::optional<BigInt>& v) { return v ? big_to_json(*v) : json(nullptr); }

std::optional<BigInt> opt_big(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return big_from_json(j.at(key));
}

}  // namespace

json to_json(const VerifyReport& r) {
  json edges = json::array();
  for (auto [u, v] : r.edges) edges.push_back({u, v});
  json degrees = json::array();
  for (const auto& row : r.degrees)
    degrees.push_back({{"d", row.d}, {"dim", opt(row.dim)}, {"mindist", opt(row.mindist)}, {"singleton", opt(row.singleton)}});
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"check", c.check},
                      {"d", c.d ? json(*c.d) : json(nullptr)},
                      {"relation", to_string(c.relation)},
                      {"observed", opt(c.observed)},
                      {"expected", opt(c.expected)},
                      {"upper", opt(c.upper)},
                      {"status", to_string(c.status)},
                      {"reason", c.reason}});
  return {{"schema", kSchemaVersion},
          {"graph", {{"name", r.graph_name}, {"n", r.n}, {"s", r.s}, {"edges", edges}}},
          {"q", r.q},
          {"d_max", r.d_max},
          {"length", opt(r.length)},
          {"degrees", degrees},
          {"regularity",
           {{"bruteforce", opt(r.regularity.bruteforce)},
            {"closed_form", opt(r.regularity.closed_form)},
            {"ternary_parity_join", opt(r.regularity.ternary_parity_join)}}},
          {"checks", checks},
          {"summary",
           {{"pass", r.count(Status::Pass)}, {"fail", r.count(Status::Fail)}, {"skipped", r.count(Status::Skipped)}}}};
}

VerifyReport report_from_json(const json& j) {
  if (j.at("schema").get<int>() != kSchemaVersion) throw InvalidParams("unsupported report schema");
  VerifyReport r;
  const auto& g = j.at("graph");
  r.graph_name = g.at("name").get<std::string>();
  r.n = g.at("n").get<int>();
  r.s = g.at("s").get<int>();
  for (const auto& e : g.at("edges")) r.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  r.q = j.at("q").get<int>();
  r.d_max = j.at("d_max").get<int>();
  r.length = opt_big(j, "length");
  for (const auto& row : j.at("degrees"))
    r.degrees.push_back({row.at("d").get<int>(), opt_big(row, "dim"), opt_big(row, "mindist"), opt_big(row, "singleton")});
  const auto& reg = j.at("regularity");
  r.regularity = {opt_big(reg, "bruteforce"), opt_big(reg, "closed_form"), opt_big(reg, "ternary_parity_join")};
  for (const auto& c : j.at("checks")) {
    CheckRow row;
    row.check = c.at("check").get<std::string>();
    if (!c.at("d").is_null()) row.d = c.at("d").get<int>();
    row.relation = relation_from_string(c.at("relation").get<std::string>());
    row.observed = opt_big(c, "observed");
    row.expected = opt_big(c, "expected");
    row.upper = opt_big(c, "upper");
    row.status = status_from_string(c.at("status").get<std::string>());
    row.reason = c.at("reason").get<std::string>();
    r.checks.push_back(std::move(row));
  }
  return r;
}

}  // namespace graphcodes::cli
