#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphcodes/errors.hpp"

namespace graphcodes::cli {

inline constexpr int kSchemaVersion = 1;

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

/// How `observed` must relate to `expected` (and `upper` for Between).
enum class Relation { Equal, AtMost, AtLeast, Between };

std::string to_string(Relation r);
Relation relation_from_string(const std::string& s);

struct CheckRow {
  std::string check;
  std::optional<int> d;
  Relation relation = Relation::Equal;
  std::optional<BigInt> observed;  // brute force
  std::optional<BigInt> expected;  // closed form or bound (lower bound for Between)
  std::optional<BigInt> upper;     // Between only
  Status status = Status::Skipped;
  std::string reason;

  friend bool operator==(const CheckRow&, const CheckRow&) = default;
};

struct DegreeRow {
  int d = 0;
  std::optional<BigInt> dim;
  std::optional<BigInt> mindist;
  std::optional<BigInt> singleton;

  friend bool operator==(const DegreeRow&, const DegreeRow&) = default;
};

struct RegularityRow {
  std::optional<BigInt> bruteforce;
  std::optional<BigInt> closed_form;
  std::optional<BigInt> ternary_parity_join;

  friend bool operator==(const RegularityRow&, const RegularityRow&) = default;
};

struct VerifyReport {
  std::string graph_name;
  int n = 0;
  int s = 0;
  std::vector<std::pair<int, int>> edges;
  int q = 0;
  int d_max = 0;
  std::optional<BigInt> length;
  std::vector<DegreeRow> degrees;
  RegularityRow regularity;
  std::vector<CheckRow> checks;

  std::size_t count(Status s) const;
  bool failed() const { return count(Status::Fail) > 0; }

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

nlohmann::json to_json(const VerifyReport& r);
VerifyReport report_from_json(const nlohmann::json& j);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json big_to_json(const BigInt& v);
BigInt big_from_json(const nlohmann::json& j);

}  // namespace graphcodes::cli
