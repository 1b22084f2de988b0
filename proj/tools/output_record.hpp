#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "permsum/functional.hpp"

namespace permsum::cli {

enum class Status { kOk, kFound, kExhausted, kBudgetExceeded, kError };

std::string_view status_name(Status s);

struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

// One result of a CLI invocation. `perm` is present iff status is ok or
// found, and every perm/value pair is recomputed right before emission.
struct OutputRecord {
  std::string command;
  Status status = Status::kOk;
  std::optional<int> n;
  std::optional<std::string> functional;
  std::optional<Rational> target;
  std::optional<Rational> value;
  std::optional<Permutation> perm;
  std::optional<std::vector<Rational>> values;
  std::optional<std::vector<CheckLine>> checks;
  std::optional<std::string> dot;
  std::optional<std::uint64_t> nodes;
  std::optional<std::string> message;
  std::int64_t elapsed_ms = 0;
};

nlohmann::json rational_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OutputRecord& rec);

// Text form: the payload (permutation, value, value list, check lines or DOT
// graph) followed by "# key: value" metadata lines.
std::string to_text(const OutputRecord& rec);

}  // namespace permsum::cli
