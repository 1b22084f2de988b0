#include "output_record.hpp"

#include <sstream>

namespace permsum::cli {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kOk:
      return "ok";
    case Status::kFound:
      return "found";
    case Status::kExhausted:
      return "exhausted-nonexistent";
    case Status::kBudgetExceeded:
      return "budget-exceeded";
    case Status::kError:
      return "error";
  }
  return "error";
}

nlohmann::json rational_json(const Rational& r) {
  return {{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

Rational rational_from_json(const nlohmann::json& j) {
  return Rational(mpz_class(j.at("num").get<std::string>()), mpz_class(j.at("den").get<std::string>()));
}

nlohmann::json to_json(const OutputRecord& rec) {
  nlohmann::json j;
  j["command"] = rec.command;
  j["status"] = status_name(rec.status);
  if (rec.n) j["n"] = *rec.n;
  if (rec.functional) j["functional"] = *rec.functional;
  if (rec.target) j["target"] = rational_json(*rec.target);
  if (rec.value) j["value"] = rational_json(*rec.value);
  if (rec.perm) j["perm"] = std::vector<int>(rec.perm->entries().begin(), rec.perm->entries().end());
  if (rec.values) {
    auto arr = nlohmann::json::array();
    for (const auto& v : *rec.values) arr.push_back(rational_json(v));
    j["values"] = std::move(arr);
  }
  if (rec.checks) {
    auto arr = nlohmann::json::array();
    for (const auto& c : *rec.checks) {
      arr.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    }
    j["checks"] = std::move(arr);
  }
  if (rec.dot) j["dot"] = *rec.dot;
  if (rec.nodes) j["nodes"] = *rec.nodes;
  if (rec.message) j["message"] = *rec.message;
  j["elapsed_ms"] = rec.elapsed_ms;
  return j;
}

std::string to_text(const OutputRecord& rec) {
  std::ostringstream out;
  // eval leads with the value and tree with the graph; everything else
  // leads with the permutation when there is one.
  const bool perm_is_payload = rec.perm && rec.command != "eval" && rec.command != "tree";
  if (perm_is_payload) {
    out << to_string(*rec.perm) << "\n";
  } else if (rec.command == "eval" && rec.value) {
    out << rec.value->to_string() << "\n";
  }
  if (rec.values) {
    for (const auto& v : *rec.values) out << v.to_string() << "\n";
  }
  if (rec.checks) {
    for (const auto& c : *rec.checks) {
      out << (c.ok ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    }
  }
  if (rec.dot) out << *rec.dot;

  out << "# command: " << rec.command << "\n";
  out << "# status: " << status_name(rec.status) << "\n";
  if (rec.n) out << "# n: " << *rec.n << "\n";
  if (rec.functional) out << "# functional: " << *rec.functional << "\n";
  if (rec.target) out << "# target: " << rec.target->to_string() << "\n";
  if (rec.value) out << "# value: " << rec.value->to_string() << "\n";
  if (rec.perm && !perm_is_payload) out << "# perm: " << to_string(*rec.perm) << "\n";
  if (rec.values) out << "# count: " << rec.values->size() << "\n";
  if (rec.nodes) out << "# nodes: " << *rec.nodes << "\n";
  if (rec.message) out << "# message: " << *rec.message << "\n";
  out << "# elapsed_ms: " << rec.elapsed_ms << "\n";
  return out.str();
}

}  // namespace permsum::cli
