#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace deformata::frontend {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Inconclusive, Error };
std::string to_string(Status s);
int exit_code(Status s);

struct Finding {
  std::string kind;
  Json witness;  // expression values as canonical strings
};

struct Report {
  std::string command;
  std::string inputs_digest;
  Status status = Status::Pass;
  Json bounds = Json::object();  // N, d, seed, ... as used
  Json result = Json::object();
  std::vector<Finding> findings;
  double timing_ms = 0;

  // Fail without findings is promoted to Error so the schema invariant holds.
  Json to_json(bool with_timing = true) const;
};

std::string sha256_hex(std::string_view data);

}  // namespace deformata::frontend
