#include "deformata/frontend/report.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <stdexcept>

namespace deformata::frontend {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Inconclusive:
      return "inconclusive";
    case Status::Error:
      return "error";
  }
  return "error";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Pass:
      return 0;
    case Status::Fail:
      return 1;
    case Status::Inconclusive:
      return 3;
    case Status::Error:
      return 2;
  }
  return 2;
}

Json Report::to_json(bool with_timing) const {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["inputs_digest"] = inputs_digest;
  j["status"] = to_string(status == Status::Fail && findings.empty() ? Status::Error : status);
  j["bounds"] = bounds;
  j["result"] = result;
  Json f = Json::array();
  for (const auto& x : findings) f.push_back({{"kind", x.kind}, {"witness", x.witness}});
  j["findings"] = f;
  if (with_timing) j["timing_ms"] = timing_ms;
  return j;
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

}  // namespace deformata::frontend
