#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deformata/frontend/workspace.hpp"

namespace deformata::frontend {

struct PaperCheck {
  std::string id;
  std::string claim;
  bool passed = false;
  std::string detail;
};

// Builds the named corpus files into one workspace.
Workspace load_corpus(const std::vector<std::string>& files, const BuildOptions& opts = {});

// The worked examples of Sections 2 to 4 on the embedded corpus, in order.
std::vector<PaperCheck> verify_paper(std::uint64_t seed, std::uint32_t center_degree = 8);

}  // namespace deformata::frontend
