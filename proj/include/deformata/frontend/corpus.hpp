#pragma once

#include <map>
#include <string>
#include <string_view>

namespace deformata::frontend {

// Presentation files of corpus/, embedded at build time, keyed by file name.
const std::map<std::string, std::string_view>& corpus();
// InputError for unknown names.
std::string_view corpus_file(const std::string& name);

}  // namespace deformata::frontend
