#pragma once

#include <string>
#include <vector>

namespace bogo::cli {

std::vector<std::string> schema_names();
const std::string& schema_text(const std::string& name);

}  // namespace bogo::cli
