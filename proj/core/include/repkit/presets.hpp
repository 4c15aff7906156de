#pragma once

#include "repkit/algebra_file.hpp"

namespace repkit {

std::vector<std::string> preset_names();
bool has_preset(const std::string& name);
// Throws ValidationError for unknown names.
AlgebraFile preset(const std::string& name);

} // namespace repkit
