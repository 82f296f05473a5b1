#pragma once

#include <string>
#include <vector>

#include "hybridtls/cli/config.hpp"

namespace htls::cli {

/// Which solution paths apply to cfg.params, one finding per line. Never
/// throws for well-formed parameters; malformed ones become report lines.
std::vector<std::string> validate(const ScenarioConfig& cfg);

}  // namespace htls::cli
