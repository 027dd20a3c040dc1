#pragma once

#include <string>
#include <string_view>

#include "linq/noise.hpp"
#include "linq/router.hpp"

namespace linq {

/// Device description: tape geometry, router knobs, and noise parameters.
/// Loaded from a flat `section.key = value` text file. gamma and epsilon are
/// mandatory; every other key has a default. Reports echo the fully resolved
/// spec so no result depends on a hidden default.
struct DeviceSpec {
  int tape_ions = 0;
  int head_size = 0;
  RouterConfig router; // tape_ions/head_size mirrored in here after resolve
  NoiseParams noise;

  void validate() const;
};

/// Parses device config text. Unknown keys and malformed lines are errors;
/// `#` starts a comment. Throws ParseError with the offending line number.
DeviceSpec parse_device_config(std::string_view text);

DeviceSpec load_device_config(const std::string& path);

/// Canonical `section.key = value` rendering of a resolved spec.
std::string device_config_text(const DeviceSpec& spec);

} // namespace linq
