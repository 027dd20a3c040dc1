#include "linq/config.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "linq/error.hpp"

namespace linq {

void DeviceSpec::validate() const {
  if (tape_ions < 2) {
    throw ContractViolation("device.tape_ions must be at least 2");
  }
  if (head_size < 2 || head_size > tape_ions) {
    throw ContractViolation("device.head_size must satisfy 2 <= L <= N");
  }
  router.validate();
  noise.validate();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view value, int line) {
  double out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ParseError("malformed numeric value '" + std::string(value) + "'",
                     line);
  }
  return out;
}

int parse_int(std::string_view value, int line) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ParseError("malformed integer value '" + std::string(value) + "'",
                     line);
  }
  return out;
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

} // namespace

DeviceSpec parse_device_config(std::string_view text) {
  DeviceSpec spec;
  bool saw_gamma = false;
  bool saw_epsilon = false;
  bool saw_max_swap_len = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::size_t end = eol == std::string_view::npos ? text.size() : eol;
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) {
      std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("expected 'key = value'", line_no);
      }
      std::string key{trim(line.substr(0, eq))};
      std::string_view value = trim(line.substr(eq + 1));
      if (value.empty()) {
        throw ParseError("missing value for '" + key + "'", line_no);
      }

      if (key == "device.tape_ions") {
        spec.tape_ions = parse_int(value, line_no);
      } else if (key == "device.head_size") {
        spec.head_size = parse_int(value, line_no);
      } else if (key == "router.max_swap_len") {
        spec.router.max_swap_len = parse_int(value, line_no);
        saw_max_swap_len = true;
      } else if (key == "router.alpha") {
        spec.router.alpha = parse_number(value, line_no);
      } else if (key == "router.lookahead_window") {
        spec.router.lookahead_window = parse_int(value, line_no);
      } else if (key == "noise.gamma") {
        spec.noise.gamma = parse_number(value, line_no);
        saw_gamma = true;
      } else if (key == "noise.epsilon") {
        spec.noise.epsilon = parse_number(value, line_no);
        saw_epsilon = true;
      } else if (key == "noise.k0") {
        spec.noise.k0 = parse_number(value, line_no);
      } else if (key == "noise.n_ref") {
        spec.noise.n_ref = parse_int(value, line_no);
      } else if (key == "noise.single_qubit_error") {
        spec.noise.single_qubit_error = parse_number(value, line_no);
      } else if (key == "noise.swap_cost_factor") {
        spec.noise.swap_cost_factor = parse_int(value, line_no);
      } else if (key == "noise.shuttle_rate_um_per_us") {
        spec.noise.shuttle_rate_um_per_us = parse_number(value, line_no);
      } else if (key == "noise.ion_spacing_um") {
        spec.noise.ion_spacing_um = parse_number(value, line_no);
      } else if (key == "noise.tau_1q_us") {
        spec.noise.tau_1q_us = parse_number(value, line_no);
      } else {
        throw ParseError("unknown config key '" + key + "'", line_no);
      }
    }
    if (eol == std::string_view::npos) {
      break;
    }
    pos = eol + 1;
  }

  if (spec.tape_ions == 0 || spec.head_size == 0) {
    throw ParseError("device.tape_ions and device.head_size are required", 1);
  }
  if (!saw_gamma || !saw_epsilon) {
    throw ParseError(
        "noise.gamma and noise.epsilon have no defaults and must be set", 1);
  }
  spec.router.tape_ions = spec.tape_ions;
  spec.router.head_size = spec.head_size;
  if (!saw_max_swap_len) {
    spec.router.max_swap_len = RouterConfig::default_max_swap_len(spec.head_size);
  }
  spec.validate();
  return spec;
}

DeviceSpec load_device_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open device config '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_device_config(buf.str());
}

std::string device_config_text(const DeviceSpec& spec) {
  std::ostringstream out;
  out << "device.tape_ions = " << spec.tape_ions << '\n';
  out << "device.head_size = " << spec.head_size << '\n';
  out << "router.max_swap_len = " << spec.router.max_swap_len << '\n';
  out << "router.alpha = " << format_double(spec.router.alpha) << '\n';
  out << "router.lookahead_window = " << spec.router.lookahead_window << '\n';
  out << "noise.gamma = " << format_double(spec.noise.gamma) << '\n';
  out << "noise.epsilon = " << format_double(spec.noise.epsilon) << '\n';
  out << "noise.k0 = " << format_double(spec.noise.k0) << '\n';
  out << "noise.n_ref = " << spec.noise.n_ref << '\n';
  out << "noise.single_qubit_error = "
      << format_double(spec.noise.single_qubit_error) << '\n';
  out << "noise.swap_cost_factor = " << spec.noise.swap_cost_factor << '\n';
  out << "noise.shuttle_rate_um_per_us = "
      << format_double(spec.noise.shuttle_rate_um_per_us) << '\n';
  out << "noise.ion_spacing_um = " << format_double(spec.noise.ion_spacing_um)
      << '\n';
  out << "noise.tau_1q_us = " << format_double(spec.noise.tau_1q_us) << '\n';
  return out.str();
}

} // namespace linq
