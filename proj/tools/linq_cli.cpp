// Command-line driver: compile programs for a linear-tape trapped-ion
// device, sweep the max-swap-len knob, generate benchmark circuits, and
// replay emitted schedules.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "linq/benchgen.hpp"
#include "linq/error.hpp"
#include "linq/io.hpp"
#include "linq/oracle.hpp"
#include "linq/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitContract = 3;
constexpr int kExitInternal = 4;

int worker_count() {
  if (const char* env = std::getenv("LINQ_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) {
      return n;
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct CompileArgs {
  std::string circuit_path;
  std::string device_path;
  std::string out_dir;
  std::optional<int> max_swap_len;
  bool json = false;
};

linq::DeviceSpec resolve_device(const CompileArgs& args) {
  linq::DeviceSpec device = linq::load_device_config(args.device_path);
  if (args.max_swap_len) {
    device.router.max_swap_len = *args.max_swap_len;
    device.validate();
  }
  return device;
}

void write_compile_artifacts(const std::string& out_dir,
                             const linq::DeviceSpec& device,
                             const linq::CompileResult& result) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  auto target = [&](const char* name) {
    return (fs::path(out_dir) / name).string();
  };
  linq::atomic_write_file(
      target("schedule.txt"),
      linq::write_schedule_text(result.sched, result.routed, result.report));
  linq::atomic_write_file(
      target("routed.lqasm"),
      linq::write_lqasm(
          result.routed.circuit, "q",
          {"routed circuit: operands are tape slots, swaps included",
           "swaps=" + std::to_string(result.routed.swap_count) +
               " opposing=" +
               std::to_string(result.routed.opposing_swap_count)}));
  auto json =
      linq::report_json(device, result.routed, result.sched, result.report);
  linq::atomic_write_file(target("report.json"), json.dump(2) + "\n");
}

int cmd_compile(const CompileArgs& args) {
  linq::DeviceSpec device = resolve_device(args);
  linq::CompileResult result =
      linq::compile_program(linq::read_file(args.circuit_path), device);
  if (!args.out_dir.empty()) {
    write_compile_artifacts(args.out_dir, device, result);
  }
  auto json =
      linq::report_json(device, result.routed, result.sched, result.report);
  if (args.json) {
    std::cout << json.dump(2) << '\n';
  } else {
    const auto& m = json["metrics"];
    std::cout << "qubits            " << result.source.qubit_count << '\n'
              << "native gates      " << m["native_gates"] << '\n'
              << "swaps             " << m["swap_count"] << " (opposing "
              << m["opposing_swap_count"] << ")\n"
              << "tape moves        " << m["move_count"] << " over "
              << m["move_distance_um"] << " um\n"
              << "success rate      " << m["success_rate"] << '\n'
              << "execution time    " << m["t_exec_s"] << " s\n";
  }
  return kExitOk;
}

struct SweepRow {
  int max_swap_len;
  int swaps;
  int moves;
  double success_rate;
  double t_exec_s;
};

int cmd_sweep(const CompileArgs& args, int from, int to) {
  linq::DeviceSpec base = linq::load_device_config(args.device_path);
  if (from == 0) {
    from = 2;
  }
  if (to == 0) {
    to = base.head_size - 1;
  }
  if (from < 2 || to > base.head_size || from > to) {
    throw linq::ParseError("sweep range must satisfy 2 <= from <= to <= L");
  }
  const std::string program = linq::read_file(args.circuit_path);

  std::vector<SweepRow> rows(to - from + 1);
  std::vector<int> values;
  for (int v = from; v <= to; ++v) {
    values.push_back(v);
  }
  // Sweep points are independent compiles; results land in a fixed slot per
  // value, so the output cannot depend on the worker count.
  const int workers = std::min<int>(worker_count(), values.size());
  std::atomic<std::size_t> next{0};
  auto run = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= values.size()) {
        return;
      }
      linq::DeviceSpec device = base;
      device.router.max_swap_len = values[i];
      device.validate();
      linq::CompileResult r = linq::compile_program(program, device);
      rows[i] = SweepRow{values[i], r.routed.swap_count, r.sched.move_count,
                         r.report.success_rate, r.report.t_exec_s};
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) {
    pool.emplace_back(run);
  }
  run();
  for (auto& t : pool) {
    t.join();
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].success_rate > rows[best].success_rate) {
      best = i; // ties keep the smaller max_swap_len
    }
  }
  std::ostringstream csv;
  csv << "max_swap_len,swaps,moves,success_rate,t_exec_s,best\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    nlohmann::ordered_json row_fmt; // reuse the JSON float formatting
    row_fmt["s"] = rows[i].success_rate;
    row_fmt["t"] = rows[i].t_exec_s;
    csv << rows[i].max_swap_len << ',' << rows[i].swaps << ',' << rows[i].moves
        << ',' << row_fmt["s"].dump() << ',' << row_fmt["t"].dump() << ','
        << (i == best ? 1 : 0) << '\n';
  }
  std::cout << csv.str();
  if (!args.out_dir.empty()) {
    std::filesystem::create_directories(args.out_dir);
    linq::atomic_write_file(
        (std::filesystem::path(args.out_dir) / "sweep.csv").string(),
        csv.str());
  }
  return kExitOk;
}

int cmd_gen(const std::string& family, int n, std::uint64_t seed,
            const std::string& out_path, int layers) {
  linq::BenchmarkSpec spec;
  spec.family = linq::family_from_string(family);
  spec.qubit_count = n;
  spec.seed = seed;
  if (layers > 0) {
    spec.qaoa_layers = layers;
    spec.rcs_layers = layers;
  }
  std::string text = linq::generate(spec);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    linq::atomic_write_file(out_path, text);
  }
  return kExitOk;
}

int cmd_replay(const std::string& dir, const std::string& device_path,
               bool json) {
  namespace fs = std::filesystem;
  linq::DeviceSpec device = linq::load_device_config(device_path);
  std::string routed_text =
      linq::read_file((fs::path(dir) / "routed.lqasm").string());
  std::string schedule_text =
      linq::read_file((fs::path(dir) / "schedule.txt").string());

  // Rebuild the physical circuit; a routed file is valid source text.
  linq::ParsedProgram parsed = linq::parse(routed_text);
  linq::Circuit physical = linq::decompose(parsed);
  linq::RoutedCircuit routed;
  routed.circuit = physical;
  linq::Schedule sched = linq::read_schedule_text(schedule_text, routed);
  if (sched.tape_ions != device.tape_ions ||
      sched.head_size != device.head_size) {
    throw linq::ContractViolation(
        "schedule geometry does not match the device config");
  }

  // Window and dependency checks, plus consistency of the priced fields.
  std::vector<bool> done(physical.gate_count(), false);
  for (const auto& step : sched.steps) {
    if (step.head_position < 0 ||
        step.head_position > sched.tape_ions - sched.head_size) {
      throw linq::ContractViolation("head position out of range");
    }
    for (int gi : step.gates) {
      const auto& g = physical.gates[gi];
      for (int q : {g.q0, g.q1}) {
        if (q >= 0 && (q < step.head_position ||
                       q > step.head_position + sched.head_size - 1)) {
          throw linq::ContractViolation("gate outside its head window");
        }
      }
      for (int pr : physical.preds[gi]) {
        if (!done[pr]) {
          throw linq::ContractViolation("dependency violation in schedule");
        }
      }
      done[gi] = true;
    }
  }
  linq::FidelityReport report = linq::evaluate(sched, routed, device.noise);
  if (json) {
    auto j = linq::report_json(device, routed, sched, report);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "replay ok: " << sched.step_count() << " steps, "
              << sched.move_count << " moves, success rate "
              << report.success_rate << '\n';
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"compiler and fidelity simulator for linear-tape trapped-ion "
               "devices"};
  app.require_subcommand(1);

  CompileArgs cargs;
  int sweep_from = 0;
  int sweep_to = 0;

  auto* compile =
      app.add_subcommand("compile", "compile a .lqasm program for a device");
  compile->add_option("circuit", cargs.circuit_path, "input .lqasm file")
      ->required();
  compile->add_option("--device", cargs.device_path, "device config file")
      ->required();
  compile->add_option("--out", cargs.out_dir,
                      "directory for schedule.txt, report.json, routed.lqasm");
  compile->add_option("--max-swap-len", cargs.max_swap_len,
                      "override router.max_swap_len");
  compile->add_flag("--json", cargs.json, "print the full report as JSON");

  auto* sweep = app.add_subcommand(
      "sweep", "compile once per max_swap_len value and tabulate metrics");
  sweep->add_option("circuit", cargs.circuit_path, "input .lqasm file")
      ->required();
  sweep->add_option("--device", cargs.device_path, "device config file")
      ->required();
  sweep->add_option("--out", cargs.out_dir, "directory for sweep.csv");
  sweep->add_option("--from", sweep_from, "smallest max_swap_len (default 2)");
  sweep->add_option("--to", sweep_to, "largest max_swap_len (default L-1)");

  std::string gen_family;
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  int gen_layers = 0;
  auto* gen = app.add_subcommand("gen", "generate a benchmark circuit");
  gen->add_option("family", gen_family,
                  "adder | bv | qaoa | rcs | qft | longrange")
      ->required();
  gen->add_option("qubits", gen_n, "benchmark size parameter")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output path ('-' for stdout)");
  gen->add_option("--layers", gen_layers,
                  "layer count override (qaoa and rcs)");

  std::string replay_dir;
  bool replay_json = false;
  auto* replay = app.add_subcommand(
      "replay", "validate and re-price a compile output directory");
  replay->add_option("dir", replay_dir, "directory written by compile")
      ->required();
  replay->add_option("--device", cargs.device_path, "device config file")
      ->required();
  replay->add_flag("--json", replay_json, "print the recomputed report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) { // --help
      return app.exit(e);
    }
    app.exit(e);
    return kExitInput;
  }

  try {
    if (compile->parsed()) {
      return cmd_compile(cargs);
    }
    if (sweep->parsed()) {
      return cmd_sweep(cargs, sweep_from, sweep_to);
    }
    if (gen->parsed()) {
      return cmd_gen(gen_family, gen_n, gen_seed, gen_out, gen_layers);
    }
    if (replay->parsed()) {
      return cmd_replay(replay_dir, cargs.device_path, replay_json);
    }
  } catch (const linq::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const linq::GeneratorError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const linq::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitContract;
  } catch (const linq::ContractViolation& e) {
    std::cerr << "contract error: " << e.what() << '\n';
    return kExitContract;
  } catch (const linq::OracleOverflow& e) {
    std::cerr << "oracle overflow: " << e.what() << '\n';
    return kExitContract;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
