// Copyright 2026 The tiltc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tilt/benchgen.hpp"
#include "tilt/blocking.hpp"
#include "tilt/costmodel.hpp"
#include "tilt/qasm.hpp"
#include "tilt/report.hpp"
#include "tilt/scheduler.hpp"
#include "tilt/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string resolve_output(const std::string& path) {
  if (path.empty() || path.front() == '/') {
    return path;
  }
  const char* dir = std::getenv("TILTC_OUT_DIR");
  if (dir == nullptr || *dir == '\0' ||
      path.find('/') != std::string::npos) {
    return path;
  }
  std::string out = dir;
  if (out.back() != '/') {
    out.push_back('/');
  }
  return out + path;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::string resolved = resolve_output(path);
  std::ofstream out(resolved);
  if (!out) {
    throw IoError("cannot write '" + resolved + "'");
  }
  out << contents;
}

/// Generator spec "name:n[:seed]"; n may be a range "lo..hi" or
/// "lo..hixSTEP" which expands to several circuits.
struct AppSpec {
  std::string name;
  int n = 0;
  unsigned seed = 0;
  std::string label;
};

std::vector<AppSpec> parse_app_spec(const std::string& spec,
                                    unsigned default_seed) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream stream(spec);
  while (std::getline(stream, token, ':')) {
    parts.push_back(token);
  }
  if (parts.size() < 2 || parts.size() > 3) {
    throw std::invalid_argument("bad generator spec '" + spec +
                                "', expected name:n[:seed]");
  }
  unsigned seed = default_seed;
  if (parts.size() == 3) {
    seed = static_cast<unsigned>(std::stoul(parts[2]));
  }
  std::vector<AppSpec> out;
  const std::string& nspec = parts[1];
  auto dots = nspec.find("..");
  if (dots == std::string::npos) {
    AppSpec a;
    a.name = parts[0];
    a.n = std::stoi(nspec);
    a.seed = seed;
    a.label = parts[0] + ":" + std::to_string(a.n);
    out.push_back(a);
    return out;
  }
  int lo = std::stoi(nspec.substr(0, dots));
  std::string rest = nspec.substr(dots + 2);
  int step = lo;
  auto x = rest.find('x');
  int hi;
  if (x == std::string::npos) {
    hi = std::stoi(rest);
  } else {
    hi = std::stoi(rest.substr(0, x));
    step = std::stoi(rest.substr(x + 1));
  }
  if (step <= 0 || hi < lo) {
    throw std::invalid_argument("bad size range in '" + spec + "'");
  }
  for (int n = lo; n <= hi; n += step) {
    AppSpec a;
    a.name = parts[0];
    a.n = n;
    a.seed = seed;
    a.label = parts[0] + ":" + std::to_string(n);
    out.push_back(a);
  }
  return out;
}

tilt::Circuit load_circuit(const std::string& gen_spec,
                           const std::string& input_path, unsigned seed,
                           bool decompose_cp) {
  tilt::Circuit c;
  if (!gen_spec.empty()) {
    std::vector<AppSpec> apps = parse_app_spec(gen_spec, seed);
    if (apps.size() != 1) {
      throw std::invalid_argument("size ranges are only valid in sweep");
    }
    c = tilt::generate_benchmark(apps[0].name, apps[0].n, apps[0].seed);
  } else {
    std::string text = read_file(input_path);
    c = tilt::parse_qasm(text, input_path);
  }
  if (decompose_cp) {
    c = tilt::decompose_cp_to_cx(c);
  }
  return c;
}

struct CompileResult {
  tilt::Schedule schedule;
  std::vector<tilt::Block> blocks;
  double compile_ms = 0.0;
};

CompileResult compile_circuit(const tilt::Circuit& c, int zone,
                              const std::string& algo) {
  if (algo != "boss" && algo != "baseline") {
    throw std::invalid_argument("unknown algorithm '" + algo + "'");
  }
  CompileResult result;
  auto start = std::chrono::steady_clock::now();
  if (algo == "boss") {
    result.blocks = tilt::tilt_blocking(c, zone);
    result.schedule = tilt::schedule_blocks(result.blocks, c, zone);
  } else {
    result.schedule = tilt::schedule_baseline(c, zone);
  }
  auto stop = std::chrono::steady_clock::now();
  result.compile_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return result;
}

tilt::Json summary_json(const tilt::Schedule& s, double compile_ms,
                        bool valid) {
  return tilt::Json{{"circuit", s.circuit_name},
                    {"algo", s.algorithm},
                    {"n", s.n},
                    {"Z", s.zone},
                    {"S", s.metrics.shuttles},
                    {"swaps", s.metrics.swaps},
                    {"dist", s.metrics.shuttle_distance},
                    {"g", s.metrics.two_qubit_gates},
                    {"L", s.metrics.blocks},
                    {"compile_ms", compile_ms},
                    {"valid", valid}};
}

struct CommonOpts {
  std::string gen_spec;
  std::string input_path;
  unsigned seed = 1;
  bool decompose_cp = false;
};

void add_input_options(CLI::App* cmd, CommonOpts& opts) {
  auto* gen = cmd->add_option("--gen", opts.gen_spec,
                              "generator spec name:n[:seed]");
  auto* input = cmd->add_option("--input", opts.input_path,
                                "OpenQASM 2 input file");
  gen->excludes(input);
  cmd->add_option("--seed", opts.seed, "default generator seed");
  cmd->add_flag("--decompose-cp", opts.decompose_cp,
                "rewrite controlled-phase gates into CX pairs");
}

void require_input(const CommonOpts& opts) {
  if (opts.gen_spec.empty() == opts.input_path.empty()) {
    throw std::invalid_argument("exactly one of --gen / --input is required");
  }
}

int run_compile(const CommonOpts& opts, int zone, bool ideal,
                const std::string& algo, const std::string& schedule_out,
                const std::string& blocks_out,
                const std::string& summary_out) {
  require_input(opts);
  tilt::Circuit c =
      load_circuit(opts.gen_spec, opts.input_path, opts.seed,
                   opts.decompose_cp);
  if (ideal) {
    if (zone > 0) {
      throw std::invalid_argument("--ideal and --zone are exclusive");
    }
    zone = c.n_qubits;  // whole tape inside the laser region, no shuttles
  } else if (zone <= 0) {
    throw std::invalid_argument("either --zone or --ideal is required");
  }
  CompileResult result = compile_circuit(c, zone, algo);
  tilt::VerificationReport verdict =
      tilt::verify(c, result.schedule, zone);
  tilt::Json summary =
      summary_json(result.schedule, result.compile_ms, verdict.valid);
  if (!summary_out.empty()) {
    write_file(summary_out, summary.dump(2) + "\n");
  }
  std::cout << summary.dump(2) << "\n";
  if (!verdict.valid) {
    // No schedule leaves the compiler without passing verification.
    std::cerr << "verification failed:\n"
              << tilt::verification_to_json(verdict).dump(2) << "\n";
    return kExitVerification;
  }
  if (!schedule_out.empty()) {
    write_file(schedule_out,
               tilt::schedule_to_json(result.schedule).dump(2) + "\n");
  }
  if (!blocks_out.empty()) {
    write_file(blocks_out, tilt::blocks_to_json(result.blocks).dump(2) + "\n");
  }
  return kExitOk;
}

int run_verify(const CommonOpts& opts, int zone,
               const std::string& schedule_path,
               const std::string& report_out) {
  require_input(opts);
  tilt::Circuit c = load_circuit(opts.gen_spec, opts.input_path, opts.seed,
                                 opts.decompose_cp);
  tilt::Json j;
  try {
    j = tilt::Json::parse(read_file(schedule_path));
  } catch (const tilt::Json::parse_error& e) {
    throw IoError(std::string("bad schedule JSON: ") + e.what());
  }
  tilt::Schedule s = tilt::schedule_from_json(j);
  tilt::VerificationReport verdict = tilt::verify(c, s, zone);
  std::string text = tilt::verification_to_json(verdict).dump(2) + "\n";
  if (!report_out.empty()) {
    write_file(report_out, text);
  }
  std::cout << text;
  return verdict.valid ? kExitOk : kExitVerification;
}

struct EstimateOpts {
  std::string model = "trout";
  tilt::TimingParams timing;
  tilt::FidelityParams fidelity;
  int n_ions_override = 0;
};

void add_estimate_options(CLI::App* cmd, EstimateOpts& opts) {
  cmd->add_option("--model", opts.model, "gate-time model: duan|trout|pm");
  cmd->add_option("--t1-us", opts.timing.t1_initial_cooling_us,
                  "initial cooling time (us)");
  cmd->add_option("--cool-us", opts.timing.cool_per_shuttle_us,
                  "per-shuttle cooling time (us)");
  cmd->add_option("--t3-us", opts.timing.t3_readout_us, "readout time (us)");
  cmd->add_option("--shuttle-speed", opts.timing.shuttle_speed_um_per_us,
                  "shuttle speed (um/us)");
  cmd->add_option("--ion-pitch", opts.timing.ion_pitch_um,
                  "ion spacing (um per tape position)");
  cmd->add_option("--eps-laser", opts.fidelity.eps_laser,
                  "laser precision coefficient");
  cmd->add_option("--eps-shuttle", opts.fidelity.eps_shuttle,
                  "per-shuttle residual entanglement");
  cmd->add_flag("--reset-shuttle-index", opts.fidelity.reset_shuttle_index,
                "treat cooling as resetting the shuttle error index");
  cmd->add_option("--n-ions", opts.n_ions_override,
                  "ions in the laser region (defaults to the zone size)");
}

tilt::Json estimate_json(const tilt::Schedule& s,
                         const tilt::VerificationReport& verdict,
                         const EstimateOpts& opts) {
  tilt::GateTimeModel model = tilt::gate_time_model_from_name(opts.model);
  tilt::ExecutionReport report =
      tilt::execution_time(s, verdict, model, opts.timing);
  int n_ions = opts.n_ions_override > 0 ? opts.n_ions_override : s.zone;
  long g_total = verdict.metrics.two_qubit_gates + verdict.metrics.swaps;
  double success = tilt::success_rate(g_total, verdict.metrics.shuttles,
                                      n_ions, opts.fidelity);
  tilt::Json j = tilt::execution_report_to_json(report, model);
  j["success_rate"] = success;
  j["n_ions"] = n_ions;
  j["g_including_swaps"] = g_total;
  return j;
}

int run_estimate(const CommonOpts& opts, int zone,
                 const std::string& schedule_path, const EstimateOpts& est,
                 const std::string& report_out) {
  require_input(opts);
  tilt::Circuit c = load_circuit(opts.gen_spec, opts.input_path, opts.seed,
                                 opts.decompose_cp);
  tilt::Json j;
  try {
    j = tilt::Json::parse(read_file(schedule_path));
  } catch (const tilt::Json::parse_error& e) {
    throw IoError(std::string("bad schedule JSON: ") + e.what());
  }
  tilt::Schedule s = tilt::schedule_from_json(j);
  tilt::VerificationReport verdict = tilt::verify(c, s, zone);
  if (!verdict.valid) {
    std::cerr << "verification failed:\n"
              << tilt::verification_to_json(verdict).dump(2) << "\n";
    return kExitVerification;
  }
  std::string text = estimate_json(s, verdict, est).dump(2) + "\n";
  if (!report_out.empty()) {
    write_file(report_out, text);
  }
  std::cout << text;
  return kExitOk;
}

int run_gen(const std::string& name, int n, unsigned seed, bool decompose_cp,
            const std::string& out_path) {
  tilt::Circuit c = tilt::generate_benchmark(name, n, seed);
  if (decompose_cp) {
    c = tilt::decompose_cp_to_cx(c);
  }
  std::string text = tilt::emit_qasm(c);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return kExitOk;
}

struct SweepOpts {
  std::vector<std::string> apps;
  std::vector<int> zones;
  std::vector<std::string> algos = {"boss", "baseline"};
  std::vector<std::string> models = {"trout"};
  unsigned seed = 1;
  bool decompose_cp = false;
  bool stable = false;
  std::string out;
  std::string schedules_dir;
  EstimateOpts est;
};

int run_sweep(const SweepOpts& opts) {
  std::vector<AppSpec> apps;
  for (const std::string& spec : opts.apps) {
    for (AppSpec a : parse_app_spec(spec, opts.seed)) {
      apps.push_back(std::move(a));
    }
  }
  if (!apps.empty() && opts.zones.empty()) {
    throw std::invalid_argument("--zones is required when apps are given");
  }
  for (const std::string& algo : opts.algos) {
    if (algo != "boss" && algo != "baseline") {
      throw std::invalid_argument("unknown algorithm '" + algo + "'");
    }
  }
  for (const std::string& model : opts.models) {
    tilt::gate_time_model_from_name(model);  // validates
  }
  std::ostringstream csv;
  csv << tilt::csv_header() << "\n";
  for (const AppSpec& app : apps) {
    for (int zone : opts.zones) {
      for (const std::string& algo : opts.algos) {
        try {
          tilt::Circuit c =
              tilt::generate_benchmark(app.name, app.n, app.seed);
          if (opts.decompose_cp) {
            c = tilt::decompose_cp_to_cx(c);
          }
          CompileResult result = compile_circuit(c, zone, algo);
          tilt::VerificationReport verdict =
              tilt::verify(c, result.schedule, zone);
          if (!verdict.valid) {
            throw std::runtime_error("verification failed");
          }
          if (!opts.schedules_dir.empty()) {
            std::string path = opts.schedules_dir + "/" + app.label + "_z" +
                               std::to_string(zone) + "_" + algo + ".json";
            write_file(path,
                       tilt::schedule_to_json(result.schedule).dump(2) + "\n");
          }
          for (const std::string& model_name : opts.models) {
            EstimateOpts est = opts.est;
            est.model = model_name;
            tilt::GateTimeModel model =
                tilt::gate_time_model_from_name(model_name);
            tilt::ExecutionReport exec = tilt::execution_time(
                result.schedule, verdict, model, est.timing);
            int n_ions =
                est.n_ions_override > 0 ? est.n_ions_override : zone;
            tilt::SweepRow row;
            row.app = app.label;
            row.n = app.n;
            row.zone = zone;
            row.algo = algo;
            row.model = model_name;
            row.shuttles = verdict.metrics.shuttles;
            row.swaps = verdict.metrics.swaps;
            row.dist = verdict.metrics.shuttle_distance;
            row.two_qubit_gates =
                verdict.metrics.two_qubit_gates + verdict.metrics.swaps;
            row.blocks = result.schedule.metrics.blocks;
            row.t_exec_us = exec.t_exec_us;
            row.success = tilt::success_rate(
                row.two_qubit_gates, row.shuttles, n_ions, est.fidelity);
            row.compile_ms = opts.stable ? 0.0 : result.compile_ms;
            csv << tilt::csv_row(row) << "\n";
          }
        } catch (const std::exception& e) {
          csv << "# error: " << app.label << " Z=" << zone << " " << algo
              << ": " << e.what() << "\n";
        }
      }
    }
  }
  if (opts.out.empty()) {
    std::cout << csv.str();
  } else {
    write_file(opts.out, csv.str());
    std::cout << "wrote " << resolve_output(opts.out) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compiler and scheduler for linear-tape trapped-ion hardware"};
  app.require_subcommand(1);

  int exit_code = kExitOk;

  // compile
  auto* compile = app.add_subcommand(
      "compile", "compile a circuit into a shuttle/swap/gate schedule");
  CommonOpts compile_in;
  add_input_options(compile, compile_in);
  int compile_zone = 0;
  bool compile_ideal = false;
  std::string compile_algo = "boss";
  std::string compile_schedule_out;
  std::string compile_blocks_out;
  std::string compile_summary_out;
  compile->add_option("--zone,-z", compile_zone, "execution zone size");
  compile->add_flag("--ideal", compile_ideal,
                    "ideal device: zone spans the whole tape (Z = n, S = 0)");
  compile->add_option("--algo", compile_algo, "boss|baseline");
  compile->add_option("--schedule,-o", compile_schedule_out,
                      "write the schedule JSON here");
  compile->add_option("--blocks", compile_blocks_out,
                      "write the block list JSON here");
  compile->add_option("--summary", compile_summary_out,
                      "write the summary JSON here");
  compile->callback([&]() {
    exit_code = run_compile(compile_in, compile_zone, compile_ideal,
                            compile_algo, compile_schedule_out,
                            compile_blocks_out, compile_summary_out);
  });

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "replay a schedule against its circuit and zone rules");
  CommonOpts verify_in;
  add_input_options(verify_cmd, verify_in);
  int verify_zone = 16;
  std::string verify_schedule;
  std::string verify_report_out;
  verify_cmd->add_option("--zone,-z", verify_zone, "execution zone size")
      ->required();
  verify_cmd->add_option("--schedule", verify_schedule, "schedule JSON file")
      ->required();
  verify_cmd->add_option("--report", verify_report_out,
                         "write the verification report here");
  verify_cmd->callback([&]() {
    exit_code =
        run_verify(verify_in, verify_zone, verify_schedule, verify_report_out);
  });

  // estimate
  auto* estimate = app.add_subcommand(
      "estimate", "execution time and success rate of a compiled schedule");
  CommonOpts estimate_in;
  add_input_options(estimate, estimate_in);
  int estimate_zone = 16;
  std::string estimate_schedule;
  std::string estimate_report_out;
  EstimateOpts estimate_opts;
  estimate->add_option("--zone,-z", estimate_zone, "execution zone size")
      ->required();
  estimate->add_option("--schedule", estimate_schedule, "schedule JSON file")
      ->required();
  add_estimate_options(estimate, estimate_opts);
  estimate->add_option("--report", estimate_report_out,
                       "write the estimate JSON here");
  estimate->callback([&]() {
    exit_code = run_estimate(estimate_in, estimate_zone, estimate_schedule,
                             estimate_opts, estimate_report_out);
  });

  // gen
  auto* gen = app.add_subcommand("gen", "emit a benchmark circuit as QASM");
  std::string gen_name;
  int gen_n = 0;
  unsigned gen_seed = 1;
  bool gen_decompose = false;
  std::string gen_out;
  gen->add_option("--name", gen_name, "qft|bv|qaoa-ring|alt|rcs-like|adder-ripple")
      ->required();
  gen->add_option("--n", gen_n, "qubit count")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_flag("--decompose-cp", gen_decompose,
                "rewrite controlled-phase gates into CX pairs");
  gen->add_option("--output,-o", gen_out, "output path (stdout by default)");
  gen->callback([&]() {
    exit_code = run_gen(gen_name, gen_n, gen_seed, gen_decompose, gen_out);
  });

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "compile a benchmark grid and emit a CSV report");
  SweepOpts sweep_opts;
  sweep->add_option("--apps", sweep_opts.apps,
                    "generator specs, e.g. qft:64,bv:65 or qft:64..180x29")
      ->delimiter(',');
  sweep->add_option("--zones", sweep_opts.zones, "zone sizes")
      ->delimiter(',');
  sweep->add_option("--algos", sweep_opts.algos, "boss,baseline")
      ->delimiter(',');
  sweep->add_option("--models", sweep_opts.models, "duan,trout,pm")
      ->delimiter(',');
  sweep->add_option("--seed", sweep_opts.seed, "default generator seed");
  sweep->add_flag("--decompose-cp", sweep_opts.decompose_cp,
                  "rewrite controlled-phase gates into CX pairs");
  sweep->add_flag("--stable", sweep_opts.stable,
                  "write compile_ms as 0 for byte-stable output");
  sweep->add_option("--out", sweep_opts.out, "CSV output path");
  sweep->add_option("--schedules-dir", sweep_opts.schedules_dir,
                    "also dump every cell's schedule JSON here");
  add_estimate_options(sweep, sweep_opts.est);
  sweep->callback([&]() { exit_code = run_sweep(sweep_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const tilt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return exit_code;
}
