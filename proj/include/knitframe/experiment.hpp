#ifndef KNITFRAME_EXPERIMENT_HPP
#define KNITFRAME_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "knitframe/io.hpp"
#include "knitframe/sampling.hpp"

namespace knitframe {

struct Tolerances {
  std::optional<double> rank;
  double recon = 1e-9;
  double representation = kDefaultRepTolerance;
  double ill_conditioned = 1e8;
};

/// {"group", "representation", "generator", "channels", "indexing": "N"|"H",
///  "trials", "seed", "tolerances": {"rank", "recon", "representation",
///  "ill_conditioned"}}. Channels are an array of vector specs or
/// {"random": κ}.
struct ExperimentConfig {
  io::json group;
  io::json representation;
  io::json generator;
  io::json channels;
  Indexing indexing = Indexing::ByN;
  int trials = 10;
  std::uint64_t seed = 0;
  Tolerances tolerances;
};

/// Throws ConfigParse with the offending field path. κ = 0 is accepted only
/// with `allow_empty_channels`.
ExperimentConfig parse_config(const io::json& j, bool allow_empty_channels = false);
ExperimentConfig load_config(const std::string& path, bool allow_empty_channels = false);

struct Pipeline {
  io::GroupSetup setup;
  SamplingScheme scheme;
};

/// Group, representation, subspace and scheme. Library errors are rethrown
/// as ValidationFailure prefixed with the config section they came from.
Pipeline build_pipeline(const ExperimentConfig& config);

struct RunResult {
  io::json report;
  int exit_code = 0;
  /// Why an invariant check failed; empty otherwise.
  std::string failure;
};

/// Exit code 0 when every invariant check passes, 2 when the scheme is not
/// reconstructing, 1 when a check fails.
RunResult run_experiment(const ExperimentConfig& config);

/// The four matrix dumps keyed by file stem: gram, cross_covariance,
/// pseudoinverse and, when reconstructing, m_s.
io::json matrix_dumps(const Pipeline& pipeline);

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> tol_rank;
  std::optional<double> tol_recon;
};

/// Command entry points. Errors go to `err` as "<kind>: <field path>: <message>"
/// and return 1.
int run_command(const std::string& config_path, const std::string& output_path,
                const Overrides& overrides, std::ostream& err);
int dump_command(const std::string& config_path, const std::string& output_dir,
                 const Overrides& overrides, std::ostream& err);

}  // namespace knitframe

#endif  // KNITFRAME_EXPERIMENT_HPP
