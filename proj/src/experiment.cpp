#include "knitframe/experiment.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace knitframe {

namespace {

using io::json;
using io::parse_error;

double positive_number(const json& j, const std::string& path) {
  if (!j.is_number() || !(j.get<double>() > 0)) parse_error(path, "expected a positive number");
  return j.get<double>();
}

/// Runs `f`, relabelling library errors with the config section.
template <typename F>
auto in_section(const std::string& section, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConfigParse || e.kind() == ErrorKind::ValidationFailure) throw;
    throw Error(ErrorKind::ValidationFailure, section + ": " + e.what(), e.witness(), e.deviation());
  }
}

json nullable(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::vector<CVector> channel_vectors(const ExperimentConfig& c, Index dim, Rng& rng) {
  std::vector<CVector> out;
  if (c.channels.is_object()) {
    const int kappa = c.channels.at("random").get<int>();
    for (int k = 0; k < kappa; ++k) out.push_back(random_complex_vector(rng, dim));
    return out;
  }
  for (std::size_t k = 0; k < c.channels.size(); ++k)
    out.push_back(io::vector_spec_from_json(c.channels[k], dim, rng, "channels[" + std::to_string(k) + "]"));
  return out;
}

std::string vector_name(Indexing indexing, Index k) {
  return (indexing == Indexing::ByN ? "c_" : "d_") + std::to_string(k + 1);
}

json labels_of(const FiniteGroup& g, const std::vector<Element>& elements) {
  json out = json::array();
  for (Element x : elements) out.push_back(g.label(x));
  return out;
}

}  // namespace

ExperimentConfig parse_config(const json& j, bool allow_empty_channels) {
  if (!j.is_object()) parse_error("config", "expected an object");
  ExperimentConfig c;
  for (const char* key : {"group", "representation", "generator", "channels"})
    if (!j.contains(key)) parse_error(key, "missing field");
  c.group = j["group"];
  c.representation = j["representation"];
  c.generator = j["generator"];
  c.channels = j["channels"];

  if (c.channels.is_object()) {
    if (!c.channels.contains("random") || !c.channels["random"].is_number_integer() ||
        c.channels["random"].get<int>() < 0)
      parse_error("channels.random", "expected a non-negative channel count");
  } else if (!c.channels.is_array()) {
    parse_error("channels", "expected an array of vectors or {\"random\": count}");
  }
  const std::size_t kappa = c.channels.is_object() ? c.channels["random"].get<std::size_t>() : c.channels.size();
  if (kappa == 0 && !allow_empty_channels) parse_error("channels", "at least one channel is required");

  if (j.contains("indexing")) {
    const json& ix = j["indexing"];
    if (ix == "N") c.indexing = Indexing::ByN;
    else if (ix == "H") c.indexing = Indexing::ByH;
    else parse_error("indexing", "expected \"N\" or \"H\"");
  }
  if (j.contains("trials")) {
    if (!j["trials"].is_number_integer() || j["trials"].get<long long>() < 0 || j["trials"].get<long long>() > 1000000)
      parse_error("trials", "expected a count between 0 and 1000000");
    c.trials = j["trials"].get<int>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) parse_error("seed", "expected a non-negative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("tolerances")) {
    const json& t = j["tolerances"];
    if (!t.is_object()) parse_error("tolerances", "expected an object");
    for (const auto& [key, value] : t.items()) {
      const std::string path = "tolerances." + key;
      if (key == "rank") c.tolerances.rank = positive_number(value, path);
      else if (key == "recon") c.tolerances.recon = positive_number(value, path);
      else if (key == "representation") c.tolerances.representation = positive_number(value, path);
      else if (key == "ill_conditioned") c.tolerances.ill_conditioned = positive_number(value, path);
      else parse_error(path, "unknown tolerance");
    }
  }
  return c;
}

ExperimentConfig load_config(const std::string& path, bool allow_empty_channels) {
  std::ifstream in(path);
  if (!in) parse_error("config", "cannot read '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    parse_error("config", std::string("malformed JSON: ") + e.what());
  }
  return parse_config(j, allow_empty_channels);
}

Pipeline build_pipeline(const ExperimentConfig& c) {
  io::GroupSetup setup = in_section("group", [&] { return io::group_setup_from_json(c.group, "group"); });
  UnitaryRepresentation rep = in_section("representation", [&] {
    return io::representation_from_json(c.representation, setup.group, c.tolerances.representation,
                                        "representation");
  });
  Rng rng(c.seed);
  const CVector a = io::vector_spec_from_json(c.generator, rep.dim(), rng, "generator");
  const std::vector<CVector> channels = channel_vectors(c, rep.dim(), rng);

  SamplingSubspace subspace = in_section("generator", [&] {
    SamplingSubspace s = build_subspace(rep, a, c.tolerances.rank);
    if (!s.independent) throw Error(ErrorKind::DependentOrbit, "the orbit {U(g)a} is linearly dependent");
    return s;
  });
  SchemeOptions options;
  options.rank_tol = c.tolerances.rank;
  options.recon_tol = c.tolerances.recon;
  options.ill_conditioned_above = c.tolerances.ill_conditioned;
  SamplingScheme scheme = in_section("channels", [&] {
    return build_scheme(subspace, channels, setup.factorization, c.indexing, options);
  });
  return {std::move(setup), std::move(scheme)};
}

RunResult run_experiment(const ExperimentConfig& c) {
  const Pipeline pipe = build_pipeline(c);
  const SamplingScheme& s = pipe.scheme;
  const double tol = c.tolerances.recon;
  RunResult out;
  json& rep = out.report;
  auto fail = [&](const std::string& what) {
    if (out.failure.empty()) out.failure = what;
  };

  rep["group_order"] = s.order();
  rep["dimension"] = s.rep().dim();
  rep["indexing"] = to_string(s.indexing());
  rep["kappa"] = s.kappa();
  rep["rank"] = s.rank();
  rep["frame_bounds"] = {s.bounds.lower, s.bounds.upper};
  rep["is_frame"] = s.bounds.is_frame;
  rep["frame_metric"] = "l2(G) coefficients";
  rep["condition_number"] = nullable(s.condition_number);
  rep["ill_conditioned"] = s.ill_conditioned;
  rep["reconstructing"] = s.reconstructing;
  rep["shift_structure_checked"] = s.r.shift_structure_checked;
  rep["pseudoinverse_shift_structure"] =
      s.kappa() > 0 && shift_structure_deviation(s.family.pinv, s.layout(), s.kappa()) <= tol;

  json vectors = json::array();
  for (Index k = 0; k < static_cast<Index>(s.recon_vectors.size()); ++k)
    vectors.push_back({{"name", vector_name(s.indexing(), k)}, {"values", io::to_json(s.recon_vectors[k])}});
  rep["recon_vectors"] = std::move(vectors);

  const bool square = s.kappa() == s.layout().block_shift() && s.reconstructing;
  if (square) {
    const double dev = interpolation_deviation(s);
    rep["interpolation"] = dev <= tol;
    rep["interpolation_deviation"] = dev;
    if (dev > tol && !s.ill_conditioned) fail("interpolation: deviation " + std::to_string(dev));
  } else {
    rep["interpolation"] = nullptr;
    rep["interpolation_deviation"] = nullptr;
  }

  const ConditionReport cond = check_equivalence(s, std::max(c.trials, 1), c.seed + 1);
  rep["conditions"] = {{"rank_full", cond.full_rank},
                       {"seed_exists", cond.seed_exists},
                       {"seed_residual", cond.seed_residual},
                       {"structured_expansion", cond.structured_expansion},
                       {"roundtrip_residual", cond.roundtrip_residual},
                       {"synthesized_rank", cond.synthesized_rank},
                       {"frame_expansion", cond.frame_expansion},
                       {"frame_residual", cond.frame_residual},
                       {"agree", cond.agree()}};
  if (!cond.agree() && !s.ill_conditioned) fail("conditions: the four reconstruction conditions disagree");

  json trials = json::array();
  double worst = 0;
  if (s.reconstructing) {
    Rng rng(c.seed + 2);
    for (int t = 0; t < c.trials; ++t) {
      const auto [f, alpha] = random_subspace_element(s.subspace, rng);
      const SampleSet samples = take_samples(s, f);
      const double residual = relative_error(reconstruct(s, samples), f);
      const double coeff = relative_error(reconstruct_coefficients(s, samples), alpha);
      worst = std::max(worst, residual);
      trials.push_back({{"index", t}, {"residual", residual}, {"coefficient_residual", coeff}});
      if (residual > tol && !s.ill_conditioned)
        fail("trials[" + std::to_string(t) + "].residual: " + std::to_string(residual));
    }
  }
  rep["max_residual"] = s.reconstructing ? json(worst) : json(nullptr);
  rep["trials"] = std::move(trials);
  rep["seed"] = c.seed;
  rep["tolerances"] = {{"rank", s.family.spectrum.tolerance},
                       {"recon", tol},
                       {"representation", c.tolerances.representation},
                       {"ill_conditioned", c.tolerances.ill_conditioned}};

  if (!out.failure.empty()) out.exit_code = 1;
  else out.exit_code = s.reconstructing ? 0 : 2;
  return out;
}

json matrix_dumps(const Pipeline& pipe) {
  const SamplingScheme& s = pipe.scheme;
  const CosetLayout& layout = s.layout();
  const FiniteGroup& g = layout.group();
  std::vector<Element> canonical(static_cast<std::size_t>(g.order()));
  for (Element x = 0; x < g.order(); ++x) canonical[x] = x;

  json rows = json::array();
  for (Index k = 0; k < s.kappa(); ++k)
    for (Element p : layout.indexing_elements())
      rows.push_back("L" + std::to_string(k + 1) + "(" + g.label(p) + ")");

  auto with_columns = [&](json d) {
    d["indexing"] = to_string(layout.indexing());
    d["kappa"] = s.kappa();
    d["block_rows"] = layout.block_rows();
    d["block_shift"] = layout.block_shift();
    d["indexing_elements"] = layout.indexing_elements();
    return d;
  };

  json out;
  json gram = io::matrix_dump("gram", s.subspace.gram);
  gram["row_order"] = canonical;
  gram["column_order"] = canonical;
  gram["column_labels"] = labels_of(g, canonical);
  out["gram"] = std::move(gram);

  json r = with_columns(io::matrix_dump("cross_covariance", s.r.stacked));
  r["row_labels"] = rows;
  r["column_order"] = layout.column_order();
  r["column_labels"] = labels_of(g, layout.column_order());
  out["cross_covariance"] = std::move(r);

  json pinv = with_columns(io::matrix_dump("pseudoinverse", s.family.pinv));
  pinv["row_order"] = layout.column_order();
  pinv["row_labels"] = labels_of(g, layout.column_order());
  pinv["column_labels"] = rows;
  out["pseudoinverse"] = std::move(pinv);

  if (s.m_s) {
    json m = with_columns(io::matrix_dump("m_s", s.m_s->m_s));
    m["row_order"] = layout.column_order();
    m["row_labels"] = labels_of(g, layout.column_order());
    m["column_labels"] = rows;
    m["source"] = s.m_s->source;
    out["m_s"] = std::move(m);
  }
  return out;
}

namespace {

void apply(ExperimentConfig& c, const Overrides& o) {
  if (o.seed) c.seed = *o.seed;
  if (o.tol_rank) c.tolerances.rank = *o.tol_rank;
  if (o.tol_recon) c.tolerances.recon = *o.tol_recon;
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ValidationFailure, "out: cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

template <typename F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    err << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "ConfigParse: config: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace

int run_command(const std::string& config_path, const std::string& output_path, const Overrides& overrides,
                std::ostream& err) {
  return guarded(err, [&] {
    ExperimentConfig c = load_config(config_path);
    apply(c, overrides);
    const RunResult result = run_experiment(c);
    write_json(output_path, result.report);
    if (!result.failure.empty()) err << "ValidationFailure: " << result.failure << '\n';
    return result.exit_code;
  });
}

int dump_command(const std::string& config_path, const std::string& output_dir, const Overrides& overrides,
                 std::ostream& err) {
  return guarded(err, [&] {
    ExperimentConfig c = load_config(config_path, true);
    apply(c, overrides);
    const Pipeline pipe = build_pipeline(c);
    const std::filesystem::path dir(output_dir);
    std::filesystem::create_directories(dir);
    const io::json dumps = matrix_dumps(pipe);
    for (const auto& [name, dump] : dumps.items()) write_json(dir / (name + ".json"), dump);
    return 0;
  });
}

}  // namespace knitframe
