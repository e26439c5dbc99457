/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcluster/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qcluster {

using nlohmann::json;

namespace {

json conventions() {
  return {
      {"rotations", "R_a(theta) = exp(-i theta A / 2); qaoa mixer exp(-i beta "
                    "sum X) applied as R_x(2 beta) per qubit"},
      {"bit_order", "bit i of the basis index is qubit i (qubit 0 least "
                    "significant); bitstring text lists qubit n-1 first"},
      {"prng", rng_id},
      {"seed_derivation", "splitmix64(run_seed, stream): init=1 spsa=2 "
                          "relax=3 sampling=4 shot_objective=5"},
      {"ws_mixer", "corrected: [[2c-1, -2 sqrt(c(1-c))], [-2 sqrt(c(1-c)), "
                   "1-2c]]; initial state R_y(2 asin sqrt c)|0> is its -1 "
                   "eigenvector"},
      {"ws_mixer_corrected", true},
      {"vqe_layout", "R_y layer, then reps x (CNOT i->i+1 for i=0..n-2, R_y "
                     "layer); no trailing entangler"},
      {"ising", "E(x) = -sum_{i<j} w_ij [x_i != x_j]"},
      {"energy", "expectation of H_C in the final state"},
      {"solution_objective", "cut value of the most probable bitstring"},
      {"energy_unit", "dimensionless (table header keeps the Ha label)"},
      {"most_probable_ties",
       "probabilities within 1e-12 tie; lowest index wins, then the "
       "qubit-0 = 0 member of a tied complementary pair"},
  };
}

json config_echo(const RunConfig &c) {
  std::vector<std::string> algos;
  for (algorithm a : c.algorithms)
    algos.push_back(to_string(a));
  json spsa = {{"max_iters", c.spsa.max_iters},
               {"a", c.spsa.a},
               {"c", c.spsa.c},
               {"A", c.spsa.stability()},
               {"alpha", c.spsa.alpha},
               {"gamma_exp", c.spsa.gamma_exp},
               {"calibrate", c.spsa.calibrate},
               {"target_step", c.spsa.target_step},
               {"calibration_samples", c.spsa.calibration_samples},
               {"param_tol", c.spsa.param_tol}};
  json relax = {{"restarts", c.relax.restarts},
                {"max_iters", c.relax.max_iters},
                {"step", c.relax.step},
                {"tol", c.relax.tol},
                {"epsilon", c.relax.epsilon}};
  return {{"dataset", c.dataset_path.filename().string()},
          {"columns", c.columns},
          {"normalize", c.normalize},
          {"algorithms", algos},
          {"p", c.p},
          {"vqe_reps", c.vqe_reps},
          {"shots", c.shots},
          {"objective_mode", c.shot_objective ? "shot-estimate" : "exact-expectation"},
          {"seeds", c.seeds},
          {"relaxation", relax},
          {"spsa", spsa},
          {"qubit_cap", c.qubit_cap},
          {"formats", c.formats}};
}

std::vector<int> as_ints(const std::vector<std::uint8_t> &bits) {
  return {bits.begin(), bits.end()};
}

json run_json(const RunRecord &r) {
  const RunSeeds s = derive_seeds(r.seed);
  json j = {{"algorithm", to_string(r.algo)},
            {"seed", r.seed},
            {"derived_seeds",
             {{"init", s.init},
              {"spsa", s.spsa},
              {"relax", s.relax},
              {"sampling", s.sampling},
              {"shot_objective", s.shot_objective}}},
            {"status", r.error ? "error" : "ok"}};
  if (r.error) {
    j["error"] = *r.error;
    return j;
  }
  json counts = json::object();
  for (const auto &[x, n] : r.counts)
    counts[bitstring_text(x, r.n)] = n;
  j.update({{"bitstring", bitstring_text(r.bitstring, r.n)},
            {"labels", as_ints(r.labels)},
            {"energy", r.energy},
            {"optimizer_value", r.optimizer_value},
            {"bitstring_energy", r.bitstring_energy},
            {"sampled_energy", r.sampled_energy},
            {"solution_objective", r.solution_objective},
            {"ground_state_mass", r.ground_state_mass},
            {"probabilities", r.probabilities},
            {"counts", counts},
            {"params", r.params},
            {"evaluations", r.evaluations},
            {"spsa_a", r.spsa_a}});
  j["accuracy_vs_exact"] =
      r.accuracy_vs_exact ? json(*r.accuracy_vs_exact) : json(nullptr);
  j["accuracy_vs_truth"] =
      r.accuracy_vs_truth ? json(*r.accuracy_vs_truth) : json(nullptr);
  if (r.algo == algorithm::ws_qaoa)
    j["relaxation"] = {{"c_star", r.relaxed},
                       {"objective", r.relaxed_objective},
                       {"capped", r.relax_capped},
                       {"clipped_c_star", r.warm_start_c}};
  return j;
}

json summary_json(const BenchmarkReport &report, const AlgorithmSummary &s) {
  json j = {{"algorithm", to_string(s.algo)},
            {"completed", s.completed},
            {"failed", s.failed}};
  if (!s.representative)
    return j;
  const RunRecord &rep = report.runs[*s.representative];
  j.update({{"median_energy", s.median_energy},
            {"median_solution_objective", s.median_solution_objective},
            {"median_ground_state_mass", s.median_ground_state_mass},
            {"representative_seed", rep.seed}});
  j["median_accuracy_vs_exact"] = s.median_accuracy_vs_exact
                                      ? json(*s.median_accuracy_vs_exact)
                                      : json(nullptr);
  return j;
}

void write_file(const std::filesystem::path &path, const std::string &text,
                std::vector<std::filesystem::path> &written) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw io_error("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out)
    throw io_error("failed writing '" + path.string() + "'");
  written.push_back(path);
}

std::string csv_escape(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Column {
  std::string title;
  const RunRecord *run;
};

std::vector<Column> table_columns(const BenchmarkReport &report) {
  std::vector<Column> cols;
  for (const auto &s : report.summaries)
    if (s.representative)
      cols.push_back({to_string(s.algo), &report.runs[*s.representative]});
  return cols;
}

} // namespace

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

json deterministic_section(const BenchmarkReport &report) {
  const Problem &pb = report.problem;
  const std::size_t n = pb.ising.n;
  std::vector<std::string> ground;
  for (basis_index g : pb.exact.ground_states)
    ground.push_back(bitstring_text(g, n));
  std::vector<std::vector<double>> weights(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      weights[i][j] = pb.graph.weight(i, j);

  json dataset = {{"rows", pb.dataset.size()},
                  {"features", pb.dataset.columns},
                  {"names", pb.dataset.names},
                  {"labels", pb.dataset.labels},
                  {"points", pb.dataset.points},
                  {"weights", weights}};
  dataset["truth_bits"] = pb.truth ? json(as_ints(*pb.truth)) : json(nullptr);

  json runs = json::array();
  for (const auto &r : report.runs)
    runs.push_back(run_json(r));
  json summaries = json::array();
  for (const auto &s : report.summaries)
    summaries.push_back(summary_json(report, s));

  return {{"schema_version", report_schema_version},
          {"conventions", conventions()},
          {"config", config_echo(report.config)},
          {"dataset", dataset},
          {"exact",
           {{"ground_energy", pb.exact.ground_energy},
            {"max_cut", pb.exact.max_cut},
            {"ground_states", ground},
            {"selected", bitstring_text(pb.exact_bitstring, n)}}},
          {"runs", runs},
          {"summary", summaries}};
}

json report_to_json(const BenchmarkReport &report) {
  json j = deterministic_section(report);
  json runs = json::array();
  for (const auto &r : report.runs)
    runs.push_back({{"algorithm", to_string(r.algo)},
                    {"seed", r.seed},
                    {"graph_build_s", r.timings.graph_build},
                    {"relaxation_s", r.timings.relaxation},
                    {"optimization_s", r.timings.optimization},
                    {"sampling_s", r.timings.sampling},
                    {"total_s", r.timings.total()}});
  json medians = json::object();
  for (const auto &s : report.summaries)
    if (s.representative)
      medians[to_string(s.algo)] = s.median_total_time;
  j["timings"] = {{"note", "wall-clock seconds; not reproducible"},
                  {"jobs", report.config.jobs},
                  {"runs", runs},
                  {"median_total_s", medians}};
  return j;
}

std::string table_csv(const BenchmarkReport &report) {
  const auto cols = table_columns(report);
  const Dataset &ds = report.problem.dataset;
  std::ostringstream os;
  os << "row,type";
  for (const auto &c : cols)
    os << ',' << c.title;
  os << '\n';
  for (std::size_t i = 0; i < ds.size(); ++i) {
    os << csv_escape(ds.names[i]) << ','
       << (i < ds.labels.size() ? csv_escape(ds.labels[i]) : "");
    for (const auto &c : cols)
      os << ',' << int(c.run->labels[i]);
    os << '\n';
  }
  os << "Energy,";
  for (const auto &c : cols)
    os << ',' << format_number(c.run->energy);
  os << "\nSolution Objective,";
  for (const auto &c : cols)
    os << ',' << format_number(c.run->solution_objective);
  os << "\nProcess time (s),";
  for (const auto &c : cols)
    os << ',' << format_number(c.run->timings.total());
  os << '\n';
  return os.str();
}

std::string table_markdown(const BenchmarkReport &report) {
  const auto cols = table_columns(report);
  const Dataset &ds = report.problem.dataset;
  std::ostringstream os;
  os << "| Row | Type |";
  for (const auto &c : cols)
    os << ' ' << c.title << " |";
  os << "\n|---|---|";
  for (std::size_t k = 0; k < cols.size(); ++k)
    os << "---|";
  os << '\n';
  for (std::size_t i = 0; i < ds.size(); ++i) {
    os << "| " << ds.names[i] << " | "
       << (i < ds.labels.size() ? ds.labels[i] : "") << " |";
    for (const auto &c : cols)
      os << ' ' << int(c.run->labels[i]) << " |";
    os << '\n';
  }
  auto summary_row = [&](const char *title, auto value) {
    os << "| " << title << " | |";
    for (const auto &c : cols)
      os << ' ' << fixed3(value(*c.run)) << " |";
    os << '\n';
  };
  summary_row("Energy (Ha)", [](const RunRecord &r) { return r.energy; });
  summary_row("Solution Objective",
              [](const RunRecord &r) { return r.solution_objective; });
  summary_row("Process time (s)",
              [](const RunRecord &r) { return r.timings.total(); });
  os << "\nColumns show the lower-median-energy run per algorithm (seeds:";
  for (const auto &c : cols)
    os << ' ' << c.title << '=' << c.run->seed;
  os << ").\n";
  return os.str();
}

std::string histogram_csv(const RunRecord &run) {
  std::ostringstream os;
  os << "bitstring,index,probability\n";
  for (basis_index x = 0; x < run.probabilities.size(); ++x)
    os << bitstring_text(x, run.n) << ',' << x << ','
       << format_number(run.probabilities[x]) << '\n';
  return os.str();
}

std::vector<std::filesystem::path>
emit_report(const BenchmarkReport &report, const std::filesystem::path &out_dir,
            const std::vector<std::string> &formats) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir))
    throw io_error("cannot create output directory '" + out_dir.string() +
                   "'");
  auto wants = [&](const char *f) {
    return std::find(formats.begin(), formats.end(), f) != formats.end();
  };
  std::vector<std::filesystem::path> written;
  if (wants("json"))
    write_file(out_dir / "report.json", report_to_json(report).dump(2) + "\n",
               written);
  if (wants("csv")) {
    write_file(out_dir / "table.csv", table_csv(report), written);
    for (const auto &s : report.summaries)
      if (s.representative)
        write_file(out_dir / ("histogram_" + to_string(s.algo) + ".csv"),
                   histogram_csv(report.runs[*s.representative]), written);
  }
  if (wants("md"))
    write_file(out_dir / "table.md", table_markdown(report), written);
  return written;
}

} // namespace qcluster
