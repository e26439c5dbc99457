/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcluster/bench.hpp"

#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

namespace qcluster {

inline constexpr int report_schema_version = 1;

/// Shortest round-trip decimal form of a double.
std::string format_number(double v);

/// Full report. Everything except the top-level "timings" object is a pure
/// function of (config, seeds, dataset contents).
nlohmann::json report_to_json(const BenchmarkReport &report);

/// The reproducible part of report_to_json.
nlohmann::json deterministic_section(const BenchmarkReport &report);

/// Representative-run table: one row per data point, then Energy, Solution
/// Objective and Process time rows; one column per algorithm.
std::string table_csv(const BenchmarkReport &report);
std::string table_markdown(const BenchmarkReport &report);
/// "bitstring,index,probability" rows in basis-index order.
std::string histogram_csv(const RunRecord &run);

/// Writes report.json, table.csv, table.md and histogram_<algo>.csv files
/// for the requested formats ("json", "csv", "md"). Returns written paths.
/// Throws io_error when the directory or a file cannot be written.
std::vector<std::filesystem::path>
emit_report(const BenchmarkReport &report, const std::filesystem::path &out_dir,
            const std::vector<std::string> &formats);

} // namespace qcluster
