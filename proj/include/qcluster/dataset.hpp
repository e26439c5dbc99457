/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcluster/graph_model.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace qcluster {

/// Reserved CSV column names.
inline constexpr const char *name_column = "name";
inline constexpr const char *label_column = "label";

/// Reads a header-first, comma-separated UTF-8 file with '.' decimals.
/// `columns` selects feature columns by header name; empty selects every
/// column except `name` and `label`. When `normalize` is set each selected
/// column is z-scored.
Dataset load_dataset(const std::filesystem::path &path,
                     const std::vector<std::string> &columns = {},
                     bool normalize = true);

/// Same as load_dataset but from in-memory CSV text. `source` names the
/// input in error messages.
Dataset parse_dataset(const std::string &text,
                      const std::vector<std::string> &columns, bool normalize,
                      const std::string &source = "<memory>");

/// Maps a two-class label column onto bits (first label seen -> 0). Returns
/// nullopt when labels are absent or do not have exactly two classes.
std::optional<std::vector<std::uint8_t>>
truth_bits(const std::vector<std::string> &labels);

/// Directory holding the datasets shipped with the project.
std::filesystem::path shipped_data_dir();

/// Shipped CSV files, sorted by filename.
std::vector<std::filesystem::path> shipped_datasets();

} // namespace qcluster
