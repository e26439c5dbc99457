/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcluster/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace qcluster {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

// Splits one CSV record. Double quotes group fields; "" inside quotes is a
// literal quote. Embedded newlines are not supported.
std::vector<std::string> split_record(const std::string &line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(trim(cur));
  return fields;
}

bool parse_number(const std::string &cell, double &out) {
  if (cell.empty())
    return false;
  const char *begin = cell.data();
  const char *end = cell.data() + cell.size();
  if (*begin == '+')
    ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

} // namespace

Dataset parse_dataset(const std::string &text,
                      const std::vector<std::string> &columns, bool normalize,
                      const std::string &source) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> header;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0)
      line.erase(0, 3);
    if (!trim(line).empty()) {
      header = split_record(line);
      break;
    }
  }
  if (header.empty())
    throw input_error(source + ": missing header row");

  auto find_col = [&](const std::string &name) -> std::optional<std::size_t> {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
      return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  };

  const auto name_idx = find_col(name_column);
  const auto label_idx = find_col(label_column);

  std::vector<std::size_t> feature_idx;
  std::vector<std::string> feature_names;
  if (columns.empty()) {
    for (std::size_t c = 0; c < header.size(); ++c)
      if (c != name_idx && c != label_idx) {
        feature_idx.push_back(c);
        feature_names.push_back(header[c]);
      }
  } else {
    for (const auto &col : columns) {
      const auto idx = find_col(col);
      if (!idx)
        throw input_error(source + ": no column named '" + col + "'");
      feature_idx.push_back(*idx);
      feature_names.push_back(col);
    }
  }
  if (feature_idx.empty())
    throw input_error(source + ": no feature columns selected");

  Dataset ds;
  ds.columns = feature_names;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty())
      continue;
    const auto fields = split_record(line);
    if (fields.size() != header.size())
      throw input_error(source + ": line " + std::to_string(line_no) +
                        " has " + std::to_string(fields.size()) +
                        " fields, header has " + std::to_string(header.size()));
    std::vector<double> point;
    point.reserve(feature_idx.size());
    for (std::size_t k = 0; k < feature_idx.size(); ++k) {
      double v = 0.0;
      const auto &cell = fields[feature_idx[k]];
      if (!parse_number(cell, v))
        throw input_error(source + ": non-numeric value '" + cell +
                          "' at row " + std::to_string(row + 1) +
                          ", column '" + feature_names[k] + "'");
      point.push_back(v);
    }
    ds.points.push_back(std::move(point));
    ds.names.push_back(name_idx ? fields[*name_idx]
                                : "row" + std::to_string(row + 1));
    if (label_idx)
      ds.labels.push_back(fields[*label_idx]);
    ++row;
  }

  if (ds.size() < 2)
    throw input_error(source + ": dataset needs at least 2 rows, got " +
                      std::to_string(ds.size()));
  ds.validate();
  return normalize ? standardize(ds) : ds;
}

Dataset load_dataset(const std::filesystem::path &path,
                     const std::vector<std::string> &columns, bool normalize) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw input_error("cannot open dataset '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dataset(buf.str(), columns, normalize, path.string());
}

std::optional<std::vector<std::uint8_t>>
truth_bits(const std::vector<std::string> &labels) {
  if (labels.empty())
    return std::nullopt;
  std::vector<std::string> classes;
  std::vector<std::uint8_t> bits;
  for (const auto &l : labels) {
    auto it = std::find(classes.begin(), classes.end(), l);
    if (it == classes.end()) {
      if (classes.size() == 2)
        return std::nullopt;
      classes.push_back(l);
      it = classes.end() - 1;
    }
    bits.push_back(static_cast<std::uint8_t>(it - classes.begin()));
  }
  if (classes.size() != 2)
    return std::nullopt;
  return bits;
}

std::filesystem::path shipped_data_dir() { return QCLUSTER_DATA_DIR; }

std::vector<std::filesystem::path> shipped_datasets() {
  std::vector<std::filesystem::path> out;
  std::error_code ec;
  for (const auto &entry :
       std::filesystem::directory_iterator(shipped_data_dir(), ec))
    if (entry.is_regular_file() && entry.path().extension() == ".csv")
      out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace qcluster
