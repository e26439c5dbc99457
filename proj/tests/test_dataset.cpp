/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcluster/dataset.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace qcluster;

TEST_CASE("shipped datasets") {
  const auto cars = load_dataset(shipped_data_dir() / "cars.csv");
  CHECK(cars.size() == 5);
  CHECK(cars.names == std::vector<std::string>{"Honda Civic", "Toyota Corolla",
                                               "Camaro Z28", "Pontiac Firebird",
                                               "Maserati Bora"});
  CHECK(cars.columns == std::vector<std::string>{"mpg", "hp", "wt"});
  CHECK(truth_bits(cars.labels) == std::vector<std::uint8_t>{0, 0, 1, 1, 1});

  const auto wine = load_dataset(shipped_data_dir() / "wine.csv");
  CHECK(wine.size() == 6);
  CHECK(wine.dim() == 13);

  const auto listed = shipped_datasets();
  CHECK(std::find(listed.begin(), listed.end(), shipped_data_dir() / "cars.csv") !=
        listed.end());
}

TEST_CASE("column selection and normalization") {
  const std::string csv = "name,a,b,label\n"
                          "p,1,10,x\n"
                          "q,3,20,y\n"
                          "r,5,60,x\n";
  const auto raw = parse_dataset(csv, {"b", "a"}, false);
  CHECK(raw.columns == std::vector<std::string>{"b", "a"});
  CHECK(raw.points[2] == std::vector<double>{60, 5});
  CHECK(raw.labels == std::vector<std::string>{"x", "y", "x"});

  const auto z = parse_dataset(csv, {"a"}, true);
  double mean = 0.0, var = 0.0;
  for (const auto &row : z.points)
    mean += row[0] / 3.0;
  for (const auto &row : z.points)
    var += (row[0] - mean) * (row[0] - mean) / 3.0;
  CHECK(std::abs(mean) < 1e-15);
  CHECK(var == doctest::Approx(1.0));

  const auto all = parse_dataset(csv, {}, false);
  CHECK(all.columns == std::vector<std::string>{"a", "b"});
}

TEST_CASE("csv details") {
  SUBCASE("quoted names, CRLF, BOM and blank lines") {
    const std::string csv = "\xEF\xBB\xBFname,v\r\n\"Smith, J\",1.5\r\n\r\n\"say \"\"hi\"\"\",-2e1\r\n";
    const auto ds = parse_dataset(csv, {}, false);
    CHECK(ds.names == std::vector<std::string>{"Smith, J", "say \"hi\""});
    CHECK(ds.points[1][0] == -20.0);
  }
  SUBCASE("rows without a name column get generated identifiers") {
    const auto ds = parse_dataset("v\n1\n2\n", {}, false);
    CHECK(ds.names == std::vector<std::string>{"row1", "row2"});
    CHECK(ds.labels.empty());
  }
}

TEST_CASE("dataset errors") {
  CHECK_THROWS_WITH_AS(parse_dataset("a,b\n1,2\n3,4\n", {"c"}, false),
                       doctest::Contains("no column named 'c'"), input_error);
  CHECK_THROWS_WITH_AS(parse_dataset("a,b\n1,2\n3,x\n", {}, false),
                       doctest::Contains("row 2, column 'b'"), input_error);
  CHECK_THROWS_WITH_AS(parse_dataset("a\n1\n", {}, false),
                       doctest::Contains("at least 2 rows"), input_error);
  CHECK_THROWS_AS(parse_dataset("a,b\n1\n2,3\n", {}, false), input_error);
  CHECK_THROWS_AS(parse_dataset("", {}, false), input_error);
  CHECK_THROWS_AS(parse_dataset("a\n1,5\n2\n", {}, false), input_error);
  CHECK_THROWS_AS(parse_dataset("a\nnan\n2\n", {}, false), input_error);
  CHECK_THROWS_AS(parse_dataset("a\n1,0\n2\n", {}, false), input_error);
  CHECK_THROWS_AS(load_dataset("/nonexistent/file.csv"), input_error);
}

TEST_CASE("truth_bits") {
  CHECK(truth_bits({"b", "a", "b"}) == std::vector<std::uint8_t>{0, 1, 0});
  CHECK_FALSE(truth_bits({}).has_value());
  CHECK_FALSE(truth_bits({"a", "a"}).has_value());
  CHECK_FALSE(truth_bits({"a", "b", "c"}).has_value());
}
