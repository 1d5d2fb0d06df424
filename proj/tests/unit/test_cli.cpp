/**
 * Copyright 2026 The semiconv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "paths.hpp"
#include "semiconv/cli.hpp"
#include "semiconv/error.hpp"
#include "semiconv/weights.hpp"

using namespace semiconv;

namespace {
  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::vector<std::string> lines_of(std::string const& s) {
    std::vector<std::string> v;
    std::istringstream       in(s);
    for (std::string l; std::getline(in, l);) {
      v.push_back(l);
    }
    return v;
  }

  std::string const weights = testpaths::fixture_weights().string();
  std::string const data    = testpaths::mnist_dir().string();
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("sg enum") {
    auto r = cli({"sg", "enum", "--r", "1"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "size=13 generators=4\n");
    CHECK(cli({"sg", "enum", "--r", "7", "--a", "0"}).out == "size=2045 generators=4\n");
    auto d = cli({"sg", "enum", "--r", "1", "--dump"});
    CHECK(lines_of(d.out).size() == 14);
    auto over = cli({"sg", "enum", "--r", "3", "--limit", "10"});
    CHECK(over.code == exit_usage);
    CHECK(over.err.find("error:") != std::string::npos);
  }

  TEST_CASE("usage errors") {
    CHECK(cli({}).code == exit_usage);
    CHECK(cli({"sg"}).code == exit_usage);
    CHECK(cli({"sg", "enum"}).code == exit_usage);
    CHECK(cli({"sg", "enum", "--r", "0"}).code == exit_usage);
    CHECK(cli({"sg", "enum", "--r", "200"}).code == exit_usage);
    CHECK(cli({"sg", "enum", "--r", "x"}).code == exit_usage);
    CHECK(cli({"sg", "frobnicate"}).code == exit_usage);
    CHECK(cli({"sg", "table", "--r", "1", "--format", "csv"}).code == exit_usage);
    CHECK(cli({"net", "eval", "--weights", weights}).code == exit_usage);
    CHECK(cli({"net", "eval", "--weights", weights, "--data", data, "--mode", "quant"}).code == exit_usage);
    CHECK(cli({"--help"}).code == exit_ok);
  }

  TEST_CASE("sg table") {
    auto r = cli({"sg", "table", "--r", "1"});
    REQUIRE(r.code == exit_ok);
    auto const rows = lines_of(r.out);
    REQUIRE(rows.size() == 14);
    CHECK(rows[0].rfind("*\tc\tz\te\tn\t", 0) == 0);
    CHECK(std::count(rows[5].begin(), rows[5].end(), '\t') == 13);
    auto idx = cli({"sg", "table", "--r", "1", "--format", "indices"});
    CHECK(lines_of(idx.out)[1].rfind("0\t4\t1\t0\t5", 0) == 0);
    CHECK(cli({"sg", "table", "--r", "3", "--max-size", "500"}).code == exit_usage);
    CHECK(lines_of(cli({"sg", "table", "--r", "3"}).out).size() == 720);
  }

  TEST_CASE("sg decompose") {
    auto j = cli({"sg", "decompose", "--r", "3", "--format", "json"});
    REQUIRE(j.code == exit_ok);
    auto const doc = nlohmann::json::parse(j.out);
    CHECK(doc.at("points") == nlohmann::json::array({4, 5, 5, 9, 5, 5, 5, 4, 3}));
    auto t = cli({"sg", "decompose", "--r", "3", "--a", "0"});
    CHECK(t.out.find("points=(3, 3, 3, 3, 3, 3)") != std::string::npos);
    CHECK(cli({"sg", "decompose", "--r", "9", "--a", "0"}).code == exit_usage);
  }

  TEST_CASE("sg dot") {
    auto const path = (testpaths::scratch() / "cs2.dot").string();
    CHECK(cli({"sg", "dot", "--r", "2", "-o", path}).code == exit_ok);
    std::ifstream in(path);
    std::string   text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.rfind("digraph CS_2 {", 0) == 0);
    auto s = cli({"sg", "dot", "--r", "2", "--gens", "c,n"});
    CHECK(s.out.find("label=\"z\"") == std::string::npos);
    CHECK(s.out.find("label=\"n\"") != std::string::npos);
    CHECK(cli({"sg", "dot", "--r", "2", "--gens", "m_3"}).code == exit_usage);
  }

  TEST_CASE("net eval") {
    auto f = cli({"net", "eval", "--weights", weights, "--data", data, "--subset", "50", "--seed", "3"});
    REQUIRE(f.code == exit_ok);
    auto const fj = nlohmann::json::parse(f.out);
    CHECK(fj.at("images") == 50);
    CHECK(fj.at("mode") == "float");
    auto q = cli({"net", "eval", "--weights", weights, "--data", data, "--mode", "quant", "--r", "1",
                  "--q", "8", "--subset", "50", "--seed", "3"});
    REQUIRE(q.code == exit_ok);
    auto const qj = nlohmann::json::parse(q.out);
    CHECK(qj.at("r") == 1);
    CHECK(qj.at("accuracy").get<double>() < fj.at("accuracy").get<double>());

    auto const subset = (testpaths::scratch() / "subset.txt").string();
    std::ofstream(subset) << "# two images\n0\n\n1\n";
    auto s = cli({"net", "eval", "--weights", weights, "--data", data, "--subset-file", subset});
    CHECK(nlohmann::json::parse(s.out).at("images") == 2);
  }

  TEST_CASE("net data errors") {
    CHECK(cli({"net", "eval", "--weights", "/nonexistent.sgcw", "--data", data}).code == exit_data_error);
    auto const corrupt = (testpaths::scratch() / "corrupt.sgcw").string();
    {
      std::ifstream in(weights, std::ios::binary);
      std::string   bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      bytes[100] ^= 0x40;
      std::ofstream(corrupt, std::ios::binary) << bytes;
    }
    auto c = cli({"net", "eval", "--weights", corrupt, "--data", data});
    CHECK(c.code == exit_data_error);
    CHECK(c.err.find("CRC32") != std::string::npos);
    CHECK(cli({"net", "eval", "--weights", weights, "--data", "/nonexistent"}).code == exit_data_error);
    auto const bad_subset = (testpaths::scratch() / "bad-subset.txt").string();
    std::ofstream(bad_subset) << "1\nseven\n";
    CHECK(cli({"net", "eval", "--weights", weights, "--data", data, "--subset-file", bad_subset}).code
          == exit_data_error);
  }

  TEST_CASE("net sweep") {
    auto const out = (testpaths::scratch() / "sweep.json").string();
    auto       r   = cli({"net", "sweep", "--weights", weights, "--data", data, "--r-list", "1,127",
                          "--q-list", "8", "--subset", "20", "--format", "json", "--out", out});
    REQUIRE(r.code == exit_ok);
    CHECK(lines_of(r.err).size() == 2);
    CHECK(r.err.rfind("cell r=1 q=8 acc=", 0) == 0);
    std::ifstream in(out);
    auto const    doc = nlohmann::json::parse(in);
    CHECK(doc.at("cells").size() == 2);
    CHECK(doc.at("weights_crc32") == [] {
      char buf[16];
      std::snprintf(buf, sizeof buf, "%08x", file_crc32(testpaths::fixture_weights()));
      return std::string(buf);
    }());
    auto csv = cli({"net", "sweep", "--weights", weights, "--data", data, "--r-list", "3", "--q-list",
                    "2,4", "--subset", "10"});
    CHECK(lines_of(csv.out).size() == 3);
    CHECK(cli({"net", "sweep", "--weights", weights, "--data", data, "--r-list", "0"}).code == exit_usage);
  }

  TEST_CASE("index files") {
    auto const p = testpaths::scratch() / "idx.txt";
    std::ofstream(p) << "  5 \n# note\n\n12\r\n";
    CHECK(read_index_file(p) == std::vector<std::size_t>{5, 12});
    std::ofstream(p) << "5\n-1\n";
    try {
      read_index_file(p);
      FAIL("expected FormatError");
    } catch (FormatError const& e) {
      CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(read_index_file(testpaths::scratch() / "nope.txt"), IoError);
  }
}
