/*
   Copyright 2026 The korb Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// korb <chart|table|kernels|present|rank|torsion|verify|reduce|mul> <b0,b1,...> [options]

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "korb/render.hpp"

int main(int argc, char** argv) {
  using namespace korb;

  CLI::App app{"Full orbifold K-theory of weighted projective spaces"};
  app.name("korb");

  std::string command;
  std::string weights;
  std::string format_name = "text";
  std::optional<std::int64_t> sector;
  std::optional<std::string> poly;
  std::optional<std::string> lhs;
  std::optional<std::string> rhs;
  std::size_t trials = 500;
  std::uint64_t seed = 7;

  app.add_option("command", command, "chart, table, kernels, present, rank, torsion, verify, reduce or mul")
      ->required()
      ->check(CLI::IsMember({"chart", "table", "kernels", "present", "rank", "torsion", "verify", "reduce", "mul"}));
  app.add_option("weights", weights, "comma-separated positive weights b0,b1,...")->required();
  app.add_option("--format", format_name, "text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--sector", sector, "sector index for reduce");
  app.add_option("--poly", poly, "Laurent polynomial for reduce");
  app.add_option("--lhs", lhs, "left factor for mul, \"s:<poly>[;s:<poly>...]\"");
  app.add_option("--rhs", rhs, "right factor for mul");
  app.add_option("--trials", trials, "random trials for verify")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "RNG seed for verify");

  CLI11_PARSE(app, argc, argv);

  try {
    const WeightVector b = WeightVector::parse(weights);
    const cli::Format format = cli::parse_format(format_name);
    cli::OutputDocument doc;
    if (command == "chart") {
      doc = cli::cmd_chart(b, format);
    } else if (command == "table") {
      doc = cli::cmd_table(b, format);
    } else if (command == "kernels") {
      doc = cli::cmd_kernels(b, format);
    } else if (command == "present") {
      doc = cli::cmd_present(b, format);
    } else if (command == "rank") {
      doc = cli::cmd_rank(b, format);
    } else if (command == "torsion") {
      doc = cli::cmd_torsion(b, format);
    } else if (command == "verify") {
      doc = cli::cmd_verify(b, trials, seed, format);
    } else if (command == "reduce") {
      if (!sector || !poly) throw std::invalid_argument("reduce requires --sector and --poly");
      doc = cli::cmd_reduce(b, *sector, *poly, format);
    } else {
      if (!lhs || !rhs) throw std::invalid_argument("mul requires --lhs and --rhs");
      doc = cli::cmd_mul(b, *lhs, *rhs, format);
    }
    std::cout << doc.body;
    return doc.exit_code;
  } catch (const ParseError& e) {
    std::cerr << "korb: parse error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "korb: " << e.what() << "\n";
  }
  return 2;
}
