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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "korb/korb.hpp"
#include "korb/render.hpp"
#include "oracles.hpp"

namespace {

using korb::KOrbRing;
using korb::LaurentPoly;
using korb::WeightVector;
using korb::cli::Format;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr double kChartSeconds = 0.1;
constexpr double kTorsionSeconds = 5.0;
constexpr double kAxiomSeconds = 10.0;
constexpr double kReduceSeconds = 5.0;
constexpr int kSweepSize = 200;
constexpr std::uint64_t kSweepSeed = 20260416;
constexpr std::size_t kAxiomTrials = 500;
constexpr std::uint64_t kAxiomSeed = 7;
constexpr int kReduceSamples = 1000;

const WeightVector kB124({1, 2, 4});

// Failure detail accumulated by a criterion; empty means pass.
struct Check {
  std::ostringstream detail;
  void expect(bool ok, const std::string& what) {
    if (!ok && detail.tellp() < 600) detail << what << "; ";
  }
  bool ok() { return detail.str().empty(); }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<WeightVector> sweep() {
  std::mt19937_64 rng(kSweepSeed);
  std::uniform_int_distribution<int> n(1, 5);
  std::uniform_int_distribution<std::int64_t> w(1, 12);
  std::vector<WeightVector> out;
  for (int i = 0; i < kSweepSize; ++i) {
    std::vector<std::int64_t> b(static_cast<std::size_t>(n(rng)) + 1);
    for (auto& x : b) x = w(rng);
    out.emplace_back(std::move(b));
  }
  return out;
}

std::string frac(std::int64_t num, std::int64_t den) {
  if (num == 0) return "0";
  const std::int64_t g = std::gcd(num, den);
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

void criterion_chart(Check& c) {
  const auto start = Clock::now();
  const json j = json::parse(korb::cli::cmd_chart(kB124, Format::json).body);
  const std::string text = korb::cli::cmd_chart(kB124, Format::text).body;
  const double elapsed = seconds_since(start);
  c.expect(j["ell"] == 4, "ell != 4");
  const std::vector<std::string> fixed = {"ℂ³", "ℂ₍₄₎", "ℂ₍₂₎⊕ℂ₍₄₎", "ℂ₍₄₎"};
  const std::vector<std::string> zeta = {"1", "i", "-1", "-i"};
  const std::vector<std::vector<std::string>> logw = {
      {"0", "1/4", "1/2", "3/4"}, {"0", "1/2", "0", "1/2"}, {"0", "0", "0", "0"}};
  c.expect(j["sectors"].size() == 4, "sector count");
  for (std::size_t s = 0; s < 4 && s < j["sectors"].size(); ++s) {
    const json& sec = j["sectors"][s];
    c.expect(sec["fixed_space"] == fixed[s], "fixed set s=" + std::to_string(s));
    c.expect(sec["zeta"] == zeta[s], "zeta s=" + std::to_string(s));
    c.expect(sec["generator"] == "alpha_" + std::to_string(s), "generator s=" + std::to_string(s));
    for (std::size_t k = 0; k < 3; ++k) {
      const std::string lw = sec["logweights"][k];
      const auto slash = lw.find('/');
      c.expect(frac(std::stoll(lw.substr(0, slash)), std::stoll(lw.substr(slash + 1))) == logw[k][s],
               "logweight k=" + std::to_string(k) + " s=" + std::to_string(s));
    }
  }
  // The text chart carries the same rows.
  c.expect(text.find("ℂ³ | ℂ₍₄₎ | ℂ₍₂₎⊕ℂ₍₄₎ | ℂ₍₄₎") != std::string::npos, "text fixed-set row");
  c.expect(text.find("| 0  | 1/4  | 1/2       | 3/4") != std::string::npos, "text a_0 row");
  c.expect(text.find("| 0  | 1/2  | 0         | 1/2") != std::string::npos, "text a_1 row");
  c.expect(text.find("| 0  | 0    | 0         | 0") != std::string::npos, "text a_2 row");
  c.expect(elapsed < kChartSeconds, "runtime " + std::to_string(elapsed) + " s");
}

// (s, t) -> target and factor weights of the published table.
const std::vector<std::tuple<korb::Sector, korb::Sector, korb::Sector, std::vector<std::int64_t>, std::string>>
    kTable = {
        {1, 1, 2, {2}, "(1-u^-2)α₂"},       {1, 2, 3, {}, "α₃"},
        {1, 3, 0, {1, 2}, "(1-u^-1)(1-u^-2)α₀"}, {2, 2, 0, {1}, "(1-u^-1)α₀"},
        {2, 3, 1, {1}, "(1-u^-1)α₁"},       {3, 3, 2, {1, 2}, "(1-u^-1)(1-u^-2)α₂"},
};

void criterion_table(Check& c) {
  const auto table = korb::generator_table(korb::WpsData(kB124));
  const std::string text = korb::cli::cmd_table(kB124, Format::text).body;
  for (const auto& [s, t, target, factors, cell] : kTable) {
    bool found = false;
    for (const auto& e : table) {
      if (e.s != s || e.t != t) continue;
      found = true;
      const std::string where = "cell (" + std::to_string(s) + "," + std::to_string(t) + ")";
      c.expect(e.target == target, where + " target");
      c.expect(e.factors == factors, where + " factors");
      c.expect(e.coeff == korb::euler_product(factors), where + " coefficient");
      c.expect(korb::cli::factored(e.factors, Format::text) + "α" +
                       std::vector<std::string>{"₀", "₁", "₂", "₃"}[static_cast<std::size_t>(e.target)] ==
                   cell,
               where + " rendering");
    }
    c.expect(found, "missing cell");
    c.expect(text.find(cell) != std::string::npos, "text table lacks " + cell);
  }
  // Row alpha_2 of the text grid: empty, then the two entries in order.
  c.expect(text.find("α₂ |            | (1-u^-1)α₀ | (1-u^-1)α₁") != std::string::npos, "text row alpha_2");
}

const std::vector<std::vector<std::int64_t>> kKernels = {{1, 2, 4}, {4}, {2, 4}, {4}};

void criterion_kernels(Check& c) {
  const json j = json::parse(korb::cli::cmd_kernels(kB124, Format::json).body);
  c.expect(j["sectors"].size() == 4, "sector count");
  for (std::size_t s = 0; s < 4 && s < j["sectors"].size(); ++s) {
    const auto factors = j["sectors"][s]["factors"].get<std::vector<std::int64_t>>();
    c.expect(factors == kKernels[s], "factors s=" + std::to_string(s));
    c.expect(korb::parse_laurent(j["sectors"][s]["kernel"].get<std::string>()) == korb::euler_product(kKernels[s]),
             "kernel s=" + std::to_string(s));
  }
  const std::string text = korb::cli::cmd_kernels(kB124, Format::text).body;
  for (const char* line : {"ker(κ₀) = ⟨α₀(1-u^-1)(1-u^-2)(1-u^-4)⟩", "ker(κ₁) = ⟨α₁(1-u^-4)⟩",
                           "ker(κ₂) = ⟨α₂(1-u^-2)(1-u^-4)⟩", "ker(κ₃) = ⟨α₃(1-u^-4)⟩"})
    c.expect(text.find(line) != std::string::npos, std::string("text lacks ") + line);
}

void criterion_presentation(Check& c) {
  const korb::Presentation p = korb::presentation(korb::WpsData(kB124));
  using Rel = std::tuple<korb::Sector, korb::Sector, korb::Sector, std::string>;
  std::set<Rel> expected_i, got_i;
  for (korb::Sector s = 0; s < 4; ++s) expected_i.emplace(0, s, s, "1");
  for (const auto& [s, t, target, factors, cell] : kTable)
    expected_i.emplace(s, t, target, korb::euler_product(factors).to_string());
  for (const auto& e : p.relations_i) got_i.emplace(e.s, e.t, e.target, e.coeff.to_string());
  c.expect(got_i == expected_i, "relations I differ");
  c.expect(p.relations_i.size() == expected_i.size(), "duplicate relations in I");

  std::set<std::pair<korb::Sector, std::string>> expected_j, got_j;
  for (korb::Sector s = 0; s < 4; ++s)
    expected_j.emplace(s, korb::euler_product(kKernels[static_cast<std::size_t>(s)]).to_string());
  for (const auto& r : p.relations_j) got_j.emplace(r.s, r.gen.to_string());
  c.expect(got_j == expected_j, "relations J differ");
  c.expect(p.unit_relation, "missing alpha_0 - 1");
  c.expect(p.ell == 4 && p.weights == kB124, "header");
}

void criterion_torsion(Check& c, const std::vector<WeightVector>& vectors) {
  const auto start = Clock::now();
  const auto reports = korb::torsion_sweep(vectors);
  const double elapsed = seconds_since(start);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    for (const auto& st : reports[i].sectors) {
      const bool ok = st.monic && (st.rank == 0 || abs(st.constant_term) == 1);
      if (!ok) ++failures;
      c.expect(ok, "b=(" + vectors[i].to_string() + ") sector " + std::to_string(st.s));
    }
  }
  c.expect(reports.size() == static_cast<std::size_t>(kSweepSize), "sweep size");
  c.expect(failures == 0, std::to_string(failures) + " failing sectors");
  c.expect(elapsed < kTorsionSeconds, "runtime " + std::to_string(elapsed) + " s");
}

void criterion_axioms(Check& c, const std::vector<WeightVector>& vectors, std::size_t& exhaustive_count) {
  const auto start = Clock::now();
  exhaustive_count = 0;
  for (const auto& b : vectors) {
    const korb::WpsData d(b);
    if (d.ell() > korb::kExhaustiveCocycleLimit) continue;
    ++exhaustive_count;
    const auto bad = korb::check_exponent_laws(d, 0, kAxiomSeed);
    c.expect(!bad, "b=(" + b.to_string() + "): " + bad.value_or(""));
  }
  c.expect(exhaustive_count > 0, "no sweep vector with ell <= 60");
  for (const auto& b : {kB124, WeightVector({2, 3})}) {
    const auto report = korb::verify(KOrbRing(b), kAxiomTrials, kAxiomSeed);
    c.expect(report.pass && report.cocycle_exhaustive && report.trials >= 500,
             "verify (" + b.to_string() + "): " + report.summary());
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < kAxiomSeconds, "runtime " + std::to_string(elapsed) + " s");
}

void criterion_rank(Check& c, const std::vector<WeightVector>& vectors) {
  for (const auto& b : vectors) {
    const korb::WpsData d(b);
    const auto rings = korb::reference::build_sector_rings(d);
    for (const auto& sr : rings) {
      const std::int64_t by_sum = oracle::rank(b.values(), sr.sector, d.ell());
      // Degree of the expanded product, brute force.
      std::vector<std::int64_t> fixed;
      for (const auto w : b.values())
        if (oracle::residue(w, sr.sector, d.ell()) == 0) fixed.push_back(w);
      const oracle::Terms expanded = oracle::euler_product(fixed);
      const std::int64_t by_expansion = expanded.rbegin()->first - expanded.begin()->first;
      if (static_cast<std::int64_t>(sr.rank) != by_sum || by_sum != by_expansion) {
        c.expect(false, "b=(" + b.to_string() + ") sector " + std::to_string(sr.sector));
        break;
      }
    }
  }
  c.expect(korb::total_rank(KOrbRing(kB124).sectors()) == 21, "total rank (1,2,4) != 21");
  for (std::size_t n1 = 1; n1 <= 6; ++n1) {
    const KOrbRing ring{WeightVector(std::vector<std::int64_t>(n1, 1))};
    c.expect(korb::total_rank(ring.sectors()) == n1, "total rank of ones, n+1=" + std::to_string(n1));
  }
}

void criterion_reduce(Check& c) {
  const auto start = Clock::now();
  const KOrbRing ring(kB124);
  std::mt19937_64 rng(kSweepSeed + 8);
  for (const auto& sr : ring.sectors()) {
    const LaurentPoly g = sr.gmonic.to_laurent();
    for (int i = 0; i < kReduceSamples; ++i) {
      LaurentPoly x;
      for (const auto& [e, coeff] : oracle::random_terms(rng, -10, 10, 8)) x.add_term(e, coeff);
      const LaurentPoly r = korb::reduce(sr, x);
      const LaurentPoly diff = x - r;
      bool ok = korb::reduce(sr, r) == r;
      if (!diff.is_zero()) {
        const korb::Exponent lift = diff.min_exponent() < 0 ? -diff.min_exponent() : 0;
        const LaurentPoly lifted = diff.shifted(lift);
        const korb::DivMod qr = korb::divmod_monic(lifted, sr.gmonic);
        ok = ok && qr.remainder.is_zero() && qr.quotient * g == lifted;
      }
      if (!r.is_zero()) ok = ok && r.min_exponent() >= 0 && static_cast<std::size_t>(r.max_exponent()) < sr.rank;
      if (!ok) {
        c.expect(false, "sector " + std::to_string(sr.sector) + " x=" + x.to_string());
        break;
      }
    }
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < kReduceSeconds, "runtime " + std::to_string(elapsed) + " s");
}

}  // namespace

int main() {
  const std::vector<WeightVector> vectors = sweep();
  std::size_t exhaustive = 0;
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"1 golden chart (1,2,4)", criterion_chart},
      {"2 golden multiplication table (1,2,4)", criterion_table},
      {"3 golden Kirwan kernels (1,2,4)", criterion_kernels},
      {"4 presentation (1,2,4)", criterion_presentation},
      {"5 torsion-freeness, 200 random weight vectors", [&](Check& c) { criterion_torsion(c, vectors); }},
      {"6 ring axioms (exponent laws + 500 trials)", [&](Check& c) { criterion_axioms(c, vectors, exhaustive); }},
      {"7 rank oracle equivalence", [&](Check& c) { criterion_rank(c, vectors); }},
      {"8 reduction correctness, 1000 samples per sector", criterion_reduce},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    const auto start = Clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double ms = seconds_since(start) * 1e3;
    const bool ok = c.ok();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << static_cast<long>(ms) << " ms)";
    if (name.front() == '6') std::cout << " [" << exhaustive << " sweep vectors with ell <= 60]";
    if (!ok) std::cout << "\n       " << c.detail.str();
    std::cout << "\n";
  }
  std::cout << (failed ? "FAILED: " + std::to_string(failed) + " criteria" : "ALL CRITERIA PASS") << "\n";
  return failed ? 1 : 0;
}
