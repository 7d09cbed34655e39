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

#include <algorithm>
#include <limits>
#include <sstream>

#include "korb/korb.hpp"

namespace korb {

namespace {

using Multiply = KOrbElement (*)(const KOrbRing&, const KOrbElement&, const KOrbElement&);

// Raw exponent numerator check so that a bad value is reported, not thrown.
std::optional<int> exponent(const WpsData& d, std::size_t k, Sector s, Sector t) {
  const std::int64_t num =
      d.logweight_numerator(k, s) + d.logweight_numerator(k, t) - d.logweight_numerator(k, d.add(s, t));
  if (num == 0) return 0;
  if (num == d.ell()) return 1;
  return std::nullopt;
}

std::optional<std::string> check_triple(const WpsData& d, Sector s, Sector t, Sector v) {
  const auto describe = [&](std::size_t k, const char* what) {
    std::ostringstream os;
    os << "k=" << k << " s=" << s << " s'=" << t << " s''=" << v << ": " << what;
    return os.str();
  };
  for (std::size_t k = 0; k < d.coordinates(); ++k) {
    const auto st = exponent(d, k, s, t);
    const auto ts = exponent(d, k, t, s);
    const auto st_v = exponent(d, k, d.add(s, t), v);
    const auto s_tv = exponent(d, k, s, d.add(t, v));
    const auto tv = exponent(d, k, t, v);
    const auto unit = exponent(d, k, 0, t);
    if (!st || !ts || !st_v || !s_tv || !tv || !unit) return describe(k, "exponent outside {0,1}");
    if (*st != *ts) return describe(k, "exponent not symmetric");
    if (*unit != 0) return describe(k, "identity sector twists");
    if (*st + *st_v != *s_tv + *tv) return describe(k, "2-cocycle identity fails");
  }
  return std::nullopt;
}

std::optional<std::string> run_trial(const KOrbRing& ring, Multiply mul, std::uint64_t seed, std::uint64_t trial) {
  auto rng = trial_rng(seed, trial);
  const KOrbElement x = ring.random_element(rng);
  const KOrbElement y = ring.random_element(rng);
  const KOrbElement z = ring.random_element(rng);
  const KOrbElement one = ring.unit();
  const auto describe = [&](const char* law) {
    return "trial " + std::to_string(trial) + ": " + law + " fails for x=" + format_element(x) +
           " y=" + format_element(y) + " z=" + format_element(z);
  };
  if (mul(ring, one, x) != x || mul(ring, x, one) != x) return describe("unit law");
  const KOrbElement xy = mul(ring, x, y);
  if (xy != mul(ring, y, x)) return describe("commutativity");
  if (mul(ring, xy, z) != mul(ring, x, mul(ring, y, z))) return describe("associativity");
  if (mul(ring, x, ring.add(y, z)) != ring.add(xy, mul(ring, x, z))) return describe("distributivity");
  return std::nullopt;
}

std::optional<std::string> run_trial_safely(const KOrbRing& ring, Multiply mul, std::uint64_t seed,
                                            std::uint64_t trial) {
  try {
    return run_trial(ring, mul, seed, trial);
  } catch (const std::exception& e) {
    return "trial " + std::to_string(trial) + ": " + e.what();
  }
}

VerifyReport start_report(const KOrbRing& ring, std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify: trials must be at least 1");
  VerifyReport report;
  report.trials = trials;
  report.seed = seed;
  report.cocycle_exhaustive = ring.ell() <= kExhaustiveCocycleLimit;
  report.counterexample = check_exponent_laws(ring.data(), trials, seed);
  report.pass = !report.counterexample;
  return report;
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

std::optional<std::string> check_exponent_laws(const WpsData& d, std::size_t samples, std::uint64_t seed) {
  const Sector ell = d.ell();
  if (ell <= kExhaustiveCocycleLimit) {
    for (Sector s = 0; s < ell; ++s)
      for (Sector t = 0; t < ell; ++t)
        for (Sector v = 0; v < ell; ++v)
          if (auto bad = check_triple(d, s, t, v)) return bad;
    return std::nullopt;
  }
  auto rng = trial_rng(seed, std::numeric_limits<std::uint64_t>::max());
  std::uniform_int_distribution<Sector> pick(0, ell - 1);
  const std::size_t n = std::max<std::size_t>(samples, 1000);
  for (std::size_t i = 0; i < n; ++i) {
    const Sector s = pick(rng), t = pick(rng), v = pick(rng);
    if (auto bad = check_triple(d, s, t, v)) return bad;
  }
  return std::nullopt;
}

std::string VerifyReport::summary() const {
  if (!pass) return "FAIL (" + counterexample.value_or("unknown") + ")";
  std::ostringstream os;
  os << "PASS (cocycle " << (cocycle_exhaustive ? "exhaustive" : "sampled") << "; " << trials
     << " random associativity trials)";
  return os.str();
}

VerifyReport verify(const KOrbRing& ring, std::size_t trials, std::uint64_t seed) {
  VerifyReport report = start_report(ring, trials, seed);
  if (!report.pass) return report;
  std::vector<std::optional<std::string>> failures(trials);
  const auto n = static_cast<std::int64_t>(trials);
  Multiply mul = &korb::star_multiply;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i)
    failures[static_cast<std::size_t>(i)] = run_trial_safely(ring, mul, seed, static_cast<std::uint64_t>(i));
  for (auto& f : failures)
    if (f) {
      report.pass = false;
      report.counterexample = std::move(f);
      break;
    }
  return report;
}

namespace reference {

VerifyReport verify(const KOrbRing& ring, std::size_t trials, std::uint64_t seed) {
  VerifyReport report = start_report(ring, trials, seed);
  for (std::size_t i = 0; i < trials && report.pass; ++i) {
    if (auto f = run_trial_safely(ring, &reference::star_multiply, seed, i)) {
      report.pass = false;
      report.counterexample = std::move(f);
    }
  }
  return report;
}

}  // namespace reference

}  // namespace korb
