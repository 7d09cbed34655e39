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

// OpenMP kernels. Serial counterparts live in reference.cpp and are kept
// as the test oracle for these.

#include <exception>
#include <stdexcept>

#include "korb/korb.hpp"

namespace korb {

namespace detail {

void check_same_weights(const KOrbRing& ring, const KOrbElement& x, const KOrbElement& y) {
  if (x.weights != ring.weights() || y.weights != ring.weights())
    throw std::invalid_argument("star_multiply: elements belong to weights (" + x.weights.to_string() + ") and (" +
                                y.weights.to_string() + "), ring has (" + ring.weights().to_string() + ")");
  if (x.comps.size() != ring.sectors().size() || y.comps.size() != ring.sectors().size())
    throw std::invalid_argument("star_multiply: component count does not match ell");
}

}  // namespace detail

KOrbElement star_multiply(const KOrbRing& ring, const KOrbElement& x, const KOrbElement& y) {
  detail::check_same_weights(ring, x, y);
  const WpsData& d = ring.data();
  const std::int64_t ell = d.ell();
  KOrbElement out = ring.zero();
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < ell; ++t) {
    const SectorRing& target = ring.sectors()[static_cast<std::size_t>(t)];
    if (target.rank == 0) continue;
    LaurentPoly acc;
    for (std::int64_t s = 0; s < ell; ++s) {
      const LaurentPoly& xs = x.comps[static_cast<std::size_t>(s)];
      if (xs.is_zero()) continue;
      const Sector s2 = d.add(t, -s);
      const LaurentPoly& ys = y.comps[static_cast<std::size_t>(s2)];
      if (ys.is_zero()) continue;
      acc += xs * ys * structure_coefficient(d, s, s2);
    }
    out.comps[static_cast<std::size_t>(t)] = reduce(target, acc);
  }
  return out;
}

std::vector<TorsionReport> torsion_sweep(std::span<const WeightVector> weights) {
  std::vector<TorsionReport> out(weights.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < weights.size(); ++i) {
    try {
      // Serial per-vector build; the sweep itself is the parallel loop.
      out[i] = torsion_report(reference::build_sector_rings(WpsData(weights[i])));
    } catch (...) {
#pragma omp critical(korb_sweep_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace korb
