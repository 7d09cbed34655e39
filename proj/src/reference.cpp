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

// Serial reference implementations of the parallel kernels.

#include "korb/korb.hpp"

namespace korb {

namespace detail {
void check_same_weights(const KOrbRing& ring, const KOrbElement& x, const KOrbElement& y);
}

namespace reference {

KOrbElement star_multiply(const KOrbRing& ring, const KOrbElement& x, const KOrbElement& y) {
  detail::check_same_weights(ring, x, y);
  const WpsData& d = ring.data();
  KOrbElement out = ring.zero();
  for (Sector s = 0; s < d.ell(); ++s) {
    const LaurentPoly& xs = x.comps[static_cast<std::size_t>(s)];
    if (xs.is_zero()) continue;
    for (Sector s2 = 0; s2 < d.ell(); ++s2) {
      const LaurentPoly& ys = y.comps[static_cast<std::size_t>(s2)];
      if (ys.is_zero()) continue;
      const Sector t = d.add(s, s2);
      out.comps[static_cast<std::size_t>(t)] += reduce(ring.sector(t), xs * ys * structure_coefficient(d, s, s2));
    }
  }
  return out;
}

std::vector<SectorRing> build_sector_rings(const WpsData& d) {
  std::vector<SectorRing> rings;
  rings.reserve(static_cast<std::size_t>(d.ell()));
  for (Sector s = 0; s < d.ell(); ++s) rings.push_back(make_sector_ring(d, s));
  return rings;
}

std::vector<TorsionReport> torsion_sweep(std::span<const WeightVector> weights) {
  std::vector<TorsionReport> out;
  out.reserve(weights.size());
  for (const auto& b : weights) out.push_back(torsion_report(reference::build_sector_rings(WpsData(b))));
  return out;
}

}  // namespace reference

}  // namespace korb
