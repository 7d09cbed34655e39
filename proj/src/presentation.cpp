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

#include "korb/korb.hpp"

namespace korb {

std::vector<TableEntry> generator_table(const WpsData& d) {
  std::vector<TableEntry> table;
  const auto ell = static_cast<std::size_t>(d.ell());
  table.reserve(ell * (ell + 1) / 2);
  for (Sector s = 0; s < d.ell(); ++s)
    for (Sector t = s; t < d.ell(); ++t) {
      TableEntry e;
      e.s = s;
      e.t = t;
      e.target = d.add(s, t);
      for (std::size_t k = 0; k < d.coordinates(); ++k)
        if (obstruction_exponent(d, k, s, t) == 1) e.factors.push_back(d.weights()[k]);
      e.coeff = euler_product(e.factors);
      table.push_back(std::move(e));
    }
  return table;
}

Presentation presentation(const WpsData& d) {
  Presentation p{d.weights(), d.ell(), generator_table(d), {}, true};
  p.relations_j.reserve(static_cast<std::size_t>(d.ell()));
  for (Sector s = 0; s < d.ell(); ++s) {
    KernelRelation r;
    r.s = s;
    r.factors = kernel_factor_weights(d, s);
    r.gen = euler_product(r.factors);
    p.relations_j.push_back(std::move(r));
  }
  return p;
}

TorsionReport torsion_report(std::span<const SectorRing> rings) {
  TorsionReport report;
  report.sectors.reserve(rings.size());
  for (const auto& ring : rings) {
    SectorTorsion st;
    st.s = ring.sector;
    st.rank = ring.rank;
    st.constant_term = ring.gmonic.constant_term();
    st.monic = ring.gmonic.is_monic();
    st.ok = st.monic && abs(st.constant_term) == 1;
    report.pass = report.pass && st.ok;
    report.sectors.push_back(std::move(st));
  }
  return report;
}

}  // namespace korb
