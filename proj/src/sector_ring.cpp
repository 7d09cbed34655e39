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

#include <charconv>
#include <exception>
#include <stdexcept>

#include "korb/korb.hpp"

namespace korb {

namespace {

LaurentPoly mulmod(const LaurentPoly& a, const LaurentPoly& b, const MonicPoly& g) {
  return divmod_monic(a * b, g).remainder;
}

LaurentPoly powmod(LaurentPoly base, Exponent n, const MonicPoly& g) {
  LaurentPoly acc = LaurentPoly::constant(1);
  while (n > 0) {
    if (n & 1) acc = mulmod(acc, base, g);
    n >>= 1;
    if (n > 0) base = mulmod(base, base, g);
  }
  return acc;
}

}  // namespace

SectorRing make_sector_ring(const WpsData& d, Sector s) {
  SectorRing ring;
  ring.sector = s;
  ring.gen = kernel_generator(d, s);
  ring.gmonic = normalize(ring.gen);
  ring.rank = ring.gmonic.degree();
  if (ring.rank == 0) return ring;
  const Integer& g0 = ring.gmonic.constant_term();
  // Left without u_inverse; torsion_report flags it and reduce refuses it.
  if (!ring.gmonic.is_monic() || abs(g0) != 1) return ring;
  // g = g0 + u*h with g0 = +-1, so u * (-g0 * h) == 1 modulo g.
  for (std::size_t i = 1; i < ring.gmonic.coeffs.size(); ++i)
    ring.u_inverse.add_term(static_cast<Exponent>(i - 1), -g0 * ring.gmonic.coeffs[i]);
  return ring;
}

std::vector<SectorRing> build_sector_rings(const WpsData& d) {
  const std::int64_t ell = d.ell();
  std::vector<SectorRing> rings(static_cast<std::size_t>(ell));
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < ell; ++s) {
    try {
      rings[static_cast<std::size_t>(s)] = make_sector_ring(d, s);
    } catch (...) {
#pragma omp critical(korb_sector_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return rings;
}

LaurentPoly reduce(const SectorRing& ring, const LaurentPoly& x) {
  if (ring.rank == 0 || x.is_zero()) return {};
  if (ring.u_inverse.is_zero())
    throw std::logic_error("sector " + std::to_string(ring.sector) + ": generator is not monic with unit constant term");
  const Exponent lift = x.min_exponent() < 0 ? -x.min_exponent() : 0;
  LaurentPoly r = divmod_monic(x.shifted(lift), ring.gmonic).remainder;
  if (lift > 0 && !r.is_zero()) r = mulmod(r, powmod(ring.u_inverse, lift, ring.gmonic), ring.gmonic);
  return r;
}

KOrbRing::KOrbRing(const WeightVector& b) : KOrbRing(WpsData(b)) {}

KOrbRing::KOrbRing(WpsData d) : data_(std::move(d)), rings_(build_sector_rings(data_)) {}

KOrbElement KOrbRing::zero() const {
  return KOrbElement{weights(), std::vector<LaurentPoly>(static_cast<std::size_t>(ell()))};
}

KOrbElement KOrbRing::unit() const { return generator(0); }

KOrbElement KOrbRing::generator(Sector s) const {
  KOrbElement x = zero();
  x.comps.at(static_cast<std::size_t>(s)) = reduce(sector(s), LaurentPoly::constant(1));
  return x;
}

KOrbElement KOrbRing::element(std::vector<LaurentPoly> comps) const {
  if (comps.size() != rings_.size())
    throw std::invalid_argument("element has " + std::to_string(comps.size()) + " components, expected " +
                                std::to_string(rings_.size()));
  for (std::size_t s = 0; s < comps.size(); ++s) comps[s] = reduce(rings_[s], comps[s]);
  return KOrbElement{weights(), std::move(comps)};
}

KOrbElement KOrbRing::add(const KOrbElement& x, const KOrbElement& y) const {
  if (x.weights != weights() || y.weights != weights())
    throw std::invalid_argument("add: elements belong to different weight vectors");
  KOrbElement out = x;
  for (std::size_t s = 0; s < out.comps.size(); ++s) out.comps[s] += y.comps[s];
  return out;
}

KOrbElement KOrbRing::random_element(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> coeff(-9, 9);
  KOrbElement x = zero();
  for (std::size_t s = 0; s < rings_.size(); ++s)
    for (std::size_t i = 0; i < rings_[s].rank; ++i) x.comps[s].add_term(static_cast<Exponent>(i), coeff(rng));
  return x;
}

std::size_t total_rank(std::span<const SectorRing> rings) {
  std::size_t total = 0;
  for (const auto& r : rings) total += r.rank;
  return total;
}

std::string format_element(const KOrbElement& x) {
  std::string out;
  for (std::size_t s = 0; s < x.comps.size(); ++s) {
    if (x.comps[s].is_zero()) continue;
    if (!out.empty()) out += ';';
    out += std::to_string(s) + ":" + x.comps[s].to_string();
  }
  return out.empty() ? "0" : out;
}

KOrbElement parse_element(const KOrbRing& ring, std::string_view spec) {
  const std::size_t first = spec.find_first_not_of(' ');
  const std::size_t last = spec.find_last_not_of(' ');
  if (first != spec.npos && spec.substr(first, last - first + 1) == "0") return ring.zero();
  std::vector<LaurentPoly> comps(static_cast<std::size_t>(ring.ell()));
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t semi = spec.find(';', start);
    const std::size_t end = semi == std::string_view::npos ? spec.size() : semi;
    const std::string_view part = spec.substr(start, end - start);
    const std::size_t colon = part.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 's:<poly>' at position " + std::to_string(start), start);
    std::string_view index = part.substr(0, colon);
    while (!index.empty() && index.front() == ' ') index.remove_prefix(1);
    while (!index.empty() && index.back() == ' ') index.remove_suffix(1);
    std::int64_t s = 0;
    const auto [ptr, ec] = std::from_chars(index.data(), index.data() + index.size(), s);
    if (index.empty() || ec != std::errc() || ptr != index.data() + index.size())
      throw ParseError("invalid sector index", start);
    if (s < 0 || s >= ring.ell())
      throw std::out_of_range("sector " + std::to_string(s) + " outside [0, " + std::to_string(ring.ell()) + ")");
    try {
      comps[static_cast<std::size_t>(s)] += parse_laurent(part.substr(colon + 1));
    } catch (const ParseError& e) {
      const std::size_t at = start + colon + 1 + e.position();
      throw ParseError(std::string("polynomial: ") + e.what() + " (offset " + std::to_string(at) + " in element)", at);
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return ring.element(std::move(comps));
}

}  // namespace korb
