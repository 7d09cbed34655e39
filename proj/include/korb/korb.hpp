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

#ifndef KORB_KORB_HPP
#define KORB_KORB_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "korb/laurent.hpp"
#include "korb/sectors.hpp"

namespace korb {

/// Quotient Z[u, u^-1] / <kernel generator> attached to one sector.
///
/// The normalized generator is monic with constant term +-1 whenever
/// rank > 0, so the quotient is free over Z with basis 1, u, ..., u^{rank-1}
/// and u is a unit in it. A sector whose generator is 1 has rank 0 and
/// every element reduces to 0.
struct SectorRing {
  Sector sector = 0;
  LaurentPoly gen;
  MonicPoly gmonic;
  std::size_t rank = 0;
  // Residue of u^-1; zero for rank 0.
  LaurentPoly u_inverse;
};

SectorRing make_sector_ring(const WpsData& d, Sector s);

/// All ell sector rings, built in parallel.
std::vector<SectorRing> build_sector_rings(const WpsData& d);

/// Canonical residue of x in the sector quotient: a polynomial in u of
/// degree < rank. Idempotent, Z-linear and multiplicative modulo the ideal.
LaurentPoly reduce(const SectorRing& ring, const LaurentPoly& x);

/// An element of the orbifold K-ring: one reduced residue per sector.
struct KOrbElement {
  WeightVector weights;
  std::vector<LaurentPoly> comps;

  friend bool operator==(const KOrbElement&, const KOrbElement&) = default;
};

/// Weight data plus its sector rings; immutable once built.
class KOrbRing {
 public:
  explicit KOrbRing(const WeightVector& b);
  explicit KOrbRing(WpsData d);

  const WpsData& data() const noexcept { return data_; }
  const WeightVector& weights() const noexcept { return data_.weights(); }
  std::int64_t ell() const noexcept { return data_.ell(); }
  const std::vector<SectorRing>& sectors() const noexcept { return rings_; }
  const SectorRing& sector(Sector s) const { return rings_.at(static_cast<std::size_t>(s)); }

  KOrbElement zero() const;
  /// alpha_0.
  KOrbElement unit() const;
  /// alpha_s, reduced (zero on a collapsed sector).
  KOrbElement generator(Sector s) const;
  /// Reduces each component; comps.size() must equal ell.
  KOrbElement element(std::vector<LaurentPoly> comps) const;

  KOrbElement add(const KOrbElement& x, const KOrbElement& y) const;

  /// Random residues with coefficients uniform in [-9, 9], each sector
  /// independently, for degrees 0 .. rank-1.
  KOrbElement random_element(std::mt19937_64& rng) const;

 private:
  WpsData data_;
  std::vector<SectorRing> rings_;
};

/// Star product. Each target sector t collects
/// sum over [s+s'] = t of x_s * y_s' * C(s, s') and reduces once.
/// Target sectors are processed in parallel.
/// Throws std::invalid_argument if x or y belong to different weights.
KOrbElement star_multiply(const KOrbRing& ring, const KOrbElement& x, const KOrbElement& y);

struct TableEntry {
  Sector s = 0;
  Sector t = 0;
  Sector target = 0;
  // Weights b_k whose Euler class appears in the coefficient, ascending k.
  std::vector<std::int64_t> factors;
  // Unreduced coefficient C(s, t).
  LaurentPoly coeff;
};

/// alpha_s * alpha_t for every 0 <= s <= t < ell, lexicographic order.
std::vector<TableEntry> generator_table(const WpsData& d);

struct KernelRelation {
  Sector s = 0;
  std::vector<std::int64_t> factors;
  LaurentPoly gen;
};

/// Generators alpha_0 .. alpha_{ell-1} over Z[u, u^-1] with the product
/// relations I, the Kirwan kernel relations J, and alpha_0 - 1.
struct Presentation {
  WeightVector weights;
  std::int64_t ell = 1;
  std::vector<TableEntry> relations_i;
  std::vector<KernelRelation> relations_j;
  bool unit_relation = true;
};

Presentation presentation(const WpsData& d);

std::size_t total_rank(std::span<const SectorRing> rings);

struct SectorTorsion {
  Sector s = 0;
  std::size_t rank = 0;
  Integer constant_term;
  bool monic = false;
  bool ok = false;
};

struct TorsionReport {
  bool pass = true;
  std::vector<SectorTorsion> sectors;
};

/// Checks every normalized kernel generator is monic with constant term
/// +-1, which makes each sector quotient a free Z-module.
TorsionReport torsion_report(std::span<const SectorRing> rings);

/// Torsion reports for many weight vectors, processed in parallel.
std::vector<TorsionReport> torsion_sweep(std::span<const WeightVector> weights);

/// Exponent laws (2-cocycle, symmetry, unit, values in {0,1}) are checked
/// exhaustively up to this ell; beyond it they are sampled.
inline constexpr std::int64_t kExhaustiveCocycleLimit = 60;

/// First violation of the exponent laws, if any. Exhaustive when
/// ell <= kExhaustiveCocycleLimit, otherwise `samples` seeded random triples.
std::optional<std::string> check_exponent_laws(const WpsData& d, std::size_t samples, std::uint64_t seed);

struct VerifyReport {
  bool pass = true;
  bool cocycle_exhaustive = true;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> counterexample;

  std::string summary() const;
};

/// Exponent laws plus randomized associativity, commutativity,
/// distributivity and unit checks. Trial i draws from an RNG seeded by
/// (seed, i), so results are independent of scheduling; trials run in
/// parallel and the lowest failing trial is reported.
VerifyReport verify(const KOrbRing& ring, std::size_t trials, std::uint64_t seed);

/// RNG stream used for trial `trial` of a verify run.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Element text "s:<poly>;s:<poly>" over the nonzero components; "0" for zero.
std::string format_element(const KOrbElement& x);

/// Parses "s:<poly>[;s:<poly>...]" into a reduced element. Repeated sectors
/// add. Throws ParseError on malformed polynomials and std::out_of_range on
/// a sector index outside [0, ell).
KOrbElement parse_element(const KOrbRing& ring, std::string_view spec);

namespace reference {

/// Serial star product applying reduce to every pair product separately.
KOrbElement star_multiply(const KOrbRing& ring, const KOrbElement& x, const KOrbElement& y);

/// Serial verify over the same per-trial RNG streams.
VerifyReport verify(const KOrbRing& ring, std::size_t trials, std::uint64_t seed);

std::vector<SectorRing> build_sector_rings(const WpsData& d);

std::vector<TorsionReport> torsion_sweep(std::span<const WeightVector> weights);

}  // namespace reference

}  // namespace korb

#endif  // KORB_KORB_HPP
