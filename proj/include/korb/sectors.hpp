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

#ifndef KORB_SECTORS_HPP
#define KORB_SECTORS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "korb/laurent.hpp"

namespace korb {

/// Positive integer weights (b_0, ..., b_n) of a linear circle action on C^{n+1}.
class WeightVector {
 public:
  /// Throws std::invalid_argument on an empty vector or a weight <= 0,
  /// naming the offending index.
  explicit WeightVector(std::vector<std::int64_t> weights);

  /// Parses "b0,b1,...". Same validation as the constructor.
  static WeightVector parse(std::string_view csv);

  const std::vector<std::int64_t>& values() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  std::int64_t operator[](std::size_t k) const { return weights_[k]; }

  std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<std::int64_t> weights_;
};

using Sector = std::int64_t;

/// Combinatorial data of the finite stabilizer group Z_ell, ell = lcm(b).
///
/// Logweights are exact fractions r_k(s)/ell with numerator
/// r_k(s) = (b_k * s) mod ell; only the numerators are ever handled.
class WpsData {
 public:
  explicit WpsData(WeightVector weights);

  const WeightVector& weights() const noexcept { return weights_; }
  std::int64_t ell() const noexcept { return ell_; }
  std::size_t coordinates() const noexcept { return weights_.size(); }

  /// r_k(s) in [0, ell).
  std::int64_t logweight_numerator(std::size_t k, Sector s) const;
  std::vector<std::int64_t> logweight_row(Sector s) const;

  /// True iff zeta_s fixes the k-th coordinate line, i.e. r_k(s) == 0.
  bool fixes(Sector s, std::size_t k) const { return logweight_numerator(k, s) == 0; }
  std::vector<std::size_t> fixed_coordinates(Sector s) const;

  /// Representative of s + t in [0, ell).
  Sector add(Sector s, Sector t) const;

 private:
  WeightVector weights_;
  std::int64_t ell_ = 1;
};

WpsData build_wps(const WeightVector& b);

/// (r_k(s) + r_k(t) - r_k([s+t])) / ell, always 0 or 1.
int obstruction_exponent(const WpsData& d, std::size_t k, Sector s, Sector t);

/// Obstruction exponents for every coordinate k.
std::vector<int> obstruction_exponents(const WpsData& d, Sector s, Sector t);

/// prod_k (1 - u^-b_k)^{e_k(s,t)}, the coefficient in alpha_s * alpha_t = C(s,t) alpha_[s+t].
LaurentPoly structure_coefficient(const WpsData& d, Sector s, Sector t);

/// prod over k with r_k(s) = 0 of (1 - u^-b_k). Empty product is 1.
LaurentPoly kernel_generator(const WpsData& d, Sector s);

/// Weights b_k of the factors making up kernel_generator(d, s).
std::vector<std::int64_t> kernel_factor_weights(const WpsData& d, Sector s);

/// Product of euler_class(b) over the given weights.
LaurentPoly euler_product(const std::vector<std::int64_t>& weights);

}  // namespace korb

#endif  // KORB_SECTORS_HPP
