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

#include "korb/sectors.hpp"

#include <cassert>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace korb {

WeightVector::WeightVector(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("weight vector is empty");
  for (std::size_t k = 0; k < weights_.size(); ++k)
    if (weights_[k] <= 0)
      throw std::invalid_argument("weight b_" + std::to_string(k) + " = " + std::to_string(weights_[k]) +
                                  " is not positive");
}

WeightVector WeightVector::parse(std::string_view csv) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    std::string_view field = csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw std::invalid_argument("weight b_" + std::to_string(out.size()) + " = '" + std::string(field) +
                                  "' is not an integer");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return WeightVector(std::move(out));
}

std::string WeightVector::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(weights_[k]);
  }
  return out;
}

WpsData::WpsData(WeightVector weights) : weights_(std::move(weights)) {
  for (const auto b : weights_.values()) {
    const std::int64_t g = std::gcd(ell_, b);
    std::int64_t next = 0;
    if (__builtin_mul_overflow(ell_ / g, b, &next))
      throw std::overflow_error("lcm of weights " + weights_.to_string() + " overflows");
    ell_ = next;
  }
}

std::int64_t WpsData::logweight_numerator(std::size_t k, Sector s) const {
  assert(k < weights_.size() && s >= 0 && s < ell_);
  const __int128 prod = static_cast<__int128>(weights_[k]) * s;
  return static_cast<std::int64_t>(prod % ell_);
}

std::vector<std::int64_t> WpsData::logweight_row(Sector s) const {
  std::vector<std::int64_t> row(weights_.size());
  for (std::size_t k = 0; k < row.size(); ++k) row[k] = logweight_numerator(k, s);
  return row;
}

std::vector<std::size_t> WpsData::fixed_coordinates(Sector s) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < weights_.size(); ++k)
    if (fixes(s, k)) out.push_back(k);
  return out;
}

Sector WpsData::add(Sector s, Sector t) const {
  const Sector sum = (s % ell_ + t % ell_) % ell_;
  return sum < 0 ? sum + ell_ : sum;
}

WpsData build_wps(const WeightVector& b) { return WpsData(b); }

int obstruction_exponent(const WpsData& d, std::size_t k, Sector s, Sector t) {
  const std::int64_t num =
      d.logweight_numerator(k, s) + d.logweight_numerator(k, t) - d.logweight_numerator(k, d.add(s, t));
  if (num != 0 && num != d.ell())
    throw std::logic_error("obstruction exponent numerator " + std::to_string(num) + " not in {0, ell}");
  return num == 0 ? 0 : 1;
}

std::vector<int> obstruction_exponents(const WpsData& d, Sector s, Sector t) {
  std::vector<int> out(d.coordinates());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = obstruction_exponent(d, k, s, t);
  return out;
}

LaurentPoly euler_product(const std::vector<std::int64_t>& weights) {
  LaurentPoly p = LaurentPoly::constant(1);
  for (const auto w : weights) p *= euler_class(w);
  return p;
}

LaurentPoly structure_coefficient(const WpsData& d, Sector s, Sector t) {
  std::vector<std::int64_t> factors;
  for (std::size_t k = 0; k < d.coordinates(); ++k)
    if (obstruction_exponent(d, k, s, t) == 1) factors.push_back(d.weights()[k]);
  return euler_product(factors);
}

std::vector<std::int64_t> kernel_factor_weights(const WpsData& d, Sector s) {
  std::vector<std::int64_t> out;
  for (const auto k : d.fixed_coordinates(s)) out.push_back(d.weights()[k]);
  return out;
}

LaurentPoly kernel_generator(const WpsData& d, Sector s) { return euler_product(kernel_factor_weights(d, s)); }

}  // namespace korb
