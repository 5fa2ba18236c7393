// Copyright 2026 The authcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUTHCODE_MATRIX_INL_HPP_
#define AUTHCODE_MATRIX_INL_HPP_

namespace authcode {

template <typename Fn>
void for_each_affine(const AffineSolutionSet& s, std::uint64_t cap,
                     Fn&& fn) {
  const std::uint64_t total =
      require_within_cap(s.field.modulus(), s.basis.size(), cap);
  const std::size_t n = s.basis.size();
  const Residue q = s.field.modulus();
  Vector coeffs(n, 0);
  Vector point = s.particular;
  for (std::uint64_t step = 0; step < total; ++step) {
    fn(std::span<const Residue>(coeffs), std::span<const Residue>(point));
    // Odometer increment, last coefficient fastest; point tracks it
    // incrementally.
    for (std::size_t pos = n; pos-- > 0;) {
      const Vector& b = s.basis[pos];
      if (coeffs[pos] + 1 < q) {
        ++coeffs[pos];
        for (std::size_t j = 0; j < point.size(); ++j)
          point[j] = s.field.add(point[j], b[j]);
        break;
      }
      // Wrap from q-1 to 0: adding b once more completes the cycle.
      coeffs[pos] = 0;
      for (std::size_t j = 0; j < point.size(); ++j)
        point[j] = s.field.add(point[j], b[j]);
    }
  }
}

}  // namespace authcode

#endif  // AUTHCODE_MATRIX_INL_HPP_
