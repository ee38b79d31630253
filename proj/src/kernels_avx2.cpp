// Copyright 2026 The SRGT Authors
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

// Compiled with -mavx2 and -ffp-contract=off. Only eval_batch_avx2 lives
// here so that no other code gets AVX2 instructions.

#if defined(__x86_64__)

#include <immintrin.h>

#include "srgt/kernels.hpp"

namespace srgt::kernels {

void eval_batch_avx2(const PolyView& poly, const double* xs, std::size_t count,
                     double* out) {
  const std::size_t vec_count = count / 4 * 4;
  for (std::size_t k = 0; k < vec_count; k += 4) {
    __m256d acc = _mm256_setzero_pd();
    const std::uint8_t* exps = poly.exponents;
    for (std::size_t m = 0; m < poly.num_monomials; ++m) {
      __m256d term = _mm256_set1_pd(poly.weights[m]);
      for (std::size_t v = 0; v < poly.num_vars; ++v) {
        const __m256d x = _mm256_loadu_pd(xs + v * count + k);
        // Plain mul/add, never FMA: keeps results bit-identical to the
        // scalar reference kernel.
        for (std::uint8_t e = exps[v]; e > 0; --e) {
          term = _mm256_mul_pd(term, x);
        }
      }
      acc = _mm256_add_pd(acc, term);
      exps += poly.num_vars;
    }
    _mm256_storeu_pd(out + k, acc);
  }
  if (vec_count < count) {
    // The SoA stride is the full batch count, so the scalar kernel can
    // finish the tail in place.
    for (std::size_t k = vec_count; k < count; ++k) {
      double acc = 0.0;
      const std::uint8_t* exps = poly.exponents;
      for (std::size_t m = 0; m < poly.num_monomials; ++m) {
        double term = poly.weights[m];
        for (std::size_t v = 0; v < poly.num_vars; ++v) {
          const double x = xs[v * count + k];
          for (std::uint8_t e = exps[v]; e > 0; --e) term *= x;
        }
        acc += term;
        exps += poly.num_vars;
      }
      out[k] = acc;
    }
  }
}

}  // namespace srgt::kernels

#endif  // defined(__x86_64__)
