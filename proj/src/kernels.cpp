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

#include "srgt/kernels.hpp"

#include <cstdlib>

namespace srgt::kernels {

void eval_batch_scalar(const PolyView& poly, const double* xs,
                       std::size_t count, double* out) {
  for (std::size_t k = 0; k < count; ++k) {
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

namespace {

BatchEvalFn select() {
#if defined(__x86_64__)
  const char* disabled = std::getenv("SRGT_DISABLE_AVX2");
  if ((disabled == nullptr || disabled[0] == '\0' || disabled[0] == '0') &&
      __builtin_cpu_supports("avx2")) {
    return &eval_batch_avx2;
  }
#endif
  return &eval_batch_scalar;
}

const BatchEvalFn kActive = select();

}  // namespace

BatchEvalFn active_batch_eval() { return kActive; }

const char* active_batch_eval_name() {
#if defined(__x86_64__)
  if (kActive == &eval_batch_avx2) return "avx2";
#endif
  return "scalar";
}

}  // namespace srgt::kernels
