// Copyright 2026 The tsst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>

namespace tsst::detail {

// Dense row-major GEMM, c (+)= op(a) * op(b). op(a) is [m,k]; when
// transpose_a is set, the buffer holds the [k,m] layout. Backed by Eigen;
// the accumulation order is Eigen's fixed blocked order and is a
// deterministic function of the operand dimensions.
template <typename T>
void mm(const T* a, const T* b, T* c, std::size_t m, std::size_t k, std::size_t n,
        bool transpose_a, bool transpose_b, bool accumulate);

extern template void mm<float>(const float*, const float*, float*, std::size_t, std::size_t,
                               std::size_t, bool, bool, bool);
extern template void mm<double>(const double*, const double*, double*, std::size_t, std::size_t,
                                std::size_t, bool, bool, bool);

}  // namespace tsst::detail
