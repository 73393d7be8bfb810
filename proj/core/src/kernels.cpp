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

#include "tsst/detail/kernels.hpp"

#include <Eigen/Core>

namespace tsst::detail {

namespace {

template <typename T>
using MatMap = Eigen::Map<const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
template <typename T>
using MutMatMap = Eigen::Map<Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

}  // namespace

template <typename T>
void mm(const T* a, const T* b, T* c, std::size_t m, std::size_t k, std::size_t n,
        bool transpose_a, bool transpose_b, bool accumulate) {
  using Index = Eigen::Index;
  MutMatMap<T> cm(c, static_cast<Index>(m), static_cast<Index>(n));
  MatMap<T> am(a, static_cast<Index>(transpose_a ? k : m), static_cast<Index>(transpose_a ? m : k));
  MatMap<T> bm(b, static_cast<Index>(transpose_b ? n : k), static_cast<Index>(transpose_b ? k : n));

  if (!transpose_a && !transpose_b) {
    if (accumulate) cm.noalias() += am * bm;
    else cm.noalias() = am * bm;
  } else if (transpose_a && !transpose_b) {
    if (accumulate) cm.noalias() += am.transpose() * bm;
    else cm.noalias() = am.transpose() * bm;
  } else if (!transpose_a && transpose_b) {
    if (accumulate) cm.noalias() += am * bm.transpose();
    else cm.noalias() = am * bm.transpose();
  } else {
    if (accumulate) cm.noalias() += am.transpose() * bm.transpose();
    else cm.noalias() = am.transpose() * bm.transpose();
  }
}

template void mm<float>(const float*, const float*, float*, std::size_t, std::size_t, std::size_t,
                        bool, bool, bool);
template void mm<double>(const double*, const double*, double*, std::size_t, std::size_t,
                         std::size_t, bool, bool, bool);

}  // namespace tsst::detail
