// Copyright 2026 The exo Authors
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


#ifndef EXO_TESTS_HELPERS_HPP
#define EXO_TESTS_HELPERS_HPP

#include <random>

#include "exo/qcore.hpp"
#include "support/oracles.hpp"

namespace testing_support {

inline oracle::Mat to_oracle(const exo::ComplexMatrix& m) {
  oracle::Mat out = oracle::zeros(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline exo::ComplexMatrix from_oracle(const oracle::Mat& m) {
  exo::ComplexMatrix out(m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) out(i, j) = m[i][j];
  return out;
}

inline double max_diff(const exo::ComplexMatrix& a, const oracle::Mat& b) {
  return oracle::max_diff(to_oracle(a), b);
}

}  // namespace testing_support

#endif  // EXO_TESTS_HELPERS_HPP
