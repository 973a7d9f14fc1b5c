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

#include "exo/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace exo {

void NMConfig::validate() const {
  if (!(reflection > 0.0)) throw std::invalid_argument("NMConfig: reflection must be > 0");
  if (!(expansion > 1.0 && expansion > reflection)) {
    throw std::invalid_argument("NMConfig: expansion must exceed 1 and the reflection coefficient");
  }
  if (!(contraction > 0.0 && contraction < 1.0)) {
    throw std::invalid_argument("NMConfig: contraction must lie in (0, 1)");
  }
  if (!(shrink > 0.0 && shrink < 1.0)) throw std::invalid_argument("NMConfig: shrink must lie in (0, 1)");
  if (!(initial_step != 0.0 && std::isfinite(initial_step))) {
    throw std::invalid_argument("NMConfig: initial_step must be finite and non-zero");
  }
  if (!(tolerance >= 0.0)) throw std::invalid_argument("NMConfig: tolerance must be >= 0");
}

namespace {

double safe_eval(const ObjectiveFn& fn, std::span<const double> x) {
  const double v = fn(x);
  return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
}

}  // namespace

NMResult nelder_mead(const ObjectiveFn& objective, std::span<const double> x0,
                     const NMConfig& config) {
  config.validate();
  const std::size_t n = x0.size();
  if (n == 0) throw std::invalid_argument("nelder_mead: empty starting point");

  NMResult result;
  std::vector<std::vector<double>> simplex(n + 1, std::vector<double>(x0.begin(), x0.end()));
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += config.initial_step;
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = safe_eval(objective, simplex[i]);
  result.evaluations = n + 1;
  if (!std::isfinite(values[0])) throw std::invalid_argument("nelder_mead: objective(x0) is not finite");

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), second(n);

  auto point = [&](double coeff, const std::vector<double>& worst, std::vector<double>& out) {
    for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + coeff * (centroid[j] - worst[j]);
  };

  while (true) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    {
      std::vector<std::vector<double>> s(n + 1);
      std::vector<double> v(n + 1);
      for (std::size_t i = 0; i <= n; ++i) {
        s[i] = std::move(simplex[order[i]]);
        v[i] = values[order[i]];
      }
      simplex = std::move(s);
      values = std::move(v);
    }

    if (values[0] <= config.stop_below) {
      result.converged = true;
      break;
    }
    double diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        diameter = std::max(diameter, std::abs(simplex[i][j] - simplex[0][j]));
    if (diameter <= config.tolerance) {
      result.converged = true;
      break;
    }
    if (result.iterations >= config.max_iterations) break;
    ++result.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j];
    for (auto& c : centroid) c /= static_cast<double>(n);

    auto& worst = simplex[n];
    point(config.reflection, worst, trial);
    const double f_reflect = safe_eval(objective, trial);
    ++result.evaluations;

    if (f_reflect < values[0]) {
      point(config.reflection * config.expansion, worst, second);
      const double f_expand = safe_eval(objective, second);
      ++result.evaluations;
      if (f_expand < f_reflect) {
        worst = second;
        values[n] = f_expand;
      } else {
        worst = trial;
        values[n] = f_reflect;
      }
      continue;
    }
    if (f_reflect < values[n - 1]) {
      worst = trial;
      values[n] = f_reflect;
      continue;
    }

    // contraction: outside if the reflected point beats the worst vertex
    const bool outside = f_reflect < values[n];
    point(outside ? config.reflection * config.contraction : -config.contraction, worst, second);
    const double f_contract = safe_eval(objective, second);
    ++result.evaluations;
    if (f_contract < (outside ? f_reflect : values[n])) {
      worst = second;
      values[n] = f_contract;
      continue;
    }

    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        simplex[i][j] = simplex[0][j] + config.shrink * (simplex[i][j] - simplex[0][j]);
      values[i] = safe_eval(objective, simplex[i]);
    }
    result.evaluations += n;
  }

  result.x = simplex[0];
  result.f = values[0];
  return result;
}

}  // namespace exo
