// Copyright 2026 The emojilab Authors.
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

// Brute-force reference implementations used as test oracles. They follow
// the textbook definitions literally, in long double, and share no code
// with the library.

#pragma once

#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace emojilab::reference {

inline long double kl2(const std::vector<double>& p, const std::vector<long double>& m) {
  long double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    s += p[i] * (std::log(static_cast<long double>(p[i])) - std::log(m[i]));
  }
  return s / std::log(2.0L);
}

inline double jsd(const std::vector<double>& p, const std::vector<double>& q) {
  std::vector<long double> m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    m[i] = (static_cast<long double>(p[i]) + q[i]) / 2;
  }
  const long double js = (kl2(p, m) + kl2(q, m)) / 2;
  return static_cast<double>(std::sqrt(js < 0 ? 0 : js));
}

inline double tv(const std::vector<double>& p, const std::vector<double>& q) {
  long double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    s += std::fabs(static_cast<long double>(p[i]) - q[i]);
  }
  return static_cast<double>(s / 2);
}

inline double bc(const std::vector<double>& p, const std::vector<double>& q) {
  long double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    s += std::sqrt(static_cast<long double>(p[i]) * q[i]);
  }
  return static_cast<double>(s);
}

/// Prefix overlap X_d recomputed from scratch at every depth.
inline std::size_t overlap_at(const std::vector<std::string>& a,
                              const std::vector<std::string>& b, std::size_t d) {
  std::set<std::string> sa(a.begin(), a.begin() + static_cast<long>(d));
  std::size_t x = 0;
  for (std::size_t i = 0; i < d; ++i) x += sa.count(b[i]);
  return x;
}

inline double rbo_extrapolated(const std::vector<std::string>& a,
                               const std::vector<std::string>& b, double p) {
  const std::size_t k = a.size();
  long double sum = 0;
  for (std::size_t d = 1; d <= k; ++d) {
    sum += static_cast<long double>(overlap_at(a, b, d)) / d * std::pow((long double)p, (long double)d);
  }
  return static_cast<double>(static_cast<long double>(overlap_at(a, b, k)) / k *
                                 std::pow((long double)p, (long double)k) +
                             (1 - p) / p * sum);
}

inline double rbo_truncated(const std::vector<std::string>& a,
                            const std::vector<std::string>& b, double p) {
  long double sum = 0;
  for (std::size_t d = 1; d <= a.size(); ++d) {
    sum += static_cast<long double>(overlap_at(a, b, d)) / d *
           std::pow((long double)p, (long double)(d - 1));
  }
  return static_cast<double>((1 - p) * sum);
}

/// Mid-rank of x[i]: 1 + #{x_j < x_i} + (#{x_j == x_i} - 1) / 2.
inline std::vector<long double> midranks(const std::vector<double>& x) {
  std::vector<long double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t less = 0, equal = 0;
    for (double v : x) {
      less += v < x[i];
      equal += v == x[i];
    }
    r[i] = 1 + less + (equal - 1) / 2.0L;
  }
  return r;
}

/// Weighted Pearson correlation of mid-ranks.
inline double weighted_rank_correlation(const std::vector<double>& x,
                                        const std::vector<double>& y,
                                        const std::vector<double>& w) {
  const auto rx = midranks(x), ry = midranks(y);
  long double sw = 0, mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sw += w[i];
    mx += w[i] * rx[i];
    my += w[i] * ry[i];
  }
  mx /= sw;
  my /= sw;
  long double cxy = 0, cxx = 0, cyy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cxy += w[i] * (rx[i] - mx) * (ry[i] - my);
    cxx += w[i] * (rx[i] - mx) * (rx[i] - mx);
    cyy += w[i] * (ry[i] - my) * (ry[i] - my);
  }
  return static_cast<double>(cxy / std::sqrt(cxx * cyy));
}

}  // namespace emojilab::reference
