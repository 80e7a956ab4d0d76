// Copyright 2026 The qutrit-ks Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Test-only reference computations. Nothing here touches Eigen or the
// library's algorithms: plain 3x3 arrays, literal ray amplitudes, Taylor
// series exponentials and recursive enumeration.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat = std::array<std::array<C, 3>, 3>;
using Vec = std::array<C, 3>;

inline Mat zero() { return Mat{}; }

inline Mat identity() {
    Mat m{};
    for (int i = 0; i < 3; ++i) {
        m[i][i] = 1.0;
    }
    return m;
}

inline Mat diag(double a, double b, double c) {
    Mat m{};
    m[0][0] = a;
    m[1][1] = b;
    m[2][2] = c;
    return m;
}

inline Mat mul(const Mat &a, const Mat &b) {
    Mat r{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return r;
}

inline Mat add(const Mat &a, const Mat &b, C sb = 1.0) {
    Mat r{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r[i][j] = a[i][j] + sb * b[i][j];
        }
    }
    return r;
}

inline Mat scale(const Mat &a, C s) { return add(zero(), a, s); }

inline Mat dagger(const Mat &a) {
    Mat r{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r[i][j] = std::conj(a[j][i]);
        }
    }
    return r;
}

inline C trace(const Mat &a) { return a[0][0] + a[1][1] + a[2][2]; }

inline double max_abs_diff(const Mat &a, const Mat &b) {
    double m = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m = std::max(m, std::abs(a[i][j] - b[i][j]));
        }
    }
    return m;
}

inline Mat outer(const Vec &v) {
    Mat r{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r[i][j] = v[i] * std::conj(v[j]);
        }
    }
    return r;
}

inline C inner(const Vec &a, const Vec &b) {
    C s = 0.0;
    for (int i = 0; i < 3; ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

/// Gell-Mann matrices typed in entry by entry.
inline Mat lambda(int k) {
    const C i{0, 1};
    const double r3 = 1.0 / std::sqrt(3.0);
    switch (k) {
    case 1:
        return Mat{{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}};
    case 2:
        return Mat{{{0, -i, 0}, {i, 0, 0}, {0, 0, 0}}};
    case 3:
        return Mat{{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}};
    case 4:
        return Mat{{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}};
    case 5:
        return Mat{{{0, 0, -i}, {0, 0, 0}, {i, 0, 0}}};
    case 6:
        return Mat{{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}};
    case 7:
        return Mat{{{0, 0, 0}, {0, 0, -i}, {0, i, 0}}};
    default:
        return Mat{{{r3, 0, 0}, {0, r3, 0}, {0, 0, -2 * r3}}};
    }
}

/// Nine rays, 1-based index.
inline Vec ray(int k) {
    const double h = std::sqrt(0.5);
    const double t = std::sqrt(1.0 / 3.0);
    const double tt = std::sqrt(2.0 / 3.0);
    static const std::array<Vec, 9> rays{{{1, 0, 0},
                                          {0, 1, 0},
                                          {0, 0, 1},
                                          {0, h, -h},
                                          {t, 0, -tt},
                                          {t, tt, 0},
                                          {h, 0.5, 0.5},
                                          {h, -0.5, -0.5},
                                          {h, -0.5, 0.5}}};
    return rays[static_cast<std::size_t>(k - 1)];
}

inline const std::vector<std::pair<int, int>> &edges() {
    static const std::vector<std::pair<int, int>> e{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5},
                                                     {3, 6}, {4, 7}, {4, 8}, {5, 7}, {5, 9},
                                                     {6, 8}, {6, 9}, {7, 8}};
    return e;
}

inline Mat observable(int k) { return add(identity(), outer(ray(k)), -2.0); }

/// exp(i * angle * h) by scaling and squaring a 40-term Taylor series.
inline Mat expm_i(const Mat &h, double angle) {
    int squarings = 8;
    const Mat a = scale(h, C{0, angle / std::pow(2.0, squarings)});
    Mat term = identity();
    Mat sum = identity();
    for (int n = 1; n <= 40; ++n) {
        term = scale(mul(term, a), 1.0 / n);
        sum = add(sum, term);
    }
    for (int s = 0; s < squarings; ++s) {
        sum = mul(sum, sum);
    }
    return sum;
}

/// Real part of trace(rho * obs) with every product written out.
inline double expect(const Mat &rho, const Mat &obs) { return trace(mul(rho, obs)).real(); }

/// Maximum independent set size of the 9-vertex graph by recursive branching.
inline int max_independent_set() {
    std::array<std::array<bool, 10>, 10> adj{};
    for (auto [a, b] : edges()) {
        adj[a][b] = adj[b][a] = true;
    }
    std::function<int(int, std::vector<int> &)> go = [&](int v, std::vector<int> &chosen) -> int {
        if (v > 9) {
            return static_cast<int>(chosen.size());
        }
        int best = go(v + 1, chosen);
        bool ok = true;
        for (int u : chosen) {
            ok = ok && !adj[u][v];
        }
        if (ok) {
            chosen.push_back(v);
            best = std::max(best, go(v + 1, chosen));
            chosen.pop_back();
        }
        return best;
    };
    std::vector<int> chosen;
    return go(1, chosen);
}

/// min of sum_edges a_i a_j + a_9 over a in {+-1}^9, by recursion. With
/// `exclusive`, adjacent vertices may not both take -1.
inline int correlation_minimum(bool exclusive) {
    std::array<int, 10> a{};
    std::function<int(int)> go = [&](int v) -> int {
        if (v > 9) {
            int s = a[9];
            for (auto [i, j] : edges()) {
                if (exclusive && a[i] == -1 && a[j] == -1) {
                    return 1000;
                }
                s += a[i] * a[j];
            }
            return s;
        }
        a[v] = 1;
        const int plus = go(v + 1);
        a[v] = -1;
        const int minus = go(v + 1);
        return std::min(plus, minus);
    };
    return go(1);
}

} // namespace oracle
