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

/**
 * @file contextuality.hpp
 * Nine-ray Kochen-Specker witness for a single qutrit.
 *
 * A WitnessSet holds nine rays |psi_i>, the orthogonality graph between
 * them, the projectors Pi_i = |psi_i><psi_i| and the dichotomous
 * observables A_i = I - 2 Pi_i. Three equivalent noncontextuality
 * inequalities are evaluated on it:
 *
 *   sum_i <Pi_i> <= 3
 *   sum_i <A_i>  >= 3
 *   sum_{(i,j) in E} <A_i A_j> + <A_9> >= -4
 *
 * and the traceless witness <W> >= 0 with W = 12 (sum_i A_i - 3 I).
 */

#include "qutrit_ks/core.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qutrit_ks {

inline constexpr int kRayCount = 9;

/// Strict threshold on the witness value; saturation at 0 is noncontextual.
inline constexpr double kContextualThreshold = -1e-9;

/// Unordered pair of zero-based vertex indices, stored with first < second.
struct Edge {
    int first = 0;
    int second = 0;

    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

class OrthogonalityGraph {
  public:
    OrthogonalityGraph(int vertex_count, std::vector<Edge> edges)
        : vertex_count_(vertex_count), edges_(std::move(edges)) {
        for (auto &e : edges_) {
            if (e.first == e.second) {
                throw ValidationError("OrthogonalityGraph: self-loop");
            }
            if (e.first < 0 || e.second < 0 || e.first >= vertex_count_ ||
                e.second >= vertex_count_) {
                throw ValidationError("OrthogonalityGraph: vertex out of range");
            }
            if (e.first > e.second) {
                std::swap(e.first, e.second);
            }
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
            throw ValidationError("OrthogonalityGraph: duplicate edge");
        }
    }

    /// The 13-edge graph, built from one-based labels.
    static OrthogonalityGraph standard_graph() {
        static constexpr std::array<std::pair<int, int>, 13> kLabels{{{1, 2},
                                                                     {1, 3},
                                                                     {1, 4},
                                                                     {2, 3},
                                                                     {2, 5},
                                                                     {3, 6},
                                                                     {4, 7},
                                                                     {4, 8},
                                                                     {5, 7},
                                                                     {5, 9},
                                                                     {6, 8},
                                                                     {6, 9},
                                                                     {7, 8}}};
        std::vector<Edge> edges;
        for (auto [a, b] : kLabels) {
            edges.push_back({a - 1, b - 1});
        }
        return OrthogonalityGraph(kRayCount, std::move(edges));
    }

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge> &edges() const { return edges_; }

    bool has_edge(int a, int b) const {
        const Edge e{std::min(a, b), std::max(a, b)};
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    friend bool operator==(const OrthogonalityGraph &, const OrthogonalityGraph &) = default;

  private:
    int vertex_count_;
    std::vector<Edge> edges_;
};

class WitnessSet {
  public:
    /// Validates the orthogonality of every edge. `witness` is the traceless
    /// witness operator associated with the rays; pass std::nullopt to derive
    /// it as 12 (sum_i A_i - 3 I).
    WitnessSet(std::vector<Ket3> rays, OrthogonalityGraph graph,
               std::optional<ComplexMatrix3> witness = std::nullopt)
        : rays_(std::move(rays)), graph_(std::move(graph)) {
        if (static_cast<int>(rays_.size()) != kRayCount || graph_.vertex_count() != kRayCount) {
            throw ValidationError("WitnessSet: expected nine rays");
        }
        for (const auto &e : graph_.edges()) {
            if (std::abs(rays_[e.first].inner(rays_[e.second])) > kDefaultTol) {
                throw ValidationError("WitnessSet: rays " + std::to_string(e.first + 1) + " and " +
                                      std::to_string(e.second + 1) + " are not orthogonal");
            }
        }
        for (const auto &r : rays_) {
            projectors_.push_back(r.projector());
            observables_.push_back(ComplexMatrix3::Identity() - 2.0 * projectors_.back());
        }
        witness_ = witness ? *witness : derived_witness();
        if (!is_hermitian(witness_, kPsdTol) || std::abs(witness_.trace()) > kPsdTol) {
            throw ValidationError("WitnessSet: witness must be traceless Hermitian");
        }
    }

    const std::vector<Ket3> &rays() const { return rays_; }
    const OrthogonalityGraph &graph() const { return graph_; }
    const std::vector<ComplexMatrix3> &projectors() const { return projectors_; }
    const std::vector<ComplexMatrix3> &observables() const { return observables_; }

    const Ket3 &ray(int label) const { return rays_.at(static_cast<std::size_t>(label - 1)); }
    const ComplexMatrix3 &projector(int label) const {
        return projectors_.at(static_cast<std::size_t>(label - 1));
    }
    const ComplexMatrix3 &observable(int label) const {
        return observables_.at(static_cast<std::size_t>(label - 1));
    }

    const ComplexMatrix3 &witness() const { return witness_; }

    /// 12 (sum_i A_i - 3 I), computed from the projectors.
    ComplexMatrix3 derived_witness() const {
        ComplexMatrix3 sum = ComplexMatrix3::Zero();
        for (const auto &a : observables_) {
            sum += a;
        }
        return 12.0 * (sum - 3.0 * ComplexMatrix3::Identity());
    }

    /// sum_{(i,j) in E} A_i A_j + A_9, products taken directly from projectors.
    ComplexMatrix3 correlation_operator() const {
        ComplexMatrix3 c = observables_.back();
        for (const auto &e : graph_.edges()) {
            c += observables_[e.first] * observables_[e.second];
        }
        return c;
    }

  private:
    std::vector<Ket3> rays_;
    OrthogonalityGraph graph_;
    std::vector<ComplexMatrix3> projectors_;
    std::vector<ComplexMatrix3> observables_;
    ComplexMatrix3 witness_;
};

/// -2 sqrt2 L1 - 3 L3 + 2 sqrt2 L4 + 6 L6 - sqrt3 L8, assembled term by term.
inline ComplexMatrix3 standard_witness_operator() {
    GellMannVector v;
    v(1) = -2.0 * kSqrt2;
    v(3) = -3.0;
    v(4) = 2.0 * kSqrt2;
    v(6) = 6.0;
    v(8) = -kSqrt3;
    return reconstruct(v);
}

inline WitnessSet standard_witness_set() {
    const double h = std::sqrt(0.5);
    const double t = std::sqrt(1.0 / 3.0);
    const double tt = std::sqrt(2.0 / 3.0);
    auto ket = [](double a, double b, double c) { return Ket3(ComplexVector3(a, b, c)); };
    std::vector<Ket3> rays{
        ket(1, 0, 0),     ket(0, 1, 0),       ket(0, 0, 1),
        ket(0, h, -h),    ket(t, 0, -tt),     ket(t, tt, 0),
        ket(h, 0.5, 0.5), ket(h, -0.5, -0.5), ket(h, -0.5, 0.5),
    };
    return WitnessSet(std::move(rays), OrthogonalityGraph::standard_graph(),
                      standard_witness_operator());
}

/// Witness operator of the set. For the standard set this is the literal
/// five-term Gell-Mann combination.
inline const ComplexMatrix3 &witness_operator(const WitnessSet &w) { return w.witness(); }

// ---------------------------------------------------------------------------
// Inequality forms
// ---------------------------------------------------------------------------

inline double projector_form_lhs(const QutritState &state, const WitnessSet &w) {
    double sum = 0.0;
    for (const auto &p : w.projectors()) {
        sum += expectation(state, p);
    }
    return sum;
}

inline double dichotomous_form_lhs(const QutritState &state, const WitnessSet &w) {
    double sum = 0.0;
    for (const auto &a : w.observables()) {
        sum += expectation(state, a);
    }
    return sum;
}

inline double correlation_form_lhs(const QutritState &state, const WitnessSet &w) {
    double sum = expectation(state, w.observable(kRayCount));
    for (const auto &e : w.graph().edges()) {
        const ComplexMatrix3 product = w.observables()[e.first] * w.observables()[e.second];
        sum += expectation(state, product);
    }
    return sum;
}

inline double evaluate_witness(const QutritState &state, const WitnessSet &w) {
    return expectation(state, w.witness());
}

inline bool is_contextual(double witness_value) { return witness_value < kContextualThreshold; }

struct InequalityReport {
    double projector_sum = 0.0;
    double dichotomous_sum = 0.0;
    double correlation_value = 0.0;
    double witness_value = 0.0;
    bool contextual = false;
};

inline InequalityReport evaluate_inequalities(const QutritState &state, const WitnessSet &w) {
    InequalityReport r;
    r.projector_sum = projector_form_lhs(state, w);
    r.dichotomous_sum = dichotomous_form_lhs(state, w);
    r.correlation_value = correlation_form_lhs(state, w);
    r.witness_value = evaluate_witness(state, w);
    r.contextual = is_contextual(r.witness_value);
    return r;
}

// ---------------------------------------------------------------------------
// Classical bounds
// ---------------------------------------------------------------------------

struct NoncontextualBounds {
    double projector_max = 0.0;
    double dichotomous_min = 0.0;
    double correlation_min = 0.0;
    /// Minimum of the correlation form over every +-1 assignment, exclusive or not.
    double correlation_min_unrestricted = 0.0;
};

/**
 * Exhaustive search over all 2^n deterministic assignments of the graph's
 * vertices. All three bounds range over the exclusive assignments, where no
 * edge has both endpoints set to 1 (a_i = 1 - 2 v_i). The correlation form
 * is also minimized over every +-1 assignment for reference.
 */
inline NoncontextualBounds noncontextual_bounds_bruteforce(const WitnessSet &w) {
    const auto &graph = w.graph();
    const int n = graph.vertex_count();
    NoncontextualBounds b;
    b.projector_max = -std::numeric_limits<double>::infinity();
    b.dichotomous_min = std::numeric_limits<double>::infinity();
    b.correlation_min = std::numeric_limits<double>::infinity();
    b.correlation_min_unrestricted = std::numeric_limits<double>::infinity();

    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        auto bit = [mask](int v) { return static_cast<int>((mask >> v) & 1u); };
        auto sign = [&](int v) { return 1 - 2 * bit(v); };

        int correlation = sign(n - 1);
        bool exclusive = true;
        for (const auto &e : graph.edges()) {
            correlation += sign(e.first) * sign(e.second);
            if (bit(e.first) && bit(e.second)) {
                exclusive = false;
            }
        }
        b.correlation_min_unrestricted =
            std::min(b.correlation_min_unrestricted, static_cast<double>(correlation));

        if (exclusive) {
            b.correlation_min = std::min(b.correlation_min, static_cast<double>(correlation));
            int ones = 0;
            int signs = 0;
            for (int v = 0; v < n; ++v) {
                ones += bit(v);
                signs += sign(v);
            }
            b.projector_max = std::max(b.projector_max, static_cast<double>(ones));
            b.dichotomous_min = std::min(b.dichotomous_min, static_cast<double>(signs));
        }
    }
    return b;
}

// ---------------------------------------------------------------------------
// Rotations and scale checks
// ---------------------------------------------------------------------------

/// Maps every ray |psi_i> to u|psi_i> and the witness W to u W u^dagger.
inline WitnessSet rotate_witness(const WitnessSet &w, const ComplexMatrix3 &u) {
    if (!is_unitary(u)) {
        throw ValidationError("rotate_witness: matrix is not unitary");
    }
    std::vector<Ket3> rays;
    rays.reserve(w.rays().size());
    for (const auto &r : w.rays()) {
        ComplexVector3 a = u * r.amplitudes();
        a.normalize();
        rays.emplace_back(a);
    }
    ComplexMatrix3 rotated = u * w.witness() * u.adjoint();
    rotated = 0.5 * (rotated + rotated.adjoint()).eval();
    return WitnessSet(std::move(rays), w.graph(), rotated);
}

/// Least-squares fit correlation = offset + scale * witness over random states.
struct ScaleFit {
    double offset = 0.0;
    double scale = 0.0;
    double max_residual = 0.0;
};

inline ScaleFit fit_correlation_scale(const WitnessSet &w, int samples, std::uint64_t seed) {
    std::vector<std::pair<double, double>> xy;
    xy.reserve(static_cast<std::size_t>(samples));
    double mx = 0.0;
    double my = 0.0;
    for (int k = 0; k < samples; ++k) {
        const QutritState s = random_state(seed + static_cast<std::uint64_t>(k));
        xy.emplace_back(evaluate_witness(s, w), correlation_form_lhs(s, w));
        mx += xy.back().first;
        my += xy.back().second;
    }
    mx /= samples;
    my /= samples;
    double sxx = 0.0;
    double sxy = 0.0;
    for (auto [x, y] : xy) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    ScaleFit fit;
    fit.scale = sxy / sxx;
    fit.offset = my - fit.scale * mx;
    for (auto [x, y] : xy) {
        fit.max_residual = std::max(fit.max_residual, std::abs(y - fit.offset - fit.scale * x));
    }
    return fit;
}

// ---------------------------------------------------------------------------
// Audit of the printed Gell-Mann expansions
// ---------------------------------------------------------------------------

/// Published (identity, Lambda_1..Lambda_8) coefficients for one operator.
struct PrintedExpansion {
    std::string label;
    int first = 0;  // one-based ray label
    int second = 0; // 0 for a single observable A_first
    Decomposition coefficients;
};

namespace detail {

inline PrintedExpansion printed(std::string label, int first, int second, double identity,
                                std::array<double, 8> lambda) {
    PrintedExpansion p{std::move(label), first, second, {}};
    p.coefficients.identity_coeff = identity;
    p.coefficients.lambda.c = lambda;
    return p;
}

} // namespace detail

/// The nine A_i expansions as published.
inline std::vector<PrintedExpansion> printed_observable_expansions() {
    using detail::printed;
    const double s2 = kSqrt2;
    const double s3 = kSqrt3;
    const double third = 1.0 / 3.0;
    return {
        printed("A1", 1, 0, third, {0, 0, -1, 0, 0, 0, 0, -1 / s3}),
        printed("A2", 2, 0, third, {0, 0, 1, 0, 0, 0, 0, -1 / s3}),
        printed("A3", 3, 0, third, {0, 0, 0, 0, 0, 0, 0, 2 / s3}),
        printed("A4", 4, 0, third, {0, 0, 0.5, 0, 0, 1, 0, 0.5 / s3}),
        printed("A5", 5, 0, third, {0, 0, -third, 2 * s2 / 3, 0, 0, 0, s3 / 3}),
        printed("A6", 6, 0, third, {-2 * s2 / 3, 0, third, 0, 0, 0, 0, -s3 / 3}),
        printed("A7", 7, 0, third,
                {-s2 / 2, 0, -0.25, -s2 / 2, 0, -0.5, 0, -0.25 / s3}),
        printed("A8", 8, 0, third, {s2 / 2, 0, -0.25, s2 / 2, 0, -0.5, 0, -0.25 / s3}),
        printed("A9", 9, 0, third, {s2 / 2, 0, -0.25, -s2 / 2, 0, 0.5, 0, -0.25 / s3}),
    };
}

/// The thirteen edge products A_i A_j as published.
inline std::vector<PrintedExpansion> printed_product_expansions() {
    using detail::printed;
    const double s2 = kSqrt2;
    const double s3 = kSqrt3;
    const double s6 = std::sqrt(6.0);
    const double mthird = -1.0 / 3.0;
    return {
        printed("A1A2", 1, 2, mthird, {0, 0, 0, 0, 0, 0, 0, -2 / s3}),
        printed("A1A3", 1, 3, mthird, {0, 0, -1, 0, 0, 0, 0, 1 / s3}),
        printed("A1A4", 1, 4, mthird, {0, 0, -0.5, 0, 0, 1, 0, -0.5 / s3}),
        printed("A2A3", 2, 3, mthird, {0, 0, 1, 0, 0, 0, 0, 1 / s3}),
        printed("A2A5", 2, 5, mthird, {0, 0, 2.0 / 3, 2 * s2 / 3, 0, 0, 0, 0}),
        printed("A3A6", 3, 6, mthird,
                {-1 / (3 * s2), 0, s2 / (3 * s2), 0, 0, 0, 0, s6 / (3 * s2)}),
        printed("A4A7", 4, 7, mthird, {-s2 / 2, 0, 0.25, -s2 / 2, 0, 0.5, 0, s3 / 12}),
        printed("A4A8", 4, 8, mthird, {s2 / 2, 0, 0.25, s2 / 2, 0, 0.5, 0, s3 / 12}),
        printed("A5A7", 5, 7, mthird, {-s2 / 2, 0, -7.0 / 12, s2 / 6, 0, -0.5, 0, s3 / 4}),
        printed("A5A9", 5, 9, mthird, {s2 / 2, 0, -7.0 / 12, s2 / 6, 0, 0.5, 0, s3 / 4}),
        printed("A6A8", 6, 8, mthird, {-s2 / 6, 0, 1.0 / 12, s2 / 2, 0, -0.5, 0, -5 * s3 / 12}),
        printed("A6A9", 6, 9, mthird, {-s2 / 6, 0, 1.0 / 12, -s2 / 2, 0, 0.5, 0, -5 * s3 / 12}),
        printed("A7A8", 7, 8, mthird, {0, 0, -0.5, 0, 0, -1, 0, -0.5 / s3}),
    };
}

/// One coefficient that differs from its recomputed value. `term` is 0 for
/// the identity and k for Lambda_k.
struct TermMismatch {
    std::string label;
    int term = 0;
    double printed = 0.0;
    double computed = 0.0;

    double delta() const { return printed - computed; }
};

struct ExpansionAudit {
    int observables_checked = 0;
    int products_checked = 0;
    std::vector<TermMismatch> observable_mismatches;
    std::vector<TermMismatch> product_mismatches;
    /// Lambda budget of the printed products plus printed A9 plus 4 I,
    /// compared against W/4.
    std::vector<TermMismatch> budget_mismatches;

    bool clean() const {
        return observable_mismatches.empty() && product_mismatches.empty() &&
               budget_mismatches.empty();
    }
};

namespace detail {

inline void diff_terms(const std::string &label, const Decomposition &printed_coeffs,
                       const Decomposition &computed, double tol,
                       std::vector<TermMismatch> &out) {
    if (std::abs(printed_coeffs.identity_coeff - computed.identity_coeff) > tol) {
        out.push_back({label, 0, printed_coeffs.identity_coeff, computed.identity_coeff});
    }
    for (int k = 1; k <= 8; ++k) {
        if (std::abs(printed_coeffs.lambda(k) - computed.lambda(k)) > tol) {
            out.push_back({label, k, printed_coeffs.lambda(k), computed.lambda(k)});
        }
    }
}

} // namespace detail

/**
 * Recomputes every A_i and edge product A_i A_j from the projectors of `w`
 * and diffs their Gell-Mann coefficients against the published tables.
 * Informational: never throws on a mismatch.
 */
inline ExpansionAudit verify_printed_expansions(const WitnessSet &w, double tol = 1e-9) {
    ExpansionAudit audit;
    const auto observables = printed_observable_expansions();
    const auto products = printed_product_expansions();

    for (const auto &p : observables) {
        detail::diff_terms(p.label, p.coefficients, decompose(w.observable(p.first)), tol,
                           audit.observable_mismatches);
        ++audit.observables_checked;
    }
    for (const auto &p : products) {
        const ComplexMatrix3 prod = w.observable(p.first) * w.observable(p.second);
        detail::diff_terms(p.label, p.coefficients, decompose(prod, kPsdTol), tol,
                           audit.product_mismatches);
        ++audit.products_checked;
    }

    Decomposition budget;
    budget.identity_coeff = 4.0;
    auto accumulate = [&budget](const Decomposition &d) {
        budget.identity_coeff += d.identity_coeff;
        for (int k = 1; k <= 8; ++k) {
            budget.lambda(k) += d.lambda(k);
        }
    };
    for (const auto &p : products) {
        accumulate(p.coefficients);
    }
    accumulate(observables.back().coefficients);
    Decomposition target = decompose(w.witness(), kPsdTol);
    target.identity_coeff /= 4.0;
    for (auto &c : target.lambda.c) {
        c /= 4.0;
    }
    detail::diff_terms("sum(AiAj)+A9+4I vs W/4", budget, target, tol, audit.budget_mismatches);
    return audit;
}

} // namespace qutrit_ks
