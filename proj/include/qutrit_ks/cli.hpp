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
 * @file cli.hpp
 * Command implementations behind the `qutrit_ks` executable: state
 * specifications, JSON/CSV serialization and one function per subcommand.
 *
 * Commands write to the given stream and throw UsageError (exit code 2)
 * for malformed input or ValidationError (exit code 3) for a physically
 * invalid state. Contextuality is reported as data, never as an error.
 */

#include "qutrit_ks/contextuality.hpp"
#include "qutrit_ks/core.hpp"
#include "qutrit_ks/nmr.hpp"
#include "qutrit_ks/readout.hpp"

#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>

namespace qutrit_ks::cli {

using json = nlohmann::json;

enum ExitCode : int { kSuccess = 0, kUsage = 2, kInvalidState = 3 };

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Format { kTable, kCsv, kJson };

inline Format parse_format(const std::string &s) {
    if (s == "table") {
        return Format::kTable;
    }
    if (s == "csv") {
        return Format::kCsv;
    }
    if (s == "json") {
        return Format::kJson;
    }
    throw UsageError("unknown format '" + s + "'");
}

// ---------------------------------------------------------------------------
// State specifications
// ---------------------------------------------------------------------------

struct NamedState {
    std::string name; ///< PPS1|PPS2|PPS3|SIGMA_X|THERMAL|MIXED
};

struct DiagonalState {
    double theta_p_deg = 0.0;
    double theta_q_deg = 0.0;
};

struct ExplicitState {
    ComplexMatrix3 matrix = ComplexMatrix3::Zero();
    bool deviation = false;
};

struct RandomState {
    std::uint64_t seed = 0;
};

using StateSpec = std::variant<NamedState, DiagonalState, ExplicitState, RandomState>;

inline void check_angle_deg(double deg) {
    if (!(deg >= 0.0 && deg <= 180.0)) {
        throw UsageError("angle " + std::to_string(deg) + " outside [0, 180] degrees");
    }
}

/// Parses {"name": ...} | {"diagonal": {...}} | {"matrix": [[re, im] x 9], "deviation": bool}
inline StateSpec parse_state_json(const json &j) {
    try {
        if (!j.is_object()) {
            throw UsageError("state JSON must be an object");
        }
        if (j.contains("name")) {
            return NamedState{j.at("name").get<std::string>()};
        }
        if (j.contains("diagonal")) {
            const auto &d = j.at("diagonal");
            DiagonalState s{d.at("theta_p_deg").get<double>(), d.at("theta_q_deg").get<double>()};
            check_angle_deg(s.theta_p_deg);
            check_angle_deg(s.theta_q_deg);
            return s;
        }
        if (j.contains("matrix")) {
            const auto &m = j.at("matrix");
            if (!m.is_array() || m.size() != 9) {
                throw UsageError("\"matrix\" must hold 9 [re, im] pairs");
            }
            ExplicitState s;
            for (int k = 0; k < 9; ++k) {
                const auto &pair = m.at(static_cast<std::size_t>(k));
                if (!pair.is_array() || pair.size() != 2) {
                    throw UsageError("\"matrix\" entries must be [re, im] pairs");
                }
                s.matrix(k / 3, k % 3) = Complex{pair[0].get<double>(), pair[1].get<double>()};
            }
            s.deviation = j.value("deviation", false);
            return s;
        }
    } catch (const json::exception &e) {
        throw UsageError(std::string("malformed state JSON: ") + e.what());
    }
    throw UsageError("state JSON needs one of \"name\", \"diagonal\", \"matrix\"");
}

inline StateSpec parse_state_json(const std::string &text) {
    try {
        return parse_state_json(json::parse(text));
    } catch (const json::parse_error &e) {
        throw UsageError(std::string("malformed state JSON: ") + e.what());
    }
}

inline StateSpec parse_state_json(const char *text) { return parse_state_json(std::string(text)); }

inline QutritState resolve_state(const StateSpec &spec, const nmr::SpinSystem &sys) {
    if (const auto *n = std::get_if<NamedState>(&spec)) {
        if (n->name == "MIXED") {
            return QutritState::maximally_mixed();
        }
        if (n->name == "THERMAL") {
            return nmr::thermal_state(sys);
        }
        try {
            return nmr::prepare(nmr::prepared_state_from_string(n->name), sys);
        } catch (const DomainError &) {
            throw UsageError("unknown state name '" + n->name + "'");
        }
    }
    if (const auto *d = std::get_if<DiagonalState>(&spec)) {
        check_angle_deg(d->theta_p_deg);
        check_angle_deg(d->theta_q_deg);
        return nmr::prepare_diagonal(degrees_to_radians(d->theta_p_deg),
                                     degrees_to_radians(d->theta_q_deg), sys);
    }
    if (const auto *r = std::get_if<RandomState>(&spec)) {
        return random_state(r->seed);
    }
    const auto &e = std::get<ExplicitState>(spec);
    if (e.deviation) {
        return QutritState::from_deviation(DeviationMatrix(e.matrix));
    }
    return QutritState(e.matrix);
}

inline std::string describe(const StateSpec &spec) {
    if (const auto *n = std::get_if<NamedState>(&spec)) {
        return n->name;
    }
    if (const auto *d = std::get_if<DiagonalState>(&spec)) {
        std::ostringstream os;
        os << "diagonal(" << d->theta_p_deg << "," << d->theta_q_deg << ")";
        return os.str();
    }
    if (const auto *r = std::get_if<RandomState>(&spec)) {
        return "random(" + std::to_string(r->seed) + ")";
    }
    return "matrix";
}

inline json state_to_json(const QutritState &s) {
    json m = json::array();
    for (int k = 0; k < 9; ++k) {
        const Complex z = s(k / 3, k % 3);
        m.push_back({z.real(), z.imag()});
    }
    return {{"matrix", m}, {"deviation", false}};
}

// ---------------------------------------------------------------------------
// Pulse-sequence JSON
// ---------------------------------------------------------------------------

/**
 * A list of events:
 *   {"pulse": {"transition": "1-2"|"2-3"|"all", "axis": "x"|"y", "angle_deg": a}}
 *   {"gradient": {}}
 *   {"relax": {"duration": s, "t1": s, "t2": s}}
 */
inline nmr::PulseSequence parse_sequence_json(const json &j) {
    if (!j.is_array()) {
        throw UsageError("pulse sequence must be a JSON array");
    }
    nmr::PulseSequence seq;
    try {
        for (const auto &e : j) {
            if (e.contains("pulse")) {
                const auto &p = e.at("pulse");
                const auto t = p.at("transition").get<std::string>();
                const auto a = p.value("axis", std::string("y"));
                nmr::PulseEvent ev;
                if (t == "1-2") {
                    ev.transition = nmr::Transition::k12;
                } else if (t == "2-3") {
                    ev.transition = nmr::Transition::k23;
                } else if (t == "all") {
                    ev.transition = nmr::Transition::kNonSelective;
                } else {
                    throw UsageError("unknown transition '" + t + "'");
                }
                if (a == "x") {
                    ev.axis = nmr::Axis::kX;
                } else if (a == "y") {
                    ev.axis = nmr::Axis::kY;
                } else {
                    throw UsageError("unknown axis '" + a + "'");
                }
                ev.flip_angle = degrees_to_radians(p.at("angle_deg").get<double>());
                if (!(std::abs(ev.flip_angle) < 2.0 * kPi)) {
                    throw UsageError("pulse angle must satisfy |angle| < 360 degrees");
                }
                seq.events.emplace_back(ev);
            } else if (e.contains("gradient")) {
                seq.events.emplace_back(nmr::GradientEvent{});
            } else if (e.contains("relax")) {
                const auto &r = e.at("relax");
                nmr::RelaxationEvent ev{r.at("duration").get<double>(), r.at("t1").get<double>(),
                                        r.at("t2").get<double>()};
                if (!(ev.duration >= 0.0 && ev.t1 > 0.0 && ev.t2 > 0.0)) {
                    throw UsageError("relaxation needs duration >= 0 and positive T1, T2");
                }
                seq.events.emplace_back(ev);
            } else {
                throw UsageError("unknown sequence event");
            }
        }
    } catch (const json::exception &e) {
        throw UsageError(std::string("malformed pulse sequence: ") + e.what());
    }
    return seq;
}

// ---------------------------------------------------------------------------
// Number formatting
// ---------------------------------------------------------------------------

/// Full double precision for machine-readable output.
inline std::string full(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

inline std::string fixed(double v, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

inline const char *flag(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

struct WitnessOptions {
    StateSpec state = NamedState{"MIXED"};
    std::optional<nmr::PulseSequence> sequence;
    Format format = Format::kTable;
    bool dump_state = false;
};

inline void cmd_witness(const WitnessOptions &opt, std::ostream &out) {
    const nmr::SpinSystem sys;
    QutritState state = resolve_state(opt.state, sys);
    if (opt.sequence) {
        state = nmr::apply(state, *opt.sequence, sys);
    }
    if (opt.dump_state) {
        out << state_to_json(state).dump() << "\n";
        return;
    }
    const WitnessSet w = standard_witness_set();
    const InequalityReport r = evaluate_inequalities(state, w);
    if (opt.format == Format::kJson) {
        json j{{"state", describe(opt.state)},
               {"projector_sum", r.projector_sum},
               {"dichotomous_sum", r.dichotomous_sum},
               {"correlation_value", r.correlation_value},
               {"witness_value", r.witness_value},
               {"contextual", r.contextual}};
        out << j.dump(2) << "\n";
        return;
    }
    if (opt.format == Format::kCsv) {
        out << "state,projector_sum,dichotomous_sum,correlation_value,witness,contextual\n"
            << describe(opt.state) << "," << full(r.projector_sum) << ","
            << full(r.dichotomous_sum) << "," << full(r.correlation_value) << ","
            << full(r.witness_value) << "," << flag(r.contextual) << "\n";
        return;
    }
    out << "state              " << describe(opt.state) << "\n"
        << "projector_sum      " << fixed(r.projector_sum, 6) << "   (noncontextual <= 3)\n"
        << "dichotomous_sum    " << fixed(r.dichotomous_sum, 6) << "   (noncontextual >= 3)\n"
        << "correlation_value  " << fixed(r.correlation_value, 6) << "   (noncontextual >= -4)\n"
        << "witness            " << fixed(r.witness_value, 6) << "   (noncontextual >= 0)\n"
        << "contextual         " << flag(r.contextual) << "\n";
}

struct ProtocolOptions {
    StateSpec state = NamedState{"MIXED"};
    Format format = Format::kTable;
};

inline void cmd_protocol(const ProtocolOptions &opt, std::ostream &out) {
    const nmr::SpinSystem sys;
    const QutritState state = resolve_state(opt.state, sys);
    const ExpectationSet e = run_protocol(state);
    const double witness = witness_from_protocol(e);
    const double direct_witness = evaluate_witness(state, standard_witness_set());

    const std::array<std::pair<const char *, double>, 5> extracted{
        {{"l1", e.l1}, {"l3", e.l3}, {"l4", e.l4}, {"l6", e.l6}, {"l8", e.l8}}};
    const std::array<int, 5> index{1, 3, 4, 6, 8};

    if (opt.format == Format::kJson) {
        json j{{"state", describe(opt.state)}};
        json deltas = json::object();
        for (std::size_t k = 0; k < extracted.size(); ++k) {
            j[extracted[k].first] = extracted[k].second;
            deltas[extracted[k].first] =
                extracted[k].second - expectation(state, gell_mann(index[k]));
        }
        j["witness"] = witness;
        deltas["witness"] = witness - direct_witness;
        j["oracle_deltas"] = deltas;
        j["contextual"] = is_contextual(witness);
        out << j.dump(2) << "\n";
        return;
    }
    if (opt.format == Format::kCsv) {
        out << "quantity,extracted,direct,delta\n";
        for (std::size_t k = 0; k < extracted.size(); ++k) {
            const double direct = expectation(state, gell_mann(index[k]));
            out << extracted[k].first << "," << full(extracted[k].second) << "," << full(direct)
                << "," << full(extracted[k].second - direct) << "\n";
        }
        out << "witness," << full(witness) << "," << full(direct_witness) << ","
            << full(witness - direct_witness) << "\n";
        return;
    }
    out << "state      " << describe(opt.state) << "\n";
    for (std::size_t k = 0; k < extracted.size(); ++k) {
        const double direct = expectation(state, gell_mann(index[k]));
        out << "<L" << index[k] << ">       " << fixed(extracted[k].second, 6)
            << "   delta " << std::scientific << std::setprecision(2)
            << extracted[k].second - direct << std::defaultfloat << "\n";
    }
    out << "witness    " << fixed(witness, 6) << "   delta " << std::scientific
        << std::setprecision(2) << witness - direct_witness << std::defaultfloat << "\n"
        << "contextual " << flag(is_contextual(witness)) << "\n";
}

struct SingleShotOptions {
    double theta_p_deg = 0.0;
    double theta_q_deg = 0.0;
    Format format = Format::kTable;
};

inline void cmd_single_shot(const SingleShotOptions &opt, std::ostream &out) {
    check_angle_deg(opt.theta_p_deg);
    check_angle_deg(opt.theta_q_deg);
    const double tp = degrees_to_radians(opt.theta_p_deg);
    const double tq = degrees_to_radians(opt.theta_q_deg);
    const auto scaled = nmr::diagonal_populations(tp, tq, nmr::DiagonalConvention::kScaled);
    const auto unscaled = nmr::diagonal_populations(tp, tq, nmr::DiagonalConvention::kUnscaled);
    // The scaled convention is the state actually produced by the sequence.
    const double s_scaled = single_shot_score(nmr::prepare_diagonal(tp, tq, nmr::SpinSystem{}));
    const double s_unscaled =
        single_shot_score(DeviationMatrix::diagonal(unscaled.p, unscaled.q, unscaled.r));

    if (opt.format == Format::kJson) {
        auto pqr = [](const nmr::DiagonalPopulations &d) {
            return json{{"p", d.p}, {"q", d.q}, {"r", d.r}};
        };
        json j{{"theta_p_deg", opt.theta_p_deg},
               {"theta_q_deg", opt.theta_q_deg},
               {"scaled", pqr(scaled)},
               {"unscaled", pqr(unscaled)},
               {"score_scaled", s_scaled},
               {"score_unscaled", s_unscaled},
               {"contextual", s_scaled < kContextualThreshold}};
        out << j.dump(2) << "\n";
        return;
    }
    if (opt.format == Format::kCsv) {
        out << "convention,p,q,r,score,contextual\n"
            << "scaled," << full(scaled.p) << "," << full(scaled.q) << "," << full(scaled.r) << ","
            << full(s_scaled) << "," << flag(s_scaled < kContextualThreshold) << "\n"
            << "unscaled," << full(unscaled.p) << "," << full(unscaled.q) << ","
            << full(unscaled.r) << "," << full(s_unscaled) << ","
            << flag(s_unscaled < kContextualThreshold) << "\n";
        return;
    }
    out << "theta_p " << fixed(opt.theta_p_deg, 1) << " deg, theta_q " << fixed(opt.theta_q_deg, 1)
        << " deg\n"
        << "convention      p      q      r      S\n"
        << "scaled     " << std::setw(6) << fixed(scaled.p, 2) << " " << std::setw(6)
        << fixed(scaled.q, 2) << " " << std::setw(6) << fixed(scaled.r, 2) << " " << std::setw(6)
        << fixed(s_scaled, 2) << "\n"
        << "unscaled   " << std::setw(6) << fixed(unscaled.p, 2) << " " << std::setw(6)
        << fixed(unscaled.q, 2) << " " << std::setw(6) << fixed(unscaled.r, 2) << " "
        << std::setw(6) << fixed(s_unscaled, 2) << "\n"
        << "contextual " << flag(s_scaled < kContextualThreshold) << "\n";
}

inline void cmd_table1(Format format, std::ostream &out) {
    const auto rows = table1_reproduction();
    if (format == Format::kJson) {
        json arr = json::array();
        for (const auto &r : rows) {
            arr.push_back({{"no", r.entry.number},
                           {"theta_p_deg", r.entry.theta_p_deg},
                           {"theta_q_deg", r.entry.theta_q_deg},
                           {"p", r.entry.p},
                           {"q", r.entry.q},
                           {"r", r.entry.r},
                           {"i_th", r.entry.i_th},
                           {"i_exp", r.entry.i_exp},
                           {"score_columns", r.score_from_columns},
                           {"delta_columns", r.delta_columns()},
                           {"p_scaled", r.scaled.p},
                           {"score_scaled", r.score_scaled},
                           {"delta_scaled", r.delta_scaled()},
                           {"p_unscaled", r.unscaled.p},
                           {"score_unscaled", r.score_unscaled},
                           {"delta_unscaled", r.delta_unscaled()}});
        }
        out << arr.dump(2) << "\n";
        return;
    }
    if (format == Format::kCsv) {
        out << "no,theta_p_deg,theta_q_deg,p,q,r,i_th,i_exp,score_columns,delta_columns,"
               "p_scaled,score_scaled,delta_scaled,p_unscaled,score_unscaled,delta_unscaled\n";
        for (const auto &r : rows) {
            out << r.entry.number << "," << full(r.entry.theta_p_deg) << ","
                << full(r.entry.theta_q_deg) << "," << full(r.entry.p) << "," << full(r.entry.q)
                << "," << full(r.entry.r) << "," << full(r.entry.i_th) << ","
                << full(r.entry.i_exp) << "," << full(r.score_from_columns) << ","
                << full(r.delta_columns()) << "," << full(r.scaled.p) << ","
                << full(r.score_scaled) << "," << full(r.delta_scaled()) << ","
                << full(r.unscaled.p) << "," << full(r.score_unscaled) << ","
                << full(r.delta_unscaled()) << "\n";
        }
        return;
    }
    out << "no  theta_p  theta_q      p      q      r   I_Th  S(cols)  S(scaled)  S(unscaled)\n";
    for (const auto &r : rows) {
        out << std::setw(2) << r.entry.number << "  " << std::setw(7) << fixed(r.entry.theta_p_deg, 1)
            << "  " << std::setw(7) << fixed(r.entry.theta_q_deg, 1) << "  " << std::setw(5)
            << fixed(r.entry.p, 2) << "  " << std::setw(5) << fixed(r.entry.q, 2) << "  "
            << std::setw(5) << fixed(r.entry.r, 2) << "  " << std::setw(5) << fixed(r.entry.i_th, 2)
            << "  " << std::setw(7) << fixed(r.score_from_columns, 2) << "  " << std::setw(9)
            << fixed(r.score_scaled, 2) << "  " << std::setw(11) << fixed(r.score_unscaled, 2)
            << "\n";
    }
}

struct RunConfig {
    double t1 = 1.0;
    double t2 = 1.0;
    double t_max = 5.0;
    int steps = 101;
    std::uint64_t seed = 0; ///< used when the state is a seeded random state
    Format format = Format::kCsv;

    void validate() const {
        if (steps < 2) {
            throw UsageError("steps must be >= 2");
        }
        if (!(t_max > 0.0)) {
            throw UsageError("t_max must be positive");
        }
        if (!(t1 > 0.0) || !(t2 > 0.0)) {
            throw UsageError("t1 and t2 must be positive");
        }
    }
};

struct EvolutionPoint {
    double time_s = 0.0;
    double witness = 0.0;
    bool contextual = false;
};

/// Witness of `state` relaxing toward equilibrium, sampled on a uniform grid.
inline std::vector<EvolutionPoint> evolve(const QutritState &state, const RunConfig &cfg,
                                          const nmr::SpinSystem &sys = {}) {
    cfg.validate();
    const WitnessSet w = standard_witness_set();
    std::vector<EvolutionPoint> points;
    points.reserve(static_cast<std::size_t>(cfg.steps));
    for (int k = 0; k < cfg.steps; ++k) {
        const double t = cfg.t_max * k / (cfg.steps - 1);
        const QutritState s = nmr::apply_relaxation(state, {t, cfg.t1, cfg.t2}, sys);
        const double v = evaluate_witness(s, w);
        points.push_back({t, v, is_contextual(v)});
    }
    return points;
}

inline void cmd_evolve(const StateSpec &spec, const RunConfig &cfg, std::ostream &out) {
    cfg.validate();
    const nmr::SpinSystem sys;
    const auto points = evolve(resolve_state(spec, sys), cfg, sys);
    if (cfg.format == Format::kJson) {
        json arr = json::array();
        for (const auto &p : points) {
            arr.push_back({{"time_s", p.time_s}, {"witness", p.witness}, {"contextual", p.contextual}});
        }
        out << arr.dump(2) << "\n";
        return;
    }
    out << "time_s,witness,contextual\n";
    for (const auto &p : points) {
        out << full(p.time_s) << "," << full(p.witness) << "," << flag(p.contextual) << "\n";
    }
}

inline json audit_to_json(const ExpansionAudit &audit) {
    auto list = [](const std::vector<TermMismatch> &ms) {
        json arr = json::array();
        for (const auto &m : ms) {
            arr.push_back({{"label", m.label},
                           {"term", m.term == 0 ? std::string("I") : "L" + std::to_string(m.term)},
                           {"printed", m.printed},
                           {"computed", m.computed},
                           {"delta", m.delta()}});
        }
        return arr;
    };
    return {{"observables_checked", audit.observables_checked},
            {"products_checked", audit.products_checked},
            {"observable_mismatches", list(audit.observable_mismatches)},
            {"product_mismatches", list(audit.product_mismatches)},
            {"budget_mismatches", list(audit.budget_mismatches)}};
}

inline void cmd_verify(Format format, std::ostream &out) {
    const WitnessSet w = standard_witness_set();
    const ExpansionAudit audit = verify_printed_expansions(w);
    const NoncontextualBounds b = noncontextual_bounds_bruteforce(w);
    const ScaleFit fit = fit_correlation_scale(w, 200, 1);
    const double identity_residual = (w.derived_witness() - w.witness()).cwiseAbs().maxCoeff();

    if (format == Format::kJson) {
        json j = audit_to_json(audit);
        j["bounds"] = {{"projector_max", b.projector_max},
                       {"dichotomous_min", b.dichotomous_min},
                       {"correlation_min", b.correlation_min},
                       {"correlation_min_unrestricted", b.correlation_min_unrestricted}};
        j["correlation_fit"] = {
            {"offset", fit.offset}, {"scale", fit.scale}, {"max_residual", fit.max_residual}};
        j["witness_identity_residual"] = identity_residual;
        out << j.dump(2) << "\n";
        return;
    }
    if (format == Format::kCsv) {
        out << "group,label,term,printed,computed,delta\n";
        auto rows = [&out](const char *group, const std::vector<TermMismatch> &ms) {
            for (const auto &m : ms) {
                out << group << "," << m.label << ","
                    << (m.term == 0 ? std::string("I") : "L" + std::to_string(m.term)) << ","
                    << full(m.printed) << "," << full(m.computed) << "," << full(m.delta())
                    << "\n";
            }
        };
        rows("observable", audit.observable_mismatches);
        rows("product", audit.product_mismatches);
        rows("budget", audit.budget_mismatches);
        return;
    }
    out << "noncontextual bounds (2^9 assignments)\n"
        << "  projector max    " << b.projector_max << "\n"
        << "  dichotomous min  " << b.dichotomous_min << "\n"
        << "  correlation min  " << b.correlation_min << "   (" << b.correlation_min_unrestricted
        << " without exclusivity)\n"
        << "W - 12(sum A - 3I) max |entry|  " << std::scientific << std::setprecision(2)
        << identity_residual << std::defaultfloat << "\n"
        << "correlation = " << fixed(fit.offset, 6) << " + " << fixed(fit.scale, 6)
        << " * witness   (max residual " << std::scientific << std::setprecision(2)
        << fit.max_residual << std::defaultfloat << ")\n"
        << "expansion audit: " << audit.observables_checked << " observables, "
        << audit.products_checked << " products\n";
    auto print = [&out](const char *group, const std::vector<TermMismatch> &ms) {
        if (ms.empty()) {
            out << "  " << group << ": no mismatches\n";
        }
        for (const auto &m : ms) {
            out << "  " << group << " " << m.label << " "
                << (m.term == 0 ? std::string("I") : "L" + std::to_string(m.term)) << ": printed "
                << fixed(m.printed, 6) << " computed " << fixed(m.computed, 6) << "\n";
        }
    };
    print("observable", audit.observable_mismatches);
    print("product", audit.product_mismatches);
    print("budget", audit.budget_mismatches);
}

} // namespace qutrit_ks::cli
