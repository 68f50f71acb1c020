#include "uc/types.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace uc {

std::vector<ModeId> Generator::base_modes() const {
  std::vector<ModeId> out;
  for (const Mode& m : modes)
    if (m.is_base()) out.push_back(m.id);
  return out;
}

bool Instance::has_reserve() const {
  for (double r : reserve_requirement)
    if (r > 0.0) return true;
  return false;
}

Schedule Schedule::zeros(GeneratorId g, int n_modes, int horizon) {
  Schedule s;
  s.generator = g;
  s.u.assign(n_modes, std::vector<int>(horizon, 0));
  s.v = s.u;
  s.w = s.u;
  return s;
}

SecondStageSolution SecondStageSolution::zeros(const Instance& instance, ScenarioId sc) {
  SecondStageSolution y;
  y.scenario = sc;
  y.p.resize(instance.n_generators());
  y.r.resize(instance.n_generators());
  y.lambda.resize(instance.n_generators());
  for (int g = 0; g < instance.n_generators(); ++g) {
    const Generator& gen = instance.generators[g];
    int M = static_cast<int>(gen.modes.size());
    y.p[g].assign(M, std::vector<double>(instance.horizon, 0.0));
    y.r[g] = y.p[g];
    y.lambda[g].resize(M);
    for (int m = 0; m < M; ++m)
      y.lambda[g][m].assign(instance.horizon,
                            std::vector<double>(gen.modes[m].n_segments(), 0.0));
  }
  y.shortage.assign(instance.horizon, 0.0);
  y.surplus.assign(instance.horizon, 0.0);
  return y;
}

const char* constraint_name(ConstraintId id) {
  switch (id) {
    case ConstraintId::CommitmentLogic: return "commitment_logic";
    case ConstraintId::MinUp: return "min_up";
    case ConstraintId::MinDown: return "min_down";
    case ConstraintId::DependentStartup: return "dependent_startup";
    case ConstraintId::DependentCommit: return "dependent_commitment";
    case ConstraintId::SingleBaseMode: return "single_base_mode";
    case ConstraintId::StartupShutdownOverlap: return "startup_shutdown_overlap";
    case ConstraintId::Binary: return "binary";
    case ConstraintId::Structure: return "structure";
    case ConstraintId::RampUp: return "ramp_up";
    case ConstraintId::RampDown: return "ramp_down";
    case ConstraintId::StartupRamp: return "startup_ramp";
    case ConstraintId::ShutdownRamp: return "shutdown_ramp";
    case ConstraintId::PowerBalance: return "power_balance";
    case ConstraintId::PiecewiseWeights: return "piecewise_weights";
    case ConstraintId::PiecewiseLink: return "piecewise_link";
    case ConstraintId::Reserve: return "reserve";
    case ConstraintId::Nonnegative: return "nonnegative";
  }
  return "unknown";
}

int initial_u(const Generator& g, ModeId m) {
  return (g.initial.mode.has_value() && *g.initial.mode == m) ? 1 : 0;
}

double initial_marginal_power(const Generator& g, ModeId m) {
  if (!g.initial.mode.has_value() || *g.initial.mode != m) return 0.0;
  const Mode& mode = g.modes[m];
  double pmin0 = mode.min_power.empty() ? 0.0 : mode.min_power.front();
  return std::max(0.0, g.initial.power - pmin0);
}

int forced_on_periods(const Generator& g, ModeId m) {
  if (initial_u(g, m) != 1) return 0;
  return std::max(0, g.modes[m].min_up - g.initial.periods_in_state);
}

int forced_off_periods(const Generator& g, ModeId m) {
  // A mode is credited with downtime only while the whole unit is offline;
  // after a mode switch the previous mode's exact downtime is unknown and the
  // schema requires instances to encode such cases via periods_in_state.
  if (g.initial.mode.has_value()) return 0;
  return std::max(0, g.modes[m].min_down - g.initial.periods_in_state);
}

namespace {

void check_mode(const Generator& g, const Mode& m, int horizon,
                std::vector<std::string>& errs) {
  std::ostringstream tag;
  tag << "generator " << g.id << " mode " << m.id << ": ";
  auto err = [&](const std::string& msg) { errs.push_back(tag.str() + msg); };

  if (static_cast<int>(m.min_power.size()) != horizon ||
      static_cast<int>(m.max_power.size()) != horizon) {
    err("min_power/max_power length must equal horizon");
    return;
  }
  for (int t = 0; t < horizon; ++t) {
    if (m.min_power[t] < 0) err("min_power < 0 at t=" + std::to_string(t));
    if (m.min_power[t] > m.max_power[t] + 1e-9)
      err("min_power > max_power at t=" + std::to_string(t));
  }
  if (m.min_up < 1) err("min_up must be >= 1");
  if (m.min_down < 1) err("min_down must be >= 1");
  if (m.ramp_up < 0 || m.ramp_down < 0 || m.ramp_startup < 0 || m.ramp_shutdown < 0)
    err("ramp limits must be nonnegative");

  if (m.cost_breakpoints.empty()) {
    err("cost_breakpoints must be nonempty");
    return;
  }
  for (size_t l = 1; l < m.cost_breakpoints.size(); ++l)
    if (m.cost_breakpoints[l].power <= m.cost_breakpoints[l - 1].power + 1e-12)
      err("cost_breakpoints powers must be strictly increasing");
  double pmin = m.min_power.empty() ? 0.0 : m.min_power.front();
  double pmax = m.max_power.empty() ? 0.0 : m.max_power.front();
  if (std::abs(m.cost_breakpoints.front().power - pmin) > 1e-6)
    err("first breakpoint power must equal min_power");
  if (std::abs(m.cost_breakpoints.back().power - pmax) > 1e-6)
    err("last breakpoint power must equal max_power");

  // Startup/shutdown ramps below min_power make Eq. (10)/(11) infeasible for
  // any committed startup/shutdown, destroying complete recourse.
  if (m.ramp_startup < pmin - 1e-9) err("ramp_startup must be >= min_power");
  if (m.ramp_shutdown < pmin - 1e-9) err("ramp_shutdown must be >= min_power");
}

void check_generator(const Generator& g, int horizon, std::vector<std::string>& errs) {
  std::ostringstream tag;
  tag << "generator " << g.id << ": ";
  auto err = [&](const std::string& msg) { errs.push_back(tag.str() + msg); };

  if (g.modes.empty()) {
    err("must have at least one mode");
    return;
  }
  for (size_t m = 0; m < g.modes.size(); ++m)
    if (g.modes[m].id != static_cast<ModeId>(m))
      err("mode ids must be dense 0-based in order");

  bool has_base = false;
  for (const Mode& m : g.modes) {
    if (m.is_base()) has_base = true;
    if (m.supporting_mode.has_value()) {
      ModeId s = *m.supporting_mode;
      if (s < 0 || s >= static_cast<ModeId>(g.modes.size()))
        err("mode " + std::to_string(m.id) + " supporting_mode " + std::to_string(s) +
            " does not resolve");
      else if (s == m.id)
        err("mode " + std::to_string(m.id) + " cannot support itself");
    }
  }
  if (!has_base) err("must have at least one base mode");

  // dependency graph must be acyclic
  int M = static_cast<int>(g.modes.size());
  for (int start = 0; start < M; ++start) {
    int steps = 0;
    ModeId cur = start;
    while (g.modes[cur].supporting_mode.has_value() && steps <= M) {
      cur = *g.modes[cur].supporting_mode;
      if (cur < 0 || cur >= M) break;
      ++steps;
    }
    if (steps > M) {
      err("supporting_mode chain contains a cycle");
      break;
    }
  }

  for (const Mode& m : g.modes) check_mode(g, m, horizon, errs);

  // initial state
  const InitialState& is = g.initial;
  if (is.periods_in_state < 1) err("initial periods_in_state must be >= 1");
  if (is.mode.has_value()) {
    if (*is.mode < 0 || *is.mode >= static_cast<ModeId>(g.modes.size())) {
      err("initial mode does not resolve");
    } else {
      const Mode& m = g.modes[*is.mode];
      if (!m.min_power.empty()) {
        if (is.power < m.min_power.front() - 1e-6 ||
            is.power > m.max_power.front() + 1e-6)
          err("initial power outside the initial mode's limits");
        double marg = std::max(0.0, is.power - m.min_power.front());
        if (marg > m.ramp_down + 1e-9)
          err("initial marginal power exceeds ramp_down; the unit could not shut down");
      }
    }
  } else if (std::abs(is.power) > 1e-9) {
    err("offline unit must have zero initial power");
  }
}

}  // namespace

std::vector<std::string> validate_instance(const Instance& instance) {
  std::vector<std::string> errs;
  if (instance.horizon < 1) errs.push_back("horizon must be >= 1");
  if (instance.period_hours <= 0) errs.push_back("period_hours must be > 0");
  if (static_cast<int>(instance.penalty.size()) != instance.horizon)
    errs.push_back("penalty length must equal horizon");
  for (double c : instance.penalty)
    if (c <= 0) {
      errs.push_back("penalty must be > 0");
      break;
    }
  if (!instance.reserve_requirement.empty()) {
    if (static_cast<int>(instance.reserve_requirement.size()) != instance.horizon)
      errs.push_back("reserve_requirement length must equal horizon");
    for (double rr : instance.reserve_requirement)
      if (rr < 0) {
        errs.push_back("reserve_requirement must be nonnegative");
        break;
      }
  }

  for (size_t g = 0; g < instance.generators.size(); ++g) {
    if (instance.generators[g].id != static_cast<GeneratorId>(g))
      errs.push_back("generator ids must be dense 0-based in order");
    check_generator(instance.generators[g], instance.horizon, errs);
  }

  if (instance.scenarios.empty()) errs.push_back("at least one scenario required");
  double prob_sum = 0.0;
  for (size_t s = 0; s < instance.scenarios.size(); ++s) {
    const Scenario& sc = instance.scenarios[s];
    if (sc.id != static_cast<ScenarioId>(s))
      errs.push_back("scenario ids must be dense 0-based in order");
    if (static_cast<int>(sc.demand.size()) != instance.horizon)
      errs.push_back("scenario " + std::to_string(s) + ": demand length must equal horizon");
    for (double d : sc.demand)
      if (d < 0) {
        errs.push_back("scenario " + std::to_string(s) + ": demand must be nonnegative");
        break;
      }
    if (sc.probability < 0 || sc.probability > 1 + 1e-12)
      errs.push_back("scenario " + std::to_string(s) + ": probability outside [0,1]");
    prob_sum += sc.probability;
  }
  if (!instance.scenarios.empty() && std::abs(prob_sum - 1.0) > 1e-9)
    errs.push_back("scenario probabilities must sum to 1 (got " +
                   std::to_string(prob_sum) + ")");
  return errs;
}

void require_valid(const Instance& instance) {
  std::vector<std::string> errs = validate_instance(instance);
  if (errs.empty()) return;
  std::ostringstream os;
  os << "invalid instance:";
  for (const std::string& e : errs) os << "\n  - " << e;
  throw std::invalid_argument(os.str());
}

}  // namespace uc
