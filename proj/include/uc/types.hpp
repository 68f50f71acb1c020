#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uc {

// Identifiers are dense and 0-based throughout.
using GeneratorId = int;
using ModeId = int;
using ScenarioId = int;
using TimeStep = int;

/// One point of a mode's piecewise-linear dispatch curve.
/// power is total output in MW, cost the curve value in $/MWh at that point.
struct CostBreakpoint {
  double power = 0.0;
  double cost = 0.0;
};

/// Operating configuration of a generator. Conventional units have one mode;
/// combined-cycle units have several, linked through supporting_mode.
struct Mode {
  ModeId id = 0;
  std::vector<double> min_power;  // MW per period (size = horizon)
  std::vector<double> max_power;  // MW per period
  int min_up = 1;                 // periods
  int min_down = 1;               // periods
  double ramp_up = 0.0;           // MW per period
  double ramp_down = 0.0;
  double ramp_startup = 0.0;
  double ramp_shutdown = 0.0;
  // Strictly increasing in power; first point sits at min_power, last at max_power.
  std::vector<CostBreakpoint> cost_breakpoints;
  // A base mode has no supporting mode; a dependent mode starts only while its
  // supporting mode is committed.
  std::optional<ModeId> supporting_mode;

  bool is_base() const { return !supporting_mode.has_value(); }
  int n_segments() const { return static_cast<int>(cost_breakpoints.size()); }
  double cost_at_min() const { return cost_breakpoints.front().cost; }  // c_1
};

/// State of the unit immediately before the first period.
struct InitialState {
  std::optional<ModeId> mode;  // nullopt = offline
  int periods_in_state = 1;    // how long the unit has been in that state
  double power = 0.0;          // total output at t = 0 (0 when offline)
};

struct Generator {
  GeneratorId id = 0;
  std::string name;
  std::vector<Mode> modes;
  InitialState initial;

  bool is_combined_cycle() const { return modes.size() > 1; }
  std::vector<ModeId> base_modes() const;
};

struct Scenario {
  ScenarioId id = 0;
  std::vector<double> demand;  // MW per period
  double probability = 1.0;
};

struct Instance {
  int horizon = 0;
  double period_hours = 1.0;
  std::vector<double> penalty;              // $/MWh per period
  std::vector<double> reserve_requirement;  // MW per period; empty = no requirement
  std::vector<Generator> generators;
  std::vector<Scenario> scenarios;

  int n_generators() const { return static_cast<int>(generators.size()); }
  int n_scenarios() const { return static_cast<int>(scenarios.size()); }
  double reserve_at(TimeStep t) const {
    return reserve_requirement.empty() ? 0.0 : reserve_requirement[t];
  }
  bool has_reserve() const;
};

/// One generator's commitment trajectory: an extreme point of its scheduling set.
/// Arrays are mode-major, each of length horizon, values in {0,1}.
struct Schedule {
  GeneratorId generator = 0;
  std::vector<std::vector<int>> u, v, w;

  static Schedule zeros(GeneratorId g, int n_modes, int horizon);
};

/// Continuous recourse for one scenario. p is marginal dispatch above min_power.
struct SecondStageSolution {
  ScenarioId scenario = 0;
  std::vector<std::vector<std::vector<double>>> p;  // [g][m][t]
  std::vector<std::vector<std::vector<double>>> r;  // [g][m][t]
  std::vector<std::vector<std::vector<std::vector<double>>>> lambda;  // [g][m][t][l]
  std::vector<double> shortage;  // delta+ per period
  std::vector<double> surplus;   // delta- per period

  static SecondStageSolution zeros(const Instance& instance, ScenarioId s);
};

enum class ConstraintId {
  CommitmentLogic,   // Eq. (2)
  MinUp,             // Eq. (3)
  MinDown,           // Eq. (4)
  DependentStartup,  // Eq. (5)
  DependentCommit,   // Eq. (6)
  SingleBaseMode,    // Eq. (7)
  StartupShutdownOverlap,
  Binary,
  Structure,
  RampUp,        // Eq. (8)
  RampDown,      // Eq. (9)
  StartupRamp,   // Eq. (10)
  ShutdownRamp,  // Eq. (11)
  PowerBalance,  // Eq. (12)
  PiecewiseWeights,  // Eq. (13)
  PiecewiseLink,
  Reserve,
  Nonnegative,
};

const char* constraint_name(ConstraintId id);

struct Violation {
  ConstraintId constraint;
  GeneratorId generator = -1;
  ModeId mode = -1;
  TimeStep period = -1;
  double amount = 0.0;  // magnitude of the violation
  std::string message;
};

// ---- initial-state semantics (shared by checker and model builders) ----

/// u_{m,0}: 1 iff the unit enters the horizon committed in mode m.
int initial_u(const Generator& g, ModeId m);
/// Marginal power above min at t=0 for mode m (0 unless initially committed in m).
double initial_marginal_power(const Generator& g, ModeId m);
/// Leading periods where u_m is pinned to 1 by unfinished min-up time.
int forced_on_periods(const Generator& g, ModeId m);
/// Leading periods where u_m is pinned to 0 by unfinished min-down time.
int forced_off_periods(const Generator& g, ModeId m);

// ---- validation ----

/// Returns a list of human-readable problems; empty means the instance is valid.
std::vector<std::string> validate_instance(const Instance& instance);
/// Throws std::invalid_argument listing every problem found.
void require_valid(const Instance& instance);

}  // namespace uc
