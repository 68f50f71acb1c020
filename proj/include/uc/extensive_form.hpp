#pragma once

#include "uc/first_stage.hpp"
#include "uc/model.hpp"
#include "uc/second_stage.hpp"
#include "uc/trace.hpp"
#include "uc/types.hpp"

namespace uc {

/// Deterministic-equivalent SUC MILP: one copy of the first-stage binaries,
/// per-scenario copies of the recourse block, probability-weighted objective.
struct ExtensiveFormModel {
  Model model;
  FirstStageMap fsm;
  SecondStageVars ssv;
  std::vector<int> scenario_offset;  // base variable index of each scenario's y block

  int x_index(int coord) const { return coord; }          // x comes first
  int y_index(int s, int local) const { return scenario_offset[s] + local; }
};

ExtensiveFormModel build_extensive_form(const Instance& instance, bool relax_integrality);

struct BbParams {
  double time_limit = kInf;
  double rel_gap = 1e-6;
  const std::vector<Schedule>* warm_start = nullptr;
};

/// Branch-and-bound baseline on the extensive form.
SolveResult solve_bb(const Instance& instance, const BbParams& params = {});

/// Decodes the primal vector of an extensive-form solve into schedules and
/// per-scenario second-stage solutions.
UcSolution decode_extensive(const ExtensiveFormModel& ef, const Instance& instance,
                            const std::vector<double>& x);

/// Deterministic UC on the scenario holding the highest single-period load
/// (ties broken toward the lowest scenario id). Used as warm start and initial
/// core point.
std::vector<Schedule> solve_deterministic_peak(const Instance& instance,
                                               double rel_gap = 1e-4,
                                               double time_limit = kInf);

/// The scenario index solve_deterministic_peak picks.
ScenarioId peak_scenario(const Instance& instance);

}  // namespace uc
