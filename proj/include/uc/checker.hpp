#pragma once

#include "uc/types.hpp"

namespace uc {

// Pure checkers for constraints (2)-(13). They evaluate the arithmetic directly
// on instance data and never touch the optimization machinery, so they serve as
// an independent oracle for every solver path.

/// Checks the commitment logic (2), min-up (3), min-down (4), dependent-mode
/// rules (5)-(6) and the single-base-mode rule (7), including initial-state
/// credits. Throws std::invalid_argument on dimension mismatches.
std::vector<Violation> check_schedule_feasibility(const Schedule& schedule,
                                                  const Generator& generator,
                                                  int horizon);

/// Checks ramping (8)-(9), startup/shutdown ramping (10)-(11), power balance
/// (12) with split slacks, piecewise weights (13) with the p-lambda linkage,
/// the reserve requirement and nonnegativity, all within tol.
std::vector<Violation> check_second_stage(const SecondStageSolution& y,
                                          const std::vector<Schedule>& schedules,
                                          const Instance& instance,
                                          const Scenario& scenario,
                                          double tol = 1e-6);

/// First-stage plus probability-weighted second-stage cost. Summation order is
/// fixed (generators, modes, periods, segments; scenarios in id order) so the
/// result is bit-stable.
double evaluate_objective(const std::vector<Schedule>& schedules,
                          const std::vector<SecondStageSolution>& second_stage,
                          const Instance& instance);

/// First-stage cost of one schedule: sum of c_1 * min_power * u * period_hours.
double schedule_cost(const Schedule& schedule, const Generator& generator,
                     const Instance& instance);

/// Second-stage cost of one scenario solution (unweighted by probability).
double second_stage_cost(const SecondStageSolution& y, const Instance& instance);

}  // namespace uc
