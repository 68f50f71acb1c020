#include "uc/checker.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace uc {

namespace {

std::string where(const char* what, ModeId m, TimeStep t) {
  std::ostringstream os;
  os << what << " at mode " << m << ", t=" << t;
  return os.str();
}

void push(std::vector<Violation>& out, ConstraintId c, GeneratorId g, ModeId m,
          TimeStep t, double amount, std::string msg) {
  out.push_back(Violation{c, g, m, t, amount, std::move(msg)});
}

}  // namespace

std::vector<Violation> check_schedule_feasibility(const Schedule& schedule,
                                                  const Generator& gen,
                                                  int horizon) {
  const int M = static_cast<int>(gen.modes.size());
  auto dims_ok = [&](const std::vector<std::vector<int>>& a) {
    if (static_cast<int>(a.size()) != M) return false;
    for (const auto& row : a)
      if (static_cast<int>(row.size()) != horizon) return false;
    return true;
  };
  if (!dims_ok(schedule.u) || !dims_ok(schedule.v) || !dims_ok(schedule.w))
    throw std::invalid_argument("schedule dimensions do not match generator modes x horizon");

  std::vector<Violation> out;
  const GeneratorId g = gen.id;

  for (int m = 0; m < M; ++m) {
    const Mode& mode = gen.modes[m];
    const auto& u = schedule.u[m];
    const auto& v = schedule.v[m];
    const auto& w = schedule.w[m];

    for (int t = 0; t < horizon; ++t) {
      for (const auto* arr : {&u, &v, &w}) {
        int val = (*arr)[t];
        if (val != 0 && val != 1)
          push(out, ConstraintId::Binary, g, m, t, std::abs(val),
               where("non-binary entry", m, t));
      }
      if (v[t] + w[t] > 1)
        push(out, ConstraintId::StartupShutdownOverlap, g, m, t, 1,
             where("startup and shutdown in the same period", m, t));
    }

    // (2) u_t = u_{t-1} + v_t - w_t
    for (int t = 0; t < horizon; ++t) {
      int prev = (t == 0) ? initial_u(gen, m) : u[t - 1];
      int lhs = u[t];
      int rhs = prev + v[t] - w[t];
      if (lhs != rhs)
        push(out, ConstraintId::CommitmentLogic, g, m, t, std::abs(lhs - rhs),
             where("commitment logic u != u_prev + v - w", m, t));
    }

    // (3) u_t >= sum_{i=t-Tup+1..t} v_i, window truncated at the horizon start
    for (int t = 0; t < horizon; ++t) {
      int lo = std::max(0, t - mode.min_up + 1);
      int sum = 0;
      for (int i = lo; i <= t; ++i) sum += v[i];
      if (u[t] < sum)
        push(out, ConstraintId::MinUp, g, m, t, sum - u[t],
             where("min-up window violated", m, t));
    }

    // (4) u_t <= 1 - sum_{i=t-Tdn+1..t} w_i
    for (int t = 0; t < horizon; ++t) {
      int lo = std::max(0, t - mode.min_down + 1);
      int sum = 0;
      for (int i = lo; i <= t; ++i) sum += w[i];
      if (u[t] > 1 - sum)
        push(out, ConstraintId::MinDown, g, m, t, u[t] - (1 - sum),
             where("min-down window violated", m, t));
    }

    // initial-state credits
    int on = forced_on_periods(gen, m);
    for (int t = 0; t < std::min(on, horizon); ++t)
      if (u[t] != 1)
        push(out, ConstraintId::MinUp, g, m, t, 1,
             where("unfinished initial min-up requires u=1", m, t));
    int off = forced_off_periods(gen, m);
    for (int t = 0; t < std::min(off, horizon); ++t)
      if (u[t] != 0)
        push(out, ConstraintId::MinDown, g, m, t, 1,
             where("unfinished initial min-down requires u=0", m, t));
  }

  // (5)-(6) dependent mode rules
  for (int m = 0; m < M; ++m) {
    const Mode& mode = gen.modes[m];
    if (!mode.supporting_mode.has_value()) continue;
    int s = *mode.supporting_mode;
    for (int t = 0; t < horizon; ++t) {
      if (schedule.v[m][t] > schedule.u[s][t])
        push(out, ConstraintId::DependentStartup, g, m, t, 1,
             where("dependent startup without supporting mode online", m, t));
      if (schedule.u[m][t] > 1 - schedule.v[s][t])
        push(out, ConstraintId::DependentCommit, g, m, t, 1,
             where("dependent mode online while supporting mode starts", m, t));
    }
  }

  // (7) at most one base mode online
  std::vector<ModeId> bases = gen.base_modes();
  if (bases.size() > 1) {
    for (int t = 0; t < horizon; ++t) {
      int sum = 0;
      for (ModeId b : bases) sum += schedule.u[b][t];
      if (sum > 1)
        push(out, ConstraintId::SingleBaseMode, g, -1, t, sum - 1,
             where("more than one base mode online", -1, t));
    }
  }

  return out;
}

std::vector<Violation> check_second_stage(const SecondStageSolution& y,
                                          const std::vector<Schedule>& schedules,
                                          const Instance& instance,
                                          const Scenario& scenario,
                                          double tol) {
  const int T = instance.horizon;
  const int G = instance.n_generators();
  if (static_cast<int>(schedules.size()) != G ||
      static_cast<int>(y.p.size()) != G || static_cast<int>(y.r.size()) != G ||
      static_cast<int>(y.lambda.size()) != G ||
      static_cast<int>(y.shortage.size()) != T ||
      static_cast<int>(y.surplus.size()) != T ||
      static_cast<int>(scenario.demand.size()) != T)
    throw std::invalid_argument("second-stage solution dimensions do not match instance");

  std::vector<Violation> out;

  for (int g = 0; g < G; ++g) {
    const Generator& gen = instance.generators[g];
    const int M = static_cast<int>(gen.modes.size());
    if (static_cast<int>(y.p[g].size()) != M || static_cast<int>(y.lambda[g].size()) != M)
      throw std::invalid_argument("second-stage solution mode dimensions mismatch");

    for (int m = 0; m < M; ++m) {
      const Mode& mode = gen.modes[m];
      const auto& u = schedules[g].u[m];
      const auto& v = schedules[g].v[m];
      const auto& w = schedules[g].w[m];
      const auto& p = y.p[g][m];
      const auto& r = y.r[g][m];

      double p_prev = initial_marginal_power(gen, m);
      for (int t = 0; t < T; ++t) {
        if (p[t] < -tol)
          push(out, ConstraintId::Nonnegative, g, m, t, -p[t], where("p < 0", m, t));
        if (r[t] < -tol)
          push(out, ConstraintId::Nonnegative, g, m, t, -r[t], where("r < 0", m, t));

        // (8) p_t + r_t - p_{t-1} <= ramp_up
        double lhs8 = p[t] + r[t] - p_prev;
        if (lhs8 > mode.ramp_up + tol)
          push(out, ConstraintId::RampUp, g, m, t, lhs8 - mode.ramp_up,
               where("ramp-up limit exceeded", m, t));

        // (9) p_{t-1} - p_t <= ramp_down
        double lhs9 = p_prev - p[t];
        if (lhs9 > mode.ramp_down + tol)
          push(out, ConstraintId::RampDown, g, m, t, lhs9 - mode.ramp_down,
               where("ramp-down limit exceeded", m, t));

        double cap = mode.max_power[t] - mode.min_power[t];

        // (10) p + r - cap*u + max(pmax - ramp_startup, 0)*v <= 0
        double su = std::max(mode.max_power[t] - mode.ramp_startup, 0.0);
        double lhs10 = p[t] + r[t] - cap * u[t] + su * v[t];
        if (lhs10 > tol)
          push(out, ConstraintId::StartupRamp, g, m, t, lhs10,
               where("capacity/startup-ramp limit exceeded", m, t));

        // (11) p + r - cap*u + max(pmax - ramp_shutdown, 0)*w_{t+1} <= 0
        double sd = std::max(mode.max_power[t] - mode.ramp_shutdown, 0.0);
        double w_next = (t + 1 < T) ? w[t + 1] : 0.0;
        double lhs11 = p[t] + r[t] - cap * u[t] + sd * w_next;
        if (lhs11 > tol)
          push(out, ConstraintId::ShutdownRamp, g, m, t, lhs11,
               where("capacity/shutdown-ramp limit exceeded", m, t));

        // (13) sum_l lambda = u, lambda >= 0
        const auto& lam = y.lambda[g][m][t];
        if (static_cast<int>(lam.size()) != mode.n_segments())
          throw std::invalid_argument("lambda segment dimension mismatch");
        double lam_sum = 0.0;
        for (double lv : lam) {
          if (lv < -tol)
            push(out, ConstraintId::Nonnegative, g, m, t, -lv,
                 where("lambda < 0", m, t));
          lam_sum += lv;
        }
        if (std::abs(lam_sum - u[t]) > tol)
          push(out, ConstraintId::PiecewiseWeights, g, m, t, std::abs(lam_sum - u[t]),
               where("sum of lambda != u", m, t));

        // linkage p = sum_l lambda_l * (P_l - P_1)
        double linked = 0.0;
        for (int l = 0; l < mode.n_segments(); ++l)
          linked += lam[l] * (mode.cost_breakpoints[l].power - mode.cost_breakpoints[0].power);
        if (std::abs(linked - p[t]) > tol)
          push(out, ConstraintId::PiecewiseLink, g, m, t, std::abs(linked - p[t]),
               where("p inconsistent with lambda breakpoints", m, t));

        p_prev = p[t];
      }
    }
  }

  // (12) power balance with split slacks, and the reserve requirement
  for (int t = 0; t < T; ++t) {
    if (y.shortage[t] < -tol)
      push(out, ConstraintId::Nonnegative, -1, -1, t, -y.shortage[t], "shortage < 0");
    if (y.surplus[t] < -tol)
      push(out, ConstraintId::Nonnegative, -1, -1, t, -y.surplus[t], "surplus < 0");

    double total = 0.0;
    double reserve = 0.0;
    for (int g = 0; g < G; ++g) {
      const Generator& gen = instance.generators[g];
      for (int m = 0; m < static_cast<int>(gen.modes.size()); ++m) {
        total += gen.modes[m].min_power[t] * schedules[g].u[m][t] + y.p[g][m][t];
        reserve += y.r[g][m][t];
      }
    }
    double imbalance = total + y.shortage[t] - y.surplus[t] - scenario.demand[t];
    if (std::abs(imbalance) > tol)
      push(out, ConstraintId::PowerBalance, -1, -1, t, std::abs(imbalance),
           "power balance violated at t=" + std::to_string(t));

    double req = instance.reserve_at(t);
    if (reserve < req - tol)
      push(out, ConstraintId::Reserve, -1, -1, t, req - reserve,
           "reserve requirement violated at t=" + std::to_string(t));
  }

  return out;
}

double schedule_cost(const Schedule& schedule, const Generator& gen,
                     const Instance& instance) {
  double cost = 0.0;
  for (int m = 0; m < static_cast<int>(gen.modes.size()); ++m) {
    const Mode& mode = gen.modes[m];
    double c1 = mode.cost_at_min();
    for (int t = 0; t < instance.horizon; ++t)
      cost += c1 * mode.min_power[t] * schedule.u[m][t] * instance.period_hours;
  }
  return cost;
}

double second_stage_cost(const SecondStageSolution& y, const Instance& instance) {
  double cost = 0.0;
  for (int g = 0; g < instance.n_generators(); ++g) {
    const Generator& gen = instance.generators[g];
    for (int m = 0; m < static_cast<int>(gen.modes.size()); ++m) {
      const Mode& mode = gen.modes[m];
      double c1 = mode.cost_at_min();
      for (int t = 0; t < instance.horizon; ++t)
        for (int l = 0; l < mode.n_segments(); ++l)
          cost += (mode.cost_breakpoints[l].cost - c1) * y.lambda[g][m][t][l] *
                  instance.period_hours;
    }
  }
  for (int t = 0; t < instance.horizon; ++t)
    cost += instance.penalty[t] * (y.shortage[t] + y.surplus[t]) * instance.period_hours;
  return cost;
}

double evaluate_objective(const std::vector<Schedule>& schedules,
                          const std::vector<SecondStageSolution>& second_stage,
                          const Instance& instance) {
  double cost = 0.0;
  for (int g = 0; g < instance.n_generators(); ++g)
    cost += schedule_cost(schedules[g], instance.generators[g], instance);
  for (int s = 0; s < instance.n_scenarios(); ++s)
    cost += instance.scenarios[s].probability *
            second_stage_cost(second_stage[s], instance);
  return cost;
}

}  // namespace uc
