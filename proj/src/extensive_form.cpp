#include "uc/extensive_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uc {

ExtensiveFormModel build_extensive_form(const Instance& instance, bool relax_integrality) {
  require_valid(instance);
  ExtensiveFormModel ef{Model{}, FirstStageMap(instance), SecondStageVars(instance), {}};
  Model& model = ef.model;

  // first-stage variables and scheduling rows
  for (const Generator& gen : instance.generators) {
    int base = add_schedule_vars(model, gen, instance.horizon, !relax_integrality);
    add_schedule_rows(model, gen, instance.horizon, base);
  }
  std::vector<double> c = ef.fsm.first_stage_costs(instance);
  for (int i = 0; i < ef.fsm.n_coords(); ++i)
    if (c[i] != 0.0) model.set_obj(i, c[i]);

  // per-scenario recourse blocks
  SecondStageTemplate tmpl(instance);
  for (int s = 0; s < instance.n_scenarios(); ++s) {
    const Scenario& sc = instance.scenarios[s];
    double rho = sc.probability;
    int base = model.num_vars();
    ef.scenario_offset.push_back(base);
    for (int j = 0; j < tmpl.vars().n_vars(); ++j)
      model.add_var(0.0, kInf, rho * tmpl.costs()[j], false,
                    "s" + std::to_string(s) + ":" + tmpl.vars().name(j));
    for (const LinkingRow& row : tmpl.rows()) {
      std::vector<std::pair<int, double>> coeffs;
      coeffs.reserve(row.w.size() + row.t.size());
      for (const auto& [j, a] : row.w) coeffs.emplace_back(base + j, a);
      for (const auto& [j, a] : row.t) coeffs.emplace_back(j, a);
      model.add_row(row.sense, tmpl.rhs_for(row, sc), std::move(coeffs),
                    "s" + std::to_string(s) + ":" + row.name);
    }
  }
  return ef;
}

UcSolution decode_extensive(const ExtensiveFormModel& ef, const Instance& instance,
                            const std::vector<double>& x) {
  UcSolution out;
  out.schedules = ef.fsm.to_schedules(x, instance);
  for (int s = 0; s < instance.n_scenarios(); ++s) {
    std::vector<double> y(x.begin() + ef.scenario_offset[s],
                          x.begin() + ef.scenario_offset[s] + ef.ssv.n_vars());
    out.second_stage.push_back(ef.ssv.decode(y, instance, s));
  }
  out.valid = true;
  return out;
}

SolveResult solve_bb(const Instance& instance, const BbParams& params) {
  SolveResult res;
  res.report.algorithm = "bb";
  res.report.n_scenarios = instance.n_scenarios();

  ExtensiveFormModel ef = build_extensive_form(instance, false);

  MipOptions opt;
  opt.time_limit = params.time_limit;
  opt.rel_gap = params.rel_gap;
  std::vector<double> warm;
  if (params.warm_start != nullptr) {
    // complete the warm schedules with their optimal recourse
    warm.assign(ef.model.num_vars(), 0.0);
    std::vector<double> xw = ef.fsm.to_vector(*params.warm_start);
    std::copy(xw.begin(), xw.end(), warm.begin());
    SecondStageTemplate tmpl(instance);
    Model sub;
    for (int j = 0; j < tmpl.vars().n_vars(); ++j)
      sub.add_var(0.0, kInf, tmpl.costs()[j], false);
    for (const LinkingRow& row : tmpl.rows()) {
      std::vector<std::pair<int, double>> coeffs(row.w.begin(), row.w.end());
      sub.add_row(row.sense, 0.0, std::move(coeffs));
    }
    Basis basis;
    bool ok = true;
    for (int s = 0; s < instance.n_scenarios() && ok; ++s) {
      std::vector<double> h = tmpl.shifted_rhs(instance.scenarios[s], xw);
      for (int i = 0; i < tmpl.n_rows(); ++i) sub.set_rhs(i, h[i]);
      LpSolution lp = solve_lp(sub, {}, basis.valid ? &basis : nullptr);
      if (lp.status != SolveStatus::Optimal) {
        ok = false;
        break;
      }
      basis = lp.basis;
      for (int j = 0; j < tmpl.vars().n_vars(); ++j)
        warm[ef.scenario_offset[s] + j] = lp.x[j];
    }
    if (ok) opt.warm_start = &warm;
  }

  MipSolution mip = solve_mip(ef.model, opt);
  res.report.status = status_name(mip.status);
  res.report.iterations = static_cast<int>(mip.nodes);
  res.report.lower_bound = mip.bound;

  for (const MipIncumbentPoint& pt : mip.trace)
    res.trace.add_at(pt.time_s, 0, "incumbent", pt.objective, pt.bound);

  if (mip.has_incumbent) {
    res.solution = decode_extensive(ef, instance, mip.x);
    res.solution.objective = mip.objective;
    res.report.objective = mip.objective;
  }
  res.report.gap = optimality_gap(res.report.objective, res.report.lower_bound);
  res.report.time_total_s = res.trace.elapsed_s();
  res.report.time_outer_s = res.report.time_total_s;
  return res;
}

ScenarioId peak_scenario(const Instance& instance) {
  ScenarioId best = 0;
  double best_peak = -kInf;
  for (const Scenario& sc : instance.scenarios) {
    double peak = *std::max_element(sc.demand.begin(), sc.demand.end());
    if (peak > best_peak + 1e-12) {
      best_peak = peak;
      best = sc.id;
    }
  }
  return best;
}

std::vector<Schedule> solve_deterministic_peak(const Instance& instance, double rel_gap,
                                               double time_limit) {
  ScenarioId s = peak_scenario(instance);
  Instance det = instance;
  det.scenarios = {instance.scenarios[s]};
  det.scenarios[0].id = 0;
  det.scenarios[0].probability = 1.0;

  ExtensiveFormModel ef = build_extensive_form(det, false);
  MipOptions opt;
  opt.rel_gap = rel_gap;
  opt.time_limit = time_limit;
  MipSolution mip = solve_mip(ef.model, opt);
  if (!mip.has_incumbent)
    throw std::runtime_error("deterministic peak problem produced no incumbent");
  return ef.fsm.to_schedules(mip.x, det);
}

}  // namespace uc
