#pragma once

#include "uc/first_stage.hpp"
#include "uc/model.hpp"
#include "uc/types.hpp"

namespace uc {

/// Dense indexing of one scenario's recourse variables y = (p, r, lambda, d+, d-).
class SecondStageVars {
 public:
  explicit SecondStageVars(const Instance& instance);

  int n_vars() const { return n_; }
  int p_index(GeneratorId g, ModeId m, TimeStep t) const {
    return gen_offset_[g] + (0 * n_modes_[g] + m) * T_ + t;
  }
  int r_index(GeneratorId g, ModeId m, TimeStep t) const {
    return gen_offset_[g] + (1 * n_modes_[g] + m) * T_ + t;
  }
  int lambda_index(GeneratorId g, ModeId m, TimeStep t, int l) const {
    return gen_offset_[g] + 2 * n_modes_[g] * T_ + lam_offset_[g][m] + t * n_segs_[g][m] + l;
  }
  int shortage_index(TimeStep t) const { return delta_offset_ + t; }
  int surplus_index(TimeStep t) const { return delta_offset_ + T_ + t; }

  /// Variable names in index order (for model construction and debugging).
  std::string name(int idx) const { return names_[idx]; }

  SecondStageSolution decode(const std::vector<double>& y, const Instance& instance,
                             ScenarioId s) const;

 private:
  int T_ = 0, n_ = 0, delta_offset_ = 0;
  std::vector<int> gen_offset_, n_modes_;
  std::vector<std::vector<int>> lam_offset_, n_segs_;
  std::vector<std::string> names_;
};

/// One linking row in the general form T x + W y {>=,=} h. The demand flag
/// marks balance rows whose rhs is the scenario's d_t.
struct LinkingRow {
  std::vector<std::pair<int, double>> w;  // second-stage entries (y index)
  std::vector<std::pair<int, double>> t;  // first-stage entries (x coordinate)
  double rhs = 0.0;
  Sense sense = Sense::GE;
  int demand_period = -1;  // >= 0: rhs is demand[t] of the scenario
  std::string name;
};

/// Scenario-independent template of the linking constraints (8)-(13), the
/// p-lambda linkage and the optional reserve rows, written so that every row
/// reads  W y >= / = rhs - T x.
class SecondStageTemplate {
 public:
  explicit SecondStageTemplate(const Instance& instance);

  const SecondStageVars& vars() const { return vars_; }
  const std::vector<LinkingRow>& rows() const { return rows_; }
  /// Unweighted second-stage cost vector q over y.
  const std::vector<double>& costs() const { return q_; }
  int n_rows() const { return static_cast<int>(rows_.size()); }

  double rhs_for(const LinkingRow& row, const Scenario& sc) const {
    return row.demand_period >= 0 ? sc.demand[row.demand_period] : row.rhs;
  }

  /// h_s - T x for every row (the Benders subproblem right-hand side).
  std::vector<double> shifted_rhs(const Scenario& sc, const std::vector<double>& x) const;

 private:
  SecondStageVars vars_;
  std::vector<LinkingRow> rows_;
  std::vector<double> q_;
};

}  // namespace uc
