#include "uc/second_stage.hpp"

#include <algorithm>
#include <cmath>

namespace uc {

SecondStageVars::SecondStageVars(const Instance& instance) {
  T_ = instance.horizon;
  const int G = instance.n_generators();
  gen_offset_.resize(G);
  n_modes_.resize(G);
  lam_offset_.resize(G);
  n_segs_.resize(G);
  int off = 0;
  for (int g = 0; g < G; ++g) {
    const Generator& gen = instance.generators[g];
    const int M = static_cast<int>(gen.modes.size());
    gen_offset_[g] = off;
    n_modes_[g] = M;
    lam_offset_[g].resize(M);
    n_segs_[g].resize(M);
    int lam = 0;
    for (int m = 0; m < M; ++m) {
      lam_offset_[g][m] = lam;
      n_segs_[g][m] = gen.modes[m].n_segments();
      lam += T_ * n_segs_[g][m];
    }
    off += 2 * M * T_ + lam;
  }
  delta_offset_ = off;
  n_ = off + 2 * T_;

  names_.resize(n_);
  for (int g = 0; g < G; ++g) {
    const Generator& gen = instance.generators[g];
    for (int m = 0; m < static_cast<int>(gen.modes.size()); ++m)
      for (int t = 0; t < T_; ++t) {
        names_[p_index(g, m, t)] =
            "p[g" + std::to_string(g) + ",m" + std::to_string(m) + ",t" + std::to_string(t) + "]";
        names_[r_index(g, m, t)] =
            "r[g" + std::to_string(g) + ",m" + std::to_string(m) + ",t" + std::to_string(t) + "]";
        for (int l = 0; l < gen.modes[m].n_segments(); ++l)
          names_[lambda_index(g, m, t, l)] = "lam[g" + std::to_string(g) + ",m" +
                                             std::to_string(m) + ",t" + std::to_string(t) +
                                             ",l" + std::to_string(l) + "]";
      }
  }
  for (int t = 0; t < T_; ++t) {
    names_[shortage_index(t)] = "short[t" + std::to_string(t) + "]";
    names_[surplus_index(t)] = "surp[t" + std::to_string(t) + "]";
  }
}

SecondStageSolution SecondStageVars::decode(const std::vector<double>& y,
                                            const Instance& instance, ScenarioId s) const {
  SecondStageSolution out = SecondStageSolution::zeros(instance, s);
  auto clip = [](double v) { return (v < 0 && v > -1e-9) ? 0.0 : v; };
  for (int g = 0; g < instance.n_generators(); ++g) {
    const Generator& gen = instance.generators[g];
    for (int m = 0; m < static_cast<int>(gen.modes.size()); ++m)
      for (int t = 0; t < T_; ++t) {
        out.p[g][m][t] = clip(y[p_index(g, m, t)]);
        out.r[g][m][t] = clip(y[r_index(g, m, t)]);
        for (int l = 0; l < gen.modes[m].n_segments(); ++l)
          out.lambda[g][m][t][l] = clip(y[lambda_index(g, m, t, l)]);
      }
  }
  for (int t = 0; t < T_; ++t) {
    out.shortage[t] = clip(y[shortage_index(t)]);
    out.surplus[t] = clip(y[surplus_index(t)]);
  }
  return out;
}

SecondStageTemplate::SecondStageTemplate(const Instance& instance) : vars_(instance) {
  const int T = instance.horizon;
  const int G = instance.n_generators();
  FirstStageMap fsm(instance);

  q_.assign(vars_.n_vars(), 0.0);
  for (int g = 0; g < G; ++g) {
    const Generator& gen = instance.generators[g];
    for (int m = 0; m < static_cast<int>(gen.modes.size()); ++m) {
      double c1 = gen.modes[m].cost_at_min();
      for (int t = 0; t < T; ++t)
        for (int l = 0; l < gen.modes[m].n_segments(); ++l)
          q_[vars_.lambda_index(g, m, t, l)] =
              (gen.modes[m].cost_breakpoints[l].cost - c1) * instance.period_hours;
    }
  }
  for (int t = 0; t < T; ++t) {
    q_[vars_.shortage_index(t)] = instance.penalty[t] * instance.period_hours;
    q_[vars_.surplus_index(t)] = instance.penalty[t] * instance.period_hours;
  }

  auto tag = [](const char* name, int g, int m, int t) {
    return std::string(name) + "[g" + std::to_string(g) + ",m" + std::to_string(m) + ",t" +
           std::to_string(t) + "]";
  };

  for (int g = 0; g < G; ++g) {
    const Generator& gen = instance.generators[g];
    for (int m = 0; m < static_cast<int>(gen.modes.size()); ++m) {
      const Mode& mode = gen.modes[m];
      double p0 = initial_marginal_power(gen, m);
      for (int t = 0; t < T; ++t) {
        // (8) ramp-up:  -p_t - r_t + p_{t-1} >= -ramp_up   (p_{-1} = p0 constant)
        {
          LinkingRow row;
          row.sense = Sense::GE;
          row.w = {{vars_.p_index(g, m, t), -1.0}, {vars_.r_index(g, m, t), -1.0}};
          row.rhs = -mode.ramp_up;
          if (t > 0) row.w.emplace_back(vars_.p_index(g, m, t - 1), 1.0);
          else row.rhs -= p0;
          row.name = tag("ramp_up", g, m, t);
          rows_.push_back(std::move(row));
        }
        // (9) ramp-down:  p_t - p_{t-1} >= -ramp_down
        {
          LinkingRow row;
          row.sense = Sense::GE;
          row.w = {{vars_.p_index(g, m, t), 1.0}};
          row.rhs = -mode.ramp_down;
          if (t > 0) row.w.emplace_back(vars_.p_index(g, m, t - 1), -1.0);
          else row.rhs += p0;
          row.name = tag("ramp_down", g, m, t);
          rows_.push_back(std::move(row));
        }
        double cap = mode.max_power[t] - mode.min_power[t];
        // (10) -p - r + cap*u - max(pmax - ramp_startup, 0)*v >= 0
        {
          LinkingRow row;
          row.sense = Sense::GE;
          row.w = {{vars_.p_index(g, m, t), -1.0}, {vars_.r_index(g, m, t), -1.0}};
          row.t = {{fsm.u_index(g, m, t), cap}};
          double su = std::max(mode.max_power[t] - mode.ramp_startup, 0.0);
          if (su > 0) row.t.emplace_back(fsm.v_index(g, m, t), -su);
          row.rhs = 0.0;
          row.name = tag("startup_ramp", g, m, t);
          rows_.push_back(std::move(row));
        }
        // (11) -p - r + cap*u - max(pmax - ramp_shutdown, 0)*w_{t+1} >= 0
        {
          LinkingRow row;
          row.sense = Sense::GE;
          row.w = {{vars_.p_index(g, m, t), -1.0}, {vars_.r_index(g, m, t), -1.0}};
          row.t = {{fsm.u_index(g, m, t), cap}};
          double sd = std::max(mode.max_power[t] - mode.ramp_shutdown, 0.0);
          if (sd > 0 && t + 1 < T) row.t.emplace_back(fsm.w_index(g, m, t + 1), -sd);
          row.rhs = 0.0;
          row.name = tag("shutdown_ramp", g, m, t);
          rows_.push_back(std::move(row));
        }
        // (13) sum_l lambda - u = 0
        {
          LinkingRow row;
          row.sense = Sense::EQ;
          for (int l = 0; l < mode.n_segments(); ++l)
            row.w.emplace_back(vars_.lambda_index(g, m, t, l), 1.0);
          row.t = {{fsm.u_index(g, m, t), -1.0}};
          row.rhs = 0.0;
          row.name = tag("piecewise", g, m, t);
          rows_.push_back(std::move(row));
        }
        // linkage  p - sum_l lambda_l (P_l - P_1) = 0
        {
          LinkingRow row;
          row.sense = Sense::EQ;
          row.w = {{vars_.p_index(g, m, t), 1.0}};
          double P1 = mode.cost_breakpoints.front().power;
          for (int l = 0; l < mode.n_segments(); ++l) {
            double span = mode.cost_breakpoints[l].power - P1;
            if (span != 0.0) row.w.emplace_back(vars_.lambda_index(g, m, t, l), -span);
          }
          row.rhs = 0.0;
          row.name = tag("dispatch_link", g, m, t);
          rows_.push_back(std::move(row));
        }
      }
    }
  }

  // (12) balance: sum_gm (pmin*u + p) + d+ - d- = d_t
  for (int t = 0; t < T; ++t) {
    LinkingRow row;
    row.sense = Sense::EQ;
    for (int g = 0; g < G; ++g) {
      const Generator& gen = instance.generators[g];
      for (int m = 0; m < static_cast<int>(gen.modes.size()); ++m) {
        row.w.emplace_back(vars_.p_index(g, m, t), 1.0);
        double pmin = gen.modes[m].min_power[t];
        if (pmin != 0.0) row.t.emplace_back(fsm.u_index(g, m, t), pmin);
      }
    }
    row.w.emplace_back(vars_.shortage_index(t), 1.0);
    row.w.emplace_back(vars_.surplus_index(t), -1.0);
    row.demand_period = t;
    row.name = "balance[t" + std::to_string(t) + "]";
    rows_.push_back(std::move(row));
  }

  // reserve requirement rows (only when binding)
  for (int t = 0; t < T; ++t) {
    double req = instance.reserve_at(t);
    if (req <= 0.0) continue;
    LinkingRow row;
    row.sense = Sense::GE;
    for (int g = 0; g < G; ++g)
      for (int m = 0; m < static_cast<int>(instance.generators[g].modes.size()); ++m)
        row.w.emplace_back(vars_.r_index(g, m, t), 1.0);
    row.rhs = req;
    row.name = "reserve[t" + std::to_string(t) + "]";
    rows_.push_back(std::move(row));
  }
}

std::vector<double> SecondStageTemplate::shifted_rhs(const Scenario& sc,
                                                     const std::vector<double>& x) const {
  std::vector<double> h(rows_.size());
  for (size_t i = 0; i < rows_.size(); ++i) {
    double v = rhs_for(rows_[i], sc);
    for (const auto& [j, a] : rows_[i].t) v -= a * x[j];
    h[i] = v;
  }
  return h;
}

}  // namespace uc
