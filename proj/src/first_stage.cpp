#include "uc/first_stage.hpp"

#include <cmath>
#include <stdexcept>

namespace uc {

FirstStageMap::FirstStageMap(const Instance& instance) {
  T_ = instance.horizon;
  offsets_.reserve(instance.generators.size());
  n_modes_.reserve(instance.generators.size());
  int off = 0;
  for (const Generator& g : instance.generators) {
    offsets_.push_back(off);
    n_modes_.push_back(static_cast<int>(g.modes.size()));
    off += 3 * static_cast<int>(g.modes.size()) * T_;
  }
  n_ = off;
}

std::vector<double> FirstStageMap::first_stage_costs(const Instance& instance) const {
  std::vector<double> c(n_, 0.0);
  for (int g = 0; g < instance.n_generators(); ++g) {
    const Generator& gen = instance.generators[g];
    for (int m = 0; m < n_modes_[g]; ++m) {
      double c1 = gen.modes[m].cost_at_min();
      for (int t = 0; t < T_; ++t)
        c[u_index(g, m, t)] = c1 * gen.modes[m].min_power[t] * instance.period_hours;
    }
  }
  return c;
}

std::vector<double> FirstStageMap::to_vector(const std::vector<Schedule>& schedules) const {
  std::vector<double> x(n_, 0.0);
  for (size_t g = 0; g < schedules.size(); ++g) {
    const Schedule& s = schedules[g];
    for (int m = 0; m < n_modes_[g]; ++m)
      for (int t = 0; t < T_; ++t) {
        x[u_index(static_cast<int>(g), m, t)] = s.u[m][t];
        x[v_index(static_cast<int>(g), m, t)] = s.v[m][t];
        x[w_index(static_cast<int>(g), m, t)] = s.w[m][t];
      }
  }
  return x;
}

std::vector<Schedule> FirstStageMap::to_schedules(const std::vector<double>& x,
                                                  const Instance& instance,
                                                  double int_tol) const {
  std::vector<Schedule> out;
  for (int g = 0; g < instance.n_generators(); ++g) {
    Schedule s = Schedule::zeros(g, n_modes_[g], T_);
    for (int m = 0; m < n_modes_[g]; ++m)
      for (int t = 0; t < T_; ++t) {
        auto decode = [&](double val) {
          double r = std::round(val);
          if (std::abs(val - r) > int_tol)
            throw std::runtime_error("first-stage value not integral within tolerance");
          return static_cast<int>(r);
        };
        s.u[m][t] = decode(x[u_index(g, m, t)]);
        s.v[m][t] = decode(x[v_index(g, m, t)]);
        s.w[m][t] = decode(x[w_index(g, m, t)]);
      }
    out.push_back(std::move(s));
  }
  return out;
}

int add_schedule_vars(Model& model, const Generator& gen, int horizon, bool binary) {
  const int M = static_cast<int>(gen.modes.size());
  int base = model.num_vars();
  const char* kinds = "uvw";
  for (int k = 0; k < 3; ++k)
    for (int m = 0; m < M; ++m)
      for (int t = 0; t < horizon; ++t) {
        double lb = 0.0, ub = 1.0;
        if (k == 0) {  // initial-state pins on u
          if (t < forced_on_periods(gen, m)) lb = 1.0;
          if (t < forced_off_periods(gen, m)) ub = 0.0;
        }
        model.add_var(lb, ub, 0.0, binary,
                      std::string(1, kinds[k]) + "[g" + std::to_string(gen.id) + ",m" +
                          std::to_string(m) + ",t" + std::to_string(t) + "]");
      }
  return base;
}

void add_schedule_rows(Model& model, const Generator& gen, int horizon, int base) {
  const int M = static_cast<int>(gen.modes.size());
  const int T = horizon;
  auto u = [&](int m, int t) { return base + (0 * M + m) * T + t; };
  auto v = [&](int m, int t) { return base + (1 * M + m) * T + t; };
  auto w = [&](int m, int t) { return base + (2 * M + m) * T + t; };
  auto tag = [&](const char* name, int m, int t) {
    return std::string(name) + "[g" + std::to_string(gen.id) + ",m" + std::to_string(m) +
           ",t" + std::to_string(t) + "]";
  };

  for (int m = 0; m < M; ++m) {
    const Mode& mode = gen.modes[m];

    // (2) u_t - u_{t-1} - v_t + w_t = u0 at t=0, 0 otherwise
    for (int t = 0; t < T; ++t) {
      std::vector<std::pair<int, double>> row{{u(m, t), 1.0}, {v(m, t), -1.0}, {w(m, t), 1.0}};
      double rhs = 0.0;
      if (t == 0) rhs = initial_u(gen, m);
      else row.emplace_back(u(m, t - 1), -1.0);
      model.add_row(Sense::EQ, rhs, std::move(row), tag("logic", m, t));
    }

    // (3) u_t - sum_{i in window} v_i >= 0
    for (int t = 0; t < T; ++t) {
      std::vector<std::pair<int, double>> row{{u(m, t), 1.0}};
      for (int i = std::max(0, t - mode.min_up + 1); i <= t; ++i)
        row.emplace_back(v(m, i), -1.0);
      model.add_row(Sense::GE, 0.0, std::move(row), tag("min_up", m, t));
    }

    // (4) u_t + sum_{i in window} w_i <= 1
    for (int t = 0; t < T; ++t) {
      std::vector<std::pair<int, double>> row{{u(m, t), 1.0}};
      for (int i = std::max(0, t - mode.min_down + 1); i <= t; ++i)
        row.emplace_back(w(m, i), 1.0);
      model.add_row(Sense::LE, 1.0, std::move(row), tag("min_down", m, t));
    }
  }

  // (5)-(6) dependent-mode startup/commitment
  for (int m = 0; m < M; ++m) {
    if (!gen.modes[m].supporting_mode.has_value()) continue;
    int s = *gen.modes[m].supporting_mode;
    for (int t = 0; t < T; ++t) {
      model.add_row(Sense::LE, 0.0, {{v(m, t), 1.0}, {u(s, t), -1.0}},
                    tag("dep_startup", m, t));
      model.add_row(Sense::LE, 1.0, {{u(m, t), 1.0}, {v(s, t), 1.0}},
                    tag("dep_commit", m, t));
    }
  }

  // (7) at most one base mode online (only binding with several base modes)
  std::vector<ModeId> bases = gen.base_modes();
  if (bases.size() > 1) {
    for (int t = 0; t < T; ++t) {
      std::vector<std::pair<int, double>> row;
      for (ModeId b : bases) row.emplace_back(u(b, t), 1.0);
      model.add_row(Sense::LE, 1.0, std::move(row), tag("single_base", -1, t));
    }
  }
}

}  // namespace uc
