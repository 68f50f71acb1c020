#pragma once

#include "uc/model.hpp"
#include "uc/types.hpp"

namespace uc {

/// Dense indexing of the first-stage coordinates x = (u, v, w) over all
/// generators, modes and periods. The per-generator block layout is the same
/// one used when a generator's variables are created in any model, so slicing
/// a global vector at [offset(g), offset(g)+block_size(g)) yields exactly that
/// generator's local coordinates.
class FirstStageMap {
 public:
  explicit FirstStageMap(const Instance& instance);

  int n_coords() const { return n_; }
  int offset(GeneratorId g) const { return offsets_[g]; }
  int block_size(GeneratorId g) const { return 3 * n_modes_[g] * T_; }
  int n_modes(GeneratorId g) const { return n_modes_[g]; }
  int horizon() const { return T_; }

  int u_index(GeneratorId g, ModeId m, TimeStep t) const {
    return offsets_[g] + (0 * n_modes_[g] + m) * T_ + t;
  }
  int v_index(GeneratorId g, ModeId m, TimeStep t) const {
    return offsets_[g] + (1 * n_modes_[g] + m) * T_ + t;
  }
  int w_index(GeneratorId g, ModeId m, TimeStep t) const {
    return offsets_[g] + (2 * n_modes_[g] + m) * T_ + t;
  }

  /// First-stage cost vector c (minimum-generation cost on u, zero on v/w).
  std::vector<double> first_stage_costs(const Instance& instance) const;

  std::vector<double> to_vector(const std::vector<Schedule>& schedules) const;
  std::vector<Schedule> to_schedules(const std::vector<double>& x,
                                     const Instance& instance,
                                     double int_tol = 1e-6) const;

 private:
  int T_ = 0;
  int n_ = 0;
  std::vector<int> offsets_;
  std::vector<int> n_modes_;
};

/// Adds one generator's u/v/w variables to the model in FirstStageMap block
/// order, applying initial-state bound fixes. Returns the base variable index.
int add_schedule_vars(Model& model, const Generator& gen, int horizon, bool binary);

/// Adds the scheduling rows (2)-(7) for one generator whose variables start at
/// base (in block order).
void add_schedule_rows(Model& model, const Generator& gen, int horizon, int base);

}  // namespace uc
