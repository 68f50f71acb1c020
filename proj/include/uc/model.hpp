#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace uc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense : uint8_t { LE, GE, EQ };

enum class SolveStatus : uint8_t { Optimal, Infeasible, Unbounded, Limit };

const char* status_name(SolveStatus s);

/// Simplex basis snapshot, reusable as a warm start. A basis taken from a model
/// remains usable after variables or rows are appended (new variables enter
/// nonbasic at bound, new row logicals enter basic).
struct Basis {
  std::vector<int32_t> basic;           // column index per row (structural or logical)
  std::vector<uint8_t> at_upper;        // per column (n structural + m logical)
  int n_vars = 0;   // structural count when the basis was taken
  int n_rows = 0;
  bool valid = false;
};

struct LpSolution {
  SolveStatus status = SolveStatus::Limit;
  double objective = kInf;
  double dual_objective = -kInf;  // computed from duals/reduced costs, not copied
  std::vector<double> x;              // structural values
  std::vector<double> duals;          // one per row; >= 0 on GE rows, <= 0 on LE rows
  std::vector<double> reduced_costs;  // structural reduced costs
  Basis basis;
  long iterations = 0;
};

struct MipIncumbentPoint {
  double time_s;
  double objective;  // incumbent
  double bound;      // global lower bound at that time
};

struct MipSolution {
  SolveStatus status = SolveStatus::Limit;
  bool has_incumbent = false;
  std::vector<double> x;
  double objective = kInf;
  double bound = -kInf;
  std::vector<MipIncumbentPoint> trace;
  long nodes = 0;
};

struct LpOptions {
  double feas_tol = 1e-7;
  double opt_tol = 1e-7;
  long max_iters = -1;  // -1 = automatic
  double time_limit = kInf;
};

struct MipOptions {
  double time_limit = kInf;
  double rel_gap = 1e-6;
  double abs_gap = 1e-9;
  long max_nodes = -1;
  double int_tol = 1e-6;
  const std::vector<double>* warm_start = nullptr;
  LpOptions lp;
};

/// A minimize-only linear model with incremental rows and columns.
class Model {
 public:
  int add_var(double lb, double ub, double obj, bool integer, std::string name = {});
  int add_row(Sense sense, double rhs, std::vector<std::pair<int, double>> coeffs,
              std::string name = {});
  void add_coeff(int row, int var, double value);  // appends to an existing row
  void set_rhs(int row, double rhs) { rhs_[row] = rhs; }
  void set_obj(int var, double c) { obj_[var] = c; }
  void set_bounds(int var, double lb, double ub);
  void set_integer(int var, bool integer) { integer_[var] = integer; }

  int num_vars() const { return static_cast<int>(obj_.size()); }
  int num_rows() const { return static_cast<int>(rhs_.size()); }
  double lb(int j) const { return lb_[j]; }
  double ub(int j) const { return ub_[j]; }
  double obj(int j) const { return obj_[j]; }
  bool is_integer(int j) const { return integer_[j] != 0; }
  bool has_integers() const;
  Sense row_sense(int i) const { return sense_[i]; }
  double rhs(int i) const { return rhs_[i]; }
  const std::vector<std::pair<int, double>>& row(int i) const { return rows_[i]; }
  const std::string& var_name(int j) const { return var_names_[j]; }
  const std::string& row_name(int i) const { return row_names_[i]; }

  double row_activity(int i, const std::vector<double>& x) const;
  /// Max violation of rows and bounds at x (for warm-start screening).
  double max_violation(const std::vector<double>& x) const;
  double objective_value(const std::vector<double>& x) const;

  /// CPLEX LP-format export for debugging.
  void write_lp(std::ostream& os) const;

 private:
  std::vector<double> lb_, ub_, obj_;
  std::vector<uint8_t> integer_;
  std::vector<std::string> var_names_;
  std::vector<std::vector<std::pair<int, double>>> rows_;
  std::vector<Sense> sense_;
  std::vector<double> rhs_;
  std::vector<std::string> row_names_;
};

/// Solves the LP relaxation (integrality is ignored). Never silently defaults:
/// infeasible/unbounded come back as status values.
LpSolution solve_lp(const Model& model, const LpOptions& options = {},
                    const Basis* warm = nullptr);

/// Same but with per-variable bound overrides (used by branch-and-bound).
LpSolution solve_lp_bounded(const Model& model, const std::vector<double>& lb,
                            const std::vector<double>& ub, const LpOptions& options,
                            const Basis* warm);

/// Branch-and-bound over the model's integer-flagged variables.
MipSolution solve_mip(const Model& model, const MipOptions& options = {});

}  // namespace uc
