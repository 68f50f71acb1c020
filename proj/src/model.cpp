#include "uc/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uc {

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::Limit: return "limit";
  }
  return "unknown";
}

int Model::add_var(double lb, double ub, double obj, bool integer, std::string name) {
  if (lb > ub + 1e-12) throw std::invalid_argument("variable lb > ub");
  if (!std::isfinite(obj)) throw std::invalid_argument("non-finite objective coefficient");
  lb_.push_back(lb);
  ub_.push_back(ub);
  obj_.push_back(obj);
  integer_.push_back(integer ? 1 : 0);
  var_names_.push_back(std::move(name));
  return num_vars() - 1;
}

int Model::add_row(Sense sense, double rhs, std::vector<std::pair<int, double>> coeffs,
                   std::string name) {
  if (!std::isfinite(rhs)) throw std::invalid_argument("non-finite rhs");
  for (auto& [j, a] : coeffs) {
    if (j < 0 || j >= num_vars()) throw std::invalid_argument("row references unknown variable");
    if (!std::isfinite(a)) throw std::invalid_argument("non-finite coefficient");
  }
  rows_.push_back(std::move(coeffs));
  sense_.push_back(sense);
  rhs_.push_back(rhs);
  row_names_.push_back(std::move(name));
  return num_rows() - 1;
}

void Model::add_coeff(int row, int var, double value) {
  if (row < 0 || row >= num_rows()) throw std::invalid_argument("unknown row");
  if (var < 0 || var >= num_vars()) throw std::invalid_argument("unknown variable");
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite coefficient");
  rows_[row].emplace_back(var, value);
}

void Model::set_bounds(int var, double lb, double ub) {
  if (lb > ub + 1e-12) throw std::invalid_argument("variable lb > ub");
  lb_[var] = lb;
  ub_[var] = ub;
}

bool Model::has_integers() const {
  return std::any_of(integer_.begin(), integer_.end(), [](uint8_t f) { return f != 0; });
}

double Model::row_activity(int i, const std::vector<double>& x) const {
  double a = 0.0;
  for (const auto& [j, c] : rows_[i]) a += c * x[j];
  return a;
}

double Model::max_violation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (int j = 0; j < num_vars(); ++j) {
    worst = std::max(worst, lb_[j] - x[j]);
    worst = std::max(worst, x[j] - ub_[j]);
  }
  for (int i = 0; i < num_rows(); ++i) {
    double a = row_activity(i, x);
    switch (sense_[i]) {
      case Sense::LE: worst = std::max(worst, a - rhs_[i]); break;
      case Sense::GE: worst = std::max(worst, rhs_[i] - a); break;
      case Sense::EQ: worst = std::max(worst, std::abs(a - rhs_[i])); break;
    }
  }
  return worst;
}

double Model::objective_value(const std::vector<double>& x) const {
  double z = 0.0;
  for (int j = 0; j < num_vars(); ++j) z += obj_[j] * x[j];
  return z;
}

void Model::write_lp(std::ostream& os) const {
  auto vname = [&](int j) {
    return var_names_[j].empty() ? "x" + std::to_string(j) : var_names_[j];
  };
  os << "\\ exported model\nMinimize\n obj:";
  for (int j = 0; j < num_vars(); ++j)
    if (obj_[j] != 0.0) os << " " << (obj_[j] >= 0 ? "+" : "") << obj_[j] << " " << vname(j);
  os << "\nSubject To\n";
  for (int i = 0; i < num_rows(); ++i) {
    os << " " << (row_names_[i].empty() ? "c" + std::to_string(i) : row_names_[i]) << ":";
    for (const auto& [j, a] : rows_[i])
      os << " " << (a >= 0 ? "+" : "") << a << " " << vname(j);
    switch (sense_[i]) {
      case Sense::LE: os << " <= "; break;
      case Sense::GE: os << " >= "; break;
      case Sense::EQ: os << " = "; break;
    }
    os << rhs_[i] << "\n";
  }
  os << "Bounds\n";
  for (int j = 0; j < num_vars(); ++j) {
    if (lb_[j] == ub_[j]) {
      os << " " << vname(j) << " = " << lb_[j] << "\n";
    } else {
      os << " ";
      if (std::isfinite(lb_[j])) os << lb_[j] << " <= ";
      else os << "-inf <= ";
      os << vname(j);
      if (std::isfinite(ub_[j])) os << " <= " << ub_[j];
      os << "\n";
    }
  }
  bool any_int = has_integers();
  if (any_int) {
    os << "Binaries\n";
    for (int j = 0; j < num_vars(); ++j)
      if (integer_[j]) os << " " << vname(j) << "\n";
  }
  os << "End\n";
}

}  // namespace uc
