#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "uc/model.hpp"

// Bounded-variable primal simplex with a composite phase-1 objective.
// The basis inverse is kept as a sparse LU factorization plus a chain of
// product-form eta updates, refactorized periodically.

namespace uc {

namespace {

constexpr int kRefactorInterval = 64;
constexpr double kPivotTol = 1e-8;
constexpr double kZeroTol = 1e-11;

struct Csc {
  int n_cols = 0, n_rows = 0;
  std::vector<int> ptr, idx;
  std::vector<double> val;

  template <typename F>
  void for_col(int j, F&& f) const {
    for (int k = ptr[j]; k < ptr[j + 1]; ++k) f(idx[k], val[k]);
  }
};

enum VStat : uint8_t { kBasic, kAtLower, kAtUpper, kFreeNb };

class Simplex {
 public:
  Simplex(const Model& model, const std::vector<double>& lb_struct,
          const std::vector<double>& ub_struct, const LpOptions& opt)
      : model_(model), opt_(opt) {
    n_ = model.num_vars();
    m_ = model.num_rows();
    N_ = n_ + m_;
    build_matrix();
    lb_.assign(N_, 0.0);
    ub_.assign(N_, 0.0);
    cost_.assign(N_, 0.0);
    for (int j = 0; j < n_; ++j) {
      lb_[j] = lb_struct[j];
      ub_[j] = ub_struct[j];
      cost_[j] = model.obj(j);
    }
    for (int i = 0; i < m_; ++i) {
      switch (model.row_sense(i)) {
        case Sense::LE: lb_[n_ + i] = 0.0; ub_[n_ + i] = kInf; break;
        case Sense::GE: lb_[n_ + i] = -kInf; ub_[n_ + i] = 0.0; break;
        case Sense::EQ: lb_[n_ + i] = 0.0; ub_[n_ + i] = 0.0; break;
      }
    }
    rhs_.resize(m_);
    for (int i = 0; i < m_; ++i) rhs_[i] = model.rhs(i);
  }

  LpSolution solve(const Basis* warm) {
    LpSolution out;
    init_basis(warm);
    if (!refactorize()) {
      reset_slack_basis();
      if (!refactorize()) throw std::runtime_error("simplex: singular slack basis");
    }
    compute_basic_values();

    const long max_iters =
        opt_.max_iters > 0 ? opt_.max_iters
                           : std::min<long>(5000000, 2000 + 100L * (m_ + n_));
    auto deadline_hit = [&]() {
      if (!std::isfinite(opt_.time_limit)) return false;
      return elapsed() > opt_.time_limit;
    };

    long iter = 0;
    long degen_run = 0;
    bool bland = false;

    while (true) {
      if (iter >= max_iters || ((iter & 255) == 0 && deadline_hit())) {
        out.status = SolveStatus::Limit;
        finalize(out, iter);
        return out;
      }
      ++iter;

      bool phase1 = total_infeasibility() > feas_threshold();
      prepare_costs(phase1);
      price();

      int enter = pick_entering(bland);
      if (enter < 0) {
        if (phase1) {
          out.status = SolveStatus::Infeasible;
          finalize(out, iter);
          return out;
        }
        out.status = SolveStatus::Optimal;
        finalize(out, iter);
        return out;
      }

      double sigma = entering_direction(enter);
      ftran_column(enter);  // work_ = B^-1 A_enter

      RatioResult rr = ratio_test(enter, sigma, phase1, bland);
      if (rr.unbounded) {
        if (phase1) throw std::runtime_error("simplex: phase-1 unbounded (internal error)");
        out.status = SolveStatus::Unbounded;
        finalize(out, iter);
        return out;
      }

      if (rr.step < 1e-9) {
        if (++degen_run > std::max<long>(500, m_)) bland = true;
      } else {
        degen_run = 0;
        bland = false;
      }

      apply_step(enter, sigma, rr);

      if (static_cast<int>(etas_.size()) >= kRefactorInterval) {
        if (!refactorize()) {
          reset_slack_basis();
          if (!refactorize()) throw std::runtime_error("simplex: singular basis");
        }
        compute_basic_values();
      }
    }
  }

 private:
  struct RatioResult {
    bool unbounded = false;
    bool bound_flip = false;
    int leave_pos = -1;   // position in basic_
    double leave_to = 0;  // bound the leaving variable lands on
    double step = 0;
  };

  // ---- setup ----

  void build_matrix() {
    A_.n_cols = N_;
    A_.n_rows = m_;
    std::vector<std::vector<std::pair<int, double>>> cols(N_);
    for (int i = 0; i < m_; ++i)
      for (const auto& [j, a] : model_.row(i))
        if (a != 0.0) cols[j].emplace_back(i, a);
    for (int i = 0; i < m_; ++i) cols[n_ + i].emplace_back(i, 1.0);
    A_.ptr.assign(N_ + 1, 0);
    for (int j = 0; j < N_; ++j) {
      auto& c = cols[j];
      std::sort(c.begin(), c.end());
      // merge duplicate entries
      std::vector<std::pair<int, double>> merged;
      for (auto& [i, a] : c) {
        if (!merged.empty() && merged.back().first == i) merged.back().second += a;
        else merged.emplace_back(i, a);
      }
      c = std::move(merged);
      A_.ptr[j + 1] = A_.ptr[j] + static_cast<int>(c.size());
    }
    A_.idx.resize(A_.ptr[N_]);
    A_.val.resize(A_.ptr[N_]);
    for (int j = 0; j < N_; ++j) {
      int k = A_.ptr[j];
      for (auto& [i, a] : cols[j]) {
        A_.idx[k] = i;
        A_.val[k] = a;
        ++k;
      }
    }
    start_ = std::chrono::steady_clock::now();
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void reset_slack_basis() {
    basic_.resize(m_);
    vstat_.assign(N_, kAtLower);
    xval_.assign(N_, 0.0);
    for (int j = 0; j < n_; ++j) set_nonbasic_at_best_bound(j);
    for (int i = 0; i < m_; ++i) {
      basic_[i] = n_ + i;
      vstat_[n_ + i] = kBasic;
    }
    etas_.clear();
  }

  void set_nonbasic_at_best_bound(int j) {
    if (std::isfinite(lb_[j])) {
      vstat_[j] = kAtLower;
      xval_[j] = lb_[j];
    } else if (std::isfinite(ub_[j])) {
      vstat_[j] = kAtUpper;
      xval_[j] = ub_[j];
    } else {
      vstat_[j] = kFreeNb;
      xval_[j] = 0.0;
    }
  }

  void init_basis(const Basis* warm) {
    if (warm == nullptr || !warm->valid || warm->n_rows > m_ || warm->n_vars > n_ ||
        static_cast<int>(warm->basic.size()) != warm->n_rows) {
      reset_slack_basis();
      return;
    }
    // Remap logical indices if the model gained variables since the basis was taken.
    const int n_old = warm->n_vars;
    const int m_old = warm->n_rows;
    basic_.resize(m_);
    vstat_.assign(N_, kAtLower);
    xval_.assign(N_, 0.0);
    std::vector<uint8_t> used(N_, 0);
    bool ok = true;
    for (int i = 0; i < m_old; ++i) {
      int c = warm->basic[i];
      if (c >= n_old) c = n_ + (c - n_old);
      if (c < 0 || c >= N_ || used[c]) {
        ok = false;
        break;
      }
      used[c] = 1;
      basic_[i] = c;
    }
    if (!ok) {
      reset_slack_basis();
      return;
    }
    for (int i = m_old; i < m_; ++i) {
      basic_[i] = n_ + i;  // logicals of appended rows
      used[n_ + i] = 1;
    }
    for (int j = 0; j < N_; ++j) {
      if (used[j]) {
        vstat_[j] = kBasic;
        continue;
      }
      int old_idx = -1;
      if (j < n_) old_idx = j < n_old ? j : -1;
      else old_idx = (j - n_) < m_old ? n_old + (j - n_) : -1;
      bool upper = old_idx >= 0 && old_idx < static_cast<int>(warm->at_upper.size()) &&
                   warm->at_upper[old_idx] != 0;
      if (upper && std::isfinite(ub_[j])) {
        vstat_[j] = kAtUpper;
        xval_[j] = ub_[j];
      } else {
        set_nonbasic_at_best_bound(j);
      }
    }
    etas_.clear();
  }

  // ---- basis factorization ----

  bool refactorize() {
    Eigen::SparseMatrix<double> B(m_, m_);
    std::vector<Eigen::Triplet<double>> trips;
    for (int pos = 0; pos < m_; ++pos) {
      int j = basic_[pos];
      A_.for_col(j, [&](int i, double a) { trips.emplace_back(i, pos, a); });
    }
    B.setFromTriplets(trips.begin(), trips.end());
    lu_.analyzePattern(B);
    lu_.factorize(B);
    etas_.clear();
    return lu_.info() == Eigen::Success;
  }

  // Solves B z = v in place. Basic position order matters: the LU solves in
  // column-position space because B's columns were laid out by position.
  void ftran(Eigen::VectorXd& v) const {
    v = lu_.solve(v);
    for (const Eta& e : etas_) {
      double zp = v[e.pos] / e.pivot;
      if (zp != 0.0)
        for (const auto& [i, a] : e.col) v[i] -= a * zp;
      v[e.pos] = zp;
    }
  }

  void btran(Eigen::VectorXd& v) const {
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      double acc = v[it->pos];
      for (const auto& [i, a] : it->col) acc -= a * v[i];
      v[it->pos] = acc / it->pivot;
    }
    v = lu_.transpose().solve(v);
  }

  void ftran_column(int j) {
    work_.setZero(m_);
    A_.for_col(j, [&](int i, double a) { work_[i] = a; });
    ftran(work_);
  }

  void compute_basic_values() {
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m_);
    for (int i = 0; i < m_; ++i) rhs[i] = rhs_[i];
    for (int j = 0; j < N_; ++j) {
      if (vstat_[j] == kBasic || xval_[j] == 0.0) continue;
      A_.for_col(j, [&](int i, double a) { rhs[i] -= a * xval_[j]; });
    }
    ftran(rhs);
    for (int pos = 0; pos < m_; ++pos) xval_[basic_[pos]] = rhs[pos];
  }

  // ---- pricing ----

  double feas_threshold() const { return opt_.feas_tol * 10.0; }

  double total_infeasibility() const {
    double s = 0.0;
    for (int pos = 0; pos < m_; ++pos) {
      int j = basic_[pos];
      if (xval_[j] < lb_[j]) s += lb_[j] - xval_[j];
      else if (xval_[j] > ub_[j]) s += xval_[j] - ub_[j];
    }
    return s;
  }

  void prepare_costs(bool phase1) {
    phase1_ = phase1;
    cb_.setZero(m_);
    if (phase1) {
      for (int pos = 0; pos < m_; ++pos) {
        int j = basic_[pos];
        if (xval_[j] < lb_[j] - opt_.feas_tol) cb_[pos] = -1.0;
        else if (xval_[j] > ub_[j] + opt_.feas_tol) cb_[pos] = 1.0;
      }
    } else {
      for (int pos = 0; pos < m_; ++pos) cb_[pos] = cost_[basic_[pos]];
    }
  }

  void price() {
    y_ = cb_;
    btran(y_);
    dj_.assign(N_, 0.0);
    for (int j = 0; j < N_; ++j) {
      if (vstat_[j] == kBasic) continue;
      double d = phase1_ ? 0.0 : cost_[j];
      A_.for_col(j, [&](int i, double a) { d -= y_[i] * a; });
      dj_[j] = d;
    }
  }

  int pick_entering(bool bland) const {
    int best = -1;
    double best_score = opt_.opt_tol;
    for (int j = 0; j < N_; ++j) {
      double score = 0.0;
      switch (vstat_[j]) {
        case kBasic: continue;
        case kAtLower: score = -dj_[j]; break;
        case kAtUpper: score = dj_[j]; break;
        case kFreeNb: score = std::abs(dj_[j]); break;
      }
      if (score > best_score) {
        if (bland) return j;
        best_score = score;
        best = j;
      }
    }
    return best;
  }

  double entering_direction(int j) const {
    if (vstat_[j] == kAtLower) return 1.0;
    if (vstat_[j] == kAtUpper) return -1.0;
    return dj_[j] < 0 ? 1.0 : -1.0;  // free variable moves downhill
  }

  // ---- ratio test ----

  RatioResult ratio_test(int enter, double sigma, bool phase1, bool bland) {
    RatioResult rr;
    const double ftol = opt_.feas_tol;

    double own_range = ub_[enter] - lb_[enter];
    double limit = std::isfinite(own_range) ? own_range : kInf;

    // Pass 1: relaxed minimum ratio.
    double dmax = limit;
    for (int pos = 0; pos < m_; ++pos) {
      int j = basic_[pos];
      double rate = -sigma * work_[pos];
      if (std::abs(rate) < kPivotTol) continue;
      double dist;
      if (rate > 0) {  // value increases
        if (xval_[j] < lb_[j] - ftol) dist = lb_[j] - xval_[j];          // infeasible below
        else if (std::isfinite(ub_[j])) dist = ub_[j] - xval_[j];
        else continue;
        dmax = std::min(dmax, (dist + ftol) / rate);
      } else {  // value decreases
        if (xval_[j] > ub_[j] + ftol) dist = xval_[j] - ub_[j];          // infeasible above
        else if (std::isfinite(lb_[j])) dist = xval_[j] - lb_[j];
        else continue;
        dmax = std::min(dmax, (dist + ftol) / (-rate));
      }
    }
    (void)phase1;

    if (!std::isfinite(dmax)) {
      rr.unbounded = true;
      return rr;
    }

    // Pass 2: among blockers within dmax pick the most stable pivot.
    int best_pos = -1;
    double best_ratio = limit;
    double best_piv = 0.0;
    double best_to = 0.0;
    for (int pos = 0; pos < m_; ++pos) {
      int j = basic_[pos];
      double rate = -sigma * work_[pos];
      if (std::abs(rate) < kPivotTol) continue;
      double dist, to;
      if (rate > 0) {
        if (xval_[j] < lb_[j] - ftol) { dist = lb_[j] - xval_[j]; to = lb_[j]; }
        else if (std::isfinite(ub_[j])) { dist = ub_[j] - xval_[j]; to = ub_[j]; }
        else continue;
      } else {
        if (xval_[j] > ub_[j] + ftol) { dist = xval_[j] - ub_[j]; to = ub_[j]; }
        else if (std::isfinite(lb_[j])) { dist = xval_[j] - lb_[j]; to = lb_[j]; }
        else continue;
      }
      double ratio = std::max(0.0, dist) / std::abs(rate);
      if (ratio > dmax) continue;
      bool better;
      if (bland) better = best_pos < 0 || j < basic_[best_pos];
      else better = std::abs(work_[pos]) > std::abs(best_piv) + kZeroTol ||
                    (std::abs(work_[pos]) > std::abs(best_piv) - kZeroTol && ratio < best_ratio);
      if (best_pos < 0 || better) {
        best_pos = pos;
        best_ratio = ratio;
        best_piv = work_[pos];
        best_to = to;
      }
    }

    if (best_pos < 0) {
      // entering variable reaches its opposite bound first
      rr.bound_flip = true;
      rr.step = limit;
      return rr;
    }
    rr.leave_pos = best_pos;
    rr.leave_to = best_to;
    rr.step = std::min(best_ratio, limit);
    if (rr.step >= limit - kZeroTol && std::isfinite(limit) && best_ratio >= limit) {
      rr.bound_flip = true;
      rr.leave_pos = -1;
      rr.step = limit;
    }
    return rr;
  }

  void apply_step(int enter, double sigma, const RatioResult& rr) {
    double step = rr.step;
    // update basic values
    if (step != 0.0) {
      for (int pos = 0; pos < m_; ++pos) {
        if (work_[pos] == 0.0) continue;
        xval_[basic_[pos]] -= sigma * step * work_[pos];
      }
    }
    if (rr.bound_flip) {
      xval_[enter] += sigma * step;
      vstat_[enter] = (sigma > 0) ? kAtUpper : kAtLower;
      xval_[enter] = (sigma > 0) ? ub_[enter] : lb_[enter];
      return;
    }
    int leave = basic_[rr.leave_pos];
    xval_[leave] = rr.leave_to;
    vstat_[leave] = (std::isfinite(ub_[leave]) && rr.leave_to == ub_[leave] &&
                     rr.leave_to != lb_[leave])
                        ? kAtUpper
                        : kAtLower;
    xval_[enter] += sigma * step;
    vstat_[enter] = kBasic;
    basic_[rr.leave_pos] = enter;

    Eta e;
    e.pos = rr.leave_pos;
    e.pivot = work_[rr.leave_pos];
    e.col.reserve(16);
    for (int i = 0; i < m_; ++i)
      if (i != rr.leave_pos && std::abs(work_[i]) > kZeroTol)
        e.col.emplace_back(i, work_[i]);
    etas_.push_back(std::move(e));
  }

  // ---- extraction ----

  void finalize(LpSolution& out, long iters) {
    out.iterations = iters;
    out.x.assign(n_, 0.0);
    for (int j = 0; j < n_; ++j) out.x[j] = xval_[j];
    out.duals.assign(m_, 0.0);
    out.reduced_costs.assign(n_, 0.0);

    if (out.status == SolveStatus::Optimal) {
      prepare_costs(false);
      y_ = cb_;
      btran(y_);
      for (int i = 0; i < m_; ++i) out.duals[i] = y_[i];
      double dual_obj = 0.0;
      for (int i = 0; i < m_; ++i) dual_obj += y_[i] * rhs_[i];
      for (int j = 0; j < N_; ++j) {
        double d;
        if (vstat_[j] == kBasic) d = 0.0;
        else {
          d = cost_[j];
          A_.for_col(j, [&](int i, double a) { d -= y_[i] * a; });
        }
        if (j < n_) out.reduced_costs[j] = d;
        if (std::abs(d) <= opt_.opt_tol * (1.0 + std::abs(cost_[j]))) continue;
        if (d > 0) dual_obj += std::isfinite(lb_[j]) ? d * lb_[j] : -kInf;
        else dual_obj += std::isfinite(ub_[j]) ? d * ub_[j] : -kInf;
      }
      out.dual_objective = dual_obj;
      out.objective = 0.0;
      for (int j = 0; j < n_; ++j) out.objective += cost_[j] * xval_[j];
    } else if (out.status == SolveStatus::Unbounded) {
      out.objective = -kInf;
    } else {
      out.objective = kInf;
    }

    out.basis.valid = (out.status == SolveStatus::Optimal ||
                       out.status == SolveStatus::Infeasible);
    out.basis.n_vars = n_;
    out.basis.n_rows = m_;
    out.basis.basic.assign(basic_.begin(), basic_.end());
    out.basis.at_upper.assign(N_, 0);
    for (int j = 0; j < N_; ++j)
      if (vstat_[j] == kAtUpper) out.basis.at_upper[j] = 1;
  }

  struct Eta {
    int pos;
    double pivot;
    std::vector<std::pair<int, double>> col;
  };

  const Model& model_;
  LpOptions opt_;
  int n_ = 0, m_ = 0, N_ = 0;
  Csc A_;
  std::vector<double> lb_, ub_, cost_, rhs_;
  std::vector<int> basic_;
  std::vector<uint8_t> vstat_;
  std::vector<double> xval_;
  std::vector<double> dj_;
  bool phase1_ = false;
  Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu_;
  std::vector<Eta> etas_;
  Eigen::VectorXd work_, y_, cb_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

LpSolution solve_lp_bounded(const Model& model, const std::vector<double>& lb,
                            const std::vector<double>& ub, const LpOptions& options,
                            const Basis* warm) {
  Simplex s(model, lb, ub, options);
  return s.solve(warm);
}

LpSolution solve_lp(const Model& model, const LpOptions& options, const Basis* warm) {
  std::vector<double> lb(model.num_vars()), ub(model.num_vars());
  for (int j = 0; j < model.num_vars(); ++j) {
    lb[j] = model.lb(j);
    ub[j] = model.ub(j);
  }
  return solve_lp_bounded(model, lb, ub, options, warm);
}

}  // namespace uc
