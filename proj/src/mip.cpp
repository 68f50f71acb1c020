#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

#include "uc/model.hpp"

// Best-first branch-and-bound with depth-first plunging. Nodes carry their
// parent basis so LP re-solves after a single bound change stay cheap.

namespace uc {

namespace {

struct Node {
  double bound;  // parent LP bound (valid lower bound for the subtree)
  long seq;      // insertion order, for deterministic tie-breaking
  std::vector<std::pair<int, std::pair<double, double>>> fixes;
  Basis basis;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;  // min-heap on bound
    return a.seq > b.seq;
  }
};

class BranchAndBound {
 public:
  BranchAndBound(const Model& model, const MipOptions& opt) : model_(model), opt_(opt) {
    n_ = model.num_vars();
    base_lb_.resize(n_);
    base_ub_.resize(n_);
    for (int j = 0; j < n_; ++j) {
      base_lb_[j] = model.lb(j);
      base_ub_[j] = model.ub(j);
    }
    for (int j = 0; j < n_; ++j)
      if (model.is_integer(j)) int_vars_.push_back(j);
    start_ = std::chrono::steady_clock::now();
  }

  MipSolution run() {
    try_warm_start();

    Node root;
    root.bound = -kInf;
    root.seq = seq_++;
    queue_.push(root);

    while (!queue_.empty()) {
      if (hit_limit()) {
        limit_hit_ = true;
        break;
      }
      Node node = queue_.top();
      queue_.pop();
      if (out_.has_incumbent && node.bound >= out_.objective - opt_.abs_gap) continue;
      dive(std::move(node));
      active_bound_ = kInf;
      if (limit_hit_ || gap_closed()) break;
    }

    out_.bound = global_bound();
    if (limit_hit_) {
      out_.status = SolveStatus::Limit;
    } else if (out_.has_incumbent) {
      out_.status = SolveStatus::Optimal;
      if (queue_.empty()) out_.bound = out_.objective;
    } else {
      out_.status = SolveStatus::Infeasible;
    }
    record_trace();
    return out_;
  }

 private:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  bool hit_limit() {
    if (opt_.max_nodes >= 0 && out_.nodes >= opt_.max_nodes) return true;
    return std::isfinite(opt_.time_limit) && elapsed() > opt_.time_limit;
  }

  bool gap_closed() const {
    if (!out_.has_incumbent) return false;
    double lb = global_bound();
    double denom = std::max(std::abs(out_.objective), 1e-10);
    return (out_.objective - lb) <= std::max(opt_.abs_gap, opt_.rel_gap * denom);
  }

  double global_bound() const {
    // with a best-first queue the smallest open bound is at the top
    double lb = kInf;
    if (!queue_.empty()) lb = std::min(lb, static_cast<double>(queue_.top().bound));
    lb = std::min(lb, active_bound_);
    // the root LP value is a floor for every node, including -inf placeholders
    if (root_bound_known_ && lb < root_bound_) lb = root_bound_;
    if (out_.has_incumbent) lb = std::min(lb, out_.objective);
    return lb;
  }

  void try_warm_start() {
    if (opt_.warm_start == nullptr) return;
    if (static_cast<int>(opt_.warm_start->size()) != n_) return;
    std::vector<double> x = *opt_.warm_start;
    for (int j : int_vars_) x[j] = std::round(x[j]);
    for (int j = 0; j < n_; ++j)
      x[j] = std::min(std::max(x[j], base_lb_[j]), base_ub_[j]);
    if (model_.max_violation(x) > 1e-6) return;
    double obj = model_.objective_value(x);
    accept_incumbent(x, obj);
  }

  void accept_incumbent(const std::vector<double>& x, double obj) {
    if (out_.has_incumbent && obj >= out_.objective - 1e-12) return;
    out_.has_incumbent = true;
    out_.objective = obj;
    out_.x = x;
    out_.trace.push_back({elapsed(), obj, global_bound()});
  }

  void record_trace() {
    out_.trace.push_back({elapsed(), out_.has_incumbent ? out_.objective : kInf,
                          out_.bound});
  }

  int pick_branching_var(const std::vector<double>& x) const {
    int best = -1;
    double best_frac = opt_.int_tol;
    for (int j : int_vars_) {
      double f = std::abs(x[j] - std::round(x[j]));
      if (f > best_frac) {
        best_frac = f;
        best = j;
      }
    }
    return best;
  }

  void dive(Node node) {
    std::vector<double> lb = base_lb_, ub = base_ub_;
    for (const auto& [j, b] : node.fixes) {
      lb[j] = b.first;
      ub[j] = b.second;
    }
    Basis basis = node.basis;
    active_bound_ = node.bound;

    while (true) {
      if (hit_limit()) {
        limit_hit_ = true;
        // the node being processed is still open; fold its bound into the queue
        queue_.push(Node{node.bound, seq_++, node.fixes, basis});
        return;
      }
      ++out_.nodes;

      LpOptions lpopt = opt_.lp;
      if (std::isfinite(opt_.time_limit))
        lpopt.time_limit = std::max(1.0, opt_.time_limit - elapsed());
      LpSolution lp = solve_lp_bounded(model_, lb, ub, lpopt, basis.valid ? &basis : nullptr);
      if (lp.status == SolveStatus::Limit)
        throw std::runtime_error("branch-and-bound: node LP hit an internal limit");
      if (lp.status == SolveStatus::Unbounded)
        throw std::runtime_error("branch-and-bound: node LP unbounded");
      if (lp.status == SolveStatus::Infeasible) return;

      if (!root_bound_known_) {
        root_bound_known_ = true;
        root_bound_ = lp.objective;
      }
      node.bound = std::max(node.bound, lp.objective);
      active_bound_ = node.bound;
      basis = lp.basis;

      if (out_.has_incumbent && lp.objective >= out_.objective - opt_.abs_gap) return;

      int j = pick_branching_var(lp.x);
      if (j < 0) {
        std::vector<double> x = lp.x;
        for (int v : int_vars_) x[v] = std::round(x[v]);
        accept_incumbent(x, lp.objective);
        return;
      }

      double frac = lp.x[j];
      double floor_val = std::floor(frac);
      bool go_up = (frac - floor_val) >= 0.5;

      // sibling keeps the parent's LP bound and basis
      Node sibling;
      sibling.bound = lp.objective;
      sibling.seq = seq_++;
      sibling.fixes = node.fixes;
      sibling.basis = basis;
      if (go_up)
        sibling.fixes.emplace_back(j, std::make_pair(lb[j], floor_val));
      else
        sibling.fixes.emplace_back(j, std::make_pair(floor_val + 1.0, ub[j]));
      queue_.push(std::move(sibling));

      if (go_up) {
        node.fixes.emplace_back(j, std::make_pair(floor_val + 1.0, ub[j]));
        lb[j] = floor_val + 1.0;
      } else {
        node.fixes.emplace_back(j, std::make_pair(lb[j], floor_val));
        ub[j] = floor_val;
      }
    }
  }

  const Model& model_;
  MipOptions opt_;
  int n_ = 0;
  std::vector<int> int_vars_;
  std::vector<double> base_lb_, base_ub_;
  std::priority_queue<Node, std::vector<Node>, NodeOrder> queue_;
  MipSolution out_;
  long seq_ = 0;
  bool root_bound_known_ = false;
  bool limit_hit_ = false;
  double root_bound_ = -kInf;
  double active_bound_ = kInf;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

MipSolution solve_mip(const Model& model, const MipOptions& options) {
  BranchAndBound bb(model, options);
  return bb.run();
}

}  // namespace uc
