#pragma once

#include <chrono>
#include <cmath>
#include <string>
#include <vector>

#include "uc/types.hpp"

namespace uc {

/// (UB - LB) / UB, clamped to 0 on numerical crossover. UB = 0 with LB caught
/// up counts as converged; an infinite UB gives an infinite gap.
double optimality_gap(double ub, double lb);

struct TraceRecord {
  double wall_time_s = 0.0;
  int iteration = 0;
  std::string event;
  double best_ub = 0.0;
  double best_lb = 0.0;
  double gap = 0.0;
};

/// Timestamped sequence of incumbent/bound pairs for convergence reporting.
class SolveTrace {
 public:
  SolveTrace() : start_(std::chrono::steady_clock::now()) {}

  double elapsed_s() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void add(int iteration, const std::string& event, double best_ub, double best_lb) {
    add_at(elapsed_s(), iteration, event, best_ub, best_lb);
  }

  void add_at(double wall_time_s, int iteration, const std::string& event, double best_ub,
              double best_lb) {
    records_.push_back(TraceRecord{wall_time_s, iteration, event, best_ub, best_lb,
                                   optimality_gap(best_ub, best_lb)});
  }

  const std::vector<TraceRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }

 private:
  std::chrono::steady_clock::time_point start_;
  std::vector<TraceRecord> records_;
};

/// Full solution of a run: schedules plus per-scenario recourse.
struct UcSolution {
  std::vector<Schedule> schedules;
  std::vector<SecondStageSolution> second_stage;
  double objective = std::numeric_limits<double>::infinity();
  bool valid = false;
};

/// Summary mirroring the benchmark table layout: times split into master
/// ("outer") and subproblem/pricing ("inner") work.
struct SolveReport {
  std::string algorithm;
  std::string status;
  double objective = std::numeric_limits<double>::infinity();
  double lower_bound = -std::numeric_limits<double>::infinity();
  double gap = std::numeric_limits<double>::infinity();
  double time_outer_s = 0.0;
  double time_inner_s = 0.0;
  double time_total_s = 0.0;
  int iterations = 0;
  int n_scenarios = 0;
  long seed = 0;
};

struct SolveResult {
  UcSolution solution;
  SolveReport report;
  SolveTrace trace;
};

/// Accumulates wall time across scoped sections.
class SectionTimer {
 public:
  void add(double s) { total_ += s; }
  double total() const { return total_; }

  class Scope {
   public:
    explicit Scope(SectionTimer& t)
        : t_(t), start_(std::chrono::steady_clock::now()) {}
    ~Scope() {
      t_.add(std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count());
    }

   private:
    SectionTimer& t_;
    std::chrono::steady_clock::time_point start_;
  };

 private:
  double total_ = 0.0;
};

}  // namespace uc
