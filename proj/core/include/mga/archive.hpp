#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mga {

struct SolutionRecord {
  int iteration = -1;
  std::string method;
  std::vector<double> x;                 // full decision vector
  std::vector<double> mga_point;         // projection onto the MGA variables
  std::vector<double> objective_vector;  // generating weights (minimization)
  double cost = 0.0;                     // base objective value
  std::int64_t formulate_ns = 0;
  std::int64_t solve_ns = 0;
  bool unique_flag = false;
};

// Ordered solution ledger with tolerance-based uniqueness on the MGA-space
// projection (L-inf against each previously unique representative).
class SolutionArchive {
 public:
  explicit SolutionArchive(double dedup_tol = 1e-6);

  // stores the record, stamps unique_flag, and returns whether it was unique
  bool insert(SolutionRecord rec);

  const std::vector<SolutionRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  std::size_t unique_count() const { return unique_idx_.size(); }
  double dedup_tol() const { return dedup_tol_; }

  std::vector<std::vector<double>> all_projections() const;
  std::vector<std::vector<double>> unique_projections() const;

 private:
  double dedup_tol_;
  std::vector<SolutionRecord> records_;
  std::vector<std::size_t> unique_idx_;  // indices of unique representatives
};

}  // namespace mga
