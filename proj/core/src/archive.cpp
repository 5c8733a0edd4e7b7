#include "mga/archive.hpp"

#include <cmath>
#include <stdexcept>

namespace mga {

SolutionArchive::SolutionArchive(double dedup_tol) : dedup_tol_(dedup_tol) {
  if (!(dedup_tol > 0.0)) throw std::invalid_argument("SolutionArchive: dedup_tol must be > 0");
}

bool SolutionArchive::insert(SolutionRecord rec) {
  bool unique = true;
  for (std::size_t idx : unique_idx_) {
    const auto& q = records_[idx].mga_point;
    if (q.size() != rec.mga_point.size())
      throw std::invalid_argument("SolutionArchive: projection length mismatch");
    double d = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k)
      d = std::max(d, std::abs(q[k] - rec.mga_point[k]));
    if (d <= dedup_tol_) {
      unique = false;
      break;
    }
  }
  rec.unique_flag = unique;
  records_.push_back(std::move(rec));
  if (unique) unique_idx_.push_back(records_.size() - 1);
  return unique;
}

std::vector<std::vector<double>> SolutionArchive::all_projections() const {
  std::vector<std::vector<double>> out;
  out.reserve(records_.size());
  for (const auto& r : records_) out.push_back(r.mga_point);
  return out;
}

std::vector<std::vector<double>> SolutionArchive::unique_projections() const {
  std::vector<std::vector<double>> out;
  out.reserve(unique_idx_.size());
  for (std::size_t idx : unique_idx_) out.push_back(records_[idx].mga_point);
  return out;
}

}  // namespace mga
