#pragma once

#include "domclq/graph.hpp"

#include <span>
#include <vector>

namespace domclq {

// Per-vertex Bernoulli parameters p_1..p_n, each in [0, 1].
class ProbMap {
 public:
  ProbMap() = default;
  // Throws domclq::Error if any entry is outside [0, 1] or NaN.
  explicit ProbMap(std::vector<double> p);

  static ProbMap uniform(int n, double p);

  int size() const noexcept { return static_cast<int>(p_.size()); }
  double operator[](Vertex v) const noexcept { return p_[static_cast<std::size_t>(v - 1)]; }
  std::span<const double> values() const noexcept { return p_; }

  friend bool operator==(const ProbMap&, const ProbMap&) = default;

 private:
  std::vector<double> p_;
};

}  // namespace domclq
