#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ngrad {

/// Dense real vector with finite coordinates. The dimension is fixed at
/// construction and every binary operation requires matching dimensions.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim, double fill = 0.0);
  Vector(std::initializer_list<double> coords);
  explicit Vector(std::vector<double> coords);

  static Vector zeros(std::size_t dim) { return Vector(dim); }

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> coords_;
};

double dot(const Vector& u, const Vector& v);
double l2_norm(const Vector& v);

/// y + a*x
Vector axpy(double a, const Vector& x, const Vector& y);

/// a*x
Vector scale(double a, const Vector& x);

/// x - y
Vector difference(const Vector& x, const Vector& y);

double distance(const Vector& x, const Vector& y);

/// Streaming weighted mean: keeps sum(w_i) and sum(w_i x_i).
class WeightedMeanAccumulator {
 public:
  explicit WeightedMeanAccumulator(std::size_t dim);

  /// w must be positive and finite.
  void push(const Vector& x, double w);

  double weight_sum() const noexcept { return weight_sum_; }
  std::size_t count() const noexcept { return count_; }
  std::span<const double> weighted_point_sum() const noexcept { return weighted_sum_; }

  /// Throws ContractViolation when nothing has been pushed.
  Vector finalize() const;

 private:
  double weight_sum_ = 0.0;
  std::size_t count_ = 0;
  std::vector<double> weighted_sum_;
};

}  // namespace ngrad
