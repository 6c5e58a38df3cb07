#include "ngrad/vector.hpp"

#include <cmath>
#include <string>

#include "ngrad/errors.hpp"

namespace ngrad {

namespace {

void require_finite(const std::vector<double>& coords, const char* where) {
  for (double c : coords) {
    if (!std::isfinite(c)) {
      throw ContractViolation(std::string(where) + ": non-finite coordinate");
    }
  }
}

void require_same_dim(const Vector& u, const Vector& v, const char* where) {
  if (u.size() != v.size()) {
    throw ContractViolation(std::string(where) + ": dimension mismatch (" +
                            std::to_string(u.size()) + " vs " + std::to_string(v.size()) + ")");
  }
}

}  // namespace

Vector::Vector(std::size_t dim, double fill) : coords_(dim, fill) {
  if (dim == 0) throw ContractViolation("Vector: dimension must be at least 1");
  require_finite(coords_, "Vector");
}

Vector::Vector(std::initializer_list<double> coords) : Vector(std::vector<double>(coords)) {}

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw ContractViolation("Vector: dimension must be at least 1");
  require_finite(coords_, "Vector");
}

double dot(const Vector& u, const Vector& v) {
  require_same_dim(u, v, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

double l2_norm(const Vector& v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

Vector axpy(double a, const Vector& x, const Vector& y) {
  require_same_dim(x, y, "axpy");
  std::vector<double> out(y.begin(), y.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * x[i];
  return Vector(std::move(out));
}

Vector scale(double a, const Vector& x) {
  std::vector<double> out(x.begin(), x.end());
  for (double& c : out) c *= a;
  return Vector(std::move(out));
}

Vector difference(const Vector& x, const Vector& y) {
  require_same_dim(x, y, "difference");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] - y[i];
  return Vector(std::move(out));
}

double distance(const Vector& x, const Vector& y) { return l2_norm(difference(x, y)); }

WeightedMeanAccumulator::WeightedMeanAccumulator(std::size_t dim) : weighted_sum_(dim, 0.0) {
  if (dim == 0) throw ContractViolation("WeightedMeanAccumulator: dimension must be at least 1");
}

void WeightedMeanAccumulator::push(const Vector& x, double w) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw ContractViolation("WeightedMeanAccumulator::push: weight must be positive and finite");
  }
  if (x.size() != weighted_sum_.size()) {
    throw ContractViolation("WeightedMeanAccumulator::push: dimension mismatch");
  }
  weight_sum_ += w;
  for (std::size_t i = 0; i < x.size(); ++i) weighted_sum_[i] += w * x[i];
  ++count_;
}

Vector WeightedMeanAccumulator::finalize() const {
  if (count_ == 0) throw ContractViolation("WeightedMeanAccumulator::finalize: no points pushed");
  std::vector<double> mean(weighted_sum_);
  for (double& c : mean) c /= weight_sum_;
  return Vector(std::move(mean));
}

}  // namespace ngrad
