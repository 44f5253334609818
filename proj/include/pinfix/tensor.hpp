#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pinfix/errors.hpp"
#include "pinfix/rng.hpp"

namespace pinfix {

// Toggles NaN/Inf validation after every graph op (tests switch it on).
void set_debug_checks(bool on);
bool debug_checks();

// Dense row-major tensor of doubles. Gradients live next to the values so a
// parameter and its gradient travel together through the optimizer.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> data;
  std::vector<double> grad;  // empty or same length as data

  Tensor() = default;

  static Tensor zeros(std::vector<int> shape);
  static Tensor full(std::vector<int> shape, double value);
  static Tensor from(std::vector<int> shape, std::vector<double> values);
  static Tensor randn(std::vector<int> shape, Rng& rng, double stddev);

  int64_t numel() const;
  bool same_shape(const Tensor& o) const { return shape == o.shape; }
  std::string shape_str() const;

  // 2-D accessors; most of the math is matrix-shaped.
  int rows() const;
  int cols() const;
  double& at(int r, int c) { return data[static_cast<size_t>(r) * cols() + c]; }
  double at(int r, int c) const { return data[static_cast<size_t>(r) * cols() + c]; }

  void ensure_grad();     // allocate zero grad if absent
  void zero_grad();       // drop gradient
  bool has_grad() const { return !grad.empty(); }
  void check_finite(const char* what) const;
};

// Named, freezable parameter collection with Adam state and a step counter.
class ParameterStore {
 public:
  struct Entry {
    Tensor tensor;
    bool frozen = false;
    // Adam moments, allocated on first optimizer step.
    std::vector<double> adam_m;
    std::vector<double> adam_v;
  };

  Tensor& create(const std::string& name, std::vector<int> shape, Rng& rng,
                 double init_stddev);
  Tensor& create_zeros(const std::string& name, std::vector<int> shape);
  Tensor& create_full(const std::string& name, std::vector<int> shape, double value);

  bool contains(const std::string& name) const { return entries_.count(name) > 0; }
  Tensor& get(const std::string& name);
  const Tensor& get(const std::string& name) const;
  Entry& entry(const std::string& name);

  void set_frozen(const std::string& name, bool frozen);
  void freeze_prefix(const std::string& prefix);
  bool frozen(const std::string& name) const;
  bool all_frozen_under(const std::string& prefix) const;

  void clear_grads();

  int64_t step() const { return step_; }
  void set_step(int64_t s) { step_ = s; }
  void bump_step() { ++step_; }

  // Deterministic name order (std::map).
  const std::map<std::string, Entry>& entries() const { return entries_; }
  std::map<std::string, Entry>& entries() { return entries_; }

  int64_t total_parameters() const;

 private:
  std::map<std::string, Entry> entries_;
  int64_t step_ = 0;
};

}  // namespace pinfix
