#include "pinfix/tensor.hpp"

#include <cmath>
#include <sstream>

namespace pinfix {

namespace {
bool g_debug_checks = false;

int64_t shape_numel(const std::vector<int>& shape) {
  int64_t n = 1;
  for (int d : shape) {
    if (d < 0) throw ShapeError("negative dimension");
    n *= d;
  }
  return n;
}
}  // namespace

void set_debug_checks(bool on) { g_debug_checks = on; }
bool debug_checks() { return g_debug_checks; }

Tensor Tensor::zeros(std::vector<int> shape) {
  Tensor t;
  int64_t n = shape_numel(shape);
  t.shape = std::move(shape);
  t.data.assign(static_cast<size_t>(n), 0.0);
  return t;
}

Tensor Tensor::full(std::vector<int> shape, double value) {
  Tensor t = zeros(std::move(shape));
  for (double& x : t.data) x = value;
  t.check_finite("Tensor::full");
  return t;
}

Tensor Tensor::from(std::vector<int> shape, std::vector<double> values) {
  int64_t n = shape_numel(shape);
  if (n != static_cast<int64_t>(values.size()))
    throw ShapeError("Tensor::from: value count does not match shape");
  Tensor t;
  t.shape = std::move(shape);
  t.data = std::move(values);
  t.check_finite("Tensor::from");
  return t;
}

Tensor Tensor::randn(std::vector<int> shape, Rng& rng, double stddev) {
  Tensor t = zeros(std::move(shape));
  for (double& x : t.data) x = rng.normal(0.0, stddev);
  return t;
}

int64_t Tensor::numel() const { return static_cast<int64_t>(data.size()); }

std::string Tensor::shape_str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < shape.size(); ++i) os << (i ? "x" : "") << shape[i];
  os << "]";
  return os.str();
}

int Tensor::rows() const {
  if (shape.size() != 2) throw ShapeError("expected 2-D tensor, got " + shape_str());
  return shape[0];
}

int Tensor::cols() const {
  if (shape.size() != 2) throw ShapeError("expected 2-D tensor, got " + shape_str());
  return shape[1];
}

void Tensor::ensure_grad() {
  if (grad.empty()) grad.assign(data.size(), 0.0);
}

void Tensor::zero_grad() { grad.clear(); }

void Tensor::check_finite(const char* what) const {
  for (double x : data) {
    if (!std::isfinite(x)) throw Error(std::string(what) + ": non-finite value");
  }
}

Tensor& ParameterStore::create(const std::string& name, std::vector<int> shape,
                               Rng& rng, double init_stddev) {
  if (entries_.count(name)) throw StateError("parameter already exists: " + name);
  Entry e;
  e.tensor = Tensor::randn(std::move(shape), rng, init_stddev);
  return entries_.emplace(name, std::move(e)).first->second.tensor;
}

Tensor& ParameterStore::create_zeros(const std::string& name, std::vector<int> shape) {
  if (entries_.count(name)) throw StateError("parameter already exists: " + name);
  Entry e;
  e.tensor = Tensor::zeros(std::move(shape));
  return entries_.emplace(name, std::move(e)).first->second.tensor;
}

Tensor& ParameterStore::create_full(const std::string& name, std::vector<int> shape,
                                    double value) {
  if (entries_.count(name)) throw StateError("parameter already exists: " + name);
  Entry e;
  e.tensor = Tensor::full(std::move(shape), value);
  return entries_.emplace(name, std::move(e)).first->second.tensor;
}

Tensor& ParameterStore::get(const std::string& name) {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw IndexError("no such parameter: " + name);
  return it->second.tensor;
}

const Tensor& ParameterStore::get(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw IndexError("no such parameter: " + name);
  return it->second.tensor;
}

ParameterStore::Entry& ParameterStore::entry(const std::string& name) {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw IndexError("no such parameter: " + name);
  return it->second;
}

void ParameterStore::set_frozen(const std::string& name, bool frozen) {
  entry(name).frozen = frozen;
}

void ParameterStore::freeze_prefix(const std::string& prefix) {
  for (auto& [name, e] : entries_) {
    if (name.rfind(prefix, 0) == 0) e.frozen = true;
  }
}

bool ParameterStore::frozen(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw IndexError("no such parameter: " + name);
  return it->second.frozen;
}

bool ParameterStore::all_frozen_under(const std::string& prefix) const {
  bool any = false;
  for (const auto& [name, e] : entries_) {
    if (name.rfind(prefix, 0) == 0) {
      any = true;
      if (!e.frozen) return false;
    }
  }
  return any;
}

void ParameterStore::clear_grads() {
  for (auto& [name, e] : entries_) e.tensor.zero_grad();
}

int64_t ParameterStore::total_parameters() const {
  int64_t n = 0;
  for (const auto& [name, e] : entries_) n += e.tensor.numel();
  return n;
}

}  // namespace pinfix
