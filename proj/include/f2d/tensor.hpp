#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace f2d {

// Dense row-major tensor of doubles with an optional same-shape gradient
// buffer. Rank is anything from 1 (vectors) to 4 (conv kernels).
struct Tensor {
  std::vector<int> shape;
  std::vector<double> v;  // values, size == product(shape)
  std::vector<double> g;  // gradient buffer; empty until ensure_grad()

  Tensor() = default;
  explicit Tensor(std::vector<int> s) : shape(std::move(s)) { v.assign(numel(shape), 0.0); }
  Tensor(std::vector<int> s, double fill) : shape(std::move(s)) { v.assign(numel(shape), fill); }

  static std::size_t numel(const std::vector<int>& s) {
    std::size_t n = 1;
    for (int d : s) n *= static_cast<std::size_t>(d);
    return n;
  }

  std::size_t size() const { return v.size(); }
  int rank() const { return static_cast<int>(shape.size()); }
  int dim(int i) const { return shape[static_cast<std::size_t>(i)]; }

  void ensure_grad() {
    if (g.size() != v.size()) g.assign(v.size(), 0.0);
  }
  void zero_grad() {
    if (!g.empty()) std::fill(g.begin(), g.end(), 0.0);
  }

  double& at(int i) { return v[static_cast<std::size_t>(i)]; }
  double at(int i) const { return v[static_cast<std::size_t>(i)]; }
  double& at(int i, int j) {
    assert(rank() == 2);
    return v[static_cast<std::size_t>(i) * dim(1) + j];
  }
  double at(int i, int j) const {
    assert(rank() == 2);
    return v[static_cast<std::size_t>(i) * dim(1) + j];
  }
  double& at(int c, int i, int j) {
    assert(rank() == 3);
    return v[(static_cast<std::size_t>(c) * dim(1) + i) * dim(2) + j];
  }
  double at(int c, int i, int j) const {
    assert(rank() == 3);
    return v[(static_cast<std::size_t>(c) * dim(1) + i) * dim(2) + j];
  }
  double& at(int n, int c, int i, int j) {
    assert(rank() == 4);
    return v[((static_cast<std::size_t>(n) * dim(1) + c) * dim(2) + i) * dim(3) + j];
  }
  double at(int n, int c, int i, int j) const {
    assert(rank() == 4);
    return v[((static_cast<std::size_t>(n) * dim(1) + c) * dim(2) + i) * dim(3) + j];
  }
};

inline bool same_shape(const Tensor& a, const Tensor& b) { return a.shape == b.shape; }

}  // namespace f2d
