// Copyright 2026 The tsst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <random>
#include <utility>

#include "tsst/common.hpp"

namespace tsst {

// Dense N-d arrays with tape-based dynamic reverse-mode autodiff.
//
// A Tensor is a value-semantic handle to a heap node holding shape, values
// and (lazily) a same-shape gradient accumulator. Tensors are immutable once
// they participate in the graph; only leaf construction and optimizer code
// touch raw storage. Executed primitives push a backward closure onto a
// thread-local tape; backward() replays the tape in reverse, which visits
// each recorded operation exactly once and leaves every reachable
// requires-grad tensor with a fully accumulated gradient.

template <typename T>
struct TensorNode {
  Shape shape;
  std::vector<T> value;
  std::vector<T> grad;  // empty until first needed; then zero-filled, same size as value
  bool requires_grad = false;

  std::vector<T>& ensure_grad() {
    if (grad.size() != value.size()) grad.assign(value.size(), T(0));
    return grad;
  }
};

namespace autodiff {

/// Whether newly executed primitives are recorded. Thread-local.
bool& grad_mode();

struct NoGradGuard {
  NoGradGuard() : prev_(grad_mode()) { grad_mode() = false; }
  ~NoGradGuard() { grad_mode() = prev_; }
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool prev_;
};

}  // namespace autodiff

inline bool& autodiff::grad_mode() {
  thread_local bool enabled = true;
  return enabled;
}

template <typename T>
class Tensor {
 public:
  Tensor() = default;

  Tensor(Shape shape, std::vector<T> values, bool requires_grad = false) {
    if (numel(shape) != values.size())
      throw ShapeError("tensor: data length " + std::to_string(values.size()) +
                       " does not match shape " + shape_str(shape));
    node_ = std::make_shared<TensorNode<T>>();
    node_->shape = std::move(shape);
    node_->value = std::move(values);
    node_->requires_grad = requires_grad;
  }

  static Tensor zeros(Shape shape, bool requires_grad = false) {
    std::size_t n = numel(shape);
    return Tensor(std::move(shape), std::vector<T>(n, T(0)), requires_grad);
  }

  static Tensor full(Shape shape, T v, bool requires_grad = false) {
    std::size_t n = numel(shape);
    return Tensor(std::move(shape), std::vector<T>(n, v), requires_grad);
  }

  static Tensor scalar(T v, bool requires_grad = false) {
    return Tensor({1}, {v}, requires_grad);
  }

  template <typename Rng>
  static Tensor randn(Shape shape, Rng& rng, T stddev = T(1), bool requires_grad = false) {
    std::normal_distribution<double> dist(0.0, 1.0);
    std::size_t n = numel(shape);
    std::vector<T> v(n);
    for (auto& x : v) x = static_cast<T>(dist(rng)) * stddev;
    return Tensor(std::move(shape), std::move(v), requires_grad);
  }

  template <typename Rng>
  static Tensor rand_uniform(Shape shape, Rng& rng, T lo, T hi, bool requires_grad = false) {
    std::uniform_real_distribution<double> dist(static_cast<double>(lo), static_cast<double>(hi));
    std::size_t n = numel(shape);
    std::vector<T> v(n);
    for (auto& x : v) x = static_cast<T>(dist(rng));
    return Tensor(std::move(shape), std::move(v), requires_grad);
  }

  bool defined() const { return node_ != nullptr; }

  const Shape& shape() const { return node_->shape; }
  std::size_t rank() const { return node_->shape.size(); }
  std::size_t dim(std::size_t i) const { return node_->shape.at(i); }
  std::size_t size() const { return node_->value.size(); }

  const std::vector<T>& values() const { return node_->value; }

  /// Mutable storage access. Legitimate only for leaves that have not yet
  /// been consumed by an operation (parameter init, optimizer updates).
  std::vector<T>& raw() { return node_->value; }

  T item() const {
    if (size() != 1) throw ShapeError("item(): tensor has " + std::to_string(size()) + " elements");
    return node_->value[0];
  }

  T at(std::size_t i) const { return node_->value.at(i); }

  bool requires_grad() const { return node_ && node_->requires_grad; }
  Tensor& set_requires_grad(bool rg) {
    node_->requires_grad = rg;
    return *this;
  }

  bool has_grad() const { return node_ && node_->grad.size() == node_->value.size(); }
  const std::vector<T>& grad() const {
    if (!has_grad()) throw Error("grad(): no gradient accumulated");
    return node_->grad;
  }
  std::vector<T>& mutable_grad() { return node_->ensure_grad(); }
  void zero_grad() {
    if (node_) node_->grad.clear();
  }

  /// A new leaf sharing no graph history with this tensor.
  Tensor detach() const {
    Tensor out(node_->shape, node_->value, false);
    return out;
  }

  Tensor clone_leaf(bool requires_grad) const {
    return Tensor(node_->shape, node_->value, requires_grad);
  }

  const std::shared_ptr<TensorNode<T>>& node() const { return node_; }

 private:
  std::shared_ptr<TensorNode<T>> node_;
};

// ---------------------------------------------------------------------------
// Tape
// ---------------------------------------------------------------------------

template <typename T>
class Tape {
 public:
  struct Entry {
    const char* op;
    std::vector<std::shared_ptr<TensorNode<T>>> inputs;
    std::shared_ptr<TensorNode<T>> output;
    std::function<void()> backward;
  };

  static Tape& current() {
    thread_local Tape tape;
    return tape;
  }

  void record(const char* op, std::vector<std::shared_ptr<TensorNode<T>>> inputs,
              std::shared_ptr<TensorNode<T>> output, std::function<void()> backward) {
    entries_.push_back(Entry{op, std::move(inputs), std::move(output), std::move(backward)});
  }

  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  void clear() { entries_.clear(); }

  /// Reverse replay from a scalar loss. Each recorded operation is visited
  /// exactly once; afterwards the tape is cleared.
  void backward(const Tensor<T>& loss) {
    if (loss.size() != 1) throw ShapeError("backward(): loss must be scalar");
    if (!loss.requires_grad()) throw Error("backward(): loss does not require grad");
    loss.node()->ensure_grad();
    loss.node()->grad[0] += T(1);
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
      if (it->backward) it->backward();
    }
    entries_.clear();
  }

 private:
  std::vector<Entry> entries_;
};

template <typename T>
inline void backward(const Tensor<T>& loss) {
  Tape<T>::current().backward(loss);
}

namespace detail {

template <typename T>
inline bool should_record(std::initializer_list<const Tensor<T>*> inputs) {
  if (!autodiff::grad_mode()) return false;
  for (const Tensor<T>* t : inputs)
    if (t->defined() && t->requires_grad()) return true;
  return false;
}

}  // namespace detail

}  // namespace tsst
