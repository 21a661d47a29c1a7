// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

// Exact scalars, frame vectors, endomorphisms, forms and dense fixed-rank
// tensors. Endomorphism entry(k, i) is the coefficient of e_k in A e_i.

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccm {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using FrameVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Endomorphism = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Values of a 1-form on the frame vectors; w(x) = w * x.
template <typename Scalar>
using OneForm = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

/// Antisymmetric matrix of values w(e_i, e_j).
template <typename Scalar>
using TwoForm = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Symmetric bilinear form (Ricci tensor and friends).
template <typename Scalar>
using BilinearForm = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense tensor with Rank indices, each ranging over [0, dim).
/// Storage is row-major: the last index varies fastest.
template <typename Scalar, std::size_t Rank>
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(int dim)
      : dim_(dim), data_(static_cast<std::size_t>(power(dim)), Scalar(0)) {
    if (dim < 0) throw DimensionError("tensor dimension must be non-negative");
  }

  int dim() const { return dim_; }
  static constexpr std::size_t rank() { return Rank; }

  template <typename... Idx>
  Scalar& operator()(Idx... idx) {
    static_assert(sizeof...(Idx) == Rank, "wrong number of tensor indices");
    return data_[offset({static_cast<int>(idx)...})];
  }
  template <typename... Idx>
  const Scalar& operator()(Idx... idx) const {
    static_assert(sizeof...(Idx) == Rank, "wrong number of tensor indices");
    return data_[offset({static_cast<int>(idx)...})];
  }

  const Scalar& at(const std::array<int, Rank>& idx) const { return data_[checked_offset(idx)]; }
  Scalar& at(const std::array<int, Rank>& idx) { return data_[checked_offset(idx)]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  const std::vector<Scalar>& data() const { return data_; }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  static long power(int dim) {
    long p = 1;
    for (std::size_t r = 0; r < Rank; ++r) p *= dim;
    return p;
  }
  std::size_t offset(const std::array<int, Rank>& idx) const {
    std::size_t off = 0;
    for (int i : idx) off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    return off;
  }
  std::size_t checked_offset(const std::array<int, Rank>& idx) const {
    for (int i : idx)
      if (i < 0 || i >= dim_) throw DimensionError("tensor index out of range");
    return offset(idx);
  }

  int dim_ = 0;
  std::vector<Scalar> data_;
};

template <typename Scalar>
using Tensor3 = Tensor<Scalar, 3>;
template <typename Scalar>
using Tensor4 = Tensor<Scalar, 4>;

namespace detail {

template <typename Scalar, std::size_t Rank, std::size_t Depth>
void contract_rec(const Tensor<Scalar, Rank>& t,
                  const std::array<const FrameVector<Scalar>*, Rank>& vs,
                  std::array<int, Rank>& idx, const Scalar& weight, Scalar& acc) {
  if constexpr (Depth == Rank) {
    acc += weight * t.at(idx);
  } else {
    const auto& v = *vs[Depth];
    for (int i = 0; i < t.dim(); ++i) {
      if (v(i) == 0) continue;
      idx[Depth] = i;
      contract_rec<Scalar, Rank, Depth + 1>(t, vs, idx, weight * v(i), acc);
    }
  }
}

}  // namespace detail

/// Full contraction t(v_0, ..., v_{Rank-1}); zero coefficients are skipped,
/// so frame vectors cost a single lookup.
template <typename Scalar, std::size_t Rank>
Scalar contract(const Tensor<Scalar, Rank>& t,
                const std::array<const FrameVector<Scalar>*, Rank>& vs) {
  for (const auto* v : vs)
    if (v->size() != t.dim()) throw DimensionError("contraction vector length mismatch");
  std::array<int, Rank> idx{};
  Scalar acc(0);
  detail::contract_rec<Scalar, Rank, 0>(t, vs, idx, Scalar(1), acc);
  return acc;
}

template <typename Scalar>
FrameVector<Scalar> basis_vector(int dim, int i) {
  if (i < 0 || i >= dim) throw DimensionError("frame index out of range");
  return FrameVector<Scalar>::Unit(dim, i);
}

/// g(x, y) for the orthonormal frame metric.
template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar inner_product(const Eigen::MatrixBase<DerivedX>& x,
                                        const Eigen::MatrixBase<DerivedY>& y) {
  if (x.size() != y.size())
    throw DimensionError("inner_product: length " + std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()));
  const auto& xv = x.derived().eval();
  const auto& yv = y.derived().eval();
  typename DerivedX::Scalar acc(0);
  for (Eigen::Index i = 0; i < xv.size(); ++i)
    if (xv(i) != 0 && yv(i) != 0) acc += xv(i) * yv(i);
  return acc;
}

template <typename Scalar>
FrameVector<Scalar> vector_combine(
    const std::vector<std::pair<Scalar, FrameVector<Scalar>>>& terms) {
  if (terms.empty()) throw DimensionError("vector_combine: empty combination");
  const auto dim = terms.front().second.size();
  FrameVector<Scalar> out = FrameVector<Scalar>::Zero(dim);
  for (const auto& [a, v] : terms) {
    if (v.size() != dim) throw DimensionError("vector_combine: length mismatch");
    if (a != 0) out += a * v;
  }
  return out;
}

/// ω(x) for a 1-form.
template <typename Scalar, typename Derived>
Scalar apply_oneform(const OneForm<Scalar>& w, const Eigen::MatrixBase<Derived>& x) {
  if (w.size() != x.size()) throw DimensionError("apply_oneform: length mismatch");
  const auto& xv = x.derived().eval();
  Scalar acc(0);
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w(i) != 0 && xv(i) != 0) acc += w(i) * xv(i);
  return acc;
}

/// Outer product a ⊗ X, i.e. the endomorphism Y ↦ a(Y) X.
template <typename Scalar>
Endomorphism<Scalar> tensor_product(const OneForm<Scalar>& a, const FrameVector<Scalar>& x) {
  if (a.size() != x.size()) throw DimensionError("tensor_product: length mismatch");
  return x * a;
}

template <typename Derived>
bool is_antisymmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

}  // namespace ccm
