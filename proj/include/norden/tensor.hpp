#pragma once

// Dense multi-index tensors over a fixed frame of dimension `dim`.
//
// Components are stored row-major by index order: the component at
// (i_0, ..., i_{r-1}) lives at sum_s i_s * dim^(r-1-s). Values are immutable
// once constructed; every operation returns a new tensor.

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "norden/error.hpp"

namespace norden {

using Index = std::size_t;

class DenseTensor {
 public:
  /// Rank-0 zero over a one-dimensional frame.
  DenseTensor();

  /// Throws ArgumentError if components.size() != dim^rank, NumericError if
  /// any component is not finite.
  DenseTensor(std::size_t dim, std::size_t rank, std::vector<double> components);

  static DenseTensor zeros(std::size_t dim, std::size_t rank);
  static DenseTensor scalar(std::size_t dim, double value);
  static DenseTensor identity(std::size_t dim);
  static DenseTensor diagonal(std::span<const double> entries);
  /// Row-major matrix from nested rows; all rows must have rows.size() entries.
  static DenseTensor matrix(std::initializer_list<std::initializer_list<double>> rows);

  /// Builds a tensor by evaluating fn(std::span<const Index>) at every
  /// multi-index in storage order.
  template <class Fn>
  static DenseTensor generate(std::size_t dim, std::size_t rank, Fn&& fn);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return components_.size(); }
  std::span<const double> components() const { return components_; }

  /// Stride of index slot `slot` in the flat storage.
  std::size_t stride(std::size_t slot) const;

  template <class... I>
  double operator()(I... idx) const {
    static_assert((std::is_convertible_v<I, std::size_t> && ...));
    const std::array<std::size_t, sizeof...(I)> a{static_cast<std::size_t>(idx)...};
    return at(a);
  }

  double at(std::span<const Index> idx) const;
  double value() const;  // rank 0 only
  double max_abs() const;

  friend bool operator==(const DenseTensor&, const DenseTensor&) = default;

 private:
  std::size_t offset(std::span<const Index> idx) const;

  std::size_t dim_ = 1;
  std::size_t rank_ = 0;
  std::vector<double> components_;
};

/// dim^rank, throwing ArgumentError on overflow-scale requests.
std::size_t tensor_size(std::size_t dim, std::size_t rank);

/// Advances a multi-index odometer-style; returns false after the last index.
bool next_index(std::span<Index> idx, std::size_t dim);

template <class Fn>
DenseTensor DenseTensor::generate(std::size_t dim, std::size_t rank, Fn&& fn) {
  std::vector<double> out(tensor_size(dim, rank));
  std::vector<Index> idx(rank, 0);
  std::size_t k = 0;
  do {
    out[k++] = fn(std::span<const Index>(idx));
  } while (next_index(idx, dim));
  return DenseTensor(dim, rank, std::move(out));
}

// Linear structure.
DenseTensor linear_combination(double alpha, const DenseTensor& x, double beta,
                               const DenseTensor& y);
DenseTensor operator+(const DenseTensor& a, const DenseTensor& b);
DenseTensor operator-(const DenseTensor& a, const DenseTensor& b);
DenseTensor operator-(const DenseTensor& a);
DenseTensor operator*(double s, const DenseTensor& t);

/// Contracts slots a and b against metric_inv:
///   out(rest) = sum_{p,q} metric_inv(p,q) * t(..p at a.., ..q at b..).
/// Remaining slots keep their relative order.
DenseTensor contract(const DenseTensor& t, std::size_t slot_a, std::size_t slot_b,
                     const DenseTensor& metric_inv);

/// t + t o s + t o s^2 where s cyclically permutes the three given slots:
/// for slots (a,b,c) the terms are t(..x..y..z..), t(..y..z..x..), t(..z..x..y..).
DenseTensor cyclic_sum3(const DenseTensor& t, std::array<std::size_t, 3> slots);

/// max_i |a_i - b_i| / (1 + max(max_i |a_i|, max_i |b_i|)).
double residual(const DenseTensor& a, const DenseTensor& b);
double residual_to_zero(const DenseTensor& a);

/// |a - b| / max(1, |a|, |b|).
double scalar_residual(double a, double b);

/// Argument rearrangement: out(x_0, ..., x_{r-1}) = t(x_{source[0]}, ..., x_{source[r-1]}).
/// `source` must be a permutation of 0..r-1.
DenseTensor rearrange(const DenseTensor& t, std::span<const std::size_t> source);
DenseTensor rearrange(const DenseTensor& t, std::initializer_list<std::size_t> source);

/// Feeds the slot through a linear map: out(.., x, ..) = sum_a map(a, x) t(.., a, ..).
/// With map = J this evaluates t at J e_x in that slot.
DenseTensor substitute(const DenseTensor& t, std::size_t slot, const DenseTensor& map);

/// Outer product: out(a.., b..) = a(a..) * b(b..).
DenseTensor outer(const DenseTensor& a, const DenseTensor& b);

// Matrix helpers (rank-2 tensors).
DenseTensor matmul(const DenseTensor& a, const DenseTensor& b);
DenseTensor transpose(const DenseTensor& m);
/// Throws NumericError when the matrix is singular to working precision.
DenseTensor inverse(const DenseTensor& m);

/// Moves the leading (contravariant) slot of a vector-valued tensor to the end
/// and lowers it: out(i.., k) = sum_m g(m, k) t(m, i..).
DenseTensor lower_leading(const DenseTensor& t, const DenseTensor& g);
/// Inverse of lower_leading: out(k, i..) = sum_m g_inv(k, m) t(i.., m).
DenseTensor raise_trailing(const DenseTensor& t, const DenseTensor& g_inv);

/// g together with its inverse and the associated metric g~(x, y) = g(x, J y).
struct MetricPair {
  DenseTensor g;
  DenseTensor g_inv;
  DenseTensor g_tilde;

  static MetricPair from(const DenseTensor& g, const DenseTensor& J);
};

/// Counts (positive, negative, near-zero) eigenvalues of a symmetric matrix.
struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
Signature signature(const DenseTensor& symmetric, double zero_tolerance = 1e-12);

}  // namespace norden
