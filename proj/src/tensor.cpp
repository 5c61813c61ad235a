#include "norden/tensor.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "norden/kernels.hpp"

namespace norden {
namespace {

void require_same_shape(const DenseTensor& a, const DenseTensor& b, const char* op) {
  if (a.dim() != b.dim() || a.rank() != b.rank())
    throw ArgumentError(std::string(op) + ": shape mismatch (dim " + std::to_string(a.dim()) +
                        " rank " + std::to_string(a.rank()) + " vs dim " +
                        std::to_string(b.dim()) + " rank " + std::to_string(b.rank()) + ")");
}

void require_square(const DenseTensor& m, std::size_t dim, const char* op) {
  if (m.rank() != 2 || m.dim() != dim)
    throw ArgumentError(std::string(op) + ": expected a " + std::to_string(dim) + "x" +
                        std::to_string(dim) + " matrix");
}

Eigen::MatrixXd to_eigen(const DenseTensor& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(i, j);
  return out;
}

DenseTensor from_eigen(const Eigen::MatrixXd& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<double> c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c[i * n + j] = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return DenseTensor(n, 2, std::move(c));
}

}  // namespace

std::size_t tensor_size(std::size_t dim, std::size_t rank) {
  if (dim == 0) throw ArgumentError("tensor dimension must be positive");
  std::size_t n = 1;
  for (std::size_t r = 0; r < rank; ++r) {
    if (n > std::numeric_limits<std::size_t>::max() / dim / 8)
      throw ArgumentError("tensor too large");
    n *= dim;
  }
  return n;
}

bool next_index(std::span<Index> idx, std::size_t dim) {
  for (std::size_t s = idx.size(); s-- > 0;) {
    if (++idx[s] < dim) return true;
    idx[s] = 0;
  }
  return false;
}

DenseTensor::DenseTensor() : components_(1, 0.0) {}

DenseTensor::DenseTensor(std::size_t dim, std::size_t rank, std::vector<double> components)
    : dim_(dim), rank_(rank), components_(std::move(components)) {
  if (components_.size() != tensor_size(dim, rank))
    throw ArgumentError("tensor components length " + std::to_string(components_.size()) +
                        " does not equal dim^rank = " + std::to_string(tensor_size(dim, rank)));
  for (double v : components_)
    if (!std::isfinite(v)) throw NumericError("tensor component is not finite");
}

DenseTensor DenseTensor::zeros(std::size_t dim, std::size_t rank) {
  return DenseTensor(dim, rank, std::vector<double>(tensor_size(dim, rank), 0.0));
}

DenseTensor DenseTensor::scalar(std::size_t dim, double value) {
  return DenseTensor(dim, 0, std::vector<double>{value});
}

DenseTensor DenseTensor::identity(std::size_t dim) {
  std::vector<double> c(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) c[i * dim + i] = 1.0;
  return DenseTensor(dim, 2, std::move(c));
}

DenseTensor DenseTensor::diagonal(std::span<const double> entries) {
  const std::size_t n = entries.size();
  std::vector<double> c(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) c[i * n + i] = entries[i];
  return DenseTensor(n, 2, std::move(c));
}

DenseTensor DenseTensor::matrix(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t n = rows.size();
  std::vector<double> c;
  c.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw ArgumentError("matrix rows must all have length " + std::to_string(n));
    c.insert(c.end(), row.begin(), row.end());
  }
  return DenseTensor(n, 2, std::move(c));
}

std::size_t DenseTensor::stride(std::size_t slot) const {
  if (slot >= rank_) throw ArgumentError("slot " + std::to_string(slot) + " out of range");
  std::size_t s = 1;
  for (std::size_t r = slot + 1; r < rank_; ++r) s *= dim_;
  return s;
}

std::size_t DenseTensor::offset(std::span<const Index> idx) const {
  if (idx.size() != rank_)
    throw ArgumentError("index arity " + std::to_string(idx.size()) + " != rank " +
                        std::to_string(rank_));
  std::size_t off = 0;
  for (Index i : idx) {
    if (i >= dim_) throw ArgumentError("index " + std::to_string(i) + " out of range");
    off = off * dim_ + i;
  }
  return off;
}

double DenseTensor::at(std::span<const Index> idx) const { return components_[offset(idx)]; }

double DenseTensor::value() const {
  if (rank_ != 0) throw ArgumentError("value() requires a rank-0 tensor");
  return components_[0];
}

double DenseTensor::max_abs() const { return kernels::max_abs(components_); }

DenseTensor linear_combination(double alpha, const DenseTensor& x, double beta,
                               const DenseTensor& y) {
  require_same_shape(x, y, "linear_combination");
  std::vector<double> out(x.size());
  kernels::axpby(alpha, x.components(), beta, y.components(), out);
  return DenseTensor(x.dim(), x.rank(), std::move(out));
}

DenseTensor operator+(const DenseTensor& a, const DenseTensor& b) {
  return linear_combination(1.0, a, 1.0, b);
}

DenseTensor operator-(const DenseTensor& a, const DenseTensor& b) {
  return linear_combination(1.0, a, -1.0, b);
}

DenseTensor operator-(const DenseTensor& a) { return linear_combination(-1.0, a, 0.0, a); }

DenseTensor operator*(double s, const DenseTensor& t) { return linear_combination(s, t, 0.0, t); }

DenseTensor rearrange(const DenseTensor& t, std::span<const std::size_t> source) {
  const std::size_t r = t.rank();
  if (source.size() != r) throw ArgumentError("rearrange: permutation length != rank");
  std::vector<bool> seen(r, false);
  for (std::size_t s : source) {
    if (s >= r || seen[s]) throw ArgumentError("rearrange: not a permutation");
    seen[s] = true;
  }
  // t(y_0..y_{r-1}) with y_q = x_{source[q]}: x_p contributes to every q with source[q] == p.
  std::vector<std::size_t> src_stride(r, 0);
  for (std::size_t q = 0; q < r; ++q) src_stride[source[q]] += t.stride(q);
  const auto data = t.components();
  std::vector<double> out(t.size());
  std::vector<Index> idx(r, 0);
  std::size_t k = 0;
  do {
    std::size_t off = 0;
    for (std::size_t p = 0; p < r; ++p) off += idx[p] * src_stride[p];
    out[k++] = data[off];
  } while (next_index(idx, t.dim()));
  return DenseTensor(t.dim(), r, std::move(out));
}

DenseTensor rearrange(const DenseTensor& t, std::initializer_list<std::size_t> source) {
  return rearrange(t, std::span<const std::size_t>(source.begin(), source.size()));
}

DenseTensor contract(const DenseTensor& t, std::size_t slot_a, std::size_t slot_b,
                     const DenseTensor& metric_inv) {
  const std::size_t r = t.rank();
  if (r < 2) throw ArgumentError("contract: rank must be at least 2");
  if (slot_a >= r || slot_b >= r) throw ArgumentError("contract: slot out of range");
  if (slot_a == slot_b) throw ArgumentError("contract: slots must differ");
  require_square(metric_inv, t.dim(), "contract");

  // Move the contracted pair to the end so each output component is a single
  // contiguous dot product against the flattened metric.
  std::vector<std::size_t> order;
  order.reserve(r);
  for (std::size_t s = 0; s < r; ++s)
    if (s != slot_a && s != slot_b) order.push_back(s);
  order.push_back(slot_a);
  order.push_back(slot_b);
  // out(x) = t(x_order^-1 ...): build the inverse so that moved(x_0..) = t(..)
  std::vector<std::size_t> source(r);
  for (std::size_t p = 0; p < r; ++p) source[order[p]] = p;
  const DenseTensor moved = rearrange(t, source);

  const std::size_t block = t.dim() * t.dim();
  const std::size_t outer = t.size() / block;
  const auto m = metric_inv.components();
  const auto data = moved.components();
  std::vector<double> out(outer);
  for (std::size_t k = 0; k < outer; ++k) out[k] = kernels::dot(m, data.subspan(k * block, block));
  return DenseTensor(t.dim(), r - 2, std::move(out));
}

DenseTensor cyclic_sum3(const DenseTensor& t, std::array<std::size_t, 3> slots) {
  const std::size_t r = t.rank();
  if (r < 3) throw ArgumentError("cyclic_sum3: rank must be at least 3");
  const auto [a, b, c] = slots;
  if (a >= r || b >= r || c >= r) throw ArgumentError("cyclic_sum3: slot out of range");
  if (a == b || b == c || a == c) throw ArgumentError("cyclic_sum3: duplicate slots");
  std::vector<std::size_t> once(r), twice(r);
  std::iota(once.begin(), once.end(), std::size_t{0});
  std::iota(twice.begin(), twice.end(), std::size_t{0});
  once[a] = b;
  once[b] = c;
  once[c] = a;
  twice[a] = c;
  twice[b] = a;
  twice[c] = b;
  return t + rearrange(t, once) + rearrange(t, twice);
}

double residual(const DenseTensor& a, const DenseTensor& b) {
  require_same_shape(a, b, "residual");
  const double diff = kernels::max_abs_diff(a.components(), b.components());
  const double scale = 1.0 + std::max(a.max_abs(), b.max_abs());
  return diff / scale;
}

double residual_to_zero(const DenseTensor& a) {
  const double m = a.max_abs();
  return m / (1.0 + m);
}

double scalar_residual(double a, double b) {
  return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
}

DenseTensor substitute(const DenseTensor& t, std::size_t slot, const DenseTensor& map) {
  if (slot >= t.rank()) throw ArgumentError("substitute: slot out of range");
  require_square(map, t.dim(), "substitute");
  const std::size_t n = t.dim();
  const std::size_t st = t.stride(slot);
  const auto data = t.components();
  std::vector<double> out(t.size(), 0.0);
  for (std::size_t off = 0; off < t.size(); ++off) {
    const std::size_t x = (off / st) % n;
    const std::size_t base = off - x * st;
    double s = 0.0;
    for (std::size_t a = 0; a < n; ++a) s += map(a, x) * data[base + a * st];
    out[off] = s;
  }
  return DenseTensor(n, t.rank(), std::move(out));
}

DenseTensor outer(const DenseTensor& a, const DenseTensor& b) {
  if (a.dim() != b.dim()) throw ArgumentError("outer: dimension mismatch");
  std::vector<double> out;
  out.reserve(a.size() * b.size());
  for (double x : a.components())
    for (double y : b.components()) out.push_back(x * y);
  return DenseTensor(a.dim(), a.rank() + b.rank(), std::move(out));
}

DenseTensor matmul(const DenseTensor& a, const DenseTensor& b) {
  require_square(a, a.dim(), "matmul");
  require_square(b, a.dim(), "matmul");
  const std::size_t n = a.dim();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += a(i, k) * b(k, j);
  return DenseTensor(n, 2, std::move(out));
}

DenseTensor transpose(const DenseTensor& m) {
  require_square(m, m.dim(), "transpose");
  return rearrange(m, {1, 0});
}

DenseTensor inverse(const DenseTensor& m) {
  require_square(m, m.dim(), "inverse");
  const Eigen::MatrixXd e = to_eigen(m);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(e);
  lu.setThreshold(1e-13);
  if (!lu.isInvertible()) throw NumericError("matrix is singular");
  return from_eigen(lu.inverse());
}

DenseTensor lower_leading(const DenseTensor& t, const DenseTensor& g) {
  if (t.rank() < 1) throw ArgumentError("lower_leading: rank must be at least 1");
  require_square(g, t.dim(), "lower_leading");
  // out(i.., k) = sum_m g(m, k) t(m, i..): substitute g into slot 0, then rotate.
  const DenseTensor lowered = substitute(t, 0, g);
  std::vector<std::size_t> source(t.rank());
  source[0] = t.rank() - 1;
  for (std::size_t q = 1; q < t.rank(); ++q) source[q] = q - 1;
  return rearrange(lowered, source);
}

DenseTensor raise_trailing(const DenseTensor& t, const DenseTensor& g_inv) {
  if (t.rank() < 1) throw ArgumentError("raise_trailing: rank must be at least 1");
  require_square(g_inv, t.dim(), "raise_trailing");
  const std::size_t last = t.rank() - 1;
  const DenseTensor raised = substitute(t, last, transpose(g_inv));
  std::vector<std::size_t> source(t.rank());
  for (std::size_t q = 0; q < last; ++q) source[q] = q + 1;
  source[last] = 0;
  return rearrange(raised, source);
}

MetricPair MetricPair::from(const DenseTensor& g, const DenseTensor& J) {
  require_square(g, g.dim(), "MetricPair");
  require_square(J, g.dim(), "MetricPair");
  return MetricPair{g, inverse(g), matmul(g, J)};
}

Signature signature(const DenseTensor& symmetric, double zero_tolerance) {
  require_square(symmetric, symmetric.dim(), "signature");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(symmetric),
                                                        Eigen::EigenvaluesOnly);
  Signature s;
  const double scale = std::max(1.0, symmetric.max_abs());
  for (double ev : solver.eigenvalues()) {
    if (ev > zero_tolerance * scale)
      ++s.positive;
    else if (ev < -zero_tolerance * scale)
      ++s.negative;
    else
      ++s.zero;
  }
  return s;
}

}  // namespace norden
