#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace belldisc {

using complex = std::complex<double>;

/// Dense complex matrix, row-major storage. The only numeric carrier in the
/// library; everything here is at most 16x16, so no attempt is made at
/// blocking or sparsity.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("ragged initializer");
      std::size_t j = 0;
      for (const auto& v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool is_square() const { return rows_ == cols_; }

  complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<complex>& data() { return data_; }
  const std::vector<complex>& data() const { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  ComplexMatrix& operator*=(complex s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, complex s) {
    a *= s;
    return a;
  }
  friend ComplexMatrix operator*(complex s, ComplexMatrix a) {
    a *= s;
    return a;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matmul shape");
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const complex aik = a(i, k);
        if (aik == complex{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  ComplexMatrix dagger() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  ComplexMatrix transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  complex trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square");
    complex t{};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  bool all_finite() const {
    for (const auto& v : data_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

  /// max elementwise |m - m^dagger|
  double hermiticity_error() const {
    if (!is_square()) return std::numeric_limits<double>::infinity();
    double e = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        e = std::max(e, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return e;
  }

  bool is_hermitian(double tol = 1e-12) const {
    return is_square() && hermiticity_error() <= tol;
  }

  /// (m + m^dagger)/2, used to kill roundoff drift before eigensolves.
  ComplexMatrix symmetrized() const {
    if (!is_square()) throw std::invalid_argument("symmetrize non-square");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        out(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return out;
  }

private:
  void check_same_shape(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<complex> data_;
};

inline double distance_max(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).max_abs();
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const complex aij = a(i, j);
      if (aij == complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

enum class Side { left, right };

/// Assignment of tensor factors (in storage order) to the two parties of a
/// bipartite cut. The factor ordering of a state built as kron(rho, tau) is
/// (rho factors..., tau factors...); for the two-pair cut used by the
/// resource-assisted ensembles that is X1 Y1 X2 Y2 with Alice holding
/// {X1, X2} and Bob {Y1, Y2}. Getting this permutation wrong silently breaks
/// every partial transpose, hence the dedicated tests.
class Bipartition {
public:
  Bipartition(std::vector<std::size_t> dims, std::vector<Side> sides)
      : dims_(std::move(dims)), sides_(std::move(sides)) {
    if (dims_.empty() || dims_.size() != sides_.size())
      throw std::invalid_argument("bipartition: dims/sides mismatch");
    for (std::size_t d : dims_)
      if (d == 0) throw std::invalid_argument("bipartition: zero dim");
    bool has_left = false, has_right = false;
    for (Side s : sides_) (s == Side::left ? has_left : has_right) = true;
    if (!has_left || !has_right)
      throw std::invalid_argument("bipartition: one side is empty");
  }

  static Bipartition bipartite(std::size_t dim_left, std::size_t dim_right) {
    return Bipartition({dim_left, dim_right}, {Side::left, Side::right});
  }
  static Bipartition two_qubits() { return bipartite(2, 2); }
  static Bipartition two_qubit_pairs() {
    return Bipartition({2, 2, 2, 2},
                       {Side::left, Side::right, Side::left, Side::right});
  }

  std::size_t factor_count() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<Side>& sides() const { return sides_; }

  std::size_t total_dim() const {
    std::size_t d = 1;
    for (std::size_t f : dims_) d *= f;
    return d;
  }

  std::size_t side_dim(Side s) const {
    std::size_t d = 1;
    for (std::size_t f = 0; f < dims_.size(); ++f)
      if (sides_[f] == s) d *= dims_[f];
    return d;
  }

  std::vector<std::size_t> dims_on(Side s) const {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < dims_.size(); ++f)
      if (sides_[f] == s) out.push_back(dims_[f]);
    return out;
  }

private:
  std::vector<std::size_t> dims_;
  std::vector<Side> sides_;
};

namespace detail {

// digit table: digits[i][f] = index of factor f in the decomposition of i
inline std::vector<std::vector<std::size_t>> index_digits(
    const std::vector<std::size_t>& dims, std::size_t total) {
  const std::size_t k = dims.size();
  std::vector<std::vector<std::size_t>> digits(total,
                                               std::vector<std::size_t>(k));
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t rem = i;
    for (std::size_t f = k; f-- > 0;) {
      digits[i][f] = rem % dims[f];
      rem /= dims[f];
    }
  }
  return digits;
}

inline void check_square_dim(const ComplexMatrix& m, const Bipartition& cut,
                             const char* what) {
  if (!m.is_square() || m.rows() != cut.total_dim())
    throw std::invalid_argument(std::string(what) +
                                ": matrix dimension does not match cut");
}

}  // namespace detail

/// Transpose only the indices of the factors on `side`; involutive and
/// trace-preserving.
inline ComplexMatrix partial_transpose(const ComplexMatrix& m,
                                       const Bipartition& cut, Side side) {
  detail::check_square_dim(m, cut, "partial_transpose");
  const std::size_t n = m.rows();
  const std::size_t k = cut.factor_count();
  const auto digits = detail::index_digits(cut.dims(), n);
  // strides in storage order
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t f = k - 1; f-- > 0;) stride[f] = stride[f + 1] * cut.dims()[f + 1];

  ComplexMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t r2 = 0, c2 = 0;
      for (std::size_t f = 0; f < k; ++f) {
        const bool swap = cut.sides()[f] == side;
        r2 += (swap ? digits[c][f] : digits[r][f]) * stride[f];
        c2 += (swap ? digits[r][f] : digits[c][f]) * stride[f];
      }
      out(r2, c2) = m(r, c);
    }
  }
  return out;
}

/// Trace out the factors not on `keep`; the result keeps the retained factors
/// in their storage order.
inline ComplexMatrix partial_trace(const ComplexMatrix& m,
                                   const Bipartition& cut, Side keep) {
  detail::check_square_dim(m, cut, "partial_trace");
  const std::size_t n = m.rows();
  const std::size_t k = cut.factor_count();
  const auto digits = detail::index_digits(cut.dims(), n);

  // composite (kept, traced) index of every full index
  std::vector<std::size_t> kept(n, 0), traced(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < k; ++f) {
      if (cut.sides()[f] == keep)
        kept[i] = kept[i] * cut.dims()[f] + digits[i][f];
      else
        traced[i] = traced[i] * cut.dims()[f] + digits[i][f];
    }
  }

  ComplexMatrix out(cut.side_dim(keep), cut.side_dim(keep));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (traced[r] == traced[c]) out(kept[r], kept[c]) += m(r, c);
  return out;
}

/// Place `op` on the tensor factors listed in `targets` (ascending, storage
/// order) and the identity elsewhere.
inline ComplexMatrix embed_operator(const ComplexMatrix& op,
                                    const std::vector<std::size_t>& dims,
                                    const std::vector<std::size_t>& targets) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  std::size_t op_dim = 1;
  for (std::size_t t : targets) {
    if (t >= dims.size()) throw std::invalid_argument("embed: bad target");
    op_dim *= dims[t];
  }
  if (!op.is_square() || op.rows() != op_dim)
    throw std::invalid_argument("embed: operator dim mismatch");

  std::vector<bool> is_target(dims.size(), false);
  for (std::size_t t : targets) is_target[t] = true;

  const auto digits = detail::index_digits(dims, total);
  std::vector<std::size_t> sub(total, 0);  // composite target-index per full index
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t t : targets) sub[i] = sub[i] * dims[t] + digits[i][t];

  ComplexMatrix out(total, total);
  for (std::size_t r = 0; r < total; ++r) {
    for (std::size_t c = 0; c < total; ++c) {
      bool rest_equal = true;
      for (std::size_t f = 0; f < dims.size(); ++f)
        if (!is_target[f] && digits[r][f] != digits[c][f]) {
          rest_equal = false;
          break;
        }
      if (rest_equal) out(r, c) = op(sub[r], sub[c]);
    }
  }
  return out;
}

}  // namespace belldisc
