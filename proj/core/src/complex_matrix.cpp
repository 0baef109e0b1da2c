#include "mdisc/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace mdisc {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
    std::size_t j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix add: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sub: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matmul: shape mismatch");
  ComplexMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

cplx ComplexMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: non-square matrix");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
  for (const auto& v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

double ComplexMatrix::quadratic_form(std::span<const cplx> psi) const {
  const std::size_t n = rows_;
  cplx acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cplx row = 0.0;
    const cplx* m = data_.data() + i * cols_;
    for (std::size_t j = 0; j < n; ++j) row += m[j] * psi[j];
    acc += std::conj(psi[i]) * row;
  }
  return acc.real();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return m;
}

CVec kron(const CVec& a, const CVec& b) {
  CVec v(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) v[i * b.size() + j] = a[i] * b[j];
  return v;
}

ComplexMatrix partial_trace_a(const ComplexMatrix& m, std::size_t d_a, std::size_t d_b) {
  if (!m.is_square() || m.rows() != d_a * d_b)
    throw std::invalid_argument("partial_trace_a: dimension mismatch");
  ComplexMatrix out(d_b, d_b);
  for (std::size_t j = 0; j < d_b; ++j)
    for (std::size_t jp = 0; jp < d_b; ++jp) {
      cplx s = 0.0;
      for (std::size_t i = 0; i < d_a; ++i) s += m(i * d_b + j, i * d_b + jp);
      out(j, jp) = s;
    }
  return out;
}

cplx inner(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: length mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const CVec& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

void normalize(CVec& v) {
  const double n = norm(v);
  if (n == 0.0) throw std::invalid_argument("normalize: zero vector");
  for (auto& x : v) x /= n;
}

CVec matvec(const ComplexMatrix& m, const CVec& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matvec: shape mismatch");
  CVec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

ComplexMatrix outer(const CVec& a, const CVec& b) {
  ComplexMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  return m;
}

}  // namespace mdisc
