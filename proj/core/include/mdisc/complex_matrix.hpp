#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mdisc {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

/// Dense complex matrix in row-major order. The workhorse for all operators
/// (POVM elements, unitaries, density matrices) at the small dimensions this
/// library targets (d <= 16, with occasional excursions to 32).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);
  /// Build from nested row lists, e.g. {{1, 0}, {0, -1}}.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scalar);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(ComplexMatrix m, cplx s) { return m *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  cplx trace() const;
  /// Largest entry magnitude (max norm).
  double max_abs() const;
  double frobenius_norm() const;
  bool all_finite() const;

  /// Re <psi| M |psi> without allocating; psi.size() must equal rows()==cols().
  double quadratic_form(std::span<const cplx> psi) const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// Tensor product with the left factor as the slow (block) index; the global
/// convention for bipartite objects is that subsystem A comes first.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
CVec kron(const CVec& a, const CVec& b);

/// Trace out the first (A) factor of a (d_A*d_B)x(d_A*d_B) matrix.
/// Throws std::invalid_argument on dimension mismatch.
ComplexMatrix partial_trace_a(const ComplexMatrix& m, std::size_t d_a, std::size_t d_b);

// Vector helpers; inner() is conjugate-linear in its first argument.
cplx inner(const CVec& a, const CVec& b);
double norm(const CVec& v);
void normalize(CVec& v);
CVec matvec(const ComplexMatrix& m, const CVec& v);
/// Rank-one operator |a><b|.
ComplexMatrix outer(const CVec& a, const CVec& b);

}  // namespace mdisc
