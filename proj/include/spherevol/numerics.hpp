#pragma once

// Small dense linear algebra and root finding. Every matrix handled by the
// library is at most a few dozen rows, so all routines favour plain
// partial-pivot elimination and Jacobi rotations over anything clever.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace spherevol {

using Vec = std::vector<double>;

/// Row-major dense matrix of finite reals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_columns(const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  std::vector<Vec> columns() const;
  Matrix transpose() const;
  double max_abs() const;
  bool all_finite() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, std::span<const double> x);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
Vec normalized(std::span<const double> a);
Vec add(std::span<const double> a, std::span<const double> b);
Vec subtract(std::span<const double> a, std::span<const double> b);
Vec scaled(std::span<const double> a, double s);
double distance(std::span<const double> a, std::span<const double> b);

/// Determinant by partial-pivot elimination. Throws DimensionError for
/// non-square or empty input.
double determinant(const Matrix& m);

/// Numerical rank; pivots at or below rel_tol * max|m_ij| count as zero.
std::size_t rank(const Matrix& m, double rel_tol = 1e-10);

/// Orthonormal basis of the null space, one basis vector per column.
/// Full-rank input yields a matrix with zero columns.
Matrix kernel_basis(const Matrix& m, double rel_tol = 1e-10);

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Eigenvalues are sorted in decreasing order; `vectors` holds the matching
/// unit eigenvectors as columns.
struct SymmetricEigen {
  Vec values;
  Matrix vectors;
};
SymmetricEigen symmetric_eigen(const Matrix& m);

/// Factor a positive semidefinite matrix as g = X^T X. The returned X has one
/// row per retained eigenvalue (the numerical rank) and one column per point.
/// Eigenvalues below rank_tol * max(1, lambda_max) are dropped; an eigenvalue
/// below minus that threshold raises NotGramMatrixError.
Matrix psd_factor(const Matrix& g, double rank_tol = 1e-9);

/// Generalized cross product of d-1 vectors in R^d: orthogonal to every input,
/// with norm equal to the (d-1)-volume of the parallelotope they span.
Vec generalized_cross(const std::vector<Vec>& vectors);

/// det of the Gram matrix of the given vectors (squared parallelotope volume).
double gram_determinant(const std::vector<Vec>& vectors);

struct PolynomialRealRoots {
  Vec coefficients;  // ascending degree
  Vec roots;         // strictly increasing
  Vec residuals;     // |p(root)|
};

/// All real roots of a polynomial of degree at most four (coefficients in
/// ascending degree, leading coefficient nonzero).
PolynomialRealRoots real_roots(std::span<const double> coeffs);

double evaluate_polynomial(std::span<const double> coeffs, double x);

/// maximize c^T x subject to A x = b, x >= 0 (dense two-phase simplex with
/// Bland's rule).
struct LpResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::infeasible;
  double objective = 0.0;
  Vec x;
};
LpResult maximize_lp(const Matrix& a, std::span<const double> b, std::span<const double> c);

std::size_t factorial(std::size_t k);

}  // namespace spherevol
