#include "spherevol/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "spherevol/errors.hpp"

namespace spherevol {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<Vec> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw DimensionError("ragged rows in matrix literal");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
  return from_rows(cols).transpose();
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vec> Matrix::columns() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(col(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

Vec operator*(const Matrix& a, std::span<const double> x) {
  if (a.cols_ != x.size()) throw DimensionError("matrix-vector shape mismatch");
  Vec y(a.rows_, 0.0);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
  return y;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

Vec normalized(std::span<const double> a) {
  const double n = norm(a);
  Vec v(a.begin(), a.end());
  for (double& x : v) x /= n;
  return v;
}

Vec add(std::span<const double> a, std::span<const double> b) {
  Vec v(a.begin(), a.end());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
  return v;
}

Vec subtract(std::span<const double> a, std::span<const double> b) {
  Vec v(a.begin(), a.end());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b[i];
  return v;
}

Vec scaled(std::span<const double> a, double s) {
  Vec v(a.begin(), a.end());
  for (double& x : v) x *= s;
  return v;
}

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

double determinant(const Matrix& m) {
  if (!m.square() || m.rows() == 0) throw DimensionError("determinant needs a non-empty square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(a(r, k)) > std::abs(a(piv, k))) piv = r;
    if (a(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = a(r, k) / a(k, k);
      if (f == 0.0) continue;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return det;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, double rel_tol) {
  const double thresh = rel_tol * a.max_abs();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    for (std::size_t i = r + 1; i < a.rows(); ++i)
      if (std::abs(a(i, c)) > std::abs(a(piv, c))) piv = i;
    if (std::abs(a(piv, c)) <= thresh || a(piv, c) == 0.0) {
      for (std::size_t i = r; i < a.rows(); ++i) a(i, c) = 0.0;
      continue;
    }
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    const double p = a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) /= p;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const double f = a(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m, double rel_tol) {
  Matrix a = m;
  return rref(a, rel_tol).size();
}

Matrix kernel_basis(const Matrix& m, double rel_tol) {
  Matrix a = m;
  const auto pivots = rref(a, rel_tol);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), 0.0);
    v[f] = 1.0;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
    basis.push_back(std::move(v));
  }
  // Modified Gram-Schmidt, twice for good measure on near-parallel vectors.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const double p = dot(basis[i], basis[j]);
        for (std::size_t k = 0; k < basis[i].size(); ++k) basis[i][k] -= p * basis[j][k];
      }
      const double n = norm(basis[i]);
      for (double& x : basis[i]) x /= n;
    }
  }
  Matrix out(m.cols(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < m.cols(); ++r) out(r, c) = basis[c][r];
  return out;
}

SymmetricEigen symmetric_eigen(const Matrix& m) {
  if (!m.square()) throw DimensionError("symmetric_eigen needs a square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix v = Matrix::identity(n);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off == 0.0 || std::sqrt(off) <= 1e-300) break;
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale += a(i, i) * a(i, i);
    if (off <= 1e-34 * (scale + off)) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i) > a(j, j); });
  SymmetricEigen out{Vec(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

Matrix psd_factor(const Matrix& g, double rank_tol) {
  if (!g.square()) throw DimensionError("psd_factor needs a square matrix");
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i + 1; j < g.cols(); ++j)
      if (std::abs(g(i, j) - g(j, i)) > 1e-10) throw PreconditionError("psd_factor needs a symmetric matrix");

  const auto eig = symmetric_eigen(g);
  const double top = eig.values.empty() ? 0.0 : eig.values.front();
  const double thresh = rank_tol * std::max(1.0, top);
  std::size_t r = 0;
  for (double lam : eig.values) {
    if (lam < -thresh)
      throw NotGramMatrixError("matrix has eigenvalue " + std::to_string(lam) + " below -" + std::to_string(thresh));
    if (lam > thresh) ++r;
  }
  Matrix x(r, g.cols());
  for (std::size_t k = 0; k < r; ++k) {
    const double s = std::sqrt(eig.values[k]);
    for (std::size_t j = 0; j < g.cols(); ++j) x(k, j) = s * eig.vectors(j, k);
  }
  return x;
}

Vec generalized_cross(const std::vector<Vec>& vectors) {
  const std::size_t d = vectors.size() + 1;
  for (const auto& v : vectors)
    if (v.size() != d) throw DimensionError("generalized_cross needs d-1 vectors in R^d");
  Vec c(d, 0.0);
  if (d == 1) {
    c[0] = 1.0;
    return c;
  }
  Matrix minor(d - 1, d - 1);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t r = 0; r + 1 < d; ++r) {
      std::size_t cc = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == k) continue;
        minor(r, cc++) = vectors[r][j];
      }
    }
    // Sign chosen so that det[v_1; ...; v_{d-1}; c] = |c|^2 > 0.
    const double sign = ((k + d - 1) % 2 == 0) ? 1.0 : -1.0;
    c[k] = sign * determinant(minor);
  }
  return c;
}

double gram_determinant(const std::vector<Vec>& vectors) {
  const std::size_t k = vectors.size();
  if (k == 0) return 1.0;
  Matrix g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g(i, j) = dot(vectors[i], vectors[j]);
  return determinant(g);
}

double evaluate_polynomial(std::span<const double> coeffs, double x) {
  double v = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
  return v;
}

namespace {

Vec derivative(std::span<const double> c) {
  Vec d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(static_cast<double>(i) * c[i]);
  return d;
}

Vec roots_recursive(std::span<const double> c) {
  const std::size_t deg = c.size() - 1;
  if (deg == 0) return {};
  if (deg == 1) return {-c[0] / c[1]};

  const Vec dc = derivative(c);
  Vec crit = roots_recursive(dc);
  double bound = 0.0;
  for (std::size_t i = 0; i < deg; ++i) bound = std::max(bound, std::abs(c[i] / c[deg]));
  bound += 1.0;

  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));

  Vec grid{-bound};
  for (double x : crit)
    if (x > -bound && x < bound) grid.push_back(x);
  grid.push_back(bound);

  Vec out;
  for (double x : crit)
    if (std::abs(evaluate_polynomial(c, x)) <= 1e-14 * scale) out.push_back(x);

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    double lo = grid[i];
    double hi = grid[i + 1];
    double flo = evaluate_polynomial(c, lo);
    const double fhi = evaluate_polynomial(c, hi);
    if (flo == 0.0 || fhi == 0.0 || (flo < 0) == (fhi < 0)) continue;
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double fm = evaluate_polynomial(c, mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    const double a = evaluate_polynomial(c, lo);
    const double b = evaluate_polynomial(c, hi);
    out.push_back(std::abs(a) <= std::abs(b) ? lo : hi);
  }
  for (double x : grid)
    if (evaluate_polynomial(c, x) == 0.0) out.push_back(x);

  std::sort(out.begin(), out.end());
  Vec uniq;
  for (double x : out)
    if (uniq.empty() || x - uniq.back() > 1e-9 * std::max(1.0, std::abs(x))) uniq.push_back(x);
  return uniq;
}

}  // namespace

PolynomialRealRoots real_roots(std::span<const double> coeffs) {
  if (coeffs.empty()) throw PreconditionError("polynomial has no coefficients");
  if (coeffs.size() > 5) throw UnsupportedError("real_roots supports degree at most 4");
  if (coeffs.back() == 0.0) throw PreconditionError("leading coefficient must be nonzero");
  for (double v : coeffs)
    if (!std::isfinite(v)) throw PreconditionError("polynomial coefficients must be finite");

  PolynomialRealRoots out;
  out.coefficients.assign(coeffs.begin(), coeffs.end());
  out.roots = roots_recursive(coeffs);
  for (double r : out.roots) out.residuals.push_back(std::abs(evaluate_polynomial(coeffs, r)));
  return out;
}

LpResult maximize_lp(const Matrix& a, std::span<const double> b, std::span<const double> c) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n) throw DimensionError("maximize_lp shape mismatch");
  constexpr double eps = 1e-12;

  // Tableau columns: n structural, m artificial, rhs. Row m is the objective.
  const std::size_t width = n + m + 1;
  Matrix t(m + 1, width);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double s = b[i] < 0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = s * a(i, j);
    t(i, n + i) = 1.0;
    t(i, width - 1) = s * b[i];
    basis[i] = n + i;
  }

  auto pivot = [&](std::size_t pr, std::size_t pc) {
    const double p = t(pr, pc);
    for (std::size_t j = 0; j < width; ++j) t(pr, j) /= p;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == pr) continue;
      const double f = t(i, pc);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) t(i, j) -= f * t(pr, j);
    }
    basis[pr] = pc;
  };

  // Minimizes the objective row (reduced costs stored as row m); columns at
  // or beyond `limit` never enter. Returns false when unbounded.
  auto run = [&](std::size_t limit) {
    for (int iter = 0; iter < 10000; ++iter) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (t(m, j) < -eps) {
          enter = j;
          break;
        }
      if (enter == limit) return true;
      std::size_t leave = m;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m; ++i) {
        if (t(i, enter) > eps) {
          const double ratio = t(i, width - 1) / t(i, enter);
          if (ratio < best - eps || (std::abs(ratio - best) <= eps && leave < m && basis[i] < basis[leave])) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
    return true;
  };

  // Phase I: minimize the sum of artificials.
  for (std::size_t j = 0; j < width; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += t(i, j);
    t(m, j) = (j >= n && j < n + m) ? 0.0 : -s;
  }
  run(n + m);
  LpResult res;
  if (-t(m, width - 1) > 1e-9) {
    res.status = LpResult::Status::infeasible;
    return res;
  }
  // Drive artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(t(i, j)) > 1e-9) {
        pivot(i, j);
        break;
      }
  }
  // Phase II objective: minimize -c^T x.
  for (std::size_t j = 0; j < width; ++j) t(m, j) = 0.0;
  for (std::size_t j = 0; j < n; ++j) t(m, j) = -c[j];
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n) continue;
    const double f = t(m, basis[i]);
    if (f == 0.0) continue;
    for (std::size_t j = 0; j < width; ++j) t(m, j) -= f * t(i, j);
  }
  if (!run(n)) {
    res.status = LpResult::Status::unbounded;
    res.objective = std::numeric_limits<double>::infinity();
    return res;
  }
  res.status = LpResult::Status::optimal;
  res.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) res.x[basis[i]] = t(i, width - 1);
  res.objective = dot(c, res.x);
  return res;
}

std::size_t factorial(std::size_t k) {
  if (k > 20) throw UnsupportedError("factorial beyond 20! overflows 64 bits");
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace spherevol
