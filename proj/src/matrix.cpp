#include "fano/matrix.hpp"

#include <utility>

#include "fano/errors.hpp"

namespace fano {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, Vector entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw InconsistencyError("matrix entry count mismatch");
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InconsistencyError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector ExactMatrix::row(std::size_t r) const {
  return Vector(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

ExactMatrix ExactMatrix::stacked(const ExactMatrix& below) const {
  if (below.cols_ != cols_) throw InconsistencyError("stacking matrices of different widths");
  Vector all = a_;
  all.insert(all.end(), below.a_.begin(), below.a_.end());
  return ExactMatrix(rows_ + below.rows_, cols_, std::move(all));
}

Vector ExactMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw InconsistencyError("matrix-vector size mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw InconsistencyError("matrix product size mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

namespace {

// Fraction-free forward elimination on an integer matrix. Returns the pivot
// columns; `z` is left in (non-reduced) echelon form.
std::vector<std::size_t> bareiss_forward(std::vector<std::vector<mpz_class>>& z,
                                         std::size_t cols) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = z.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && z[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(z[r], z[pr]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        z[i][j] = (z[r][c] * z[i][j] - z[i][c] * z[r][j]);
        mpz_divexact(z[i][j].get_mpz_t(), z[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      z[i][c] = 0;
    }
    // Columns left of c in rows below r are already zero.
    prev = z[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RowEchelon reduce_rational(const ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpz_class>> z(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).rational_value().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = m(r, c).rational_value();
      z[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  auto pivots = bareiss_forward(z, cols);

  ExactMatrix out(rows, cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const mpz_class& lead = z[r][pivots[r]];
    for (std::size_t c = pivots[r]; c < cols; ++c) {
      out(r, c) = Scalar(mpq_class(z[r][c], lead));
    }
  }
  // Back-substitute to clear entries above each pivot.
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t pc = pivots[k];
    for (std::size_t r = 0; r < k; ++r) {
      const Scalar f = out(r, pc);
      if (f.is_zero()) continue;
      for (std::size_t c = pc; c < cols; ++c) {
        if (!out(k, c).is_zero()) out(r, c) -= f * out(k, c);
      }
    }
  }
  return {std::move(out), std::move(pivots)};
}

RowEchelon reduce_modp(ExactMatrix a, std::uint32_t p) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = a(r, c).in_field(p);
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && a(pr, c).is_zero()) ++pr;
    if (pr == rows) continue;
    if (pr != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(pr, j));
    }
    const Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace

RowEchelon row_reduce(const ExactMatrix& m) {
  const std::uint32_t p = m.prime();
  return p == 0 ? reduce_rational(m) : reduce_modp(m, p);
}

std::size_t rank(const ExactMatrix& m) { return row_reduce(m).rank(); }

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rref(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const ExactMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw InconsistencyError("right-hand side size mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RowEchelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.rref(k, m.cols());
  return x;
}

Scalar determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw InconsistencyError("determinant of a non-square matrix");
  // Gaussian elimination with the field's own division; sizes here are small.
  ExactMatrix a = m;
  const std::uint32_t p = m.prime();
  const std::size_t n = m.rows();
  Scalar det = 1;
  if (p != 0) det = det.in_field(p);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = c;
    while (pr < n && a(pr, c).is_zero()) ++pr;
    if (pr == n) return p == 0 ? Scalar(0) : Scalar::modp(0, p);
    if (pr != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(pr, j));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw InconsistencyError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = row_reduce(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  ExactMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rref(r, n + c);
  }
  return inv;
}

}  // namespace fano
