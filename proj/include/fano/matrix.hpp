#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fano/scalar.hpp"

namespace fano {

/// Dense row-major matrix over an exact field.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  ExactMatrix(std::size_t rows, std::size_t cols, Vector entries);
  /// Nested initializer rows; all rows must have equal length.
  static ExactMatrix from_rows(const std::vector<Vector>& rows);
  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  const Vector& entries() const noexcept { return a_; }

  ExactMatrix transpose() const;
  /// Rows stacked vertically; column counts must agree.
  ExactMatrix stacked(const ExactMatrix& below) const;
  Vector apply(const Vector& v) const;

  /// Prime of the entries' field (0 for rationals).
  std::uint32_t prime() const { return common_prime(a_); }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector a_;
};

/// Reduced row-echelon form together with its pivot columns.
struct RowEchelon {
  ExactMatrix rref;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Over Q: rows are cleared to integers and reduced by fraction-free
/// (Bareiss) elimination before a final rational back-substitution.
/// Over F_p: ordinary Gauss-Jordan.
RowEchelon row_reduce(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Basis of the right kernel, one vector per free column (in column order),
/// with a 1 in that free column.
std::vector<Vector> kernel_basis(const ExactMatrix& m);

/// A solution of m x = b with all free variables set to zero, if one exists.
std::optional<Vector> solve(const ExactMatrix& m, const Vector& b);

Scalar determinant(const ExactMatrix& m);

std::optional<ExactMatrix> inverse(const ExactMatrix& m);

}  // namespace fano
