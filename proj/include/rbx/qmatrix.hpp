#ifndef RBX_QMATRIX_HPP
#define RBX_QMATRIX_HPP

#include <cstddef>
#include <vector>

#include "rbx/rational.hpp"

namespace rbx::lin {

/* Dense rational matrix, row major.  Row/column counts may be zero; the
   degenerate shapes show up constantly as top or bottom ends of cochain
   complexes and must behave. */
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVec>& rows);
  static QMatrix from_columns(const std::vector<QVec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j);
  const Rat& at(std::size_t i, std::size_t j) const;

  QVec row(std::size_t i) const;
  QVec column(std::size_t j) const;

  QMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  QVec apply(const QVec& v) const;

  QMatrix operator*(const QMatrix& other) const;
  QMatrix operator+(const QMatrix& other) const;
  QMatrix operator-(const QMatrix& other) const;
  QMatrix scaled(const Rat& s) const;
  bool operator==(const QMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/* Horizontal concatenation [a | b]; row counts must agree. */
QMatrix hconcat(const QMatrix& a, const QMatrix& b);

}  // namespace rbx::lin

#endif
