#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hearts/la/field.hpp"

namespace hearts::la {

using Vec = std::vector<Scalar>;

// Dense row-major matrix over F_p.
class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t rows, std::size_t cols);

  static Mat identity(Field f, std::size_t n);
  static Mat from_rows(Field f, const std::vector<std::vector<long long>>& rows);
  // Columns of the result are the given vectors, each of length `rows`.
  static Mat from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar* row(std::size_t r) { return data_.data() + r * cols_; }
  const Scalar* row(std::size_t r) const { return data_.data() + r * cols_; }
  const std::vector<Scalar>& data() const { return data_; }
  std::vector<Scalar>& data() { return data_; }

  Vec column(std::size_t c) const;
  Vec row_vec(std::size_t r) const;

  Mat operator*(const Mat& b) const;
  Mat operator+(const Mat& b) const;
  Mat operator-(const Mat& b) const;
  Mat scaled(Scalar c) const;
  Mat transposed() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  // self += c * b
  void add_scaled(const Mat& b, Scalar c);

  bool is_zero() const;
  bool operator==(const Mat& b) const;
  bool operator!=(const Mat& b) const { return !(*this == b); }

  std::vector<std::vector<long long>> to_rows() const;
  std::string to_string() const;

 private:
  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Mat hcat(const Mat& a, const Mat& b);
Mat vcat(const Mat& a, const Mat& b);
Mat block_diag(const Mat& a, const Mat& b);

struct Echelon {
  Mat rref;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form with leftmost pivots.
Echelon row_reduce(Mat a);
std::size_t rank(const Mat& a);

// Some x with a * x = b, or nothing. Free variables are set to zero.
std::optional<Mat> solve_linear(const Mat& a, const Mat& b);
// Basis of {x : a x = 0} as the columns of the result, one per free column,
// with a 1 in that column (canonical RREF basis).
Mat kernel_basis(const Mat& a);
// Coefficients expressing v in the span of `basis` (columns).
std::optional<Vec> in_span(const Vec& v, const Mat& basis);

// Rows of the result form an RREF basis of the row space of `a`.
Mat row_space(const Mat& a);
// Columns spanning the image of a (pivot columns of a).
Mat column_space(const Mat& a);
// l with l * a = identity; a must have full column rank.
Mat left_inverse(const Mat& a);
// r with a * r = identity; a must have full row rank.
Mat right_inverse(const Mat& a);
// Rows spanning {y : y a = 0}; q * a = 0 and q has full row rank.
Mat left_kernel(const Mat& a);
bool is_invertible(const Mat& a);


// Row space kept in reduced echelon form for membership queries.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient) : basis_(f, 0, ambient) {}
  // Span of the rows of m.
  static Subspace of_rows(const Mat& m);

  std::size_t dim() const { return pivots_.size(); }
  std::size_t ambient() const { return basis_.cols(); }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // v minus its projection along the pivot coordinates.
  Vec residual(Vec v) const;
  bool contains(const Vec& v) const;

 private:
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hearts::la
