#include "hearts/la/mat.hpp"

#include <sstream>

#include "hearts/error.hpp"
#include "hearts/la/kernels.hpp"

namespace hearts::la {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::Shape, what);
}

}  // namespace

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(Field f, const std::vector<std::vector<long long>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Mat m(f, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == nc, "ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = f.reduce(rows[r][c]);
  }
  return m;
}

Mat Mat::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require(cols[c].size() == rows, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Mat::row_vec(std::size_t r) const { return Vec(row(r), row(r) + cols_); }

Mat Mat::operator*(const Mat& b) const {
  require(cols_ == b.rows_, "product dimensions");
  Mat out(field_, rows_, b.cols_);
  if (b.cols_ == 0) return out;
  const Scalar p = field_.prime();
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar* dst = out.row(i);
    for (std::size_t k = 0; k < cols_; ++k) {
      Scalar a = (*this)(i, k);
      if (a) kernels::axpy(dst, b.row(k), a, b.cols_, p);
    }
  }
  return out;
}

Mat Mat::operator+(const Mat& b) const {
  require(rows_ == b.rows_ && cols_ == b.cols_, "sum dimensions");
  Mat out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], b.data_[i]);
  return out;
}

Mat Mat::operator-(const Mat& b) const {
  require(rows_ == b.rows_ && cols_ == b.cols_, "difference dimensions");
  Mat out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], b.data_[i]);
  return out;
}

Mat Mat::scaled(Scalar c) const {
  Mat out(*this);
  if (!out.data_.empty()) kernels::scale(out.data_.data(), c % field_.prime(), out.data_.size(), field_.prime());
  return out;
}

void Mat::add_scaled(const Mat& b, Scalar c) {
  require(rows_ == b.rows_ && cols_ == b.cols_, "axpy dimensions");
  if (c && !data_.empty()) kernels::axpy(data_.data(), b.data_.data(), c, data_.size(), field_.prime());
}

Mat Mat::transposed() const {
  Mat out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Mat out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "set_block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

bool Mat::is_zero() const {
  for (Scalar v : data_)
    if (v) return false;
  return true;
}

bool Mat::operator==(const Mat& b) const {
  return rows_ == b.rows_ && cols_ == b.cols_ && data_ == b.data_;
}

std::vector<std::vector<long long>> Mat::to_rows() const {
  std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Mat hcat(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows(), "hcat rows");
  Mat out(a.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Mat vcat(const Mat& a, const Mat& b) {
  require(a.cols() == b.cols(), "vcat cols");
  Mat out(a.field(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

Echelon row_reduce(Mat a) {
  const Field f = a.field();
  const Scalar p = f.prime();
  const std::size_t nr = a.rows(), nc = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t sel = r;
    while (sel < nr && a(sel, c) == 0) ++sel;
    if (sel == nr) continue;
    if (sel != r)
      for (std::size_t k = c; k < nc; ++k) std::swap(a(sel, k), a(r, k));
    Scalar inv = f.inv(a(r, c));
    if (inv != 1) kernels::scale(a.row(r) + c, inv, nc - c, p);
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r) continue;
      Scalar v = a(i, c);
      if (v) kernels::axpy(a.row(i) + c, a.row(r) + c, p - v, nc - c, p);
    }
    pivots.push_back(c);
    ++r;
  }
  return Echelon{std::move(a), std::move(pivots)};
}

std::size_t rank(const Mat& a) { return row_reduce(a).rank(); }

std::optional<Mat> solve_linear(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows(), "solve_linear rows");
  const std::size_t n = a.cols(), k = b.cols();
  Echelon e = row_reduce(hcat(a, b));
  for (std::size_t i = 0; i < e.rank(); ++i)
    if (e.pivots[i] >= n) return std::nullopt;
  Mat x(a.field(), n, k);
  for (std::size_t i = 0; i < e.rank(); ++i)
    for (std::size_t c = 0; c < k; ++c) x(e.pivots[i], c) = e.rref(i, n + c);
  return x;
}

Mat kernel_basis(const Mat& a) {
  const Field f = a.field();
  const std::size_t nc = a.cols();
  Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < nc; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat out(f, nc, free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t fc = free_cols[j];
    out(fc, j) = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) out(e.pivots[i], j) = f.neg(e.rref(i, fc));
  }
  return out;
}

std::optional<Vec> in_span(const Vec& v, const Mat& basis) {
  require(v.size() == basis.rows(), "in_span length");
  Mat rhs(basis.field(), v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) rhs(i, 0) = v[i];
  auto x = solve_linear(basis, rhs);
  if (!x) return std::nullopt;
  return x->column(0);
}

Mat row_space(const Mat& a) {
  Echelon e = row_reduce(a);
  return e.rref.block(0, 0, e.rank(), a.cols());
}

Mat column_space(const Mat& a) {
  Echelon e = row_reduce(a);
  Mat out(a.field(), a.rows(), e.rank());
  for (std::size_t j = 0; j < e.rank(); ++j)
    for (std::size_t r = 0; r < a.rows(); ++r) out(r, j) = a(r, e.pivots[j]);
  return out;
}

Mat left_inverse(const Mat& a) {
  // l a = I  <=>  a^T l^T = I
  auto x = solve_linear(a.transposed(), Mat::identity(a.field(), a.cols()));
  require(x.has_value(), "left_inverse of a matrix without full column rank");
  return x->transposed();
}

Mat right_inverse(const Mat& a) {
  auto x = solve_linear(a, Mat::identity(a.field(), a.rows()));
  require(x.has_value(), "right_inverse of a matrix without full row rank");
  return *x;
}

Mat left_kernel(const Mat& a) { return kernel_basis(a.transposed()).transposed(); }

bool is_invertible(const Mat& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }


Subspace Subspace::of_rows(const Mat& m) {
  Echelon e = row_reduce(m);
  Subspace s;
  s.basis_ = e.rref.block(0, 0, e.rank(), m.cols());
  s.pivots_ = std::move(e.pivots);
  return s;
}

Vec Subspace::residual(Vec v) const {
  if (v.size() != ambient()) throw Error(ErrorKind::Shape, "subspace vector length");
  const Scalar p = basis_.field().prime();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = v[pivots_[i]];
    if (c) kernels::axpy(v.data(), basis_.row(i), p - c, v.size(), p);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const {
  for (Scalar x : residual(v))
    if (x) return false;
  return true;
}

}  // namespace hearts::la
