#include "tgrs/matrix.hpp"

#include <cctype>

#include "tgrs/textutil.hpp"

namespace tgrs {

namespace detail {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '[') ++depth;
    else if (c == ']') --depth;
    else if (c == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::uint64_t det_inplace(const FieldData& fd, std::uint64_t* a, std::size_t n) {
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
      negate = !negate;
    }
    std::uint64_t pinv = fd.inv(a[col * n + col]);
    for (std::size_t i = col + 1; i < n; ++i) {
      std::uint64_t e = a[i * n + col];
      if (e == 0) continue;
      std::uint64_t f = fd.mul(e, pinv);
      a[i * n + col] = 0;
      for (std::size_t j = col + 1; j < n; ++j) {
        a[i * n + j] = fd.sub(a[i * n + j], fd.mul(f, a[col * n + j]));
      }
    }
  }
  std::uint64_t d = 1;
  for (std::size_t i = 0; i < n; ++i) d = fd.mul(d, a[i * n + i]);
  return negate ? fd.neg(d) : d;
}

}  // namespace detail

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Felt& v) {
  if (!detail::same_field(field_.data(), v.field_data()))
    throw validation_error("matrix entry from a different field");
  data_[i * cols_ + j] = v.index();
}

void Matrix::require_same_shape(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw validation_error("matrix shape or field mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_shape(o);
  Matrix r(field_, rows_, cols_);
  const auto* fd = field_.data();
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = fd->add(data_[i], o.data_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_shape(o);
  Matrix r(field_, rows_, cols_);
  const auto* fd = field_.data();
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = fd->sub(data_[i], o.data_[i]);
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_ || cols_ != o.rows_)
    throw validation_error("matrix product shape or field mismatch");
  Matrix r(field_, rows_, o.cols_);
  const auto* fd = field_.data();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t t = 0; t < cols_; ++t) {
      std::uint64_t a = data_[i * cols_ + t];
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        std::uint64_t prod = fd->mul(a, o.data_[t * o.cols_ + j]);
        r.data_[i * o.cols_ + j] = fd->add(r.data_[i * o.cols_ + j], prod);
      }
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.data_[j * rows_ + i] = data_[i * cols_ + j];
  return r;
}

Matrix Matrix::scaled(const Felt& s) const {
  if (!detail::same_field(field_.data(), s.field_data()))
    throw validation_error("scalar from a different field");
  Matrix r(field_, rows_, cols_);
  const auto* fd = field_.data();
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = fd->mul(data_[i], s.index());
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
  for (std::uint64_t v : data_)
    if (v != 0) return false;
  return true;
}

Felt Matrix::det() const {
  if (rows_ != cols_) throw validation_error("determinant of a non-square matrix");
  std::vector<std::uint64_t> scratch = data_;
  return field_.elem(detail::det_inplace(*field_.data(), scratch.data(), rows_));
}

Matrix::Rref Matrix::rref() const {
  Matrix r = *this;
  const auto* fd = field_.data();
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < cols_ && prow < rows_; ++col) {
    std::size_t piv = prow;
    while (piv < rows_ && r.data_[piv * cols_ + col] == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != prow) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(r.data_[piv * cols_ + j], r.data_[prow * cols_ + j]);
    }
    std::uint64_t pinv = fd->inv(r.data_[prow * cols_ + col]);
    for (std::size_t j = col; j < cols_; ++j)
      r.data_[prow * cols_ + j] = fd->mul(r.data_[prow * cols_ + j], pinv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == prow) continue;
      std::uint64_t e = r.data_[i * cols_ + col];
      if (e == 0) continue;
      for (std::size_t j = col; j < cols_; ++j) {
        r.data_[i * cols_ + j] = fd->sub(r.data_[i * cols_ + j], fd->mul(e, r.data_[prow * cols_ + j]));
      }
    }
    pivots.push_back(col);
    ++prow;
  }
  return Rref{std::move(r), pivots.size(), std::move(pivots)};
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw validation_error("inverse of a non-square matrix");
  Rref aug = hstack(identity(field_, rows_)).rref();
  // Invertible iff every left-block column is a pivot; the identity block
  // keeps the augmented rank at n regardless, so check pivot positions.
  for (std::size_t i = 0; i < rows_; ++i)
    if (i >= aug.pivots.size() || aug.pivots[i] != i) return std::nullopt;
  Matrix inv(field_, rows_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rows_; ++j) inv.data_[i * rows_ + j] = aug.mat.data_[i * 2 * rows_ + rows_ + j];
  return inv;
}

namespace {

// Determinant of the submatrix of m with row `dr` and column `dc` removed.
Felt minor_det(const Matrix& m, std::size_t dr, std::size_t dc) {
  std::size_t n = m.rows();
  Matrix sub(m.field(), n - 1, n - 1);
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == dr) continue;
    std::size_t c = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == dc) continue;
      sub.set_idx(r, c, m.idx(i, j));
      ++c;
    }
    ++r;
  }
  return sub.det();
}

Matrix adjugate_cofactor(const Matrix& m) {
  std::size_t n = m.rows();
  Matrix adj(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Felt c = minor_det(m, j, i);  // adj[i][j] is the (j, i) cofactor
      if ((i + j) % 2 == 1) c = -c;
      adj.set(i, j, c);
    }
  }
  return adj;
}

}  // namespace

Matrix Matrix::adjugate() const {
  if (rows_ != cols_) throw validation_error("adjugate of a non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return *this;
  if (n == 1) return identity(field_, 1);
  if (n <= 4) return adjugate_cofactor(*this);
  Felt d = det();
  if (d.is_zero()) return adjugate_cofactor(*this);
  return inverse()->scaled(d);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix r(field_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw validation_error("column selection out of range");
    for (std::size_t i = 0; i < rows_; ++i) r.data_[i * cols.size() + j] = data_[i * cols_ + cols[j]];
  }
  return r;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (field_ != right.field_ || rows_ != right.rows_)
    throw validation_error("horizontal stack shape or field mismatch");
  Matrix r(field_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.data_[i * r.cols_ + j] = data_[i * cols_ + j];
    for (std::size_t j = 0; j < right.cols_; ++j) r.data_[i * r.cols_ + cols_ + j] = right.data_[i * right.cols_ + j];
  }
  return r;
}

std::string Matrix::str() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ',';
      out += field_.str(at(i, j));
    }
  }
  return out;
}

Matrix Matrix::parse(const Field& field, std::string_view text) {
  auto row_texts = detail::split_top_level(text, ';');
  std::size_t rows = row_texts.size();
  std::size_t cols = 0;
  std::vector<std::vector<Felt>> parsed(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    auto cells = detail::split_top_level(row_texts[i], ',');
    if (i == 0) {
      cols = cells.size();
    } else if (cells.size() != cols) {
      throw validation_error("matrix rows have unequal lengths");
    }
    for (auto cell : cells) parsed[i].push_back(field.parse(cell));
  }
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, parsed[i][j]);
  return m;
}

Matrix vandermonde(const Field& field, const std::vector<Felt>& points, std::size_t num_rows) {
  Matrix m(field, num_rows, points.size());
  const auto* fd = field.data();
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (!detail::same_field(fd, points[j].field_data()))
      throw validation_error("evaluation point from a different field");
    std::uint64_t cur = 1;
    for (std::size_t i = 0; i < num_rows; ++i) {
      m.set_idx(i, j, cur);
      cur = fd->mul(cur, points[j].index());
    }
  }
  return m;
}

Matrix diagonal(const Field& field, const std::vector<Felt>& entries) {
  Matrix m(field, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
  return m;
}

}  // namespace tgrs
