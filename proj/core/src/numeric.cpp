#include "adlv/numeric.hpp"

#include <sstream>

namespace adlv {

Int gcd(Int a, Int b) {
  if (a < 0) a = checked_sub(0, a);
  if (b < 0) b = checked_sub(0, b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IVec>& rows, std::size_t cols_if_empty) {
  std::size_t c = rows.empty() ? cols_if_empty : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IVec>& cols, std::size_t rows_if_empty) {
  std::size_t r = cols.empty() ? rows_if_empty : cols.front().size();
  IntMatrix m(r, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != r) throw std::invalid_argument("ragged matrix columns");
    for (std::size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IVec IntMatrix::row(std::size_t r) const { return IVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

IVec IntMatrix::column(std::size_t c) const {
  IVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

std::vector<IVec> IntMatrix::column_list() const {
  std::vector<IVec> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IVec IntMatrix::apply(const IVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  IVec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      Int a = (*this)(i, j);
      if (a != 0 && v[j] != 0) s = checked_add(s, checked_mul(a, v[j]));
    }
    out[i] = s;
  }
  return out;
}

RVec IntMatrix::apply(const RVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  RVec out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) out[i] += Rat((*this)(i, j)) * v[j];
  return out;
}

bool IntMatrix::is_zero() const {
  for (Int a : data_)
    if (a != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      Int x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) = checked_add(c(i, j), checked_mul(x, b(k, j)));
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum size mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = checked_add(a.data_[i], b.data_[i]);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference size mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = checked_sub(a.data_[i], b.data_[i]);
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << to_string(m.row(i));
  }
  return os << ']';
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  IntMatrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) c(a.rows() + i, j) = b(i, j);
  }
  return c;
}

IntMatrix select_rows(const IntMatrix& a, const std::vector<std::size_t>& rows) {
  IntMatrix c(rows.size(), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(rows[i], j);
  return c;
}

IntMatrix select_columns(const IntMatrix& a, const std::vector<std::size_t>& cols) {
  IntMatrix c(a.rows(), cols.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) c(i, j) = a(i, cols[j]);
  return c;
}

IVec add(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  IVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = checked_add(a[i], b[i]);
  return c;
}

IVec sub(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  IVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = checked_sub(a[i], b[i]);
  return c;
}

IVec scale(Int s, const IVec& a) {
  IVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = checked_mul(s, a[i]);
  return c;
}

IVec neg(const IVec& a) { return scale(-1, a); }

bool is_zero(const IVec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

Int dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

RVec to_rat(const IVec& a) {
  RVec r;
  r.reserve(a.size());
  for (Int x : a) r.emplace_back(x);
  return r;
}

RVec add(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  RVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

RVec sub(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  RVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

RVec scale(const Rat& s, const RVec& a) {
  RVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

bool is_zero(const RVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

bool is_integral(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

bool is_integral(const RVec& a) {
  for (const auto& x : a)
    if (!is_integral(x)) return false;
  return true;
}

Int to_int(const Rat& r) {
  if (!is_integral(r)) throw std::domain_error("rational value is not integral: " + to_string(r));
  BigInt n = boost::multiprecision::numerator(r);
  if (n > BigInt(INT64_MAX) || n < BigInt(INT64_MIN)) throw overflow_error("rational value exceeds 64-bit range");
  return static_cast<Int>(n);
}

IVec to_int(const RVec& a) {
  IVec out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(to_int(x));
  return out;
}

std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

std::string to_string(const IVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string to_string(const RVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace adlv
