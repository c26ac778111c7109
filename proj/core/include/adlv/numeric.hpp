#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace adlv {

using Int = std::int64_t;
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using IVec = std::vector<Int>;
using RVec = std::vector<Rat>;

struct overflow_error : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// An enumeration hit a configured size cap; the answer is unknown, not negative.
struct ResourceExhausted : std::length_error {
  using std::length_error::length_error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
  return r;
}

// floor division and non-negative remainder for b > 0
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_floor(Int a, Int b) {
  Int r = a % b;
  if (r < 0) r += (b < 0 ? -b : b);
  return r;
}

Int gcd(Int a, Int b);

// Dense row-major integer matrix.  Empty shapes are allowed (0 x n, n x 0).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IVec>& rows, std::size_t cols_if_empty = 0);
  static IntMatrix from_columns(const std::vector<IVec>& cols, std::size_t rows_if_empty = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IVec row(std::size_t r) const;
  IVec column(std::size_t c) const;
  std::vector<IVec> column_list() const;

  IntMatrix transpose() const;
  IVec apply(const IVec& v) const;
  RVec apply(const RVec& v) const;

  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

  const std::vector<Int>& raw() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix select_rows(const IntMatrix& a, const std::vector<std::size_t>& rows);
IntMatrix select_columns(const IntMatrix& a, const std::vector<std::size_t>& cols);

IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(Int s, const IVec& a);
IVec neg(const IVec& a);
bool is_zero(const IVec& a);
Int dot(const IVec& a, const IVec& b);

RVec to_rat(const IVec& a);
RVec add(const RVec& a, const RVec& b);
RVec sub(const RVec& a, const RVec& b);
RVec scale(const Rat& s, const RVec& a);
bool is_zero(const RVec& a);
bool is_integral(const Rat& r);
bool is_integral(const RVec& a);
IVec to_int(const RVec& a);  // throws unless integral
Int to_int(const Rat& r);

std::string to_string(const Rat& r);
std::string to_string(const IVec& v);
std::string to_string(const RVec& v);

}  // namespace adlv
