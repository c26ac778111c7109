#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace adlv {

// F_{q^m}, elements encoded as 0 .. q^m - 1 (base-q digits = coefficients over F_q).
class FiniteField {
 public:
  using Elem = std::uint32_t;

  FiniteField(std::uint32_t q, std::uint32_t m);

  std::uint32_t characteristic() const { return q_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t size() const { return size_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const { return sub(0, a); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem frobenius(Elem a) const { return frob_[a]; }
  // degree of the smallest subfield containing a
  std::uint32_t degree_of(Elem a) const;

 private:
  std::uint32_t q_;
  std::uint32_t m_;
  std::uint32_t size_;
  std::vector<Elem> exp_;           // exp_[k] = g^k for a primitive g
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<Elem> frob_;
  std::vector<Elem> add_;           // q == 2 uses xor; otherwise a size_ x size_ table
};

bool is_prime(std::uint64_t n);

// Exact Laurent polynomial sum_k c_k t^{low + k}; zero has no coefficients.
struct Laurent {
  int low = 0;
  std::vector<FiniteField::Elem> coeffs;  // trimmed: first and last are nonzero

  bool is_zero() const { return coeffs.empty(); }
  // lowest exponent with a nonzero coefficient; undefined for zero
  int valuation() const { return low; }
  int high() const { return low + static_cast<int>(coeffs.size()) - 1; }
  FiniteField::Elem coefficient(int e) const;

  static Laurent monomial(FiniteField::Elem c, int e);
  // strips leading and trailing zero coefficients
  static Laurent normalized(int low, std::vector<FiniteField::Elem> c);
  friend bool operator==(const Laurent&, const Laurent&) = default;
  friend auto operator<=>(const Laurent&, const Laurent&) = default;
};

using LMatrix = std::vector<std::vector<Laurent>>;

// Arithmetic over F_{q^m}((t)) restricted to Laurent polynomials; sigma raises coefficients to the q-th power.
class LaurentRing {
 public:
  explicit LaurentRing(FiniteField f) : field_(std::move(f)) {}
  const FiniteField& field() const { return field_; }

  Laurent add(const Laurent& a, const Laurent& b) const;
  Laurent sub(const Laurent& a, const Laurent& b) const;
  Laurent neg(const Laurent& a) const;
  Laurent mul(const Laurent& a, const Laurent& b) const;
  Laurent shift(const Laurent& a, int e) const;  // t^e a
  Laurent sigma(const Laurent& a) const;
  // a / b when b is a monomial
  Laurent div_monomial(const Laurent& a, const Laurent& b) const;

  LMatrix identity(std::size_t n) const;
  LMatrix mul(const LMatrix& a, const LMatrix& b) const;
  LMatrix sigma(const LMatrix& a) const;
  Laurent det(const LMatrix& a) const;
  LMatrix adjugate(const LMatrix& a) const;
  // v[k] = minimal valuation of the k x k minors (v[0] = 0); INT_MAX when all vanish
  std::vector<int> minor_valuations(const LMatrix& a) const;

  std::string to_string(const Laurent& a) const;

 private:
  FiniteField field_;
};

}  // namespace adlv
