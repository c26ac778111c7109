#include "adlv/laurent.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace adlv {

namespace {

using Digits = std::vector<std::uint32_t>;  // low degree first

Digits to_digits(std::uint32_t a, std::uint32_t q, std::uint32_t m) {
  Digits d(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = a % q;
    a /= q;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t q) {
  std::uint32_t a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * q + d[i];
  return a;
}

// remainder of a modulo the monic polynomial f (both low degree first) over F_q
Digits poly_mod(Digits a, const Digits& f, std::uint32_t q) {
  const std::size_t df = f.size() - 1;
  for (std::size_t i = a.size(); i-- > df;) {
    std::uint32_t c = a[i] % q;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= df; ++j) a[i - df + j] = (a[i - df + j] + (q - c) * f[j]) % q;
  }
  a.resize(std::min(a.size(), df));
  return a;
}

Digits poly_mul(const Digits& a, const Digits& b, std::uint32_t q) {
  Digits r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
  return r;
}

bool irreducible(const Digits& f, std::uint32_t q) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= n; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= q;
    for (std::uint32_t low = 0; low < count; ++low) {
      Digits g = to_digits(low, q, d);
      g.push_back(1);
      Digits r = poly_mod(f, g, q);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

FiniteField::FiniteField(std::uint32_t q, std::uint32_t m) : q_(q), m_(m), size_(1) {
  if (!is_prime(q)) throw std::invalid_argument("FiniteField: q must be prime");
  if (m == 0) throw std::invalid_argument("FiniteField: degree must be positive");
  for (std::uint32_t i = 0; i < m; ++i) {
    size_ *= q;
    if (size_ > (1u << 16)) throw std::invalid_argument("FiniteField: q^m larger than 65536");
  }

  Digits modulus;
  for (std::uint32_t low = 0; low < size_; ++low) {
    Digits f = to_digits(low, q, m);
    f.push_back(1);
    if (irreducible(f, q)) {
      modulus = f;
      break;
    }
  }
  auto raw_mul = [&](std::uint32_t a, std::uint32_t b) {
    Digits r = poly_mod(poly_mul(to_digits(a, q, m), to_digits(b, q, m), q), modulus, q);
    r.resize(m, 0);
    return from_digits(r, q);
  };
  auto raw_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = raw_mul(r, a);
      a = raw_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  const std::uint64_t order = size_ - 1;
  const auto factors = prime_factors(order);
  std::uint32_t generator = 1;
  for (std::uint32_t g = 1; g < size_; ++g) {
    if (std::all_of(factors.begin(), factors.end(), [&](std::uint64_t p) { return raw_pow(g, order / p) != 1; })) {
      generator = g;
      break;
    }
  }
  exp_.resize(order);
  log_.assign(size_, 0);
  std::uint32_t x = 1;
  for (std::uint64_t k = 0; k < order; ++k) {
    exp_[k] = x;
    log_[x] = static_cast<std::uint32_t>(k);
    x = raw_mul(x, generator);
  }
  frob_.resize(size_);
  frob_[0] = 0;
  for (std::uint32_t a = 1; a < size_; ++a) frob_[a] = exp_[(static_cast<std::uint64_t>(log_[a]) * q) % order];

  if (q != 2 && size_ <= 1024) {
    add_.resize(static_cast<std::size_t>(size_) * size_);
    for (std::uint32_t a = 0; a < size_; ++a) {
      Digits da = to_digits(a, q, m);
      for (std::uint32_t b = 0; b < size_; ++b) {
        Digits db = to_digits(b, q, m);
        for (std::uint32_t i = 0; i < m; ++i) db[i] = (da[i] + db[i]) % q;
        add_[static_cast<std::size_t>(a) * size_ + b] = from_digits(db, q);
      }
    }
  }
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (q_ == 2) return a ^ b;
  if (!add_.empty()) return add_[static_cast<std::size_t>(a) * size_ + b];
  Digits da = to_digits(a, q_, m_);
  Digits db = to_digits(b, q_, m_);
  for (std::uint32_t i = 0; i < m_; ++i) da[i] = (da[i] + db[i]) % q_;
  return from_digits(da, q_);
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const {
  if (q_ == 2) return a ^ b;
  Digits db = to_digits(b, q_, m_);
  for (auto& c : db) c = (q_ - c) % q_;
  return add(a, from_digits(db, q_));
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (size_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("FiniteField: inverse of zero");
  return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
}

std::uint32_t FiniteField::degree_of(Elem a) const {
  for (std::uint32_t d = 1; d < m_; ++d) {
    if (m_ % d != 0) continue;
    Elem x = a;
    for (std::uint32_t i = 0; i < d; ++i) x = frobenius(x);
    if (x == a) return d;
  }
  return m_;
}

FiniteField::Elem Laurent::coefficient(int e) const {
  if (is_zero() || e < low || e > high()) return 0;
  return coeffs[static_cast<std::size_t>(e - low)];
}

Laurent Laurent::monomial(FiniteField::Elem c, int e) {
  if (c == 0) return {};
  return Laurent{e, {c}};
}

Laurent Laurent::normalized(int low, std::vector<FiniteField::Elem> c) {
  std::size_t first = 0;
  while (first < c.size() && c[first] == 0) ++first;
  if (first == c.size()) return {};
  std::size_t last = c.size();
  while (c[last - 1] == 0) --last;
  return Laurent{low + static_cast<int>(first),
                 std::vector<FiniteField::Elem>(c.begin() + static_cast<std::ptrdiff_t>(first),
                                                c.begin() + static_cast<std::ptrdiff_t>(last))};
}

Laurent LaurentRing::add(const Laurent& a, const Laurent& b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int low = std::min(a.low, b.low);
  const int high = std::max(a.high(), b.high());
  std::vector<FiniteField::Elem> c(static_cast<std::size_t>(high - low + 1), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[static_cast<std::size_t>(a.low - low) + i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) {
    auto& slot = c[static_cast<std::size_t>(b.low - low) + i];
    slot = field_.add(slot, b.coeffs[i]);
  }
  return Laurent::normalized(low, std::move(c));
}

Laurent LaurentRing::neg(const Laurent& a) const {
  Laurent r = a;
  for (auto& c : r.coeffs) c = field_.neg(c);
  return r;
}

Laurent LaurentRing::sub(const Laurent& a, const Laurent& b) const { return add(a, neg(b)); }

Laurent LaurentRing::mul(const Laurent& a, const Laurent& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FiniteField::Elem> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      c[i + j] = field_.add(c[i + j], field_.mul(a.coeffs[i], b.coeffs[j]));
  }
  return Laurent::normalized(a.low + b.low, std::move(c));
}

Laurent LaurentRing::shift(const Laurent& a, int e) const {
  if (a.is_zero()) return a;
  return Laurent{a.low + e, a.coeffs};
}

Laurent LaurentRing::sigma(const Laurent& a) const {
  Laurent r = a;
  for (auto& c : r.coeffs) c = field_.frobenius(c);
  return r;
}

Laurent LaurentRing::div_monomial(const Laurent& a, const Laurent& b) const {
  if (b.coeffs.size() != 1) throw std::invalid_argument("div_monomial: divisor is not a monomial");
  if (a.is_zero()) return a;
  const auto inv = field_.inv(b.coeffs[0]);
  Laurent r{a.low - b.low, a.coeffs};
  for (auto& c : r.coeffs) c = field_.mul(c, inv);
  return r;
}

LMatrix LaurentRing::identity(std::size_t n) const {
  LMatrix m(n, std::vector<Laurent>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Laurent::monomial(1, 0);
  return m;
}

LMatrix LaurentRing::mul(const LMatrix& a, const LMatrix& b) const {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t p = k == 0 ? 0 : b[0].size();
  LMatrix r(n, std::vector<Laurent>(p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < p; ++j) r[i][j] = add(r[i][j], mul(a[i][l], b[l][j]));
    }
  return r;
}

LMatrix LaurentRing::sigma(const LMatrix& a) const {
  LMatrix r = a;
  for (auto& row : r)
    for (auto& x : row) x = sigma(x);
  return r;
}

namespace {

// Every square minor, indexed by rowmask * 2^n + colmask (equal popcounts), by expansion along the last row.
std::vector<Laurent> all_minors(const LaurentRing& ring, const LMatrix& a) {
  const std::size_t n = a.size();
  const std::size_t masks = std::size_t{1} << n;
  std::vector<Laurent> m(masks * masks);
  m[0] = Laurent::monomial(1, 0);
  std::vector<std::vector<std::size_t>> by_size(n + 1);
  for (std::size_t mask = 0; mask < masks; ++mask) by_size[static_cast<std::size_t>(__builtin_popcountll(mask))].push_back(mask);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t rows : by_size[k]) {
      const std::size_t last = 63 - static_cast<std::size_t>(__builtin_clzll(rows));
      const std::size_t rest = rows & ~(std::size_t{1} << last);
      for (std::size_t cols : by_size[k]) {
        Laurent acc;
        std::size_t pos = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (!(cols >> c & 1)) continue;
          const Laurent& entry = a[last][c];
          const Laurent& sub = m[rest * masks + (cols & ~(std::size_t{1} << c))];
          if (!entry.is_zero() && !sub.is_zero()) {
            Laurent term = ring.mul(entry, sub);
            acc = ((k - 1 + pos) % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
          }
          ++pos;
        }
        m[rows * masks + cols] = std::move(acc);
      }
    }
  return m;
}

}  // namespace

Laurent LaurentRing::det(const LMatrix& a) const {
  const std::size_t full = (std::size_t{1} << a.size()) - 1;
  return all_minors(*this, a)[full * (full + 1) + full];
}

LMatrix LaurentRing::adjugate(const LMatrix& a) const {
  const std::size_t n = a.size();
  const std::size_t masks = std::size_t{1} << n;
  const std::size_t full = masks - 1;
  auto m = all_minors(*this, a);
  LMatrix adj(n, std::vector<Laurent>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Laurent& minor = m[(full & ~(std::size_t{1} << i)) * masks + (full & ~(std::size_t{1} << j))];
      adj[j][i] = ((i + j) % 2 == 0) ? minor : neg(minor);
    }
  return adj;
}

std::vector<int> LaurentRing::minor_valuations(const LMatrix& a) const {
  const std::size_t n = a.size();
  const std::size_t masks = std::size_t{1} << n;
  auto m = all_minors(*this, a);
  std::vector<int> v(n + 1, INT_MAX);
  v[0] = 0;
  for (std::size_t rows = 1; rows < masks; ++rows)
    for (std::size_t cols = 1; cols < masks; ++cols) {
      const Laurent& x = m[rows * masks + cols];
      if (x.is_zero()) continue;
      auto k = static_cast<std::size_t>(__builtin_popcountll(rows));
      v[k] = std::min(v[k], x.valuation());
    }
  return v;
}

std::string LaurentRing::to_string(const Laurent& a) const {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(a.coeffs[i]) + "*t^" + std::to_string(a.low + static_cast<int>(i));
  }
  return out;
}

}  // namespace adlv
