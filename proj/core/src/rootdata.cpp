#include "adlv/rootdata.hpp"

#include "adlv/intlinalg.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace adlv {

// ---------------------------------------------------------------- LeviSubset

LeviSubset::LeviSubset(std::vector<std::size_t> simple) : simple_(std::move(simple)) {
  std::sort(simple_.begin(), simple_.end());
  simple_.erase(std::unique(simple_.begin(), simple_.end()), simple_.end());
}

LeviSubset LeviSubset::full(std::size_t num_simple) {
  std::vector<std::size_t> all(num_simple);
  std::iota(all.begin(), all.end(), 0);
  return LeviSubset(std::move(all));
}

bool LeviSubset::contains(std::size_t i) const { return std::binary_search(simple_.begin(), simple_.end(), i); }

bool LeviSubset::subset_of(const LeviSubset& other) const {
  return std::includes(other.simple_.begin(), other.simple_.end(), simple_.begin(), simple_.end());
}

LeviSubset intersect(const LeviSubset& a, const LeviSubset& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.simple().begin(), a.simple().end(), b.simple().begin(), b.simple().end(),
                        std::back_inserter(out));
  return LeviSubset(std::move(out));
}

// ---------------------------------------------------------------- WeylElement

WeylElement WeylElement::inverse() const {
  std::vector<std::size_t> w(word_.rbegin(), word_.rend());
  return {inverse_unimodular(matrix_), std::move(w)};
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  std::vector<std::size_t> w = a.word_;
  w.insert(w.end(), b.word_.begin(), b.word_.end());
  return {a.matrix_ * b.matrix_, std::move(w)};
}

Int Root::height() const {
  Int h = 0;
  for (Int c : coeffs) h += c;
  return h;
}

// ---------------------------------------------------------------- helpers

namespace detail {

// Exact left inverse of a full-column-rank integer matrix, as num / den.
struct LeftInverse {
  IntMatrix a;
  IntMatrix num;
  Int den = 1;

  explicit LeftInverse(const IntMatrix& m) : a(m) {
    const std::size_t r = m.rows(), c = m.cols();
    // pick c independent rows greedily
    std::vector<std::size_t> rows;
    std::vector<RVec> basis;
    for (std::size_t i = 0; i < r && rows.size() < c; ++i) {
      std::vector<RVec> cols;
      for (std::size_t k = 0; k < rows.size(); ++k) cols.push_back(to_rat(m.row(rows[k])));
      auto sol = solve_rational(cols, to_rat(m.row(i)));
      if (!sol.x) rows.push_back(i);
    }
    if (rows.size() != c) throw RootDatumError("simple roots or coroots are linearly dependent");
    // invert the c x c submatrix over Q
    std::vector<RVec> sq(c, RVec(2 * c));
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = 0; j < c; ++j) sq[i][j] = Rat(m(rows[i], j));
      sq[i][c + i] = 1;
    }
    for (std::size_t col = 0; col < c; ++col) {
      std::size_t p = col;
      while (sq[p][col] == 0) ++p;
      std::swap(sq[p], sq[col]);
      Rat inv = Rat(1) / sq[col][col];
      for (auto& x : sq[col]) x *= inv;
      for (std::size_t i = 0; i < c; ++i) {
        if (i == col || sq[i][col] == 0) continue;
        Rat f = sq[i][col];
        for (std::size_t j = 0; j < 2 * c; ++j) sq[i][j] -= f * sq[col][j];
      }
    }
    BigInt l = 1;
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(sq[i][c + j]));
    den = static_cast<Int>(l);
    num = IntMatrix(c, r);
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j) num(i, rows[j]) = to_int(sq[i][c + j] * Rat(den));
  }

  std::optional<IVec> solve(const IVec& v) const {
    IVec x = num.apply(v);
    for (auto& e : x) {
      if (e % den != 0) return std::nullopt;
      e /= den;
    }
    if (a.apply(x) != v) return std::nullopt;
    return x;
  }

  std::optional<RVec> solve(const RVec& v) const {
    RVec x = num.apply(v);
    for (auto& e : x) e /= Rat(den);
    if (a.apply(x) != v) return std::nullopt;
    return x;
  }
};

}  // namespace detail

namespace {

IntMatrix reflection_matrix(const RootDatum& d, const Character& root, const Cochar& coroot) {
  // lambda - <root, lambda> coroot
  const std::size_t r = d.rank();
  IntMatrix m = IntMatrix::identity(r);
  IVec functional = d.pairing_matrix().transpose().apply(root);  // lambda |-> functional . lambda
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) = checked_sub(m(i, j), checked_mul(coroot[i], functional[j]));
  return m;
}

}  // namespace

struct RootDatumSolvers {
  detail::LeftInverse roots;
  detail::LeftInverse coroots;
};

// ---------------------------------------------------------------- RootDatum

namespace {
constexpr std::size_t kMaxRoots = 4000;
constexpr Int kSigmaOrderCap = 10000;
}  // namespace

RootDatum::RootDatum(RootDatumInput in) : input_(in) {
  name_ = in.name;
  rank_ = in.cochar_rank;
  simple_roots_ = in.simple_roots;
  simple_coroots_ = in.simple_coroots;
  pairing_ = in.pairing.rows() == 0 ? IntMatrix::identity(rank_) : in.pairing;
  sigma_ = in.sigma.rows() == 0 ? IntMatrix::identity(rank_) : in.sigma;
  input_.pairing = pairing_;
  input_.sigma = sigma_;

  if (rank_ == 0) throw RootDatumError("cochar_rank must be positive");
  if (simple_roots_.size() != simple_coroots_.size()) throw RootDatumError("simple roots and coroots differ in number");
  for (const auto& a : simple_roots_)
    if (a.size() != rank_) throw RootDatumError("simple root has wrong length");
  for (const auto& a : simple_coroots_)
    if (a.size() != rank_) throw RootDatumError("simple coroot has wrong length");
  if (pairing_.rows() != rank_ || pairing_.cols() != rank_) throw RootDatumError("pairing matrix has wrong shape");
  if (sigma_.rows() != rank_ || sigma_.cols() != rank_) throw RootDatumError("sigma matrix has wrong shape");

  IntMatrix pinv, sinv;
  try {
    pinv = inverse_unimodular(pairing_);
    sinv = inverse_unimodular(sigma_);
  } catch (const std::domain_error&) {
    throw RootDatumError("pairing and sigma must be invertible over the integers");
  }
  sigma_char_ = (pairing_ * sinv * pinv).transpose();
  sigma_order_ = matrix_order(sigma_, kSigmaOrderCap);

  const std::size_t n = simple_roots_.size();
  cartan_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cartan_(i, j) = pair(simple_roots_[i], simple_coroots_[j]);
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan_(i, i) != 2) throw RootDatumError("pairing of a simple root with its coroot is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan_(i, j) > 0) throw RootDatumError("non-Cartan pairing matrix (positive off-diagonal entry)");
      if ((cartan_(i, j) == 0) != (cartan_(j, i) == 0)) throw RootDatumError("non-Cartan pairing matrix (asymmetric zeros)");
    }
  }

  simple_coroot_matrix_ = IntMatrix::from_columns(simple_coroots_, rank_);
  simple_root_matrix_ = IntMatrix::from_columns(simple_roots_, rank_);

  for (std::size_t i = 0; i < n; ++i)
    reflections_.emplace_back(reflection_matrix(*this, simple_roots_[i], simple_coroots_[i]), std::vector<std::size_t>{i});

  // orbit of the simple (root, coroot) pairs under simple reflections
  std::set<std::pair<IVec, IVec>> seen;
  std::deque<std::pair<IVec, IVec>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen.insert({simple_roots_[i], simple_coroots_[i]}).second) queue.emplace_back(simple_roots_[i], simple_coroots_[i]);
  }
  while (!queue.empty()) {
    auto [a, av] = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Int c = pair(a, simple_coroots_[i]);
      Int cv = pair(simple_roots_[i], av);
      IVec b = sub(a, scale(c, simple_roots_[i]));
      IVec bv = sub(av, scale(cv, simple_coroots_[i]));
      if (seen.insert({b, bv}).second) {
        if (seen.size() > kMaxRoots) throw RootDatumError("root system is not of finite type");
        queue.emplace_back(b, bv);
      }
    }
  }

  std::shared_ptr<RootDatumSolvers> solvers;
  if (n > 0) solvers = std::make_shared<RootDatumSolvers>(RootDatumSolvers{detail::LeftInverse(simple_root_matrix_), detail::LeftInverse(simple_coroot_matrix_)});
  solvers_ = solvers;
  std::vector<Root> pos;
  for (const auto& [a, av] : seen) {
    Root r;
    r.root = a;
    r.coroot = av;
    auto c = solvers->roots.solve(a);
    auto cv = solvers->coroots.solve(av);
    if (!c || !cv) throw RootDatumError("root outside the lattice spanned by simple roots");
    r.coeffs = *c;
    r.cocoeffs = *cv;
    bool nonneg = std::all_of(r.coeffs.begin(), r.coeffs.end(), [](Int x) { return x >= 0; });
    bool nonpos = std::all_of(r.coeffs.begin(), r.coeffs.end(), [](Int x) { return x <= 0; });
    if (!nonneg && !nonpos) throw RootDatumError("root with mixed-sign expansion: not a finite-type root system");
    r.positive = nonneg;
    if (r.positive) pos.push_back(std::move(r));
  }
  std::sort(pos.begin(), pos.end(), [](const Root& x, const Root& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.coeffs > y.coeffs;
  });
  num_positive_ = pos.size();
  roots_ = pos;
  for (const auto& r : pos) {
    Root m;
    m.root = neg(r.root);
    m.coroot = neg(r.coroot);
    m.coeffs = neg(r.coeffs);
    m.cocoeffs = neg(r.cocoeffs);
    m.positive = false;
    roots_.push_back(std::move(m));
  }
  if (roots_.size() != seen.size()) throw RootDatumError("root system is not symmetric");
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    root_lookup_[roots_[i].root] = i;
    coroot_lookup_[roots_[i].coroot] = i;
  }

  // sigma must permute simple roots and coroots compatibly
  sigma_perm_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = coroot_lookup_.find(sigma_.apply(simple_coroots_[i]));
    if (it == coroot_lookup_.end() || it->second >= n) throw RootDatumError("sigma does not permute the simple coroots");
    if (sigma_char_.apply(simple_roots_[i]) != simple_roots_[it->second])
      throw RootDatumError("sigma does not permute the simple roots compatibly");
    sigma_perm_[i] = it->second;
  }
  sigma_on_roots_.resize(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    auto it = coroot_lookup_.find(sigma_.apply(roots_[i].coroot));
    if (it == coroot_lookup_.end()) throw RootDatumError("sigma does not preserve the coroots");
    sigma_on_roots_[i] = it->second;
  }
}

Int RootDatum::pair(const Character& chi, const Cochar& lambda) const {
  if (chi.size() != rank_ || lambda.size() != rank_) throw std::invalid_argument("pairing length mismatch");
  return dot(chi, pairing_.apply(lambda));
}

Rat RootDatum::pair(const Character& chi, const RatCochar& lambda) const {
  if (chi.size() != rank_ || lambda.size() != rank_) throw std::invalid_argument("pairing length mismatch");
  RVec pl = pairing_.apply(lambda);
  Rat s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    if (chi[i] != 0) s += Rat(chi[i]) * pl[i];
  return s;
}

std::size_t RootDatum::negative_of(std::size_t idx) const {
  return idx < num_positive_ ? idx + num_positive_ : idx - num_positive_;
}

std::optional<std::size_t> RootDatum::find_root(const Character& chi) const {
  auto it = root_lookup_.find(chi);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RootDatum::find_coroot(const Cochar& lambda) const {
  auto it = coroot_lookup_.find(lambda);
  if (it == coroot_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootDatum::weyl_root(const WeylElement& w, std::size_t idx) const {
  auto r = find_coroot(w.apply(roots_[idx].coroot));
  if (!r) throw std::logic_error("Weyl element does not permute the coroots");
  return *r;
}

bool RootDatum::in_levi(std::size_t root_idx, const LeviSubset& l) const {
  const auto& c = roots_[root_idx].coeffs;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0 && !l.contains(i)) return false;
  return true;
}

std::vector<std::size_t> RootDatum::roots_of(const LeviSubset& l) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (in_levi(i, l)) out.push_back(i);
  return out;
}

std::vector<std::size_t> RootDatum::positive_roots_of(const LeviSubset& l) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < num_positive_; ++i)
    if (in_levi(i, l)) out.push_back(i);
  return out;
}

std::vector<std::size_t> RootDatum::unipotent_roots(const LeviSubset& l) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < num_positive_; ++i)
    if (!in_levi(i, l)) out.push_back(i);
  return out;
}

bool RootDatum::sigma_stable(const LeviSubset& l) const {
  for (std::size_t i : l.simple())
    if (!l.contains(sigma_perm_[i])) return false;
  return true;
}

std::vector<std::vector<std::size_t>> RootDatum::components(const LeviSubset& l) const {
  std::vector<std::vector<std::size_t>> comps;
  std::set<std::size_t> done;
  for (std::size_t s : l.simple()) {
    if (done.count(s)) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> q{s};
    done.insert(s);
    while (!q.empty()) {
      std::size_t a = q.front();
      q.pop_front();
      comp.push_back(a);
      for (std::size_t b : l.simple())
        if (!done.count(b) && cartan_(a, b) != 0) {
          done.insert(b);
          q.push_back(b);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<std::vector<std::size_t>> RootDatum::sigma_orbits_simple() const {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> done(num_simple(), false);
  for (std::size_t i = 0; i < num_simple(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> orb;
    for (std::size_t j = i; !done[j]; j = sigma_perm_[j]) {
      done[j] = true;
      orb.push_back(j);
    }
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

std::vector<std::vector<std::size_t>> RootDatum::sigma_orbits_roots(const std::vector<std::size_t>& roots) const {
  std::vector<std::vector<std::size_t>> orbits;
  std::set<std::size_t> done;
  for (std::size_t r : roots) {
    if (done.count(r)) continue;
    std::vector<std::size_t> orb;
    for (std::size_t j = r; !done.count(j); j = sigma_on_roots_[j]) {
      done.insert(j);
      orb.push_back(j);
    }
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

WeylElement RootDatum::reflection_in(std::size_t root_idx) const {
  std::size_t a = root_idx < num_positive_ ? root_idx : negative_of(root_idx);
  // walk down to a simple root: s_alpha = u s_j u^{-1}
  std::vector<std::size_t> path;
  while (roots_[a].height() > 1) {
    std::size_t step = num_simple();
    for (std::size_t i = 0; i < num_simple(); ++i)
      if (pair(roots_[a].root, simple_coroots_[i]) > 0) {
        step = i;
        break;
      }
    if (step == num_simple()) throw std::logic_error("no descent for a non-simple positive root");
    path.push_back(step);
    a = weyl_root(reflections_[step], a);
  }
  std::vector<std::size_t> word(path.begin(), path.end());
  word.push_back(a);
  word.insert(word.end(), path.rbegin(), path.rend());
  return {reflection_matrix(*this, roots_[root_idx].root, roots_[root_idx].coroot), std::move(word)};
}

std::vector<WeylElement> RootDatum::weyl_group(const LeviSubset& l) const {
  std::map<IntMatrix, WeylElement> seen;
  std::deque<WeylElement> queue;
  WeylElement e = WeylElement::identity(rank_);
  seen.emplace(e.matrix(), e);
  queue.push_back(e);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (std::size_t i : l.simple()) {
      WeylElement v = w * reflections_[i];
      if (seen.emplace(v.matrix(), v).second) queue.push_back(v);
    }
  }
  std::vector<WeylElement> out;
  out.reserve(seen.size());
  for (auto& [m, w] : seen) out.push_back(w);
  return out;
}

std::optional<IVec> RootDatum::coroot_coordinates(const Cochar& lambda) const {
  if (num_simple() == 0) return is_zero(lambda) ? std::optional<IVec>(IVec{}) : std::nullopt;
  return solvers_->coroots.solve(lambda);
}

std::optional<RVec> RootDatum::coroot_coordinates(const RatCochar& lambda) const {
  if (num_simple() == 0) return is_zero(lambda) ? std::optional<RVec>(RVec{}) : std::nullopt;
  return solvers_->coroots.solve(lambda);
}

std::optional<IVec> RootDatum::root_coordinates(const Character& chi) const {
  if (num_simple() == 0) return is_zero(chi) ? std::optional<IVec>(IVec{}) : std::nullopt;
  return solvers_->roots.solve(chi);
}

Cochar RootDatum::apply_sigma(const Cochar& v, Int power) const {
  Int p = mod_floor(power, sigma_order_);
  Cochar out = v;
  for (Int i = 0; i < p; ++i) out = sigma_.apply(out);
  return out;
}

RatCochar RootDatum::apply_sigma(const RatCochar& v, Int power) const {
  Int p = mod_floor(power, sigma_order_);
  RatCochar out = v;
  for (Int i = 0; i < p; ++i) out = sigma_.apply(out);
  return out;
}

}  // namespace adlv
