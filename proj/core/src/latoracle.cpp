#include "adlv/latoracle.hpp"

#include "adlv/hnstrat.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace adlv {

namespace {

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return fallback;
  return static_cast<std::size_t>(v);
}

Cochar divisors_from_minors(const std::vector<int>& v) {
  const std::size_t n = v.size() - 1;
  Cochar e(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (v[k] == INT_MAX) throw std::invalid_argument("relative_position: matrix is singular");
    e[n - k] = v[k] - v[k - 1];
  }
  return e;
}

// Inverse of an upper triangular matrix with monomial pivots; exact.
LMatrix triangular_inverse(const LaurentRing& ring, const LMatrix& g) {
  const std::size_t n = g.size();
  LMatrix x(n, std::vector<Laurent>(n));
  for (std::size_t j = 0; j < n; ++j) {
    x[j][j] = ring.div_monomial(Laurent::monomial(1, 0), g[j][j]);
    for (std::size_t i = j; i-- > 0;) {
      Laurent acc;
      for (std::size_t k = i + 1; k <= j; ++k) acc = ring.add(acc, ring.mul(g[i][k], x[k][j]));
      x[i][j] = ring.neg(ring.div_monomial(acc, g[i][i]));
    }
  }
  return x;
}

// t^N e_j lies in the span of columns 0..j (upper triangular, monomial pivots).
bool column_in_window(const LaurentRing& ring, const LMatrix& g, std::size_t j, int depth) {
  std::vector<Laurent> c(j + 1);
  c[j] = ring.div_monomial(Laurent::monomial(1, depth), g[j][j]);
  if (c[j].valuation() < 0) return false;
  for (std::size_t i = j; i-- > 0;) {
    Laurent acc;
    for (std::size_t k = i + 1; k <= j; ++k) acc = ring.add(acc, ring.mul(g[i][k], c[k]));
    c[i] = ring.neg(ring.div_monomial(acc, g[i][i]));
    if (!c[i].is_zero() && c[i].valuation() < 0) return false;
  }
  return true;
}

bool dominated(const Cochar& small, const Cochar& big) {
  if (small.size() != big.size()) return false;
  Int a = 0, b = 0;
  for (std::size_t i = 0; i < small.size(); ++i) {
    a += small[i];
    b += big[i];
    if (a > b) return false;
  }
  return a == b;
}

struct Shape {
  std::vector<int> pivots;
};

std::vector<Shape> window_shapes(std::size_t n, int depth) {
  std::vector<Shape> out;
  std::vector<int> a(n, -depth);
  while (true) {
    out.push_back({a});
    std::size_t i = n;
    while (i > 0 && a[i - 1] == depth) a[--i] = -depth;
    if (i == 0) break;
    ++a[i - 1];
  }
  return out;
}

// Depth-first over the columns of one pivot shape.  `visit` returns false to stop.
class ShapeWalker {
 public:
  ShapeWalker(const LaurentRing& ring, std::size_t n, int depth, const Shape& shape, std::atomic<std::size_t>& examined,
              std::size_t cap, std::atomic<bool>& stop)
      : ring_(ring), n_(n), depth_(depth), shape_(shape), examined_(examined), cap_(cap), stop_(stop) {
    g_.assign(n, std::vector<Laurent>(n));
    for (std::size_t i = 0; i < n; ++i) g_[i][i] = Laurent::monomial(1, shape.pivots[i]);
  }

  template <class Visit>
  void run(Visit&& visit) {
    column(0, visit);
  }

 private:
  template <class Visit>
  bool column(std::size_t j, Visit& visit) {
    if (stop_.load(std::memory_order_relaxed)) return false;
    if (j == n_) {
      if (examined_.fetch_add(1, std::memory_order_relaxed) + 1 > cap_) {
        stop_ = true;
        exhausted = true;
        return false;
      }
      return visit(g_);
    }
    // coefficient slots: rows i < j, exponents -N .. a_i - 1
    std::vector<std::pair<std::size_t, int>> slots;
    for (std::size_t i = 0; i < j; ++i)
      for (int e = -depth_; e < shape_.pivots[i]; ++e) slots.emplace_back(i, e);
    const std::uint32_t q = ring_.field().size();
    std::vector<std::uint32_t> digits(slots.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < j; ++i) {
        std::vector<FiniteField::Elem> c;
        const int low = -depth_;
        for (std::size_t s = 0; s < slots.size(); ++s)
          if (slots[s].first == i) c.push_back(digits[s]);
        g_[i][j] = Laurent::normalized(low, std::move(c));
      }
      if (column_in_window(ring_, g_, j, depth_) && !column(j + 1, visit)) return false;
      std::size_t k = 0;
      while (k < digits.size() && digits[k] + 1 == q) digits[k++] = 0;
      if (k == digits.size()) break;
      ++digits[k];
    }
    return true;
  }

  const LaurentRing& ring_;
  std::size_t n_;
  int depth_;
  const Shape& shape_;
  std::atomic<std::size_t>& examined_;
  std::size_t cap_;
  std::atomic<bool>& stop_;
  LMatrix g_;

 public:
  bool exhausted = false;
};

std::uint32_t generated_degree(const FiniteField& f, const LMatrix& g) {
  std::uint32_t d = 1;
  for (const auto& row : g)
    for (const auto& x : row)
      for (auto c : x.coeffs) d = std::lcm(d, f.degree_of(c));
  return d;
}

}  // namespace

std::size_t oracle_candidate_cap() { return env_size("ADLV_ORACLE_MAX_CANDIDATES", 2'000'000); }

std::size_t oracle_threads() {
  std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  return env_size("ADLV_ORACLE_THREADS", std::min<std::size_t>(hw, 8));
}

Cochar relative_position(const LaurentRing& ring, const LMatrix& a, const LMatrix& b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("relative_position: shape mismatch");
  Laurent d = ring.det(a);
  if (d.is_zero()) throw std::invalid_argument("relative_position: first lattice is degenerate");
  std::vector<int> v = ring.minor_valuations(ring.mul(ring.adjugate(a), b));
  for (std::size_t k = 1; k < v.size(); ++k)
    if (v[k] != INT_MAX) v[k] -= static_cast<int>(k) * d.valuation();
  return divisors_from_minors(v);
}

LMatrix b_matrix(const LaurentRing& ring, const BRep& b) {
  const IntMatrix& w = b.w.matrix();
  const std::size_t n = b.lambda.size();
  if (w.rows() != n || w.cols() != n) throw std::invalid_argument("b_matrix: Weyl element of the wrong size");
  LMatrix m(n, std::vector<Laurent>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (w(i, j) == 0) continue;
      FiniteField::Elem c = w(i, j) > 0 ? 1 : ring.field().neg(1);
      if (w(i, j) != 1 && w(i, j) != -1) throw std::invalid_argument("b_matrix: not a signed permutation");
      m[i][j] = Laurent::monomial(c, static_cast<int>(b.lambda[i]));
    }
  return m;
}

std::vector<LMatrix> window_lattices(const LaurentRing& ring, std::size_t n, int depth) {
  std::vector<LMatrix> out;
  std::atomic<std::size_t> examined{0};
  std::atomic<bool> stop{false};
  const std::size_t cap = oracle_candidate_cap();
  const std::uint32_t m = ring.field().degree();
  for (const auto& shape : window_shapes(n, depth)) {
    ShapeWalker walker(ring, n, depth, shape, examined, cap, stop);
    walker.run([&](const LMatrix& g) {
      if (generated_degree(ring.field(), g) == m) out.push_back(g);
      return true;
    });
    if (walker.exhausted) throw ResourceExhausted("window_lattices: candidate cap reached");
  }
  return out;
}

bool same_lattice(const LaurentRing& ring, const LMatrix& a, const LMatrix& b) {
  Cochar r = relative_position(ring, a, b);
  return std::all_of(r.begin(), r.end(), [](Int x) { return x == 0; });
}

PointSet adlv_points(const OracleConfig& cfg, bool closure, bool stop_at_first) {
  if (cfg.n == 0 || cfg.n > 5) throw std::invalid_argument("adlv_points: n must be in 1..5");
  if (cfg.depth < 0) throw std::invalid_argument("adlv_points: negative window");
  if (cfg.mu.size() != cfg.n || cfg.b.lambda.size() != cfg.n) throw std::invalid_argument("adlv_points: size mismatch");
  for (std::size_t i = 1; i < cfg.n; ++i)
    if (cfg.mu[i - 1] < cfg.mu[i]) throw std::invalid_argument("adlv_points: mu must be dominant (decreasing)");

  if (cfg.m_min == 0) throw std::invalid_argument("adlv_points: m_min must be positive");

  PointSet out;
  std::atomic<std::size_t> examined{0};
  const std::size_t cap = cfg.max_candidates != 0 ? cfg.max_candidates : oracle_candidate_cap();
  const auto shapes = window_shapes(cfg.n, cfg.depth);
  constexpr std::size_t kNone = SIZE_MAX;
  for (std::uint32_t m = cfg.m_min; m <= cfg.m_max; ++m) {
    const LaurentRing ring{FiniteField(cfg.q, m)};
    const LMatrix b = b_matrix(ring, cfg.b);
    std::atomic<bool> stop{false};
    std::atomic<bool> exhausted{false};
    std::atomic<std::size_t> next{0};
    // with stop_at_first: lowest shape index holding a point; higher shapes are abandoned
    std::atomic<std::size_t> first_shape{kNone};
    std::vector<std::vector<LatticePoint>> found(shapes.size());

    auto worker = [&] {
      for (std::size_t s = next++; s < shapes.size() && s < first_shape.load(); s = next++) {
        ShapeWalker walker(ring, cfg.n, cfg.depth, shapes[s], examined, cap, stop);
        walker.run([&](const LMatrix& g) {
          if (stop_at_first && s > first_shape.load()) return false;
          if (m > 1 && generated_degree(ring.field(), g) != m) return true;
          LMatrix h = ring.mul(triangular_inverse(ring, g), ring.mul(b, ring.sigma(g)));
          Cochar rel = divisors_from_minors(ring.minor_valuations(h));
          if (closure ? !dominated(rel, cfg.mu) : rel != cfg.mu) return true;
          Int w = 0;
          for (std::size_t i = 0; i < cfg.n; ++i) w += g[i][i].valuation();
          found[s].push_back(LatticePoint{g, w, std::move(rel), m});
          if (!stop_at_first) return true;
          std::size_t cur = first_shape.load();
          while (s < cur && !first_shape.compare_exchange_weak(cur, s)) {
          }
          return false;
        });
        if (walker.exhausted) exhausted = true;
      }
    };
    const std::size_t threads = std::min(oracle_threads(), shapes.size());
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (stop_at_first && first_shape.load() != kNone) {
      out.points.push_back(std::move(found[first_shape.load()].front()));
      break;
    }
    if (exhausted) throw ResourceExhausted("adlv_points: candidate cap reached (ADLV_ORACLE_MAX_CANDIDATES)");
    // shapes are in a fixed order and each walk is deterministic, so the merge is reproducible
    for (auto& part : found)
      for (auto& p : part) out.points.push_back(std::move(p));
  }
  out.examined = examined.load();
  return out;
}

std::string to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::found: return "found";
    case OracleStatus::not_found: return "not_found";
    case OracleStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<OracleStage> widening_schedule(int depth_limit, std::uint32_t m_limit) {
  std::vector<OracleStage> out;
  for (int n = 0; n <= depth_limit; ++n)
    // depth 0 holds only L_0, which is defined over the prime field
    for (std::uint32_t m = 1; m <= (n == 0 ? 1 : m_limit); ++m) out.push_back({n, m});
  std::stable_sort(out.begin(), out.end(), [](const OracleStage& a, const OracleStage& b) {
    const auto ka = static_cast<std::uint64_t>(a.depth) * a.m, kb = static_cast<std::uint64_t>(b.depth) * b.m;
    return ka != kb ? ka < kb : a.depth < b.depth;
  });
  return out;
}

OracleVerdict nonempty_oracle(const OracleConfig& cfg, int depth_limit, std::uint32_t m_limit, bool closure) {
  OracleVerdict v;
  const RootDatum gl = make_gl(cfg.n);
  v.predicted = in_B_G_mu(gl, cfg.b, cfg.mu).member;
  const Int det_b = std::accumulate(cfg.b.lambda.begin(), cfg.b.lambda.end(), Int{0});
  const Int det_mu = std::accumulate(cfg.mu.begin(), cfg.mu.end(), Int{0});
  if (det_b != det_mu) {
    // val det(g^-1 b sigma(g)) = val det b for every g: no window can contain a point
    v.status = OracleStatus::not_found;
    v.note = "determinant valuations differ";
  } else {
    const std::size_t budget = cfg.max_candidates != 0 ? cfg.max_candidates : oracle_candidate_cap();
    for (const OracleStage& stage : widening_schedule(depth_limit, m_limit)) {
      if (v.examined >= budget) {
        v.truncated = true;
        break;
      }
      OracleConfig c = cfg;
      c.depth = stage.depth;
      c.m_min = c.m_max = stage.m;
      c.max_candidates = budget - v.examined;
      v.depth = stage.depth;
      v.m = stage.m;
      try {
        PointSet ps = adlv_points(c, closure, true);
        v.examined += ps.examined;
        if (!ps.points.empty()) {
          v.status = OracleStatus::found;
          v.witness = ps.points.front();
          break;
        }
      } catch (const ResourceExhausted&) {
        v.examined = budget;
        v.truncated = true;
        break;
      }
    }
    // a predicted point that was not found is never reported as a negative
    if (v.status != OracleStatus::found) v.status = v.predicted ? OracleStatus::inconclusive : OracleStatus::not_found;
    if (v.truncated)
      v.note = "candidate budget reached at window " + std::to_string(v.depth) + ", degree " + std::to_string(v.m);
  }
  v.agrees = v.status != OracleStatus::inconclusive && (v.status == OracleStatus::found) == v.predicted;
  return v;
}

LMatrix s_matrix(std::size_t h, Int power) {
  LMatrix s(h, std::vector<Laurent>(h));
  for (std::size_t j = 0; j < h; ++j) {
    // s^power e_j = e_{j + power} = t^k e_r with j + power = r + h k
    Int target = static_cast<Int>(j) + power;
    Int r = ((target % static_cast<Int>(h)) + static_cast<Int>(h)) % static_cast<Int>(h);
    Int k = (target - r) / static_cast<Int>(h);
    s[static_cast<std::size_t>(r)][j] = Laurent::monomial(1, static_cast<int>(k));
  }
  return s;
}

DeltaInvariant delta_invariant(const LaurentRing& ring, const LMatrix& g) {
  const std::size_t h = g.size();
  const Laurent d = ring.det(g);
  if (d.is_zero()) throw std::invalid_argument("delta_invariant: degenerate lattice");
  const LMatrix adj = ring.adjugate(g);
  // a_{i,delta} g in g GL_h(O)  iff  k + min val(column r of g^-1) + min val(row i of g) >= 0,
  // where i + delta = r + h k.
  std::vector<int> row_val(h, INT_MAX), inv_col_val(h, INT_MAX);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      if (!g[i][j].is_zero()) row_val[i] = std::min(row_val[i], g[i][j].valuation());
      if (!adj[j][i].is_zero()) inv_col_val[i] = std::min(inv_col_val[i], adj[j][i].valuation() - d.valuation());
    }
  const int hh = static_cast<int>(h);
  auto fails = [&](std::size_t i, int delta) {
    int target = static_cast<int>(i) + delta;
    int r = ((target % hh) + hh) % hh;
    int k = (target - r) / hh;
    return k + inv_col_val[static_cast<std::size_t>(r)] + row_val[i] < 0;
  };
  int worst = INT_MIN;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t r = 0; r < h; ++r) {
      int bound = -inv_col_val[r] - row_val[i] - 1;  // largest failing k
      worst = std::max(worst, static_cast<int>(r) - static_cast<int>(i) + hh * bound);
    }
  DeltaInvariant out;
  out.delta = worst;
  for (std::size_t i = 0; i < h; ++i)
    if (fails(i, worst)) out.offending.push_back(i);
  if (out.delta >= 1 && out.offending.size() == 1) out.i_g = out.offending.front();
  if (out.delta == -1) {
    Int j = d.valuation();
    if (same_lattice(ring, g, s_matrix(h, j))) out.s_power = j;
  }
  return out;
}

}  // namespace adlv
