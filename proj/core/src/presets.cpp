#include "adlv/rootdata.hpp"

#include <sstream>

namespace adlv {
namespace {

IVec unit(std::size_t n, std::size_t i) {
  IVec v(n, 0);
  v[i] = 1;
  return v;
}

IVec diff(std::size_t n, std::size_t i, std::size_t j) {
  IVec v(n, 0);
  v[i] += 1;
  v[j] -= 1;
  return v;
}

std::string with_params(const std::string& base, std::initializer_list<std::size_t> ps) {
  std::ostringstream os;
  os << base << '(';
  bool first = true;
  for (auto p : ps) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  os << ')';
  return os.str();
}

IntMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  // column j has its 1 in row perm[j]
  IntMatrix m(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = 1;
  return m;
}

RootDatum from_cartan(const IntMatrix& cartan, const std::vector<std::size_t>& perm, bool adjoint, std::string name) {
  const std::size_t n = cartan.rows();
  if (n == 0) throw RootDatumError("no roots: adjoint and simply connected forms need a semisimple rank");
  RootDatumInput in;
  in.name = std::move(name);
  in.cochar_rank = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (adjoint) {
      in.simple_roots.push_back(unit(n, j));
      in.simple_coroots.push_back(cartan.column(j));
    } else {
      in.simple_roots.push_back(cartan.row(j));
      in.simple_coroots.push_back(unit(n, j));
    }
  }
  in.pairing = IntMatrix::identity(n);
  in.sigma = permutation_matrix(perm);
  return RootDatum(std::move(in));
}

IntMatrix d4_cartan() {
  // node 1 is central
  IntMatrix c(4, 4);
  for (std::size_t i = 0; i < 4; ++i) c(i, i) = 2;
  for (std::size_t outer : {0u, 2u, 3u}) {
    c(outer, 1) = -1;
    c(1, outer) = -1;
  }
  return c;
}

}  // namespace

RootDatum make_gl(std::size_t n) {
  if (n < 1) throw RootDatumError("GL(n) needs n >= 1");
  RootDatumInput in;
  in.name = with_params("GL", {n});
  in.cochar_rank = n;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    in.simple_roots.push_back(diff(n, i, i + 1));
    in.simple_coroots.push_back(diff(n, i, i + 1));
  }
  return RootDatum(std::move(in));
}

RootDatum make_res_gl(std::size_t n, std::size_t d) {
  if (n < 1 || d < 1) throw RootDatumError("ResGL(n,d) needs n, d >= 1");
  const std::size_t r = n * d;
  RootDatumInput in;
  in.name = with_params("ResGL", {n, d});
  in.cochar_rank = r;
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t i = 0; i + 1 < n; ++i) {
      in.simple_roots.push_back(diff(r, c * n + i, c * n + i + 1));
      in.simple_coroots.push_back(diff(r, c * n + i, c * n + i + 1));
    }
  std::vector<std::size_t> perm(r);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t i = 0; i < n; ++i) perm[c * n + i] = ((c + 1) % d) * n + i;
  in.sigma = permutation_matrix(perm);
  return RootDatum(std::move(in));
}

RootDatum make_gu(std::size_t n) {
  if (n < 1) throw RootDatumError("GU(n) needs n >= 1");
  // cocharacters (a_1..a_n; c); sigma(a; c) = (c - a_{n+1-i}; c)
  const std::size_t r = n + 1;
  RootDatumInput in;
  in.name = with_params("GU", {n});
  in.cochar_rank = r;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    in.simple_roots.push_back(diff(r, i, i + 1));
    in.simple_coroots.push_back(diff(r, i, i + 1));
  }
  IntMatrix s(r, r);
  for (std::size_t i = 0; i < n; ++i) {
    s(i, n - 1 - i) = -1;
    s(i, n) = 1;
  }
  s(n, n) = 1;
  in.sigma = s;
  return RootDatum(std::move(in));
}

RootDatum make_gsp(std::size_t n) {
  if (n < 1) throw RootDatumError("GSp(2n) needs n >= 1");
  // cocharacters (a_1..a_n; c) for diag(t^{a_1},..,t^{a_n}, t^{c-a_n},..,t^{c-a_1})
  const std::size_t r = n + 1;
  RootDatumInput in;
  in.name = with_params("GSp", {2 * n});
  in.cochar_rank = r;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    in.simple_roots.push_back(diff(r, i, i + 1));
    in.simple_coroots.push_back(diff(r, i, i + 1));
  }
  IVec longr(r, 0);
  longr[n - 1] = 2;
  longr[n] = -1;
  in.simple_roots.push_back(longr);
  in.simple_coroots.push_back(unit(r, n - 1));
  return RootDatum(std::move(in));
}

RootDatum make_so_even(std::size_t n, bool quasi_split) {
  if (n < 2) throw RootDatumError("SO(2n) needs n >= 2");
  RootDatumInput in;
  in.name = with_params(quasi_split ? "QSO" : "SO", {2 * n});
  in.cochar_rank = n;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    in.simple_roots.push_back(diff(n, i, i + 1));
    in.simple_coroots.push_back(diff(n, i, i + 1));
  }
  IVec last(n, 0);
  last[n - 2] = 1;
  last[n - 1] = 1;
  in.simple_roots.push_back(last);
  in.simple_coroots.push_back(last);
  IntMatrix s = IntMatrix::identity(n);
  if (quasi_split) s(n - 1, n - 1) = -1;
  in.sigma = s;
  return RootDatum(std::move(in));
}

RootDatum make_d4_triality(bool simply_connected) {
  // sigma cycles the outer nodes 0 -> 2 -> 3 -> 0
  return from_cartan(d4_cartan(), {2, 1, 3, 0}, !simply_connected,
                     simply_connected ? "Spin(8)-triality" : "PSO(8)-triality");
}

RootDatum make_product(const RootDatum& a, const RootDatum& b) {
  const std::size_t ra = a.rank(), rb = b.rank(), r = ra + rb;
  auto pad = [&](const IVec& v, std::size_t offset) {
    IVec out(r, 0);
    for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
    return out;
  };
  auto block = [&](const IntMatrix& x, const IntMatrix& y) {
    IntMatrix m(r, r);
    for (std::size_t i = 0; i < ra; ++i)
      for (std::size_t j = 0; j < ra; ++j) m(i, j) = x(i, j);
    for (std::size_t i = 0; i < rb; ++i)
      for (std::size_t j = 0; j < rb; ++j) m(ra + i, ra + j) = y(i, j);
    return m;
  };
  RootDatumInput in;
  in.name = a.name() + "x" + b.name();
  in.cochar_rank = r;
  for (std::size_t i = 0; i < a.num_simple(); ++i) {
    in.simple_roots.push_back(pad(a.simple_root(i), 0));
    in.simple_coroots.push_back(pad(a.simple_coroot(i), 0));
  }
  for (std::size_t i = 0; i < b.num_simple(); ++i) {
    in.simple_roots.push_back(pad(b.simple_root(i), ra));
    in.simple_coroots.push_back(pad(b.simple_coroot(i), ra));
  }
  in.pairing = block(a.pairing_matrix(), b.pairing_matrix());
  in.sigma = block(a.sigma(), b.sigma());
  return RootDatum(std::move(in));
}

RootDatum adjoint_of(const RootDatum& d) {
  return from_cartan(d.cartan_matrix(), d.sigma_permutation(), true, "ad(" + d.name() + ")");
}

RootDatum levi_datum(const RootDatum& d, const LeviSubset& l) {
  if (!d.sigma_stable(l)) throw RootDatumError("levi_datum: the Levi is not sigma-stable");
  RootDatumInput in;
  in.name = d.name() + "[M" + to_string(IVec(l.simple().begin(), l.simple().end())) + "]";
  in.cochar_rank = d.rank();
  for (std::size_t i : l.simple()) {
    in.simple_roots.push_back(d.simple_root(i));
    in.simple_coroots.push_back(d.simple_coroot(i));
  }
  in.pairing = d.pairing_matrix();
  in.sigma = d.sigma();
  return RootDatum(std::move(in));
}

RootDatum simply_connected_of(const RootDatum& d) {
  return from_cartan(d.cartan_matrix(), d.sigma_permutation(), false, "sc(" + d.name() + ")");
}

IntMatrix adjoint_projection(const RootDatum& d) {
  std::vector<IVec> rows;
  const IntMatrix pt = d.pairing_matrix().transpose();
  for (const auto& a : d.simple_roots()) rows.push_back(pt.apply(a));
  return IntMatrix::from_rows(rows, d.rank());
}

std::vector<std::string> preset_names() {
  return {"GL", "PGL", "SL", "ResGL", "GU", "PGU", "GSp", "PGSp", "SO", "QSO", "PSO", "D4-triality", "Spin8-triality"};
}

RootDatum make_preset(const std::string& name, const std::vector<Int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw RootDatumError("preset " + name + " expects " + std::to_string(k) + " parameter(s)");
    for (Int p : params)
      if (p < 1 || p > 64) throw RootDatumError("preset " + name + ": parameter out of range");
  };
  auto p = [&](std::size_t i) { return static_cast<std::size_t>(params[i]); };
  // symplectic and orthogonal presets are parametrised by the matrix size 2n
  auto half = [&](std::size_t i) {
    if (params[i] % 2 != 0) throw RootDatumError("preset " + name + " expects an even matrix size");
    return p(i) / 2;
  };
  if (name == "GL") return need(1), make_gl(p(0));
  if (name == "PGL") return need(1), adjoint_of(make_gl(p(0)));
  if (name == "SL") return need(1), simply_connected_of(make_gl(p(0)));
  if (name == "ResGL") return need(2), make_res_gl(p(0), p(1));
  if (name == "GU") return need(1), make_gu(p(0));
  if (name == "PGU") return need(1), adjoint_of(make_gu(p(0)));
  if (name == "GSp") return need(1), make_gsp(half(0));
  if (name == "PGSp") return need(1), adjoint_of(make_gsp(half(0)));
  if (name == "SO") return need(1), make_so_even(half(0), false);
  if (name == "QSO") return need(1), make_so_even(half(0), true);
  if (name == "PSO") return need(1), adjoint_of(make_so_even(half(0), false));
  if (name == "D4-triality") return need(0), make_d4_triality(false);
  if (name == "Spin8-triality") return need(0), make_d4_triality(true);
  throw RootDatumError("unknown preset: " + name);
}

}  // namespace adlv
