#pragma once

#include "adlv/numeric.hpp"

#include <optional>

namespace adlv {

// U * A * V == D with U, V unimodular and D diagonal, d_0 | d_1 | ... , d_i > 0 for i < rank.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;
  IVec diagonal;  // first `rank` diagonal entries of D
};

SmithForm smith_normal_form(const IntMatrix& a);

// Row-style Hermite normal form of the lattice spanned by the rows of `gens`:
// echelon rows with positive pivots, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_rows(const IntMatrix& gens);
IVec reduce_by_hermite(const IntMatrix& hnf, IVec v);
std::vector<std::size_t> hermite_pivots(const IntMatrix& hnf);

// Integer solution of A x = b, if one exists.
std::optional<IVec> solve_integer(const IntMatrix& a, const IVec& b);

// Z-basis of {x : A x = 0}, as columns.
IntMatrix integer_kernel(const IntMatrix& a);

IntMatrix inverse_unimodular(const IntMatrix& a);

// Smallest n >= 1 with a^n = identity; throws once `cap` is exceeded.
Int matrix_order(const IntMatrix& a, Int cap);

bool lattices_equal(const std::vector<IVec>& a, const std::vector<IVec>& b, std::size_t dim);
bool in_lattice(const std::vector<IVec>& gens, const IVec& v);

struct RationalSolution {
  std::optional<RVec> x;  // one solution, free variables set to zero
  std::size_t rank = 0;
  std::size_t unknowns = 0;
  bool unique() const { return x.has_value() && rank == unknowns; }
};

// Solve sum_j x_j * columns[j] == b exactly over Q.
RationalSolution solve_rational(const std::vector<RVec>& columns, const RVec& b);

}  // namespace adlv
