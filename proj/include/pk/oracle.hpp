#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pk/deligne.hpp"
#include "pk/laurent.hpp"
#include "pk/period_algebra.hpp"

namespace pk {

/// Variable layout of the oracle ring: A_{ia} (n^2), B_{jb} (n'^2), Q_t (n), Q'_u (n').
struct OracleVariables {
  int n = 0;
  int np = 0;

  std::size_t count() const;
  std::size_t a(int i, int col) const;
  std::size_t b(int j, int col) const;
  std::size_t q(int t) const;
  std::size_t qp(int u) const;
  std::vector<std::string> names() const;
};

/// Dense matrix of Laurent polynomials.
struct SymMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<LaurentPoly> entries;  // row-major
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;

  SymMatrix() = default;
  SymMatrix(std::size_t r, std::size_t c, std::size_t num_vars);

  LaurentPoly& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const LaurentPoly& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Coefficient matrix of the basis {(1+F)w_a(x)mu_b : (a,b) not in A} and
/// {(1+F)w^c_t(x)mu^c_u : (t,u) not in T} in the rational basis e_i(x)f_j +
/// e^c_i(x)f^c_j, with A^c, B^c eliminated through the motivic periods.
SymMatrix build_mat1(const PairContext& ctx);

/// Generic n x n matrix (X_{ia}) over the A variables (or B when `second`).
SymMatrix generic_factor_matrix(const OracleVariables& vars, bool second);

/// Exact determinant by Laplace expansion along rows with minors memoized on
/// column subsets. Subsets of one size are independent and may be evaluated on
/// `threads` workers; the result does not depend on the schedule.
LaurentPoly sym_det(const SymMatrix& mx, unsigned threads = 1);

constexpr int kDefaultOracleBound = 12;

/// PK_MAX_ORACLE_SIZE if set to a positive integer, else kDefaultOracleBound.
int oracle_bound_from_env();

struct VerificationReport {
  std::size_t size = 0;
  LaurentPoly lhs;  // det(Mat_1) * prod_{(t,u) not in T} Q_{n+1-t} Q'_{n'+1-u}
  LaurentPoly rhs;  // det(A)^{n'} det(B)^{n}
  bool ok = false;
  int sign = 0;     // +1 or -1 when ok
  PeriodMonomial q_part;
};

/// Throws SizeLimitError if nn' exceeds max_size.
VerificationReport verify_proposition(const PairContext& ctx,
                                      int max_size = kDefaultOracleBound,
                                      unsigned threads = 1);

/// prod_{(t,u) not in T} Q_{n+1-t}(M) Q_{n'+1-u}(M') as a period monomial.
PeriodMonomial oracle_q_monomial(const PairContext& ctx);

}  // namespace pk
