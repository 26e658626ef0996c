#include "pk/oracle.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <thread>

#include "pk/errors.hpp"

namespace pk {

std::size_t OracleVariables::count() const {
  return static_cast<std::size_t>(n * n + np * np + n + np);
}

std::size_t OracleVariables::a(int i, int col) const {
  return static_cast<std::size_t>((i - 1) * n + (col - 1));
}

std::size_t OracleVariables::b(int j, int col) const {
  return static_cast<std::size_t>(n * n + (j - 1) * np + (col - 1));
}

std::size_t OracleVariables::q(int t) const {
  return static_cast<std::size_t>(n * n + np * np + (t - 1));
}

std::size_t OracleVariables::qp(int u) const {
  return static_cast<std::size_t>(n * n + np * np + n + (u - 1));
}

std::vector<std::string> OracleVariables::names() const {
  std::vector<std::string> out(count());
  for (int i = 1; i <= n; ++i) {
    for (int c = 1; c <= n; ++c) out[a(i, c)] = "A" + std::to_string(i) + "_" + std::to_string(c);
  }
  for (int j = 1; j <= np; ++j) {
    for (int c = 1; c <= np; ++c) out[b(j, c)] = "B" + std::to_string(j) + "_" + std::to_string(c);
  }
  for (int t = 1; t <= n; ++t) out[q(t)] = "Q" + std::to_string(t);
  for (int u = 1; u <= np; ++u) out[qp(u)] = "Q'" + std::to_string(u);
  return out;
}

SymMatrix::SymMatrix(std::size_t r, std::size_t c, std::size_t num_vars)
    : rows(r), cols(c), entries(r * c, LaurentPoly(num_vars)) {}

SymMatrix build_mat1(const PairContext& ctx) {
  const int n = ctx.m().rank();
  const int np = ctx.mp().rank();
  const OracleVariables vars{n, np};
  const auto size = static_cast<std::size_t>(n * np);
  const auto nv = vars.count();

  struct Column {
    bool conjugate;
    int first;
    int second;
  };
  std::vector<Column> columns;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= np; ++b) {
      if (!ctx.A().contains(a, b)) columns.push_back({false, a, b});
    }
  }
  for (int t = 1; t <= n; ++t) {
    for (int u = 1; u <= np; ++u) {
      if (!ctx.T().contains(t, u)) columns.push_back({true, t, u});
    }
  }
  if (columns.size() != size) {
    throw std::logic_error("coefficient matrix is not square: " + std::to_string(columns.size()) +
                           " columns for " + std::to_string(size) + " rows");
  }

  SymMatrix mx(size, size, nv);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= np; ++j) {
      mx.row_labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  for (const auto& col : columns) {
    mx.column_labels.push_back(std::string(col.conjugate ? "c" : "") + "(" +
                               std::to_string(col.first) + "," + std::to_string(col.second) +
                               ")");
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= np; ++j) {
      const auto r = static_cast<std::size_t>((i - 1) * np + (j - 1));
      for (std::size_t c = 0; c < size; ++c) {
        const auto& col = columns[c];
        LaurentPoly::Exponents e(nv, 0);
        if (!col.conjugate) {
          // A_{ia} B_{jb}
          e[vars.a(i, col.first)] = 1;
          e[vars.b(j, col.second)] = 1;
        } else {
          // A^c_{it} B^c_{ju} = Q_{n+1-t}^-1 Q'_{n'+1-u}^-1 A_{i,n+1-t} B_{j,n'+1-u}
          const int t = n + 1 - col.first;
          const int u = np + 1 - col.second;
          e[vars.a(i, t)] = 1;
          e[vars.b(j, u)] = 1;
          e[vars.q(t)] = -1;
          e[vars.qp(u)] = -1;
        }
        mx.at(r, c) = LaurentPoly::monomial(std::move(e));
      }
    }
  }
  return mx;
}

SymMatrix generic_factor_matrix(const OracleVariables& vars, bool second) {
  const int size = second ? vars.np : vars.n;
  const auto nv = vars.count();
  SymMatrix mx(static_cast<std::size_t>(size), static_cast<std::size_t>(size), nv);
  for (int i = 1; i <= size; ++i) {
    for (int c = 1; c <= size; ++c) {
      const auto index = second ? vars.b(i, c) : vars.a(i, c);
      mx.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(c - 1)) =
          LaurentPoly::variable(nv, index);
    }
  }
  return mx;
}

namespace {

constexpr std::size_t kMaxDeterminantSize = 20;

LaurentPoly scaled(const LaurentPoly& entry, const LaurentPoly& minor) {
  if (entry.terms().size() == 1) {
    const auto& [e, c] = entry.terms().front();
    return minor.times_monomial(e, c);
  }
  return entry * minor;
}

}  // namespace

LaurentPoly sym_det(const SymMatrix& mx, unsigned threads) {
  if (mx.rows != mx.cols) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t size = mx.rows;
  if (size == 0) return LaurentPoly::constant(0, 1);
  if (size > kMaxDeterminantSize) {
    throw SizeLimitError("matrix of size " + std::to_string(size) + " is too large");
  }
  const auto nv = mx.entries.front().num_vars();
  const std::uint32_t full = (1U << size) - 1U;

  // minors[S] = det of rows 0..|S|-1 restricted to the columns in S.
  std::vector<LaurentPoly> minors(std::size_t{1} << size);
  minors[0] = LaurentPoly::constant(nv, 1);

  std::vector<std::vector<std::uint32_t>> by_size(size + 1);
  for (std::uint32_t s = 1; s <= full; ++s) by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);

  auto compute = [&](std::uint32_t subset, std::size_t row) {
    LaurentPoly acc(nv);
    std::size_t position = 0;
    for (std::size_t c = 0; c < size; ++c) {
      const std::uint32_t bit = 1U << c;
      if ((subset & bit) == 0) continue;
      const auto& entry = mx.at(row, c);
      const auto& minor = minors[subset ^ bit];
      if (!entry.is_zero() && !minor.is_zero()) {
        auto term = scaled(entry, minor);
        if ((row + position) % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++position;
    }
    minors[subset] = std::move(acc);
  };

  const unsigned workers = std::max(1U, threads);
  for (std::size_t k = 1; k <= size; ++k) {
    const auto& level = by_size[k];
    const std::size_t row = k - 1;
    if (workers == 1 || level.size() < 2 * workers) {
      for (auto s : level) compute(s, row);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t idx = w; idx < level.size(); idx += workers) compute(level[idx], row);
        });
      }
    }
    if (k >= 2) {
      for (auto s : by_size[k - 1]) minors[s] = LaurentPoly();
    }
  }
  return minors[full];
}

int oracle_bound_from_env() {
  const char* raw = std::getenv("PK_MAX_ORACLE_SIZE");
  if (raw == nullptr) return kDefaultOracleBound;
  int v = 0;
  const auto* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, v);
  if (ec != std::errc() || ptr != end || v <= 0) return kDefaultOracleBound;
  return v;
}

PeriodMonomial oracle_q_monomial(const PairContext& ctx) {
  const int n = ctx.m().rank();
  const int np = ctx.mp().rank();
  const auto tag = ctx.tag();
  const auto tag_p = ctx.tag_p();
  PeriodMonomial x("EE'");
  for (int t = 1; t <= n; ++t) {
    for (int u = 1; u <= np; ++u) {
      if (ctx.T().contains(t, u)) continue;
      x.multiply(PeriodSymbol::q(n + 1 - t, tag), 1);
      x.multiply(PeriodSymbol::q(np + 1 - u, tag_p), 1);
    }
  }
  return x;
}

VerificationReport verify_proposition(const PairContext& ctx, int max_size, unsigned threads) {
  const int n = ctx.m().rank();
  const int np = ctx.mp().rank();
  VerificationReport report;
  report.size = static_cast<std::size_t>(n * np);
  if (n * np > max_size) {
    throw SizeLimitError("n n' = " + std::to_string(n * np) + " exceeds the oracle bound " +
                         std::to_string(max_size));
  }
  const OracleVariables vars{n, np};
  const auto det1 = sym_det(build_mat1(ctx), threads);

  // Clear the period denominators of the conjugate columns.
  LaurentPoly::Exponents q_exponents(vars.count(), 0);
  for (int t = 1; t <= n; ++t) {
    for (int u = 1; u <= np; ++u) {
      if (ctx.T().contains(t, u)) continue;
      ++q_exponents[vars.q(n + 1 - t)];
      ++q_exponents[vars.qp(np + 1 - u)];
    }
  }
  report.lhs = det1.times_monomial(q_exponents, 1);

  const auto det_a = sym_det(generic_factor_matrix(vars, false));
  const auto det_b = sym_det(generic_factor_matrix(vars, true));
  report.rhs = det_a.pow(static_cast<unsigned>(np)) * det_b.pow(static_cast<unsigned>(n));

  if (report.lhs == report.rhs) {
    report.ok = true;
    report.sign = 1;
  } else if (report.lhs == -report.rhs) {
    report.ok = true;
    report.sign = -1;
  }
  report.q_part = oracle_q_monomial(ctx);
  return report;
}

}  // namespace pk
