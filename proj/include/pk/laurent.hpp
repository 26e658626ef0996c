#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pk {

/// Multivariate Laurent polynomial with exact int64 coefficients. Terms are
/// kept sorted by exponent vector (lexicographic) with no zero coefficients,
/// so equal polynomials have identical representations. Coefficient overflow
/// throws std::overflow_error instead of wrapping.
class LaurentPoly {
 public:
  using Exponents = std::vector<std::int32_t>;
  using Term = std::pair<Exponents, std::int64_t>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t num_vars) : num_vars_(num_vars) {}

  static LaurentPoly constant(std::size_t num_vars, std::int64_t c);
  static LaurentPoly monomial(Exponents exponents, std::int64_t c = 1);
  static LaurentPoly variable(std::size_t num_vars, std::size_t index, std::int32_t power = 1);
  /// Builds from arbitrary terms, combining duplicates and dropping zeros.
  static LaurentPoly from_terms(std::size_t num_vars, std::vector<Term> terms);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly pow(unsigned k) const;

  /// Product with c * x^e; keeps the term order, so it is linear time.
  LaurentPoly times_monomial(const Exponents& e, std::int64_t c) const;

  std::string str(const std::vector<std::string>& names) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void adopt_arity(const LaurentPoly& o);

  std::size_t num_vars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace pk
