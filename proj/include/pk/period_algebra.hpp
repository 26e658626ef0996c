#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pk/hodge.hpp"

namespace pk {

/// Names a motive together with the functors applied to it. The functors are
/// kept in the normal form T = (((det M)^c)^v)(twist): conjugation and dual
/// commute, and det / twist are pushed to the inside / outside.
struct MotiveTag {
  std::string base;
  bool det = false;
  bool conj = false;
  bool dual = false;
  std::int64_t twist = 0;
  std::optional<int> base_rank;
  bool conjugate_self_dual = false;
  /// The unit motive Z_K: self-conjugate, self-dual, with delta(Z_K) ~ 1.
  bool unit = false;

  static MotiveTag of(const RegularMotiveData& m, bool conjugate_self_dual = false);
  static MotiveTag named(std::string base, std::optional<int> rank = std::nullopt,
                         bool conjugate_self_dual = false);
  /// Z_K, printed "Z".
  static MotiveTag unit_motive();

  std::optional<int> rank() const;
  /// Throws UnknownRankError when the rank is not known.
  int require_rank() const;
  bool is_plain() const { return !det && !conj && !dual && twist == 0; }

  MotiveTag conjugated() const;
  MotiveTag dualized() const;
  MotiveTag twisted(std::int64_t k) const;
  MotiveTag determinant() const;

  /// e.g. "M", "M^c", "det(M)", "M^v(-2)".
  std::string str() const;

  friend auto operator<=>(const MotiveTag&, const MotiveTag&) = default;
  friend bool operator==(const MotiveTag&, const MotiveTag&) = default;
};

enum class SymbolKind : std::uint8_t {
  TwoPiI,      // 2 pi i
  Q,           // Q_i(M)
  DeltaSmall,  // delta(M)
  DeltaBig,    // Delta(M) = (2 pi i)^{n(n-1)/2} delta(M)
  QParen,      // Q_(j)(M) = Q_1 ... Q_j
  QSup,        // Q^(j)(M) = Q_(j)(M) Delta(M)
  PAuto,       // P^(j)(Pi)
  QXi,         // Q_1(M(xi))
};

struct PeriodSymbol {
  SymbolKind kind = SymbolKind::TwoPiI;
  MotiveTag tag;
  int index = 0;

  static PeriodSymbol two_pi_i();
  /// Index bounds are checked whenever the tag's rank is known.
  static PeriodSymbol q(int i, MotiveTag tag);
  static PeriodSymbol delta(MotiveTag tag);
  static PeriodSymbol big_delta(MotiveTag tag);
  static PeriodSymbol q_partial(int j, MotiveTag tag);
  static PeriodSymbol q_upper(int j, MotiveTag tag);
  static PeriodSymbol automorphic(int j, MotiveTag tag);
  static PeriodSymbol q_xi(MotiveTag tag);

  std::string str() const;

  friend auto operator<=>(const PeriodSymbol&, const PeriodSymbol&) = default;
  friend bool operator==(const PeriodSymbol&, const PeriodSymbol&) = default;
};

/// Element of the free abelian group on period symbols, i.e. a class of
/// periods up to the scalars of the annotated coefficient field.
class PeriodMonomial {
 public:
  using Factors = std::map<PeriodSymbol, std::int64_t>;

  PeriodMonomial() = default;
  explicit PeriodMonomial(std::string field) : field_(std::move(field)) {}

  static PeriodMonomial of(const PeriodSymbol& s, std::int64_t exponent = 1,
                           std::string field = {});
  static PeriodMonomial two_pi_i(std::int64_t exponent, std::string field = {});

  const Factors& factors() const { return factors_; }
  std::int64_t exponent(const PeriodSymbol& s) const;
  bool is_identity() const { return factors_.empty(); }

  /// Annotation only ("E", "EE'", "E;K"...); never affects equality.
  const std::string& field() const { return field_; }
  void set_field(std::string field) { field_ = std::move(field); }

  /// Multiplies in s^e, dropping the factor if its exponent becomes zero.
  void multiply(const PeriodSymbol& s, std::int64_t e);

  PeriodMonomial& operator*=(const PeriodMonomial& o);
  friend PeriodMonomial operator*(PeriodMonomial x, const PeriodMonomial& y) {
    return x *= y;
  }
  PeriodMonomial inverse() const { return pow(-1); }
  PeriodMonomial pow(std::int64_t k) const;

  /// Canonical text, e.g. "(2πi)^-1 * Qs[2;M] * Qs[1;M']^2"; "1" for the identity.
  /// The exponent of 2 pi i is always printed, other exponents only when != 1.
  std::string str() const;

  friend bool operator==(const PeriodMonomial& x, const PeriodMonomial& y) {
    return x.factors_ == y.factors_;
  }

 private:
  Factors factors_;
  std::string field_;
};

PeriodMonomial mono_mul(const PeriodMonomial& x, const PeriodMonomial& y);
PeriodMonomial mono_pow(const PeriodMonomial& x, std::int64_t k);
bool mono_eq(const PeriodMonomial& x, const PeriodMonomial& y);

/// Combines two field annotations, e.g. ("E", "E;K") -> "E;K".
std::string join_fields(const std::string& a, const std::string& b);

/// Rewrites Delta, Q_(j) and Q^(j) into {Q_i, delta, 2 pi i}.
PeriodMonomial expand(const PeriodMonomial& x);

enum class RuleId {
  R1,  // Q_i(M^c) -> Q_{n+1-i}(M)^-1
  R2,  // delta(M^c) -> (prod Q_i(M)) delta(M)
  R3,  // delta(M(k)) -> (2 pi i)^{k rank} delta(M); delta(Z_K) is dropped
  R4,  // delta(M^v) -> delta(M)^-1
  R5,  // M^c -> M^v(1-n) under delta, conjugate self-dual M
  R6,  // Q_i(M^v) -> Q_{n+1-i}(M)^-1, conjugate self-dual M
  R7,  // Q_1(M(xi)) -> (2 pi i)^{-n(n-1)/2} delta(M)^-1, conjugate self-dual M
  R8,  // Q_1(det M) -> prod Q_i(M), delta(det M) -> delta(M)
};

std::string to_string(RuleId r);
/// Accepts "R1".."R8" (case-insensitive).
std::optional<RuleId> parse_rule(const std::string& s);

/// Right-hand side for a single symbol, or nullopt if the rule does not match.
std::optional<PeriodMonomial> rewrite_symbol(const PeriodSymbol& s, RuleId rule);

/// Replaces every matching symbol. Throws RuleNotApplicable if none matches.
PeriodMonomial apply_rule(const PeriodMonomial& x, RuleId rule);

/// Applies the rule until no symbol matches (at least once).
PeriodMonomial apply_rule_exhaustively(const PeriodMonomial& x, RuleId rule);

struct Derivation {
  PeriodMonomial lhs;
  PeriodMonomial rhs;
  bool ok = false;
  std::vector<std::string> steps;
};

/// delta(M)^-2 (2 pi i)^{n(1-n)} ~ prod Q_i for conjugate self-dual M of rank n,
/// obtained by computing delta(M^c) along two rule chains.
Derivation derive_lemma_127(int n);

/// Q^(s)(M) against (Q_1(M^v)...Q_{n-s}(M^v)) Q_1(M(xi)).
Derivation derive_comparison_prop(int n, int s);

}  // namespace pk
