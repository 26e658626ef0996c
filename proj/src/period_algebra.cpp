#include "pk/period_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "pk/errors.hpp"

namespace pk {

// ---------------------------------------------------------------------------
// MotiveTag

MotiveTag MotiveTag::of(const RegularMotiveData& m, bool conjugate_self_dual) {
  return named(m.label(), m.rank(), conjugate_self_dual);
}

MotiveTag MotiveTag::named(std::string base, std::optional<int> rank, bool conjugate_self_dual) {
  MotiveTag t;
  t.base = std::move(base);
  t.base_rank = rank;
  t.conjugate_self_dual = conjugate_self_dual;
  return t;
}

MotiveTag MotiveTag::unit_motive() {
  auto t = named("Z", 1);
  t.unit = true;
  return t;
}

std::optional<int> MotiveTag::rank() const {
  if (det) return 1;
  return base_rank;
}

int MotiveTag::require_rank() const {
  const auto r = rank();
  if (!r) throw UnknownRankError("rank of " + str() + " is unknown");
  return *r;
}

MotiveTag MotiveTag::conjugated() const {
  auto t = *this;
  if (unit) return t;
  t.conj = !t.conj;
  return t;
}

MotiveTag MotiveTag::dualized() const {
  auto t = *this;
  if (!unit) t.dual = !t.dual;
  t.twist = -t.twist;
  return t;
}

MotiveTag MotiveTag::twisted(std::int64_t k) const {
  auto t = *this;
  t.twist += k;
  return t;
}

MotiveTag MotiveTag::determinant() const {
  if (require_rank() == 1) return *this;
  // det(N(k)) = det(N)(nk); det commutes with conjugation and dual.
  auto t = *this;
  t.det = true;
  t.twist = t.twist * *base_rank;
  return t;
}

std::string MotiveTag::str() const {
  std::string s = det ? "det(" + base + ")" : base;
  if (conj) s += "^c";
  if (dual) s += "^v";
  if (twist != 0) s += "(" + std::to_string(twist) + ")";
  return s;
}

// ---------------------------------------------------------------------------
// PeriodSymbol

namespace {

PeriodSymbol make_symbol(SymbolKind kind, MotiveTag tag, int index, int min_index) {
  if (index < min_index) {
    throw std::out_of_range("period symbol index " + std::to_string(index) + " out of range");
  }
  if (const auto n = tag.rank(); n && index > *n) {
    throw std::out_of_range("period symbol index " + std::to_string(index) +
                            " exceeds rank " + std::to_string(*n) + " of " + tag.str());
  }
  return {kind, std::move(tag), index};
}

}  // namespace

PeriodSymbol PeriodSymbol::two_pi_i() { return {}; }

PeriodSymbol PeriodSymbol::q(int i, MotiveTag tag) {
  return make_symbol(SymbolKind::Q, std::move(tag), i, 1);
}

PeriodSymbol PeriodSymbol::delta(MotiveTag tag) {
  return {SymbolKind::DeltaSmall, std::move(tag), 0};
}

PeriodSymbol PeriodSymbol::big_delta(MotiveTag tag) {
  return {SymbolKind::DeltaBig, std::move(tag), 0};
}

PeriodSymbol PeriodSymbol::q_partial(int j, MotiveTag tag) {
  return make_symbol(SymbolKind::QParen, std::move(tag), j, 0);
}

PeriodSymbol PeriodSymbol::q_upper(int j, MotiveTag tag) {
  return make_symbol(SymbolKind::QSup, std::move(tag), j, 0);
}

PeriodSymbol PeriodSymbol::automorphic(int j, MotiveTag tag) {
  return make_symbol(SymbolKind::PAuto, std::move(tag), j, 0);
}

PeriodSymbol PeriodSymbol::q_xi(MotiveTag tag) { return {SymbolKind::QXi, std::move(tag), 0}; }

std::string PeriodSymbol::str() const {
  const auto idx = std::to_string(index);
  const auto t = tag.str();
  switch (kind) {
    case SymbolKind::TwoPiI: return "(2πi)";
    case SymbolKind::Q: return "Q[" + idx + ";" + t + "]";
    case SymbolKind::DeltaSmall: return "d[" + t + "]";
    case SymbolKind::DeltaBig: return "D[" + t + "]";
    case SymbolKind::QParen: return "Qp[" + idx + ";" + t + "]";
    case SymbolKind::QSup: return "Qs[" + idx + ";" + t + "]";
    case SymbolKind::PAuto: return "P[" + idx + ";" + t + "]";
    case SymbolKind::QXi: return "Qxi[" + t + "]";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// PeriodMonomial

PeriodMonomial PeriodMonomial::of(const PeriodSymbol& s, std::int64_t exponent,
                                  std::string field) {
  PeriodMonomial x(std::move(field));
  x.multiply(s, exponent);
  return x;
}

PeriodMonomial PeriodMonomial::two_pi_i(std::int64_t exponent, std::string field) {
  return of(PeriodSymbol::two_pi_i(), exponent, std::move(field));
}

std::int64_t PeriodMonomial::exponent(const PeriodSymbol& s) const {
  auto it = factors_.find(s);
  return it == factors_.end() ? 0 : it->second;
}

void PeriodMonomial::multiply(const PeriodSymbol& s, std::int64_t e) {
  if (e == 0) return;
  auto [it, inserted] = factors_.try_emplace(s, e);
  if (!inserted) {
    it->second += e;
    if (it->second == 0) factors_.erase(it);
  }
}

PeriodMonomial& PeriodMonomial::operator*=(const PeriodMonomial& o) {
  for (const auto& [s, e] : o.factors_) multiply(s, e);
  field_ = join_fields(field_, o.field_);
  return *this;
}

PeriodMonomial PeriodMonomial::pow(std::int64_t k) const {
  PeriodMonomial x(field_);
  if (k == 0) return x;
  for (const auto& [s, e] : factors_) x.factors_.emplace(s, e * k);
  return x;
}

std::string PeriodMonomial::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [s, e] : factors_) {
    if (!out.empty()) out += " * ";
    out += s.str();
    if (e != 1 || s.kind == SymbolKind::TwoPiI) out += "^" + std::to_string(e);
  }
  return out;
}

PeriodMonomial mono_mul(const PeriodMonomial& x, const PeriodMonomial& y) { return x * y; }
PeriodMonomial mono_pow(const PeriodMonomial& x, std::int64_t k) { return x.pow(k); }
bool mono_eq(const PeriodMonomial& x, const PeriodMonomial& y) { return x == y; }

std::string join_fields(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty() || a == b) return a;
  auto split = [](const std::string& s) {
    const auto pos = s.find(';');
    if (pos == std::string::npos) return std::pair{s, false};
    return std::pair{s.substr(0, pos), true};
  };
  const auto [base_a, k_a] = split(a);
  const auto [base_b, k_b] = split(b);
  std::string base;
  if (base_a.find(base_b) != std::string::npos) {
    base = base_a;
  } else if (base_b.find(base_a) != std::string::npos) {
    base = base_b;
  } else {
    base = base_a + base_b;
  }
  return (k_a || k_b) ? base + ";K" : base;
}

// ---------------------------------------------------------------------------
// expand

namespace {

std::int64_t half_n_n_minus_1(std::int64_t n) { return n * (n - 1) / 2; }

void multiply_q_partial(PeriodMonomial& out, const MotiveTag& tag, int j, std::int64_t e) {
  for (int i = 1; i <= j; ++i) out.multiply(PeriodSymbol::q(i, tag), e);
}

void multiply_big_delta(PeriodMonomial& out, const MotiveTag& tag, std::int64_t e) {
  const auto n = tag.require_rank();
  out.multiply(PeriodSymbol::two_pi_i(), e * half_n_n_minus_1(n));
  out.multiply(PeriodSymbol::delta(tag), e);
}

}  // namespace

PeriodMonomial expand(const PeriodMonomial& x) {
  PeriodMonomial out(x.field());
  for (const auto& [s, e] : x.factors()) {
    switch (s.kind) {
      case SymbolKind::DeltaBig:
        multiply_big_delta(out, s.tag, e);
        break;
      case SymbolKind::QParen:
        s.tag.require_rank();
        multiply_q_partial(out, s.tag, s.index, e);
        break;
      case SymbolKind::QSup:
        multiply_q_partial(out, s.tag, s.index, e);
        multiply_big_delta(out, s.tag, e);
        break;
      default:
        out.multiply(s, e);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rewrite rules

std::string to_string(RuleId r) {
  return "R" + std::to_string(static_cast<int>(r) + 1);
}

std::optional<RuleId> parse_rule(const std::string& s) {
  if (s.size() != 2 || std::toupper(static_cast<unsigned char>(s[0])) != 'R') return {};
  if (s[1] < '1' || s[1] > '8') return {};
  return static_cast<RuleId>(s[1] - '1');
}

namespace {

std::string rule_field(RuleId r) {
  switch (r) {
    case RuleId::R3: return "E;K";
    case RuleId::R6: return "E(Π)";
    case RuleId::R7: return "E(Π);K";
    default: return "E";
  }
}

}  // namespace

std::optional<PeriodMonomial> rewrite_symbol(const PeriodSymbol& s, RuleId rule) {
  const auto& t = s.tag;
  PeriodMonomial rhs;
  switch (rule) {
    case RuleId::R1: {
      if (s.kind != SymbolKind::Q || !t.conj || t.twist != 0) return {};
      const int n = t.require_rank();
      rhs.multiply(PeriodSymbol::q(n + 1 - s.index, t.conjugated()), -1);
      return rhs;
    }
    case RuleId::R2: {
      if (s.kind != SymbolKind::DeltaSmall || !t.conj || t.twist != 0) return {};
      const auto base = t.conjugated();
      const int n = t.require_rank();
      for (int i = 1; i <= n; ++i) rhs.multiply(PeriodSymbol::q(i, base), 1);
      rhs.multiply(PeriodSymbol::delta(base), 1);
      return rhs;
    }
    case RuleId::R3: {
      if (s.kind != SymbolKind::DeltaSmall || t.twist == 0) return {};
      auto base = t;
      base.twist = 0;
      rhs.multiply(PeriodSymbol::two_pi_i(), t.twist * t.require_rank());
      if (!base.unit) rhs.multiply(PeriodSymbol::delta(base), 1);
      return rhs;
    }
    case RuleId::R4: {
      if (s.kind != SymbolKind::DeltaSmall || !t.dual || t.twist != 0) return {};
      auto base = t;
      base.dual = false;
      rhs.multiply(PeriodSymbol::delta(base), -1);
      return rhs;
    }
    case RuleId::R5: {
      if (s.kind != SymbolKind::DeltaSmall || !t.conj || !t.conjugate_self_dual || t.det ||
          t.twist != 0) {
        return {};
      }
      // M^c = M^v(1-n); with an outer dual, (M^c)^v = M(n-1).
      const int n = t.require_rank();
      auto image = t;
      image.conj = false;
      image.dual = !t.dual;
      image.twist = t.dual ? n - 1 : 1 - n;
      rhs.multiply(PeriodSymbol::delta(image), 1);
      return rhs;
    }
    case RuleId::R6: {
      if (s.kind != SymbolKind::Q || !t.dual || !t.conjugate_self_dual || t.conj || t.det ||
          t.twist != 0) {
        return {};
      }
      const int n = t.require_rank();
      auto base = t;
      base.dual = false;
      rhs.multiply(PeriodSymbol::q(n + 1 - s.index, base), -1);
      return rhs;
    }
    case RuleId::R7: {
      if (s.kind != SymbolKind::QXi || !t.conjugate_self_dual || !t.is_plain()) return {};
      const int n = t.require_rank();
      rhs.multiply(PeriodSymbol::two_pi_i(), -half_n_n_minus_1(n));
      rhs.multiply(PeriodSymbol::delta(t), -1);
      return rhs;
    }
    case RuleId::R8: {
      if (!t.det || t.conj || t.dual || t.twist != 0) return {};
      auto base = t;
      base.det = false;
      if (s.kind == SymbolKind::Q && s.index == 1) {
        const int n = base.require_rank();
        for (int i = 1; i <= n; ++i) rhs.multiply(PeriodSymbol::q(i, base), 1);
        return rhs;
      }
      if (s.kind == SymbolKind::DeltaSmall) {
        rhs.multiply(PeriodSymbol::delta(base), 1);
        return rhs;
      }
      return {};
    }
  }
  return {};
}

PeriodMonomial apply_rule(const PeriodMonomial& x, RuleId rule) {
  PeriodMonomial out(join_fields(x.field(), rule_field(rule)));
  bool matched = false;
  for (const auto& [s, e] : x.factors()) {
    if (auto rhs = rewrite_symbol(s, rule)) {
      matched = true;
      for (const auto& [s2, e2] : rhs->factors()) out.multiply(s2, e2 * e);
    } else {
      out.multiply(s, e);
    }
  }
  if (!matched) {
    throw RuleNotApplicable(to_string(rule) + " does not apply to " + x.str());
  }
  return out;
}

PeriodMonomial apply_rule_exhaustively(const PeriodMonomial& x, RuleId rule) {
  auto out = apply_rule(x, rule);
  for (int guard = 0; guard < 64; ++guard) {
    const bool again = std::any_of(out.factors().begin(), out.factors().end(),
                                   [rule](const auto& f) {
                                     return rewrite_symbol(f.first, rule).has_value();
                                   });
    if (!again) return out;
    out = apply_rule(out, rule);
  }
  throw std::logic_error(to_string(rule) + " does not terminate on " + x.str());
}

// ---------------------------------------------------------------------------
// Derivations

namespace {

MotiveTag csd_motive(int n) { return MotiveTag::named("M", n, /*conjugate_self_dual=*/true); }

PeriodMonomial apply_logged(const PeriodMonomial& x, RuleId rule, std::vector<std::string>& log) {
  auto y = apply_rule(x, rule);
  log.push_back(to_string(rule) + ": " + x.str() + " -> " + y.str());
  return y;
}

PeriodMonomial product_of_q(const MotiveTag& tag, int from, int to) {
  PeriodMonomial x;
  for (int i = from; i <= to; ++i) x.multiply(PeriodSymbol::q(i, tag), 1);
  return x;
}

}  // namespace

Derivation derive_lemma_127(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  Derivation d;
  const auto m = csd_motive(n);
  const auto start = PeriodMonomial::of(PeriodSymbol::delta(m.conjugated()), 1, "E");
  const auto delta_m = PeriodMonomial::of(PeriodSymbol::delta(m));

  // delta(M^c) via the conjugation lemma.
  const auto route_a = apply_logged(start, RuleId::R2, d.steps);

  // delta(M^c) via M^c = M^v(1-n), the Tate twist and the dual.
  auto route_b = apply_logged(start, RuleId::R5, d.steps);
  if (n > 1) {
    route_b = apply_logged(route_b, RuleId::R3, d.steps);
  } else {
    d.steps.push_back("R3: twist is 0 for n = 1, nothing to do");
  }
  route_b = apply_logged(route_b, RuleId::R4, d.steps);

  // route_a ~ route_b; divide both by delta(M).
  d.lhs = route_b * delta_m.inverse();
  d.rhs = route_a * delta_m.inverse();

  const auto stated_lhs = PeriodMonomial::of(PeriodSymbol::delta(m), -2) *
                          PeriodMonomial::two_pi_i(static_cast<std::int64_t>(n) * (1 - n));
  const auto stated_rhs = product_of_q(m, 1, n);
  d.ok = d.lhs == stated_lhs && d.rhs == stated_rhs;
  d.steps.push_back("equate routes: " + d.lhs.str() + " ~ " + d.rhs.str());
  return d;
}

Derivation derive_comparison_prop(int n, int s) {
  if (n < 1 || s < 0 || s > n) throw std::invalid_argument("need n >= 1 and 0 <= s <= n");
  Derivation d;
  const auto m = csd_motive(n);

  d.lhs = expand(PeriodMonomial::of(PeriodSymbol::q_upper(s, m), 1, "E(Π);K"));

  auto x = product_of_q(m.dualized(), 1, n - s) * PeriodMonomial::of(PeriodSymbol::q_xi(m));
  x.set_field("E(Π)");
  d.steps.push_back("start: " + x.str());
  if (n - s > 0) x = apply_logged(x, RuleId::R6, d.steps);

  // prod_{i>s} Q_i^-1 = Q_(s) (prod_i Q_i)^-1, and prod_i Q_i ~ delta^-2 (2 pi i)^{n(1-n)}.
  const auto lemma = derive_lemma_127(n);
  const auto before = x.str();
  x *= lemma.rhs * lemma.lhs.inverse();
  d.steps.push_back("lemma: " + before + " -> " + x.str());

  x = apply_logged(x, RuleId::R7, d.steps);
  d.rhs = x;
  d.ok = lemma.ok && d.lhs == d.rhs;
  return d;
}

}  // namespace pk
