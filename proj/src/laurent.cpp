#include "pk/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace pk {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

LaurentPoly::Exponents add_exponents(const LaurentPoly::Exponents& x,
                                     const LaurentPoly::Exponents& y) {
  LaurentPoly::Exponents r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

// Merge two sorted term lists, scaling the second by `sign`.
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& x,
                                     const std::vector<LaurentPoly::Term>& y, int sign) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, sign * j->second);
      ++j;
    } else {
      const auto c = checked_add(i->second, sign * j->second);
      if (c != 0) out.emplace_back(i->first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t num_vars, std::int64_t c) {
  LaurentPoly p(num_vars);
  if (c != 0) p.terms_.emplace_back(Exponents(num_vars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponents exponents, std::int64_t c) {
  LaurentPoly p(exponents.size());
  if (c != 0) p.terms_.emplace_back(std::move(exponents), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t num_vars, std::size_t index, std::int32_t power) {
  if (index >= num_vars) throw std::out_of_range("variable index out of range");
  Exponents e(num_vars, 0);
  e[index] = power;
  return monomial(std::move(e));
}

LaurentPoly LaurentPoly::from_terms(std::size_t num_vars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.first.size() != num_vars) throw std::invalid_argument("exponent arity mismatch");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  std::vector<Term> combined;
  for (auto& t : terms) {
    if (!combined.empty() && combined.back().first == t.first) {
      combined.back().second = checked_add(combined.back().second, t.second);
    } else {
      combined.push_back(std::move(t));
    }
  }
  LaurentPoly p(num_vars);
  for (auto& t : combined) {
    if (t.second != 0) p.terms_.push_back(std::move(t));
  }
  return p;
}

void LaurentPoly::adopt_arity(const LaurentPoly& o) {
  if (num_vars_ == o.num_vars_) return;
  if (terms_.empty() && num_vars_ == 0) {
    num_vars_ = o.num_vars_;
    return;
  }
  if (o.terms_.empty() && o.num_vars_ == 0) return;
  throw std::invalid_argument("Laurent polynomials over different rings");
}

LaurentPoly LaurentPoly::operator-() const {
  auto r = *this;
  for (auto& t : r.terms_) t.second = checked_mul(t.second, -1);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  adopt_arity(o);
  terms_ = merge(terms_, o.terms_, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  adopt_arity(o);
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

LaurentPoly LaurentPoly::times_monomial(const Exponents& e, std::int64_t c) const {
  LaurentPoly r(num_vars_);
  if (c == 0) return r;
  if (e.size() != num_vars_) throw std::invalid_argument("exponent arity mismatch");
  r.terms_.reserve(terms_.size());
  // Lexicographic order is translation invariant, so the result stays sorted.
  for (const auto& t : terms_) r.terms_.emplace_back(add_exponents(t.first, e), checked_mul(t.second, c));
  return r;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  const bool x_free = x.is_zero() && x.num_vars() == 0;
  const bool y_free = y.is_zero() && y.num_vars() == 0;
  if (!x_free && !y_free && x.num_vars() != y.num_vars()) {
    throw std::invalid_argument("Laurent polynomials over different rings");
  }
  const auto arity = std::max(x.num_vars(), y.num_vars());
  if (x.is_zero() || y.is_zero()) return LaurentPoly(arity);
  const auto& small = x.terms().size() <= y.terms().size() ? x : y;
  const auto& large = x.terms().size() <= y.terms().size() ? y : x;
  LaurentPoly acc(arity);
  for (const auto& [e, c] : small.terms()) acc += large.times_monomial(e, c);
  return acc;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  auto result = constant(num_vars_, 1);
  auto base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    const bool unit = c == 1 || c == -1;
    std::string coeff = unit && !mono.empty() ? (c < 0 ? "-" : "") : std::to_string(c);
    if (!mono.empty() && !unit) coeff += "*";
    std::string term = coeff + mono;
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace pk
