#include "eco/label_polynomial.hpp"

#include <sstream>

#include "eco/error.hpp"

namespace eco {

LabelPolynomial::LabelPolynomial(
    std::initializer_list<std::pair<const Label, BigInt>> terms) {
  for (const auto& [k, c] : terms) add_term(k, c);
}

LabelPolynomial LabelPolynomial::monomial(Label k, const BigInt& c) {
  LabelPolynomial p;
  p.add_term(k, c);
  return p;
}

BigInt LabelPolynomial::coefficient(Label k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? BigInt(0) : it->second;
}

Label LabelPolynomial::min_label() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "min_label of zero polynomial");
  return terms_.begin()->first;
}

Label LabelPolynomial::max_label() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "max_label of zero polynomial");
  return terms_.rbegin()->first;
}

void LabelPolynomial::add_term(Label k, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void LabelPolynomial::add_scaled(const LabelPolynomial& q, const BigInt& c) {
  if (c == 0) return;
  for (const auto& [k, v] : q.terms_) add_term(k, c * v);
}

bool LabelPolynomial::all_nonnegative() const {
  for (const auto& [k, c] : terms_)
    if (c < 0) return false;
  return true;
}

BigInt eval_at_one(const LabelPolynomial& p) {
  BigInt s = 0;
  for (const auto& [k, c] : p.terms()) s += c;
  return s;
}

LabelPolynomial add_scaled(const LabelPolynomial& p, const LabelPolynomial& q,
                           const BigInt& c) {
  LabelPolynomial r = p;
  r.add_scaled(q, c);
  return r;
}

BigInt weighted_eval(const LabelPolynomial& p,
                     const std::function<BigInt(Label)>& weight) {
  BigInt s = 0;
  for (const auto& [k, c] : p.terms()) s += c * weight(k);
  return s;
}

LabelPolynomial shift(const LabelPolynomial& p, Label s) {
  LabelPolynomial r;
  for (const auto& [k, c] : p.terms()) {
    if (k + s < 0) throw Error(ErrorKind::NegativeLabel, "shift below label 0", k + s);
    r.add_term(k + s, c);
  }
  return r;
}

LabelPolynomial operator+(const LabelPolynomial& p, const LabelPolynomial& q) {
  return add_scaled(p, q, 1);
}

LabelPolynomial operator-(const LabelPolynomial& p, const LabelPolynomial& q) {
  return add_scaled(p, q, -1);
}

LabelPolynomial operator*(const BigInt& c, const LabelPolynomial& p) {
  return add_scaled(LabelPolynomial{}, p, c);
}

std::string to_string(const LabelPolynomial& p) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    if (!first) os << ", ";
    first = false;
    os << k << ':' << c.get_str();
  }
  os << '}';
  return os.str();
}

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::engine: return "engine";
    case Provenance::formula: return "formula";
    case Provenance::oracle: return "oracle";
    case Provenance::series: return "series";
    case Provenance::recursion: return "recursion";
  }
  return "unknown";
}

bool same_values(const Sequence& a, const Sequence& b) { return a.values == b.values; }

}  // namespace eco
