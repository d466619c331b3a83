#include "arithmat/polynomial.hpp"

#include <algorithm>

namespace arithmat {

namespace {

// Appends "c*mono" in canonical form; `first` tracks whether a term was emitted.
void append_term(std::string& out, const Integer& c, const std::string& mono, bool& first) {
  const bool negative = c < 0;
  const Integer mag = negative ? Integer(-c) : c;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  first = false;
  if (mono.empty()) {
    out += mag.str();
  } else if (mag == 1) {
    out += mono;
  } else {
    out += mag.str() + "*" + mono;
  }
}

std::string power(const std::string& var, unsigned e) {
  if (e == 0) return {};
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

Integer binomial(unsigned n, unsigned k) {
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

UniPoly::UniPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(Integer c) { return UniPoly(std::vector<Integer>{std::move(c)}); }

UniPoly UniPoly::monomial(Integer c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = std::move(c);
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer UniPoly::evaluate(const Integer& q) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(1);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Integer& c) {
  for (Integer& x : coeffs_) x *= c;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) append_term(out, coeffs_[i], power(var, static_cast<unsigned>(i)), first);
  return out;
}

// ---------------------------------------------------------------------------

BiPoly BiPoly::constant(Integer c) { return monomial(std::move(c), 0, 0); }

BiPoly BiPoly::monomial(Integer c, unsigned i, unsigned j) {
  BiPoly p;
  p.add_term(i, j, c);
  return p;
}

BiPoly BiPoly::x() { return monomial(1, 1, 0); }
BiPoly BiPoly::y() { return monomial(1, 0, 1); }

Integer BiPoly::coeff(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

unsigned BiPoly::x_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

unsigned BiPoly::y_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

void BiPoly::add_term(unsigned i, unsigned j, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

BiPoly BiPoly::swap_variables() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{e.second, e.first}, c);
  return out;
}

Integer BiPoly::evaluate(const Integer& xv, const Integer& yv) const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c * boost::multiprecision::pow(xv, e.first) *
                                          boost::multiprecision::pow(yv, e.second);
  return sum;
}

UniPoly BiPoly::substitute(const UniPoly& sx, const UniPoly& sy) const {
  std::vector<UniPoly> xp{UniPoly::constant(1)};
  std::vector<UniPoly> yp{UniPoly::constant(1)};
  for (unsigned i = 0; i < x_degree(); ++i) xp.push_back(xp.back() * sx);
  for (unsigned j = 0; j < y_degree(); ++j) yp.push_back(yp.back() * sy);
  UniPoly out;
  for (const auto& [e, c] : terms_) out += xp[e.first] * yp[e.second] * c;
  return out;
}

bool BiPoly::all_coefficients_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second >= 0; });
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono = power("x", e.first);
    const std::string ypart = power("y", e.second);
    if (!ypart.empty()) mono = mono.empty() ? ypart : mono + "*" + ypart;
    append_term(out, c, mono, first);
  }
  return out;
}

BiPoly shifted_monomial(unsigned a, unsigned b) {
  BiPoly out;
  for (unsigned i = 0; i <= a; ++i) {
    Integer ci = binomial(a, i);
    if ((a - i) % 2 == 1) ci = -ci;
    for (unsigned j = 0; j <= b; ++j) {
      Integer cj = binomial(b, j);
      if ((b - j) % 2 == 1) cj = -cj;
      out.add_term(i, j, ci * cj);
    }
  }
  return out;
}

}  // namespace arithmat
