#include "extprob/nonstd.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "extprob/error.hpp"

namespace extprob {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::Unlimited: return "Unlimited";
    case ErrorKind::ZeroConditioningEvent: return "ZeroConditioningEvent";
    case ErrorKind::EmptyConditioningEvent: return "EmptyConditioningEvent";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotAnSlps: return "NotAnSlps";
    case ErrorKind::InvalidPopperSpace: return "InvalidPopperSpace";
    case ErrorKind::NotTreelike: return "NotTreelike";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(ErrorKind::Parse, "malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  std::size_t slash = s.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    return std::all_of(s.begin() + static_cast<long>(from), s.begin() + static_cast<long>(to),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (slash == std::string::npos) {
    if (!digits(start, s.size())) throw bad();
  } else if (!digits(start, slash) || !digits(slash + 1, s.size())) {
    throw bad();
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// EpsPolynomial

EpsPolynomial::EpsPolynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

EpsPolynomial EpsPolynomial::monomial(const Rational& coefficient, std::uint32_t exponent) {
  EpsPolynomial p;
  if (coefficient == 0) return p;
  p.coeffs_.assign(exponent + 1, Rational(0));
  p.coeffs_[exponent] = coefficient;
  return p;
}

EpsPolynomial EpsPolynomial::from_terms(const std::vector<Term>& terms) {
  EpsPolynomial p;
  long last = -1;
  for (const auto& t : terms) {
    if (static_cast<long>(t.exponent) <= last)
      throw Error(ErrorKind::Parse, "polynomial exponents must be strictly increasing");
    if (t.coefficient == 0) throw Error(ErrorKind::Parse, "polynomial terms must have nonzero coefficients");
    last = t.exponent;
  }
  if (!terms.empty()) {
    p.coeffs_.assign(terms.back().exponent + 1, Rational(0));
    for (const auto& t : terms) p.coeffs_[t.exponent] = t.coefficient;
  }
  return p;
}

std::optional<std::uint32_t> EpsPolynomial::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

const Rational& EpsPolynomial::lowest_coefficient() const {
  assert(!is_zero());
  return coeffs_[*order()];
}

Rational EpsPolynomial::coefficient(std::uint32_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : Rational(0);
}

std::vector<EpsPolynomial::Term> EpsPolynomial::terms() const {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.push_back({static_cast<std::uint32_t>(i), coeffs_[i]});
  return out;
}

void EpsPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

EpsPolynomial EpsPolynomial::operator-() const {
  EpsPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

EpsPolynomial operator+(const EpsPolynomial& a, const EpsPolynomial& b) {
  EpsPolynomial r;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    if (i < a.coeffs_.size()) r.coeffs_[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) r.coeffs_[i] += b.coeffs_[i];
  }
  r.trim();
  return r;
}

EpsPolynomial operator-(const EpsPolynomial& a, const EpsPolynomial& b) { return a + (-b); }

EpsPolynomial operator*(const EpsPolynomial& a, const EpsPolynomial& b) {
  EpsPolynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

EpsPolynomial EpsPolynomial::scaled(const Rational& factor) const {
  if (factor == 0) return {};
  EpsPolynomial r = *this;
  for (auto& c : r.coeffs_) c *= factor;
  return r;
}

std::pair<EpsPolynomial, EpsPolynomial> EpsPolynomial::divmod(const EpsPolynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  EpsPolynomial rem = *this;
  EpsPolynomial quot;
  const long dd = divisor.degree();
  if (rem.degree() < dd) return {quot, rem};
  quot.coeffs_.assign(static_cast<std::size_t>(rem.degree() - dd + 1), Rational(0));
  const Rational& lead = divisor.leading_coefficient();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const long shift = rem.degree() - dd;
    Rational f = rem.leading_coefficient() / lead;
    quot.coeffs_[static_cast<std::size_t>(shift)] = f;
    for (long i = 0; i <= dd; ++i)
      rem.coeffs_[static_cast<std::size_t>(i + shift)] -= f * divisor.coeffs_[static_cast<std::size_t>(i)];
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

EpsPolynomial gcd(EpsPolynomial a, EpsPolynomial b) {
  while (!b.is_zero()) {
    EpsPolynomial r = a.divmod(b).second;
    // Keep remainders monic so coefficient growth stays bounded.
    if (!r.is_zero()) r = r.scaled(Rational(1) / r.leading_coefficient());
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.scaled(Rational(1) / a.leading_coefficient());
  return a;
}

// ---------------------------------------------------------------------------
// NonstdNumber

NonstdNumber NonstdNumber::eps(std::uint32_t power) {
  return NonstdNumber(EpsPolynomial::monomial(Rational(1), power), EpsPolynomial(Rational(1)));
}

NonstdNumber NonstdNumber::from_parts(EpsPolynomial num, EpsPolynomial den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "nonstandard number with zero denominator");
  NonstdNumber r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

void NonstdNumber::canonicalize() {
  if (num_.is_zero()) {
    den_ = EpsPolynomial(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    EpsPolynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  const Rational& low = den_.lowest_coefficient();
  if (low != 1) {
    Rational inv = Rational(1) / low;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

int NonstdNumber::sign() const {
  if (num_.is_zero()) return 0;
  // The lowest coefficient of den is 1, so the germ sign is that of num.
  return sgn(num_.lowest_coefficient());
}

std::optional<long> NonstdNumber::order() const {
  if (num_.is_zero()) return std::nullopt;
  return static_cast<long>(*num_.order()) - static_cast<long>(*den_.order());
}

Rational NonstdNumber::lowest_coefficient() const {
  if (num_.is_zero()) return Rational(0);
  return num_.lowest_coefficient();
}

NonstdNumber NonstdNumber::operator-() const { return NonstdNumber(-num_, den_); }

NonstdNumber& NonstdNumber::operator+=(const NonstdNumber& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ = num_ + o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

NonstdNumber& NonstdNumber::operator-=(const NonstdNumber& o) { return *this += -o; }

NonstdNumber& NonstdNumber::operator*=(const NonstdNumber& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = NonstdNumber();
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  if (!den_.is_constant()) canonicalize();
  return *this;
}

NonstdNumber& NonstdNumber::operator/=(const NonstdNumber& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in Q(eps)");
  if (is_zero()) return *this;
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const NonstdNumber& a, const NonstdNumber& b) {
  if (a == b) return std::strong_ordering::equal;
  const int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

NonstdNumber abs(const NonstdNumber& a) { return a.sign() < 0 ? -a : a; }

Rational standard_part(const NonstdNumber& a) {
  if (a.is_zero()) return Rational(0);
  const long ord = *a.order();
  if (ord < 0) throw Error(ErrorKind::Unlimited, "standard part of unlimited element " + to_string(a));
  if (ord > 0) return Rational(0);
  return a.num().lowest_coefficient() / a.den().lowest_coefficient();
}

Rational standard_part_of_ratio(const NonstdNumber& a, const NonstdNumber& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "standard part of ratio with zero denominator");
  if (a.is_zero()) return Rational(0);
  const long ord = *a.order() - *b.order();
  if (ord < 0) throw Error(ErrorKind::Unlimited, "standard part of unlimited ratio");
  if (ord > 0) return Rational(0);
  return a.lowest_coefficient() / b.lowest_coefficient();
}

Classification classify(const NonstdNumber& a) {
  if (a.is_zero()) return {std::nullopt, Magnitude::Zero};
  const long ord = *a.order();
  if (ord > 0) return {ord, Magnitude::Infinitesimal};
  if (ord == 0) return {ord, Magnitude::Appreciable};
  return {ord, Magnitude::Unlimited};
}

std::string to_string(const EpsPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "eps";
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

std::string to_string(const NonstdNumber& a) {
  if (a.den() == EpsPolynomial(Rational(1))) return to_string(a.num());
  return "(" + to_string(a.num()) + ")/(" + to_string(a.den()) + ")";
}

}  // namespace extprob
