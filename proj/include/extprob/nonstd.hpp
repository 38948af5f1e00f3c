#pragma once

// Exact arithmetic in the ordered field Q(eps) of rational functions in one
// positive infinitesimal eps. Elements are ordered as germs at eps -> 0+.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace extprob {

using Rational = mpq_class;

/// Parses "a", "-a", or "a/b" into a canonical rational; throws Error(Parse).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Polynomial in eps with rational coefficients. Stored densely by exponent
/// with no trailing zero coefficient; the zero polynomial is empty.
class EpsPolynomial {
 public:
  struct Term {
    std::uint32_t exponent;
    Rational coefficient;
  };

  EpsPolynomial() = default;
  explicit EpsPolynomial(const Rational& constant);

  static EpsPolynomial monomial(const Rational& coefficient, std::uint32_t exponent);
  /// Terms must have strictly increasing exponents and nonzero coefficients.
  static EpsPolynomial from_terms(const std::vector<Term>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Highest exponent; -1 for zero.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; nullopt for zero.
  std::optional<std::uint32_t> order() const;
  const Rational& lowest_coefficient() const;
  const Rational& leading_coefficient() const { return coeffs_.back(); }
  Rational coefficient(std::uint32_t exponent) const;
  std::vector<Term> terms() const;

  EpsPolynomial operator-() const;
  friend EpsPolynomial operator+(const EpsPolynomial& a, const EpsPolynomial& b);
  friend EpsPolynomial operator-(const EpsPolynomial& a, const EpsPolynomial& b);
  friend EpsPolynomial operator*(const EpsPolynomial& a, const EpsPolynomial& b);
  EpsPolynomial scaled(const Rational& factor) const;

  /// Euclidean division by a nonzero divisor: *this = q * divisor + r.
  std::pair<EpsPolynomial, EpsPolynomial> divmod(const EpsPolynomial& divisor) const;
  /// Monic greatest common divisor; gcd(0, 0) = 0.
  friend EpsPolynomial gcd(EpsPolynomial a, EpsPolynomial b);

  friend bool operator==(const EpsPolynomial&, const EpsPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

enum class Magnitude { Zero, Infinitesimal, Appreciable, Unlimited };

struct Classification {
  std::optional<long> order;  // nullopt encodes +infinity (the zero element)
  Magnitude magnitude;
};

/// Element num/den of Q(eps) in canonical form: gcd(num, den) = 1, the
/// lowest-order coefficient of den is 1, and zero is 0/1. Canonical form is
/// unique, so structural equality is field equality.
class NonstdNumber {
 public:
  NonstdNumber() : den_(Rational(1)) {}
  NonstdNumber(const Rational& q) : num_(q), den_(Rational(1)) {}  // NOLINT
  NonstdNumber(long n) : NonstdNumber(Rational(n)) {}              // NOLINT

  /// eps^power
  static NonstdNumber eps(std::uint32_t power = 1);
  /// Canonicalizes; throws Error(DivisionByZero) when den is zero.
  static NonstdNumber from_parts(EpsPolynomial num, EpsPolynomial den);

  const EpsPolynomial& num() const { return num_; }
  const EpsPolynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_standard() const { return num_.is_constant() && den_.is_constant(); }
  /// -1, 0, or 1.
  int sign() const;
  /// ord(num) - ord(den); nullopt for zero.
  std::optional<long> order() const;
  /// Coefficient of the lowest-order term of the Laurent expansion.
  Rational lowest_coefficient() const;

  NonstdNumber operator-() const;
  NonstdNumber& operator+=(const NonstdNumber& o);
  NonstdNumber& operator-=(const NonstdNumber& o);
  NonstdNumber& operator*=(const NonstdNumber& o);
  NonstdNumber& operator/=(const NonstdNumber& o);
  friend NonstdNumber operator+(NonstdNumber a, const NonstdNumber& b) { return a += b; }
  friend NonstdNumber operator-(NonstdNumber a, const NonstdNumber& b) { return a -= b; }
  friend NonstdNumber operator*(NonstdNumber a, const NonstdNumber& b) { return a *= b; }
  friend NonstdNumber operator/(NonstdNumber a, const NonstdNumber& b) { return a /= b; }

  friend bool operator==(const NonstdNumber&, const NonstdNumber&) = default;
  friend std::strong_ordering operator<=>(const NonstdNumber& a, const NonstdNumber& b);

 private:
  NonstdNumber(EpsPolynomial num, EpsPolynomial den) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  EpsPolynomial num_;
  EpsPolynomial den_;
};

NonstdNumber abs(const NonstdNumber& a);

/// Standard part of a limited element; throws Error(Unlimited) otherwise.
Rational standard_part(const NonstdNumber& a);

/// st(a / b) computed from lowest-order terms only; b must be nonzero and
/// a/b limited.
Rational standard_part_of_ratio(const NonstdNumber& a, const NonstdNumber& b);

Classification classify(const NonstdNumber& a);

/// Human-readable form such as "1/2 + eps - 3*eps^2" or "(eps)/(1 - eps)".
std::string to_string(const NonstdNumber& a);
std::string to_string(const EpsPolynomial& p);

}  // namespace extprob
