#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistchar {

using Rational = mpq_class;
using Integer = mpz_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Phi_t as integer coefficients, lowest degree first.
std::vector<std::int64_t> cyclotomic_poly(int t);

class CycloElem;

/// Q(w_t) presented as Q[x]/(Phi_t). Instances are interned per t and live
/// for the whole program, so elements may hold a plain pointer to them.
class CycloField {
 public:
  static const CycloField& get(int t);

  int order() const { return t_; }
  int degree() const { return degree_; }
  const std::vector<std::int64_t>& modulus() const { return phi_; }

  CycloElem zero() const;
  CycloElem one() const;
  CycloElem from_rational(const Rational& q) const;
  /// w^k for any integer k (reduced mod t).
  const CycloElem& omega_pow(std::int64_t k) const;

  CycloField(const CycloField&) = delete;
  CycloField& operator=(const CycloField&) = delete;

 private:
  explicit CycloField(int t);
  friend class CycloElem;
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);

  int t_;
  int degree_;
  std::vector<std::int64_t> phi_;
  // x^(degree + k) mod Phi_t for k = 0 .. degree - 2.
  std::vector<std::vector<std::int64_t>> high_powers_;
  std::vector<CycloElem> omega_powers_;
};

/// a_0 + a_1 w + ... + a_{d-1} w^{d-1}, always reduced mod Phi_t.
class CycloElem {
 public:
  CycloElem(const CycloField& field, std::vector<Rational> coeffs);

  const CycloField& field() const { return *field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// Rational value when the element lies in Q.
  bool is_rational() const;

  CycloElem inverse() const;
  CycloElem pow(std::int64_t e) const;

  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);
  CycloElem& operator*=(const Rational& q);
  CycloElem& operator/=(const CycloElem& o) { return *this *= o.inverse(); }

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator*(CycloElem a, const Rational& q) { return a *= q; }
  friend CycloElem operator*(const Rational& q, CycloElem a) { return a *= q; }
  friend CycloElem operator/(CycloElem a, const CycloElem& b) { return a /= b; }
  CycloElem operator-() const;

  friend bool operator==(const CycloElem& a, const CycloElem& b);

  /// "1/2 - 3*w + w^2", "0" for zero.
  std::string to_string() const;

 private:
  const CycloField* field_;
  std::vector<Rational> coeffs_;
};

}  // namespace twistchar
