#include "twistchar/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace twistchar {

namespace {

using IntPoly = std::vector<std::int64_t>;
using RatPoly = std::vector<Rational>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly q(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const std::int64_t c = num[k];
    q[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  return q;
}

// Remainder and quotient of rational polynomials; den nonzero.
void divmod(const RatPoly& num, const RatPoly& den, RatPoly& q, RatPoly& r) {
  r = num;
  trim(r);
  q.assign(r.size() >= den.size() ? r.size() - den.size() + 1 : 0, Rational(0));
  const Rational lead = den.back();
  while (!r.empty() && r.size() >= den.size()) {
    const std::size_t shift = r.size() - den.size();
    const Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) r[shift + j] -= c * den[j];
    r.pop_back();
    trim(r);
  }
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_poly(int t) {
  if (t <= 0) throw std::invalid_argument("cyclotomic order must be positive");
  IntPoly p(t + 1, 0);
  p[0] = -1;
  p[t] = 1;
  for (int d = 1; d < t; ++d)
    if (t % d == 0) p = divide_monic(p, cyclotomic_poly(d));
  trim(p);
  return p;
}

CycloField::CycloField(int t) : t_(t), phi_(cyclotomic_poly(t)) {
  degree_ = static_cast<int>(phi_.size()) - 1;
  // x^d = -(phi_0 + ... + phi_{d-1} x^{d-1}); higher powers by shifting.
  IntPoly cur(degree_);
  for (int i = 0; i < degree_; ++i) cur[i] = -phi_[i];
  for (int k = 0; k + 1 < degree_; ++k) {
    high_powers_.push_back(cur);
    const std::int64_t top = cur[degree_ - 1];
    IntPoly next(degree_, 0);
    for (int i = degree_ - 1; i > 0; --i) next[i] = cur[i - 1];
    for (int i = 0; i < degree_; ++i) next[i] -= top * phi_[i];
    cur = std::move(next);
  }
  // w itself, then successive powers by multiplication.
  std::vector<Rational> x(degree_, Rational(0));
  if (degree_ > 1) {
    x[1] = 1;
  } else {
    x[0] = -phi_[0];
  }
  const CycloElem w(*this, std::move(x));
  omega_powers_.reserve(t_);
  std::vector<Rational> unit(degree_, Rational(0));
  unit[0] = 1;
  omega_powers_.emplace_back(*this, std::move(unit));
  for (int k = 1; k < t_; ++k) omega_powers_.push_back(omega_powers_.back() * w);
}

const CycloField& CycloField::get(int t) {
  if (t < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CycloField>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[t];
  if (!slot) slot.reset(new CycloField(t));
  return *slot;
}

CycloElem CycloField::zero() const {
  return CycloElem(*this, std::vector<Rational>(degree_, Rational(0)));
}

CycloElem CycloField::one() const { return omega_powers_[0]; }

CycloElem CycloField::from_rational(const Rational& q) const {
  std::vector<Rational> c(degree_, Rational(0));
  c[0] = q;
  return CycloElem(*this, std::move(c));
}

const CycloElem& CycloField::omega_pow(std::int64_t k) const {
  const std::int64_t r = ((k % t_) + t_) % t_;
  return omega_powers_[static_cast<std::size_t>(r)];
}

CycloElem::CycloElem(const CycloField& field, std::vector<Rational> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field.degree())
    throw std::invalid_argument("coefficient vector has wrong length");
}

bool CycloElem::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

namespace {

void require_same_field(const CycloElem& a, const CycloElem& b) {
  if (&a.field() != &b.field())
    throw std::invalid_argument("operands live in different cyclotomic fields");
}

}  // namespace

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  require_same_field(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  require_same_field(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloElem& CycloElem::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
  *this = *this * o;
  return *this;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  require_same_field(a, b);
  const CycloField& f = a.field();
  const int d = f.degree();
  if (d == 1) {
    return CycloElem(f, {a.coeffs_[0] * b.coeffs_[0]});
  }
  std::vector<Rational> full(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (int j = 0; j < d; ++j) full[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  std::vector<Rational> out(full.begin(), full.begin() + d);
  for (int k = d; k < 2 * d - 1; ++k) {
    if (sgn(full[k]) == 0) continue;
    const auto& red = f.high_powers_[k - d];
    for (int i = 0; i < d; ++i)
      if (red[i] != 0) out[i] += full[k] * red[i];
  }
  return CycloElem(f, std::move(out));
}

CycloElem CycloElem::operator-() const {
  CycloElem r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const CycloElem& a, const CycloElem& b) {
  return &a.field() == &b.field() && a.coeffs_ == b.coeffs_;
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return field_->from_rational(1 / coeffs_[0]);
  // Extended Euclid: find s with s * a = 1 mod Phi_t.
  RatPoly r0(field_->phi_.begin(), field_->phi_.end());
  RatPoly r1 = coeffs_;
  trim(r1);
  RatPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    RatPoly q, r;
    divmod(r0, r1, q, r);
    RatPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant because Phi_t is irreducible.
  const Rational c = r1.at(0);
  std::vector<Rational> out(field_->degree(), Rational(0));
  for (std::size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] / c;
  return CycloElem(*field_, std::move(out));
}

CycloElem CycloElem::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycloElem result = field_->one();
  CycloElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string CycloElem::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (i == 0 || !unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "w";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace twistchar
