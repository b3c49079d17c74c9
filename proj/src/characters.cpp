#include "twistchar/characters.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

namespace twistchar {

std::string to_string(Group g) {
  switch (g) {
    case Group::GL: return "GL";
    case Group::SP: return "SP";
    case Group::OO: return "OO";
    case Group::OE: return "OE";
  }
  return "?";
}

const CycloField& PointTuple::field() const {
  if (values.empty()) throw std::invalid_argument("empty point tuple has no field");
  return values.front().field();
}

namespace {

// Powers x^0..x^max and x^0..x^-max of one point, built by multiplication.
struct PowerTable {
  std::vector<CycloElem> pos, neg;

  PowerTable(const CycloElem& x, std::int64_t max_pos, std::int64_t max_neg) {
    const CycloElem one = x.field().one();
    pos.reserve(max_pos + 1);
    pos.push_back(one);
    for (std::int64_t k = 1; k <= max_pos; ++k) pos.push_back(pos.back() * x);
    neg.reserve(max_neg + 1);
    neg.push_back(one);
    if (max_neg > 0) {
      const CycloElem inv = x.inverse();
      for (std::int64_t k = 1; k <= max_neg; ++k) neg.push_back(neg.back() * inv);
    }
  }

  // x^e for any e in range, negative exponents read from `neg`.
  const CycloElem& at(std::int64_t e) const { return e >= 0 ? pos[e] : neg[-e]; }
};

std::int64_t max_abs(std::span<const std::int64_t> v, bool want_positive) {
  std::int64_t m = 0;
  for (auto e : v) m = std::max(m, want_positive ? e : -e);
  return m;
}

std::vector<std::int64_t> beta_exponents(const Partition& lambda, int n,
                                         std::int64_t shift) {
  std::vector<std::int64_t> e(n);
  for (int j = 1; j <= n; ++j) e[j - 1] = lambda.part(j) + n - j + shift;
  return e;
}

}  // namespace

CycloElem laurent_alternant(const PointTuple& pts, std::span<const std::int64_t> pos,
                            std::span<const std::int64_t> neg, int sign,
                            DetStrategy strategy) {
  const std::size_t n = pts.size();
  if (pos.size() != n || (sign != 0 && neg.size() != n))
    throw std::invalid_argument("exponent vector length differs from point count");
  if (n == 0) throw std::invalid_argument("alternant of an empty point tuple");
  const CycloField& f = pts.field();

  // Exponents may be negative in either slot; size both tables generously.
  std::int64_t up = max_abs(pos, true), down = max_abs(pos, false);
  if (sign != 0) {
    up = std::max(up, max_abs(neg, false));
    down = std::max(down, max_abs(neg, true));
  }
  Matrix<CycloElem> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    const PowerTable table(pts.values[i], up, down);
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = table.at(pos[j]);
      if (sign > 0) m(i, j) += table.at(-neg[j]);
      if (sign < 0) m(i, j) -= table.at(-neg[j]);
    }
  }
  return determinant(std::move(m), f.one(), strategy);
}

CycloElem weyl_numerator(Group g, const Partition& lambda, const PointTuple& pts,
                         DetStrategy strategy) {
  const int n = static_cast<int>(pts.size());
  if (lambda.length() > n)
    throw std::invalid_argument("length exceeds variable count");
  const auto beta = beta_exponents(lambda, n, 0);
  switch (g) {
    case Group::GL:
      return laurent_alternant(pts, beta, {}, 0, strategy);
    case Group::SP: {
      const auto b1 = beta_exponents(lambda, n, 1);
      return laurent_alternant(pts, b1, b1, -1, strategy);
    }
    case Group::OO: {
      const auto b1 = beta_exponents(lambda, n, 1);
      return laurent_alternant(pts, b1, beta, -1, strategy);
    }
    case Group::OE:
      return laurent_alternant(pts, beta, beta, +1, strategy);
  }
  throw std::logic_error("unknown group");
}

CycloElem weyl_denominator(Group g, const PointTuple& pts, DetStrategy strategy) {
  return weyl_numerator(g, Partition{}, pts, strategy);
}

CycloElem weyl_denominator_product(Group g, const PointTuple& pts) {
  const CycloField& f = pts.field();
  const std::size_t n = pts.size();
  CycloElem prod = f.one();
  std::vector<CycloElem> inv;
  if (g != Group::GL) {
    inv.reserve(n);
    for (const auto& x : pts.values) {
      if (x.is_zero()) return f.zero();
      inv.push_back(x.inverse());
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const CycloElem& x = pts.values[i];
    if (g == Group::SP) prod *= x - inv[i];
    if (g == Group::OO) prod *= x - f.one();
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g == Group::GL) {
        prod *= x - pts.values[j];
      } else {
        prod *= x + inv[i] - pts.values[j] - inv[j];
      }
    }
  }
  return prod;
}

CharacterValue weyl_character(Group g, const Partition& lambda, const PointTuple& pts,
                              DetStrategy strategy) {
  const CycloField& f = pts.field();
  const int n = static_cast<int>(pts.size());
  if (lambda.length() > n) return {f.zero(), true};

  CycloElem den = f.one();
  if (g == Group::OE) {
    // The raw determinant carries a factor 2 from its constant last column;
    // the character divides by (1 + [lambda_n = 0]) times the product form.
    den = weyl_denominator(g, pts, strategy) * Rational(1, 2);
    if (lambda.part(n) == 0) den *= Rational(2);
  } else {
    den = weyl_denominator(g, pts, strategy);
  }
  if (den.is_zero())
    throw DegeneratePoint("degenerate point: " + to_string(g) +
                          " denominator vanishes");
  return {weyl_numerator(g, lambda, pts, strategy) / den, false};
}

CycloElem oe_half_shifted_at_squares(const Partition& lambda, const PointTuple& ys,
                                     DetStrategy strategy) {
  const int n = static_cast<int>(ys.size());
  if (lambda.length() > n) throw std::invalid_argument("length exceeds variable count");
  std::vector<std::int64_t> num(n), den(n);
  for (int j = 1; j <= n; ++j) {
    num[j - 1] = 2 * (lambda.part(j) + n - j) + 1;
    den[j - 1] = 2 * (n - j);
  }
  // No lambda_n = 0 correction: every shifted part is at least 1/2.
  CycloElem d = laurent_alternant(ys, den, den, +1, strategy) * Rational(1, 2);
  if (d.is_zero()) throw DegeneratePoint("degenerate point: OE denominator vanishes");
  return laurent_alternant(ys, num, num, +1, strategy) / d;
}

PointTuple twisted_points(const PointTuple& pts, int t) {
  if (t < 1) throw std::invalid_argument("twist order must be positive");
  PointTuple out;
  if (pts.values.empty()) return out;
  const CycloField& f = pts.field();
  if (f.order() % t != 0)
    throw std::invalid_argument("twist order does not divide the field order");
  const int step = f.order() / t;
  out.values.reserve(pts.size() * t);
  for (int k = 0; k < t; ++k)
    for (const auto& x : pts.values) out.values.push_back(f.omega_pow(k * step) * x);
  return out;
}

PointTuple power_points(const PointTuple& pts, std::int64_t e) {
  PointTuple out;
  for (const auto& x : pts.values) out.values.push_back(x.pow(e));
  return out;
}

PointTuple negate_points(const PointTuple& pts) {
  PointTuple out;
  for (const auto& x : pts.values) out.values.push_back(-x);
  return out;
}

PointTuple concat_points(const PointTuple& a, const PointTuple& b) {
  PointTuple out = a;
  out.values.insert(out.values.end(), b.values.begin(), b.values.end());
  return out;
}

PointTuple append_one(const PointTuple& pts) {
  PointTuple out = pts;
  out.values.push_back(pts.field().one());
  return out;
}

bool admissible_points(const PointTuple& pts, int t) {
  const PointTuple twisted = twisted_points(pts, t);
  const PointTuple xt = power_points(pts, t);
  const PointTuple xt_bar = power_points(pts, -t);
  const std::vector<Group> all = {Group::GL, Group::SP, Group::OO, Group::OE};
  // Each tuple paired with the groups whose characters are evaluated on it.
  const std::pair<PointTuple, std::vector<Group>> checks[] = {
      {twisted, all},
      {append_one(twisted), {Group::GL}},
      {xt, all},
      {append_one(xt), {Group::GL}},
      {concat_points(xt, xt_bar), {Group::GL}},
      {negate_points(xt), {Group::OO}}};
  for (const auto& [tuple, groups] : checks)
    for (Group g : groups)
      if (weyl_denominator_product(g, tuple).is_zero()) return false;
  return true;
}

PointTuple sample_points(int n, int t, std::uint64_t seed) {
  if (n < 1 || t < 2) throw std::invalid_argument("sample_points needs n >= 1, t >= 2");
  const CycloField& f = CycloField::get(t);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numer(1, 9), denom(1, 7);
  constexpr int kRetries = 1000;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::vector<Rational> xs;
    std::set<Rational> seen;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      Rational x(numer(rng), denom(rng));
      x.canonicalize();
      if (x == 1 || seen.count(x)) {
        ok = false;
        break;
      }
      for (const auto& y : xs)
        if (x * y == 1) ok = false;
      seen.insert(x);
      xs.push_back(x);
    }
    if (!ok) continue;
    PointTuple pts;
    for (const auto& x : xs) pts.values.push_back(f.from_rational(x));
    if (admissible_points(pts, t)) return pts;
  }
  throw SamplingError("could not find admissible points for n=" + std::to_string(n) +
                      ", t=" + std::to_string(t));
}

}  // namespace twistchar
