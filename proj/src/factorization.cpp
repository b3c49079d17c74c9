#include "twistchar/factorization.hpp"

#include <map>

namespace twistchar {

namespace {

// Floor division for possibly negative numerators (C++ truncates).
int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

std::int64_t binom2(std::int64_t a) { return a * (a - 1) / 2; }

int parity(std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); }

void require_bound(Theorem th, const Partition& lambda, int t, int n) {
  if (t < 2 || n < 1) throw std::invalid_argument("need t >= 2 and n >= 1");
  if (lambda.length() > length_bound(th, t, n))
    throw std::invalid_argument("length " + std::to_string(lambda.length()) +
                                " exceeds the bound for " + to_string(th));
}

CycloElem character(Group g, const Partition& lambda, const PointTuple& pts) {
  return weyl_character(g, lambda, pts).value;
}

}  // namespace

std::string to_string(Theorem th) {
  switch (th) {
    case Theorem::SchurFac: return "schurfac";
    case Theorem::SchurOne: return "schur1";
    case Theorem::Symplectic: return "sympfact";
    case Theorem::EvenOrth: return "eorthfact";
    case Theorem::OddOrth: return "oorthfact";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(const std::string& name) {
  static const std::map<std::string, Theorem> names = {
      {"schurfac", Theorem::SchurFac},   {"schur1", Theorem::SchurOne},
      {"schur-1", Theorem::SchurOne},    {"sympfact", Theorem::Symplectic},
      {"eorthfact", Theorem::EvenOrth},  {"oorthfact", Theorem::OddOrth}};
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

Group theorem_group(Theorem th) {
  switch (th) {
    case Theorem::SchurFac:
    case Theorem::SchurOne: return Group::GL;
    case Theorem::Symplectic: return Group::SP;
    case Theorem::EvenOrth: return Group::OE;
    case Theorem::OddOrth: return Group::OO;
  }
  throw std::logic_error("unknown theorem");
}

int length_bound(Theorem th, int t, int n) {
  return th == Theorem::SchurOne ? t * n + 1 : t * n;
}

int theorem_padding(Theorem th, int t, int n) { return length_bound(th, t, n); }

bool predicted_vanishing(Theorem th, const Partition& lambda, int t, int n) {
  require_bound(th, lambda, t, n);
  if (th == Theorem::SchurOne) return !single_row_core(lambda, t, n).has_value();
  const CoreClass cls = classify_core(lambda, t, n);
  switch (th) {
    case Theorem::SchurFac: return !cls.is_empty;
    case Theorem::Symplectic: return !cls.symplectic;
    case Theorem::EvenOrth: return !cls.orthogonal;
    case Theorem::OddOrth: return !cls.self_conjugate;
    case Theorem::SchurOne: break;
  }
  throw std::logic_error("unknown theorem");
}

int epsilon(Theorem th, const Partition& lambda, int t, int n, SignRule rule) {
  if (predicted_vanishing(th, lambda, t, n))
    throw EpsilonUndefined("epsilon undefined for this class");
  const std::int64_t fixed = std::int64_t{t} * (t - 1) / 2 * (std::int64_t{n} * (n + 1) / 2);
  if (th == Theorem::SchurFac) return parity(fixed);
  if (th == Theorem::SchurOne) {
    const int c = *single_row_core(lambda, t, n);
    return parity(fixed - std::int64_t{c} * n);
  }

  const auto counts = residue_counts(lambda, t, t * n).counts;
  if (th == Theorem::OddOrth && rule == SignRule::Expanded) {
    std::int64_t e = fixed;
    for (int q = 0; q <= floor_div(t - 2, 2); ++q) {
      e += std::int64_t{counts[q] - n} * (t % 2 ? n + 1 : 1);
      e += binom2(n) - binom2(counts[t - 1 - q]);
    }
    return parity(e);
  }
  const std::int64_t r = classify_core(lambda, t, n).rank;
  const bool even = t % 2 == 0;
  std::int64_t e = 0;
  switch (th) {
    case Theorem::Symplectic:
      for (int i = t / 2; i <= t - 2; ++i) e -= binom2(counts[i] + 1);
      if (even) e += std::int64_t{n} * (n + 1) / 2 + n * r;
      break;
    case Theorem::EvenOrth:
      for (int i = (t + 2) / 2; i <= t - 1; ++i) e -= binom2(counts[i]);
      e += even ? std::int64_t{n} * (n + t - 1) / 2 + n * r
                : std::int64_t{t - 1} * n / 2;
      break;
    case Theorem::OddOrth:
      for (int i = t / 2; i <= t - 1; ++i) e -= binom2(counts[i] + 1);
      if (!even) e += n * r;
      break;
    default:
      break;
  }
  return parity(e);
}

int theorem_sigma_sign(Theorem th, const Partition& lambda, int t, int n) {
  require_bound(th, lambda, t, n);
  if (th == Theorem::SchurOne) {
    const auto c = single_row_core(lambda, t, n);
    return c ? sigma_c_sign(lambda, t, n, *c) : 0;
  }
  return sigma_sign(lambda, t, n);
}

CycloElem rhs_value(Theorem th, const Partition& lambda, int t, int n,
                    const PointTuple& pts, SignRule rule) {
  require_bound(th, lambda, t, n);
  if (static_cast<int>(pts.size()) != n)
    throw std::invalid_argument("point tuple must have n entries");
  const CycloField& f = pts.field();
  if (predicted_vanishing(th, lambda, t, n)) return f.zero();

  const auto q = t_quotient(lambda, t, theorem_padding(th, t, n));
  const PointTuple xt = power_points(pts, t);
  const PointTuple x_pair = concat_points(xt, power_points(pts, -t));

  CycloElem value = f.one();
  if (epsilon(th, lambda, t, n, rule)) value = -value;
  if (theorem_sigma_sign(th, lambda, t, n) < 0) value = -value;

  // Schur factor at (X^t, X^{-t}) indexed by back_1 + (front, 0, -rev(back)).
  auto paired = [&](int front, int back) {
    return character(Group::GL, mu_padded(q[front], q[back], n), x_pair);
  };

  switch (th) {
    case Theorem::SchurFac:
      for (int i = 0; i < t; ++i) value *= character(Group::GL, q[i], xt);
      break;
    case Theorem::SchurOne: {
      const int c = *single_row_core(lambda, t, n);
      value *= character(Group::GL, q[c], append_one(xt));
      for (int i = 0; i < t; ++i)
        if (i != c) value *= character(Group::GL, q[i], xt);
      break;
    }
    case Theorem::Symplectic:
      value *= character(Group::SP, q[t - 1], xt);
      for (int i = 0; i <= floor_div(t - 3, 2); ++i) value *= paired(i, t - 2 - i);
      if (t % 2 == 0) value *= character(Group::OO, q[t / 2 - 1], xt);
      break;
    case Theorem::EvenOrth:
      value *= character(Group::OE, q[0], xt);
      for (int i = 1; i <= floor_div(t - 1, 2); ++i) value *= paired(i, t - i);
      if (t % 2 == 0) {
        const Partition& half = q[t / 2];
        CycloElem oo = character(Group::OO, half, negate_points(xt));
        if (half.size() % 2) oo = -oo;
        value *= oo;
      }
      break;
    case Theorem::OddOrth:
      for (int i = 0; i <= floor_div(t - 2, 2); ++i) value *= paired(i, t - 1 - i);
      if (t % 2 == 1) value *= character(Group::OO, q[(t - 1) / 2], xt);
      break;
  }
  return value;
}

CycloElem lhs_value(Theorem th, const Partition& lambda, int t, int n,
                    const PointTuple& pts) {
  require_bound(th, lambda, t, n);
  if (static_cast<int>(pts.size()) != n)
    throw std::invalid_argument("point tuple must have n entries");
  PointTuple twisted = twisted_points(pts, t);
  if (th == Theorem::SchurOne) twisted = append_one(twisted);
  return character(theorem_group(th), lambda, twisted);
}

bool VerificationReport::vanishing_confirmed() const {
  if (!predicted_vanishing || trials.empty()) return false;
  for (const auto& tr : trials)
    if (!tr.lhs.is_zero()) return false;
  return true;
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial);
}

VerificationReport verify(Theorem th, const Partition& lambda, int t, int n,
                          std::uint64_t seed, int trials, SignRule rule) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  require_bound(th, lambda, t, n);
  VerificationReport report;
  report.theorem = th;
  report.lambda = lambda;
  report.t = t;
  report.n = n;
  report.seed = seed;
  report.sign_rule = rule;
  report.predicted_vanishing = predicted_vanishing(th, lambda, t, n);
  if (!report.predicted_vanishing) report.sign_exponent = epsilon(th, lambda, t, n, rule);
  report.sigma_sign = theorem_sigma_sign(th, lambda, t, n);
  report.match = true;
  for (int j = 0; j < trials; ++j) {
    const std::uint64_t s = trial_seed(seed, j);
    const PointTuple pts = sample_points(n, t, s);
    std::vector<Rational> point;
    for (const auto& x : pts.values) point.push_back(x.coeffs()[0]);
    CycloElem lhs = lhs_value(th, lambda, t, n, pts);
    CycloElem rhs = rhs_value(th, lambda, t, n, pts, rule);
    const bool match = lhs == rhs;
    report.match = report.match && match;
    report.trials.push_back({s, std::move(point), std::move(lhs), std::move(rhs), match});
  }
  return report;
}

}  // namespace twistchar
