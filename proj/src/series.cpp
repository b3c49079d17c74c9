#include "twistchar/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twistchar {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("series coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("series coefficient overflow");
  return r;
}

void require_order(int order) {
  if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
}

void require_core_range(int z, int t) {
  if (t < 2) throw std::invalid_argument("need t >= 2");
  if (z < 0 || z > t - 2)
    throw std::invalid_argument(
        "the core lattice needs 0 <= z <= t-2; z = -1 cores are the conjugates "
        "of the z = 1 cores");
}

}  // namespace

SeriesZ::SeriesZ(int order) : order_(order) {
  require_order(order);
  coeffs_.assign(order + 1, 0);
}

SeriesZ::SeriesZ(int order, std::vector<std::int64_t> coeffs) : SeriesZ(order) {
  for (std::size_t m = 0; m < coeffs.size() && m <= static_cast<std::size_t>(order); ++m)
    coeffs_[m] = coeffs[m];
}

SeriesZ SeriesZ::one(int order) { return monomial(order, 0); }

SeriesZ SeriesZ::monomial(int order, int exponent, std::int64_t c) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  SeriesZ s(order);
  if (exponent <= order) s.coeffs_[exponent] = c;
  return s;
}

std::vector<int> SeriesZ::support() const {
  std::vector<int> out;
  for (int m = 0; m <= order_; ++m)
    if (coeffs_[m] != 0) out.push_back(m);
  return out;
}

SeriesZ SeriesZ::truncated(int order) const {
  if (order > order_) throw std::invalid_argument("cannot extend a truncated series");
  return SeriesZ(order, coeffs_);
}

SeriesZ& SeriesZ::operator+=(const SeriesZ& other) {
  order_ = std::min(order_, other.order_);
  coeffs_.resize(order_ + 1);
  for (int m = 0; m <= order_; ++m) coeffs_[m] = checked_add(coeffs_[m], other.coeffs_[m]);
  return *this;
}

SeriesZ& SeriesZ::operator*=(const SeriesZ& other) {
  const int order = std::min(order_, other.order_);
  std::vector<std::int64_t> out(order + 1, 0);
  for (int i = 0; i <= order; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j)
      if (other.coeffs_[j] != 0)
        out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
  }
  order_ = order;
  coeffs_ = std::move(out);
  return *this;
}

std::string SeriesZ::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int m = 0; m <= order_; ++m) {
    if (coeffs_[m] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[m];
    if (m > 0) os << "*q^" << m;
  }
  if (first) os << "0";
  os << " + O(q^" << order_ + 1 << ")";
  return os.str();
}

SeriesZ enum_z_asymmetric(int z, int order) {
  require_order(order);
  std::vector<std::int64_t> c(order + 1, 0);
  for (int m = 0; m <= order; ++m)
    for (const auto& lambda : partitions_of(m))
      if (is_z_asymmetric(lambda, z)) ++c[m];
  return SeriesZ(order, std::move(c));
}

SeriesZ gf_z_asymmetric(int z, int order) {
  require_order(order);
  SeriesZ s = SeriesZ::one(order);
  for (int part = z + 1; part <= order; part += 2) {
    if (part < 1) continue;
    s *= SeriesZ::one(order) + SeriesZ::monomial(order, part);
  }
  return s;
}

Partition z_asymmetric_to_distinct(const Partition& lambda, int z) {
  if (!is_z_asymmetric(lambda, z)) throw PartitionError("partition is not z-asymmetric");
  std::vector<int> parts;
  for (int a : frobenius(lambda).arms) parts.push_back(2 * a + z + 1);
  return Partition(parts);
}

SeriesZ theta_f(int a_exp, int b_exp, int order) {
  require_order(order);
  if (a_exp < 0 || b_exp < 0 || a_exp + b_exp <= 0)
    throw std::invalid_argument("theta_f needs nonnegative exponents with positive sum");
  std::vector<std::int64_t> c(order + 1, 0);
  // The exponent is nondecreasing as n walks away from 0 in either direction.
  for (int sign : {1, -1}) {
    for (std::int64_t n = sign > 0 ? 0 : -1;; n += sign) {
      const std::int64_t e = a_exp * (n * (n + 1) / 2) + b_exp * (n * (n - 1) / 2);
      if (e > order) break;
      c[e] = checked_add(c[e], 1);
    }
  }
  return SeriesZ(order, std::move(c));
}

SeriesZ gf_z_cores(int z, int t, int order) {
  require_core_range(z, t);
  SeriesZ s = SeriesZ::one(order);
  for (int i = 0; i <= (t - z - 2) / 2; ++i)
    s *= theta_f(2 * i + z + 1, 2 * t - 2 * i - z - 1, order);
  return s;
}

int lattice_dim(int z, int t) {
  require_core_range(z, t);
  return (t - z) / 2;
}

std::int64_t lattice_size(const LatticeVec& v) {
  if (static_cast<int>(v.v.size()) != lattice_dim(v.z, v.t))
    throw std::invalid_argument("lattice vector has the wrong length");
  std::int64_t size = 0;
  for (int i = 0; i < static_cast<int>(v.v.size()); ++i) {
    const std::int64_t x = v.v[i];
    size += v.t * x * x - (v.t - v.z - 1 - 2 * i) * x;
  }
  return size;
}

LatticeVec phi(const Partition& lambda, int z, int t, int n) {
  const int d = lattice_dim(z, t);
  if (!is_t_core(lambda, t) || !is_z_asymmetric(lambda, z))
    throw PartitionError("not a z-asymmetric t-core");
  if (n <= 0) n = std::max(1, (lambda.length() + t - 1) / t);
  if (t * n < lambda.length()) throw PartitionError("padding too short");
  const auto counts = residue_counts(lambda, t, t * n).counts;
  LatticeVec out{z, t, std::vector<int>(d)};
  for (int i = 0; i < d; ++i) out.v[i] = counts[i] - n;
  return out;
}

Partition phi_inverse(const LatticeVec& v) {
  const int z = v.z, t = v.t;
  const int d = lattice_dim(z, t);
  if (static_cast<int>(v.v.size()) != d)
    throw std::invalid_argument("lattice vector has the wrong length");
  int n = 0;
  for (int x : v.v) n = std::max(n, x < 0 ? -x : x);
  std::vector<int> m(t, n);
  for (int i = 0; i < d; ++i) m[i] = n + v.v[i];
  for (int i = (t - z + 1) / 2; i <= t - z - 1; ++i) m[i] = n - v.v[t - z - 1 - i];
  BetaSet beta;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < m[i]; ++j) beta.entries.push_back(t * j + i);
  std::sort(beta.entries.rbegin(), beta.entries.rend());
  return from_beta_set(beta);
}

namespace {

bool size_lex_less(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.parts() < b.parts();
}

void walk_lattice(LatticeVec& v, int i, std::int64_t budget,
                  const std::vector<std::vector<std::pair<int, std::int64_t>>>& options,
                  std::vector<Partition>& out) {
  if (i == static_cast<int>(v.v.size())) {
    out.push_back(phi_inverse(v));
    return;
  }
  for (const auto& [x, cost] : options[i]) {
    if (cost > budget) continue;
    v.v[i] = x;
    walk_lattice(v, i + 1, budget - cost, options, out);
  }
}

}  // namespace

std::vector<Partition> enum_z_cores(int z, int t, int max_size) {
  if (t < 2) throw std::invalid_argument("need t >= 2");
  if (max_size < 0) throw std::invalid_argument("max size must be nonnegative");
  if (z == -1) {
    std::vector<Partition> out;
    for (const auto& p : enum_z_cores(1, t, max_size)) out.push_back(conjugate(p));
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
  }
  if (z < -1) throw std::invalid_argument("z-asymmetric cores are enumerated for z >= -1");
  if (z >= t - 1) return {Partition{}};

  const int d = lattice_dim(z, t);
  // Each coordinate contributes t x^2 - b_i x >= 0 independently.
  std::vector<std::vector<std::pair<int, std::int64_t>>> options(d);
  for (int i = 0; i < d; ++i) {
    const std::int64_t b = t - z - 1 - 2 * i;
    for (int sign : {1, -1})
      for (std::int64_t x = sign > 0 ? 0 : -1;; x += sign) {
        const std::int64_t cost = t * x * x - b * x;
        if (cost > max_size) break;
        options[i].emplace_back(static_cast<int>(x), cost);
      }
  }
  LatticeVec v{z, t, std::vector<int>(d)};
  std::vector<Partition> out;
  walk_lattice(v, 0, max_size, options, out);
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

std::vector<Partition> enum_z_cores_brute(int z, int t, int max_size) {
  std::vector<Partition> out;
  for (const auto& p : partitions_up_to(max_size))
    if (is_z_asymmetric(p, z) && is_t_core(p, t)) out.push_back(p);
  return out;
}

SeriesZ size_series(const std::vector<Partition>& parts, int order) {
  std::vector<std::int64_t> c(order + 1, 0);
  for (const auto& p : parts)
    if (p.size() <= order) ++c[p.size()];
  return SeriesZ(order, std::move(c));
}

}  // namespace twistchar
