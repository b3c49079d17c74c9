#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistchar/partition.hpp"

namespace twistchar {

/// Integer power series in q truncated after q^order. Arithmetic checks for
/// int64 overflow and throws std::overflow_error.
class SeriesZ {
 public:
  explicit SeriesZ(int order);
  SeriesZ(int order, std::vector<std::int64_t> coeffs);

  static SeriesZ one(int order);
  /// c * q^exponent (zero if exponent > order).
  static SeriesZ monomial(int order, int exponent, std::int64_t c = 1);

  int order() const { return order_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t operator[](int m) const { return coeffs_.at(m); }
  /// Exponents with nonzero coefficient.
  std::vector<int> support() const;
  SeriesZ truncated(int order) const;

  SeriesZ& operator+=(const SeriesZ& other);
  SeriesZ& operator*=(const SeriesZ& other);
  friend SeriesZ operator+(SeriesZ a, const SeriesZ& b) { return a += b; }
  friend SeriesZ operator*(SeriesZ a, const SeriesZ& b) { return a *= b; }
  friend bool operator==(const SeriesZ&, const SeriesZ&) = default;

  std::string to_string() const;

 private:
  int order_;
  std::vector<std::int64_t> coeffs_;
};

/// Coefficient of q^m counts partitions of m that are z-asymmetric.
SeriesZ enum_z_asymmetric(int z, int order);
/// prod (1 + q^{z+1+2k}) over k >= 0 with z+1+2k >= 1.
SeriesZ gf_z_asymmetric(int z, int order);
/// (alpha | alpha + z) -> distinct parts 2 alpha_i + z + 1; lambda must be
/// z-asymmetric.
Partition z_asymmetric_to_distinct(const Partition& lambda, int z);

/// f(q^a, q^b) = sum over n of q^{a n(n+1)/2 + b n(n-1)/2}; a, b >= 0, a + b > 0.
SeriesZ theta_f(int a_exp, int b_exp, int order);
/// prod_{i=0}^{floor((t-z-2)/2)} f(q^{2i+z+1}, q^{2t-2i-z-1}), 0 <= z <= t-2.
SeriesZ gf_z_cores(int z, int t, int order);

/// Coordinates v_0 .. v_{d-1} with d = floor((t-z)/2).
struct LatticeVec {
  int z = 0;
  int t = 2;
  std::vector<int> v;

  friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
};

int lattice_dim(int z, int t);
/// t |v|^2 - b.v with b_i = t - z - 1 - 2i.
std::int64_t lattice_size(const LatticeVec& v);

/// (n_i(lambda, tn) - n) for i < lattice_dim. Requires 0 <= z <= t-2 and
/// lambda a z-asymmetric t-core. n <= 0 picks the smallest n with
/// tn >= l(lambda); the result does not depend on n.
LatticeVec phi(const Partition& lambda, int z, int t, int n = 0);
/// The z-asymmetric t-core with the residue counts prescribed by v.
Partition phi_inverse(const LatticeVec& v);

/// All z-asymmetric t-cores of size <= max_size, ordered by (size, lex).
/// 0 <= z <= t-2 walks the lattice; z >= t-1 gives only the empty core;
/// z = -1 conjugates the z = 1 cores.
std::vector<Partition> enum_z_cores(int z, int t, int max_size);
/// Same set by filtering every partition of size <= max_size.
std::vector<Partition> enum_z_cores_brute(int z, int t, int max_size);

/// Size generating series of a list of partitions.
SeriesZ size_series(const std::vector<Partition>& parts, int order);

}  // namespace twistchar
