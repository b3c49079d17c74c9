#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistchar/cyclotomic.hpp"
#include "twistchar/linalg.hpp"
#include "twistchar/partition.hpp"

namespace twistchar {

/// GL: Schur polynomial. SP: symplectic. OO: odd orthogonal O(2n+1).
/// OE: even orthogonal O(2n).
enum class Group { GL, SP, OO, OE };

std::string to_string(Group g);

struct DegeneratePoint : std::domain_error {
  using std::domain_error::domain_error;
};

struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Evaluation point (x_1, ..., x_n), entries in a common cyclotomic field.
struct PointTuple {
  std::vector<CycloElem> values;

  std::size_t size() const { return values.size(); }
  const CycloField& field() const;
};

struct CharacterValue {
  CycloElem value;
  /// Set when l(lambda) exceeds the number of variables; value is then zero.
  bool length_exceeded = false;
};

/// det( x_i^{pos_j} + sign * x_i^{-neg_j} ), sign in {-1, 0, +1}; with
/// sign 0 the second term is dropped and `neg` is ignored.
CycloElem laurent_alternant(const PointTuple& pts, std::span<const std::int64_t> pos,
                            std::span<const std::int64_t> neg, int sign,
                            DetStrategy strategy = DetStrategy::Gauss);

/// Bialternant numerator for lambda (length <= n required).
CycloElem weyl_numerator(Group g, const Partition& lambda, const PointTuple& pts,
                         DetStrategy strategy = DetStrategy::Gauss);
/// The denominator determinant (numerator at the empty partition), without
/// any normalization factor.
CycloElem weyl_denominator(Group g, const PointTuple& pts,
                           DetStrategy strategy = DetStrategy::Gauss);
/// Product forms of the Weyl denominators: prod(x_i - x_j) for GL,
/// prod(x_i - 1/x_i) * P for SP, prod(x_i - 1) * P for OO (integer-exponent
/// form), and P for OE, with P = prod_{i<j}(x_i + 1/x_i - x_j - 1/x_j).
CycloElem weyl_denominator_product(Group g, const PointTuple& pts);

/// Character value as a determinant ratio. For OE the result is divided by
/// (1 + [lambda_n = 0]) * P, P as in weyl_denominator_product.
CharacterValue weyl_character(Group g, const Partition& lambda, const PointTuple& pts,
                              DetStrategy strategy = DetStrategy::Gauss);

/// oe_{lambda + 1/2}(y_1^2, ..., y_n^2): the half-integer shifted even
/// orthogonal character written in integer exponents of the y_i.
CycloElem oe_half_shifted_at_squares(const Partition& lambda, const PointTuple& ys,
                                     DetStrategy strategy = DetStrategy::Gauss);

/// (X, wX, ..., w^{t-1}X) in block order; t must divide the field order.
PointTuple twisted_points(const PointTuple& pts, int t);
PointTuple power_points(const PointTuple& pts, std::int64_t e);
PointTuple negate_points(const PointTuple& pts);
PointTuple concat_points(const PointTuple& a, const PointTuple& b);
PointTuple append_one(const PointTuple& pts);

/// Distinct positive rationals in Q(w_t), none equal to 1, no pair with
/// product 1. These avoid every denominator zero of the twisted and
/// factor characters. Deterministic in `seed`.
PointTuple sample_points(int n, int t, std::uint64_t seed);

/// True when every denominator product the factorization checks divide by is
/// nonzero at pts (twisted by t).
bool admissible_points(const PointTuple& pts, int t);

}  // namespace twistchar
