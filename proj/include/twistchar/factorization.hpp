#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twistchar/characters.hpp"
#include "twistchar/partition.hpp"

namespace twistchar {

/// The five twisted factorizations:
///  SchurFac   s_lambda(X, wX, ..., w^{t-1}X)            on GL_{tn}
///  SchurOne   s_lambda(X, wX, ..., w^{t-1}X, 1)         on GL_{tn+1}
///  Symplectic sp_lambda(X, wX, ..., w^{t-1}X)           on Sp_{2tn}
///  EvenOrth   oe_lambda(X, wX, ..., w^{t-1}X)           on O_{2tn}
///  OddOrth    oo_lambda(X, wX, ..., w^{t-1}X)           on O_{2tn+1}
enum class Theorem { SchurFac, SchurOne, Symplectic, EvenOrth, OddOrth };

inline constexpr Theorem kAllTheorems[] = {Theorem::SchurFac, Theorem::SchurOne,
                                           Theorem::Symplectic, Theorem::EvenOrth,
                                           Theorem::OddOrth};

/// CLI names: schurfac, schur1, sympfact, eorthfact, oorthfact.
std::string to_string(Theorem th);
std::optional<Theorem> parse_theorem(const std::string& name);

Group theorem_group(Theorem th);
/// tn, or tn + 1 for SchurOne.
int length_bound(Theorem th, int t, int n);
/// Padding used for quotients and sigma signs: tn (tn + 1 for SchurOne).
int theorem_padding(Theorem th, int t, int n);

/// True when the theorem predicts a zero character value: nonempty core
/// (SchurFac), core with two or more rows (SchurOne), core not symplectic /
/// orthogonal / self-conjugate for the remaining three.
bool predicted_vanishing(Theorem th, const Partition& lambda, int t, int n);

/// Which form of a sign exponent to use. Simplified is the closed-form
/// parity; Expanded is the raw exponent before reduction mod 2 (for OddOrth
/// the sum over residue counts, for the block lemma the inversion count of
/// the column reordering). The two differ for OddOrth at odd t and for the
/// block lemma when paired widths are unequal; Expanded is the correct one
/// there.
enum class SignRule { Simplified, Expanded };

struct EpsilonUndefined : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parity (0 or 1) of the global sign exponent. For SchurFac and SchurOne
/// this is the fixed t(t-1)/2 * n(n+1)/2 (- cn) exponent. Throws
/// EpsilonUndefined when the theorem predicts vanishing.
int epsilon(Theorem th, const Partition& lambda, int t, int n,
            SignRule rule = SignRule::Simplified);

/// sgn(sigma_lambda), or sgn(sigma^c_lambda) for SchurOne (0 when no c).
int theorem_sigma_sign(Theorem th, const Partition& lambda, int t, int n);

/// The product of smaller characters on the right-hand side, evaluated at
/// X^t (and X^{-t}, -X^t where the theorem calls for it). Zero when the
/// theorem predicts vanishing.
CycloElem rhs_value(Theorem th, const Partition& lambda, int t, int n,
                    const PointTuple& pts, SignRule rule = SignRule::Simplified);

/// The twisted character itself.
CycloElem lhs_value(Theorem th, const Partition& lambda, int t, int n,
                    const PointTuple& pts);

struct TrialResult {
  std::uint64_t seed;
  std::vector<Rational> point;  // the sampled x_i
  CycloElem lhs;
  CycloElem rhs;
  bool match;
};

struct VerificationReport {
  Theorem theorem = Theorem::SchurFac;
  Partition lambda;
  int t = 0;
  int n = 0;
  std::uint64_t seed = 0;
  bool predicted_vanishing = false;
  SignRule sign_rule = SignRule::Simplified;
  std::optional<int> sign_exponent;  // epsilon parity when defined
  int sigma_sign = 0;
  std::vector<TrialResult> trials;
  bool match = false;  // every trial: lhs == rhs exactly

  /// Predicted vanishing and lhs == 0 at every trial.
  bool vanishing_confirmed() const;
};

/// Seed of trial j derived from the base seed.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

VerificationReport verify(Theorem th, const Partition& lambda, int t, int n,
                          std::uint64_t seed, int trials,
                          SignRule rule = SignRule::Simplified);

/// Randomized check of the block determinant identities: the block-diagonal
/// / block-antidiagonal rule, and the factorization of
/// Pi = ( gamma_{i,2j-1} U_j - gamma_{i,2j} V_j | gamma_{i,2k+2-2j} U_j -
/// gamma_{i,2k+1-2j} V_j ) into (det Gamma)^n prod det W_i, including the
/// forced zero when some u_p + u_{k+1-p} != 2n.
struct BlockDetOutcome {
  Rational det_pi;
  Rational predicted;
  bool forced_zero = false;
  bool pi_ok = false;
  bool diagonal_rule_ok = false;
  bool ok() const { return pi_ok && diagonal_rule_ok; }
};

BlockDetOutcome block_det_lemma_outcome(int k, int n, std::span<const int> dims,
                                        std::uint64_t seed,
                                        SignRule rule = SignRule::Simplified);
bool check_block_det_lemma(int k, int n, std::span<const int> dims,
                           std::uint64_t seed, SignRule rule = SignRule::Simplified);

}  // namespace twistchar
