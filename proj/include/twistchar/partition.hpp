#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistchar {

struct PartitionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Integer partition in canonical form: weakly decreasing positive parts,
/// no trailing zeros. The empty partition has length 0.
class Partition {
 public:
  Partition() = default;

  /// Accepts a weakly decreasing nonnegative sequence; trailing zeros are
  /// dropped. Throws PartitionError otherwise.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Parses "4,2,2,1"; the empty string (or whitespace) is the empty partition.
  static Partition parse(const std::string& literal);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  /// 1-based part; zero beyond the length.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Strictly decreasing beta numbers beta_i = lambda_i + m - i, i = 1..m.
struct BetaSet {
  std::vector<int> entries;
  int padding() const { return static_cast<int>(entries.size()); }
  friend bool operator==(const BetaSet&, const BetaSet&) = default;
};

struct FrobeniusCoords {
  std::vector<int> arms;  // alpha
  std::vector<int> legs;  // beta
  int rank() const { return static_cast<int>(arms.size()); }
  friend bool operator==(const FrobeniusCoords&, const FrobeniusCoords&) = default;
};

struct HookCell {
  int row;  // 1-based
  int col;  // 1-based
  int hook;
  int content;
};

/// n_i(lambda, m): number of beta numbers congruent to i mod t.
struct ResidueProfile {
  int modulus = 0;
  int padding = 0;
  std::vector<int> counts;
  friend bool operator==(const ResidueProfile&, const ResidueProfile&) = default;
};

struct CoreClass {
  Partition core;
  int rank = 0;
  bool is_empty = false;
  std::optional<int> single_row;  // c when the core is (c) (or empty, c = 0)
  bool symplectic = false;
  bool orthogonal = false;
  bool self_conjugate = false;
};

BetaSet beta_set(const Partition& lambda, int m);
Partition from_beta_set(const BetaSet& beta);
Partition conjugate(const Partition& lambda);
std::vector<HookCell> hook_content(const Partition& lambda);
FrobeniusCoords frobenius(const Partition& lambda);
int frobenius_rank(const Partition& lambda);
Partition from_frobenius(const FrobeniusCoords& coords);

ResidueProfile residue_counts(const Partition& lambda, int t, int m);

/// t-core through the beta-set rearrangement.
Partition t_core(const Partition& lambda, int t);
/// t-core by repeatedly removing rim hooks of length t on the diagram.
Partition t_core_strips(const Partition& lambda, int t);
bool is_t_core(const Partition& lambda, int t);

/// Quotient components (lambda^(0), ..., lambda^(t-1)) read off beta(lambda, m);
/// the order rotates with m mod t.
std::vector<Partition> t_quotient(const Partition& lambda, int t, int m);

/// lambda = (alpha | alpha + z) in Frobenius coordinates. z = -1 allowed.
bool is_z_asymmetric(const Partition& lambda, int z);

/// All predicates on the t-core, read from residue counts with m = tn
/// (the single-row test uses m = tn + 1, see the theorem for GL_{tn+1}).
CoreClass classify_core(const Partition& lambda, int t, int n);

/// c such that core_t(lambda) = (c), using residue counts at m = tn + 1.
std::optional<int> single_row_core(const Partition& lambda, int t, int n);

/// sgn of the permutation sorting beta(lambda, tn) into residue blocks 0..t-1.
int sigma_sign(const Partition& lambda, int t, int n);
/// sgn of the permutation sorting beta(lambda, tn+1) into block c, then the
/// remaining residue blocks in increasing order.
int sigma_c_sign(const Partition& lambda, int t, int n, int c);

/// back_1 + (front, 0, ..., 0, -rev(back)) with exactly 2n entries.
/// Returned in canonical form (trailing zeros dropped).
Partition mu_padded(const Partition& front, const Partition& back, int n);

/// Number of inversions of a sequence of distinct integers, and its sign.
std::int64_t permutation_inversions(std::span<const int> one_line);
int permutation_sign(std::span<const int> one_line);

/// All partitions of m, lexicographically increasing, with at most
/// max_length parts (negative: unbounded).
std::vector<Partition> partitions_of(int m, int max_length = -1);
/// All partitions with |lambda| <= max_size ordered by (size, lex).
std::vector<Partition> partitions_up_to(int max_size, int max_length = -1);

}  // namespace twistchar
