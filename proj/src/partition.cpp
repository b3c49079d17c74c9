#include "twistchar/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace twistchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw PartitionError("negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw PartitionError("parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& literal) {
  if (literal.find_first_not_of(" \t") == std::string::npos) return {};
  std::vector<int> parts;
  std::string token;
  std::istringstream in(literal);
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw PartitionError("cannot parse part '" + token + "' in '" + literal + "'");
    }
    if (token.find_first_not_of(" \t", used) != std::string::npos || value <= 0)
      throw PartitionError("cannot parse part '" + token + "' in '" + literal + "'");
    parts.push_back(value);
  }
  if (!literal.empty() && literal.back() == ',')
    throw PartitionError("trailing comma in '" + literal + "'");
  return Partition(std::move(parts));
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

BetaSet beta_set(const Partition& lambda, int m) {
  if (m < lambda.length()) throw PartitionError("padding too short");
  BetaSet b;
  b.entries.resize(m);
  for (int i = 1; i <= m; ++i) b.entries[i - 1] = lambda.part(i) + m - i;
  return b;
}

Partition from_beta_set(const BetaSet& beta) {
  const int m = beta.padding();
  std::vector<int> parts(m);
  for (int i = 0; i < m; ++i) {
    if (beta.entries[i] < 0 || (i + 1 < m && beta.entries[i] <= beta.entries[i + 1]))
      throw PartitionError("invalid beta set");
    parts[i] = beta.entries[i] - m + (i + 1);
  }
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(lambda.empty() ? 0 : lambda.part(1), 0);
  for (int row : lambda.parts())
    for (int j = 0; j < row; ++j) ++cols[j];
  return Partition(std::move(cols));
}

std::vector<HookCell> hook_content(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  std::vector<HookCell> cells;
  cells.reserve(lambda.size());
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j)
      cells.push_back({i, j, lambda.part(i) - i + conj.part(j) - j + 1, j - i});
  return cells;
}

int frobenius_rank(const Partition& lambda) {
  int r = 0;
  while (lambda.part(r + 1) >= r + 1) ++r;
  return r;
}

FrobeniusCoords frobenius(const Partition& lambda) {
  const int r = frobenius_rank(lambda);
  const Partition conj = conjugate(lambda);
  FrobeniusCoords f;
  for (int i = 1; i <= r; ++i) {
    f.arms.push_back(lambda.part(i) - i);
    f.legs.push_back(conj.part(i) - i);
  }
  return f;
}

Partition from_frobenius(const FrobeniusCoords& coords) {
  const int r = coords.rank();
  if (static_cast<int>(coords.legs.size()) != r)
    throw PartitionError("arm and leg lengths differ");
  for (int i = 0; i < r; ++i) {
    if (coords.arms[i] < 0 || coords.legs[i] < 0 ||
        (i + 1 < r && (coords.arms[i] <= coords.arms[i + 1] ||
                       coords.legs[i] <= coords.legs[i + 1])))
      throw PartitionError("Frobenius coordinates must be strict");
  }
  if (r == 0) return {};
  // Rows 1..r come from the arms; below the diagonal, row i has
  // #{j : legs_j + j >= i} cells.
  const int rows = coords.legs[0] + 1;
  std::vector<int> parts(rows, 0);
  for (int i = 1; i <= r; ++i) parts[i - 1] = coords.arms[i - 1] + i;
  for (int i = r + 1; i <= rows; ++i)
    for (int j = 1; j <= r; ++j)
      if (coords.legs[j - 1] + j >= i) ++parts[i - 1];
  return Partition(std::move(parts));
}

ResidueProfile residue_counts(const Partition& lambda, int t, int m) {
  if (t < 2) throw PartitionError("modulus must be at least 2");
  const BetaSet b = beta_set(lambda, m);
  ResidueProfile p{t, m, std::vector<int>(t, 0)};
  for (int e : b.entries) ++p.counts[e % t];
  return p;
}

Partition t_core(const Partition& lambda, int t) {
  if (t < 2) throw PartitionError("modulus must be at least 2");
  const int m = lambda.length();
  const ResidueProfile p = residue_counts(lambda, t, m);
  BetaSet core;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < p.counts[i]; ++j) core.entries.push_back(t * j + i);
  std::sort(core.entries.rbegin(), core.entries.rend());
  return from_beta_set(core);
}

Partition t_core_strips(const Partition& lambda, int t) {
  if (t < 2) throw PartitionError("modulus must be at least 2");
  Partition current = lambda;
  for (;;) {
    const auto cells = hook_content(current);
    auto it = std::find_if(cells.begin(), cells.end(),
                           [t](const HookCell& c) { return c.hook == t; });
    if (it == cells.end()) return current;
    // The rim hook of cell (i,j) runs from (i, lambda_i) down to
    // (lambda'_j, j); removing it shifts rows i..r-1 up by one.
    const Partition conj = conjugate(current);
    const int i = it->row, j = it->col, r = conj.part(j);
    std::vector<int> parts = current.parts();
    for (int k = i; k < r; ++k) parts[k - 1] = current.part(k + 1) - 1;
    parts[r - 1] = j - 1;
    current = Partition(std::move(parts));
  }
}

bool is_t_core(const Partition& lambda, int t) {
  for (const auto& c : hook_content(lambda))
    if (c.hook % t == 0) return false;
  return true;
}

std::vector<Partition> t_quotient(const Partition& lambda, int t, int m) {
  if (t < 2) throw PartitionError("modulus must be at least 2");
  const BetaSet b = beta_set(lambda, m);
  std::vector<std::vector<int>> reduced(t);
  for (int e : b.entries) reduced[e % t].push_back(e / t);  // already decreasing
  std::vector<Partition> quotient;
  quotient.reserve(t);
  for (int i = 0; i < t; ++i) {
    const int ni = static_cast<int>(reduced[i].size());
    std::vector<int> parts(ni);
    for (int j = 1; j <= ni; ++j) parts[j - 1] = reduced[i][j - 1] - ni + j;
    quotient.emplace_back(std::move(parts));
  }
  return quotient;
}

bool is_z_asymmetric(const Partition& lambda, int z) {
  const FrobeniusCoords f = frobenius(lambda);
  for (int i = 0; i < f.rank(); ++i)
    if (f.legs[i] != f.arms[i] + z) return false;
  return true;
}

namespace {

void require_length(const Partition& lambda, int bound) {
  if (lambda.length() > bound)
    throw PartitionError("partition length " + std::to_string(lambda.length()) +
                         " exceeds " + std::to_string(bound));
}

}  // namespace

std::optional<int> single_row_core(const Partition& lambda, int t, int n) {
  require_length(lambda, t * n + 1);
  const auto counts = residue_counts(lambda, t, t * n + 1).counts;
  std::optional<int> c;
  for (int i = 0; i < t; ++i) {
    if (counts[i] == n + 1 && !c) {
      c = i;
    } else if (counts[i] != n) {
      return std::nullopt;
    }
  }
  return c;
}

CoreClass classify_core(const Partition& lambda, int t, int n) {
  require_length(lambda, t * n);
  const auto counts = residue_counts(lambda, t, t * n).counts;
  auto nc = [&](int i) { return counts[((i % t) + t) % t]; };

  CoreClass cls;
  cls.core = t_core(lambda, t);
  cls.is_empty = std::all_of(counts.begin(), counts.end(),
                             [n](int c) { return c == n; });
  cls.single_row = single_row_core(lambda, t, n);

  cls.symplectic = nc(t - 1) == n;
  for (int i = 0; i <= (t - 2) / 2; ++i)
    cls.symplectic = cls.symplectic && nc(i) + nc(t - 2 - i) == 2 * n;

  cls.orthogonal = nc(0) == n;
  for (int i = 1; i <= t / 2; ++i)
    cls.orthogonal = cls.orthogonal && nc(i) + nc(t - i) == 2 * n;

  cls.self_conjugate = true;
  for (int i = 0; i <= (t - 1) / 2; ++i)
    cls.self_conjugate = cls.self_conjugate && nc(i) + nc(t - 1 - i) == 2 * n;

  for (int c : counts) cls.rank += std::max(c - n, 0);
  return cls;
}

namespace {

// Inversion count by merge sort.
std::int64_t count_inversions(std::vector<int>& a, std::vector<int>& scratch,
                              std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t inv = count_inversions(a, scratch, lo, mid) +
                     count_inversions(a, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[j] < a[i]) {
      inv += static_cast<std::int64_t>(mid - i);
      scratch[k++] = a[j++];
    } else {
      scratch[k++] = a[i++];
    }
  }
  while (i < mid) scratch[k++] = a[i++];
  while (j < hi) scratch[k++] = a[j++];
  std::copy(scratch.begin() + lo, scratch.begin() + hi, a.begin() + lo);
  return inv;
}

// One-line form of the permutation listing beta positions residue block by
// residue block, in the given block order.
std::vector<int> block_permutation(const BetaSet& b, int t,
                                   const std::vector<int>& block_order) {
  std::vector<int> one_line;
  one_line.reserve(b.entries.size());
  for (int residue : block_order)
    for (int j = 0; j < b.padding(); ++j)
      if (b.entries[j] % t == residue) one_line.push_back(j + 1);
  return one_line;
}

}  // namespace

std::int64_t permutation_inversions(std::span<const int> one_line) {
  std::vector<int> a(one_line.begin(), one_line.end());
  std::vector<int> scratch(a.size());
  return count_inversions(a, scratch, 0, a.size());
}

int permutation_sign(std::span<const int> one_line) {
  return permutation_inversions(one_line) % 2 == 0 ? 1 : -1;
}

int sigma_sign(const Partition& lambda, int t, int n) {
  require_length(lambda, t * n);
  std::vector<int> order(t);
  std::iota(order.begin(), order.end(), 0);
  return permutation_sign(block_permutation(beta_set(lambda, t * n), t, order));
}

int sigma_c_sign(const Partition& lambda, int t, int n, int c) {
  if (c < 0 || c >= t) throw PartitionError("residue out of range");
  require_length(lambda, t * n + 1);
  std::vector<int> order{c};
  for (int i = 0; i < t; ++i)
    if (i != c) order.push_back(i);
  return permutation_sign(block_permutation(beta_set(lambda, t * n + 1), t, order));
}

Partition mu_padded(const Partition& front, const Partition& back, int n) {
  if (front.length() + back.length() > 2 * n)
    throw PartitionError("front and back do not fit in 2n parts");
  const int shift = back.part(1);
  std::vector<int> parts(2 * n, shift);
  for (int i = 1; i <= front.length(); ++i) parts[i - 1] += front.part(i);
  for (int k = 1; k <= back.length(); ++k) parts[2 * n - k] -= back.part(k);
  return Partition(std::move(parts));
}

namespace {

void extend(int remaining, int max_part, int max_length, std::vector<int>& prefix,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (max_length >= 0 && static_cast<int>(prefix.size()) >= max_length) return;
  // Smallest first part first gives lexicographically increasing output.
  for (int p = 1; p <= std::min(remaining, max_part); ++p) {
    prefix.push_back(p);
    extend(remaining - p, p, max_length, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int m, int max_length) {
  std::vector<Partition> out;
  if (m < 0) return out;
  std::vector<int> prefix;
  extend(m, m, max_length, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int max_size, int max_length) {
  std::vector<Partition> out;
  for (int m = 0; m <= max_size; ++m) {
    auto level = partitions_of(m, max_length);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace twistchar
