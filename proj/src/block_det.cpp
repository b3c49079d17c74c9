#include <random>
#include <stdexcept>

#include "twistchar/factorization.hpp"

namespace twistchar {

namespace {

using QMatrix = Matrix<Rational>;

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

QMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  QMatrix m(rows, cols, Rational(0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng);
  return m;
}

void paste(QMatrix& dst, const QMatrix& src, std::size_t r0, std::size_t c0,
           const Rational& scale = Rational(1)) {
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t c = 0; c < src.cols(); ++c) dst(r0 + r, c0 + c) = scale * src(r, c);
}

Rational det_or_zero(const QMatrix& m) {
  return m.square() ? determinant(m) : Rational(0);
}

// Block-diagonal versus block-antidiagonal arrangement of the same blocks.
bool diagonal_rule_holds(const std::vector<QMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  if (rows != cols) return true;  // neither arrangement is square
  QMatrix diag(rows, cols, Rational(0)), anti(rows, cols, Rational(0));
  std::size_t r = 0, c = 0, c_anti = cols;
  bool all_square = true;
  Rational product = 1;
  for (const auto& b : blocks) {
    paste(diag, b, r, c);
    c_anti -= b.cols();
    paste(anti, b, r, c_anti);
    r += b.rows();
    c += b.cols();
    if (!b.square()) all_square = false;
    else product *= determinant(b);
  }
  std::int64_t exponent = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      exponent += static_cast<std::int64_t>(blocks[i].cols() * blocks[j].cols());
  const Rational d = determinant(diag);
  Rational a = determinant(anti);
  if (exponent % 2) a = -a;
  return d == a && d == (all_square ? product : Rational(0));
}

std::int64_t simplified_sigma(int k, int n, std::span<const int> dims) {
  std::int64_t sigma = 0;
  for (int i = 1; i <= k / 2; ++i) sigma += n + dims[i - 1];
  if (k % 2)
    for (int i = 1; i <= (k - 1) / 2; ++i) sigma += std::int64_t{n} * dims[i - 1];
  return sigma;
}

// Inversions of the column reordering that takes blocks 1, k, 2, k-1, ...
std::int64_t reorder_inversions(std::span<const int> dims) {
  const int k = static_cast<int>(dims.size());
  std::vector<int> start(k + 1, 0);
  for (int j = 1; j <= k; ++j) start[j] = start[j - 1] + dims[j - 1];
  std::vector<int> order;
  for (int lo = 1, hi = k, front = 1; lo <= hi; front ^= 1) {
    const int j = front ? lo++ : hi--;
    for (int c = 0; c < dims[j - 1]; ++c) order.push_back(start[j - 1] + c);
  }
  return permutation_inversions(order);
}

}  // namespace

BlockDetOutcome block_det_lemma_outcome(int k, int n, std::span<const int> dims,
                                        std::uint64_t seed, SignRule rule) {
  if (k < 1 || n < 1) throw std::invalid_argument("need k >= 1 and n >= 1");
  if (static_cast<int>(dims.size()) != k)
    throw std::invalid_argument("need one block width per index");
  int total = 0;
  for (int u : dims) {
    if (u < 0) throw std::invalid_argument("block widths must be nonnegative");
    total += u;
  }
  if (total != k * n) throw std::invalid_argument("block widths must sum to kn");

  std::mt19937_64 rng(seed);
  std::vector<QMatrix> U, V;
  for (int u : dims) {
    U.push_back(random_matrix(n, u, rng));
    V.push_back(random_matrix(n, u, rng));
  }
  // gamma is k x (k+1) with the last column repeating column k.
  QMatrix gamma = random_matrix(k, k + 1, rng);
  for (int i = 0; i < k; ++i) gamma(i, k) = gamma(i, k - 1);
  // 1-based accessors.
  auto g = [&](int i, int j) -> const Rational& { return gamma(i - 1, j - 1); };
  auto u = [&](int j) { return dims[j - 1]; };

  QMatrix pi(k * n, k * n, Rational(0));
  for (int i = 1; i <= k; ++i) {
    int col = 0;
    for (int j = 1; j <= k; ++j) {
      const bool front = j <= (k + 1) / 2;
      const Rational& a = front ? g(i, 2 * j - 1) : g(i, 2 * k + 2 - 2 * j);
      const Rational& b = front ? g(i, 2 * j) : g(i, 2 * k + 1 - 2 * j);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < u(j); ++c)
          pi((i - 1) * n + r, col + c) = a * U[j - 1](r, c) - b * V[j - 1](r, c);
      col += u(j);
    }
  }

  BlockDetOutcome out;
  out.det_pi = determinant(pi);
  for (int p = 1; p <= k; ++p)
    if (u(p) + u(k + 1 - p) != 2 * n) out.forced_zero = true;

  // W_i = [[U_i, -V_{k+1-i}], [-V_i, U_{k+1-i}]]; middle block U_m - V_m.
  std::vector<QMatrix> w;
  for (int i = 1; i <= k / 2; ++i) {
    const int o = k + 1 - i;
    QMatrix b(2 * n, u(i) + u(o), Rational(0));
    paste(b, U[i - 1], 0, 0);
    paste(b, V[o - 1], 0, u(i), Rational(-1));
    paste(b, V[i - 1], n, 0, Rational(-1));
    paste(b, U[o - 1], n, u(i));
    w.push_back(std::move(b));
  }
  if (k % 2) {
    const int m = (k + 1) / 2;
    QMatrix b(n, u(m), Rational(0));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < u(m); ++c) b(r, c) = U[m - 1](r, c) - V[m - 1](r, c);
    w.push_back(std::move(b));
  }

  if (out.forced_zero) {
    out.predicted = 0;
  } else {
    QMatrix gamma_sq(k, k, Rational(0));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) gamma_sq(i, j) = gamma(i, j);
    const Rational dg = determinant(gamma_sq);
    Rational pred = 1;
    for (int e = 0; e < n; ++e) pred *= dg;
    for (const auto& b : w) pred *= det_or_zero(b);
    const std::int64_t sigma = rule == SignRule::Expanded ? reorder_inversions(dims)
                                                          : simplified_sigma(k, n, dims);
    if (sigma % 2) pred = -pred;
    out.predicted = pred;
  }
  out.pi_ok = out.det_pi == out.predicted;
  out.diagonal_rule_ok = diagonal_rule_holds(w);
  return out;
}

bool check_block_det_lemma(int k, int n, std::span<const int> dims, std::uint64_t seed,
                           SignRule rule) {
  return block_det_lemma_outcome(k, n, dims, seed, rule).ok();
}

}  // namespace twistchar
