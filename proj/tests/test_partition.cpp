#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "twistchar/partition.hpp"

using namespace twistchar;

namespace {

// Column lengths counted cell by cell.
Partition transpose_by_cells(const Partition& l) {
  std::vector<int> cols(l.part(1), 0);
  for (int r : l.parts())
    for (int c = 0; c < r; ++c) ++cols[c];
  return Partition(cols);
}

// Frobenius rank straight from the definition.
int rank_by_diagonal(const Partition& l) {
  int r = 0;
  while (l.part(r + 1) >= r + 1) ++r;
  return r;
}

// Rim-hook removal on the diagram: a removable t-strip exists iff some cell
// has hook length t; removing it leaves the partition whose beta set has that
// entry lowered by t.
Partition core_by_hooks(Partition l, int t) {
  for (;;) {
    const int m = l.length();
    if (m == 0) return l;
    const auto b = beta_set(l, m).entries;
    std::set<int> s(b.begin(), b.end());
    bool moved = false;
    for (int x : b) {
      if (x >= t && !s.count(x - t)) {
        s.erase(x);
        s.insert(x - t);
        moved = true;
        break;
      }
    }
    if (!moved) return l;
    BetaSet nb;
    nb.entries.assign(s.rbegin(), s.rend());
    l = from_beta_set(nb);
  }
}

std::vector<int> residues_by_hand(const Partition& l, int t, int m) {
  std::vector<int> c(t, 0);
  for (int i = 1; i <= m; ++i) ++c[(l.part(i) + m - i) % t];
  return c;
}

// Sign of a one-line permutation by counting pairs.
int sign_by_pairs(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv % 2 ? -1 : 1;
}

int total_size(const std::vector<Partition>& ps) {
  int s = 0;
  for (const auto& p : ps) s += p.size();
  return s;
}

}  // namespace

TEST(Partition, CanonicalFormAndParsing) {
  EXPECT_EQ(Partition({3, 1, 0, 0}).parts(), (std::vector<int>{3, 1}));
  EXPECT_EQ(Partition::parse("4,2,2,1"), Partition({4, 2, 2, 1}));
  EXPECT_TRUE(Partition::parse("").empty());
  EXPECT_TRUE(Partition::parse("  ").empty());
  EXPECT_EQ(Partition({4, 2, 2, 1}).size(), 9);
  EXPECT_EQ(Partition({4, 2, 2, 1}).length(), 4);
  EXPECT_EQ(Partition({4, 2}).part(5), 0);
  EXPECT_THROW(Partition({1, 2}), PartitionError);
  EXPECT_THROW(Partition({2, -1}), PartitionError);
  EXPECT_THROW(Partition::parse("3,x"), PartitionError);
  EXPECT_THROW(Partition::parse("3,"), PartitionError);
}

TEST(BetaSet, Examples) {
  EXPECT_EQ(beta_set({3, 2, 1, 1, 1}, 6).entries, (std::vector<int>{8, 6, 4, 3, 2, 0}));
  EXPECT_EQ(beta_set({}, 3).entries, (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(beta_set({4, 2, 2, 1}, 4).entries, (std::vector<int>{7, 4, 3, 1}));
  EXPECT_THROW(beta_set({2, 1}, 1), PartitionError);
}

TEST(BetaSet, InverseExamples) {
  EXPECT_EQ(from_beta_set({{8, 6, 4, 3, 2, 0}}), Partition({3, 2, 1, 1, 1}));
  EXPECT_TRUE(from_beta_set({{2, 1, 0}}).empty());
  EXPECT_EQ(from_beta_set({{4, 2, 1}}), Partition({2, 1, 1}));
  EXPECT_THROW(from_beta_set({{2, 2, 0}}), PartitionError);
  EXPECT_THROW(from_beta_set({{1, 0, -1}}), PartitionError);
}

TEST(BetaSet, RoundTripAndBounds) {
  for (const auto& l : partitions_up_to(10))
    for (int m = l.length(); m <= l.length() + 3; ++m) {
      const auto b = beta_set(l, m);
      ASSERT_EQ(b.padding(), m);
      EXPECT_EQ(from_beta_set(b), l);
      EXPECT_TRUE(std::is_sorted(b.entries.rbegin(), b.entries.rend()));
      EXPECT_EQ(std::adjacent_find(b.entries.begin(), b.entries.end()), b.entries.end());
      if (m > 0) {
        EXPECT_LE(b.entries.front(), l.part(1) + m - 1);
        EXPECT_GE(b.entries.back(), 0);
      }
    }
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate({4, 2, 2, 1}), Partition({4, 3, 1, 1}));
  EXPECT_TRUE(conjugate({}).empty());
  EXPECT_EQ(conjugate({2, 2, 2}), Partition({3, 3}));
}

TEST(Conjugate, InvolutionAgainstCellCount) {
  for (const auto& l : partitions_up_to(12)) {
    EXPECT_EQ(conjugate(l), transpose_by_cells(l));
    EXPECT_EQ(conjugate(conjugate(l)), l);
    EXPECT_EQ(conjugate(l).size(), l.size());
  }
}

TEST(HookContent, Examples) {
  auto cell = [](const Partition& l, int r, int c) {
    for (const auto& h : hook_content(l))
      if (h.row == r && h.col == c) return h;
    ADD_FAILURE() << "missing cell";
    return HookCell{};
  };
  EXPECT_EQ(cell({4, 2, 2, 1}, 1, 1).hook, 7);
  EXPECT_EQ(cell({4, 2, 2, 1}, 1, 1).content, 0);
  EXPECT_EQ(cell({1}, 1, 1).hook, 1);
  EXPECT_EQ(cell({4, 2, 2, 1}, 1, 4).hook, 1);
  EXPECT_EQ(cell({4, 2, 2, 1}, 1, 4).content, 3);
  // First-column hooks of (4,2,2,1) are its beta numbers at padding 4.
  const Partition l{4, 2, 2, 1};
  for (int r = 1; r <= 4; ++r) EXPECT_EQ(cell(l, r, 1).hook, beta_set(l, 4).entries[r - 1]);
}

TEST(HookContent, CountsArmsAndLegs) {
  for (const auto& l : partitions_up_to(9)) {
    const auto cells = hook_content(l);
    ASSERT_EQ(static_cast<int>(cells.size()), l.size());
    const Partition lc = transpose_by_cells(l);
    for (const auto& h : cells) {
      int arm = 0, leg = 0;
      for (int c = h.col + 1; c <= l.part(h.row); ++c) ++arm;
      for (int r = h.row + 1; r <= lc.part(h.col); ++r) ++leg;
      EXPECT_EQ(h.hook, arm + leg + 1);
      EXPECT_EQ(h.content, h.col - h.row);
    }
  }
}

TEST(Frobenius, Examples) {
  EXPECT_EQ(frobenius({4, 2, 2, 1}), (FrobeniusCoords{{3, 0}, {3, 1}}));
  EXPECT_EQ(frobenius({}).rank(), 0);
  EXPECT_EQ(frobenius({2, 2, 2}), (FrobeniusCoords{{1, 0}, {2, 1}}));
}

TEST(Frobenius, ReconstructsPartition) {
  for (const auto& l : partitions_up_to(12)) {
    const auto f = frobenius(l);
    ASSERT_EQ(f.rank(), rank_by_diagonal(l));
    EXPECT_EQ(frobenius_rank(l), f.rank());
    const Partition lc = transpose_by_cells(l);
    for (int i = 1; i <= f.rank(); ++i) {
      EXPECT_EQ(f.arms[i - 1] + i, l.part(i));
      EXPECT_EQ(f.legs[i - 1] + i, lc.part(i));
      if (i > 1) {
        EXPECT_LT(f.arms[i - 1], f.arms[i - 2]);
        EXPECT_LT(f.legs[i - 1], f.legs[i - 2]);
      }
    }
    EXPECT_EQ(from_frobenius(f), l);
  }
}

TEST(ResidueCounts, Examples) {
  EXPECT_EQ(residue_counts({3, 2, 1, 1, 1}, 3, 6).counts, (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(residue_counts({}, 4, 8).counts, (std::vector<int>{2, 2, 2, 2}));
  EXPECT_EQ(residue_counts({4, 2, 2, 1}, 2, 4).counts, (std::vector<int>{1, 3}));
  EXPECT_THROW(residue_counts({1}, 1, 2), PartitionError);
}

TEST(ResidueCounts, SumAndShiftByT) {
  for (int t = 2; t <= 5; ++t)
    for (const auto& l : partitions_up_to(10)) {
      const int m = l.length();
      const auto a = residue_counts(l, t, m).counts;
      EXPECT_EQ(a, residues_by_hand(l, t, m));
      EXPECT_EQ(std::accumulate(a.begin(), a.end(), 0), m);
      auto b = residue_counts(l, t, m + t).counts;
      for (int& x : b) --x;
      EXPECT_EQ(a, b);
    }
}

TEST(Core, Examples) {
  EXPECT_EQ(t_core({4, 2, 2, 1}, 2), Partition({2, 1}));
  EXPECT_EQ(t_core({3, 2, 1, 1, 1}, 3), Partition({1, 1}));
  EXPECT_TRUE(t_core({}, 4).empty());
  EXPECT_EQ(t_core_strips({4, 2, 2, 1}, 2), Partition({2, 1}));
  EXPECT_EQ(t_core_strips({1}, 2), Partition({1}));
  EXPECT_TRUE(t_core_strips({2, 2, 2}, 3).empty());
  EXPECT_THROW(t_core({1}, 1), PartitionError);
}

TEST(Core, BetaRearrangementMatchesStripRemoval) {
  for (int t = 2; t <= 5; ++t)
    for (const auto& l : partitions_up_to(12)) {
      const Partition c = t_core(l, t);
      EXPECT_EQ(c, t_core_strips(l, t));
      EXPECT_EQ(c, core_by_hooks(l, t));
      EXPECT_TRUE(is_t_core(c, t));
      EXPECT_EQ(is_t_core(l, t), c == l);
    }
}

TEST(Core, ResidueCountsSeeOnlyTheCore) {
  for (int t = 2; t <= 5; ++t)
    for (const auto& l : partitions_up_to(11)) {
      const int m = l.length();
      EXPECT_EQ(residue_counts(l, t, m).counts, residue_counts(t_core(l, t), t, m).counts);
    }
}

TEST(Core, CommutesWithConjugation) {
  for (int t = 2; t <= 5; ++t)
    for (const auto& l : partitions_up_to(11))
      EXPECT_EQ(conjugate(t_core(l, t)), t_core(conjugate(l), t));
}

TEST(Quotient, Examples) {
  EXPECT_EQ(t_quotient({4, 2, 2, 1}, 2, 4), (std::vector<Partition>{{2}, {1}}));
  EXPECT_EQ(t_quotient({3, 2, 1, 1, 1}, 3, 6), (std::vector<Partition>{{}, {1}, {1}}));
  EXPECT_EQ(t_quotient({}, 3, 6), (std::vector<Partition>(3)));
  EXPECT_THROW(t_quotient({1, 1, 1}, 2, 2), PartitionError);
}

TEST(Quotient, SizeIdentity) {
  for (int t = 2; t <= 5; ++t)
    for (const auto& l : partitions_up_to(12)) {
      const auto q = t_quotient(l, t, l.length());
      ASSERT_EQ(static_cast<int>(q.size()), t);
      EXPECT_EQ(l.size(), t_core(l, t).size() + t * total_size(q));
    }
}

TEST(Quotient, PaddingByOneRotatesTheNecklace) {
  for (int t = 2; t <= 5; ++t)
    for (const auto& l : partitions_up_to(10)) {
      const int m = l.length();
      const auto a = t_quotient(l, t, m);
      const auto b = t_quotient(l, t, m + 1);
      // One more bead shifts every residue class up by one.
      for (int i = 0; i < t; ++i) EXPECT_EQ(b[(i + 1) % t], a[i]) << l.to_string();
      EXPECT_EQ(t_quotient(l, t, m + t), a);
    }
}

TEST(ZAsymmetric, Examples) {
  EXPECT_TRUE(is_z_asymmetric({2, 2, 2}, 1));
  EXPECT_TRUE(is_z_asymmetric({3, 1, 1, 1}, 1));
  EXPECT_TRUE(is_z_asymmetric({3, 1}, -1));
  EXPECT_TRUE(is_z_asymmetric({}, 1));
  EXPECT_TRUE(is_z_asymmetric({}, -1));
  EXPECT_FALSE(is_z_asymmetric({2, 1}, 1));
  EXPECT_TRUE(is_z_asymmetric({2, 1}, 0));
  // The leg alpha - 1 must stay nonnegative.
  EXPECT_FALSE(is_z_asymmetric({1}, -1));
}

TEST(ZAsymmetric, SymplecticPartitionsOfSix) {
  std::vector<Partition> found;
  for (const auto& l : partitions_of(6))
    if (is_z_asymmetric(l, 1)) found.push_back(l);
  std::sort(found.begin(), found.end());
  EXPECT_EQ(found, (std::vector<Partition>{{2, 2, 2}, {3, 1, 1, 1}}));
}

TEST(ZAsymmetric, ZeroMeansSelfConjugate) {
  for (const auto& l : partitions_up_to(12)) {
    EXPECT_EQ(is_z_asymmetric(l, 0), conjugate(l) == l);
    // z and -z swap under conjugation.
    EXPECT_EQ(is_z_asymmetric(l, 1), is_z_asymmetric(conjugate(l), -1));
  }
}

TEST(Classify, Examples) {
  const auto a = classify_core({3, 2, 1, 1, 1}, 3, 2);
  EXPECT_EQ(a.core, Partition({1, 1}));
  EXPECT_TRUE(a.symplectic);
  EXPECT_EQ(a.rank, 1);

  const auto e = classify_core({}, 3, 2);
  EXPECT_TRUE(e.is_empty);
  EXPECT_EQ(e.rank, 0);
  EXPECT_EQ(e.single_row, 0);

  const auto b = classify_core({4, 2, 2, 1}, 2, 2);
  EXPECT_EQ(b.core, Partition({2, 1}));
  EXPECT_FALSE(b.is_empty);
  EXPECT_FALSE(b.symplectic);
  EXPECT_FALSE(b.orthogonal);
  EXPECT_TRUE(b.self_conjugate);
  EXPECT_FALSE(b.single_row.has_value());

  EXPECT_THROW(classify_core({1, 1, 1}, 2, 1), PartitionError);
}

TEST(Classify, ResiduePredicatesMatchTheExplicitCore) {
  for (int t = 2; t <= 5; ++t)
    for (const auto& l : partitions_up_to(12)) {
      const int n = std::max(1, (l.length() + t - 1) / t);
      for (int nn = n; nn <= n + 1; ++nn) {
        const auto cls = classify_core(l, t, nn);
        const Partition core = t_core_strips(l, t);
        EXPECT_EQ(cls.core, core);
        EXPECT_EQ(cls.rank, rank_by_diagonal(core));
        EXPECT_EQ(cls.is_empty, core.empty());
        EXPECT_EQ(cls.symplectic, is_z_asymmetric(core, 1)) << l.to_string() << " t=" << t;
        EXPECT_EQ(cls.orthogonal, is_z_asymmetric(core, -1)) << l.to_string() << " t=" << t;
        EXPECT_EQ(cls.self_conjugate, conjugate(core) == core);
      }
    }
}

TEST(Classify, SingleRowCores) {
  for (int t = 2; t <= 5; ++t)
    for (const auto& l : partitions_up_to(11)) {
      const int n = std::max(1, (l.length() - 1 + t - 1) / t);
      if (l.length() > t * n + 1) continue;
      const Partition core = t_core_strips(l, t);
      const auto c = single_row_core(l, t, n);
      if (core.length() <= 1) {
        ASSERT_TRUE(c.has_value()) << l.to_string();
        EXPECT_EQ(*c, core.part(1));
        EXPECT_LT(*c, t);
      } else {
        EXPECT_FALSE(c.has_value()) << l.to_string();
      }
    }
}

TEST(Classify, SymplecticCoresAreConjugateToOrthogonalCores) {
  for (int t = 2; t <= 5; ++t)
    for (const auto& l : partitions_up_to(12)) {
      if (!is_t_core(l, t)) continue;
      EXPECT_EQ(is_z_asymmetric(l, 1), is_z_asymmetric(conjugate(l), -1));
      EXPECT_TRUE(is_t_core(conjugate(l), t));
    }
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma_sign({}, 3, 2), -1);
  EXPECT_EQ(sigma_sign({}, 2, 1), -1);
  EXPECT_EQ(sigma_sign({3, 2, 1, 1, 1}, 3, 2), -1);
  EXPECT_EQ(sigma_c_sign({}, 2, 1, 0), -1);
  EXPECT_EQ(sigma_c_sign({1}, 2, 1, 1), 1);
  EXPECT_THROW(sigma_c_sign({}, 2, 1, 2), PartitionError);
  EXPECT_THROW(sigma_sign({1, 1, 1}, 2, 1), PartitionError);
}

TEST(Sigma, EmptyPartitionSign) {
  for (int t = 2; t <= 6; ++t)
    for (int n = 1; n <= 4; ++n) {
      const int e = (t * (t - 1) / 2) * (n * (n + 1) / 2);
      EXPECT_EQ(sigma_sign({}, t, n), e % 2 ? -1 : 1);
      EXPECT_EQ(sigma_c_sign({}, t, n, 0), e % 2 ? -1 : 1);
    }
}

TEST(Sigma, MatchesPairCountOfTheBlockSort) {
  for (int t = 2; t <= 4; ++t)
    for (const auto& l : partitions_up_to(9)) {
      const int n = std::max(1, (l.length() + t - 1) / t);
      const auto b = beta_set(l, t * n).entries;
      // Stable sort by residue, keeping the decreasing order inside a class.
      std::vector<int> idx(b.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::stable_sort(idx.begin(), idx.end(),
                       [&](int x, int y) { return b[x] % t < b[y] % t; });
      EXPECT_EQ(sigma_sign(l, t, n), sign_by_pairs(idx)) << l.to_string();
    }
}

TEST(Sigma, PermutationHelpers) {
  const std::vector<int> p{2, 4, 6, 3, 1, 5};
  EXPECT_EQ(permutation_inversions(p), 7);
  EXPECT_EQ(permutation_sign(p), -1);
  EXPECT_EQ(permutation_inversions(std::vector<int>{}), 0);
}

TEST(MuPadded, Examples) {
  EXPECT_EQ(mu_padded({1}, {}, 2), Partition({1}));
  EXPECT_TRUE(mu_padded({}, {}, 3).empty());
  EXPECT_EQ(mu_padded({2, 1}, {1}, 2), Partition({3, 2, 1}));
  EXPECT_THROW(mu_padded({1, 1}, {1}, 1), PartitionError);
}

TEST(MuPadded, EntrywiseDefinition) {
  for (const auto& front : partitions_up_to(5, 2))
    for (const auto& back : partitions_up_to(5, 2)) {
      const int n = 2;
      const Partition mu = mu_padded(front, back, n);
      const int b1 = back.part(1);
      for (int i = 1; i <= 2 * n; ++i) {
        const int expect = b1 + front.part(i) - back.part(2 * n + 1 - i);
        EXPECT_EQ(mu.part(i), expect);
      }
      EXPECT_EQ(mu.size(), 2 * n * b1 + front.size() - back.size());
    }
}

TEST(Enumeration, PartitionCounts) {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  int cumulative = 0;
  for (int m = 0; m <= 10; ++m) {
    EXPECT_EQ(static_cast<int>(partitions_of(m).size()), p[m]);
    cumulative += p[m];
  }
  EXPECT_EQ(static_cast<int>(partitions_up_to(10).size()), cumulative);
  for (const auto& l : partitions_up_to(10, 3)) EXPECT_LE(l.length(), 3);
  const auto all = partitions_up_to(8);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }));
}
