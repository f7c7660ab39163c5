#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "fantor/exact_linalg.hpp"

using namespace fantor;

namespace {

// Cofactor expansion; only used on tiny matrices.
Integer cofactor_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Integer term = m[0][j] * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
             std::vector<std::size_t> cur = {}, std::size_t start = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

// gcd of all k×k minors
Integer determinantal_divisor(const IntMatrix& a, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  subsets(a.rows(), k, rs);
  subsets(a.cols(), k, cs);
  Integer g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      std::vector<std::vector<Integer>> m;
      for (auto i : r) {
        std::vector<Integer> row;
        for (auto j : c) row.push_back(a(i, j));
        m.push_back(row);
      }
      g = gcd(g, cofactor_det(m));
    }
  return g;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST(SmithNormalForm, Identity) {
  auto s = smith_normal_form(IntMatrix::identity(2));
  EXPECT_EQ(s.diagonal(), (IntVector{1, 1}));
}

TEST(SmithNormalForm, TwoByTwo) {
  auto s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  EXPECT_EQ(s.diagonal(), (IntVector{2, 4}));
}

TEST(SmithNormalForm, ZeroMatrix) {
  auto s = smith_normal_form(IntMatrix(2, 3));
  EXPECT_TRUE(s.d.is_zero());
  EXPECT_EQ(s.rank(), 0u);
}

TEST(SmithNormalForm, RandomAgainstDeterminantalDivisors) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> dim(1, 4);
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix a = random_matrix(rng, r, c, -6, 6);
    auto s = smith_normal_form(a);

    // transforms are unimodular and D = U A V
    EXPECT_EQ(s.u * a * s.v, s.d);
    EXPECT_EQ(abs_value(determinant(s.u)), 1);
    EXPECT_EQ(abs_value(determinant(s.v)), 1);
    EXPECT_EQ(s.u * s.u_inverse, IntMatrix::identity(r));
    EXPECT_EQ(s.v * s.v_inverse, IntMatrix::identity(c));

    // diagonal, divisibility chain, nonnegative
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) EXPECT_EQ(s.d(i, j), 0);
    auto diag = s.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      EXPECT_GE(diag[i], 0);
      if (diag[i] != 0) {
        EXPECT_EQ(diag[i + 1] % diag[i], 0);
      } else {
        EXPECT_EQ(diag[i + 1], 0);
      }
    }

    // d_1 ⋯ d_k = gcd of k×k minors
    Integer prod = 1;
    for (std::size_t k = 1; k <= diag.size(); ++k) {
      prod *= diag[k - 1];
      EXPECT_EQ(prod, determinantal_divisor(a, k)) << "k=" << k << " trial " << trial;
    }
    EXPECT_EQ(rank(a), s.rank());
  }
}

TEST(SmithNormalForm, LargeEntriesStayExact) {
  Integer big("123456789012345678901234567890");
  IntMatrix a(2, 2);
  a(0, 0) = big;
  a(0, 1) = big * 2;
  a(1, 0) = big * 3;
  a(1, 1) = big * 4 + 1;
  auto s = smith_normal_form(a);
  EXPECT_EQ(s.d(0, 0), determinantal_divisor(a, 1));
  EXPECT_EQ(s.d(0, 0) * s.d(1, 1), abs_value(cofactor_det({{a(0, 0), a(0, 1)}, {a(1, 0), a(1, 1)}})));
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + t % 5;
    IntMatrix a = random_matrix(rng, n, n, -5, 5);
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    EXPECT_EQ(determinant(a), cofactor_det(m));
  }
}

TEST(HermiteNormalForm, TransformIsUnimodular) {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    IntMatrix a = random_matrix(rng, 3, 4, -4, 4);
    auto h = hermite_normal_form(a);
    EXPECT_EQ(h.u * a, h.h);
    EXPECT_EQ(abs_value(determinant(h.u)), 1);
    // echelon: pivots strictly increase and are positive
    for (std::size_t i = 0; i < h.pivot_columns.size(); ++i) {
      EXPECT_GT(h.h(i, h.pivot_columns[i]), 0);
      if (i > 0) EXPECT_GT(h.pivot_columns[i], h.pivot_columns[i - 1]);
    }
  }
}

TEST(KernelBasis, AnnihilatesAndHasRightRank) {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    IntMatrix a = random_matrix(rng, 2, 4, -3, 3);
    IntMatrix k = kernel_basis(a);
    EXPECT_TRUE((a * k).is_zero());
    EXPECT_EQ(k.cols(), 4 - rank(a));
    // saturated: the cokernel of the kernel inclusion is torsion free
    EXPECT_TRUE(AbelianGroupInv::cokernel(k).is_free());
  }
}

TEST(HomologyAt, Examples) {
  EXPECT_EQ(homology_at(IntMatrix(1, 1), IntMatrix{{2}}).to_string(), "Z/2");
  EXPECT_TRUE(homology_at(IntMatrix::identity(2), IntMatrix(2, 1)).is_zero());
  EXPECT_EQ(homology_at(IntMatrix(1, 2), IntMatrix(2, 1)).to_string(), "Z^2");
}

TEST(HomologyAt, Errors) {
  try {
    homology_at(IntMatrix{{1}}, IntMatrix{{1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CompositionNonzero);
  }
  try {
    homology_at(IntMatrix(1, 2), IntMatrix(3, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
}

TEST(HomologyAt, ExactSequenceIsZero) {
  // 0 → Z → Z² → Z → 0 with x ↦ (x, x), (a, b) ↦ a − b
  IntMatrix in{{1}, {1}};
  IntMatrix out{{1, -1}};
  EXPECT_TRUE(homology_at(out, in).is_zero());
  EXPECT_TRUE(homology_at(IntMatrix(0, 1), out).is_zero());
}

TEST(AbelianGroup, CanonicalRendering) {
  EXPECT_EQ(AbelianGroupInv::zero().to_string(), "0");
  EXPECT_EQ(AbelianGroupInv::free(1).to_string(), "Z");
  EXPECT_EQ(AbelianGroupInv::from_cyclic_orders({2, 0, 6, 0, 1}).to_string(), "Z^2 + Z/2 + Z/6");
  EXPECT_EQ(AbelianGroupInv::from_cyclic_orders({4, 6}).to_string(), "Z/2 + Z/12");
  EXPECT_EQ(AbelianGroupInv::cyclic(1).to_string(), "0");
}

TEST(AbelianGroup, ParseRoundTrip) {
  for (const char* s : {"0", "Z", "Z^3", "Z/2", "Z^2 + Z/2 + Z/6", "Z/3 + Z/9"})
    EXPECT_EQ(AbelianGroupInv::parse(s).to_string(), s);
  EXPECT_EQ(AbelianGroupInv::parse("Z/2 + Z/3").to_string(), "Z/6");
  EXPECT_THROW(AbelianGroupInv::parse("Q"), Error);
}

TEST(AbelianGroup, CokernelMatchesSmith) {
  EXPECT_EQ(AbelianGroupInv::cokernel(IntMatrix{{2, 4}, {6, 8}}).to_string(), "Z/2 + Z/4");
  EXPECT_EQ(AbelianGroupInv::cokernel(IntMatrix(3, 0)).to_string(), "Z^3");
}

TEST(TensorTor, Examples) {
  auto [t, tor] = tensor_and_tor1(AbelianGroupInv::cyclic(4), AbelianGroupInv::cyclic(6));
  EXPECT_EQ(t.to_string(), "Z/2");
  EXPECT_EQ(tor.to_string(), "Z/2");
  auto [t2, tor2] = tensor_and_tor1(AbelianGroupInv::free(2), AbelianGroupInv::cyclic(3));
  EXPECT_EQ(t2.to_string(), "Z/3 + Z/3");
  EXPECT_TRUE(tor2.is_zero());
  auto [t3, tor3] = tensor_and_tor1(AbelianGroupInv::zero(), AbelianGroupInv::parse("Z^2 + Z/5"));
  EXPECT_TRUE(t3.is_zero());
  EXPECT_TRUE(tor3.is_zero());
}

TEST(TensorTor, SymmetricAndBilinearOnCyclics) {
  std::vector<AbelianGroupInv> gs;
  for (const char* s : {"0", "Z", "Z^2", "Z/2", "Z/4", "Z/6", "Z + Z/3", "Z/2 + Z/12"})
    gs.push_back(AbelianGroupInv::parse(s));
  for (const auto& g : gs)
    for (const auto& h : gs) {
      auto a = tensor_and_tor1(g, h);
      auto b = tensor_and_tor1(h, g);
      EXPECT_EQ(a.first, b.first);
      EXPECT_EQ(a.second, b.second);
      // order of Z/m ⊗ Z/n is gcd(m, n), computed independently
      if (g.free_rank == 0 && h.free_rank == 0) {
        Integer expected = 1;
        for (const auto& x : g.torsion)
          for (const auto& y : h.torsion) expected *= gcd(x, y);
        Integer order = 1;
        for (const auto& x : a.first.torsion) order *= x;
        EXPECT_EQ(order, expected);
        Integer tor_order = 1;
        for (const auto& x : a.second.torsion) tor_order *= x;
        EXPECT_EQ(tor_order, expected);
      }
    }
}

TEST(Subquotient, Basic) {
  // 2Z² inside Z²
  IntMatrix lattice = IntMatrix::identity(2);
  IntMatrix sub{{2, 0}, {0, 2}};
  EXPECT_EQ(subquotient(lattice, sub).to_string(), "Z/2 + Z/2");
}

TEST(LatticeCoordinates, RecoverCombination) {
  IntMatrix basis{{1, 0}, {1, 1}, {0, 1}};
  IntMatrix coeffs{{3}, {-2}};
  IntMatrix targets = basis * coeffs;
  EXPECT_EQ(lattice_coordinates(basis, targets), coeffs);
}
