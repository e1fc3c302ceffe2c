#include <gtest/gtest.h>

#include "hypersmooth/fields.hpp"
#include "hypersmooth/matrix.hpp"
#include "hypersmooth/random.hpp"
#include "hypersmooth/rational.hpp"
#include "test_support.hpp"

using namespace hypersmooth;
using Mat = FieldMatrix<GaloisField>;

namespace {

Mat random_matrix(const GaloisField& k, std::size_t r, std::size_t c, Rng& rng) {
  Mat m(k, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_element(k, rng);
  return m;
}

}  // namespace

TEST(Matrix, KernelExample) {
  const auto f2 = GaloisField::prime(2);
  const Mat m(f2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
  EXPECT_EQ(matrix_kernel(m), (std::vector<std::vector<GaloisField::Element>>{{0, 0, 1}}));
}

TEST(Matrix, DeterminantExamples) {
  const auto f4 = GaloisField::canonical(2, 2);
  // Moore matrix of alpha = u (encoded 2); u^2 = u + 1 (encoded 3)
  const Mat moore(f4, {{2, 3}, {3, 2}});
  EXPECT_EQ(matrix_det(moore), 1u);
  const Mat swap(GaloisField::prime(2), {{0, 1}, {1, 0}});
  EXPECT_EQ(matrix_det(swap), 1u);
  EXPECT_EQ(Mat::identity(f4, 4).det(), 1u);
  EXPECT_THROW(Mat(f4, 2, 3).det(), Error);
}

TEST(Matrix, DeterminantMatchesLeibnizExpansion) {
  Rng rng(1);
  for (const auto& k : {GaloisField::prime(5), GaloisField::canonical(2, 2), GaloisField::canonical(3, 2)}) {
    for (std::size_t n = 1; n <= 5; ++n)
      for (int t = 0; t < 20; ++t) {
        const auto m = random_matrix(k, n, n, rng);
        EXPECT_EQ(m.det(), oracle::leibniz_det(m));
      }
  }
}

TEST(Matrix, DeterminantIsMultiplicative) {
  Rng rng(2);
  const auto k = GaloisField::canonical(3, 2);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_matrix(k, 3, 3, rng), b = random_matrix(k, 3, 3, rng);
    EXPECT_EQ((a * b).det(), k.mul(a.det(), b.det()));
  }
}

TEST(Matrix, OddSymmetricZeroDiagonalInChar2IsSingular) {
  Rng rng(3);
  int samples = 0;
  for (unsigned e : {1u, 2u, 3u}) {
    const auto k = GaloisField::canonical(2, e);
    for (std::size_t m : {1u, 3u, 5u, 7u})
      for (int t = 0; t < 30; ++t, ++samples) {
        Mat s(k, m, m);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = i + 1; j < m; ++j) s(i, j) = s(j, i) = random_element(k, rng);
        EXPECT_EQ(s.det(), 0u);
      }
  }
  EXPECT_GE(samples, 100);
  // even size can be nonsingular
  const Mat two(GaloisField::prime(2), {{0, 1}, {1, 0}});
  EXPECT_EQ(two.det(), 1u);
}

TEST(Matrix, KernelVectorsAreAnnihilatedAndSpanNullity) {
  Rng rng(4);
  const auto k = GaloisField::canonical(2, 2);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = 1 + uniform_below(rng, 4), c = 1 + uniform_below(rng, 5);
    auto m = random_matrix(k, r, c, rng);
    if (t % 3 == 0)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j);  // force a repeated row
    const auto ker = m.kernel();
    EXPECT_EQ(ker.size(), c - m.rank());
    for (const auto& v : ker) {
      for (auto x : m.apply(v)) EXPECT_EQ(x, 0u);
    }
    Mat basis(k, ker.size(), c);
    for (std::size_t i = 0; i < ker.size(); ++i)
      for (std::size_t j = 0; j < c; ++j) basis(i, j) = ker[i][j];
    EXPECT_EQ(basis.rank(), ker.size());
  }
}

TEST(Matrix, SolveAndNoSolution) {
  Rng rng(5);
  const auto k = GaloisField::prime(7);
  for (int t = 0; t < 50; ++t) {
    const auto m = random_matrix(k, 3, 4, rng);
    std::vector<GaloisField::Element> x0(4);
    for (auto& x : x0) x = random_element(k, rng);
    const auto b = m.apply(x0);
    EXPECT_EQ(m.apply(matrix_solve(m, b)), b);
  }
  const Mat singular(k, {{1, 2}, {2, 4}});
  try {
    (void)singular.solve({1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSolution);
  }
}

TEST(Matrix, InverseRoundTrip) {
  Rng rng(6);
  const auto k = GaloisField::canonical(2, 3);
  int inverted = 0;
  for (int t = 0; t < 40; ++t) {
    const auto m = random_matrix(k, 4, 4, rng);
    if (m.det() == 0) {
      EXPECT_THROW(m.inverse(), Error);
      continue;
    }
    EXPECT_EQ(m * m.inverse(), Mat::identity(k, 4));
    ++inverted;
  }
  EXPECT_GT(inverted, 20);
}

TEST(Matrix, RationalDeterminant) {
  const RationalField q;
  const FieldMatrix<RationalField> m(q, {{Rational(1, 2), Rational(3)}, {Rational(-1), Rational(2, 3)}});
  EXPECT_EQ(m.det(), Rational(1, 3) + Rational(3));
  EXPECT_EQ(m.det(), oracle::leibniz_det(m));
}
