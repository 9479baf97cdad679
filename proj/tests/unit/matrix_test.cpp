#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "brauer/matrix.hpp"
#include "brauer/rings.hpp"

using namespace brauer;

namespace {

using QMat = ExactMatrix<RationalField>;

QMat from_rows(const std::vector<std::vector<int>>& rows) {
  QMat m(RationalField{}, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

TEST(Matrix, Rank) {
  EXPECT_EQ(from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}).rank(), 2u);
  EXPECT_EQ(QMat::identity(RationalField{}, 5).rank(), 5u);
  EXPECT_EQ(QMat(RationalField{}, 3, 4).rank(), 0u);
  // Singular over GF(5) but not over QQ.
  ExactMatrix<PrimeField> m(PrimeField(5), 2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 3;
  m.at(1, 1) = 1;
  EXPECT_EQ(m.rank(), 1u);
  EXPECT_EQ(from_rows({{1, 2}, {3, 1}}).rank(), 2u);
}

TEST(Matrix, EchelonDependencies) {
  const RationalField qq;
  EchelonBasis<RationalField> basis(qq);
  using V = SparseVec<RationalField>;
  EXPECT_TRUE(basis.insert(V{{0, 1}, {2, 1}}, V{{0, 1}}));
  EXPECT_TRUE(basis.insert(V{{1, 1}, {2, -1}}, V{{1, 1}}));
  V dep;
  EXPECT_FALSE(basis.insert(V{{0, 2}, {1, 3}, {2, -1}}, V{{2, 1}}, &dep));
  // v2 = 2 v0 + 3 v1, so the reduced tag is e2 - 2 e0 - 3 e1.
  EXPECT_EQ(dep, (V{{0, -2}, {1, -3}, {2, 1}}));
  EXPECT_TRUE(basis.contains(V{{0, 1}, {1, 1}}));
  EXPECT_FALSE(basis.contains(V{{2, 1}}));
  EXPECT_EQ(basis.rank(), 2u);
}

TEST(Matrix, Nullspace) {
  const QMat a = from_rows({{1, 2, 3}, {2, 4, 6}});
  const auto null = nullspace_basis(a);
  ASSERT_EQ(null.size(), 2u);
  for (const auto& v : null) {
    QMat col(RationalField{}, 3, 1);
    for (std::size_t i = 0; i < 3; ++i) col.at(i, 0) = v[i];
    EXPECT_TRUE((a * col).is_zero());
  }
}

TEST(Matrix, ProductsAndKron) {
  const QMat a = from_rows({{1, 2}, {3, 4}});
  const QMat b = from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, from_rows({{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), from_rows({{1, 3}, {2, 4}}));
  EXPECT_EQ(a.trace(), 5);
  const QMat k = kron(a, b);
  EXPECT_EQ(k.rows(), 4u);
  EXPECT_EQ(k.at(0, 1), 1);
  EXPECT_EQ(k.at(2, 3), 4);
  EXPECT_EQ(k.at(2, 1), 3);
  EXPECT_EQ(kron(a, b) * kron(b, a), kron(a * b, b * a));
  EXPECT_THROW(a * QMat(RationalField{}, 3, 1), ValencyError);
  EXPECT_THROW(QMat(RationalField{}, 2, 3).trace(), ValencyError);
}

TEST(Matrix, Json) {
  QMat a = from_rows({{0, 2}, {0, 0}});
  a.at(1, 0) = mpq_class(-1, 3);
  const auto j = matrix_to_json(a);
  EXPECT_EQ(j.dump(), R"({"cols":2,"entries":[[0,1,"2"],[1,0,"-1/3"]],"rows":2})");
  EXPECT_EQ(matrix_from_json(j, RationalField{}), a);
  EXPECT_THROW(matrix_from_json(nlohmann::json::parse(R"({"rows":1,"cols":1,"entries":[[1,0,"1"]]})"), RationalField{}),
               ValidationError);
}
