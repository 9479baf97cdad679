#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "brauer/elements.hpp"
#include "brauer/functor.hpp"
#include "brauer/identities.hpp"

using namespace brauer;

namespace {

using QM = Morphism<RationalField>;
using QF = Functor<RationalField>;

QF functor(Family f, int m) { return QF(group_spec(f, m), RationalField{}); }

}  // namespace

TEST(GroupSpec, Forms) {
  const auto o2 = group_spec(Family::Orthogonal, 2);
  EXPECT_EQ(o2.epsilon, 1);
  EXPECT_EQ(o2.name(), "O(2)");
  EXPECT_EQ(o2.d(), 2);
  const auto sp2 = group_spec(Family::Symplectic, 2);
  EXPECT_EQ(sp2.epsilon, -1);
  EXPECT_EQ(sp2.gram.at(0, 1), 1);
  EXPECT_EQ(sp2.gram.at(1, 0), -1);
  EXPECT_EQ(sp2.d(), 1);
  EXPECT_EQ(sp2.name(), "Sp(2)");
  EXPECT_THROW(group_spec(Family::Symplectic, 3), RangeError);
  EXPECT_THROW(group_spec(Family::Orthogonal, 0), RangeError);
  EXPECT_EQ(parse_family("sp"), Family::Symplectic);
  EXPECT_THROW(parse_family("gl"), ValidationError);
}

TEST(Functor, Generators) {
  const auto fn = functor(Family::Orthogonal, 2);
  const auto [id, x, a, u] = fn.generators();
  // c_0 = b1 (x) b1 + b2 (x) b2.
  EXPECT_EQ(u.at(0, 0), 1);
  EXPECT_EQ(u.at(3, 0), 1);
  EXPECT_EQ(u.at(1, 0), 0);
  EXPECT_EQ((a * u).at(0, 0), 2);
  EXPECT_EQ(x * x, ExactMatrix<RationalField>::identity(RationalField{}, 4));
  EXPECT_EQ(kron(a, id) * kron(id, u), id);

  const auto sp = functor(Family::Symplectic, 2);
  const auto g = sp.generators();
  EXPECT_EQ((g.a * g.u).at(0, 0), -2);
}

TEST(Functor, PauRelations) {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& c : verify_pau(functor(Family::Orthogonal, m))) EXPECT_TRUE(c.pass) << c.name;
    if (m % 2 == 0) {
      for (const auto& c : verify_pau(functor(Family::Symplectic, m))) EXPECT_TRUE(c.pass) << c.name;
    }
  }
}

TEST(Functor, MatrixExamples) {
  const auto o2 = functor(Family::Orthogonal, 2);
  EXPECT_EQ(o2.matrix(e_i(2, 1)).trace(), 2);
  EXPECT_EQ(functor(Family::Symplectic, 2).matrix(e_i(2, 1)).trace(), -2);
  EXPECT_EQ(functor(Family::Orthogonal, 3).matrix(s_i(2, 1)).trace(), 3);
  EXPECT_EQ(o2.matrix(identity(3)), ExactMatrix<RationalField>::identity(RationalField{}, 8));
  for (auto [f, m] : {std::pair{Family::Orthogonal, 2}, std::pair{Family::Orthogonal, 3},
                      std::pair{Family::Symplectic, 2}}) {
    const auto fn = functor(f, m);
    EXPECT_TRUE(fn.matrix(sigma(RationalField{}, fn.delta(), fn.eps(), m + 1)).is_zero()) << fn.spec().name();
    EXPECT_FALSE(fn.matrix(sigma(RationalField{}, fn.delta(), fn.eps(), m)).is_zero()) << fn.spec().name();
  }
  EXPECT_THROW(o2.matrix(QM::from_diagram(RationalField{}, 3, identity(1))), RingMismatchError);
}

TEST(Functor, LayeredMatchesDirect) {
  for (auto [f, m] : {std::pair{Family::Orthogonal, 2}, std::pair{Family::Orthogonal, 3},
                      std::pair{Family::Symplectic, 2}, std::pair{Family::Symplectic, 4}}) {
    const auto fn = functor(f, m);
    for (int n = 0; n <= 4; n += 2) {
      for (int k = 0; k <= n; ++k) {
        for (const auto& d : enumerate_diagrams(k, n - k)) {
          EXPECT_EQ(fn.image_direct(d), fn.image_layered(d)) << fn.spec().name() << " " << d.to_string();
        }
      }
    }
  }
}

TEST(Functor, RespectsCompositionAndTensor) {
  std::mt19937 rng(5);
  const auto fn = functor(Family::Symplectic, 2);
  const RationalField qq;
  for (int t = 0; t < 50; ++t) {
    const auto d1 = enumerate_diagrams(2, 4);
    const auto d2 = enumerate_diagrams(4, 2);
    const Diagram a = d1[std::uniform_int_distribution<std::size_t>(0, d1.size() - 1)(rng)];
    const Diagram b = d2[std::uniform_int_distribution<std::size_t>(0, d2.size() - 1)(rng)];
    EXPECT_EQ(fn.matrix(fn.unit(b) * fn.unit(a)), fn.matrix(b) * fn.matrix(a));
    EXPECT_EQ(fn.matrix(tensor(a, b)), kron(fn.matrix(a), fn.matrix(b)));
  }
}

TEST(Functor, Equivariance) {
  for (auto [f, m] : {std::pair{Family::Orthogonal, 3}, std::pair{Family::Symplectic, 4}}) {
    const auto fn = functor(f, m);
    const auto lie = lie_generators(fn.spec());
    EXPECT_EQ(lie.size(), static_cast<std::size_t>(f == Family::Orthogonal ? m * (m - 1) / 2 : m * (m + 1) / 2));
    for (const auto& d : enumerate_diagrams(2, 2)) {
      const auto mat = fn.matrix(d);
      for (const auto& y : lie) {
        const auto y2 = derived_action(y, 2);
        EXPECT_EQ(mat * y2, y2 * mat);
      }
    }
  }
}

TEST(Functor, TraceCheck) {
  for (auto [f, m] : {std::pair{Family::Orthogonal, 2}, std::pair{Family::Symplectic, 2}}) {
    const auto fn = functor(f, m);
    for (int r = 0; r <= 3; ++r) {
      for (const auto& d : enumerate_diagrams(r, r)) EXPECT_TRUE(trace_check(fn, d)) << d.to_string();
    }
  }
}

// Values below were computed by exact elimination and cross-checked against
// the commutant of the group action.
TEST(Functor, RanksAndKernels) {
  const auto sp2 = functor(Family::Symplectic, 2);
  const auto sp4 = functor(Family::Symplectic, 4);
  const auto o2 = functor(Family::Orthogonal, 2);
  const auto o3 = functor(Family::Orthogonal, 3);
  EXPECT_EQ(hom_rank(sp2, 2, 2), 2u);
  EXPECT_EQ(kernel_dimension(sp2, 2, 2), 1u);
  EXPECT_EQ(kernel_dimension(sp2, 3, 3), 10u);
  EXPECT_EQ(kernel_dimension(sp2, 4, 4, 2), 91u);
  EXPECT_EQ(hom_rank(o2, 2, 2), 3u);
  EXPECT_EQ(kernel_dimension(o2, 3, 3), 5u);
  EXPECT_EQ(kernel_dimension(o2, 4, 4), 70u);
  EXPECT_EQ(kernel_dimension(o3, 3, 3), 0u);
  EXPECT_EQ(kernel_dimension(o3, 4, 4), 14u);
  EXPECT_EQ(hom_rank(sp4, 2, 2), 3u);
  EXPECT_EQ(hom_rank(sp4, 3, 3), 14u);
  EXPECT_EQ(kernel_dimension(sp4, 3, 3), 1u);
  EXPECT_EQ(kernel_dimension(sp2, 4, 0), 1u);
  EXPECT_EQ(kernel_dimension(sp2, 3, 1), 1u);
  EXPECT_EQ(kernel_dimension(o2, 3, 1), 0u);

  const auto basis = kernel_basis(sp2, 2, 2);
  ASSERT_EQ(basis.size(), 1u);
  const auto& b = basis[0];
  EXPECT_EQ(b.size(), 3u);
  EXPECT_EQ(b, phi(1).scaled(b.coefficient(identity(2))));
}

TEST(Functor, CommutantDimensions) {
  const RationalField qq;
  EXPECT_EQ(commutant_dimension(2, group_spec(Family::Symplectic, 2), qq), 2u);
  EXPECT_EQ(commutant_dimension(2, group_spec(Family::Orthogonal, 2), qq), 3u);
  EXPECT_EQ(commutant_dimension(3, group_spec(Family::Orthogonal, 2), qq), 10u);
  EXPECT_EQ(commutant_dimension(3, group_spec(Family::Symplectic, 2), qq), 5u);
  for (int m = 1; m <= 4; ++m) {
    EXPECT_EQ(commutant_dimension(1, group_spec(Family::Orthogonal, m), qq), 1u);
    if (m % 2 == 0) EXPECT_EQ(commutant_dimension(1, group_spec(Family::Symplectic, m), qq), 1u);
  }
  // V (x) V (x) V = 3 V + 2 (16-dim) + (20-dim) for Sp(4).
  EXPECT_EQ(commutant_dimension(3, group_spec(Family::Symplectic, 4), qq), 14u);
}

TEST(Functor, IdealSpans) {
  const RationalField qq;
  EXPECT_EQ(ideal_span_dimension(2, phi(1)), 1u);
  EXPECT_EQ(ideal_span_dimension(3, phi(1)), 10u);
  EXPECT_EQ(ideal_span_dimension(3, phi(2)), 1u);
  EXPECT_EQ(ideal_span_dimension(3, e_p_rotation(qq, mpq_class(2), 2, 1)), 5u);
  EXPECT_EQ(ideal_span_dimension(4, e_p_rotation(qq, mpq_class(3), 3, 2)), 14u);
  EXPECT_EQ(ideal_span_dimension(3, reduce_mod_p(phi(1), 5)), 10u);
  EXPECT_THROW(ideal_span_dimension(1, phi(1)), ValencyError);
}

TEST(Functor, TensorIdealSlices) {
  const auto sp2 = functor(Family::Symplectic, 2);
  const auto o2 = functor(Family::Orthogonal, 2);
  for (auto [k, l] : {std::pair{4, 0}, std::pair{3, 1}, std::pair{2, 2}}) {
    EXPECT_EQ(tensor_ideal_span_dimension(sp2, k, l), 1u);
    EXPECT_EQ(tensor_ideal_span_dimension(o2, k, l), 0u);
  }
  EXPECT_EQ(tensor_ideal_span_dimension(o2, 3, 3), kernel_dimension(o2, 3, 3));
  EXPECT_EQ(tensor_ideal_middle_sizes(2, 2, 2), (std::vector<int>{4, 6}));
  EXPECT_EQ(tensor_ideal_middle_sizes(3, 1, 1), (std::vector<int>{3, 5}));
}

TEST(Functor, RaisingMatchesBending) {
  for (auto [f, m] : {std::pair{Family::Orthogonal, 2}, std::pair{Family::Symplectic, 2}}) {
    const auto fn = functor(f, m);
    const auto [id, x, a, u] = fn.generators();
    for (const auto& d : enumerate_diagrams(3, 1)) {
      // R(D) = (D (x) I) o (I^{k-1} (x) U) and L(D) = (I^{l-1} (x) A) o (D (x) I).
      const auto raised = kron(fn.matrix(d), id) * kron(kron(id, id), u);
      EXPECT_EQ(fn.matrix(raise(d)), raised);
      const auto lowered = kron(id, a) * kron(fn.matrix(raise(d)), id);
      EXPECT_EQ(fn.matrix(lower(raise(d))), lowered);
    }
  }
}

TEST(Functor, ResourceGuard) {
  const auto fn = functor(Family::Orthogonal, 3);
  setenv("BRAUER_MAX_CELLS", "100", 1);
  EXPECT_THROW(hom_rank(fn, 3, 3), ResourceError);
  unsetenv("BRAUER_MAX_CELLS");
  EXPECT_EQ(hom_rank(fn, 1, 1), 1u);
}
