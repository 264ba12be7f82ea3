#include <doctest.h>

#include "fixtures.hpp"
#include "pmx/errors.hpp"
#include "pmx/polymat.hpp"
#include "support.hpp"

using namespace pmx;
using support::P;

TEST_CASE("column degrees, shifted and plain") {
  PolyMat au = fixtures::get(fixtures::kAu23);
  CHECK(au.cdeg() == std::vector<int>{5, 5, 4});

  PolyMat n = fixtures::get(fixtures::kN31);
  CHECK(n.cdeg_shifted({5, 5, 4}) == std::vector<int>{11});

  Fp f(7);
  PolyMat z(f, 2, 1);
  CHECK(z.cdeg() == std::vector<int>{kNegInfDeg});
  CHECK(z.cdeg_shifted({3, -2}) == std::vector<int>{kNegInfDeg});
}

TEST_CASE("shifted leading matrix") {
  PolyMat n = fixtures::get(fixtures::kN31);
  ConstMat lm = n.leading_matrix({5, 5, 4});
  CHECK(lm.at(0, 0) == 6);
  CHECK(lm.at(1, 0) == 0);
  CHECK(lm.at(2, 0) == 4);
  CHECK(cm_rank(lm) == 1);

  Fp f(7);
  PolyMat id = PolyMat::identity(f, 3);
  CHECK(id.leading_matrix({0, 0, 0}) == ConstMat::identity(f, 3));

  // lm_{-delta}(H) for the Hermite fixture is the identity.
  PolyMat h = fixtures::get(fixtures::kH3);
  CHECK(h.leading_matrix({0, -1, -9}) == ConstMat::identity(f, 3));

  // Unshifted leading matrix equals the zero-shift one.
  support::Rng rng(7);
  PolyMat a = support::random_pmat(rng, f, 3, 3, 4);
  CHECK(a.leading_matrix(Shift(3, 0)) == a.leading_matrix({0, 0, 0}));
}

TEST_CASE("matrix product against the paper block") {
  PolyMat a = fixtures::get(fixtures::kA3);
  PolyMat ad = a.bottom_rows(1);
  PolyMat n = fixtures::get(fixtures::kN31);
  PolyMat b2 = ad * n;
  CHECK(b2.rows() == 1);
  CHECK(b2.cols() == 1);
  CHECK(b2.at(0, 0) == P(a.field(), {0, 4, 3, 3, 4, 6, 4, 1, 2, 1}));

  CHECK(a * PolyMat::identity(a.field(), 3) == a);
  CHECK_THROWS_AS(a * fixtures::get(fixtures::kAu23), ShapeError);
}

TEST_CASE("matrix product against entry-wise convolution") {
  Fp f(7);
  support::Rng rng(42);
  for (int t = 0; t < 25; ++t) {
    PolyMat a = support::random_pmat(rng, f, 3, 3, 3);
    PolyMat b = support::random_pmat(rng, f, 3, 3, 3);
    PolyMat c = a * b;
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) {
        Poly acc(f);
        for (size_t k = 0; k < 3; ++k) acc = acc + a.at(i, k) * b.at(k, j);
        CHECK(c.at(i, j) == acc);
      }
  }
}

TEST_CASE("product degree bound under a dominating shift") {
  Fp f(7);
  support::Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    PolyMat a = support::random_pmat(rng, f, 3, 3, 3);
    PolyMat b = support::random_pmat(rng, f, 3, 3, 3);
    std::vector<int> cd = a.cdeg();
    Shift s(3);
    for (size_t j = 0; j < 3; ++j) s[j] = cd[j] == kNegInfDeg ? 0 : cd[j];
    std::vector<int> lhs = (a * b).cdeg();
    std::vector<int> rhs = b.cdeg_shifted(s);
    for (size_t j = 0; j < 3; ++j) CHECK(lhs[j] <= rhs[j]);
  }
}

TEST_CASE("matrix product associativity") {
  for (uint32_t p : {2u, 3u, 7u, 97u}) {
    Fp f(p);
    support::Rng rng(100 + p);
    for (int t = 0; t < 100; ++t) {
      PolyMat a = support::random_pmat(rng, f, 2, 3, 3);
      PolyMat b = support::random_pmat(rng, f, 3, 4, 3);
      PolyMat c = support::random_pmat(rng, f, 4, 2, 3);
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("constant term matrix") {
  PolyMat ur = fixtures::get(fixtures::kUr5);
  ConstMat u0 = ur.constant();
  ConstMat want(ur.field(), 5, 2);
  want.at(0, 0) = 3;
  want.at(3, 0) = 4;
  want.at(4, 1) = 1;
  CHECK(u0 == want);

  Fp f(7);
  support::Rng rng(5);
  PolyMat a = support::random_pmat(rng, f, 2, 2, 3);
  PolyMat xa(f, 2, 2);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) xa.at(i, j) = a.at(i, j).shifted(1);
  CHECK(xa.constant() == ConstMat(f, 2, 2));
  ConstMat c(f, 2, 2);
  c.at(0, 0) = 3;
  c.at(1, 1) = 5;
  PolyMat cp(f, 2, 2);
  cp.at(0, 0) = Poly::constant(f, 3);
  cp.at(1, 1) = Poly::constant(f, 5);
  CHECK(cp.constant() == c);
}

TEST_CASE("constant matrix determinant, rank, inverse") {
  Fp f(7);
  CHECK(cm_det(ConstMat::identity(f, 3)) == 1);

  Fp f97(97);
  support::Rng rng(9);
  std::uniform_int_distribution<uint32_t> coeff(0, 96);
  for (int t = 0; t < 50; ++t) {
    ConstMat m(f97, 4, 4);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) m.at(i, j) = coeff(rng);
    CHECK(cm_det(m) == support::leibniz_det(m));
  }

  // inv(M) * M = I on random nonsingular samples.
  int done = 0;
  while (done < 100) {
    ConstMat m(f97, 3, 3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) m.at(i, j) = coeff(rng);
    if (cm_det(m) == 0) continue;
    CHECK(cm_inv(m) * m == ConstMat::identity(f97, 3));
    ++done;
  }
  ConstMat sing(f97, 2, 2);
  sing.at(0, 0) = 1;
  sing.at(1, 0) = 1;
  CHECK_THROWS_AS(cm_inv(sing), SingularMatrixError);
  CHECK(cm_rank(sing) == 1);
}

TEST_CASE("nonsingular completion") {
  // Paper constants: the completion of Ur derived from Vu's echelon
  // transform is made of the first three unit columns.
  PolyMat ur = fixtures::get(fixtures::kUr5);
  PolyMat vu = fixtures::get(fixtures::kVu5);
  ConstMat ul = cm_completion(ur.constant(), vu.constant());
  Fp f(7);
  ConstMat want(f, 5, 3);
  want.at(0, 0) = 1;
  want.at(1, 1) = 1;
  want.at(2, 2) = 1;
  CHECK(ul == want);

  // Unit-column kernel: completion by the complementary unit columns.
  ConstMat ur2(f, 3, 1);
  ur2.at(2, 0) = 1;
  ConstMat vu2(f, 2, 3);
  vu2.at(0, 0) = 1;
  vu2.at(1, 1) = 1;
  ConstMat ul2 = cm_completion(ur2, vu2);
  CHECK(ul2.at(0, 0) == 1);
  CHECK(ul2.at(1, 1) == 1);
  CHECK(cm_det(ul2.hcat(ur2)) != 0);

  // Self-verifying property on random full-rank inputs.
  support::Rng rng(11);
  std::uniform_int_distribution<uint32_t> coeff(0, 6);
  int done = 0;
  while (done < 50) {
    ConstMat r(f, 4, 2);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 2; ++j) r.at(i, j) = coeff(rng);
    if (cm_rank(r) < 2) continue;
    ConstMat v(f, 2, 4);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 4; ++j) v.at(i, j) = coeff(rng);
    ConstMat c = cm_completion(r, v);
    CHECK(cm_det(c.hcat(r)) != 0);
    ++done;
  }

  ConstMat deficient(f, 3, 2);
  deficient.at(0, 0) = 1;
  deficient.at(0, 1) = 2;
  CHECK_THROWS_AS(cm_completion(deficient, ConstMat(f, 1, 3)),
                  StructuralError);
}
