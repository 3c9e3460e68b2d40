#include <catch2/catch_amalgamated.hpp>

#include "qhopf/instances.hpp"
#include "qhopf/quasitriangular.hpp"

using namespace qhopf;

namespace {

std::string failing_ids(const Report& r) {
  std::string out;
  for (const auto& e : r.entries)
    if (!e.passed) out += e.id + " ";
  return out;
}

// The regular representation as a left module datum.
YDModule regular_module(const QuasiBialgebra& H, std::string name) {
  YDModule M;
  M.name = std::move(name);
  M.flavor = YDFlavor::Left;
  M.dim = H.dim;
  M.action = H.mult_named("h", "m", "o");
  return M;
}

}  // namespace

TEST_CASE("the kz2 R-matrix passes the quasitriangularity battery") {
  QuasiHopfAlgebra A = instances::group_z2();
  Report r = check_quasitriangular(A, instances::z2_r_matrix());
  INFO("failures: " << failing_ids(r));
  CHECK(r.ok());
}

TEST_CASE("every member of the sweedler R-matrix family passes") {
  QuasiHopfAlgebra A = instances::sweedler_h4();
  for (const Rational& lam :
       {Rational(0), Rational(1), Rational(1, 2), Rational(-2)}) {
    Report r = check_quasitriangular(A, instances::sweedler_r(lam));
    INFO("lambda = " << lam.str() << ": " << failing_ids(r));
    CHECK(r.ok());
  }
}

TEST_CASE("u collapses to the grouplike g across the whole family") {
  // For R in the family, S(R2 p2) alpha R1 p1 loses every nilpotent term and
  // only g survives, independently of the parameter.
  QuasiHopfAlgebra A = instances::sweedler_h4();
  Tensor g = basis_elem(4, 1, "u");
  for (const Rational& lam : {Rational(0), Rational(1), Rational(1, 2)}) {
    Tensor R = instances::sweedler_r(lam);
    CHECK(!derive_u(A, R).named({"u"}).diff(g));
    CHECK(!derive_u_inv(A, R).named({"u"}).diff(g));
  }
}

TEST_CASE("R = 1 (x) 1 is rejected on the sweedler algebra") {
  QuasiHopfAlgebra A = instances::sweedler_h4();
  Tensor triv = kron(A.b.unit_named("1"), A.b.unit_named("2"));
  Report r = check_quasitriangular(A, triv);
  CHECK(!r.ok());
  // the coproduct is not cocommutative, so the intertwining law breaks
  const CheckEntry* e = r.find("qt3");
  REQUIRE(e);
  CHECK(!e->passed);
  CHECK(e->witness.has_value());
  // and S^2 is conjugation by g, not the identity, so (sqina) breaks too
  const CheckEntry* s = r.find("sqina");
  REQUIRE(s);
  CHECK(!s->passed);
}

TEST_CASE("a single flipped coefficient is rejected") {
  QuasiHopfAlgebra A = instances::sweedler_h4();
  Tensor bad = instances::sweedler_r(Rational(1));
  bad.at({2, 2}) = -bad.at({2, 2});
  Report r = check_quasitriangular(A, bad);
  INFO("battery unexpectedly green");
  CHECK(!r.ok());
}

TEST_CASE("induced coactions satisfy the Yetter-Drinfeld axioms") {
  {
    QuasiHopfAlgebra A = instances::group_z2();
    YDModule M = regular_module(A.b, "kz2-reg");
    M.coaction = r_induced_coaction(A, instances::z2_r_matrix(), M.action);
    Report r = check_yd(A.b, M);
    INFO("kz2 failures: " << failing_ids(r));
    CHECK(r.ok());
  }
  {
    QuasiHopfAlgebra A = instances::sweedler_h4();
    YDModule M = regular_module(A.b, "h4-reg");
    M.coaction = r_induced_coaction(A, instances::sweedler_r(Rational(1)), M.action);
    Report r = check_yd(A.b, M);
    INFO("h4 failures: " << failing_ids(r));
    CHECK(r.ok());
  }
}

TEST_CASE("the trivial module induces the trivial coaction") {
  QuasiHopfAlgebra A = instances::sweedler_h4();
  YDModule T = trivial_yd(A.b);
  Tensor co = r_induced_coaction(A, instances::sweedler_r(Rational(1)), T.action);
  CHECK(!co.named({"m", "a", "o"}).diff(T.coaction));
}

TEST_CASE("inducing a coaction commutes with tensoring modules") {
  // The R-induced coaction on M (x) N agrees with the tensor coaction built
  // from the induced coactions on the factors.
  auto cross_check = [](const QuasiHopfAlgebra& A, const Tensor& R) {
    YDModule M = regular_module(A.b, "reg");
    M.coaction = r_induced_coaction(A, R, M.action);
    YDModule T = yd_tensor(A.b, M, M);
    Tensor direct = r_induced_coaction(A, R, T.action);
    CHECK(!direct.named({"m", "a", "o"}).diff(T.coaction));
    Report r = check_yd(A.b, T);
    CHECK(r.ok());
  };
  cross_check(instances::group_z2(), instances::z2_r_matrix());
  cross_check(instances::sweedler_h4(), instances::sweedler_r(Rational(1)));
}
