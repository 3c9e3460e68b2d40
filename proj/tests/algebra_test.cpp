#include <catch2/catch_amalgamated.hpp>

#include "qhopf/derived.hpp"
#include "qhopf/instances.hpp"

using namespace qhopf;

namespace {

std::string failing_ids(const Report& r) {
  std::string out;
  for (const auto& e : r.entries)
    if (!e.passed) out += e.id + " ";
  return out;
}

std::vector<QuasiHopfAlgebra> shipped() {
  return {instances::field_algebra(), instances::group_z2(), instances::h2(),
          instances::sweedler_h4()};
}

}  // namespace

TEST_CASE("axiom batteries pass on the shipped algebras") {
  for (const auto& A : shipped()) {
    Report bi = check_quasi_bialgebra(A.b);
    INFO(A.name << " qbi failures: " << failing_ids(bi));
    CHECK(bi.ok());
    Report qh = check_quasi_hopf(A);
    INFO(A.name << " qhopf failures: " << failing_ids(qh));
    CHECK(qh.ok());
  }
}

TEST_CASE("single-entry reassociator mutations are rejected") {
  const QuasiHopfAlgebra base = instances::h2();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        QuasiHopfAlgebra mut = base;
        mut.b.phi.at({i, j, k}) += Rational(1);
        finalize(mut);
        Report bi = check_quasi_bialgebra(mut.b);
        INFO("mutation at (" << i << "," << j << "," << k << ") slipped through");
        CHECK(!bi.ok());
      }
}

TEST_CASE("derived elements collapse for trivial reassociators") {
  for (const auto& A : {instances::group_z2(), instances::sweedler_h4()}) {
    const auto& d = A.derived();
    Tensor one2 = kron(A.b.unit_named("1"), A.b.unit_named("2"));
    CHECK(!d.f.named({"1", "2"}).diff(one2));
    CHECK(!d.f_inv.named({"1", "2"}).diff(one2));
    CHECK(!d.p_r.named({"1", "2"}).diff(one2));
    CHECK(!d.q_r.named({"1", "2"}).diff(one2));
    CHECK(!d.p_l.named({"1", "2"}).diff(one2));
    CHECK(!d.q_l.named({"1", "2"}).diff(one2));
  }
}

TEST_CASE("twist, pq and lemma batteries pass on the shipped algebras") {
  for (const auto& A : shipped()) {
    Report tw = derive_twist(A);
    INFO(A.name << " twist failures: " << failing_ids(tw));
    CHECK(tw.ok());
    Report pq = derive_pq(A);
    INFO(A.name << " pq failures: " << failing_ids(pq));
    CHECK(pq.ok());
    Report lm = lemma_pq_twist(A);
    INFO(A.name << " lemma failures: " << failing_ids(lm));
    CHECK(lm.ok());
  }
}

TEST_CASE("op, cop and opcop variants satisfy the axioms") {
  for (const auto& A : {instances::h2(), instances::sweedler_h4()}) {
    for (const auto& V : {op_variant(A), cop_variant(A), opcop_variant(A)}) {
      Report bi = check_quasi_bialgebra(V.b);
      INFO(V.name << " qbi failures: " << failing_ids(bi));
      CHECK(bi.ok());
      Report qh = check_quasi_hopf(V);
      INFO(V.name << " qhopf failures: " << failing_ids(qh));
      CHECK(qh.ok());
    }
  }
}

TEST_CASE("gauge twisting kz2 by its triangular structure") {
  QuasiHopfAlgebra A = instances::group_z2();
  QuasiHopfAlgebra T = twist_algebra(A, instances::z2_r_matrix());
  Report bi = check_quasi_bialgebra(T.b);
  INFO("twisted qbi failures: " << failing_ids(bi));
  CHECK(bi.ok());
  Report qh = check_quasi_hopf(T);
  INFO("twisted qhopf failures: " << failing_ids(qh));
  CHECK(qh.ok());

  Tensor g{{Leg{"a", 2}}, {Rational(0), Rational(1)}};
  CHECK(!T.alpha.named({"a"}).diff(g));
  CHECK(!T.beta.named({"a"}).diff(g));
  Tensor one3 = kron(kron(A.b.unit_named("a"), A.b.unit_named("b")), A.b.unit_named("c"));
  CHECK(!T.b.phi.named({"a", "b", "c"}).diff(one3));

  // a non-invertible candidate is refused
  Tensor bad{{Leg{"1", 2}, Leg{"2", 2}}};
  bad.at({0, 0}) = Rational(1);
  bad.at({0, 1}) = Rational(1);
  CHECK_THROWS(twist_algebra(A, bad));
}

TEST_CASE("element inversion") {
  QuasiHopfAlgebra A = instances::h2();
  // the h2 reassociator is its own inverse
  CHECK(!A.b.phi_inv->named({"1", "2", "3"}).diff(A.b.phi.named({"1", "2", "3"})));
  auto inv = elem_inverse(A.b, instances::z2_r_matrix().named({"1", "2"}));
  REQUIRE(inv.has_value());
  CHECK(!elem_mul(A.b, *inv, instances::z2_r_matrix().named({"1", "2"}))
             .diff(kron(A.b.unit_named("1"), A.b.unit_named("2"))));
  // (1 + g) (x) 1 is a zero divisor
  Tensor bad{{Leg{"1", 2}, Leg{"2", 2}}};
  bad.at({0, 0}) = Rational(1);
  bad.at({1, 0}) = Rational(1);
  CHECK(!elem_inverse(A.b, bad).has_value());
}
