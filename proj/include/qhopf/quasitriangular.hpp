#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qhopf/algebra.hpp"

namespace qhopf {

// u = S(R2 p2) alpha R1 p1, with p = p_R.
inline Tensor derive_u(const QuasiHopfAlgebra& A, const Tensor& R) {
  const QuasiBialgebra& H = A.b;
  const DerivedElements& d = A.derived();
  Tensor t = kron(R.named({"r1", "r2"}), d.p_r.named({"p1", "p2"}));
  t = mul_legs(H, t, "r2", "p2", "m1");
  t = A.S_leg(t, "m1", "s1");
  t = kron(t, A.alpha_named("al"));
  t = mul_legs(H, t, "s1", "al", "m2");
  t = mul_legs(H, t, "r1", "p1", "m3");
  t = mul_legs(H, t, "m2", "m3", "o");
  return t;
}

// u^{-1} = X1 R2 p2 S(S(X2 R1 p1) alpha X3).
inline Tensor derive_u_inv(const QuasiHopfAlgebra& A, const Tensor& R) {
  const QuasiBialgebra& H = A.b;
  const DerivedElements& d = A.derived();
  Tensor t = kron(kron(H.phi_named("X1", "X2", "X3"), R.named({"r1", "r2"})),
                  d.p_r.named({"p1", "p2"}));
  t = mul_legs(H, t, "r2", "p2", "mA");
  t = mul_legs(H, t, "X1", "mA", "mB");
  t = mul_legs(H, t, "r1", "p1", "mC");
  t = mul_legs(H, t, "X2", "mC", "mD");
  t = A.S_leg(t, "mD", "sD");
  t = kron(t, A.alpha_named("al"));
  t = mul_legs(H, t, "sD", "al", "mE");
  t = mul_legs(H, t, "mE", "X3", "mF");
  t = A.S_leg(t, "mF", "sF");
  t = mul_legs(H, t, "mB", "sF", "o");
  return t;
}

// Full quasitriangularity battery for a candidate R.
inline Report check_quasitriangular(const QuasiHopfAlgebra& A, const Tensor& R_in) {
  const QuasiBialgebra& H = A.b;
  Report rep{"quasitriangular"};
  Tensor R = R_in.named({"1", "2"});

  {  // (qt4)
    rep.eq("qt4a", "(qt4)", eps_leg(H, R, "1").named({"o"}), H.unit_named("o"));
    rep.eq("qt4b", "(qt4)", eps_leg(H, R, "2").named({"o"}), H.unit_named("o"));
  }
  auto Rinv = elem_inverse(H, R);
  rep.add("r-inv", "", Rinv.has_value(), std::nullopt,
          Rinv ? "" : "R has no two-sided inverse");

  if (!H.phi_inv) {
    rep.blocked("qt1", "(qt1)", "Phi is not invertible");
    return rep;
  }

  {  // (qt1): (Delta (x) id)(R) = Phi_312 R13 Phi^{-1}_132 R23 Phi
    Tensor lhs =
        delta_leg(H, R.named({"a", "b"}), "a", "a1", "a2").reordered({"a1", "a2", "b"});
    Tensor rhs = elem_prod(
        H, {slots_perm(H.phi, {2, 0, 1}).named({"1", "2", "3"}), embed(H, R, 3, {0, 2}),
            slots_perm(*H.phi_inv, {0, 2, 1}).named({"1", "2", "3"}), embed(H, R, 3, {1, 2}),
            H.phi_named("1", "2", "3")});
    rep.eq("qt1", "(qt1)", lhs.named({"1", "2", "3"}), rhs.named({"1", "2", "3"}));
  }
  {  // (qt2): (id (x) Delta)(R) = Phi^{-1}_231 R13 Phi_213 R12 Phi^{-1}
    Tensor lhs = delta_leg(H, R.named({"a", "b"}), "b", "b1", "b2");
    Tensor rhs = elem_prod(
        H, {slots_perm(*H.phi_inv, {1, 2, 0}).named({"1", "2", "3"}), embed(H, R, 3, {0, 2}),
            slots_perm(H.phi, {1, 0, 2}).named({"1", "2", "3"}), embed(H, R, 3, {0, 1}),
            H.phi_inv_named("1", "2", "3")});
    rep.eq("qt2", "(qt2)", lhs.named({"1", "2", "3"}), rhs.named({"1", "2", "3"}));
  }
  {  // (qt3): Delta^cop(h) R = R Delta(h)
    Tensor t = H.delta_map("h", "h1", "h2");
    t = kron(t, R.named({"r1", "r2"}));
    t = mul_legs(H, t, "h2", "r1", "o1");
    t = mul_legs(H, t, "h1", "r2", "o2");
    Tensor r = H.delta_map("h", "h1", "h2");
    r = kron(r, R.named({"r1", "r2"}));
    r = mul_legs(H, r, "r1", "h1", "o1");
    r = mul_legs(H, r, "r2", "h2", "o2");
    rep.eq("qt3", "(qt3)", t.reordered({"h", "o1", "o2"}), r.reordered({"h", "o1", "o2"}));
  }
  {  // quasi-Yang-Baxter for R as an element of H^(x)3
    Tensor lhs = elem_prod(
        H, {embed(H, R, 3, {0, 1}), slots_perm(H.phi, {2, 0, 1}).named({"1", "2", "3"}),
            embed(H, R, 3, {0, 2}), slots_perm(*H.phi_inv, {0, 2, 1}).named({"1", "2", "3"}),
            embed(H, R, 3, {1, 2}), H.phi_named("1", "2", "3")});
    Tensor rhs = elem_prod(
        H, {slots_perm(H.phi, {2, 1, 0}).named({"1", "2", "3"}), embed(H, R, 3, {1, 2}),
            slots_perm(*H.phi_inv, {1, 2, 0}).named({"1", "2", "3"}), embed(H, R, 3, {0, 2}),
            slots_perm(H.phi, {1, 0, 2}).named({"1", "2", "3"}), embed(H, R, 3, {0, 1})});
    rep.eq("qybe", "", lhs, rhs);
  }
  {  // the element u: invertibility, counit, S^2 as conjugation
    Tensor u = derive_u(A, R).named({"u"});
    Tensor ui = derive_u_inv(A, R).named({"u"});
    rep.eq("u-inv-l", "(inelmu)", elem_mul(H, u, ui), H.unit_named("u"));
    rep.eq("u-inv-r", "(inelmu)", elem_mul(H, ui, u), H.unit_named("u"));
    rep.eq("eps-u", "(sqina)", eps_leg(H, u, "u"), Tensor::scalar(Rational(1)));

    Tensor t = kron(H.id_map("h", "hc"), u.named({"uu"}));
    t = mul_legs(H, t, "uu", "hc", "m");
    t = kron(t, ui.named({"vv"}));
    t = mul_legs(H, t, "m", "vv", "o");
    Tensor s2 = apply_leg(A.S_map("h", "s"), "s", A.S, "o");
    rep.eq("sqina", "(sqina)", t.reordered({"h", "o"}), s2.reordered({"h", "o"}));
  }
  {  // (ext): f21 R f^{-1} = (S (x) S)(R)
    const DerivedElements& d = A.derived();
    Tensor f21 = slots_perm(d.f, {1, 0}).named({"1", "2"});
    Tensor lhs = elem_prod(H, {f21, R, d.f_inv.named({"1", "2"})});
    Tensor r = A.S_leg(R, "1", "o1");
    r = A.S_leg(r, "2", "o2");
    rep.eq("ext", "(ext)", lhs.named({"o1", "o2"}), r.reordered({"o1", "o2"}));
  }
  return rep;
}

// Left coaction on a left module induced by R: m maps to R2 (x) (R1 . m).
// act is indexed [h, m, m'].
inline Tensor r_induced_coaction(const QuasiHopfAlgebra& A, const Tensor& R, const Tensor& act) {
  const std::size_t dm = act.legs()[1].dim;
  std::vector<Leg> in = {Leg{"m", dm}};
  return build_map(in, [&](std::span<const std::size_t> idx) {
    Tensor e = basis_elem(dm, idx[0], "m");
    Tensor t = kron(R.named({"#r1", "a"}), e);
    const std::pair<std::size_t, std::size_t> pr[] = {{t.leg("#r1"), 0}, {t.leg("m"), 1}};
    Tensor r = Tensor::contract(t, act.named({"#h", "#m", "#o"}), pr);
    return r.renamed("#o", "mo").reordered({"a", "mo"});
  });
}

}  // namespace qhopf
