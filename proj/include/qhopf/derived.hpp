#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "qhopf/algebra.hpp"

namespace qhopf {

// Checks for the Drinfeld twist f and its companions gamma, delta.
inline Report derive_twist(const QuasiHopfAlgebra& A) {
  const QuasiBialgebra& H = A.b;
  Report rep{"twist"};
  if (!H.phi_inv) {
    rep.blocked("f-inv-l", "(f)", "Phi is not invertible");
    return rep;
  }
  const DerivedElements& d = A.derived();
  Tensor one2 = kron(H.unit_named("f1"), H.unit_named("f2"));

  rep.eq("f-inv-l", "(g)", elem_mul(H, d.f, d.f_inv), one2);
  rep.eq("f-inv-r", "(g)", elem_mul(H, d.f_inv, d.f), one2);

  {  // (ca): f Delta(S(h)) f^{-1} = (S (x) S)(Delta^cop(h))
    Tensor t = delta_leg(H, A.S_map("h", "sh"), "sh", "a", "b");
    t = kron(t, d.f.named({"F1", "F2"}));
    t = mul_legs(H, t, "F1", "a", "m1");
    t = mul_legs(H, t, "F2", "b", "m2");
    t = kron(t, d.f_inv.named({"G1", "G2"}));
    t = mul_legs(H, t, "m1", "G1", "o1");
    t = mul_legs(H, t, "m2", "G2", "o2");
    Tensor r = H.delta_map("h", "h1", "h2");
    r = A.S_leg(r, "h2", "o1");
    r = A.S_leg(r, "h1", "o2");
    rep.eq("ca", "(ca)", t.reordered({"h", "o1", "o2"}), r.reordered({"h", "o1", "o2"}));
  }
  {  // (gdf): f Delta(alpha) = gamma and Delta(beta) f^{-1} = delta
    Tensor t = delta_leg(H, A.alpha_named("al"), "al", "a1", "a2");
    t = kron(t, d.f.named({"F1", "F2"}));
    t = mul_legs(H, t, "F1", "a1", "o1");
    t = mul_legs(H, t, "F2", "a2", "o2");
    rep.eq("gdf-gamma", "(gdf)", t.reordered({"o1", "o2"}), d.gamma.named({"o1", "o2"}));

    Tensor u = delta_leg(H, A.beta_named("be"), "be", "b1", "b2");
    u = kron(u, d.f_inv.named({"G1", "G2"}));
    u = mul_legs(H, u, "b1", "G1", "o1");
    u = mul_legs(H, u, "b2", "G2", "o2");
    rep.eq("gdf-delta", "(gdf)", u.reordered({"o1", "o2"}), d.delta.named({"o1", "o2"}));
  }
  {  // (pf): the reassociator twisted by f is (S (x) S (x) S)(X3 (x) X2 (x) X1)
    Tensor e1 = kron(H.unit_named("1"), d.f.named({"2", "3"}));
    Tensor e2 = delta_leg(H, d.f.named({"a", "b"}), "b", "b1", "b2").reordered({"a", "b1", "b2"});
    Tensor e3 = H.phi_named("1", "2", "3");
    Tensor e4 =
        delta_leg(H, d.f_inv.named({"a", "b"}), "a", "a1", "a2").reordered({"a1", "a2", "b"});
    Tensor e5 = kron(d.f_inv.named({"1", "2"}), H.unit_named("3"));
    Tensor lhs = elem_prod(H, {e1, e2, e3, e4, e5}).named({"1", "2", "3"});
    Tensor r = slots_perm(H.phi, {2, 1, 0}).named({"a", "b", "c"});
    r = A.S_leg(r, "a", "o1");
    r = A.S_leg(r, "b", "o2");
    r = A.S_leg(r, "c", "o3");
    rep.eq("pf", "(pf)", lhs, r.reordered({"o1", "o2", "o3"}).named({"1", "2", "3"}));
  }
  return rep;
}

// Checks for the p/q elements.
inline Report derive_pq(const QuasiHopfAlgebra& A) {
  const QuasiBialgebra& H = A.b;
  Report rep{"pq"};
  if (!H.phi_inv) {
    rep.blocked("qr1", "(qr1)", "Phi is not invertible");
    return rep;
  }
  const DerivedElements& d = A.derived();

  {  // (qr1): Delta(h_1) p_R [1 (x) S(h_2)] = p_R (h (x) 1)
    Tensor t = delta_leg(H, H.delta_map("h", "h1", "h2"), "h1", "a", "b");
    t = kron(t, d.p_r.named({"p1", "p2"}));
    t = mul_legs(H, t, "a", "p1", "o1");
    t = mul_legs(H, t, "b", "p2", "m");
    t = A.S_leg(t, "h2", "s2");
    t = mul_legs(H, t, "m", "s2", "o2");
    Tensor r = kron(H.id_map("h", "hc"), d.p_r.named({"p1", "p2"}));
    r = mul_legs(H, r, "p1", "hc", "o1");
    rep.eq("qr1", "(qr1)", t.reordered({"h", "o1", "o2"}),
           r.renamed("p2", "o2").reordered({"h", "o1", "o2"}));
  }
  {  // (qr1) companion: [1 (x) S^{-1}(h_2)] q_R Delta(h_1) = (h (x) 1) q_R
    Tensor t = delta_leg(H, H.delta_map("h", "h1", "h2"), "h1", "a", "b");
    t = kron(t, d.q_r.named({"q1", "q2"}));
    t = mul_legs(H, t, "q1", "a", "o1");
    t = A.Sinv_leg(t, "h2", "si");
    t = mul_legs(H, t, "si", "q2", "m");
    t = mul_legs(H, t, "m", "b", "o2");
    Tensor r = kron(H.id_map("h", "hc"), d.q_r.named({"q1", "q2"}));
    r = mul_legs(H, r, "hc", "q1", "o1");
    rep.eq("qr1-q", "(qr1)", t.reordered({"h", "o1", "o2"}),
           r.renamed("q2", "o2").reordered({"h", "o1", "o2"}));
  }
  {  // (ql1): Delta(h_2) p_L [S^{-1}(h_1) (x) 1] = p_L (1 (x) h)
    Tensor t = delta_leg(H, H.delta_map("h", "h1", "h2"), "h2", "a", "b");
    t = kron(t, d.p_l.named({"p1", "p2"}));
    t = A.Sinv_leg(t, "h1", "si");
    t = mul_legs(H, t, "a", "p1", "m");
    t = mul_legs(H, t, "m", "si", "o1");
    t = mul_legs(H, t, "b", "p2", "o2");
    Tensor r = kron(H.id_map("h", "hc"), d.p_l.named({"p1", "o1"}));
    r = mul_legs(H, r, "o1", "hc", "o2");
    rep.eq("ql1", "(ql1)", t.reordered({"h", "o1", "o2"}),
           r.renamed("p1", "o1").reordered({"h", "o1", "o2"}));
  }
  {  // (ql1) companion: [S(h_1) (x) 1] q_L Delta(h_2) = (1 (x) h) q_L
    Tensor t = delta_leg(H, H.delta_map("h", "h1", "h2"), "h2", "a", "b");
    t = kron(t, d.q_l.named({"q1", "q2"}));
    t = A.S_leg(t, "h1", "s1");
    t = mul_legs(H, t, "s1", "q1", "m");
    t = mul_legs(H, t, "m", "a", "o1");
    t = mul_legs(H, t, "q2", "b", "o2");
    Tensor r = kron(H.id_map("h", "hc"), d.q_l.named({"q1", "q2"}));
    r = mul_legs(H, r, "hc", "q2", "o2");
    rep.eq("ql1-q", "(ql1)", t.reordered({"h", "o1", "o2"}),
           r.renamed("q1", "o1").reordered({"h", "o1", "o2"}));
  }
  {  // (Delta (x) id)(q_R) Phi^{-1} = Y1 (x) q1 Y2_1 (x) S^{-1}(Y3) q2 Y2_2
    Tensor l =
        delta_leg(H, d.q_r.named({"q1", "q2"}), "q1", "a", "b").reordered({"a", "b", "q2"});
    Tensor lhs = elem_mul(H, l, H.phi_inv_named("1", "2", "3"));
    Tensor t = delta_leg(H, H.phi_named("Y1", "Y2", "Y3"), "Y2", "Ya", "Yb");
    t = kron(t, d.q_r.named({"q1", "q2"}));
    t = mul_legs(H, t, "q1", "Ya", "o2");
    t = A.Sinv_leg(t, "Y3", "si");
    t = mul_legs(H, t, "si", "q2", "m");
    t = mul_legs(H, t, "m", "Yb", "o3");
    rep.eq("qr-delta", "", lhs.named({"o1", "o2", "o3"}),
           t.renamed("Y1", "o1").reordered({"o1", "o2", "o3"}));
  }
  {  // (qr2)
    Tensor e1 = kron(d.q_r.named({"1", "2"}), H.unit_named("3"));
    Tensor e2 =
        delta_leg(H, d.q_r.named({"a", "b"}), "a", "a1", "a2").reordered({"a1", "a2", "b"});
    Tensor lhs = elem_prod(H, {e1, e2, H.phi_inv_named("1", "2", "3")}).named({"1", "2", "3"});

    Tensor t = delta_leg(H, H.phi_named("X1", "X2", "X3"), "X1", "xa", "xb");
    t = kron(t, d.q_r.named({"r1", "r2"}));
    t = mul_legs(H, t, "r1", "xa", "w1");
    t = mul_legs(H, t, "r2", "xb", "w2");
    t = delta_leg(H, t, "w2", "w2a", "w2b");
    t = kron(t, d.f.named({"F1", "F2"}));
    t = A.Sinv_leg(t, "F2", "sf2");
    t = mul_legs(H, t, "sf2", "w2a", "m2");
    t = A.Sinv_leg(t, "X3", "sx3");
    t = mul_legs(H, t, "sx3", "m2", "o2");
    t = A.Sinv_leg(t, "F1", "sf1");
    t = mul_legs(H, t, "sf1", "w2b", "m3");
    t = A.Sinv_leg(t, "X2", "sx2");
    t = mul_legs(H, t, "sx2", "m3", "o3");
    rep.eq("qr2", "(qr2)", lhs, t.renamed("w1", "o1").reordered({"o1", "o2", "o3"})
                                    .named({"1", "2", "3"}));
  }
  return rep;
}

// The four identities of the lemma plus the comultiplied q_R formula.
inline Report lemma_pq_twist(const QuasiHopfAlgebra& A) {
  const QuasiBialgebra& H = A.b;
  Report rep{"pq-twist lemma"};
  if (!H.phi_inv) {
    rep.blocked("l1", "(l1)", "Phi is not invertible");
    return rep;
  }
  const DerivedElements& d = A.derived();

  {  // (l1): q1 y1 (x) S(q2 y2) y3 = 1 (x) alpha
    Tensor t = kron(d.q_r.named({"q1", "q2"}), H.phi_inv_named("y1", "y2", "y3"));
    t = mul_legs(H, t, "q1", "y1", "o1");
    t = mul_legs(H, t, "q2", "y2", "m");
    t = A.S_leg(t, "m", "sm");
    t = mul_legs(H, t, "sm", "y3", "o2");
    rep.eq("l1", "(l1)", t.reordered({"o1", "o2"}),
           kron(H.unit_named("o1"), A.alpha_named("o2")));
  }
  {  // (l2): Phi (Delta (x) id)(f^{-1})
     //       = g1 S(X3) f1 (x) g2_1 G1 S(X2) f2 (x) g2_2 G2 S(X1)
    Tensor l =
        delta_leg(H, d.f_inv.named({"a", "b"}), "a", "a1", "a2").reordered({"a1", "a2", "b"});
    Tensor lhs = elem_mul(H, H.phi_named("1", "2", "3"), l);

    Tensor t = kron(d.f_inv.named({"g1", "g2"}), H.phi_named("X1", "X2", "X3"));
    t = A.S_leg(t, "X3", "s3");
    t = mul_legs(H, t, "g1", "s3", "m1");
    t = kron(t, d.f.named({"F1", "F2"}));
    t = mul_legs(H, t, "m1", "F1", "o1");
    t = delta_leg(H, t, "g2", "ga", "gb");
    t = kron(t, d.f_inv.named({"G1", "G2"}));
    t = mul_legs(H, t, "ga", "G1", "m2");
    t = A.S_leg(t, "X2", "s2");
    t = mul_legs(H, t, "m2", "s2", "m3");
    t = mul_legs(H, t, "m3", "F2", "o2");
    t = mul_legs(H, t, "gb", "G2", "m4");
    t = A.S_leg(t, "X1", "s1");
    t = mul_legs(H, t, "m4", "s1", "o3");
    rep.eq("l2", "(l2)", lhs, t.reordered({"o1", "o2", "o3"}).named({"1", "2", "3"}));
  }
  {  // (l3): S(g1) alpha g2 = S(beta) and f1 beta S(f2) = S(alpha)
    Tensor t = A.S_leg(d.f_inv.named({"g1", "g2"}), "g1", "s1");
    t = kron(t, A.alpha_named("al"));
    t = mul_legs(H, t, "s1", "al", "m");
    t = mul_legs(H, t, "m", "g2", "o");
    rep.eq("l3a", "(l3)", t, apply_leg(A.beta_named("b"), "b", A.S, "o"));

    Tensor u = A.S_leg(d.f.named({"f1", "f2"}), "f2", "s2");
    u = kron(u, A.beta_named("be"));
    u = mul_legs(H, u, "f1", "be", "m");
    u = mul_legs(H, u, "m", "s2", "o");
    rep.eq("l3b", "(l3)", u, apply_leg(A.alpha_named("a"), "a", A.S, "o"));
  }
  {  // (l5): S(q2_2 X3) f1 (x) S(q1 X1 beta S(q2_1 X2) f2) = (id (x) S)(q_L)
    Tensor t = kron(d.q_r.named({"q1", "q2"}), H.phi_named("X1", "X2", "X3"));
    t = delta_leg(H, t, "q2", "qa", "qb");
    t = mul_legs(H, t, "qb", "X3", "m1");
    t = A.S_leg(t, "m1", "s1");
    t = kron(t, d.f.named({"F1", "F2"}));
    t = mul_legs(H, t, "s1", "F1", "o1");
    t = mul_legs(H, t, "qa", "X2", "m2");
    t = A.S_leg(t, "m2", "s2");
    t = mul_legs(H, t, "q1", "X1", "m3");
    t = kron(t, A.beta_named("be"));
    t = mul_legs(H, t, "m3", "be", "m4");
    t = mul_legs(H, t, "m4", "s2", "m5");
    t = mul_legs(H, t, "m5", "F2", "m6");
    t = A.S_leg(t, "m6", "o2");
    Tensor rhs = A.S_leg(d.q_l.named({"o1", "q2"}), "q2", "o2");
    rep.eq("l5", "(l5)", t.reordered({"o1", "o2"}), rhs.reordered({"o1", "o2"}));
  }
  {  // (fox): (id (x) Delta)(q_R) = Q1 Y1 x1_1
     //        (x) S^{-1}(x3 g2) Q2 q1 Y2_1 x1_(2,1)
     //        (x) S^{-1}(Y3 x2 g1) q2 Y2_2 x1_(2,2)
    Tensor lhs = delta_leg(H, d.q_r.named({"o1", "q2"}), "q2", "o2", "o3")
                     .reordered({"o1", "o2", "o3"});

    Tensor t = kron(H.phi_inv_named("x1", "x2", "x3"), d.f_inv.named({"g1", "g2"}));
    t = mul_legs(H, t, "x3", "g2", "mA");
    t = A.Sinv_leg(t, "mA", "sA");
    t = mul_legs(H, t, "x2", "g1", "m21");
    t = kron(t, H.phi_named("Y1", "Y2", "Y3"));
    t = mul_legs(H, t, "Y3", "m21", "mB");
    t = A.Sinv_leg(t, "mB", "sB");
    t = kron(t, d.q_r.named({"Q1", "Q2"}));
    t = mul_legs(H, t, "Q1", "Y1", "mC");
    t = delta_leg(H, t, "x1", "xa", "xb");
    t = mul_legs(H, t, "mC", "xa", "o1");
    t = mul_legs(H, t, "sA", "Q2", "m1");
    t = kron(t, d.q_r.named({"q1", "q2"}));
    t = mul_legs(H, t, "m1", "q1", "m2");
    t = delta_leg(H, t, "Y2", "Ya", "Yb");
    t = mul_legs(H, t, "m2", "Ya", "m3");
    t = delta_leg(H, t, "xb", "xb1", "xb2");
    t = mul_legs(H, t, "m3", "xb1", "o2");
    t = mul_legs(H, t, "sB", "q2", "m4");
    t = mul_legs(H, t, "m4", "Yb", "m5");
    t = mul_legs(H, t, "m5", "xb2", "o3");
    rep.eq("fox", "(fox)", lhs, t.reordered({"o1", "o2", "o3"}));
  }
  return rep;
}

// Gauge twist H_F per (g1), (g2), (g3). F must satisfy the counit conditions
// and be invertible in H (x) H.
inline QuasiHopfAlgebra twist_algebra(const QuasiHopfAlgebra& A, const Tensor& F_in) {
  const QuasiBialgebra& H = A.b;
  Tensor F = F_in.named({"1", "2"});
  {
    Tensor c1 = eps_leg(H, F, "1");
    Tensor c2 = eps_leg(H, F, "2");
    if (c1.diff(H.unit_named("2")) || c2.diff(H.unit_named("1")))
      throw std::invalid_argument("gauge transformation fails the counit conditions");
  }
  auto Finv = elem_inverse(H, F);
  if (!Finv) throw std::invalid_argument("gauge transformation is not invertible");

  QuasiHopfAlgebra out;
  out.b.dim = H.dim;
  out.b.mult = H.mult;
  out.b.unit = H.unit;
  out.b.counit = H.counit;
  out.S = A.S;
  out.Sinv = A.Sinv;
  out.name = A.name + "_twisted";
  out.basis_names = A.basis_names;

  {  // (g1): Delta_F(h) = F Delta(h) F^{-1}
    Tensor t = H.delta_map("h", "a", "b");
    t = kron(t, F.named({"F1", "F2"}));
    t = mul_legs(H, t, "F1", "a", "m1");
    t = mul_legs(H, t, "F2", "b", "m2");
    t = kron(t, Finv->named({"G1", "G2"}));
    t = mul_legs(H, t, "m1", "G1", "o1");
    t = mul_legs(H, t, "m2", "G2", "o2");
    out.b.comult = t.reordered({"h", "o1", "o2"}).named({"a", "b", "c"});
  }
  {  // (g2)
    Tensor e1 = kron(H.unit_named("1"), F.named({"2", "3"}));
    Tensor e2 = delta_leg(H, F.named({"a", "b"}), "b", "b1", "b2").reordered({"a", "b1", "b2"});
    Tensor e3 = H.phi_named("1", "2", "3");
    Tensor e4 =
        delta_leg(H, Finv->named({"a", "b"}), "a", "a1", "a2").reordered({"a1", "a2", "b"});
    Tensor e5 = kron(Finv->named({"1", "2"}), H.unit_named("3"));
    out.b.phi = elem_prod(H, {e1, e2, e3, e4, e5}).named({"a", "b", "c"});
  }
  {  // (g3)
    Tensor t = A.S_leg(Finv->named({"G1", "G2"}), "G1", "s1");
    t = kron(t, A.alpha_named("al"));
    t = mul_legs(H, t, "s1", "al", "m");
    t = mul_legs(H, t, "m", "G2", "o");
    out.alpha = t;
    Tensor u = A.S_leg(F.named({"F1", "F2"}), "F2", "s2");
    u = kron(u, A.beta_named("be"));
    u = mul_legs(H, u, "F1", "be", "m");
    u = mul_legs(H, u, "m", "s2", "o");
    out.beta = u;
  }
  finalize(out);
  return out;
}

inline Tensor apply_map_elem(const Tensor& map2, const Tensor& v) {
  return apply_leg(v.named({"#v"}), "#v", map2, "o");
}

// H^op: opposite multiplication.
inline QuasiHopfAlgebra op_variant(const QuasiHopfAlgebra& A) {
  if (!A.b.phi_inv) throw std::runtime_error("op variant needs an invertible Phi");
  QuasiHopfAlgebra out;
  out.b.dim = A.b.dim;
  out.b.mult = slots_perm(A.b.mult, {1, 0, 2});
  out.b.unit = A.b.unit;
  out.b.comult = A.b.comult;
  out.b.counit = A.b.counit;
  out.b.phi = *A.b.phi_inv;
  out.S = A.Sinv;
  out.Sinv = A.S;
  out.alpha = apply_map_elem(A.Sinv, A.beta);
  out.beta = apply_map_elem(A.Sinv, A.alpha);
  out.name = A.name + "_op";
  out.basis_names = A.basis_names;
  finalize(out);
  return out;
}

// H^cop: opposite comultiplication.
inline QuasiHopfAlgebra cop_variant(const QuasiHopfAlgebra& A) {
  if (!A.b.phi_inv) throw std::runtime_error("cop variant needs an invertible Phi");
  QuasiHopfAlgebra out;
  out.b.dim = A.b.dim;
  out.b.mult = A.b.mult;
  out.b.unit = A.b.unit;
  out.b.comult = slots_perm(A.b.comult, {0, 2, 1});
  out.b.counit = A.b.counit;
  out.b.phi = slots_perm(*A.b.phi_inv, {2, 1, 0});
  out.S = A.Sinv;
  out.Sinv = A.S;
  out.alpha = apply_map_elem(A.Sinv, A.alpha);
  out.beta = apply_map_elem(A.Sinv, A.beta);
  out.name = A.name + "_cop";
  out.basis_names = A.basis_names;
  finalize(out);
  return out;
}

// H^{op,cop}: both reversed.
inline QuasiHopfAlgebra opcop_variant(const QuasiHopfAlgebra& A) {
  QuasiHopfAlgebra out;
  out.b.dim = A.b.dim;
  out.b.mult = slots_perm(A.b.mult, {1, 0, 2});
  out.b.unit = A.b.unit;
  out.b.comult = slots_perm(A.b.comult, {0, 2, 1});
  out.b.counit = A.b.counit;
  out.b.phi = slots_perm(A.b.phi, {2, 1, 0});
  out.S = A.S;
  out.Sinv = A.Sinv;
  out.alpha = A.beta;
  out.beta = A.alpha;
  out.name = A.name + "_opcop";
  out.basis_names = A.basis_names;
  finalize(out);
  return out;
}

}  // namespace qhopf
