#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qhopf/algebra.hpp"
#include "qhopf/report.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

// The three Yetter-Drinfeld flavors. A left module carries a left action
// [h, m, m'] and a left coaction [m, h, m']; a left-right module a left
// action and a right coaction [m, m', h]; a right-left module a right action
// [m, h, m'] and a left coaction.
enum class YDFlavor { Left, LeftRight, RightLeft };

inline const char* flavor_name(YDFlavor f) {
  switch (f) {
    case YDFlavor::Left: return "left";
    case YDFlavor::LeftRight: return "left-right";
    case YDFlavor::RightLeft: return "right-left";
  }
  return "?";
}

struct YDModule {
  std::string name;
  YDFlavor flavor = YDFlavor::Left;
  std::size_t dim = 0;
  Tensor action;
  Tensor coaction;
};

inline void require_yd_shapes(const QuasiBialgebra& H, const YDModule& M) {
  auto bad = [&](const char* what) {
    throw std::invalid_argument("yd module " + M.name + ": " + what);
  };
  if (M.dim == 0) bad("dimension must be positive");
  if (M.action.order() != 3 || M.coaction.order() != 3)
    bad("action and coaction must have three legs");
  const auto& a = M.action.legs();
  const auto& c = M.coaction.legs();
  const bool right_action = M.flavor == YDFlavor::RightLeft;
  const bool right_coaction = M.flavor == YDFlavor::LeftRight;
  if (a[right_action ? 1 : 0].dim != H.dim) bad("action H-leg shape");
  if (a[right_action ? 0 : 1].dim != M.dim || a[2].dim != M.dim) bad("action module-leg shape");
  if (c[right_coaction ? 2 : 1].dim != H.dim) bad("coaction H-leg shape");
  if (c[0].dim != M.dim || c[right_coaction ? 1 : 2].dim != M.dim)
    bad("coaction module-leg shape");
}

// Dictionary between the flavors: a left-right module over H is a left module
// over H^cop with the coaction legs swapped, and a right-left module is a
// left module over H^op with the action legs swapped.
inline YDModule as_left(const YDModule& M) {
  YDModule out = M;
  out.flavor = YDFlavor::Left;
  if (M.flavor == YDFlavor::LeftRight) out.coaction = M.coaction.permuted({0, 2, 1});
  if (M.flavor == YDFlavor::RightLeft) out.action = M.action.permuted({1, 0, 2});
  return out;
}

// Inverse of as_left: reinterpret a left module in the target flavor.
inline YDModule with_flavor(const YDModule& L, YDFlavor target) {
  if (L.flavor != YDFlavor::Left)
    throw std::invalid_argument("with_flavor: expected a left module");
  YDModule out = L;
  out.flavor = target;
  if (target == YDFlavor::LeftRight) out.coaction = L.coaction.permuted({0, 2, 1});
  if (target == YDFlavor::RightLeft) out.action = L.action.permuted({1, 0, 2});
  return out;
}

// The algebra a flavored module lives over once rewritten as a left module.
inline QuasiBialgebra yd_base(const QuasiBialgebra& H, YDFlavor f) {
  switch (f) {
    case YDFlavor::Left: return H;
    case YDFlavor::LeftRight: return cop_bialgebra(H);
    case YDFlavor::RightLeft: return op_bialgebra(H);
  }
  throw std::logic_error("yd_base: bad flavor");
}

// Left action applied to existing legs hl (in H) and ml (in M); the product
// leg `out` is appended.
inline Tensor act_leg(const YDModule& M, const Tensor& t, std::string_view hl,
                      std::string_view ml, std::string out) {
  return act_leg(M.action, t, hl, ml, std::move(out));
}

// Left action contracted on the H side only; fresh module legs (min, mout)
// are appended.
inline Tensor act_free(const YDModule& M, const Tensor& t, std::string_view hl,
                       std::string min, std::string mout) {
  return act_free(M.action, t, hl, std::move(min), std::move(mout));
}

// Left coaction expanding leg ml into appended legs (outh, outm).
inline Tensor coact_leg(const YDModule& M, const Tensor& t, std::string_view ml,
                        std::string outh, std::string outm) {
  const std::pair<std::size_t, std::size_t> pr[] = {{t.leg(ml), 0}};
  Tensor r = Tensor::contract(t, M.coaction.named({"#m", "#a", "#o"}), pr);
  return r.renamed("#a", std::move(outh)).renamed("#o", std::move(outm));
}

// Full axiom battery for one module: module laws, counit law, and the two
// compatibility identities of its flavor. Flavored modules are checked
// through the dictionary, so (y1)-(y3) stay the single transcription.
inline Report check_yd(const QuasiBialgebra& H, const YDModule& M) {
  require_yd_shapes(H, M);
  Report rep{"yd " + M.name};
  const QuasiBialgebra K = yd_base(H, M.flavor);
  const YDModule L = as_left(M);
  std::string t1 = "y1", t2 = "y2", t3 = "y3";
  if (M.flavor == YDFlavor::LeftRight) { t1 = "lry1"; t2 = "lry2"; t3 = "lry3"; }
  if (M.flavor == YDFlavor::RightLeft) { t1 = "rly1"; t2 = "rly2"; t3 = "rly3"; }

  {  // (h h') . m = h . (h' . m)
    const std::pair<std::size_t, std::size_t> p1[] = {{2, 0}};
    Tensor lhs = Tensor::contract(K.mult_named("a", "b", "#c"), L.action.named({"#h", "m", "o"}), p1);
    const std::pair<std::size_t, std::size_t> p2[] = {{1, 2}};
    Tensor rhs = Tensor::contract(L.action.named({"a", "#w", "o"}), L.action.named({"b", "m", "#w2"}), p2);
    rep.eq("module-assoc", "", lhs.reordered({"a", "b", "m", "o"}),
           rhs.reordered({"a", "b", "m", "o"}));
  }
  {  // 1 . m = m
    const std::pair<std::size_t, std::size_t> pr[] = {{0, 0}};
    Tensor lhs = Tensor::contract(K.unit_named("#u"), L.action.named({"#h", "m", "o"}), pr);
    rep.eq("module-unit", "", lhs, module_id(M.dim, "m", "o"));
  }
  {  // counit on the coaction leg
    Tensor lhs = eps_leg(K, L.coaction.named({"m", "a", "o"}), "a");
    rep.eq(t2, "(" + t2 + ")", lhs, module_id(M.dim, "m", "o"));
  }
  {  // h1 m_(-1) (x) h2 . m_(0) = (h1 . m)_(-1) h2 (x) (h1 . m)_(0)
    Tensor lhs = kron(K.delta_map("h", "h1", "h2"), L.coaction.named({"m", "a", "m0"}));
    lhs = mul_legs(K, lhs, "h1", "a", "o1");
    lhs = act_leg(L, lhs, "h2", "m0", "o2");
    Tensor rhs = K.delta_map("h", "h1", "h2");
    {
      const std::pair<std::size_t, std::size_t> pr[] = {{1, 0}};
      rhs = Tensor::contract(rhs, L.action.named({"#h", "m", "w"}), pr);
    }
    rhs = coact_leg(L, rhs, "w", "b", "o2");
    rhs = mul_legs(K, rhs, "b", "h2", "o1");
    rep.eq(t3, "(" + t3 + ")", lhs.reordered({"h", "m", "o1", "o2"}),
           rhs.reordered({"h", "m", "o1", "o2"}));
  }
  {  // X1 m_(-1) (x) (X2 . m_(0))_(-1) X3 (x) (X2 . m_(0))_(0)
     //   = X1 (Y1 . m)_(-1)_1 Y2 (x) X2 (Y1 . m)_(-1)_2 Y3 (x) X3 . (Y1 . m)_(0)
    Tensor lhs = kron(K.phi_named("X1", "X2", "X3"), L.coaction.named({"m", "a", "m0"}));
    lhs = act_leg(L, lhs, "X2", "m0", "w");
    lhs = coact_leg(L, lhs, "w", "b", "o3");
    lhs = mul_legs(K, lhs, "X1", "a", "o1");
    lhs = mul_legs(K, lhs, "b", "X3", "o2");

    Tensor rhs = K.phi_named("Y1", "Y2", "Y3");
    {
      const std::pair<std::size_t, std::size_t> pr[] = {{0, 0}};
      rhs = Tensor::contract(rhs, L.action.named({"#h", "m", "w"}), pr);
    }
    rhs = coact_leg(L, rhs, "w", "a", "w0");
    rhs = delta_leg(K, rhs, "a", "a1", "a2");
    rhs = mul_legs(K, rhs, "a1", "Y2", "q1");
    rhs = mul_legs(K, rhs, "a2", "Y3", "q2");
    rhs = kron(rhs, K.phi_named("X1", "X2", "X3"));
    rhs = mul_legs(K, rhs, "X1", "q1", "o1");
    rhs = mul_legs(K, rhs, "X2", "q2", "o2");
    rhs = act_leg(L, rhs, "X3", "w0", "o3");
    rep.eq(t1, "(" + t1 + ")", lhs.reordered({"m", "o1", "o2", "o3"}),
           rhs.reordered({"m", "o1", "o2", "o3"}));
  }
  return rep;
}

// The base field: h . 1 = eps(h) 1, coaction 1 -> 1_H (x) 1.
inline YDModule trivial_yd(const QuasiBialgebra& H) {
  YDModule M;
  M.name = "k";
  M.dim = 1;
  Tensor act{{Leg{"h", H.dim}, Leg{"m", 1}, Leg{"o", 1}}};
  for (std::size_t h = 0; h < H.dim; ++h) act.at({h, 0, 0}) = H.counit.data()[h];
  Tensor co{{Leg{"m", 1}, Leg{"a", H.dim}, Leg{"o", 1}}};
  for (std::size_t a = 0; a < H.dim; ++a) co.at({0, a, 0}) = H.unit.data()[a];
  M.action = std::move(act);
  M.coaction = std::move(co);
  return M;
}

// Tensor product module: diagonal action and the (y4) coaction. Flavored
// inputs are routed through the dictionary and converted back.
inline YDModule yd_tensor(const QuasiBialgebra& H, const YDModule& M_in, const YDModule& N_in) {
  if (M_in.flavor != N_in.flavor) throw std::invalid_argument("yd_tensor: flavor mismatch");
  const QuasiBialgebra K = yd_base(H, M_in.flavor);
  if (!K.phi_inv) throw std::invalid_argument("yd_tensor: Phi must be invertible");
  const YDModule M = as_left(M_in), N = as_left(N_in);

  YDModule out;
  out.name = M_in.name + "(x)" + N_in.name;
  out.flavor = YDFlavor::Left;
  out.dim = M.dim * N.dim;

  Tensor act = K.delta_map("h", "h1", "h2");
  {
    const std::pair<std::size_t, std::size_t> pr[] = {{1, 0}};
    act = Tensor::contract(act, M.action.named({"#h", "m", "p"}), pr);
  }
  {
    const std::pair<std::size_t, std::size_t> pr[] = {{1, 0}};
    act = Tensor::contract(act, N.action.named({"#h", "n", "q"}), pr);
  }
  act = merged_legs(act, "m", "n", "mi");
  act = merged_legs(act, "p", "q", "mo");
  out.action = act.reordered({"h", "mi", "mo"}).named({"h", "m", "o"});

  // lambda(m (x) n) = X1 (x1 Y1 . m)_(-1) x2 (Y2 . n)_(-1) Y3
  //   (x) X2 . (x1 Y1 . m)_(0) (x) X3 x3 . (Y2 . n)_(0)
  Tensor co = kron(K.phi_inv_named("x1", "x2", "x3"), K.phi_named("Y1", "Y2", "Y3"));
  co = mul_legs(K, co, "x1", "Y1", "w");
  co = act_free(M, co, "w", "m", "p");
  co = coact_leg(M, co, "p", "a1", "p0");
  co = mul_legs(K, co, "a1", "x2", "b1");
  co = act_free(N, co, "Y2", "n", "q");
  co = coact_leg(N, co, "q", "a2", "q0");
  co = mul_legs(K, co, "b1", "a2", "b2");
  co = mul_legs(K, co, "b2", "Y3", "b3");
  co = kron(co, K.phi_named("X1", "X2", "X3"));
  co = mul_legs(K, co, "X1", "b3", "oa");
  co = act_leg(M, co, "X2", "p0", "om");
  co = mul_legs(K, co, "X3", "x3", "c1");
  co = act_leg(N, co, "c1", "q0", "on");
  co = merged_legs(co, "m", "n", "mi");
  co = merged_legs(co, "om", "on", "mo");
  out.coaction = co.reordered({"mi", "oa", "mo"}).named({"m", "a", "o"});

  return with_flavor(out, M_in.flavor);
}

struct Braiding {
  Tensor c;      // legs (m, n, o1, o2): M (x) N -> N (x) M
  Tensor c_inv;  // legs (n, m, o1, o2): N (x) M -> M (x) N
};

// c(m (x) n) = m_(-1) . n (x) m_(0); c^{-1} is the (y6) transcription
//   c^{-1}(n (x) m) = y3_1 X2 . (x1 . m)_(0)
//     (x) S^{-1}(S(y1) alpha y2 X1 (x1 . m)_(-1) x2 beta S(y3_2 X3 x3)) . n.
inline Braiding yd_braiding(const QuasiHopfAlgebra& A, const YDModule& M, const YDModule& N) {
  if (M.flavor != YDFlavor::Left || N.flavor != YDFlavor::Left)
    throw std::invalid_argument("yd_braiding: left flavor required");
  const QuasiBialgebra& H = A.b;
  if (!H.phi_inv) throw std::invalid_argument("yd_braiding: Phi must be invertible");
  Braiding br;
  {
    Tensor c = M.coaction.named({"m", "a", "m0"});
    c = act_free(N, c, "a", "n", "o1");
    br.c = c.reordered({"m", "n", "o1", "m0"}).named({"m", "n", "o1", "o2"});
  }
  {
    Tensor yc = delta_leg(H, H.phi_inv_named("y1", "y2", "y3"), "y3", "ya", "yb");
    yc = A.S_leg(yc, "y1", "sy");
    yc = kron(yc, A.alpha_named("al"));
    yc = mul_legs(H, yc, "sy", "al", "t1");
    yc = mul_legs(H, yc, "t1", "y2", "t2");

    Tensor t = H.phi_inv_named("x1", "x2", "x3");
    t = act_free(M, t, "x1", "m", "m1");
    t = coact_leg(M, t, "m1", "w", "m0");
    t = kron(t, H.phi_named("X1", "X2", "X3"));
    t = mul_legs(H, t, "X1", "w", "b1");
    t = mul_legs(H, t, "b1", "x2", "b2");
    t = kron(t, A.beta_named("be"));
    t = mul_legs(H, t, "b2", "be", "b3");
    t = kron(t, yc);
    t = mul_legs(H, t, "yb", "X3", "c1");
    t = mul_legs(H, t, "c1", "x3", "c2");
    t = A.S_leg(t, "c2", "sc");
    t = mul_legs(H, t, "b3", "sc", "d1");
    t = mul_legs(H, t, "t2", "d1", "d2");
    t = A.Sinv_leg(t, "d2", "si");
    t = act_free(N, t, "si", "n", "o2");
    t = mul_legs(H, t, "ya", "X2", "e1");
    t = act_leg(M, t, "e1", "m0", "o1");
    br.c_inv = t.reordered({"n", "m", "o1", "o2"});
  }
  return br;
}

// Braiding battery: two-sided invertibility and the morphism property of c
// with respect to the diagonal action and the (y4) coaction.
inline Report check_braiding(const QuasiHopfAlgebra& A, const YDModule& M, const YDModule& N) {
  const QuasiBialgebra& H = A.b;
  Report rep{"yd braiding " + M.name + ", " + N.name};
  Braiding br = yd_braiding(A, M, N);
  {
    const std::pair<std::size_t, std::size_t> pr[] = {{2, 0}, {3, 1}};
    Tensor comp = Tensor::contract(br.c, br.c_inv, pr).named({"m", "n", "o1", "o2"});
    Tensor id2 = kron(module_id(M.dim, "m", "o1"), module_id(N.dim, "n", "o2"));
    rep.eq("braid-inv-l", "(y6)", comp, id2.reordered({"m", "n", "o1", "o2"}));
  }
  {
    const std::pair<std::size_t, std::size_t> pr[] = {{2, 0}, {3, 1}};
    Tensor comp = Tensor::contract(br.c_inv, br.c, pr).named({"n", "m", "o1", "o2"});
    Tensor id2 = kron(module_id(N.dim, "n", "o1"), module_id(M.dim, "m", "o2"));
    rep.eq("braid-inv-r", "(y6)", comp, id2.reordered({"n", "m", "o1", "o2"}));
  }
  {  // c(h1 . m (x) h2 . n) = h1 . c_N-part ...: c intertwines the diagonal action
    Tensor lhs = H.delta_map("h", "h1", "h2");
    {
      const std::pair<std::size_t, std::size_t> pr[] = {{1, 0}};
      lhs = Tensor::contract(lhs, M.action.named({"#h", "m", "p"}), pr);
    }
    {
      const std::pair<std::size_t, std::size_t> pr[] = {{1, 0}};
      lhs = Tensor::contract(lhs, N.action.named({"#h", "n", "q"}), pr);
    }
    {
      const std::pair<std::size_t, std::size_t> pr[] = {{lhs.leg("p"), 0}, {lhs.leg("q"), 1}};
      lhs = Tensor::contract(lhs, br.c, pr);
    }
    Tensor rhs = kron(H.delta_map("h", "h1", "h2"), br.c.named({"m", "n", "p", "q"}));
    rhs = act_leg(N, rhs, "h1", "p", "o1");
    rhs = act_leg(M, rhs, "h2", "q", "o2");
    rep.eq("braid-module-map", "", lhs.reordered({"h", "m", "n", "o1", "o2"}),
           rhs.reordered({"h", "m", "n", "o1", "o2"}));
  }
  {  // lambda_{N (x) M} after c = (id (x) c) after lambda_{M (x) N}
    YDModule TMN = yd_tensor(H, M, N);
    YDModule TNM = yd_tensor(H, N, M);
    Tensor cm = merged_legs(merged_legs(br.c, "m", "n", "mi"), "o1", "o2", "mo");
    Tensor lhs, rhs;
    {
      const std::pair<std::size_t, std::size_t> pr[] = {{1, 0}};
      lhs = Tensor::contract(cm, TNM.coaction.named({"#m", "a", "o"}), pr);
    }
    {
      const std::pair<std::size_t, std::size_t> pr[] = {{2, 0}};
      rhs = Tensor::contract(TMN.coaction.named({"mi", "a", "#o"}), cm.named({"#mi", "o"}), pr);
    }
    rep.eq("braid-comodule-map", "(y4)", lhs.named({"mi", "a", "o"}),
           rhs.reordered({"mi", "a", "o"}));
  }
  return rep;
}

// R_M(m (x) n) = n_(1) . m (x) n_(0) on left-right modules,
//              = m . n_(-1) (x) n_(0) on right-left modules.
inline Tensor rm_map(const YDModule& M) {
  if (M.flavor == YDFlavor::LeftRight) {
    Tensor t = M.coaction.named({"n", "n0", "a"});
    t = act_free(M, t, "a", "m", "o1");
    return t.reordered({"m", "n", "o1", "n0"}).named({"m", "n", "o1", "o2"});
  }
  if (M.flavor == YDFlavor::RightLeft) {
    Tensor t = M.coaction.named({"n", "a", "n0"});
    const std::pair<std::size_t, std::size_t> pr[] = {{1, 1}};
    Tensor r = Tensor::contract(t, M.action.named({"#m", "#h", "#o"}), pr);
    return r.named({"n", "n0", "m", "o1"}).reordered({"m", "n", "o1", "n0"})
        .named({"m", "n", "o1", "o2"});
  }
  throw std::invalid_argument("rm_map: left-right or right-left module required");
}

// Composition of endomorphisms of M^(x)3 held as (i1,i2,i3,o1,o2,o3) tensors.
inline Tensor endo_compose(const Tensor& after, const Tensor& before) {
  const std::pair<std::size_t, std::size_t> pr[] = {{3, 0}, {4, 1}, {5, 2}};
  return Tensor::contract(before, after, pr);
}

// Embed a two-slot map into slots (a, b) of the triple tensor power.
inline Tensor endo_on_slots(const Tensor& map4, std::size_t a, std::size_t b, std::size_t d) {
  Tensor t = kron(map4.named({"#ia", "#ib", "#oa", "#ob"}), module_id(d, "#ic", "#oc"));
  std::vector<std::string> in(3), out(3);
  in[a] = "#ia";
  in[b] = "#ib";
  out[a] = "#oa";
  out[b] = "#ob";
  for (std::size_t s = 0; s < 3; ++s)
    if (in[s].empty()) {
      in[s] = "#ic";
      out[s] = "#oc";
    }
  return t.reordered({in[0], in[1], in[2], out[0], out[1], out[2]})
      .named({"i1", "i2", "i3", "o1", "o2", "o3"});
}

// An element of H^(x)3 acting slotwise on M^(x)3; flavored modules act on the
// side their action lives on.
inline Tensor endo_of_elem(const YDModule& M, const Tensor& e3) {
  Tensor t = e3.named({"#e1", "#e2", "#e3"});
  for (int s = 1; s <= 3; ++s) {
    const std::string es = "#e" + std::to_string(s);
    const std::string in = "i" + std::to_string(s);
    const std::string out = "o" + std::to_string(s);
    if (M.flavor == YDFlavor::RightLeft) {
      const std::pair<std::size_t, std::size_t> pr[] = {{t.leg(es), 1}};
      t = Tensor::contract(t, M.action.named({"#m", "#h", "#o"}), pr);
    } else {
      const std::pair<std::size_t, std::size_t> pr[] = {{t.leg(es), 0}};
      t = Tensor::contract(t, M.action.named({"#h", "#m", "#o"}), pr);
    }
    t = t.renamed("#m", in).renamed("#o", out);
  }
  return t.reordered({"i1", "i2", "i3", "o1", "o2", "o3"});
}

// R_M solves the quasi-Yang-Baxter equation
//   R12 Phi_312 R13 Phi^{-1}_132 R23 Phi = Phi_321 R23 Phi^{-1}_231 R13 Phi_213 R12
// with Phi acting slotwise; right-left modules use Phi^{321} instead.
inline Report check_qqyb(const QuasiBialgebra& H, const YDModule& M) {
  Report rep{"qqyb " + M.name};
  if (M.flavor == YDFlavor::Left)
    throw std::invalid_argument("check_qqyb: flavored module required");
  if (!H.phi_inv) {
    rep.blocked("qqyb", "(qqyb)", "Phi is not invertible");
    return rep;
  }
  Tensor phi = H.phi;
  Tensor phii = *H.phi_inv;
  if (M.flavor == YDFlavor::RightLeft) {
    phi = slots_perm(H.phi, {2, 1, 0});
    phii = slots_perm(*H.phi_inv, {2, 1, 0});
  }
  const std::size_t d = M.dim;
  Tensor R = rm_map(M);
  auto P = [&](const Tensor& e, std::initializer_list<std::size_t> sub) {
    return endo_of_elem(M, slots_perm(e, sub));
  };
  Tensor r12 = endo_on_slots(R, 0, 1, d);
  Tensor r13 = endo_on_slots(R, 0, 2, d);
  Tensor r23 = endo_on_slots(R, 1, 2, d);
  Tensor lhs = endo_compose(
      r12, endo_compose(P(phi, {2, 0, 1}),
                        endo_compose(r13, endo_compose(P(phii, {0, 2, 1}),
                                                       endo_compose(r23, P(phi, {0, 1, 2}))))));
  Tensor rhs = endo_compose(
      P(phi, {2, 1, 0}),
      endo_compose(r23, endo_compose(P(phii, {1, 2, 0}),
                                     endo_compose(r13, endo_compose(P(phi, {1, 0, 2}), r12)))));
  rep.eq("qqyb", "(qqyb)", lhs, rhs);
  return rep;
}

// Dual of a finite dimensional right-left module: a left-right module with
// action (h . m*)(m) = m*(m . h) and coaction cut out by (mor),
//   sum m*_(0)(m) m*_(1) = sum m*(m_(0)) m_(-1).
inline YDModule dual_yd(const YDModule& M) {
  if (M.flavor != YDFlavor::RightLeft)
    throw std::invalid_argument("dual_yd: right-left module required");
  YDModule out;
  out.name = M.name + "*";
  out.flavor = YDFlavor::LeftRight;
  out.dim = M.dim;
  out.action = M.action.permuted({1, 2, 0}).named({"h", "m", "o"});
  out.coaction = M.coaction.permuted({2, 0, 1}).named({"m", "o", "a"});
  return out;
}

// Dual battery: the dual passes check_yd and R_{M*} is the transpose of R_M
// under the pairing (M (x) M)* = M* (x) M*.
inline Report check_dual_yd(const QuasiBialgebra& H, const YDModule& M) {
  Report rep{"yd dual " + M.name};
  YDModule D = dual_yd(M);
  rep.absorb(check_yd(H, D), "dual");
  Tensor rt = rm_map(M).permuted({2, 3, 0, 1}).named({"m", "n", "o1", "o2"});
  rep.eq("dual-transpose", "(mor)", rm_map(D), rt);
  return rep;
}

// Dual of a finite dimensional left module: action (h . m*)(m) = m*(S(h) . m)
// and the twist-corrected coaction
//   lambda(m*) = <m*, f2 . (g1 . e_i)_(0)> S^{-1}(f1 (g1 . e_i)_(-1) g2) (x) e^i.
inline YDModule dual_left_yd(const QuasiHopfAlgebra& A, const YDModule& M) {
  if (M.flavor != YDFlavor::Left)
    throw std::invalid_argument("dual_left_yd: left module required");
  const QuasiBialgebra& H = A.b;
  const DerivedElements& dr = A.derived();
  YDModule out;
  out.name = M.name + "*";
  out.flavor = YDFlavor::Left;
  out.dim = M.dim;
  {
    Tensor t = A.S_map("h", "#s");
    const std::pair<std::size_t, std::size_t> pr[] = {{1, 0}};
    t = Tensor::contract(t, M.action.named({"#h", "#m", "#o"}), pr);
    out.action = t.named({"h", "o", "m"}).reordered({"h", "m", "o"});
  }
  {
    Tensor t = dr.f_inv.named({"g1", "g2"});
    t = act_free(M, t, "g1", "m", "w");
    t = coact_leg(M, t, "w", "a", "w0");
    t = kron(t, dr.f.named({"f1", "f2"}));
    t = act_leg(M, t, "f2", "w0", "p");
    t = mul_legs(H, t, "f1", "a", "b1");
    t = mul_legs(H, t, "b1", "g2", "b2");
    t = A.Sinv_leg(t, "b2", "hh");
    out.coaction = t.named({"o", "m", "a"}).reordered({"m", "a", "o"});
  }
  return out;
}

// A linear map phi: M -> N (legs (m, n)) intertwining action and coaction.
inline Report check_yd_morphism(const QuasiBialgebra& H, const YDModule& M, const YDModule& N,
                                const Tensor& map2) {
  if (M.flavor != N.flavor) throw std::invalid_argument("yd morphism: flavor mismatch");
  const YDModule LM = as_left(M), LN = as_left(N);
  Report rep{"yd morphism"};
  Tensor f = map2.named({"m", "n"});
  {
    const std::pair<std::size_t, std::size_t> p1[] = {{2, 0}};
    Tensor lhs = Tensor::contract(LM.action.named({"h", "m", "#w"}), f, p1);
    const std::pair<std::size_t, std::size_t> p2[] = {{1, 1}};
    Tensor rhs = Tensor::contract(f, LN.action.named({"h", "#n", "n"}), p2);
    rep.eq("morphism-action", "", lhs.reordered({"h", "m", "n"}),
           rhs.reordered({"h", "m", "n"}));
  }
  {
    const std::pair<std::size_t, std::size_t> p1[] = {{2, 0}};
    Tensor lhs = Tensor::contract(LM.coaction.named({"m", "a", "#w"}), f.named({"#w2", "n"}), p1);
    const std::pair<std::size_t, std::size_t> p2[] = {{1, 0}};
    Tensor rhs = Tensor::contract(f, LN.coaction.named({"#n", "a", "n"}), p2);
    rep.eq("morphism-coaction", "", lhs.reordered({"m", "a", "n"}),
           rhs.reordered({"m", "a", "n"}));
  }
  return rep;
}

}  // namespace qhopf