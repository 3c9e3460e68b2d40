#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "qhopf/algebra.hpp"
#include "qhopf/linalg.hpp"
#include "qhopf/report.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

// The monoidal category of finite dimensional left H-modules. Objects are
// plain modules (no coaction); structure maps are materialized as two-leg
// tensors (in, out) over flattened composite indices, so categorical
// identities become exact matrix equations.
//
// Conventions used throughout:
//   * composite index of M (x) N is m * dim(N) + n (first factor major), and
//     nested composites flatten to the same integer regardless of
//     bracketing, so only the structure maps carry the bracketing;
//   * the unit constraints are taken as l_V : V -> V (x) k and
//     r_V : V -> k (x) V, both of which are the identity on flat data;
//   * the associator a_{M,N,P} : (M (x) N) (x) P -> M (x) (N (x) P) acts by
//     Phi, (as);
//   * dual, evaluation and coevaluation follow (qrig):
//     (h . f)(v) = f(S(h) . v), ev(f (x) v) = f(alpha . v),
//     coev(1) = sum_i beta . v_i (x) v^i;
//   * when H is quasitriangular the braiding is c(u (x) v) = R2 . v (x) R1 . u,
//     (br).

struct HModule {
  std::string name;
  std::size_t dim = 0;
  Tensor action;  // legs [h, m, o]
};

inline void require_module_shape(const QuasiBialgebra& H, const HModule& M) {
  auto bad = [&](const char* what) {
    throw std::invalid_argument("module " + M.name + ": " + what);
  };
  if (M.dim == 0) bad("dimension must be positive");
  if (M.action.order() != 3) bad("action must have three legs");
  const auto& a = M.action.legs();
  if (a[0].dim != H.dim) bad("action H-leg shape");
  if (a[1].dim != M.dim || a[2].dim != M.dim) bad("action module-leg shape");
}

inline HModule trivial_hmodule(const QuasiBialgebra& H) {
  Tensor act = H.counit.named({"h"});
  act = kron(act, basis_elem(1, 0, "m"));
  act = kron(act, basis_elem(1, 0, "o"));
  return {"k", 1, std::move(act)};
}

// H acting on itself by left multiplication.
inline HModule regular_hmodule(const QuasiBialgebra& H, std::string name = "H") {
  return {std::move(name), H.dim, H.mult_named("h", "m", "o")};
}

// Module laws: (h h') . m = h . (h' . m) and 1 . m = m. This is the input
// validation gate; everything else in this header assumes it.
inline Report check_hmodule(const QuasiBialgebra& H, const HModule& M) {
  require_module_shape(H, M);
  Report rep{"module " + M.name};
  {
    const std::pair<std::size_t, std::size_t> p1[] = {{2, 0}};
    Tensor lhs = Tensor::contract(H.mult_named("g", "h", "#p"),
                                  M.action.named({"#p2", "m", "o"}), p1);
    const std::pair<std::size_t, std::size_t> p2[] = {{2, 1}};
    Tensor rhs = Tensor::contract(M.action.named({"h", "m", "#w"}),
                                  M.action.named({"g", "#w2", "o"}), p2);
    rep.eq("module-assoc", "", lhs, rhs.reordered({"g", "h", "m", "o"}));
  }
  {
    const std::pair<std::size_t, std::size_t> pr[] = {{0, 0}};
    Tensor lhs = Tensor::contract(H.unit.named({"#u"}), M.action.named({"#h", "m", "o"}), pr);
    rep.eq("module-unit", "", lhs, module_id(M.dim, "m", "o"));
  }
  return rep;
}

// Linear maps as two-leg tensors (in, out): composition and tensor product.
inline Tensor map_compose(const Tensor& after, const Tensor& before) {
  const std::pair<std::size_t, std::size_t> pr[] = {{1, 0}};
  return Tensor::contract(before.named({"in", "#w"}), after.named({"#w2", "out"}), pr);
}

inline Tensor map_kron(const Tensor& f, const Tensor& g) {
  Tensor t = kron(f.named({"#i1", "#o1"}), g.named({"#i2", "#o2"}));
  t = merged_legs(t, "#i1", "#i2", "in");
  t = merged_legs(t, "#o1", "#o2", "out");
  return t.reordered({"in", "out"});
}

// Diagonal action h . (m (x) n) = h_1 . m (x) h_2 . n on the flat composite.
inline HModule module_tensor(const QuasiBialgebra& H, const HModule& M, const HModule& N) {
  Tensor t = H.delta_map("h", "#h1", "#h2");
  t = act_free(M.action, t, "#h1", "m", "#am");
  t = act_free(N.action, t, "#h2", "n", "#an");
  t = merged_legs(t, "m", "n", "m");
  t = merged_legs(t, "#am", "#an", "o");
  return {"(" + M.name + ")(x)(" + N.name + ")", M.dim * N.dim,
          t.reordered({"h", "m", "o"})};
}

// Left dual with action (h . f)(v) = f(S(h) . v).
inline HModule module_dual(const QuasiHopfAlgebra& A, const HModule& M) {
  Tensor act = A.S_map("h", "#s");
  act = act_free(M.action, act, "#s", "o", "m");  // act[h, o, m] = (S(h) . e_o)_m
  return {"(" + M.name + ")*", M.dim, act.reordered({"h", "m", "o"})};
}

// a_{M,N,P} : (M (x) N) (x) P -> M (x) (N (x) P), acting by Phi per (as).
inline Tensor associator(const QuasiBialgebra& H, const HModule& M, const HModule& N,
                         const HModule& P) {
  Tensor t = H.phi_named("#p1", "#p2", "#p3");
  t = act_free(M.action, t, "#p1", "m", "am");
  t = act_free(N.action, t, "#p2", "n", "an");
  t = act_free(P.action, t, "#p3", "p", "ap");
  t = merged_legs(t, "m", "n", "#mn");
  t = merged_legs(t, "#mn", "p", "in");
  t = merged_legs(t, "an", "ap", "#np");
  t = merged_legs(t, "am", "#np", "out");
  return t.reordered({"in", "out"});
}

// a^{-1}_{M,N,P} : M (x) (N (x) P) -> (M (x) N) (x) P, acting by Phi^{-1}.
inline Tensor associator_inv(const QuasiBialgebra& H, const HModule& M, const HModule& N,
                             const HModule& P) {
  Tensor t = H.phi_inv_named("#p1", "#p2", "#p3");
  t = act_free(M.action, t, "#p1", "m", "am");
  t = act_free(N.action, t, "#p2", "n", "an");
  t = act_free(P.action, t, "#p3", "p", "ap");
  t = merged_legs(t, "n", "p", "#np");
  t = merged_legs(t, "m", "#np", "in");
  t = merged_legs(t, "am", "an", "#mn");
  t = merged_legs(t, "#mn", "ap", "out");
  return t.reordered({"in", "out"});
}

// Unit constraints in flattened coordinates. Both are identity matrices; they
// exist so compositions can be written exactly as the displays read.
inline Tensor unit_l(const HModule& M) { return module_id(M.dim, "in", "out"); }
inline Tensor unit_r(const HModule& M) { return module_id(M.dim, "in", "out"); }

// ev_M : M* (x) M -> k, f (x) v |-> f(alpha . v). The k leg is kept explicit
// (dimension one) so ev composes like any other map.
inline Tensor ev_map(const QuasiHopfAlgebra& A, const HModule& M) {
  Tensor t = A.alpha_named("#a");
  t = act_free(M.action, t, "#a", "#j", "#i");  // entry (j, i) = (alpha . e_j)_i
  t = t.reordered({"#i", "#j"});
  t = merged_legs(t, "#i", "#j", "in");
  return kron(t, basis_elem(1, 0, "out")).reordered({"in", "out"});
}

// coev_M : k -> M (x) M*, 1 |-> sum_i beta . v_i (x) v^i.
inline Tensor coev_map(const QuasiHopfAlgebra& A, const HModule& M) {
  Tensor t = A.beta_named("#b");
  t = act_free(M.action, t, "#b", "#i", "#p");  // entry (i, p) = (beta . v_i)_p
  t = t.reordered({"#p", "#i"});
  t = merged_legs(t, "#p", "#i", "out");
  return kron(basis_elem(1, 0, "in"), t).reordered({"in", "out"});
}

// Rigidity battery for one module: the dual is a module and both snake
// identities hold,
//   (rig1)  l^{-1} (id (x) ev) a_{M,M*,M} (coev (x) id) r = id_M
//   (rig2)  r^{-1} (ev (x) id) a^{-1}_{M*,M,M*} (id (x) coev) l = id_{M*}
// with the unit constraints absorbed (they are flat identities here).
inline Report check_rigidity(const QuasiHopfAlgebra& A, const HModule& M) {
  Report rep{"rigidity " + M.name};
  const HModule D = module_dual(A, M);
  rep.absorb(check_hmodule(A.b, D), "dual");
  const Tensor ev = ev_map(A, M);
  const Tensor cv = coev_map(A, M);
  const Tensor idm = module_id(M.dim, "in", "out");
  const Tensor idd = module_id(D.dim, "in", "out");
  Tensor s1 = map_compose(map_kron(idm, ev),
                          map_compose(associator(A.b, M, D, M), map_kron(cv, idm)));
  rep.eq("rig1", "(rig1)", s1, idm);
  Tensor s2 = map_compose(map_kron(ev, idd),
                          map_compose(associator_inv(A.b, D, M, D), map_kron(idd, cv)));
  rep.eq("rig2", "(rig2)", s2, idd);
  return rep;
}

// Coherence of the associator on concrete objects: the pentagon on four
// modules and the triangle (middle unit) on two.
inline Report check_coherence(const QuasiBialgebra& H, const HModule& M, const HModule& N,
                              const HModule& P, const HModule& Q) {
  Report rep{"coherence " + M.name + "," + N.name + "," + P.name + "," + Q.name};
  const HModule MN = module_tensor(H, M, N);
  const HModule NP = module_tensor(H, N, P);
  const HModule PQ = module_tensor(H, P, Q);
  Tensor lhs = map_compose(associator(H, M, N, PQ), associator(H, MN, P, Q));
  Tensor rhs = map_compose(
      map_kron(module_id(M.dim, "in", "out"), associator(H, N, P, Q)),
      map_compose(associator(H, M, NP, Q),
                  map_kron(associator(H, M, N, P), module_id(Q.dim, "in", "out"))));
  rep.eq("pentagon", "(as)", lhs, rhs);
  const HModule K = trivial_hmodule(H);
  rep.eq("triangle", "(as)", associator(H, M, K, N),
         module_id(M.dim * N.dim, "in", "out"));
  return rep;
}

// c_{M,N} : M (x) N -> N (x) M, u (x) v |-> R2 . v (x) R1 . u per (br).
inline Tensor braiding_map(const Tensor& R, const HModule& M, const HModule& N) {
  Tensor t = R.named({"#r1", "#r2"});
  t = act_free(N.action, t, "#r2", "v", "#ov");
  t = act_free(M.action, t, "#r1", "u", "#ou");
  t = merged_legs(t, "u", "v", "in");
  t = merged_legs(t, "#ov", "#ou", "out");
  return t.reordered({"in", "out"});
}

// Braided structure on _H M for a given R: H-linearity of c, both hexagon
// identities against the Phi associator, and invertibility of c as a matrix.
inline Report check_braided_category(const QuasiBialgebra& H, const Tensor& R,
                                     const HModule& M, const HModule& N, const HModule& P) {
  Report rep{"braided " + M.name + "," + N.name + "," + P.name};
  const HModule MN = module_tensor(H, M, N);
  const HModule NM = module_tensor(H, N, M);
  const HModule NP = module_tensor(H, N, P);
  const Tensor c_mn = braiding_map(R, M, N);
  {
    // c(h . (u (x) v)) = h . c(u (x) v)
    const std::pair<std::size_t, std::size_t> p1[] = {{2, 0}};
    Tensor lhs = Tensor::contract(MN.action.named({"h", "m", "#w"}),
                                  c_mn.named({"#w2", "o"}), p1);
    const std::pair<std::size_t, std::size_t> p2[] = {{1, 1}};
    Tensor rhs = Tensor::contract(c_mn.named({"m", "#w"}),
                                  NM.action.named({"h", "#w2", "o"}), p2);
    rep.eq("br-natural", "(br)", lhs, rhs.reordered({"h", "m", "o"}));
  }
  {
    Tensor lhs = map_compose(associator(H, N, P, M),
                             map_compose(braiding_map(R, M, NP), associator(H, M, N, P)));
    Tensor rhs = map_compose(
        map_kron(module_id(N.dim, "in", "out"), braiding_map(R, M, P)),
        map_compose(associator(H, N, M, P),
                    map_kron(c_mn, module_id(P.dim, "in", "out"))));
    rep.eq("br-hex1", "(qt1)", lhs, rhs);
  }
  {
    Tensor lhs = map_compose(associator_inv(H, P, M, N),
                             map_compose(braiding_map(R, MN, P), associator_inv(H, M, N, P)));
    Tensor rhs = map_compose(
        map_kron(braiding_map(R, M, P), module_id(N.dim, "in", "out")),
        map_compose(associator_inv(H, M, P, N),
                    map_kron(module_id(M.dim, "in", "out"), braiding_map(R, N, P))));
    rep.eq("br-hex2", "(qt2)", lhs, rhs);
  }
  rep.add("br-inv", "", inverse(as_matrix(c_mn, 1)).has_value());
  return rep;
}

}  // namespace qhopf
