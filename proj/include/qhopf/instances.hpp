#pragma once

#include <string>
#include <vector>

#include "qhopf/algebra.hpp"
#include "qhopf/yd.hpp"

namespace qhopf::instances {

// The ground field k as a one-dimensional quasi-Hopf algebra.
inline QuasiHopfAlgebra field_algebra() {
  QuasiHopfAlgebra A;
  A.name = "k";
  A.basis_names = {"1"};
  A.b.dim = 1;
  A.b.mult = Tensor{{Leg{"a", 1}, Leg{"b", 1}, Leg{"c", 1}}, {Rational(1)}};
  A.b.unit = Tensor{{Leg{"c", 1}}, {Rational(1)}};
  A.b.comult = Tensor{{Leg{"a", 1}, Leg{"b", 1}, Leg{"c", 1}}, {Rational(1)}};
  A.b.counit = Tensor{{Leg{"a", 1}}, {Rational(1)}};
  A.b.phi = Tensor{{Leg{"a", 1}, Leg{"b", 1}, Leg{"c", 1}}, {Rational(1)}};
  A.S = Tensor{{Leg{"a", 1}, Leg{"b", 1}}, {Rational(1)}};
  A.alpha = Tensor{{Leg{"a", 1}}, {Rational(1)}};
  A.beta = Tensor{{Leg{"a", 1}}, {Rational(1)}};
  finalize(A);
  return A;
}

namespace detail {

// Group algebra scaffolding for Z/2 on basis {1, g}: index arithmetic is xor.
inline void fill_z2_bialgebra(QuasiBialgebra& B) {
  B.dim = 2;
  B.mult = Tensor{{Leg{"a", 2}, Leg{"b", 2}, Leg{"c", 2}}};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) B.mult.at({a, b, a ^ b}) = Rational(1);
  B.unit = Tensor{{Leg{"c", 2}}};
  B.unit.at({0}) = Rational(1);
  B.comult = Tensor{{Leg{"a", 2}, Leg{"b", 2}, Leg{"c", 2}}};
  B.comult.at({0, 0, 0}) = Rational(1);
  B.comult.at({1, 1, 1}) = Rational(1);
  B.counit = Tensor{{Leg{"a", 2}}, {Rational(1), Rational(1)}};
}

inline Tensor identity_map(std::size_t d) {
  Tensor t{{Leg{"a", d}, Leg{"b", d}}};
  for (std::size_t i = 0; i < d; ++i) t.at({i, i}) = Rational(1);
  return t;
}

}  // namespace detail

// The group algebra kZ_2 with its usual Hopf structure.
inline QuasiHopfAlgebra group_z2() {
  QuasiHopfAlgebra A;
  A.name = "kz2";
  A.basis_names = {"1", "g"};
  detail::fill_z2_bialgebra(A.b);
  A.b.phi = Tensor{{Leg{"a", 2}, Leg{"b", 2}, Leg{"c", 2}}};
  A.b.phi.at({0, 0, 0}) = Rational(1);
  A.S = detail::identity_map(2);
  A.alpha = A.b.unit.named({"a"});
  A.beta = A.b.unit.named({"a"});
  finalize(A);
  return A;
}

// Triangular structure on kZ_2: (1x1 + 1xg + gx1 - gxg)/2.
inline Tensor z2_r_matrix() {
  Tensor r{{Leg{"1", 2}, Leg{"2", 2}}};
  r.at({0, 0}) = Rational(1, 2);
  r.at({0, 1}) = Rational(1, 2);
  r.at({1, 0}) = Rational(1, 2);
  r.at({1, 1}) = Rational(-1, 2);
  return r;
}

// kZ_2 with the nontrivial reassociator coming from the order-two 3-cocycle:
// Phi = 1x1x1 - 2 p x p x p with p = (1 - g)/2, alpha = g, beta = 1, S = id.
inline QuasiHopfAlgebra h2() {
  QuasiHopfAlgebra A;
  A.name = "h2";
  A.basis_names = {"1", "g"};
  detail::fill_z2_bialgebra(A.b);
  A.b.phi = Tensor{{Leg{"a", 2}, Leg{"b", 2}, Leg{"c", 2}}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        if (i == 0 && j == 0 && k == 0)
          A.b.phi.at({i, j, k}) = Rational(3, 4);
        else
          A.b.phi.at({i, j, k}) = ((i + j + k) % 2 == 0) ? Rational(-1, 4) : Rational(1, 4);
      }
  A.S = detail::identity_map(2);
  A.alpha = Tensor{{Leg{"a", 2}}, {Rational(0), Rational(1)}};
  A.beta = Tensor{{Leg{"a", 2}}, {Rational(1), Rational(0)}};
  finalize(A);
  return A;
}

// Sweedler's four-dimensional Hopf algebra on basis {1, g, x, gx}:
// g^2 = 1, x^2 = 0, xg = -gx, Delta(g) = gxg, Delta(x) = xx1 + gxx.
inline QuasiHopfAlgebra sweedler_h4() {
  QuasiHopfAlgebra A;
  A.name = "h4";
  A.basis_names = {"1", "g", "x", "gx"};
  A.b.dim = 4;
  Tensor m{{Leg{"a", 4}, Leg{"b", 4}, Leg{"c", 4}}};
  for (std::size_t y = 0; y < 4; ++y) {
    m.at({0, y, y}) = Rational(1);
    if (y != 0) m.at({y, 0, y}) = Rational(1);
  }
  m.at({1, 1, 0}) = Rational(1);
  m.at({1, 2, 3}) = Rational(1);
  m.at({1, 3, 2}) = Rational(1);
  m.at({2, 1, 3}) = Rational(-1);
  m.at({3, 1, 2}) = Rational(-1);
  A.b.mult = m;
  A.b.unit = Tensor{{Leg{"c", 4}}};
  A.b.unit.at({0}) = Rational(1);
  Tensor c{{Leg{"a", 4}, Leg{"b", 4}, Leg{"c", 4}}};
  c.at({0, 0, 0}) = Rational(1);
  c.at({1, 1, 1}) = Rational(1);
  c.at({2, 2, 0}) = Rational(1);
  c.at({2, 1, 2}) = Rational(1);
  c.at({3, 3, 1}) = Rational(1);
  c.at({3, 0, 3}) = Rational(1);
  A.b.comult = c;
  A.b.counit = Tensor{{Leg{"a", 4}}, {Rational(1), Rational(1), Rational(0), Rational(0)}};
  A.b.phi = Tensor{{Leg{"a", 4}, Leg{"b", 4}, Leg{"c", 4}}};
  A.b.phi.at({0, 0, 0}) = Rational(1);
  Tensor s{{Leg{"a", 4}, Leg{"b", 4}}};
  s.at({0, 0}) = Rational(1);
  s.at({1, 1}) = Rational(1);
  s.at({2, 3}) = Rational(-1);
  s.at({3, 2}) = Rational(1);
  A.S = s;
  A.alpha = A.b.unit.named({"a"});
  A.beta = A.b.unit.named({"a"});
  finalize(A);
  return A;
}

// The one-parameter family of quasitriangular structures on sweedler_h4():
// R = (1x1 + 1xg + gx1 - gxg)/2 + lam (xxx - xxgx + gxxx + gxxgx).
inline Tensor sweedler_r(const Rational& lam) {
  Tensor r{{Leg{"1", 4}, Leg{"2", 4}}};
  r.at({0, 0}) = Rational(1, 2);
  r.at({0, 1}) = Rational(1, 2);
  r.at({1, 0}) = Rational(1, 2);
  r.at({1, 1}) = Rational(-1, 2);
  r.at({2, 2}) = lam;
  r.at({2, 3}) = -lam;
  r.at({3, 2}) = lam;
  r.at({3, 3}) = lam;
  return r;
}

// One-dimensional left Yetter-Drinfeld module over kZ2: the action sends g to
// `sign` and the coaction is m -> e_delta (x) m for a group-like basis index.
inline YDModule z2_line(int sign, std::size_t delta, std::string name) {
  YDModule M;
  M.name = std::move(name);
  M.flavor = YDFlavor::Left;
  M.dim = 1;
  Tensor act{{Leg{"h", 2}, Leg{"m", 1}, Leg{"o", 1}}};
  act.at({0, 0, 0}) = Rational(1);
  act.at({1, 0, 0}) = Rational(sign);
  Tensor co{{Leg{"m", 1}, Leg{"a", 2}, Leg{"o", 1}}};
  co.at({0, delta, 0}) = Rational(1);
  M.action = std::move(act);
  M.coaction = std::move(co);
  return M;
}

// L(g, -1): coaction by g, action by the sign character.
inline YDModule z2_m_minus() { return z2_line(-1, 1, "m-"); }

// M+ (+) M- with both coactions equal to g, in left flavor.
inline YDModule z2_sum_left() {
  YDModule M;
  M.name = "m2";
  M.flavor = YDFlavor::Left;
  M.dim = 2;
  Tensor act{{Leg{"h", 2}, Leg{"m", 2}, Leg{"o", 2}}};
  act.at({0, 0, 0}) = Rational(1);
  act.at({0, 1, 1}) = Rational(1);
  act.at({1, 0, 0}) = Rational(1);
  act.at({1, 1, 1}) = Rational(-1);
  Tensor co{{Leg{"m", 2}, Leg{"a", 2}, Leg{"o", 2}}};
  co.at({0, 1, 0}) = Rational(1);
  co.at({1, 1, 1}) = Rational(1);
  M.action = std::move(act);
  M.coaction = std::move(co);
  return M;
}

// Right-left twin of z2_m_minus.
inline YDModule z2_m_minus_rl() {
  YDModule M = with_flavor(z2_m_minus(), YDFlavor::RightLeft);
  M.name = "m-rl";
  return M;
}

// The direct sum in left-right flavor: coaction m_i -> m_i (x) g.
inline YDModule z2_sum_lr() {
  YDModule M = with_flavor(z2_sum_left(), YDFlavor::LeftRight);
  M.name = "m2lr";
  return M;
}

// The direct sum in right-left flavor.
inline YDModule z2_sum_rl() {
  YDModule M = with_flavor(z2_sum_left(), YDFlavor::RightLeft);
  M.name = "m2rl";
  return M;
}

// Two-dimensional left Yetter-Drinfeld module over h2() whose coaction mixes
// the basis: g acts as -1 and lambda(m) = 1 (x) (I+D)m/2 + g (x) (I-D)m/2
// with D the quarter turn. Both sides of (y1) pick up the nontrivial Phi.
inline YDModule h2_yd2() {
  YDModule M;
  M.name = "w2";
  M.flavor = YDFlavor::Left;
  M.dim = 2;
  Tensor act{{Leg{"h", 2}, Leg{"m", 2}, Leg{"o", 2}}};
  act.at({0, 0, 0}) = Rational(1);
  act.at({0, 1, 1}) = Rational(1);
  act.at({1, 0, 0}) = Rational(-1);
  act.at({1, 1, 1}) = Rational(-1);
  // co[m, a, m'] holds the matrix entry C_a[m'][m] for C_0 = (I+D)/2,
  // C_1 = (I-D)/2, D = [[0,1],[-1,0]].
  Tensor co{{Leg{"m", 2}, Leg{"a", 2}, Leg{"o", 2}}};
  co.at({0, 0, 0}) = Rational(1, 2);
  co.at({0, 0, 1}) = Rational(-1, 2);
  co.at({1, 0, 0}) = Rational(1, 2);
  co.at({1, 0, 1}) = Rational(1, 2);
  co.at({0, 1, 0}) = Rational(1, 2);
  co.at({0, 1, 1}) = Rational(1, 2);
  co.at({1, 1, 0}) = Rational(-1, 2);
  co.at({1, 1, 1}) = Rational(1, 2);
  M.action = std::move(act);
  M.coaction = std::move(co);
  return M;
}

// h2 is its own op and cop variant (commutative, cocommutative, Phi
// self-inverse and symmetric), so the flavored presentations of h2_yd2 are
// again modules over h2 itself.
inline YDModule h2_yd2_lr() {
  YDModule M = with_flavor(h2_yd2(), YDFlavor::LeftRight);
  M.name = "w2lr";
  return M;
}

inline YDModule h2_yd2_rl() {
  YDModule M = with_flavor(h2_yd2(), YDFlavor::RightLeft);
  M.name = "w2rl";
  return M;
}

}  // namespace qhopf::instances
