#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qhopf/rational.hpp"

namespace qhopf {

// One tensor leg: a name (unique within the tensor) and a dimension.
struct Leg {
  std::string name;
  std::size_t dim = 0;
};

// First point of disagreement between two equal-shaped tensors.
struct Witness {
  std::vector<std::size_t> index;
  std::string lhs, rhs;
};

// Dense row-major tensor over Q with named legs. The leg names carry the
// Sweedler bookkeeping: formula transcriptions address legs by name and never
// track positions by hand. All operations are exact; zero entries are skipped
// during contraction so structurally sparse data (trivial reassociators,
// group-like comultiplications) costs close to its support.
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<Leg> legs) : legs_(std::move(legs)) {
    data_.assign(total_size(legs_), Rational(0));
  }

  Tensor(std::vector<Leg> legs, std::vector<Rational> data)
      : legs_(std::move(legs)), data_(std::move(data)) {
    if (data_.size() != total_size(legs_))
      throw std::invalid_argument("Tensor: data size does not match legs");
  }

  static Tensor scalar(Rational v) {
    Tensor t{std::vector<Leg>{}};
    t.data_[0] = std::move(v);
    return t;
  }

  std::size_t order() const { return legs_.size(); }
  std::size_t size() const { return data_.size(); }
  const std::vector<Leg>& legs() const { return legs_; }
  const std::vector<Rational>& data() const { return data_; }
  std::vector<Rational>& data() { return data_; }

  std::size_t leg(std::string_view name) const {
    for (std::size_t i = 0; i < legs_.size(); ++i)
      if (legs_[i].name == name) return i;
    throw std::invalid_argument("Tensor: no leg named '" + std::string(name) + "'");
  }

  bool has_leg(std::string_view name) const {
    for (const auto& l : legs_)
      if (l.name == name) return true;
    return false;
  }

  std::size_t dim(std::size_t i) const { return legs_.at(i).dim; }

  const Rational& at(std::span<const std::size_t> idx) const { return data_[flat(idx)]; }
  Rational& at(std::span<const std::size_t> idx) { return data_[flat(idx)]; }
  const Rational& at(std::initializer_list<std::size_t> idx) const {
    return data_[flat(std::span<const std::size_t>(idx.begin(), idx.size()))];
  }
  Rational& at(std::initializer_list<std::size_t> idx) {
    return data_[flat(std::span<const std::size_t>(idx.begin(), idx.size()))];
  }

  // Rename every leg, in order.
  Tensor named(std::vector<std::string> names) const {
    if (names.size() != legs_.size())
      throw std::invalid_argument("Tensor::named: wrong name count");
    Tensor t = *this;
    for (std::size_t i = 0; i < names.size(); ++i) t.legs_[i].name = std::move(names[i]);
    t.check_unique_names();
    return t;
  }

  Tensor renamed(std::string_view from, std::string to) const {
    Tensor t = *this;
    t.legs_[leg(from)].name = std::move(to);
    t.check_unique_names();
    return t;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.legs_size_match(b) && a.data_ == b.data_;
  }

  Tensor& operator+=(const Tensor& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }

  Tensor scaled(const Rational& c) const {
    Tensor t = *this;
    for (auto& v : t.data_) v *= c;
    return t;
  }

  // Outer product; leg names must stay unique across both operands.
  friend Tensor kron(const Tensor& a, const Tensor& b) {
    std::vector<Leg> legs = a.legs_;
    legs.insert(legs.end(), b.legs_.begin(), b.legs_.end());
    Tensor r{std::move(legs)};
    r.check_unique_names();
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      if (a.data_[i].is_zero()) continue;
      const std::size_t base = i * b.data_.size();
      for (std::size_t j = 0; j < b.data_.size(); ++j)
        if (!b.data_[j].is_zero()) r.data_[base + j] = a.data_[i] * b.data_[j];
    }
    return r;
  }

  // Sum over paired legs (pairs of positions, a-leg vs b-leg). Result legs:
  // a's unpaired legs in order, then b's unpaired legs in order. `a` and `b`
  // may alias.
  static Tensor contract(const Tensor& a, const Tensor& b,
                         std::span<const std::pair<std::size_t, std::size_t>> pairs);

  // Name-based contraction convenience.
  static Tensor contract(const Tensor& a, const Tensor& b,
                         std::initializer_list<std::pair<std::string_view, std::string_view>> by_name) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(by_name.size());
    for (const auto& [la, lb] : by_name) pairs.emplace_back(a.leg(la), b.leg(lb));
    return contract(a, b, pairs);
  }

  // Output slot p holds the input leg sigma[p] (0-based). So
  // permuted({2,0,1}) sends x (x) y (x) z to z (x) x (x) y.
  Tensor permuted(std::span<const std::size_t> sigma) const {
    if (sigma.size() != legs_.size())
      throw std::invalid_argument("Tensor::permuted: wrong permutation size");
    std::vector<Leg> legs(sigma.size());
    for (std::size_t p = 0; p < sigma.size(); ++p) legs[p] = legs_[sigma[p]];
    Tensor r{std::move(legs)};
    std::vector<std::size_t> out(sigma.size()), in(sigma.size());
    for (std::size_t f = 0; f < data_.size(); ++f) {
      if (data_[f].is_zero()) continue;
      unflatten(f, in);
      for (std::size_t p = 0; p < sigma.size(); ++p) out[p] = in[sigma[p]];
      r.at(out) = data_[f];
    }
    return r;
  }

  Tensor permuted(std::initializer_list<std::size_t> sigma) const {
    return permuted(std::span<const std::size_t>(sigma.begin(), sigma.size()));
  }

  // Reorder legs so their names appear in the given order.
  Tensor reordered(std::span<const std::string> names) const {
    if (names.size() != legs_.size())
      throw std::invalid_argument("Tensor::reordered: wrong name count");
    std::vector<std::size_t> sigma(names.size());
    for (std::size_t p = 0; p < names.size(); ++p) sigma[p] = leg(names[p]);
    return permuted(sigma);
  }

  Tensor reordered(std::initializer_list<std::string> names) const {
    std::vector<std::string> v(names);
    return reordered(std::span<const std::string>(v.data(), v.size()));
  }

  // Exact comparison after aligning `other`'s legs by name; nullopt when
  // equal, else the lexicographically first differing index.
  std::optional<Witness> diff(const Tensor& other) const {
    std::vector<std::string> names;
    names.reserve(legs_.size());
    for (const auto& l : legs_) names.push_back(l.name);
    const Tensor o = other.reordered(std::span<const std::string>(names.data(), names.size()));
    if (!legs_size_match(o)) throw std::invalid_argument("Tensor::diff: shape mismatch");
    for (std::size_t f = 0; f < data_.size(); ++f) {
      if (data_[f] != o.data_[f]) {
        std::vector<std::size_t> idx(legs_.size());
        unflatten(f, idx);
        return Witness{idx, data_[f].str(), o.data_[f].str()};
      }
    }
    return std::nullopt;
  }

  void unflatten(std::size_t flat, std::vector<std::size_t>& idx) const {
    for (std::size_t i = legs_.size(); i-- > 0;) {
      idx[i] = flat % legs_[i].dim;
      flat /= legs_[i].dim;
    }
  }

 private:
  static std::size_t total_size(const std::vector<Leg>& legs) {
    std::size_t n = 1;
    for (const auto& l : legs) {
      if (l.dim == 0) throw std::invalid_argument("Tensor: zero-dimensional leg");
      n *= l.dim;
    }
    return n;
  }

  std::size_t flat(std::span<const std::size_t> idx) const {
    assert(idx.size() == legs_.size());
    std::size_t f = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      assert(idx[i] < legs_[i].dim);
      f = f * legs_[i].dim + idx[i];
    }
    return f;
  }

  bool legs_size_match(const Tensor& o) const {
    if (legs_.size() != o.legs_.size()) return false;
    for (std::size_t i = 0; i < legs_.size(); ++i)
      if (legs_[i].dim != o.legs_[i].dim) return false;
    return true;
  }

  void require_same_shape(const Tensor& o) const {
    if (!legs_size_match(o)) throw std::invalid_argument("Tensor: shape mismatch");
  }

  void check_unique_names() const {
    for (std::size_t i = 0; i < legs_.size(); ++i)
      for (std::size_t j = i + 1; j < legs_.size(); ++j)
        if (legs_[i].name == legs_[j].name)
          throw std::invalid_argument("Tensor: duplicate leg name '" + legs_[i].name + "'");
  }

  std::vector<Leg> legs_;
  std::vector<Rational> data_;
};

inline Tensor Tensor::contract(const Tensor& a, const Tensor& b,
                               std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<bool> a_used(a.order(), false), b_used(b.order(), false);
  for (const auto& [ia, ib] : pairs) {
    if (ia >= a.order() || ib >= b.order())
      throw std::invalid_argument("Tensor::contract: leg out of range");
    if (a.legs_[ia].dim != b.legs_[ib].dim)
      throw std::invalid_argument("Tensor::contract: dimension mismatch on legs '" +
                                  a.legs_[ia].name + "'/'" + b.legs_[ib].name + "'");
    if (a_used[ia] || b_used[ib])
      throw std::invalid_argument("Tensor::contract: leg paired twice");
    a_used[ia] = b_used[ib] = true;
  }

  std::vector<std::size_t> a_free, b_free;
  for (std::size_t i = 0; i < a.order(); ++i)
    if (!a_used[i]) a_free.push_back(i);
  for (std::size_t i = 0; i < b.order(); ++i)
    if (!b_used[i]) b_free.push_back(i);

  std::vector<Leg> legs;
  legs.reserve(a_free.size() + b_free.size());
  for (auto i : a_free) legs.push_back(a.legs_[i]);
  for (auto i : b_free) legs.push_back(b.legs_[i]);
  Tensor r{std::move(legs)};
  r.check_unique_names();

  // b indexed by (bound legs, free legs): precompute strides.
  std::vector<std::size_t> b_stride(b.order(), 1);
  for (std::size_t i = b.order(); i-- > 1;)
    b_stride[i - 1] = b_stride[i] * b.legs_[i].dim;

  std::vector<std::size_t> ai(a.order());
  std::vector<std::size_t> out(r.order());
  const std::size_t nb_free = b_free.size();
  std::size_t b_free_size = 1;
  for (auto i : b_free) b_free_size *= b.legs_[i].dim;

  for (std::size_t fa = 0; fa < a.data_.size(); ++fa) {
    if (a.data_[fa].is_zero()) continue;
    a.unflatten(fa, ai);
    for (std::size_t p = 0; p < a_free.size(); ++p) out[p] = ai[a_free[p]];
    // base offset of b from the bound legs
    std::size_t base = 0;
    for (const auto& [ia, ib] : pairs) base += ai[ia] * b_stride[ib];
    // iterate b's free legs
    std::vector<std::size_t> bi(nb_free, 0);
    for (std::size_t fb = 0; fb < b_free_size; ++fb) {
      std::size_t off = base;
      for (std::size_t p = 0; p < nb_free; ++p) off += bi[p] * b_stride[b_free[p]];
      const Rational& bv = b.data_[off];
      if (!bv.is_zero()) {
        for (std::size_t p = 0; p < nb_free; ++p) out[a_free.size() + p] = bi[p];
        r.at(out) += a.data_[fa] * bv;
      }
      for (std::size_t p = nb_free; p-- > 0;) {
        if (++bi[p] < b.legs_[b_free[p]].dim) break;
        bi[p] = 0;
      }
    }
  }
  return r;
}

// The subscript convention for multi-leg elements: slots_perm(t, a) has
// entry t[k[a[0]], k[a[1]], ...] at index k. For a 3-leg Phi this realizes
// Phi_{a1 a2 a3} in 0-based form, e.g. Phi_{312} = slots_perm(phi, {2,0,1}).
inline Tensor slots_perm(const Tensor& t, std::span<const std::size_t> a) {
  if (a.size() != t.order()) throw std::invalid_argument("slots_perm: wrong subscript count");
  for (std::size_t p = 1; p < t.order(); ++p)
    if (t.legs()[p].dim != t.legs()[0].dim)
      throw std::invalid_argument("slots_perm: legs must share one dimension");
  std::vector<Leg> legs(t.order());
  for (std::size_t p = 0; p < a.size(); ++p) {
    legs[p] = t.legs()[a[p]];
    legs[p].name = t.legs()[p].name;  // keep positional names stable
  }
  Tensor r{std::move(legs)};
  std::vector<std::size_t> in(t.order()), out(t.order());
  for (std::size_t f = 0; f < t.data().size(); ++f) {
    if (t.data()[f].is_zero()) continue;
    t.unflatten(f, in);
    // entry t[in] lands everywhere out with out[a[p]] = in[p]... inverse view:
    // r[k] = t[k[a[0]],...]; so k[a[p]] = in[p] for each p.
    for (std::size_t p = 0; p < a.size(); ++p) out[a[p]] = in[p];
    r.at(out) = t.data()[f];
  }
  return r;
}

inline Tensor slots_perm(const Tensor& t, std::initializer_list<std::size_t> a) {
  return slots_perm(t, std::span<const std::size_t>(a.begin(), a.size()));
}

// Assemble a linear map column by column: `col(idx)` returns the image of the
// basis vector at multi-index idx; the result has `in_legs` first, then the
// column legs. Every column must use the same leg layout.
inline Tensor build_map(const std::vector<Leg>& in_legs,
                        const std::function<Tensor(std::span<const std::size_t>)>& col) {
  std::size_t n_in = 1;
  for (const auto& l : in_legs) n_in *= l.dim;
  std::vector<std::size_t> idx(in_legs.size(), 0);
  Tensor result;
  bool first = true;
  std::size_t out_size = 0;
  for (std::size_t f = 0; f < n_in; ++f) {
    Tensor c = col(idx);
    if (first) {
      std::vector<Leg> legs = in_legs;
      for (const auto& l : c.legs()) legs.push_back(l);
      result = Tensor{std::move(legs)};
      out_size = c.size();
      first = false;
    }
    for (std::size_t j = 0; j < out_size; ++j) result.data()[f * out_size + j] = c.data()[j];
    for (std::size_t p = idx.size(); p-- > 0;) {
      if (++idx[p] < in_legs[p].dim) break;
      idx[p] = 0;
    }
  }
  return result;
}

// Basis vector e_i as a one-leg tensor.
inline Tensor basis_elem(std::size_t dim, std::size_t i, std::string name) {
  Tensor t{{Leg{std::move(name), dim}}};
  t.data()[i] = Rational(1);
  return t;
}

// Fuse legs la and lb into one leg named `out` of dimension dim(la)*dim(lb),
// sitting where la was; the fused index is row-major, idx(la)*dim(lb)+idx(lb).
inline Tensor merged_legs(const Tensor& t, std::string_view la, std::string_view lb,
                          std::string out) {
  const std::size_t ia = t.leg(la), ib = t.leg(lb);
  if (ia == ib) throw std::invalid_argument("merged_legs: need two distinct legs");
  const std::size_t db = t.legs()[ib].dim;
  std::vector<Leg> legs;
  legs.reserve(t.order() - 1);
  for (std::size_t p = 0; p < t.order(); ++p) {
    if (p == ib) continue;
    if (p == ia)
      legs.push_back(Leg{out, t.legs()[ia].dim * db});
    else
      legs.push_back(t.legs()[p]);
  }
  Tensor r{std::move(legs)};
  std::vector<std::size_t> in(t.order());
  std::vector<std::size_t> dst;
  dst.reserve(t.order() - 1);
  for (std::size_t f = 0; f < t.data().size(); ++f) {
    if (t.data()[f].is_zero()) continue;
    t.unflatten(f, in);
    dst.clear();
    for (std::size_t p = 0; p < t.order(); ++p) {
      if (p == ib) continue;
      dst.push_back(p == ia ? in[ia] * db + in[ib] : in[p]);
    }
    r.at(dst) = t.data()[f];
  }
  return r;
}

}  // namespace qhopf
