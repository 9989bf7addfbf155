#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdr/matrix.hpp"
#include "qdr/rational.hpp"

namespace qdr {

// A blade e^{i_1} ^ ... ^ e^{i_k} (i_1 < ... < i_k) is stored as a bitmask with
// bit (i-1) set for index i. Public index arguments are 1-based throughout.
using Mask = std::uint32_t;
inline constexpr int kMaxDim = 16;

inline int degree_of(Mask m) { return std::popcount(m); }
inline Mask bit_of(int index) { return Mask{1} << (index - 1); }
inline bool has_index(Mask m, int index) { return (m >> (index - 1)) & 1U; }
std::vector<int> indices_of(Mask m);
Mask mask_of(const std::vector<int>& sorted_indices);

/// Sign of e^A ^ e^B relative to e^{A|B}; 0 when A and B overlap.
inline int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int swaps = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

/// e_i inserted in the first slot of e^A: (-1)^{#indices of A below i}.
inline int first_slot_sign(Mask a, int index) {
  return (std::popcount(a & (bit_of(index) - 1)) & 1) ? -1 : 1;
}
/// e_i inserted in the last slot of e^A: (-1)^{#indices of A above i}.
inline int last_slot_sign(Mask a, int index) { return (std::popcount(a >> index) & 1) ? -1 : 1; }

/// Sorts an index list, returning the permutation sign (0 on repeats).
int sort_with_sign(std::vector<int>& idx);

/// Blades of a given dimension in display order: degree ascending, then
/// lexicographic on the index lists.
std::vector<Mask> blades_by_degree(int dim);
std::vector<Mask> blades_of_degree(int dim, int degree);
/// "e1^e3" with the given variable prefix ("e" or "dx"); "" for the unit blade.
std::string blade_name(Mask m, const std::string& prefix = "e");
/// Lexicographic comparison of index lists of equal degree.
bool lex_less(Mask a, Mask b);

template <class C>
class Exterior {
 public:
  using Terms = std::map<Mask, C>;
  using coeff_type = C;

  Exterior() = default;
  explicit Exterior(int dim) : dim_(dim) {
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("dimension out of range");
  }

  static Exterior constant(int dim, const C& c) {
    Exterior a(dim);
    a.add(0, c);
    return a;
  }
  static Exterior from_mask(int dim, Mask m, const C& c = C(1)) {
    Exterior a(dim);
    if (m >> dim) throw std::invalid_argument("blade index exceeds dimension");
    a.add(m, c);
    return a;
  }
  /// e^{i_1} ^ ... ^ e^{i_k} for an arbitrary (possibly unsorted) index list.
  static Exterior blade(int dim, std::vector<int> idx, const C& c = C(1)) {
    for (int i : idx)
      if (i < 1 || i > dim) throw std::invalid_argument("blade index out of range");
    int s = sort_with_sign(idx);
    Exterior a(dim);
    if (s != 0) a.add(mask_of(idx), s > 0 ? c : C(-c));
    return a;
  }

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add(Mask m, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  Exterior& operator+=(const Exterior& o) {
    require_same_dim(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Exterior& operator-=(const Exterior& o) {
    require_same_dim(o);
    for (const auto& [m, c] : o.terms_) add(m, C(-c));
    return *this;
  }
  friend Exterior operator+(Exterior a, const Exterior& b) { return a += b; }
  friend Exterior operator-(Exterior a, const Exterior& b) { return a -= b; }
  friend Exterior operator-(Exterior a) {
    for (auto& [m, c] : a.terms_) c = C(-c);
    return a;
  }
  friend Exterior operator*(const C& s, const Exterior& a) {
    Exterior out(a.dim_);
    for (const auto& [m, c] : a.terms_) out.add(m, s * c);
    return out;
  }
  friend bool operator==(const Exterior& a, const Exterior& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// Coefficient-wise map; f(c) must return a C.
  template <class F>
  Exterior map(F&& f) const {
    Exterior out(dim_);
    for (const auto& [m, c] : terms_) out.add(m, f(c));
    return out;
  }

  Exterior degree_part(int k) const {
    Exterior out(dim_);
    for (const auto& [m, c] : terms_)
      if (degree_of(m) == k) out.terms_.emplace(m, c);
    return out;
  }

  /// Form degree if all blades share one; nullopt for zero or mixed forms.
  std::optional<int> form_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      if (d && *d != degree_of(m)) return std::nullopt;
      d = degree_of(m);
    }
    return d;
  }

  void require_same_dim(const Exterior& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  }

 private:
  int dim_ = 0;
  Terms terms_;
};

template <class C>
Exterior<C> wedge(const Exterior<C>& a, const Exterior<C>& b) {
  a.require_same_dim(b);
  Exterior<C> out(a.dim());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      C c = ca * cb;
      out.add(ma | mb, s > 0 ? c : C(-c));
    }
  return out;
}

/// The contraction alpha(e_i, ...).
template <class C>
Exterior<C> insert_first(int index, const Exterior<C>& a) {
  if (index < 1 || index > a.dim()) throw std::invalid_argument("insert_first: index out of range");
  Exterior<C> out(a.dim());
  for (const auto& [m, c] : a.terms()) {
    if (!has_index(m, index)) continue;
    out.add(m ^ bit_of(index), first_slot_sign(m, index) > 0 ? c : C(-c));
  }
  return out;
}

/// The contraction alpha(v, ...) for a coefficient vector v = sum v^i e_i.
template <class C>
Exterior<C> insert_first(const std::vector<C>& v, const Exterior<C>& a) {
  if (static_cast<int>(v.size()) != a.dim()) throw std::invalid_argument("insert_first: dimension mismatch");
  Exterior<C> out(a.dim());
  for (int i = 1; i <= a.dim(); ++i)
    if (!coeff_is_zero(v[i - 1])) out += v[i - 1] * insert_first(i, a);
  return out;
}

/// The contraction alpha(..., e_i).
template <class C>
Exterior<C> insert_last(const Exterior<C>& a, int index) {
  if (index < 1 || index > a.dim()) throw std::invalid_argument("insert_last: index out of range");
  Exterior<C> out(a.dim());
  for (const auto& [m, c] : a.terms()) {
    if (!has_index(m, index)) continue;
    out.add(m ^ bit_of(index), last_slot_sign(m, index) > 0 ? c : C(-c));
  }
  return out;
}

/// m(exp(L_W)(a (x) b)) where L_W(a (x) b) = sum_ij W^{ij} (a with e_i in its
/// last slot) (x) (b with e_j in its first slot). The series stops on its own
/// since every application lowers both degrees. W need not be antisymmetric.
template <class C>
Exterior<C> deformed_product(const Exterior<C>& a, const Exterior<C>& b, const Matrix<C>& W) {
  a.require_same_dim(b);
  const int n = a.dim();
  if (W.rows() != n || W.cols() != n) throw std::invalid_argument("coupling matrix dimension mismatch");
  struct Coupling {
    int i, j;
    C w;
  };
  std::vector<Coupling> nz;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!coeff_is_zero(W(i - 1, j - 1))) nz.push_back({i, j, W(i - 1, j - 1)});

  using Key = std::pair<Mask, Mask>;
  std::map<Key, C> layer;
  auto accumulate = [](std::map<Key, C>& into, const Key& k, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = into.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) into.erase(it);
    }
  };
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) accumulate(layer, {ma, mb}, ca * cb);

  Exterior<C> out(n);
  for (int order = 1; !layer.empty(); ++order) {
    for (const auto& [k, c] : layer) {
      int s = wedge_sign(k.first, k.second);
      if (s != 0) out.add(k.first | k.second, s > 0 ? c : C(-c));
    }
    if (nz.empty()) break;
    std::map<Key, C> next;
    const C inv_order(Rational(1, order));
    for (const auto& [k, c] : layer)
      for (const auto& cp : nz) {
        if (!has_index(k.first, cp.i) || !has_index(k.second, cp.j)) continue;
        int s = last_slot_sign(k.first, cp.i) * first_slot_sign(k.second, cp.j);
        C term = c * cp.w * inv_order;
        accumulate(next, {k.first ^ bit_of(cp.i), k.second ^ bit_of(cp.j)}, s > 0 ? term : C(-term));
      }
    layer = std::move(next);
  }
  return out;
}

/// iota_W alpha = sum_{i<j} W^{ij} alpha(e_i, e_j, ...).
template <class C>
Exterior<C> contract_bivector(const Matrix<C>& W, const Exterior<C>& a) {
  const int n = a.dim();
  if (W.rows() != n || W.cols() != n) throw std::invalid_argument("bivector dimension mismatch");
  Exterior<C> out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (coeff_is_zero(W(i - 1, j - 1))) continue;
      out += W(i - 1, j - 1) * insert_first(j, insert_first(i, a));
    }
  return out;
}

/// Terms ordered for display: form degree descending, then index lists
/// lexicographically.
template <class C>
std::vector<std::pair<Mask, C>> display_terms(const Exterior<C>& a) {
  std::vector<std::pair<Mask, C>> out(a.terms().begin(), a.terms().end());
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (degree_of(x.first) != degree_of(y.first)) return degree_of(x.first) > degree_of(y.first);
    return lex_less(x.first, y.first);
  });
  return out;
}

}  // namespace qdr
