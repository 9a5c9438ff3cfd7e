#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hqg/errors.hpp"
#include "hqg/scalar.hpp"

namespace hqg {

/// A based finite-dimensional space. Cheap to copy; the basis is shared.
class Obj {
 public:
  Obj(std::string name, std::vector<std::string> basis) {
    if (basis.empty()) throw ShapeError("object \"" + name + "\" has an empty basis");
    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->basis = std::move(basis);
    for (std::uint32_t i = 0; i < d->basis.size(); ++i) {
      if (!d->index.emplace(d->basis[i], i).second)
        throw ShapeError("object \"" + d->name + "\" repeats basis label \"" + d->basis[i] + "\"");
    }
    data_ = std::move(d);
  }

  /// The monoidal unit K: dimension 1, basis ["1"].
  static Obj unit() {
    static const Obj k("I", {"1"});
    return k;
  }

  const std::string& name() const { return data_->name; }
  const std::vector<std::string>& basis() const { return data_->basis; }
  std::size_t dim() const { return data_->basis.size(); }
  const std::string& label(std::size_t i) const { return data_->basis.at(i); }
  bool is_unit() const { return *this == unit(); }

  std::optional<std::uint32_t> index_of(std::string_view label) const {
    auto it = data_->index.find(std::string(label));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const Obj& a, const Obj& b) {
    return a.data_ == b.data_ || (a.data_->name == b.data_->name && a.data_->basis == b.data_->basis);
  }

 private:
  struct Data {
    std::string name;
    std::vector<std::string> basis;
    std::unordered_map<std::string, std::uint32_t> index;
  };
  std::shared_ptr<const Data> data_;
};

/// An ordered list of tensor factors; the empty list is K.
using Factors = std::vector<Obj>;

/// One basis index per tensor factor.
using MultiIndex = boost::container::small_vector<std::uint32_t, 6>;

/// Drops unit factors, so K⊗M = M = M⊗K hold on the nose.
inline Factors normalize(Factors fs) {
  std::erase_if(fs, [](const Obj& o) { return o.is_unit(); });
  return fs;
}

inline Factors concat(const Factors& a, const Factors& b) {
  Factors out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline std::string describe(const Factors& fs) {
  if (fs.empty()) return "I";
  std::string s;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += "⊗";
    s += fs[i].name();
  }
  return s;
}

inline std::size_t total_dim(const Factors& fs) {
  std::size_t n = 1;
  for (const auto& f : fs) n *= f.dim();
  return n;
}

inline std::vector<std::string> labels_of(const Factors& fs, const MultiIndex& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out.push_back(fs.at(i).label(idx[i]));
  return out;
}

inline std::string label_text(const Factors& fs, const MultiIndex& idx) {
  if (idx.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += "⊗";
    s += fs.at(i).label(idx[i]);
  }
  return s;
}

/// Calls fn(idx) for every basis multi-index of fs, lexicographically.
template <class Fn>
void for_each_index(const Factors& fs, Fn&& fn) {
  MultiIndex idx(fs.size(), 0);
  while (true) {
    fn(static_cast<const MultiIndex&>(idx));
    std::size_t k = fs.size();
    while (k > 0) {
      --k;
      if (++idx[k] < fs[k].dim()) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (fs.empty()) return;
  }
}

/// A sparse exact vector; no stored coefficient is zero.
class Vec {
 public:
  using Terms = std::map<MultiIndex, Scalar>;

  Vec() = default;
  static Vec basis(const MultiIndex& idx, FieldSpec f) {
    Vec v;
    v.terms_.emplace(idx, Scalar::one(f));
    return v;
  }

  void add(const MultiIndex& idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_scaled(const Vec& v, const Scalar& c) {
    for (const auto& [idx, x] : v.terms_) add(idx, x * c);
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const Terms& terms() const { return terms_; }

  Scalar coeff(const MultiIndex& idx, FieldSpec f) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Scalar::zero(f) : it->second;
  }

  /// e.g. "2*x⊗y - w⊗1", or "0".
  std::string to_string(const Factors& fs) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
      std::string cs = c.to_string();
      bool neg = c.field().is_rational() && c.value() < 0;
      if (neg) cs = (-c).to_string();
      if (!first) s += neg ? " - " : " + ";
      else if (neg) s += "-";
      first = false;
      if (idx.empty()) s += cs;  // scalar-valued: no basis label
      else s += (cs != "1" ? cs + "*" : "") + label_text(fs, idx);
    }
    return s;
  }

  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  Terms terms_;
};

/// Kronecker product of two vectors (index concatenation).
inline Vec kron(const Vec& a, const Vec& b) {
  Vec out;
  for (const auto& [ia, ca] : a)
    for (const auto& [ib, cb] : b) {
      MultiIndex idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add(idx, ca * cb);
    }
  return out;
}

inline void check_index(const Factors& fs, const MultiIndex& idx, const char* what) {
  if (idx.size() != fs.size())
    throw ShapeError(std::string(what) + " index arity " + std::to_string(idx.size()) + " does not match " +
                     describe(fs) + " (arity " + std::to_string(fs.size()) + ")");
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (idx[i] >= fs[i].dim())
      throw ShapeError(std::string(what) + " index " + std::to_string(idx[i]) + " out of range for " +
                       fs[i].name());
}

/// A sparse linear map between tensor products of based spaces, stored
/// column by column (domain basis multi-index -> image vector).
class LinMap {
 public:
  LinMap(Factors domain, Factors codomain, FieldSpec field)
      : dom_(normalize(std::move(domain))), cod_(normalize(std::move(codomain))), field_(field) {}

  static LinMap identity(const Factors& objs, FieldSpec field) {
    LinMap m(objs, objs, field);
    for_each_index(m.dom_, [&](const MultiIndex& i) { m.cols_[i] = Vec::basis(i, field); });
    return m;
  }

  static LinMap zero(const Factors& dom, const Factors& cod, FieldSpec field) { return LinMap(dom, cod, field); }

  const Factors& domain() const { return dom_; }
  const Factors& codomain() const { return cod_; }
  const FieldSpec& field() const { return field_; }

  void add_entry(const MultiIndex& in, const MultiIndex& out, const Scalar& c) {
    check_index(dom_, in, "domain");
    check_index(cod_, out, "codomain");
    if (!(c.field() == field_)) throw FieldError("coefficient field does not match the map's field");
    auto& col = cols_[in];
    col.add(out, c);
    if (col.empty()) cols_.erase(in);
  }

  void set_column(const MultiIndex& in, Vec v) {
    check_index(dom_, in, "domain");
    if (v.empty()) cols_.erase(in);
    else cols_[in] = std::move(v);
  }

  const Vec& column(const MultiIndex& in) const {
    static const Vec empty;
    auto it = cols_.find(in);
    return it == cols_.end() ? empty : it->second;
  }

  const std::map<MultiIndex, Vec>& columns() const { return cols_; }

  std::size_t entry_count() const {
    std::size_t n = 0;
    for (const auto& [_, v] : cols_) n += v.size();
    return n;
  }

  friend bool operator==(const LinMap& a, const LinMap& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.cols_ == b.cols_;
  }

 private:
  Factors dom_, cod_;
  FieldSpec field_;
  std::map<MultiIndex, Vec> cols_;
};

inline void check_vec(const Factors& fs, const Vec& v) {
  for (const auto& [idx, _] : v) check_index(fs, idx, "vector");
}

inline Vec lin_apply(const LinMap& f, const Vec& v) {
  check_vec(f.domain(), v);
  Vec out;
  for (const auto& [idx, c] : v) out.add_scaled(f.column(idx), c);
  return out;
}

/// f ∘ g (g applied first), one column of g at a time.
inline LinMap lin_compose(const LinMap& f, const LinMap& g) {
  if (!(f.domain() == g.codomain()))
    throw ShapeError("cannot compose: codomain " + describe(g.codomain()) + " of the right map vs domain " +
                     describe(f.domain()) + " of the left map");
  LinMap out(g.domain(), f.codomain(), f.field());
  for (const auto& [idx, col] : g.columns()) out.set_column(idx, lin_apply(f, col));
  return out;
}

inline LinMap lin_tensor(const LinMap& f, const LinMap& g) {
  LinMap out(concat(f.domain(), g.domain()), concat(f.codomain(), g.codomain()), f.field());
  for (const auto& [i, fc] : f.columns())
    for (const auto& [j, gc] : g.columns()) {
      MultiIndex idx = i;
      idx.insert(idx.end(), j.begin(), j.end());
      out.set_column(idx, kron(fc, gc));
    }
  return out;
}

inline void check_permutation(std::span<const std::size_t> perm, std::size_t n) {
  if (perm.size() != n) throw ShapeError("permutation length does not match the number of factors");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw ShapeError("invalid permutation of tensor factors");
    seen[p] = true;
  }
}

/// Factor k of the output is factor perm[k] of the input.
inline MultiIndex permute_index(const MultiIndex& idx, std::span<const std::size_t> perm) {
  MultiIndex out(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out[k] = idx[perm[k]];
  return out;
}

inline LinMap perm_map(const Factors& objs, std::span<const std::size_t> perm, FieldSpec field) {
  Factors fs = normalize(objs);
  check_permutation(perm, fs.size());
  Factors cod;
  for (auto p : perm) cod.push_back(fs[p]);
  LinMap out(fs, cod, field);
  for_each_index(fs, [&](const MultiIndex& i) { out.set_column(i, Vec::basis(permute_index(i, perm), field)); });
  return out;
}

/// Merges runs of consecutive factors into single product objects whose
/// basis is the lexicographic product basis. `groups[k]` is the number of
/// old factors merged into `merged[k]`.
inline MultiIndex fuse_index(const MultiIndex& idx, const Factors& old, std::span<const std::size_t> groups) {
  MultiIndex out;
  std::size_t pos = 0;
  for (auto g : groups) {
    std::uint32_t flat = 0;
    for (std::size_t j = 0; j < g; ++j, ++pos) flat = flat * static_cast<std::uint32_t>(old[pos].dim()) + idx[pos];
    out.push_back(flat);
  }
  return out;
}

inline void check_groups(const Factors& old, std::span<const std::size_t> groups, const Factors& merged) {
  if (groups.size() != merged.size() || std::accumulate(groups.begin(), groups.end(), std::size_t{0}) != old.size())
    throw ShapeError("factor regrouping does not cover " + describe(old));
  std::size_t pos = 0;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    std::size_t d = 1;
    for (std::size_t j = 0; j < groups[k]; ++j) d *= old[pos++].dim();
    if (d != merged[k].dim()) throw ShapeError("merged object " + merged[k].name() + " has the wrong dimension");
  }
}

inline LinMap regroup(const LinMap& f, std::span<const std::size_t> dom_groups, const Factors& new_dom,
                      std::span<const std::size_t> cod_groups, const Factors& new_cod) {
  check_groups(f.domain(), dom_groups, new_dom);
  check_groups(f.codomain(), cod_groups, new_cod);
  LinMap out(new_dom, new_cod, f.field());
  for (const auto& [i, col] : f.columns()) {
    Vec v;
    for (const auto& [o, c] : col) v.add(fuse_index(o, f.codomain(), cod_groups), c);
    out.set_column(fuse_index(i, f.domain(), dom_groups), std::move(v));
  }
  return out;
}

/// The object on a⊗b with lexicographic product basis (labels "p⊗q").
inline Obj product_object(const Obj& a, const Obj& b) {
  std::vector<std::string> basis;
  basis.reserve(a.dim() * b.dim());
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) basis.push_back(x + "⊗" + y);
  return Obj(a.name() + "⊗" + b.name(), std::move(basis));
}

}  // namespace hqg
