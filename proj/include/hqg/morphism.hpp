#pragma once

// The strict symmetric monoidal layer over based spaces.
//
// A Morphism is an immutable expression tree (leaf maps, identities,
// factor permutations, composites, tensor products) evaluated by applying
// it to sparse vectors. Nothing is materialized unless asked.
//
//   f * g    tensor product f ⊗ g
//   f << g   composite f ∘ g (g applied first)
//
// `*` binds tighter than `<<`, matching the usual reading of ⊗ and ∘.

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hqg/linsolve.hpp"
#include "hqg/tensor.hpp"

namespace hqg {

class Morphism {
 public:
  static Morphism identity(const Factors& objs, FieldSpec field) {
    Factors fs = normalize(objs);
    return Morphism(std::make_shared<Node>(Node{fs, fs, field, IdNode{}}));
  }

  static Morphism leaf(std::shared_ptr<const LinMap> m) {
    Factors d = m->domain(), c = m->codomain();
    FieldSpec f = m->field();
    return Morphism(std::make_shared<Node>(Node{std::move(d), std::move(c), f, LeafNode{std::move(m)}}));
  }
  static Morphism leaf(LinMap m) { return leaf(std::make_shared<const LinMap>(std::move(m))); }

  /// Output factor k is input factor perm[k].
  static Morphism permutation(const Factors& objs, std::vector<std::size_t> perm, FieldSpec field) {
    Factors fs = normalize(objs);
    check_permutation(perm, fs.size());
    Factors cod;
    for (auto p : perm) cod.push_back(fs[p]);
    return Morphism(std::make_shared<Node>(Node{fs, std::move(cod), field, PermNode{std::move(perm)}}));
  }

  const Factors& domain() const { return node_->dom; }
  const Factors& codomain() const { return node_->cod; }
  const FieldSpec& field() const { return node_->field; }

  /// The stored map when this node is a leaf.
  const LinMap* as_leaf() const {
    if (auto* l = std::get_if<LeafNode>(&node_->kind)) return l->map.get();
    return nullptr;
  }

  Vec apply(const Vec& v) const {
    Vec out;
    for (const auto& [idx, c] : v) {
      if (c.is_one()) add_basis_image(out, idx);
      else {
        Vec img;
        add_basis_image(img, idx);
        out.add_scaled(img, c);
      }
    }
    return out;
  }

  Vec apply_basis(const MultiIndex& idx) const {
    Vec out;
    add_basis_image(out, idx);
    return out;
  }

  LinMap materialize() const {
    if (auto* m = as_leaf()) return *m;
    LinMap out(domain(), codomain(), field());
    for_each_index(domain(), [&](const MultiIndex& i) { out.set_column(i, apply_basis(i)); });
    return out;
  }

  friend Morphism operator*(const Morphism& f, const Morphism& g) {
    if (!(f.field() == g.field())) throw FieldError("tensor of morphisms over different fields");
    std::vector<Morphism> parts;
    auto push = [&](const Morphism& m) {
      if (m.domain().empty() && m.codomain().empty() && std::holds_alternative<IdNode>(m.node_->kind)) return;
      if (auto* t = std::get_if<TensorNode>(&m.node_->kind)) parts.insert(parts.end(), t->parts.begin(), t->parts.end());
      else parts.push_back(m);
    };
    push(f);
    push(g);
    if (parts.empty()) return identity({}, f.field());
    if (parts.size() == 1) return parts.front();
    Factors d, c;
    for (const auto& p : parts) {
      d = concat(d, p.domain());
      c = concat(c, p.codomain());
    }
    return Morphism(std::make_shared<Node>(Node{std::move(d), std::move(c), f.field(), TensorNode{std::move(parts)}}));
  }

  friend Morphism operator<<(const Morphism& f, const Morphism& g) {
    if (!(f.domain() == g.codomain()))
      throw ShapeError("cannot compose: codomain " + describe(g.codomain()) + " of the right morphism vs domain " +
                       describe(f.domain()) + " of the left morphism");
    if (!(f.field() == g.field())) throw FieldError("composite of morphisms over different fields");
    if (std::holds_alternative<IdNode>(f.node_->kind)) return g;
    if (std::holds_alternative<IdNode>(g.node_->kind)) return f;
    std::vector<Morphism> chain;  // first element applied last
    auto push = [&](const Morphism& m) {
      if (auto* c = std::get_if<ComposeNode>(&m.node_->kind)) chain.insert(chain.end(), c->chain.begin(), c->chain.end());
      else chain.push_back(m);
    };
    push(f);
    push(g);
    return Morphism(std::make_shared<Node>(Node{g.domain(), f.codomain(), f.field(), ComposeNode{std::move(chain)}}));
  }

 private:
  struct IdNode {};
  struct LeafNode {
    std::shared_ptr<const LinMap> map;
  };
  struct PermNode {
    std::vector<std::size_t> perm;
  };
  struct ComposeNode {
    std::vector<Morphism> chain;
  };
  struct TensorNode {
    std::vector<Morphism> parts;
  };
  struct Node {
    Factors dom, cod;
    FieldSpec field;
    std::variant<IdNode, LeafNode, PermNode, ComposeNode, TensorNode> kind;
  };

  explicit Morphism(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  void add_basis_image(Vec& out, const MultiIndex& idx) const {
    const Node& n = *node_;
    if (idx.size() != n.dom.size())
      throw ShapeError("index arity " + std::to_string(idx.size()) + " does not match " + describe(n.dom));
    Scalar one = Scalar::one(n.field);
    std::visit(
        [&](const auto& k) {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, IdNode>) {
            out.add(idx, one);
          } else if constexpr (std::is_same_v<K, LeafNode>) {
            out.add_scaled(k.map->column(idx), one);
          } else if constexpr (std::is_same_v<K, PermNode>) {
            out.add(permute_index(idx, k.perm), one);
          } else if constexpr (std::is_same_v<K, ComposeNode>) {
            Vec v = Vec::basis(idx, n.field);
            for (auto it = k.chain.rbegin(); it != k.chain.rend(); ++it) {
              v = it->apply(v);
              if (v.empty()) return;
            }
            out.add_scaled(v, one);
          } else {
            Vec acc = Vec::basis(MultiIndex{}, n.field);
            std::size_t pos = 0;
            for (const auto& part : k.parts) {
              std::size_t ar = part.domain().size();
              MultiIndex sub(idx.begin() + static_cast<std::ptrdiff_t>(pos),
                             idx.begin() + static_cast<std::ptrdiff_t>(pos + ar));
              pos += ar;
              Vec img = part.apply_basis(sub);
              if (img.empty()) return;
              acc = kron(acc, img);
            }
            out.add_scaled(acc, one);
          }
        },
        n.kind);
  }

  std::shared_ptr<const Node> node_;
};

/// c_{M,N}: M⊗N → N⊗M, e_i⊗e_j ↦ e_j⊗e_i (M, N may themselves be tensor products).
inline Morphism braid(const Factors& m, const Factors& n, FieldSpec field) {
  Factors mm = normalize(m), nn = normalize(n);
  std::vector<std::size_t> perm;
  for (std::size_t j = 0; j < nn.size(); ++j) perm.push_back(mm.size() + j);
  for (std::size_t i = 0; i < mm.size(); ++i) perm.push_back(i);
  return Morphism::permutation(concat(mm, nn), std::move(perm), field);
}

inline Morphism braid(const Obj& m, const Obj& n, FieldSpec field) { return braid(Factors{m}, Factors{n}, field); }

inline LinMap braiding(const Obj& m, const Obj& n, FieldSpec field) { return braid(m, n, field).materialize(); }

inline Morphism id(const Factors& objs, FieldSpec field) { return Morphism::identity(objs, field); }
inline Morphism id(const Obj& o, FieldSpec field) { return Morphism::identity({o}, field); }

/// f ∗ g = μ_A ∘ (f ⊗ g) ∘ δ_B.
inline Morphism convolution(const Morphism& f, const Morphism& g, const Morphism& delta_b, const Morphism& mu_a) {
  return mu_a << (f * g) << delta_b;
}

inline LinMap convolution(const LinMap& f, const LinMap& g, const LinMap& delta_b, const LinMap& mu_a) {
  return convolution(Morphism::leaf(f), Morphism::leaf(g), Morphism::leaf(delta_b), Morphism::leaf(mu_a))
      .materialize();
}

/// Why a convolution inverse does not exist.
class NotInvertible : public std::runtime_error {
 public:
  enum class Reason { NoSolution, SidesDiffer, NotUnique };
  NotInvertible(Reason r, const std::string& what) : std::runtime_error(what), reason_(r) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

namespace detail {

// Unknown (j, k) is the coefficient of e_k in g(e_j).
struct InverseSystem {
  std::vector<MultiIndex> dom_basis, cod_basis;
  std::map<MultiIndex, std::size_t> dom_pos, cod_pos;
  std::size_t unknown(std::size_t j, std::size_t k) const { return j * cod_basis.size() + k; }
};

inline void add_convolution_equations(SparseSystem& sys, const InverseSystem& is, const Morphism& f,
                                      const Morphism& delta_b, const Morphism& mu_a, const Morphism& unit,
                                      bool f_on_left, FieldSpec field) {
  Morphism id_a = Morphism::identity(f.codomain(), field);
  std::size_t nb = f.domain().size(), na = f.codomain().size();
  for (std::size_t b = 0; b < is.dom_basis.size(); ++b) {
    std::map<std::size_t, SparseSystem::Row> rows;  // output position -> row
    Vec split = delta_b.apply_basis(is.dom_basis[b]);
    for (const auto& [pair, c] : split) {
      MultiIndex left(pair.begin(), pair.begin() + static_cast<std::ptrdiff_t>(nb));
      MultiIndex right(pair.begin() + static_cast<std::ptrdiff_t>(nb), pair.end());
      const MultiIndex& fixed = f_on_left ? left : right;
      const MultiIndex& free = f_on_left ? right : left;
      Vec fv = f.apply_basis(fixed);
      std::size_t j = is.dom_pos.at(free);
      for (std::size_t k = 0; k < is.cod_basis.size(); ++k) {
        Vec ek = Vec::basis(is.cod_basis[k], field);
        Vec arg = f_on_left ? kron(fv, ek) : kron(ek, fv);
        Vec prod = mu_a.apply(arg);
        for (const auto& [o, x] : prod) {
          auto& row = rows[is.cod_pos.at(o)];
          auto [it, inserted] = row.try_emplace(is.unknown(j, k), Scalar::zero(field));
          it->second += c * x;
        }
      }
    }
    Vec target = unit.apply_basis(is.dom_basis[b]);
    for (std::size_t o = 0; o < is.cod_basis.size(); ++o) {
      auto it = rows.find(o);
      SparseSystem::Row row = it == rows.end() ? SparseSystem::Row{} : std::move(it->second);
      sys.add_equation(std::move(row), target.coeff(is.cod_basis[o], field));
    }
    (void)na;
  }
}

}  // namespace detail

/// Solves f ∗ g = g ∗ f = η_A ∘ ε_B exactly. Throws NotInvertible when no
/// unique two-sided solution exists; the reason distinguishes a missing
/// solution from one-sided solutions that disagree.
inline LinMap convolution_inverse(const Morphism& f, const Morphism& delta_b, const Morphism& eps_b,
                                  const Morphism& mu_a, const Morphism& eta_a) {
  FieldSpec field = f.field();
  detail::InverseSystem is;
  for_each_index(f.domain(), [&](const MultiIndex& i) {
    is.dom_pos.emplace(i, is.dom_basis.size());
    is.dom_basis.push_back(i);
  });
  for_each_index(f.codomain(), [&](const MultiIndex& i) {
    is.cod_pos.emplace(i, is.cod_basis.size());
    is.cod_basis.push_back(i);
  });
  std::size_t n = is.dom_basis.size() * is.cod_basis.size();
  Morphism unit = eta_a << eps_b;

  auto solve = [&](bool right, bool left) {
    detail::SparseSystem sys(n, field);
    if (right) detail::add_convolution_equations(sys, is, f, delta_b, mu_a, unit, true, field);
    if (left) detail::add_convolution_equations(sys, is, f, delta_b, mu_a, unit, false, field);
    return sys;
  };

  detail::SparseSystem both = solve(true, true);
  if (!both.consistent()) {
    detail::SparseSystem r = solve(true, false), l = solve(false, true);
    if (r.consistent() && l.consistent())
      throw NotInvertible(NotInvertible::Reason::SidesDiffer,
                          "one-sided convolution inverses exist but no two-sided inverse does");
    throw NotInvertible(NotInvertible::Reason::NoSolution, "no convolution inverse exists");
  }
  if (!both.unique()) throw NotInvertible(NotInvertible::Reason::NotUnique, "the convolution inverse is not unique");

  std::vector<Scalar> x = both.solution();
  LinMap g(f.domain(), f.codomain(), field);
  for (std::size_t j = 0; j < is.dom_basis.size(); ++j)
    for (std::size_t k = 0; k < is.cod_basis.size(); ++k)
      if (!x[is.unknown(j, k)].is_zero()) g.add_entry(is.dom_basis[j], is.cod_basis[k], x[is.unknown(j, k)]);
  return g;
}

inline LinMap convolution_inverse(const LinMap& f, const LinMap& delta_b, const LinMap& eps_b, const LinMap& mu_a,
                                  const LinMap& eta_a) {
  return convolution_inverse(Morphism::leaf(f), Morphism::leaf(delta_b), Morphism::leaf(eps_b),
                             Morphism::leaf(mu_a), Morphism::leaf(eta_a));
}

/// Whether a square map is bijective (exact rank computation).
inline bool is_invertible(const LinMap& f) {
  if (total_dim(f.domain()) != total_dim(f.codomain())) return false;
  std::map<MultiIndex, std::size_t> pos;
  std::size_t n = 0;
  for_each_index(f.codomain(), [&](const MultiIndex& i) { pos.emplace(i, n++); });
  std::size_t m = 0;
  detail::SparseSystem sys(n, f.field());
  for_each_index(f.domain(), [&](const MultiIndex& i) {
    detail::SparseSystem::Row row;
    for (const auto& [o, c] : f.column(i)) row.emplace(pos.at(o), c);
    sys.add_equation(std::move(row), Scalar::zero(f.field()));
    ++m;
  });
  return sys.rank() == n;
}

}  // namespace hqg
