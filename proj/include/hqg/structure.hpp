#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hqg/morphism.hpp"

namespace hqg {

/// Structure constants (η, μ, ε, δ, λ) on one based space.
///
/// Only shapes are validated here; the axioms are checker results.
class HopfQuasigroupData {
 public:
  HopfQuasigroupData(Obj obj, FieldSpec field, LinMap eta, LinMap mu, LinMap eps, LinMap delta, LinMap lambda)
      : obj_(std::move(obj)), field_(field) {
    Factors a = normalize({obj_}), aa = normalize({obj_, obj_});
    expect(eta, {}, a, "eta");
    expect(mu, aa, a, "mu");
    expect(eps, a, {}, "eps");
    expect(delta, a, aa, "delta");
    expect(lambda, a, a, "lambda");
    eta_ = Morphism::leaf(std::move(eta));
    mu_ = Morphism::leaf(std::move(mu));
    eps_ = Morphism::leaf(std::move(eps));
    delta_ = Morphism::leaf(std::move(delta));
    lambda_ = Morphism::leaf(std::move(lambda));
  }

  const Obj& obj() const { return obj_; }
  const FieldSpec& field() const { return field_; }
  /// The object as a factor list (empty for K).
  Factors factors() const { return normalize({obj_}); }

  const Morphism& eta() const { return eta_; }
  const Morphism& mu() const { return mu_; }
  const Morphism& eps() const { return eps_; }
  const Morphism& delta() const { return delta_; }
  const Morphism& lam() const { return lambda_; }
  Morphism id() const { return Morphism::identity(factors(), field_); }

  const LinMap& eta_map() const { return *eta_.as_leaf(); }
  const LinMap& mu_map() const { return *mu_.as_leaf(); }
  const LinMap& eps_map() const { return *eps_.as_leaf(); }
  const LinMap& delta_map() const { return *delta_.as_leaf(); }
  const LinMap& lambda_map() const { return *lambda_.as_leaf(); }

  HopfQuasigroupData with_eta(LinMap m) const { return {obj_, field_, std::move(m), mu_map(), eps_map(), delta_map(), lambda_map()}; }
  HopfQuasigroupData with_mu(LinMap m) const { return {obj_, field_, eta_map(), std::move(m), eps_map(), delta_map(), lambda_map()}; }
  HopfQuasigroupData with_eps(LinMap m) const { return {obj_, field_, eta_map(), mu_map(), std::move(m), delta_map(), lambda_map()}; }
  HopfQuasigroupData with_delta(LinMap m) const { return {obj_, field_, eta_map(), mu_map(), eps_map(), std::move(m), lambda_map()}; }
  HopfQuasigroupData with_lambda(LinMap m) const { return {obj_, field_, eta_map(), mu_map(), eps_map(), delta_map(), std::move(m)}; }

  /// A^op: product μ ∘ c.
  HopfQuasigroupData op() const {
    return with_mu((mu_ << braid(obj_, obj_, field_)).materialize());
  }
  /// D^cop: coproduct c ∘ δ.
  HopfQuasigroupData cop() const {
    return with_delta((braid(obj_, obj_, field_) << delta_).materialize());
  }

  /// Exact equality of all structure constants (and of the object).
  friend bool operator==(const HopfQuasigroupData& x, const HopfQuasigroupData& y) {
    return x.obj_ == y.obj_ && x.field_ == y.field_ && x.eta_map() == y.eta_map() && x.mu_map() == y.mu_map() &&
           x.eps_map() == y.eps_map() && x.delta_map() == y.delta_map() && x.lambda_map() == y.lambda_map();
  }

 private:
  static void expect(const LinMap& m, const Factors& d, const Factors& c, const char* what) {
    if (!(m.domain() == d) || !(m.codomain() == c))
      throw ShapeError(std::string(what) + " must map " + describe(d) + " -> " + describe(c) + ", got " +
                       describe(m.domain()) + " -> " + describe(m.codomain()));
  }

  Obj obj_;
  FieldSpec field_;
  Morphism eta_ = Morphism::identity({}, {});
  Morphism mu_ = eta_, eps_ = eta_, delta_ = eta_, lambda_ = eta_;
};

/// Structure maps of a tensor product of two structures, assembled from
/// braidings: η⊗η, μ_{A⊗B} = (μ_A⊗μ_B)∘(A⊗c_{B,A}⊗B), ε⊗ε,
/// δ_{A⊗B} = (A⊗c_{A,B}⊗B)∘(δ_A⊗δ_B), λ⊗λ.
namespace tensor_ops {

inline Morphism eta(const HopfQuasigroupData& a, const HopfQuasigroupData& b) { return a.eta() * b.eta(); }
inline Morphism eps(const HopfQuasigroupData& a, const HopfQuasigroupData& b) { return a.eps() * b.eps(); }
inline Morphism lam(const HopfQuasigroupData& a, const HopfQuasigroupData& b) { return a.lam() * b.lam(); }

inline Morphism mu(const HopfQuasigroupData& a, const HopfQuasigroupData& b) {
  FieldSpec f = a.field();
  return (a.mu() * b.mu()) << (a.id() * braid(b.factors(), a.factors(), f) * b.id());
}

inline Morphism delta(const HopfQuasigroupData& a, const HopfQuasigroupData& b) {
  FieldSpec f = a.field();
  return (a.id() * braid(a.factors(), b.factors(), f) * b.id()) << (a.delta() * b.delta());
}

}  // namespace tensor_ops

/// A named identity between two morphisms with the same type.
struct Equation {
  std::string tag;
  Morphism lhs;
  Morphism rhs;
};

struct Witness {
  MultiIndex input;
  std::vector<std::string> input_labels;
  Vec lhs, rhs;
  std::string lhs_text, rhs_text;
};

struct EquationResult {
  std::string tag;
  bool pass = false;
  std::optional<Witness> witness;  // present iff !pass
  std::string note;                // set when the sides could not even be compared
};

struct Flag {
  std::string name;
  bool value;
};

struct AxiomReport {
  std::string subject;
  std::vector<EquationResult> results;
  std::vector<Flag> flags;

  bool passed() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }

  const EquationResult* find(std::string_view tag) const {
    for (const auto& r : results)
      if (r.tag == tag) return &r;
    return nullptr;
  }

  const EquationResult* first_failure() const {
    for (const auto& r : results)
      if (!r.pass) return &r;
    return nullptr;
  }

  std::optional<bool> flag(std::string_view name) const {
    for (const auto& f : flags)
      if (f.name == name) return f.value;
    return std::nullopt;
  }

  void append(const AxiomReport& other) {
    results.insert(results.end(), other.results.begin(), other.results.end());
    flags.insert(flags.end(), other.flags.begin(), other.flags.end());
  }
};

/// Compares both sides column by column and records the first differing
/// domain basis multi-index.
inline EquationResult check_equation(const Equation& eq) {
  EquationResult r{eq.tag, true, std::nullopt, {}};
  if (!(eq.lhs.domain() == eq.rhs.domain()) || !(eq.lhs.codomain() == eq.rhs.codomain())) {
    r.pass = false;
    r.note = "sides have different types: " + describe(eq.lhs.domain()) + " -> " + describe(eq.lhs.codomain()) +
             " vs " + describe(eq.rhs.domain()) + " -> " + describe(eq.rhs.codomain());
    return r;
  }
  bool done = false;
  for_each_index(eq.lhs.domain(), [&](const MultiIndex& i) {
    if (done) return;
    Vec l = eq.lhs.apply_basis(i), rv = eq.rhs.apply_basis(i);
    if (!(l == rv)) {
      done = true;
      r.pass = false;
      const Factors& cod = eq.lhs.codomain();
      r.witness = Witness{i, labels_of(eq.lhs.domain(), i), l, rv, l.to_string(cod), rv.to_string(cod)};
    }
  });
  return r;
}

inline AxiomReport run_equations(std::string subject, const std::vector<Equation>& eqs) {
  AxiomReport rep;
  rep.subject = std::move(subject);
  for (const auto& e : eqs) rep.results.push_back(check_equation(e));
  return rep;
}

}  // namespace hqg
