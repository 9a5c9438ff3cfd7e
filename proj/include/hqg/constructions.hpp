#pragma once

// Concrete structures (loop and group algebras, H4) and the recipes that
// produce distributive laws: skew pairings, double cross products, smash
// products, two-action laws and twisted smash products.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hqg/distlaw.hpp"
#include "hqg/loops.hpp"

namespace hqg {

// ---------------------------------------------------------------------------
// Loop reports

namespace detail {

inline EquationResult loop_failure(const FiniteLoop& l, std::string tag, std::vector<std::size_t> at, std::string lhs,
                                   std::string rhs, std::string note) {
  Witness w;
  for (auto i : at) {
    w.input.push_back(static_cast<std::uint32_t>(i));
    w.input_labels.push_back(l.labels[i]);
  }
  w.lhs_text = std::move(lhs);
  w.rhs_text = std::move(rhs);
  return EquationResult{std::move(tag), false, std::move(w), std::move(note)};
}

}  // namespace detail

/// The inverse property as one report entry "ip"; the witness names the
/// failing sub-property in its note.
inline AxiomReport check_loop(const FiniteLoop& l) {
  IPResult ip = check_ip_loop(l);
  AxiomReport r;
  r.subject = "loop of order " + std::to_string(l.order());
  if (ip.pass) {
    r.results.push_back({"ip", true, std::nullopt, {}});
    return r;
  }
  const auto& lb = l.labels;
  std::string lhs = "none", rhs = lb[l.identity];
  if (ip.at.size() == 2) {
    std::size_t u = ip.at[0], v = ip.at[1], ui = ip.inverse[u];
    if (ip.property == "left-ip") lhs = lb[l.mul(ui, l.mul(u, v))], rhs = lb[v];
    else if (ip.property == "right-ip") lhs = lb[l.mul(l.mul(v, u), ui)], rhs = lb[v];
    else lhs = lb[ip.inverse[l.mul(u, v)]], rhs = lb[l.mul(ip.inverse[v], ui)];
  }
  r.results.push_back(detail::loop_failure(l, "ip", ip.at, lhs, rhs, ip.property + ": " + ip.witness));
  return r;
}

/// Associativity and commutativity of the table, with witnesses; the Moufang
/// identity is reported as a flag only.
inline AxiomReport check_loop_flags(const FiniteLoop& l) {
  AxiomReport r;
  r.subject = "flags of a loop of order " + std::to_string(l.order());
  const auto& lb = l.labels;
  if (auto w = associativity_witness(l)) {
    auto [a, b, c] = *w;
    r.results.push_back(detail::loop_failure(l, "assoc", {a, b, c}, lb[l.mul(l.mul(a, b), c)],
                                             lb[l.mul(a, l.mul(b, c))], "(ab)c != a(bc)"));
  } else {
    r.results.push_back({"assoc", true, std::nullopt, {}});
  }
  std::optional<EquationResult> comm;
  for (std::size_t a = 0; a < l.order() && !comm; ++a)
    for (std::size_t b = 0; b < l.order() && !comm; ++b)
      if (l.mul(a, b) != l.mul(b, a)) comm = detail::loop_failure(l, "comm", {a, b}, lb[l.mul(a, b)], lb[l.mul(b, a)], "ab != ba");
  r.results.push_back(comm ? *comm : EquationResult{"comm", true, std::nullopt, {}});
  r.flags = {{"associative", r.results[0].pass}, {"commutative", r.results[1].pass}, {"moufang", is_moufang(l)}};
  return r;
}

// ---------------------------------------------------------------------------
// Algebras

/// K on the unit object; every structure map is the identity of K.
inline HopfQuasigroupData trivial_structure(FieldSpec f) {
  LinMap k = LinMap::identity({}, f);
  return HopfQuasigroupData(Obj::unit(), f, k, k, k, k, k);
}

/// KL: μ from the table, δ(u) = u⊗u, ε(u) = 1, λ(u) = u⁻¹, η = e_L.
inline HopfQuasigroupData loop_algebra(const FiniteLoop& l, FieldSpec f, std::string name = "KL") {
  IPResult ip = check_ip_loop(l);
  if (!ip.pass) throw NotIPLoop("loop algebra needs an inverse-property loop: " + ip.witness);
  Obj o(std::move(name), l.labels);
  Factors A{o}, AA{o, o}, K{};
  Scalar one = Scalar::one(f);
  auto u = [](std::size_t i) { return MultiIndex{static_cast<std::uint32_t>(i)}; };
  auto uu = [](std::size_t i, std::size_t j) {
    return MultiIndex{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
  };
  LinMap eta(K, A, f), mu(AA, A, f), eps(A, K, f), delta(A, AA, f), lam(A, A, f);
  eta.add_entry({}, u(l.identity), one);
  for (std::size_t i = 0; i < l.order(); ++i) {
    for (std::size_t j = 0; j < l.order(); ++j) mu.add_entry(uu(i, j), u(l.mul(i, j)), one);
    eps.add_entry(u(i), {}, one);
    delta.add_entry(u(i), uu(i, i), one);
    lam.add_entry(u(i), u(ip.inverse[i]), one);
  }
  return HopfQuasigroupData(o, f, std::move(eta), std::move(mu), std::move(eps), std::move(delta), std::move(lam));
}

inline HopfQuasigroupData group_algebra(const FiniteLoop& g, FieldSpec f, std::string name = "KG") {
  if (!is_associative(g)) throw InputNotAGroup("group_algebra needs an associative table");
  return loop_algebra(g, f, std::move(name));
}

/// The 4-dimensional Taft algebra on {1, x, y, w = xy}.
inline HopfQuasigroupData taft_h4(FieldSpec f) {
  if (f.characteristic() == 2) throw CharTwo();
  Obj o("H4", {"1", "x", "y", "w"});
  Factors A{o}, AA{o, o}, K{};
  enum : std::uint32_t { E = 0, X = 1, Y = 2, W = 3 };
  Scalar one = Scalar::one(f), neg = Scalar(f, -1L);
  LinMap eta(K, A, f), mu(AA, A, f), eps(A, K, f), delta(A, AA, f), lam(A, A, f);
  eta.add_entry({}, {E}, one);
  for (std::uint32_t b = 0; b < 4; ++b) {
    mu.add_entry({E, b}, {b}, one);
    if (b != E) mu.add_entry({b, E}, {b}, one);
  }
  mu.add_entry({X, X}, {E}, one);
  mu.add_entry({X, Y}, {W}, one);
  mu.add_entry({X, W}, {Y}, one);
  mu.add_entry({Y, X}, {W}, neg);
  mu.add_entry({W, X}, {Y}, neg);
  delta.add_entry({E}, {E, E}, one);
  delta.add_entry({X}, {X, X}, one);
  delta.add_entry({Y}, {Y, X}, one);
  delta.add_entry({Y}, {E, Y}, one);
  delta.add_entry({W}, {W, E}, one);
  delta.add_entry({W}, {X, W}, one);
  eps.add_entry({E}, {}, one);
  eps.add_entry({X}, {}, one);
  lam.add_entry({E}, {E}, one);
  lam.add_entry({X}, {X}, one);
  lam.add_entry({Y}, {W}, one);
  lam.add_entry({W}, {Y}, neg);
  return HopfQuasigroupData(o, f, std::move(eta), std::move(mu), std::move(eps), std::move(delta), std::move(lam));
}

/// The structure moved along a basis bijection: basis element i of `s`
/// becomes basis element old_to_new[i] of `target`.
inline HopfQuasigroupData transport(const HopfQuasigroupData& s, const Obj& target,
                                    const std::vector<std::size_t>& old_to_new) {
  if (old_to_new.size() != s.obj().dim() || target.dim() != s.obj().dim())
    throw ShapeError("transport needs a bijection between bases of equal size");
  std::vector<bool> hit(target.dim(), false);
  for (auto k : old_to_new) {
    if (k >= target.dim() || hit[k]) throw ShapeError("transport map is not a bijection");
    hit[k] = true;
  }
  FieldSpec f = s.field();
  Factors T = normalize({target});
  auto move = [&](const LinMap& m) {
    Factors dom, cod;
    for (std::size_t i = 0; i < m.domain().size(); ++i) dom.push_back(target);
    for (std::size_t i = 0; i < m.codomain().size(); ++i) cod.push_back(target);
    LinMap out(dom, cod, f);
    auto re = [&](const MultiIndex& idx) {
      MultiIndex r;
      for (auto v : idx) r.push_back(static_cast<std::uint32_t>(old_to_new[v]));
      return r;
    };
    for (const auto& [in, col] : m.columns()) {
      Vec v;
      for (const auto& [o, c] : col) v.add(re(o), c);
      out.set_column(re(in), std::move(v));
    }
    return out;
  };
  return HopfQuasigroupData(target, f, move(s.eta_map()), move(s.mu_map()), move(s.eps_map()), move(s.delta_map()),
                            move(s.lambda_map()));
}

// ---------------------------------------------------------------------------
// Actions

/// φ(h⊗a) = ε(h)a (left) or φ(a⊗h) = aε(h) (right).
inline QuasimoduleAction trivial_action(const HopfQuasigroupData& h, const HopfQuasigroupData& a,
                                        Side side = Side::Left) {
  Morphism phi = side == Side::Left ? h.eps() * a.id() : a.id() * h.eps();
  return QuasimoduleAction(h, a, phi.materialize(), side);
}

/// K[C2] acting on a group algebra: the identity acts trivially, the other
/// group-like element acts by λ_A (inversion).
inline QuasimoduleAction inversion_action(const HopfQuasigroupData& c2, const HopfQuasigroupData& a,
                                          Side side = Side::Left) {
  if (c2.obj().dim() != 2) throw ShapeError("inversion_action needs a 2-dimensional acting algebra");
  FieldSpec f = a.field();
  std::uint32_t e = c2.eta_map().column({}).begin()->first[0];
  Factors hf{c2.obj()}, af{a.obj()};
  Factors dom = side == Side::Left ? Factors{c2.obj(), a.obj()} : Factors{a.obj(), c2.obj()};
  LinMap phi(dom, af, f);
  for (std::uint32_t g = 0; g < 2; ++g)
    for (std::uint32_t x = 0; x < a.obj().dim(); ++x) {
      Vec img = g == e ? Vec::basis({x}, f) : a.lambda_map().column({x});
      phi.set_column(side == Side::Left ? MultiIndex{g, x} : MultiIndex{x, g}, img);
    }
  return QuasimoduleAction(c2, a, std::move(phi), side);
}

inline AxiomReport prefixed(AxiomReport r, const std::string& prefix) {
  for (auto& e : r.results) e.tag = prefix + e.tag;
  for (auto& fl : r.flags) fl.name = prefix + fl.name;
  return r;
}

/// (cesp1) and (cesp2) for a left action.
inline std::vector<Equation> smash_action_equations(const QuasimoduleAction& act) {
  const HopfQuasigroupData& h = act.acting;
  FieldSpec f = h.field();
  Morphism phi = act.map(), hh = h.id(), m = id(Factors{act.module}, f);
  Morphism c = braid(h.factors(), h.factors(), f);
  return {
      {"cesp1", (hh * phi) << ((c << h.delta()) * m), (hh * phi) << (h.delta() * m)},
      {"cesp2", phi << (hh * (phi << (h.lam() * m))), phi << ((h.mu() << (hh * h.lam())) * m)},
  };
}

/// Left quasimodule magma-comonoid levels plus (cesp1), (cesp2).
inline AxiomReport check_smash_preconditions(const QuasimoduleAction& act) {
  AxiomReport r = check_quasimodule(act, ActionLevel::QuasimoduleMagmaComonoid);
  r.append(run_equations("", smash_action_equations(act)));
  r.subject = "smash action of " + act.acting.obj().name() + " on " + act.module.name();
  return r;
}

// ---------------------------------------------------------------------------
// Smash product

inline void require_left_structured(const QuasimoduleAction& act, const char* what) {
  if (act.side != Side::Left || !act.module_structure)
    throw ShapeError(std::string(what) + " needs a left action on a structure");
}

/// Ψ = (φ⊗H)∘(H⊗c_{H,A})∘(δ_H⊗A).
inline DistLaw smash_psi(const QuasimoduleAction& act) {
  require_left_structured(act, "smash_psi");
  const HopfQuasigroupData& h = act.acting;
  const HopfQuasigroupData& a = *act.module_structure;
  FieldSpec f = h.field();
  Morphism psi = (act.map() * h.id()) << (h.id() * braid(h.factors(), a.factors(), f)) << (h.delta() * a.id());
  return DistLaw(h, a, psi.materialize());
}

/// Preconditions on the action, then (dl1-1), (dl21), (dl3), (dl4),
/// comonoidality, (l-con) and the antipode compatibility of Ψ.
inline AxiomReport check_smash(const QuasimoduleAction& act) {
  AxiomReport r = check_smash_preconditions(act);
  DistLaw d = smash_psi(act);
  r.append(check_strong_form(d));
  auto base = distributive_law_equations(d);
  r.append(run_equations("", {base[2], base[3]}));
  r.append(check_comonoidal(d));
  r.append(run_equations("", smash_law_equations(d)));
  r.subject = "smash law of " + act.acting.obj().name() + " over " + act.module.name();
  return r;
}

/// (A⊗ε_H)∘R∘c_{A,H}∘(A⊗λ_H)∘R = ε_H⊗A.
inline std::vector<Equation> r_smash_equations(const DistLaw& d) {
  FieldSpec f = d.a.field();
  Morphism r = d.map();
  Morphism lhs = (d.a.id() * d.h.eps()) << r << braid(d.a.factors(), d.h.factors(), f) << (d.a.id() * d.h.lam()) << r;
  return {{"r-smash", lhs, d.h.eps() * d.a.id()}};
}

inline AxiomReport check_r_smash_condition(const DistLaw& d) {
  return run_equations("R-smash condition", r_smash_equations(d));
}

// ---------------------------------------------------------------------------
// Two actions

/// T = (φ̂⊗H)∘(H⊗c_{H,A})∘(δ_H⊗A), Γ = (φ⊗H)∘(H⊗T)∘(δ_H⊗A).
inline DistLaw gamma_two_actions(const QuasimoduleAction& phi, const QuasimoduleAction& phi_hat) {
  require_left_structured(phi, "gamma_two_actions");
  const HopfQuasigroupData& h = phi.acting;
  const HopfQuasigroupData& a = *phi.module_structure;
  Morphism t = smash_psi(phi_hat).map();
  Morphism gamma = (phi.map() * h.id()) << (h.id() * t) << (h.delta() * a.id());
  return DistLaw(h, a, gamma.materialize());
}

inline std::vector<Equation> gamma_equations(const QuasimoduleAction& phi, const QuasimoduleAction& phi_hat) {
  const HopfQuasigroupData& h = phi.acting;
  const HopfQuasigroupData& a = *phi.module_structure;
  FieldSpec f = h.field();
  Morphism hh = h.id(), aa = a.id(), p = phi.map(), ph = phi_hat.map();
  Morphism t = smash_psi(phi_hat).map(), g = gamma_two_actions(phi, phi_hat).map();
  Morphism c_ha = braid(h.factors(), a.factors(), f), c_hh = braid(h.factors(), h.factors(), f);
  Morphism spread = (hh * c_ha) << (h.delta() * aa);  // H⊗A → H⊗A⊗H
  return {
      {"cesp4", ph << (hh * p), p << (hh * ph) << (c_hh * aa)},
      {"R3", (aa * h.delta()) << t, (t * hh) << spread},
      {"R4", t << (hh * p), (p * hh) << (hh * t) << (c_hh * aa)},
      {"R5", (c_ha * hh) << (hh * t) << (h.delta() * aa), (t * hh) << spread},
      {"R6", (a.delta() * hh) << t, (aa * t) << (t * aa) << (hh * a.delta())},
      {"R7", (a.delta() * hh) << g, (aa * g) << (g * aa) << (hh * a.delta())},
  };
}

/// Both actions' magma-comonoid levels with (cesp1), (cesp2), then (cesp4),
/// (R3)–(R7) and (l-con) for Γ.
inline AxiomReport check_gamma_two_actions(const QuasimoduleAction& phi, const QuasimoduleAction& phi_hat) {
  require_left_structured(phi, "check_gamma_two_actions");
  require_left_structured(phi_hat, "check_gamma_two_actions");
  AxiomReport r = prefixed(check_smash_preconditions(phi), "phi:");
  r.append(prefixed(check_smash_preconditions(phi_hat), "phihat:"));
  r.append(run_equations("", gamma_equations(phi, phi_hat)));
  DistLaw g = gamma_two_actions(phi, phi_hat);
  r.append(run_equations("", {smash_law_equations(g)[1]}));
  r.subject = "two-action law of " + phi.acting.obj().name() + " over " + phi.module.name();
  return r;
}

// ---------------------------------------------------------------------------
// Twisted smash product

namespace detail {
/// (λ_H⊗H)∘c_{H,H}∘δ_H and (λ_H⊗H)∘δ_H.
inline Morphism twisted_coproduct(const HopfQuasigroupData& h, bool with_flip) {
  Morphism d = h.delta();
  if (with_flip) d = braid(h.factors(), h.factors(), h.field()) << d;
  return (h.lam() * h.id()) << d;
}
}  // namespace detail

/// Γ = (φ_r⊗H)∘(A⊗((λ_H⊗H)∘c_{H,H}∘δ_H))∘(φ⊗H)∘(H⊗c_{H,A})∘(δ_H⊗A).
inline DistLaw twisted_smash_gamma(const QuasimoduleAction& left, const QuasimoduleAction& right) {
  require_left_structured(left, "twisted_smash_gamma");
  if (right.side != Side::Right) throw ShapeError("twisted_smash_gamma needs a right action");
  const HopfQuasigroupData& h = left.acting;
  const HopfQuasigroupData& a = *left.module_structure;
  Morphism g = (right.map() * h.id()) << (a.id() * detail::twisted_coproduct(h, true)) << smash_psi(left).map();
  return DistLaw(h, a, g.materialize());
}

/// φ̂ = φ_r∘(A⊗λ_H)∘c_{H,A}.
inline QuasimoduleAction hat_from_right(const QuasimoduleAction& right) {
  const HopfQuasigroupData& h = right.acting;
  Factors af{right.module};
  Morphism hat = right.map() << (id(af, h.field()) * h.lam()) << braid(h.factors(), af, h.field());
  if (right.module_structure) return QuasimoduleAction(h, *right.module_structure, hat.materialize(), Side::Left);
  return QuasimoduleAction(h, right.module, hat.materialize(), Side::Left);
}

/// (61), (62), (65) and equality of Γ with the two-action law for (φ, φ̂).
inline std::vector<Equation> twisted_smash_equations(const QuasimoduleAction& left, const QuasimoduleAction& right) {
  const HopfQuasigroupData& h = left.acting;
  Morphism hh = h.id(), aa = id(Factors{left.module}, h.field()), p = left.map(), pr = right.map();
  DistLaw g = twisted_smash_gamma(left, right);
  DistLaw two = gamma_two_actions(left, hat_from_right(right));
  return {
      {"61", p << (hh * pr), pr << (p * hh)},
      {"62", pr << ((pr << (aa * h.lam())) * hh), pr << (aa * (h.mu() << (h.lam() * hh)))},
      {"65", (pr * hh) << (aa * detail::twisted_coproduct(h, true)),
       (pr * hh) << (aa * detail::twisted_coproduct(h, false))},
      {"gamma-eq", g.map(), two.map()},
  };
}

/// Magma-comonoid levels of both actions, (cesp1), (cesp2), then the
/// twisted-smash identities.
inline AxiomReport check_twisted_smash(const QuasimoduleAction& left, const QuasimoduleAction& right) {
  require_left_structured(left, "check_twisted_smash");
  if (right.side != Side::Right || !right.module_structure)
    throw ShapeError("check_twisted_smash needs a right action on a structure");
  AxiomReport r = prefixed(check_quasimodule(left, ActionLevel::QuasimoduleMagmaComonoid), "left:");
  r.append(prefixed(check_quasimodule(right, ActionLevel::QuasimoduleMagmaComonoid), "right:"));
  r.append(run_equations("", smash_action_equations(left)));
  r.append(run_equations("", twisted_smash_equations(left, right)));
  r.subject = "twisted smash law of " + left.acting.obj().name() + " over " + left.module.name();
  return r;
}

// ---------------------------------------------------------------------------
// Skew pairings

struct SkewPairing {
  HopfQuasigroupData a;
  HopfQuasigroupData h;
  LinMap tau;

  SkewPairing(HopfQuasigroupData a_, HopfQuasigroupData h_, LinMap tau_)
      : a(std::move(a_)), h(std::move(h_)), tau(std::move(tau_)) {
    Factors ah = concat(a.factors(), h.factors());
    if (!(tau.domain() == ah) || !tau.codomain().empty())
      throw ShapeError("skew pairing must map " + describe(ah) + " -> I, got " + describe(tau.domain()) + " -> " +
                       describe(tau.codomain()));
  }

  Morphism map() const { return Morphism::leaf(tau); }
  /// τ⁻¹ = τ∘(λ_A⊗H).
  Morphism inverse() const { return map() << (a.lam() * h.id()); }
};

inline std::vector<Equation> skew_pairing_equations(const SkewPairing& p) {
  const HopfQuasigroupData& a = p.a;
  const HopfQuasigroupData& h = p.h;
  FieldSpec f = a.field();
  Morphism aa = a.id(), hh = h.id(), t = p.map(), ti = p.inverse();
  Morphism mid = aa * braid(a.factors(), h.factors(), f) * hh;  // A⊗c_{A,H}⊗H
  Morphism c_aa = braid(a.factors(), a.factors(), f), c_hh = braid(h.factors(), h.factors(), f);
  Morphism d_ah = tensor_ops::delta(a, h);
  Morphism counit = a.eps() * h.eps();
  return {
      {"skw1", t << (a.mu() * hh), (t * t) << mid << (aa * aa * h.delta())},
      {"skw2", t << (aa * h.mu()), (t * t) << mid << ((c_aa << a.delta()) * hh * hh)},
      {"skw3", t << (aa * h.eta()), a.eps()},
      {"skw4", t << (a.eta() * hh), h.eps()},
      {"tau-inv.1", (t * ti) << d_ah, counit},
      {"tau-inv.2", (ti * t) << d_ah, counit},
      {"tau-lam", t, ti << (aa * h.lam())},
      {"skw5", ti << (aa * h.mu()), (ti * ti) << mid << (a.delta() * hh * hh)},
      {"skw6", ti << (a.mu() * hh), (ti * ti) << mid << (aa * aa * (c_hh << h.delta()))},
      {"skw3-inv", ti << (aa * h.eta()), a.eps()},
      {"skw4-inv", ti << (a.eta() * hh), h.eps()},
  };
}

inline AxiomReport check_skew_pairing(const SkewPairing& p) {
  return run_equations("skew pairing " + p.a.obj().name() + " x " + p.h.obj().name(), skew_pairing_equations(p));
}

/// ε_A⊗ε_H.
inline SkewPairing trivial_pairing(const HopfQuasigroupData& a, const HopfQuasigroupData& h) {
  return SkewPairing(a, h, (a.eps() * h.eps()).materialize());
}

/// τ(σu^α⊗1) = 1, τ(σu^α⊗x) = (-1)^α, τ(σu^α⊗y) = τ(σu^α⊗w) = 0 on
/// (K M(S3,2), H4).
inline SkewPairing example_tau(FieldSpec f) {
  FiniteLoop l = chein_double(symmetric_group_s3());
  HopfQuasigroupData a = loop_algebra(l, f, "FL");
  HopfQuasigroupData h = taft_h4(f);
  LinMap tau(concat(a.factors(), h.factors()), {}, f);
  std::uint32_t n = static_cast<std::uint32_t>(l.order() / 2);
  for (std::uint32_t k = 0; k < l.order(); ++k) {
    tau.add_entry({k, 0}, {}, Scalar::one(f));
    tau.add_entry({k, 1}, {}, Scalar(f, k >= n ? -1L : 1L));
  }
  return SkewPairing(std::move(a), std::move(h), std::move(tau));
}

/// Ψ = (τ⊗A⊗H⊗τ⁻¹)∘(A⊗H⊗δ_{A⊗H})∘δ_{A⊗H}∘c_{H,A}.
inline DistLaw psi_from_skew_pairing(const SkewPairing& p) {
  FieldSpec f = p.a.field();
  Morphism d_ah = tensor_ops::delta(p.a, p.h);
  Morphism ah = p.a.id() * p.h.id();
  Morphism psi = (p.map() * ah * p.inverse()) << (ah * d_ah) << d_ah << braid(p.h.factors(), p.a.factors(), f);
  return DistLaw(p.h, p.a, psi.materialize());
}

// ---------------------------------------------------------------------------
// Double cross products

/// Actions feeding the double cross product and the two-action recipes.
struct ActionBundle {
  HopfQuasigroupData a;
  HopfQuasigroupData h;
  std::optional<QuasimoduleAction> left_a;   // φ_A: H⊗A → A
  std::optional<QuasimoduleAction> hat_a;    // φ̂_A: H⊗A → A
  std::optional<QuasimoduleAction> right_h;  // φ_H: H⊗A → H (right A-action on H)
  std::optional<QuasimoduleAction> right_a;  // φ_A-right: A⊗H → A
};

/// φ_A = (τ⊗A⊗τ⁻¹)∘(A⊗H⊗δ_A⊗H)∘δ_{A⊗H}∘c_{H,A} and
/// φ_H = (τ⊗H⊗τ⁻¹)∘(A⊗H⊗c_{A,H}⊗H)∘(A⊗H⊗A⊗δ_H)∘δ_{A⊗H}∘c_{H,A}.
inline ActionBundle skew_pairing_actions(const SkewPairing& p) {
  const HopfQuasigroupData& a = p.a;
  const HopfQuasigroupData& h = p.h;
  FieldSpec f = a.field();
  Morphism aa = a.id(), hh = h.id();
  Morphism spread = tensor_ops::delta(a, h) << braid(h.factors(), a.factors(), f);  // H⊗A → A⊗H⊗A⊗H
  Morphism phi_a = (p.map() * aa * p.inverse()) << (aa * hh * a.delta() * hh) << spread;
  Morphism phi_h = (p.map() * hh * p.inverse()) << (aa * hh * braid(a.factors(), h.factors(), f) * hh) <<
                   (aa * hh * aa * h.delta()) << spread;
  ActionBundle b{a, h, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  b.left_a.emplace(h, a, phi_a.materialize(), Side::Left);
  b.right_h.emplace(a, h, phi_h.materialize(), Side::Right);
  return b;
}

namespace detail {
inline void require_double_cross(const ActionBundle& b) {
  if (!b.left_a || !b.right_h) throw ShapeError("double cross product needs φ_A (left) and φ_H (right)");
}
}  // namespace detail

/// Ψ = (φ_A⊗φ_H)∘δ_{H⊗A}.
inline DistLaw double_cross_psi(const ActionBundle& b) {
  detail::require_double_cross(b);
  Morphism psi = (b.left_a->map() * b.right_h->map()) << tensor_ops::delta(b.h, b.a);
  return DistLaw(b.h, b.a, psi.materialize());
}

inline std::vector<Equation> double_cross_equations(const ActionBundle& b) {
  detail::require_double_cross(b);
  const HopfQuasigroupData& a = b.a;
  const HopfQuasigroupData& h = b.h;
  FieldSpec f = a.field();
  Morphism aa = a.id(), hh = h.id(), pa = b.left_a->map(), ph = b.right_h->map();
  Morphism psi = double_cross_psi(b).map();
  Morphism psi_lam = psi << (h.lam() * a.lam());
  Morphism counits = h.eps() * a.eps();
  return {
      {"d1", pa << (hh * a.eta()), h.eps() * a.eta()},
      {"d2", ph << (h.eta() * aa), h.eta() * a.eps()},
      {"d3", (ph * pa) << tensor_ops::delta(h, a), braid(a.factors(), h.factors(), f) << psi},
      {"d4", pa << (hh * a.mu()) << (h.lam() * a.lam() * aa), a.mu() << (aa * pa) << (psi_lam * aa)},
      {"d5", h.mu() << (ph * h.mu()) << (h.lam() * psi * hh) << (h.delta() * aa * hh), counits * hh},
      {"d6", h.mu() << (ph * h.mu()) << (hh * psi * hh) << (((hh * h.lam()) << h.delta()) * aa * hh), counits * hh},
      {"d7", ph << (h.mu() * aa) << (hh * h.lam() * a.lam()), h.mu() << (ph * hh) << (hh * psi_lam)},
      {"d8", a.mu() << (a.mu() * pa) << (aa * psi * a.lam()) << (aa * hh * a.delta()), aa * counits},
      {"d9", a.mu() << (a.mu() * pa) << (aa * psi * aa) << (aa * hh * ((a.lam() * aa) << a.delta())), aa * counits},
  };
}

inline AxiomReport check_double_cross(const ActionBundle& b) {
  return run_equations("double cross product " + b.a.obj().name() + " x " + b.h.obj().name(),
                       double_cross_equations(b));
}

}  // namespace hqg
