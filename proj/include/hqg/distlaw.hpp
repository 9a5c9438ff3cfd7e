#pragma once

// Distributive laws Ψ: H⊗A → A⊗H between Hopf quasigroups, at the plain,
// comonoidal and a-comonoidal levels, and the wreath product A⊗_Ψ H.

#include <string>
#include <utility>
#include <vector>

#include "hqg/axioms.hpp"

namespace hqg {

struct DistLaw {
  HopfQuasigroupData h;
  HopfQuasigroupData a;
  LinMap psi;

  DistLaw(HopfQuasigroupData h_, HopfQuasigroupData a_, LinMap psi_)
      : h(std::move(h_)), a(std::move(a_)), psi(std::move(psi_)) {
    Factors ha = concat(h.factors(), a.factors()), ah = concat(a.factors(), h.factors());
    if (!(psi.domain() == ha) || !(psi.codomain() == ah))
      throw ShapeError("distributive law must map " + describe(ha) + " -> " + describe(ah) + ", got " +
                       describe(psi.domain()) + " -> " + describe(psi.codomain()));
  }

  Morphism map() const { return Morphism::leaf(psi); }
};

/// The flip Ψ = c_{H,A}.
inline DistLaw flip_law(const HopfQuasigroupData& h, const HopfQuasigroupData& a) {
  return DistLaw(h, a, braid(h.factors(), a.factors(), h.field()).materialize());
}

namespace detail {

struct LawParts {
  Morphism psi, ia, ih;
  const HopfQuasigroupData& a;
  const HopfQuasigroupData& h;
  FieldSpec f;
  explicit LawParts(const DistLaw& d)
      : psi(d.map()), ia(d.a.id()), ih(d.h.id()), a(d.a), h(d.h), f(d.a.field()) {}
};

}  // namespace detail

inline std::vector<Equation> distributive_law_equations(const DistLaw& d) {
  detail::LawParts p(d);
  const auto& a = p.a;
  const auto& h = p.h;
  Morphism twist_ha = h.lam() * a.lam() * p.ia;  // λ_H⊗λ_A⊗A
  Morphism twist_hh = p.ih * h.lam() * a.lam();  // H⊗λ_H⊗λ_A
  return {
      {"dl1", p.psi << (p.ih * a.mu()) << twist_ha, (a.mu() * p.ih) << (p.ia * p.psi) << (p.psi * p.ia) << twist_ha},
      {"dl2", p.psi << (h.mu() * p.ia) << twist_hh, (p.ia * h.mu()) << (p.psi * p.ih) << (p.ih * p.psi) << twist_hh},
      {"dl3", p.psi << (p.ih * a.eta()), a.eta() * p.ih},
      {"dl4", p.psi << (h.eta() * p.ia), p.ia * h.eta()},
  };
}

inline std::vector<Equation> strong_form_equations(const DistLaw& d) {
  detail::LawParts p(d);
  return {
      {"dl1-1", p.psi << (p.ih * p.a.mu()), (p.a.mu() * p.ih) << (p.ia * p.psi) << (p.psi * p.ia)},
      {"dl2-1", p.psi << (p.h.mu() * p.ia), (p.ia * p.h.mu()) << (p.psi * p.ih) << (p.ih * p.psi)},
  };
}

inline std::vector<Equation> comonoidal_equations(const DistLaw& d) {
  detail::LawParts p(d);
  return {
      {"cdl1", tensor_ops::delta(p.a, p.h) << p.psi, (p.psi * p.psi) << tensor_ops::delta(p.h, p.a)},
      {"cdl2", tensor_ops::eps(p.a, p.h) << p.psi, p.h.eps() * p.a.eps()},
  };
}

inline std::vector<Equation> a_comonoidal_equations(const DistLaw& d) {
  detail::LawParts p(d);
  const auto& a = p.a;
  const auto& h = p.h;
  Morphism h_side = (p.ia * h.mu()) << (p.psi * h.mu()) << (p.ih * p.psi * p.ih);
  Morphism a_side = (a.mu() * p.ih) << (a.mu() * p.psi) << (p.ia * p.psi * p.ia);
  Morphism left_lam_h = (h.lam() * p.ih) << h.delta();
  Morphism right_lam_h = (p.ih * h.lam()) << h.delta();
  Morphism left_lam_a = (a.lam() * p.ia) << a.delta();
  Morphism right_lam_a = (p.ia * a.lam()) << a.delta();
  return {
      {"adl1", h_side << (left_lam_h * p.ia * p.ih), h.eps() * p.ia * p.ih},
      {"adl2", h_side << (right_lam_h * p.ia * p.ih), h.eps() * p.ia * p.ih},
      {"adl3", a_side << (p.ia * p.ih * left_lam_a), p.ia * p.ih * a.eps()},
      {"adl4", a_side << (p.ia * p.ih * right_lam_a), p.ia * p.ih * a.eps()},
  };
}

/// Identities satisfied by the smash-type laws: (dl21), (l-con) and the
/// antipode compatibility Ψ∘(H⊗λ_A) = (λ_A⊗H)∘Ψ.
inline std::vector<Equation> smash_law_equations(const DistLaw& d) {
  detail::LawParts p(d);
  Morphism lam_mid = p.ih * p.h.lam() * p.ia;
  return {
      {"dl21", p.psi << (p.h.mu() * p.ia) << lam_mid, (p.ia * p.h.mu()) << (p.psi * p.ih) << (p.ih * p.psi) << lam_mid},
      {"l-con", (p.a.eps() * p.ih) << p.psi, p.ih * p.a.eps()},
      {"cesp3", p.psi << (p.ih * p.a.lam()), (p.a.lam() * p.ih) << p.psi},
  };
}

inline AxiomReport check_distributive_law(const DistLaw& d) {
  return run_equations("distributive law", distributive_law_equations(d));
}

/// (dl1-1), (dl2-1), plus whether both antipodes are isomorphisms, which is
/// when these are equivalent to (dl1), (dl2).
inline AxiomReport check_strong_form(const DistLaw& d) {
  AxiomReport r = run_equations("strong distributive law", strong_form_equations(d));
  r.flags.push_back({"lambda_A invertible", is_invertible(d.a.lambda_map())});
  r.flags.push_back({"lambda_H invertible", is_invertible(d.h.lambda_map())});
  return r;
}

inline AxiomReport check_comonoidal(const DistLaw& d) {
  return run_equations("comonoidal distributive law", comonoidal_equations(d));
}

/// (adl1)–(adl4). The flags record associativity/coassociativity of both
/// factors: for Hopf algebras these identities are automatic.
inline AxiomReport check_a_comonoidal(const DistLaw& d) {
  AxiomReport r = run_equations("a-comonoidal distributive law", a_comonoidal_equations(d));
  StructureFlags fa = check_flags(d.a), fh = check_flags(d.h);
  r.flags.push_back({"A associative", fa.associative});
  r.flags.push_back({"A coassociative", fa.coassociative});
  r.flags.push_back({"H associative", fh.associative});
  r.flags.push_back({"H coassociative", fh.coassociative});
  return r;
}

/// Every level in equation order: dl1–dl4, cdl1–cdl2, adl1–adl4.
inline AxiomReport check_all_levels(const DistLaw& d) {
  AxiomReport r = check_distributive_law(d);
  r.append(check_comonoidal(d));
  r.append(check_a_comonoidal(d));
  r.subject = "distributive law (all levels)";
  return r;
}

/// A⊗_Ψ H on the product basis (A-index major). Built from Ψ whether or
/// not Ψ passes any check.
inline HopfQuasigroupData wreath_product(const DistLaw& d) {
  const auto& a = d.a;
  const auto& h = d.h;
  FieldSpec f = a.field();
  Obj w = product_object(a.obj(), h.obj());
  Morphism psi = d.map();
  Morphism ia = a.id(), ih = h.id();

  Morphism mu = (a.mu() * h.mu()) << (ia * psi * ih);
  Morphism lam = psi << (h.lam() * a.lam()) << braid(a.factors(), h.factors(), f);

  // A and H may each be K, so a W factor covers one or two of the old ones.
  std::vector<std::size_t> one{a.factors().size() + h.factors().size()};
  std::vector<std::size_t> two{one[0], one[0]}, none;
  Factors W{w}, WW{w, w};
  return HopfQuasigroupData(w, f, regroup(tensor_ops::eta(a, h).materialize(), none, {}, one, W),
                            regroup(mu.materialize(), two, WW, one, W),
                            regroup(tensor_ops::eps(a, h).materialize(), one, W, none, {}),
                            regroup(tensor_ops::delta(a, h).materialize(), one, W, two, WW),
                            regroup(lam.materialize(), one, W, one, W));
}

}  // namespace hqg
