#pragma once

// Axiom checkers for magmas, comonoids, non-associative bimonoids, Hopf
// quasigroups, their antipodes, morphisms, and (quasi)module actions.
//
// Every checker is a list of Equations (exposed through *_equations so the
// sides can be inspected) run through check_equation. Tags follow the
// usual equation labels: eta-eps, mu-eps, delta-eta, delta-mu, lH.1, ...

#include <optional>
#include <string>
#include <vector>

#include "hqg/structure.hpp"

namespace hqg {

inline std::vector<Equation> unital_magma_equations(const HopfQuasigroupData& s) {
  Morphism a = s.id();
  return {
      {"unital.1", s.mu() << (a * s.eta()), a},
      {"unital.2", s.mu() << (s.eta() * a), a},
  };
}

inline std::vector<Equation> comonoid_equations(const HopfQuasigroupData& s) {
  Morphism a = s.id();
  return {
      {"counital.1", (s.eps() * a) << s.delta(), a},
      {"counital.2", (a * s.eps()) << s.delta(), a},
      {"coassoc", (s.delta() * a) << s.delta(), (a * s.delta()) << s.delta()},
  };
}

inline std::vector<Equation> bimonoid_equations(const HopfQuasigroupData& s) {
  FieldSpec f = s.field();
  return {
      {"eta-eps", s.eps() << s.eta(), id(Factors{}, f)},
      {"mu-eps", s.eps() << s.mu(), s.eps() * s.eps()},
      {"delta-eta", s.delta() << s.eta(), s.eta() * s.eta()},
      {"delta-mu", s.delta() << s.mu(), (s.mu() * s.mu()) << tensor_ops::delta(s, s)},
  };
}

inline std::vector<Equation> hopf_equations(const HopfQuasigroupData& s) {
  Morphism h = s.id();
  Morphism counit_left = s.eps() * h;   // ε_H ⊗ H
  Morphism counit_right = h * s.eps();  // H ⊗ ε_H
  Morphism unit = s.eta() << s.eps();
  return {
      {"lH.1", s.mu() << (s.lam() * s.mu()) << (s.delta() * h), counit_left},
      {"lH.2", s.mu() << (h * s.mu()) << (h * s.lam() * h) << (s.delta() * h), counit_left},
      {"rH.1", s.mu() << (s.mu() * h) << (h * s.lam() * h) << (h * s.delta()), counit_right},
      {"rH.2", s.mu() << (s.mu() * s.lam()) << (h * s.delta()), counit_right},
      {"1-conv", convolution(s.lam(), h, s.delta(), s.mu()), unit},
      {"2-conv", convolution(h, s.lam(), s.delta(), s.mu()), unit},
  };
}

inline std::vector<Equation> antipode_equations(const HopfQuasigroupData& s) {
  FieldSpec f = s.field();
  Morphism h = s.id();
  Morphism c = braid(s.obj(), s.obj(), f);
  return {
      {"antimu", s.lam() << s.mu(), s.mu() << (s.lam() * s.lam()) << c},
      {"anticm", s.delta() << s.lam(), (s.lam() * s.lam()) << c << s.delta()},
      {"inv.1", s.lam() << s.eta(), s.eta()},
      {"inv.2", s.eps() << s.lam(), s.eps()},
      // (λ∗id)∗λ written as in the uniqueness argument; it must give back λ.
      {"uniq", s.mu() << (s.mu() * s.lam()) << (s.lam() * s.delta()) << s.delta(), s.lam()},
  };
}

inline std::vector<Equation> flag_equations(const HopfQuasigroupData& s) {
  FieldSpec f = s.field();
  Morphism a = s.id();
  Morphism c = braid(s.obj(), s.obj(), f);
  return {
      {"assoc", s.mu() << (s.mu() * a), s.mu() << (a * s.mu())},
      {"coassoc", (s.delta() * a) << s.delta(), (a * s.delta()) << s.delta()},
      {"comm", s.mu() << c, s.mu()},
      {"cocomm", c << s.delta(), s.delta()},
  };
}

inline AxiomReport check_unital_magma(const HopfQuasigroupData& s) {
  return run_equations("unital magma " + s.obj().name(), unital_magma_equations(s));
}

inline AxiomReport check_comonoid(const HopfQuasigroupData& s) {
  return run_equations("comonoid " + s.obj().name(), comonoid_equations(s));
}

/// Unital magma + comonoid + the four compatibility identities.
inline AxiomReport check_nonassoc_bimonoid(const HopfQuasigroupData& s) {
  AxiomReport r = check_unital_magma(s);
  r.append(check_comonoid(s));
  r.append(run_equations("", bimonoid_equations(s)));
  r.subject = "non-associative bimonoid " + s.obj().name();
  return r;
}

inline AxiomReport check_hopf_quasigroup(const HopfQuasigroupData& s) {
  return run_equations("Hopf quasigroup " + s.obj().name(), hopf_equations(s));
}

inline AxiomReport check_antipode_properties(const HopfQuasigroupData& s) {
  return run_equations("antipode of " + s.obj().name(), antipode_equations(s));
}

struct StructureFlags {
  bool associative, coassociative, commutative, cocommutative;
  AxiomReport report;  // witnesses for the flags that are false
};

inline StructureFlags check_flags(const HopfQuasigroupData& s) {
  AxiomReport r = run_equations("flags of " + s.obj().name(), flag_equations(s));
  auto ok = [&](const char* t) { return r.find(t)->pass; };
  StructureFlags fl{ok("assoc"), ok("coassoc"), ok("comm"), ok("cocomm"), r};
  fl.report.flags = {{"associative", fl.associative},
                     {"coassociative", fl.coassociative},
                     {"commutative", fl.commutative},
                     {"cocommutative", fl.cocommutative}};
  return fl;
}

/// Unit, product, counit, coproduct and antipode preservation for f: src → dst.
inline std::vector<Equation> hopf_morphism_equations(const LinMap& f, const HopfQuasigroupData& src,
                                                     const HopfQuasigroupData& dst) {
  Morphism m = Morphism::leaf(f);
  if (!(m.domain() == src.factors()) || !(m.codomain() == dst.factors()))
    throw ShapeError("morphism " + describe(m.domain()) + " -> " + describe(m.codomain()) + " does not map " +
                     src.obj().name() + " to " + dst.obj().name());
  return {
      {"unit", m << src.eta(), dst.eta()},
      {"mult", dst.mu() << (m * m), m << src.mu()},
      {"counit", dst.eps() << m, src.eps()},
      {"comult", (m * m) << src.delta(), dst.delta() << m},
      {"antipode-morphism", dst.lam() << m, m << src.lam()},
  };
}

/// The antipode entry follows from the others; it is checked anyway.
inline AxiomReport check_hopf_morphism(const LinMap& f, const HopfQuasigroupData& src, const HopfQuasigroupData& dst) {
  return run_equations("morphism " + src.obj().name() + " -> " + dst.obj().name(),
                       hopf_morphism_equations(f, src, dst));
}

// ---------------------------------------------------------------------------
// Quasimodules

enum class Side { Left, Right };

enum class ActionLevel {
  Quasimodule,
  Module,
  QuasimoduleMagma,
  QuasimoduleComonoid,
  QuasimoduleMagmaComonoid,
  ModuleMagma,
  ModuleComonoid,
  ModuleMagmaComonoid,
};

/// φ: H⊗M → M (left) or M⊗H → M (right). Magma and comonoid levels need
/// the structure on M as well.
struct QuasimoduleAction {
  HopfQuasigroupData acting;
  Obj module;
  std::optional<HopfQuasigroupData> module_structure;
  LinMap phi;
  Side side = Side::Left;

  QuasimoduleAction(HopfQuasigroupData h, Obj m, LinMap action, Side s = Side::Left)
      : acting(std::move(h)), module(std::move(m)), phi(std::move(action)), side(s) {
    validate();
  }
  QuasimoduleAction(HopfQuasigroupData h, HopfQuasigroupData m, LinMap action, Side s = Side::Left)
      : acting(std::move(h)), module(m.obj()), module_structure(std::move(m)), phi(std::move(action)), side(s) {
    validate();
  }

  Morphism map() const { return Morphism::leaf(phi); }

 private:
  void validate() const {
    Factors hm = side == Side::Left ? normalize({acting.obj(), module}) : normalize({module, acting.obj()});
    if (!(phi.domain() == hm) || !(phi.codomain() == normalize({module})))
      throw ShapeError("action must map " + describe(hm) + " -> " + module.name() + ", got " + describe(phi.domain()) +
                       " -> " + describe(phi.codomain()));
  }
};

/// Diagonal action on M⊗M: (φ⊗φ)∘(H⊗c_{H,M}⊗M)∘(δ_H⊗M⊗M) on the left,
/// (φ⊗φ)∘(M⊗c_{M,H}⊗H)∘(M⊗M⊗δ_H) on the right.
inline Morphism diagonal_action(const QuasimoduleAction& act) {
  FieldSpec f = act.acting.field();
  const HopfQuasigroupData& h = act.acting;
  Factors mf = normalize({act.module});
  Morphism m = id(mf, f), phi = act.map();
  if (act.side == Side::Left) return (phi * phi) << (h.id() * braid(h.factors(), mf, f) * m) << (h.delta() * m * m);
  return (phi * phi) << (m * braid(mf, h.factors(), f) * h.id()) << (m * m * h.delta());
}

inline std::vector<Equation> quasimodule_equations(const QuasimoduleAction& act, ActionLevel level) {
  FieldSpec f = act.acting.field();
  const HopfQuasigroupData& h = act.acting;
  Factors mf = normalize({act.module});
  Morphism m = id(mf, f), phi = act.map(), hh = h.id();
  bool left = act.side == Side::Left;

  bool module_level = level == ActionLevel::Module || level == ActionLevel::ModuleMagma ||
                      level == ActionLevel::ModuleComonoid || level == ActionLevel::ModuleMagmaComonoid;
  bool magma = level == ActionLevel::QuasimoduleMagma || level == ActionLevel::QuasimoduleMagmaComonoid ||
               level == ActionLevel::ModuleMagma || level == ActionLevel::ModuleMagmaComonoid;
  bool comonoid = level == ActionLevel::QuasimoduleComonoid || level == ActionLevel::QuasimoduleMagmaComonoid ||
                  level == ActionLevel::ModuleComonoid || level == ActionLevel::ModuleMagmaComonoid;
  if ((magma || comonoid) && !act.module_structure)
    throw ShapeError("magma/comonoid action levels need the structure on " + act.module.name());

  std::vector<Equation> eqs;
  if (left) {
    eqs.push_back({"uq", phi << (h.eta() * m), m});
    if (module_level) {
      eqs.push_back({"pqmod", phi << (hh * phi), phi << (h.mu() * m)});
    } else {
      eqs.push_back({"pq.1", phi << (hh * phi) << (((hh * h.lam()) << h.delta()) * m), h.eps() * m});
      eqs.push_back({"pq.2", phi << (h.lam() * phi) << (h.delta() * m), h.eps() * m});
    }
  } else {
    eqs.push_back({"uq", phi << (m * h.eta()), m});
    if (module_level) {
      eqs.push_back({"pqmod", phi << (phi * hh), phi << (m * h.mu())});
    } else {
      eqs.push_back({"pq.1", phi << (phi * hh) << (m * h.lam() * hh) << (m * h.delta()), m * h.eps()});
      eqs.push_back({"pq.2", phi << (phi * h.lam()) << (m * h.delta()), m * h.eps()});
    }
  }
  if (magma) {
    const HopfQuasigroupData& s = *act.module_structure;
    Morphism diag = diagonal_action(act);
    if (left) {
      eqs.push_back({"etaq", phi << (hh * s.eta()), h.eps() * s.eta()});
      eqs.push_back({"muq", s.mu() << diag, phi << (hh * s.mu())});
    } else {
      eqs.push_back({"etaq", phi << (s.eta() * hh), s.eta() * h.eps()});
      eqs.push_back({"muq", s.mu() << diag, phi << (s.mu() * hh)});
    }
  }
  if (comonoid) {
    const HopfQuasigroupData& s = *act.module_structure;
    Morphism diag = diagonal_action(act);
    if (left) {
      eqs.push_back({"eq", s.eps() << phi, h.eps() * s.eps()});
      eqs.push_back({"dq", s.delta() << phi, diag << (hh * s.delta())});
    } else {
      eqs.push_back({"eq", s.eps() << phi, s.eps() * h.eps()});
      eqs.push_back({"dq", s.delta() << phi, diag << (s.delta() * hh)});
    }
  }
  return eqs;
}

inline AxiomReport check_quasimodule(const QuasimoduleAction& act, ActionLevel level) {
  return run_equations(std::string(act.side == Side::Left ? "left" : "right") + " action of " + act.acting.obj().name() +
                           " on " + act.module.name(),
                       quasimodule_equations(act, level));
}

/// (λ∗id)∗s computed as in the antipode uniqueness argument, for a candidate s.
inline LinMap antipode_uniqueness_composite(const HopfQuasigroupData& s, const LinMap& candidate) {
  Morphism c = Morphism::leaf(candidate);
  Morphism h = s.id();
  Morphism left = convolution(s.lam(), h, s.delta(), s.mu());
  return convolution(left, c, s.delta(), s.mu()).materialize();
}

}  // namespace hqg
