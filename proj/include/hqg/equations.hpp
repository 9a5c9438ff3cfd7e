#pragma once

// DSL encodings of every identity the built-in checkers evaluate, keyed by
// (group, tag). Role names per group:
//
//   structure, flags, antipode     H
//   morphism                       F : S -> D
//   quasimodule-left/right         PHI acting by H on M
//   distlaw, strong, comonoidal,
//   acomonoidal, smash-law         PSI : H#A -> A#H
//   r-smash                        PSI
//   double-cross                   PSI, PHI_A, PHI_H
//   skew                           TAU, TAUINV on A#H
//   smash-action                   PHI : H#A -> A
//   two-action                     PHI, PHIHAT, T, GAMMA
//   twisted                        PHI, PHIR : A#H -> A

#include <string>
#include <string_view>
#include <vector>

namespace hqg::dsl {

struct EquationEncoding {
  std::string group;
  std::string tag;
  std::string lhs;
  std::string rhs;
};

inline const std::vector<EquationEncoding>& shipped_encodings() {
  static const std::vector<EquationEncoding> all = {
      // unital magma, comonoid, bimonoid
      {"structure", "unital.1", "mu[H] . (id[H] # eta[H])", "id[H]"},
      {"structure", "unital.2", "mu[H] . (eta[H] # id[H])", "id[H]"},
      {"structure", "counital.1", "(eps[H] # id[H]) . delta[H]", "id[H]"},
      {"structure", "counital.2", "(id[H] # eps[H]) . delta[H]", "id[H]"},
      {"structure", "coassoc", "(delta[H] # id[H]) . delta[H]", "(id[H] # delta[H]) . delta[H]"},
      {"structure", "eta-eps", "eps[H] . eta[H]", "id[I]"},
      {"structure", "mu-eps", "eps[H] . mu[H]", "eps[H] # eps[H]"},
      {"structure", "delta-eta", "delta[H] . eta[H]", "eta[H] # eta[H]"},
      {"structure", "delta-mu", "delta[H] . mu[H]", "(mu[H] # mu[H]) . delta[H # H]"},
      // Hopf quasigroup
      {"structure", "lH.1", "mu[H] . (lam[H] # mu[H]) . (delta[H] # id[H])", "eps[H] # id[H]"},
      {"structure", "lH.2", "mu[H] . (id[H] # mu[H]) . (id[H] # lam[H] # id[H]) . (delta[H] # id[H])",
       "eps[H] # id[H]"},
      {"structure", "rH.1", "mu[H] . (mu[H] # id[H]) . (id[H] # lam[H] # id[H]) . (id[H] # delta[H])",
       "id[H] # eps[H]"},
      {"structure", "rH.2", "mu[H] . (mu[H] # lam[H]) . (id[H] # delta[H])", "id[H] # eps[H]"},
      {"structure", "1-conv", "mu[H] . (lam[H] # id[H]) . delta[H]", "eta[H] . eps[H]"},
      {"structure", "2-conv", "mu[H] . (id[H] # lam[H]) . delta[H]", "eta[H] . eps[H]"},
      // antipode
      {"antipode", "antimu", "lam[H] . mu[H]", "mu[H] . (lam[H] # lam[H]) . c[H, H]"},
      {"antipode", "anticm", "delta[H] . lam[H]", "(lam[H] # lam[H]) . c[H, H] . delta[H]"},
      {"antipode", "inv.1", "lam[H] . eta[H]", "eta[H]"},
      {"antipode", "inv.2", "eps[H] . lam[H]", "eps[H]"},
      {"antipode", "uniq", "mu[H] . (mu[H] # lam[H]) . (lam[H] # delta[H]) . delta[H]", "lam[H]"},
      // flags
      {"flags", "assoc", "mu[H] . (mu[H] # id[H])", "mu[H] . (id[H] # mu[H])"},
      {"flags", "coassoc", "(delta[H] # id[H]) . delta[H]", "(id[H] # delta[H]) . delta[H]"},
      {"flags", "comm", "mu[H] . c[H, H]", "mu[H]"},
      {"flags", "cocomm", "c[H, H] . delta[H]", "delta[H]"},
      // morphisms
      {"morphism", "unit", "F . eta[S]", "eta[D]"},
      {"morphism", "mult", "mu[D] . (F # F)", "F . mu[S]"},
      {"morphism", "counit", "eps[D] . F", "eps[S]"},
      {"morphism", "comult", "(F # F) . delta[S]", "delta[D] . F"},
      {"morphism", "antipode-morphism", "lam[D] . F", "F . lam[S]"},
      // left quasimodules
      {"quasimodule-left", "uq", "PHI . (eta[H] # id[M])", "id[M]"},
      {"quasimodule-left", "pq.1", "PHI . (id[H] # PHI) . (((id[H] # lam[H]) . delta[H]) # id[M])", "eps[H] # id[M]"},
      {"quasimodule-left", "pq.2", "PHI . (lam[H] # PHI) . (delta[H] # id[M])", "eps[H] # id[M]"},
      {"quasimodule-left", "pqmod", "PHI . (id[H] # PHI)", "PHI . (mu[H] # id[M])"},
      {"quasimodule-left", "etaq", "PHI . (id[H] # eta[M])", "eps[H] # eta[M]"},
      {"quasimodule-left", "muq", "mu[M] . (PHI # PHI) . (id[H] # c[H, M] # id[M]) . (delta[H] # id[M] # id[M])",
       "PHI . (id[H] # mu[M])"},
      {"quasimodule-left", "eq", "eps[M] . PHI", "eps[H] # eps[M]"},
      {"quasimodule-left", "dq", "delta[M] . PHI",
       "(PHI # PHI) . (id[H] # c[H, M] # id[M]) . (delta[H] # id[M] # id[M]) . (id[H] # delta[M])"},
      // right quasimodules
      {"quasimodule-right", "uq", "PHI . (id[M] # eta[H])", "id[M]"},
      {"quasimodule-right", "pq.1", "PHI . (PHI # id[H]) . (id[M] # lam[H] # id[H]) . (id[M] # delta[H])",
       "id[M] # eps[H]"},
      {"quasimodule-right", "pq.2", "PHI . (PHI # lam[H]) . (id[M] # delta[H])", "id[M] # eps[H]"},
      {"quasimodule-right", "pqmod", "PHI . (PHI # id[H])", "PHI . (id[M] # mu[H])"},
      {"quasimodule-right", "etaq", "PHI . (eta[M] # id[H])", "eta[M] # eps[H]"},
      {"quasimodule-right", "muq", "mu[M] . (PHI # PHI) . (id[M] # c[M, H] # id[H]) . (id[M] # id[M] # delta[H])",
       "PHI . (mu[M] # id[H])"},
      {"quasimodule-right", "eq", "eps[M] . PHI", "eps[M] # eps[H]"},
      {"quasimodule-right", "dq", "delta[M] . PHI",
       "(PHI # PHI) . (id[M] # c[M, H] # id[H]) . (id[M] # id[M] # delta[H]) . (delta[M] # id[H])"},
      // distributive laws
      {"distlaw", "dl1", "PSI . (id[H] # mu[A]) . (lam[H] # lam[A] # id[A])",
       "(mu[A] # id[H]) . (id[A] # PSI) . (PSI # id[A]) . (lam[H] # lam[A] # id[A])"},
      {"distlaw", "dl2", "PSI . (mu[H] # id[A]) . (id[H] # lam[H] # lam[A])",
       "(id[A] # mu[H]) . (PSI # id[H]) . (id[H] # PSI) . (id[H] # lam[H] # lam[A])"},
      {"distlaw", "dl3", "PSI . (id[H] # eta[A])", "eta[A] # id[H]"},
      {"distlaw", "dl4", "PSI . (eta[H] # id[A])", "id[A] # eta[H]"},
      {"strong", "dl1-1", "PSI . (id[H] # mu[A])", "(mu[A] # id[H]) . (id[A] # PSI) . (PSI # id[A])"},
      {"strong", "dl2-1", "PSI . (mu[H] # id[A])", "(id[A] # mu[H]) . (PSI # id[H]) . (id[H] # PSI)"},
      {"comonoidal", "cdl1", "delta[A # H] . PSI", "(PSI # PSI) . delta[H # A]"},
      {"comonoidal", "cdl2", "eps[A # H] . PSI", "eps[H] # eps[A]"},
      {"acomonoidal", "adl1",
       "(id[A] # mu[H]) . (PSI # mu[H]) . (id[H] # PSI # id[H]) . (((lam[H] # id[H]) . delta[H]) # id[A] # id[H])",
       "eps[H] # id[A] # id[H]"},
      {"acomonoidal", "adl2",
       "(id[A] # mu[H]) . (PSI # mu[H]) . (id[H] # PSI # id[H]) . (((id[H] # lam[H]) . delta[H]) # id[A] # id[H])",
       "eps[H] # id[A] # id[H]"},
      {"acomonoidal", "adl3",
       "(mu[A] # id[H]) . (mu[A] # PSI) . (id[A] # PSI # id[A]) . (id[A] # id[H] # ((lam[A] # id[A]) . delta[A]))",
       "id[A] # id[H] # eps[A]"},
      {"acomonoidal", "adl4",
       "(mu[A] # id[H]) . (mu[A] # PSI) . (id[A] # PSI # id[A]) . (id[A] # id[H] # ((id[A] # lam[A]) . delta[A]))",
       "id[A] # id[H] # eps[A]"},
      {"smash-law", "dl21", "PSI . (mu[H] # id[A]) . (id[H] # lam[H] # id[A])",
       "(id[A] # mu[H]) . (PSI # id[H]) . (id[H] # PSI) . (id[H] # lam[H] # id[A])"},
      {"smash-law", "l-con", "(eps[A] # id[H]) . PSI", "id[H] # eps[A]"},
      {"smash-law", "cesp3", "PSI . (id[H] # lam[A])", "(lam[A] # id[H]) . PSI"},
      {"r-smash", "r-smash", "(id[A] # eps[H]) . PSI . c[A, H] . (id[A] # lam[H]) . PSI", "eps[H] # id[A]"},
      // double cross products
      {"double-cross", "d1", "PHI_A . (id[H] # eta[A])", "eps[H] # eta[A]"},
      {"double-cross", "d2", "PHI_H . (eta[H] # id[A])", "eta[H] # eps[A]"},
      {"double-cross", "d3", "(PHI_H # PHI_A) . delta[H # A]", "c[A, H] . PSI"},
      {"double-cross", "d4", "PHI_A . (id[H] # mu[A]) . (lam[H] # lam[A] # id[A])",
       "mu[A] . (id[A] # PHI_A) . ((PSI . (lam[H] # lam[A])) # id[A])"},
      {"double-cross", "d5", "mu[H] . (PHI_H # mu[H]) . (lam[H] # PSI # id[H]) . (delta[H] # id[A] # id[H])",
       "eps[H] # eps[A] # id[H]"},
      {"double-cross", "d6",
       "mu[H] . (PHI_H # mu[H]) . (id[H] # PSI # id[H]) . (((id[H] # lam[H]) . delta[H]) # id[A] # id[H])",
       "eps[H] # eps[A] # id[H]"},
      {"double-cross", "d7", "PHI_H . (mu[H] # id[A]) . (id[H] # lam[H] # lam[A])",
       "mu[H] . (PHI_H # id[H]) . (id[H] # (PSI . (lam[H] # lam[A])))"},
      {"double-cross", "d8", "mu[A] . (mu[A] # PHI_A) . (id[A] # PSI # lam[A]) . (id[A] # id[H] # delta[A])",
       "id[A] # eps[H] # eps[A]"},
      {"double-cross", "d9",
       "mu[A] . (mu[A] # PHI_A) . (id[A] # PSI # id[A]) . (id[A] # id[H] # ((lam[A] # id[A]) . delta[A]))",
       "id[A] # eps[H] # eps[A]"},
      // skew pairings
      {"skew", "skw1", "TAU . (mu[A] # id[H])", "(TAU # TAU) . (id[A] # c[A, H] # id[H]) . (id[A] # id[A] # delta[H])"},
      {"skew", "skw2", "TAU . (id[A] # mu[H])",
       "(TAU # TAU) . (id[A] # c[A, H] # id[H]) . ((c[A, A] . delta[A]) # id[H] # id[H])"},
      {"skew", "skw3", "TAU . (id[A] # eta[H])", "eps[A]"},
      {"skew", "skw4", "TAU . (eta[A] # id[H])", "eps[H]"},
      {"skew", "tau-inv.1", "(TAU # TAUINV) . delta[A # H]", "eps[A] # eps[H]"},
      {"skew", "tau-inv.2", "(TAUINV # TAU) . delta[A # H]", "eps[A] # eps[H]"},
      {"skew", "tau-lam", "TAU", "TAUINV . (id[A] # lam[H])"},
      {"skew", "skw5", "TAUINV . (id[A] # mu[H])",
       "(TAUINV # TAUINV) . (id[A] # c[A, H] # id[H]) . (delta[A] # id[H] # id[H])"},
      {"skew", "skw6", "TAUINV . (mu[A] # id[H])",
       "(TAUINV # TAUINV) . (id[A] # c[A, H] # id[H]) . (id[A] # id[A] # (c[H, H] . delta[H]))"},
      {"skew", "skw3-inv", "TAUINV . (id[A] # eta[H])", "eps[A]"},
      {"skew", "skw4-inv", "TAUINV . (eta[A] # id[H])", "eps[H]"},
      // actions feeding smash-type laws
      {"smash-action", "cesp1", "(id[H] # PHI) . ((c[H, H] . delta[H]) # id[A])", "(id[H] # PHI) . (delta[H] # id[A])"},
      {"smash-action", "cesp2", "PHI . (id[H] # (PHI . (lam[H] # id[A])))", "PHI . ((mu[H] . (id[H] # lam[H])) # id[A])"},
      {"two-action", "cesp4", "PHIHAT . (id[H] # PHI)", "PHI . (id[H] # PHIHAT) . (c[H, H] # id[A])"},
      {"two-action", "R3", "(id[A] # delta[H]) . T", "(T # id[H]) . (id[H] # c[H, A]) . (delta[H] # id[A])"},
      {"two-action", "R4", "T . (id[H] # PHI)", "(PHI # id[H]) . (id[H] # T) . (c[H, H] # id[A])"},
      {"two-action", "R5", "(c[H, A] # id[H]) . (id[H] # T) . (delta[H] # id[A])",
       "(T # id[H]) . (id[H] # c[H, A]) . (delta[H] # id[A])"},
      {"two-action", "R6", "(delta[A] # id[H]) . T", "(id[A] # T) . (T # id[A]) . (id[H] # delta[A])"},
      {"two-action", "R7", "(delta[A] # id[H]) . GAMMA", "(id[A] # GAMMA) . (GAMMA # id[A]) . (id[H] # delta[A])"},
      {"twisted", "61", "PHI . (id[H] # PHIR)", "PHIR . (PHI # id[H])"},
      {"twisted", "62", "PHIR . ((PHIR . (id[A] # lam[H])) # id[H])", "PHIR . (id[A] # (mu[H] . (lam[H] # id[H])))"},
      {"twisted", "65", "(PHIR # id[H]) . (id[A] # ((lam[H] # id[H]) . c[H, H] . delta[H]))",
       "(PHIR # id[H]) . (id[A] # ((lam[H] # id[H]) . delta[H]))"},
  };
  return all;
}

inline std::vector<EquationEncoding> encodings_in(std::string_view group) {
  std::vector<EquationEncoding> out;
  for (const auto& e : shipped_encodings())
    if (e.group == group) out.push_back(e);
  return out;
}

/// nullptr when no encoding is shipped under (group, tag).
inline const EquationEncoding* find_encoding(std::string_view group, std::string_view tag) {
  for (const auto& e : shipped_encodings())
    if (e.group == group && e.tag == tag) return &e;
  return nullptr;
}

/// The group an equation tag belongs to when it is unambiguous; used by
/// `hqg eval --equation TAG`.
inline const EquationEncoding* find_encoding(std::string_view tag) {
  const EquationEncoding* hit = nullptr;
  for (const auto& e : shipped_encodings())
    if (e.tag == tag) {
      if (hit) return nullptr;
      hit = &e;
    }
  return hit;
}

}  // namespace hqg::dsl
