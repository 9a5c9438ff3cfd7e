// Builds the 48-dimensional wreath of the Taft algebra with the loop algebra
// of the Chein double of S3, checks it, and evaluates a DSL expression on it.

#include <iostream>

#include "hqg/constructions.hpp"
#include "hqg/dsl.hpp"
#include "hqg/equations.hpp"
#include "hqg/io.hpp"

using namespace hqg;

int main() {
  FieldSpec q = FieldSpec::rationals();
  SkewPairing tau = example_tau(q);
  DistLaw psi = psi_from_skew_pairing(tau);

  AxiomReport levels = check_all_levels(psi);
  std::cout << "distributive law on " << psi.a.obj().name() << ", " << psi.h.obj().name() << ": "
            << (levels.passed() ? "all levels pass" : "fails") << "\n";

  HopfQuasigroupData w = wreath_product(psi);
  std::cout << "wreath dimension " << w.obj().dim() << "\n";
  AxiomReport hopf = check_hopf_quasigroup(w);
  StructureFlags f = check_flags(w);
  std::cout << "hopf quasigroup: " << (hopf.passed() ? "yes" : "no") << ", associative: " << (f.associative ? "yes" : "no")
            << ", cocommutative: " << (f.cocommutative ? "yes" : "no") << "\n";

  // order of λ on the wreath, via DSL expressions lam[W] . ... . lam[W]
  dsl::Context ctx;
  ctx.bind("W", w);
  LinMap id = LinMap::identity({w.obj()}, q);
  std::string expr = "lam[W]";
  int order = 1;
  while (order < 16 && !(dsl::eval(expr, ctx) == id)) {
    expr += " . lam[W]";
    ++order;
  }
  std::cout << "order of lambda: " << order << "\n";

  // rows of Ψ that carry a sign
  std::cout << "\nPsi on y⊗FL:\n";
  std::string text = io::map_text(psi.psi);
  std::size_t from = text.find("  y⊗s0 "), to = text.find("  w⊗s0 ");
  std::cout << text.substr(from, to - from);
}
