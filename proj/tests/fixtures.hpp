#pragma once

// Shared corpus for the unit tests.

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "hqg/constructions.hpp"

namespace hqg {

inline void PrintTo(const Vec& v, std::ostream* os) {
  if (v.empty()) *os << "0";
  for (const auto& [idx, c] : v) {
    *os << " +" << c << "*(";
    for (std::size_t k = 0; k < idx.size(); ++k) *os << (k ? "," : "") << idx[k];
    *os << ")";
  }
}

inline void PrintTo(const LinMap& m, std::ostream* os) {
  *os << describe(m.domain()) << " -> " << describe(m.codomain()) << " {";
  for (const auto& [in, col] : m.columns()) *os << " " << label_text(m.domain(), in) << " |-> " << col.to_string(m.codomain()) << ";";
  *os << " }";
}

}  // namespace hqg

namespace fx {

using namespace hqg;

inline FieldSpec Q() { return FieldSpec::rationals(); }

inline const HopfQuasigroupData& c2() {
  static const HopfQuasigroupData s = group_algebra(cyclic_group(2), Q(), "KC2");
  return s;
}
inline const HopfQuasigroupData& c3() {
  static const HopfQuasigroupData s = group_algebra(cyclic_group(3), Q(), "KC3");
  return s;
}
inline const HopfQuasigroupData& s3() {
  static const HopfQuasigroupData s = group_algebra(symmetric_group_s3(), Q(), "KS3");
  return s;
}
inline const HopfQuasigroupData& h4() {
  static const HopfQuasigroupData s = taft_h4(Q());
  return s;
}
inline const FiniteLoop& ms32() {
  static const FiniteLoop l = chein_double(symmetric_group_s3());
  return l;
}
inline const HopfQuasigroupData& fl() {
  static const HopfQuasigroupData s = loop_algebra(ms32(), Q(), "FL");
  return s;
}
inline const SkewPairing& tau() {
  static const SkewPairing p = example_tau(Q());
  return p;
}
inline const DistLaw& psi_tau() {
  static const DistLaw d = psi_from_skew_pairing(tau());
  return d;
}

inline MultiIndex ix(std::initializer_list<std::uint32_t> v) { return MultiIndex(v); }

/// Basis index of `label` in `o`; fails the test when absent.
inline std::uint32_t at(const Obj& o, const std::string& label) {
  auto i = o.index_of(label);
  EXPECT_TRUE(i.has_value()) << label << " not in " << o.name();
  return i.value_or(0);
}

inline Vec term(const MultiIndex& idx, const Scalar& c) {
  Vec v;
  v.add(idx, c);
  return v;
}

/// Sparse map with small integer/rational coefficients, about `density` of
/// the entries nonzero.
inline LinMap random_map(std::mt19937& rng, const Factors& dom, const Factors& cod, double density = 0.4,
                         FieldSpec f = Q()) {
  LinMap m(dom, cod, f);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
  for_each_index(normalize(dom), [&](const MultiIndex& i) {
    for_each_index(normalize(cod), [&](const MultiIndex& o) {
      if (coin(rng) < density) {
        long n = num(rng);
        if (n != 0) m.add_entry(i, o, Scalar(f, mpq_class(n, den(rng))));
      }
    });
  });
  return m;
}

inline Obj obj(const std::string& name, std::size_t dim) {
  std::vector<std::string> b;
  for (std::size_t i = 0; i < dim; ++i) b.push_back(name + std::to_string(i));
  return Obj(name, b);
}

inline std::vector<std::string> failing(const AxiomReport& r) {
  std::vector<std::string> out;
  for (const auto& e : r.results)
    if (!e.pass) out.push_back(e.tag);
  return out;
}

inline ::testing::AssertionResult all_pass(const AxiomReport& r) {
  auto f = failing(r);
  if (f.empty()) return ::testing::AssertionSuccess();
  auto res = ::testing::AssertionFailure() << r.subject << " fails:";
  for (const auto& e : r.results)
    if (!e.pass) {
      res << " " << e.tag;
      if (e.witness) res << " [" << e.witness->lhs_text << " vs " << e.witness->rhs_text << "]";
      if (!e.note.empty()) res << " (" << e.note << ")";
    }
  return res;
}

inline const EquationResult& result(const AxiomReport& r, const std::string& tag) {
  const EquationResult* e = r.find(tag);
  if (!e) throw std::runtime_error("no entry " + tag + " in " + r.subject);
  return *e;
}

}  // namespace fx
