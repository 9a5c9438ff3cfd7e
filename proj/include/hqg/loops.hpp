#pragma once

// Finite loops given by Cayley tables, the inverse-property test, and the
// Chein double M(G,2).

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hqg/errors.hpp"

namespace hqg {

struct FiniteLoop {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table;  // table[i][j] = i*j
  std::size_t identity = 0;

  std::size_t order() const { return labels.size(); }
  std::size_t mul(std::size_t i, std::size_t j) const { return table[i][j]; }
};

/// Validates a Cayley table as a loop: square, entries in range, every row
/// and column a permutation (Latin square), and `identity` two-sided.
inline FiniteLoop loop_from_table(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table,
                                  std::size_t identity) {
  std::size_t n = labels.size();
  if (n == 0) throw NotALoop("empty loop");
  if (table.size() != n) throw NotALoop("table has " + std::to_string(table.size()) + " rows, expected " + std::to_string(n));
  if (identity >= n) throw NotALoop("identity index out of range");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw NotALoop("row " + labels[i] + " has the wrong length");
    std::vector<bool> seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t v = table[i][j];
      if (v >= n) throw NotALoop("entry " + labels[i] + "*" + labels[j] + " out of range");
      if (seen[v]) throw NotALoop("row " + labels[i] + " repeats " + labels[v]);
      seen[v] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t v = table[i][j];
      if (seen[v]) throw NotALoop("column " + labels[j] + " repeats " + labels[v]);
      seen[v] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (table[identity][i] != i || table[i][identity] != i)
      throw NotALoop(labels[identity] + " is not a two-sided identity (fails at " + labels[i] + ")");
  return FiniteLoop{std::move(labels), std::move(table), identity};
}

struct IPResult {
  bool pass = false;
  std::vector<std::size_t> inverse;  // filled when every element has a two-sided inverse
  std::string witness;              // first failing instance, e.g. "left IP fails at (a,b)"
  std::string property;             // "two-sided-inverse", "left-ip", "right-ip" or "inverse-antimult"
  std::vector<std::size_t> at;      // the element(s) where it fails
};

/// Checks u^{-1}(uv) = v = (vu)u^{-1} for all u, v.
inline IPResult check_ip_loop(const FiniteLoop& l) {
  IPResult r;
  std::size_t n = l.order(), e = l.identity;
  r.inverse.assign(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (l.mul(u, v) == e && l.mul(v, u) == e) r.inverse[u] = v;
  for (std::size_t u = 0; u < n; ++u)
    if (r.inverse[u] == n) {
      r.inverse.clear();
      r.witness = l.labels[u] + " has no two-sided inverse";
      r.property = "two-sided-inverse";
      r.at = {u};
      return r;
    }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t ui = r.inverse[u];
      if (l.mul(ui, l.mul(u, v)) != v) {
        r.witness = "left inverse property fails at (" + l.labels[u] + "," + l.labels[v] + ")";
        r.property = "left-ip";
        r.at = {u, v};
        return r;
      }
      if (l.mul(l.mul(v, u), ui) != v) {
        r.witness = "right inverse property fails at (" + l.labels[u] + "," + l.labels[v] + ")";
        r.property = "right-ip";
        r.at = {u, v};
        return r;
      }
      if (r.inverse[l.mul(u, v)] != l.mul(r.inverse[v], ui)) {
        r.witness = "(uv)^-1 = v^-1 u^-1 fails at (" + l.labels[u] + "," + l.labels[v] + ")";
        r.property = "inverse-antimult";
        r.at = {u, v};
        return r;
      }
    }
  r.pass = true;
  return r;
}

/// First triple (a,b,c) in lexicographic order with (ab)c != a(bc).
inline std::optional<std::array<std::size_t, 3>> associativity_witness(const FiniteLoop& l) {
  std::size_t n = l.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (l.mul(l.mul(a, b), c) != l.mul(a, l.mul(b, c))) return std::array<std::size_t, 3>{a, b, c};
  return std::nullopt;
}

inline bool is_associative(const FiniteLoop& l) { return !associativity_witness(l); }

inline bool is_commutative_loop(const FiniteLoop& l) {
  for (std::size_t a = 0; a < l.order(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (l.mul(a, b) != l.mul(b, a)) return false;
  return true;
}

/// Moufang identity z(x(zy)) = ((zx)z)y for all x, y, z.
inline bool is_moufang(const FiniteLoop& l) {
  std::size_t n = l.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (l.mul(z, l.mul(x, l.mul(z, y))) != l.mul(l.mul(l.mul(z, x), z), y)) return false;
  return true;
}

/// C_n with labels e, g, g2, ..., g^{n-1}.
inline FiniteLoop cyclic_group(std::size_t n) {
  if (n == 0) throw NotALoop("C_0 is not a group");
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(k == 0 ? "e" : k == 1 ? "g" : "g" + std::to_string(k));
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteLoop{std::move(labels), std::move(t), 0};
}

/// S_3 as permutations of {1,2,3}: s0 = e, s1 = (12), s2 = (13), s3 = (23),
/// s4 = (123), s5 = (132); product is composition (στ)(x) = σ(τ(x)).
inline FiniteLoop symmetric_group_s3() {
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::string> labels;
  for (int k = 0; k < 6; ++k) labels.push_back("s" + std::to_string(k));
  auto find = [&](const std::array<int, 3>& p) {
    for (std::size_t k = 0; k < perms.size(); ++k)
      if (perms[k] == p) return k;
    return perms.size();
  };
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      t[i][j] = find(c);
    }
  return FiniteLoop{std::move(labels), std::move(t), 0};
}

/// G × H with labels "g,h" in lexicographic order (G major).
inline FiniteLoop direct_product(const FiniteLoop& g, const FiniteLoop& h) {
  std::size_t m = g.order(), n = h.order();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back(g.labels[i] + "," + h.labels[j]);
  std::vector<std::vector<std::size_t>> t(m * n, std::vector<std::size_t>(m * n));
  for (std::size_t a = 0; a < m * n; ++a)
    for (std::size_t b = 0; b < m * n; ++b) t[a][b] = g.mul(a / n, b / n) * n + h.mul(a % n, b % n);
  return FiniteLoop{std::move(labels), std::move(t), g.identity * n + h.identity};
}

/// M(G,2) = G ∪ Gu with σu^α · τu^β = (σ^ν τ^μ)^ν u^{α+β}, ν = (-1)^β,
/// μ = (-1)^{α+β}. Elements k < |G| are σ_k, k >= |G| are σ_{k-|G|}u
/// (label suffix "u").
inline FiniteLoop chein_double(const FiniteLoop& g) {
  if (!is_associative(g)) throw InputNotAGroup("chein_double needs an associative loop (a group)");
  IPResult ip = check_ip_loop(g);
  std::size_t n = g.order();
  auto pow = [&](std::size_t x, bool invert) { return invert ? ip.inverse[x] : x; };
  std::vector<std::string> labels = g.labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(g.labels[k] + "u");
  std::vector<std::vector<std::size_t>> t(2 * n, std::vector<std::size_t>(2 * n));
  for (std::size_t x = 0; x < 2 * n; ++x)
    for (std::size_t y = 0; y < 2 * n; ++y) {
      bool alpha = x >= n, beta = y >= n;
      std::size_t s = x % n, r = y % n;
      bool nu_inv = beta, mu_inv = alpha != beta;
      std::size_t prod = pow(g.mul(pow(s, nu_inv), pow(r, mu_inv)), nu_inv);
      t[x][y] = prod + ((alpha != beta) ? n : 0);
    }
  return FiniteLoop{std::move(labels), std::move(t), g.identity};
}

}  // namespace hqg
