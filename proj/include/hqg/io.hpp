#pragma once

// Structure, map and loop files (JSON) and machine-readable reports.
//
// Written files are canonical: fixed key order, one structure-constant
// entry per line, entries sorted by input then output multi-index, exact
// coefficients ("n" or "n/d" strings over Q, integer residues over GF(p)).
// Reading accepts any JSON layout carrying the same content.

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hqg/constructions.hpp"

namespace hqg::io {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

namespace detail {

inline std::string quote(const std::string& s) { return json(s).dump(); }

inline std::string labels_json(const std::vector<std::string>& labels) {
  std::string out = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? ", " : "") + quote(labels[i]);
  return out + "]";
}

inline std::string coeff_json(const Scalar& c) {
  return c.field().is_rational() ? quote(c.to_string()) : c.to_string();
}

inline std::string object_json(const Obj& o) {
  return "{\"name\": " + quote(o.name()) + ", \"basis\": " + labels_json(o.basis()) + "}";
}

/// One entry per line, in (input, output) multi-index order.
inline std::string entries_json(const LinMap& m, const std::string& indent) {
  std::string out = "[";
  bool first = true;
  for (const auto& [in, col] : m.columns())
    for (const auto& [o, c] : col) {
      out += (first ? "\n" : ",\n") + indent + "  [" + labels_json(labels_of(m.domain(), in)) + ", " +
             labels_json(labels_of(m.codomain(), o)) + ", " + coeff_json(c) + "]";
      first = false;
    }
  return out + (first ? "]" : "\n" + indent + "]");
}

[[noreturn]] inline void fail(const std::string& msg) { throw FormatError(msg); }

inline const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::string need_string(const json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

inline void check_version(const json& j, const char* kind) {
  if (j.contains("format-version") && (!j.at("format-version").is_number_integer() ||
                                       j.at("format-version").get<long>() != kFormatVersion))
    fail("unsupported format-version");
  if (j.contains("kind") && (!j.at("kind").is_string() || j.at("kind").get<std::string>() != kind))
    fail(std::string("expected a file of kind \"") + kind + "\"");
}

inline FieldSpec read_field(const json& j) {
  try {
    return FieldSpec::parse(need_string(need(j, "field"), "field"));
  } catch (const FieldError& e) {
    fail(std::string("bad field: ") + e.what());
  }
}

inline Obj read_object(const json& j) {
  std::string name = need_string(need(j, "name"), "object name");
  const json& b = need(j, "basis");
  if (!b.is_array()) fail("object basis must be a list");
  std::vector<std::string> basis;
  for (const auto& l : b) basis.push_back(need_string(l, "basis label"));
  try {
    return Obj(std::move(name), std::move(basis));
  } catch (const ShapeError& e) {
    fail(e.what());
  }
}

inline Scalar read_coeff(const json& c, FieldSpec f) {
  Scalar s = Scalar::zero(f);
  try {
    if (c.is_string())
      s = Scalar::parse(f, c.get<std::string>());
    else if (c.is_number_integer())
      s = Scalar(f, c.get<long>());
    else
      fail("coefficient must be a string or an integer");
  } catch (const FieldError& e) {
    fail(std::string("bad coefficient: ") + e.what());
  }
  if (s.is_zero()) fail("zero coefficient " + c.dump() + " (omit the entry instead)");
  return s;
}

inline MultiIndex read_labels(const json& j, const Factors& fs, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be a list of basis labels");
  if (j.size() != fs.size())
    fail(std::string(what) + " has " + std::to_string(j.size()) + " labels, expected " + std::to_string(fs.size()) +
         " for " + describe(fs));
  MultiIndex idx;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    std::string l = need_string(j[k], "basis label");
    auto i = fs[k].index_of(l);
    if (!i) fail("unknown basis label \"" + l + "\" for " + fs[k].name());
    idx.push_back(*i);
  }
  return idx;
}

inline LinMap read_entries(const json& j, const Factors& dom, const Factors& cod, FieldSpec f, const std::string& what) {
  if (!j.is_array()) fail(what + " must be a list of entries");
  LinMap m(dom, cod, f);
  std::set<std::pair<MultiIndex, MultiIndex>> seen;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) fail(what + ": each entry is [inputs, outputs, coefficient]");
    MultiIndex in = read_labels(e[0], dom, "entry input"), out = read_labels(e[1], cod, "entry output");
    if (!seen.emplace(in, out).second) fail(what + ": duplicate entry " + e[0].dump() + " -> " + e[1].dump());
    m.add_entry(in, out, read_coeff(e[2], f));
  }
  return m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Structures

inline std::string write_structure(const HopfQuasigroupData& s) {
  const HopfQuasigroupData* p = &s;
  std::string out = "{\n";
  out += "  \"format-version\": " + std::to_string(kFormatVersion) + ",\n";
  out += "  \"kind\": \"structure\",\n";
  out += "  \"field\": " + detail::quote(s.field().to_string()) + ",\n";
  out += "  \"object\": " + detail::object_json(s.obj()) + ",\n";
  const std::pair<const char*, const LinMap*> maps[] = {{"eta", &p->eta_map()},
                                                        {"mu", &p->mu_map()},
                                                        {"eps", &p->eps_map()},
                                                        {"delta", &p->delta_map()},
                                                        {"lambda", &p->lambda_map()}};
  for (std::size_t i = 0; i < 5; ++i)
    out += std::string("  \"") + maps[i].first + "\": " + detail::entries_json(*maps[i].second, "  ") +
           (i + 1 < 5 ? ",\n" : "\n");
  return out + "}\n";
}

inline HopfQuasigroupData read_structure(const std::string& text) {
  json j = detail::parse_text(text);
  detail::check_version(j, "structure");
  FieldSpec f = detail::read_field(j);
  Obj o = detail::read_object(detail::need(j, "object"));
  Factors a = normalize({o}), aa = normalize({o, o}), k;
  auto rd = [&](const char* key, const Factors& d, const Factors& c) {
    return detail::read_entries(detail::need(j, key), d, c, f, key);
  };
  return HopfQuasigroupData(o, f, rd("eta", k, a), rd("mu", aa, a), rd("eps", a, k), rd("delta", a, aa),
                            rd("lambda", a, a));
}

// ---------------------------------------------------------------------------
// Maps between tensor products of named objects

inline std::string write_map(const LinMap& m) {
  std::vector<Obj> objs;
  auto add = [&](const Obj& o) {
    for (const auto& x : objs)
      if (x.name() == o.name()) {
        if (!(x == o)) throw FormatError("two different objects named " + o.name());
        return;
      }
    objs.push_back(o);
  };
  for (const auto& o : m.domain()) add(o);
  for (const auto& o : m.codomain()) add(o);
  auto names = [](const Factors& fs) {
    std::vector<std::string> n;
    for (const auto& o : fs) n.push_back(o.name());
    return n;
  };
  std::string out = "{\n";
  out += "  \"format-version\": " + std::to_string(kFormatVersion) + ",\n";
  out += "  \"kind\": \"map\",\n";
  out += "  \"field\": " + detail::quote(m.field().to_string()) + ",\n";
  out += "  \"objects\": [";
  for (std::size_t i = 0; i < objs.size(); ++i) out += (i ? ",\n    " : "\n    ") + detail::object_json(objs[i]);
  out += objs.empty() ? "],\n" : "\n  ],\n";
  out += "  \"domain\": " + detail::labels_json(names(m.domain())) + ",\n";
  out += "  \"codomain\": " + detail::labels_json(names(m.codomain())) + ",\n";
  out += "  \"entries\": " + detail::entries_json(m, "  ") + "\n";
  return out + "}\n";
}

inline LinMap read_map(const std::string& text) {
  json j = detail::parse_text(text);
  detail::check_version(j, "map");
  FieldSpec f = detail::read_field(j);
  std::map<std::string, Obj> objs;
  const json& ol = detail::need(j, "objects");
  if (!ol.is_array()) detail::fail("objects must be a list");
  for (const auto& o : ol) {
    Obj x = detail::read_object(o);
    if (!objs.emplace(x.name(), x).second) detail::fail("object " + x.name() + " declared twice");
  }
  auto factors = [&](const char* key) {
    const json& l = detail::need(j, key);
    if (!l.is_array()) detail::fail(std::string(key) + " must be a list of object names");
    Factors fs;
    for (const auto& n : l) {
      std::string s = detail::need_string(n, "object name");
      auto it = objs.find(s);
      if (it == objs.end()) detail::fail("undeclared object " + s);
      fs.push_back(it->second);
    }
    return normalize(fs);
  };
  Factors dom = factors("domain"), cod = factors("codomain");
  return detail::read_entries(detail::need(j, "entries"), dom, cod, f, "entries");
}

// ---------------------------------------------------------------------------
// Loops

inline std::string write_loop(const FiniteLoop& l) {
  std::string out = "{\n";
  out += "  \"format-version\": " + std::to_string(kFormatVersion) + ",\n";
  out += "  \"kind\": \"loop\",\n";
  out += "  \"labels\": " + detail::labels_json(l.labels) + ",\n";
  out += "  \"table\": [";
  for (std::size_t i = 0; i < l.order(); ++i) {
    out += (i ? ",\n    [" : "\n    [");
    for (std::size_t j = 0; j < l.order(); ++j) out += (j ? ", " : "") + std::to_string(l.table[i][j]);
    out += "]";
  }
  out += "\n  ],\n";
  out += "  \"identity\": " + std::to_string(l.identity) + "\n";
  return out + "}\n";
}

/// Raises FormatError for malformed JSON and NotALoop for tables that are
/// well-formed but not loops.
inline FiniteLoop read_loop(const std::string& text) {
  json j = detail::parse_text(text);
  detail::check_version(j, "loop");
  const json& lj = detail::need(j, "labels");
  const json& tj = detail::need(j, "table");
  const json& ij = detail::need(j, "identity");
  if (!lj.is_array() || !tj.is_array()) detail::fail("labels and table must be lists");
  std::vector<std::string> labels;
  for (const auto& l : lj) labels.push_back(detail::need_string(l, "label"));
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : tj) {
    if (!row.is_array()) detail::fail("table rows must be lists");
    std::vector<std::size_t> r;
    for (const auto& v : row) {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
        detail::fail("table entries must be non-negative indices");
      r.push_back(v.get<std::size_t>());
    }
    table.push_back(std::move(r));
  }
  std::size_t e = 0;
  if (ij.is_number_integer() && ij.get<long>() >= 0) {
    e = ij.get<std::size_t>();
  } else if (ij.is_string()) {
    auto it = std::find(labels.begin(), labels.end(), ij.get<std::string>());
    if (it == labels.end()) detail::fail("identity label not among the labels");
    e = static_cast<std::size_t>(it - labels.begin());
  } else {
    detail::fail("identity must be an index or a label");
  }
  return loop_from_table(std::move(labels), std::move(table), e);
}

// ---------------------------------------------------------------------------
// Files

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

inline HopfQuasigroupData load_structure(const std::string& path) { return read_structure(read_file(path)); }
inline LinMap load_map(const std::string& path) { return read_map(read_file(path)); }
inline FiniteLoop load_loop(const std::string& path) { return read_loop(read_file(path)); }

// ---------------------------------------------------------------------------
// Reports

inline ojson witness_json(const Witness& w) {
  return ojson{{"input", w.input_labels}, {"lhs", w.lhs_text}, {"rhs", w.rhs_text}};
}

inline ojson report_json(const AxiomReport& r, const std::string& command) {
  ojson eqs = ojson::array();
  for (const auto& e : r.results) {
    ojson x{{"tag", e.tag}, {"pass", e.pass}};
    if (e.witness) x["witness"] = witness_json(*e.witness);
    if (!e.note.empty()) x["note"] = e.note;
    eqs.push_back(std::move(x));
  }
  ojson flags = ojson::object();
  for (const auto& fl : r.flags) flags[fl.name] = fl.value;
  return ojson{{"command", command}, {"subject", r.subject}, {"pass", r.passed()}, {"equations", eqs},
               {"flags", flags}};
}

/// "in ↦ image" per nonzero column, in index order.
inline std::string map_text(const LinMap& m) {
  std::string out = describe(m.domain()) + " -> " + describe(m.codomain()) + "\n";
  for (const auto& [in, col] : m.columns())
    out += "  " + label_text(m.domain(), in) + " |-> " + col.to_string(m.codomain()) + "\n";
  return out;
}

}  // namespace hqg::io
