#pragma once

// The `hqg` command line: check, distlaw, construct, eval.
// Exit codes: 0 every requested equation passed, 1 some equation failed,
// 2 malformed input (files, flags, expressions, unbound names).

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hqg/dsl.hpp"
#include "hqg/equations.hpp"
#include "hqg/io.hpp"

namespace hqg::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kMalformed = 2 };

namespace detail {

/// Field for constructions without input files: --field, then HQG_FIELD, then Q.
inline FieldSpec default_field(const std::string& flag) {
  if (!flag.empty()) return FieldSpec::parse(flag);
  if (const char* env = std::getenv("HQG_FIELD"); env && *env) return FieldSpec::parse(env);
  return FieldSpec::rationals();
}

inline AxiomReport run_axioms(const HopfQuasigroupData& s, const std::string& which) {
  if (which == "magma") return check_unital_magma(s);
  if (which == "comonoid") return check_comonoid(s);
  if (which == "bimonoid") return check_nonassoc_bimonoid(s);
  if (which == "hopf") return check_hopf_quasigroup(s);
  if (which == "antipode") return check_antipode_properties(s);
  if (which == "flags") {
    // Flags describe the structure; they are reported as equations so the
    // witnesses (e.g. a non-associative triple) are visible.
    return check_flags(s).report;
  }
  AxiomReport r = check_nonassoc_bimonoid(s);
  r.append(check_hopf_quasigroup(s));
  r.append(check_antipode_properties(s));
  r.subject = "all axioms of " + s.obj().name();
  StructureFlags fl = check_flags(s);
  r.flags = fl.report.flags;
  return r;
}

inline AxiomReport run_loop_axioms(const FiniteLoop& l, const std::string& which) {
  if (which == "flags") return check_loop_flags(l);
  if (which != "ip" && which != "all") throw FormatError("--axioms " + which + " does not apply to a loop");
  AxiomReport r = check_loop(l);
  if (which == "all") r.flags = check_loop_flags(l).flags;
  return r;
}

inline AxiomReport run_level(const DistLaw& d, const std::string& level) {
  if (level == "dl") return check_distributive_law(d);
  if (level == "strong") return check_strong_form(d);
  if (level == "comonoidal") return check_comonoidal(d);
  if (level == "acomonoidal") return check_a_comonoidal(d);
  return check_all_levels(d);
}

inline DistLaw load_law(const HopfQuasigroupData& h, const HopfQuasigroupData& a, const std::string& psi) {
  if (psi == "flip") return flip_law(h, a);
  return DistLaw(h, a, io::load_map(psi));
}

inline int emit(const AxiomReport& r, const std::string& command, std::ostream& out) {
  out << io::report_json(r, command).dump(2) << "\n";
  return r.passed() ? kPass : kFail;
}

/// Loads "name=file" bindings; the file kind decides the binding type.
inline dsl::Context load_context(const std::vector<std::string>& specs) {
  dsl::Context ctx;
  for (const auto& spec : specs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw FormatError("context binding must be name=file: " + spec);
    std::string name = spec.substr(0, eq), path = spec.substr(eq + 1);
    std::string text = io::read_file(path);
    io::json j = io::detail::parse_text(text);
    std::string kind = j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>()
                       : j.contains("entries")                      ? "map"
                                                                    : "structure";
    try {
      if (kind == "structure")
        ctx.bind(name, io::read_structure(text));
      else if (kind == "map")
        ctx.bind(name, io::read_map(text));
      else
        throw FormatError(path + ": cannot bind a file of kind " + kind);
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  return ctx;
}

inline std::string expr_text(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return io::read_file(arg.substr(1));
  return arg;
}

}  // namespace detail

/// Runs one command line; output goes to `out`, diagnostics to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for Hopf quasigroups and distributive laws", "hqg"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print help");  // -h would clash with --h

  // check
  std::string check_file, axioms = "all";
  auto* check = app.add_subcommand("check", "Check the axioms of a structure file");
  check->add_option("file", check_file, "Structure or loop file")->required();
  check->add_option("--axioms", axioms, "Which identities to check (loops: ip, flags, all)")
      ->check(CLI::IsMember({"magma", "comonoid", "bimonoid", "hopf", "antipode", "flags", "ip", "all"}));

  // distlaw
  std::string law_a, law_h, law_psi, level = "all";
  auto* distlaw = app.add_subcommand("distlaw", "Check a distributive law H#A -> A#H");
  distlaw->add_option("--a", law_a, "Structure file for A")->required();
  distlaw->add_option("--h", law_h, "Structure file for H")->required();
  distlaw->add_option("--psi", law_psi, "Map file for the law, or 'flip'")->required();
  distlaw->add_option("--level", level, "Which level to check")
      ->check(CLI::IsMember({"dl", "strong", "comonoidal", "acomonoidal", "all"}));

  // construct
  std::string kind, out_path, field_flag, c_a, c_h, c_psi, c_loop, c_group, c_tau, c_action, c_action2, c_name,
      c_preset, c_side = "left";
  bool c_check = false;
  auto* construct = app.add_subcommand("construct", "Build a structure, loop or law and write it to a file");
  construct
      ->add_option("kind", kind, "What to build")
      ->required()
      ->check(CLI::IsMember({"taft4", "loop-algebra", "group-algebra", "chein", "wreath", "psi-skew", "psi-smash",
                             "gamma", "twisted-smash", "group-table", "tau-example", "inversion-action"}));
  construct->add_option("-o,--output", out_path, "Output file")->required();
  construct->add_option("--field", field_flag, "Q or GF:p (default: $HQG_FIELD, then Q)");
  construct->add_option("--a", c_a, "Structure file for A");
  construct->add_option("--h", c_h, "Structure file for H");
  construct->add_option("--psi", c_psi, "Map file for the law, or 'flip'");
  construct->add_option("--loop", c_loop, "Loop table file");
  construct->add_option("--group", c_group, "Group table file");
  construct->add_option("--tau", c_tau, "Map file for the skew pairing A#H -> I");
  construct->add_option("--action", c_action, "Map file for the left action H#A -> A");
  construct->add_option("--action-hat,--right-action", c_action2,
                        "Second action: H#A -> A for gamma, A#H -> A for twisted-smash");
  construct->add_option("--name", c_name, "Object name of the built algebra");
  construct->add_option("--preset", c_preset, "group-table: s3, cN (cyclic of order N), or c2xc2");
  construct->add_option("--side", c_side, "inversion-action: left or right")->check(CLI::IsMember({"left", "right"}));
  construct->add_flag("--check", c_check, "Also run the recipe's checks; exit 1 if any fails");

  // eval
  std::string expr, compare, equation;
  std::vector<std::string> ctx_specs;
  auto* evalc = app.add_subcommand("eval", "Evaluate or compare morphism expressions");
  evalc->add_option("--expr", expr, "Expression text, or @file");
  evalc->add_option("--ctx", ctx_specs, "name=file bindings")->delimiter(',');
  evalc->add_option("--compare", compare, "Second expression; prints the equality verdict");
  evalc->add_option("--equation", equation, "Shipped equation tag (or group:tag) to check");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "hqg: " << e.what() << "\n";
    return kMalformed;
  }

  try {
    if (*check) {
      std::string text = io::read_file(check_file);
      io::json j = io::detail::parse_text(text);
      if (j.is_object() && j.contains("kind") && j["kind"] == "loop") {
        FiniteLoop l = io::read_loop(text);
        return detail::emit(detail::run_loop_axioms(l, axioms), "check", out);
      }
      if (axioms == "ip") throw FormatError("--axioms ip applies to loop files");
      HopfQuasigroupData s = io::read_structure(text);
      return detail::emit(detail::run_axioms(s, axioms), "check", out);
    }

    if (*distlaw) {
      HopfQuasigroupData a = io::load_structure(law_a), h = io::load_structure(law_h);
      DistLaw d = detail::load_law(h, a, law_psi);
      return detail::emit(detail::run_level(d, level), "distlaw", out);
    }

    if (*construct) {
      auto need = [&](const std::string& v, const char* flag) {
        if (v.empty()) throw FormatError(std::string("construct ") + kind + " needs " + flag);
        return v;
      };
      std::optional<AxiomReport> report;
      std::string text;
      if (kind == "taft4") {
        text = io::write_structure(taft_h4(detail::default_field(field_flag)));
      } else if (kind == "loop-algebra" || kind == "group-algebra") {
        std::string file = !c_loop.empty() ? c_loop : need(c_group, "--loop or --group");
        FiniteLoop l = io::load_loop(file);
        FieldSpec f = detail::default_field(field_flag);
        text = io::write_structure(kind == "loop-algebra" ? loop_algebra(l, f, c_name.empty() ? "FL" : c_name)
                                                          : group_algebra(l, f, c_name.empty() ? "KG" : c_name));
      } else if (kind == "chein") {
        text = io::write_loop(chein_double(io::load_loop(need(!c_group.empty() ? c_group : c_loop, "--group"))));
      } else if (kind == "group-table") {
        std::string p = need(c_preset, "--preset");
        FiniteLoop g = p == "s3"       ? symmetric_group_s3()
                       : p == "c2xc2"  ? direct_product(cyclic_group(2), cyclic_group(2))
                       : p.size() > 1 && p[0] == 'c' && p.find_first_not_of("0123456789", 1) == std::string::npos
                           ? cyclic_group(std::stoul(p.substr(1)))
                           : throw FormatError("unknown preset " + p);
        text = io::write_loop(g);
      } else if (kind == "tau-example") {
        text = io::write_map(example_tau(detail::default_field(field_flag)).tau);
      } else {
        HopfQuasigroupData a = io::load_structure(need(c_a, "--a")), h = io::load_structure(need(c_h, "--h"));
        if (kind == "wreath") {
          DistLaw d = detail::load_law(h, a, need(c_psi, "--psi"));
          if (c_check) report = check_all_levels(d);
          text = io::write_structure(wreath_product(d));
        } else if (kind == "psi-skew") {
          SkewPairing p(a, h, io::load_map(need(c_tau, "--tau")));
          if (c_check) report = check_skew_pairing(p);
          text = io::write_map(psi_from_skew_pairing(p).psi);
        } else if (kind == "psi-smash") {
          QuasimoduleAction act(h, a, io::load_map(need(c_action, "--action")));
          if (c_check) report = check_smash(act);
          text = io::write_map(smash_psi(act).psi);
        } else if (kind == "gamma") {
          QuasimoduleAction phi(h, a, io::load_map(need(c_action, "--action")));
          QuasimoduleAction hat(h, a, io::load_map(need(c_action2, "--action-hat")));
          if (c_check) report = check_gamma_two_actions(phi, hat);
          text = io::write_map(gamma_two_actions(phi, hat).psi);
        } else if (kind == "twisted-smash") {
          QuasimoduleAction left(h, a, io::load_map(need(c_action, "--action")));
          QuasimoduleAction right(h, a, io::load_map(need(c_action2, "--right-action")), Side::Right);
          if (c_check) report = check_twisted_smash(left, right);
          text = io::write_map(twisted_smash_gamma(left, right).psi);
        } else {  // inversion-action
          Side side = c_side == "left" ? Side::Left : Side::Right;
          text = io::write_map(inversion_action(h, a, side).phi);
        }
      }
      io::write_file(out_path, text);
      if (report) return detail::emit(*report, "construct " + kind, out);
      return kPass;
    }

    // eval
    dsl::Context ctx = detail::load_context(ctx_specs);
    std::string lhs = expr.empty() ? "" : detail::expr_text(expr), rhs = compare.empty() ? "" : detail::expr_text(compare);
    std::string tag;
    if (!equation.empty()) {
      auto colon = equation.find(':');
      const dsl::EquationEncoding* enc = colon == std::string::npos
                                             ? dsl::find_encoding(equation)
                                             : dsl::find_encoding(equation.substr(0, colon), equation.substr(colon + 1));
      if (!enc) throw FormatError("no unique shipped equation " + equation + " (use group:tag)");
      lhs = enc->lhs;
      rhs = enc->rhs;
      tag = enc->tag;
    }
    if (lhs.empty()) throw FormatError("eval needs --expr or --equation");
    if (rhs.empty()) {
      out << io::map_text(dsl::eval(lhs, ctx));
      return kPass;
    }
    EquationResult r = dsl::check_equal(lhs, rhs, ctx, tag.empty() ? "compare" : tag);
    AxiomReport rep{"expression comparison", {r}, {}};
    return detail::emit(rep, "eval", out);
  } catch (const dsl::DslError& e) {
    err << "hqg: " << e.what() << "\n";
  } catch (const FormatError& e) {
    err << "hqg: malformed input: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {  // ShapeError, NotALoop, NotIPLoop, InputNotAGroup
    err << "hqg: " << e.what() << "\n";
  } catch (const std::domain_error& e) {  // FieldError, CharTwo
    err << "hqg: " << e.what() << "\n";
  }
  return kMalformed;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args), out, err);
}

}  // namespace hqg::cli
