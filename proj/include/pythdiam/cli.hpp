#pragma once

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pythdiam/diophantine.hpp"
#include "pythdiam/error.hpp"
#include "pythdiam/examples.hpp"
#include "pythdiam/families.hpp"
#include "pythdiam/geometry.hpp"
#include "pythdiam/output.hpp"
#include "pythdiam/pythagorean.hpp"
#include "pythdiam/verify.hpp"

namespace pythdiam::cli {

enum exit_code : int { ok = 0, mismatch = 1, usage = 2 };

namespace detail {

inline std::vector<Natural> parse_list(const std::string& text, std::size_t count,
                                       const char* what) {
  std::vector<Natural> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Natural::parse(item));
  if (out.size() != count)
    throw error(errc::precondition_violated,
                std::string(what) + " expects " + std::to_string(count) + " comma-separated values");
  return out;
}

inline OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  return OutputFormat::table;
}

inline OutputRecord triple_record(const PrimitiveTriple& t, Natural delta = 1) {
  OutputRecord r{RecordKind::triple, {}};
  r.add("m", t.params.m).add("n", t.params.n).add("delta", delta);
  r.add("alpha", t.alpha * delta).add("beta", t.beta * delta).add("gamma", t.gamma * delta);
  return r;
}

inline std::string witnesses_text(const std::vector<Witness>& ws) {
  std::string s;
  for (const auto& w : ws) {
    if (!s.empty()) s += ';';
    s += w.quantity + "=" + w.root.to_string() + "^2";
  }
  return s;
}

inline OutputRecord member_record(const FamilyMember& m) {
  OutputRecord r{RecordKind::family_member, {}};
  r.add("family", std::string(to_string(m.family)))
      .add("kappa", m.kappa)
      .add("lambda", m.lam)
      .add("sign_variant", std::int64_t{m.sign_variant ? 1 : 0})
      .add("t1", m.t1)
      .add("t2", m.t2)
      .add("m", m.m)
      .add("n", m.n)
      .add("alpha", m.triple.alpha)
      .add("beta", m.triple.beta)
      .add("gamma", m.triple.gamma)
      .add("witnesses", witnesses_text(m.square_witnesses));
  return r;
}

inline OutputRecord verification_record(const std::string& target, const std::string& check,
                                        bool pass, const std::string& detail) {
  OutputRecord r{RecordKind::verification, {}};
  r.add("target", target).add("check", check).add("status", std::string(pass ? "pass" : "fail"));
  r.add("detail", detail);
  return r;
}

inline std::string square_text(Natural v, const std::optional<Natural>& root) {
  return root ? v.to_string() + "=" + root->to_string() + "^2" : v.to_string();
}

inline std::string params_list(const TripleSet& s) {
  std::string out;
  for (const auto& p : s) {
    const auto t = make_primitive(p.m, p.n);
    if (!out.empty()) out += ' ';
    out += "(" + t.alpha.to_string() + "," + t.beta.to_string() + "," + t.gamma.to_string() + ")";
  }
  return out.empty() ? "none" : out;
}

inline std::string points_text(const std::vector<Point3>& ps) {
  std::string out;
  for (const auto& p : ps) {
    if (!out.empty()) out += ' ';
    out += "(" + p.x.to_string() + "," + p.y.to_string() + "," + p.z.to_string() + ")";
  }
  return out.empty() ? "none" : out;
}

}  // namespace detail

/// Runs one command line (args excludes the program name). Records go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 when a verification
/// finds a mismatch or counterexample, 2 on usage errors and overflow.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pythagorean triangle diameters: enumeration, families and verification",
               "pythdiam"};
  app.require_subcommand(1);

  std::string format = "table";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
  };

  // triples
  std::string alpha_max_s;
  std::string delta_s = "1";
  auto* triples = app.add_subcommand("triples", "Enumerate primitive Pythagorean triples");
  triples->add_option("--alpha-max", alpha_max_s, "Largest hypotenuse")->required();
  triples->add_option("--delta", delta_s, "Scale every triple by this factor");
  add_format(triples);

  // diameters
  std::string sides_s;
  std::string mn_s;
  auto* diam = app.add_subcommand("diameters", "Incircle and excircle diameters");
  auto* sides_opt = diam->add_option("--sides", sides_s, "Triangle sides a,b,c (a opposite A)");
  auto* mn_opt = diam->add_option("--mn", mn_s, "Generator pair m,n of a primitive triple");
  sides_opt->excludes(mn_opt);
  add_format(diam);

  // dioph
  std::string eq_s;
  std::string z_max_s;
  std::string recover_s;
  bool brute = false;
  auto* dioph = app.add_subcommand("dioph", "Solutions of x^2+2y^2=z^2 (A) and x^2+y^2=2z^2 (B)");
  dioph->add_option("--eq", eq_s, "Equation A or B")
      ->required()
      ->check(CLI::IsMember({"A", "B"}));
  dioph->add_option("--z-max", z_max_s, "Largest z");
  dioph->add_flag("--brute", brute, "Use the exhaustive scan instead of the parametrization");
  dioph->add_option("--recover", recover_s, "Recover chord parameters of x,y,z (equation B)");
  add_format(dioph);

  // family
  std::string family_s;
  std::string kappa_s;
  std::string lambda_s;
  std::string family_alpha_s;
  bool alt = false;
  auto* family = app.add_subcommand("family", "Square-leg, square-diameter families");
  family->add_option("--id", family_s, "F1, F2, F3, F4 (= F5) or F6")
      ->required()
      ->check(CLI::IsMember({"F1", "F2", "F3", "F4", "F5", "F6"}));
  auto* kappa_opt = family->add_option("--kappa", kappa_s, "Parameter kappa");
  auto* lambda_opt = family->add_option("--lambda", lambda_s, "Parameter lambda");
  auto* fam_alpha_opt = family->add_option("--alpha-max", family_alpha_s, "Enumerate up to alpha");
  family->add_flag("--alt", alt, "Alternative sign formula for t2 (F3)");
  kappa_opt->needs(lambda_opt);
  lambda_opt->needs(kappa_opt);
  fam_alpha_opt->excludes(kappa_opt);
  add_format(family);

  // classify
  std::string classify_alpha_s;
  auto* classify = app.add_subcommand("classify", "Census of square-leg/square-diameter combinations");
  classify->add_option("--alpha-max", classify_alpha_s, "Largest hypotenuse")->required();
  add_format(classify);

  // construct
  std::string k_s;
  std::string l_s;
  std::int64_t t_val = 0;
  auto* construct = app.add_subcommand("construct", "Triangle with side k^2 and perimeter l^2");
  construct->add_option("--k", k_s, "k")->required();
  construct->add_option("--l", l_s, "l")->required();
  construct->add_option("--t", t_val, "t = beta - gamma")->required();
  add_format(construct);

  // verify
  std::string target;
  std::string v_alpha_s;
  std::string v_z_s = "20000";
  std::string v_m_s = "300";
  auto* verify = app.add_subcommand("verify", "Run a verification target");
  verify->add_option("target", target, "examples | theorem1 | completeness | consistency")
      ->required()
      ->check(CLI::IsMember({"examples", "theorem1", "completeness", "consistency"}));
  verify->add_option("--alpha-max", v_alpha_s,
                     "Bound on alpha (theorem1 default 100000, completeness default 1000000)");
  verify->add_option("--z-max", v_z_s, "Bound on z for completeness");
  verify->add_option("--m-max", v_m_s, "Bound on m for consistency");
  add_format(verify);

  try {
    std::vector<std::string> argv(args.rbegin(), args.rend());
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
  if (*diam && sides_opt->count() == 0 && mn_opt->count() == 0) {
    err << "error: diameters needs --sides or --mn\n";
    return exit_code::usage;
  }

  std::vector<OutputRecord> records;
  int code = exit_code::ok;
  try {
    if (*triples) {
      const Natural delta = Natural::parse(delta_s);
      if (delta.is_zero()) throw error(errc::bad_params, "--delta must be >= 1");
      for_each_primitive(Natural::parse(alpha_max_s), [&](const PrimitiveTriple& t) {
        records.push_back(detail::triple_record(t, delta));
      });
    } else if (*diam) {
      if (!mn_s.empty()) {
        const auto v = detail::parse_list(mn_s, 2, "--mn");
        const auto t = make_primitive(v[0], v[1]);
        const auto d = pyth_diameters(t.params);
        auto r = detail::triple_record(t);
        r.add("d", d.d).add("d_a", d.d_a).add("d_b", d.d_b).add("d_g", d.d_g);
        records.push_back(std::move(r));
      } else {
        const auto v = detail::parse_list(sides_s, 3, "--sides");
        const TriangleSides s{v[0], v[1], v[2]};
        const auto ds = diameter_squares(s);
        OutputRecord r{RecordKind::triple, {}};
        r.add("a", s.a).add("b", s.b).add("c", s.c).add("heron16", ds.heron16);
        for (Circle c : kCircles)
          r.add(std::string(circle_name(c)) + "_squared", ds[c].to_string());
        for (Circle c : kCircles) {
          const auto& d = ds.diameter(c);
          r.add(circle_name(c), d ? d->to_string() : std::string());
        }
        records.push_back(std::move(r));
      }
    } else if (*dioph) {
      const Equation eq = eq_s == "A" ? Equation::A : Equation::B;
      if (!recover_s.empty()) {
        if (eq != Equation::B) throw error(errc::precondition_violated, "--recover needs --eq B");
        const auto v = detail::parse_list(recover_s, 3, "--recover");
        const auto [k, lam] = recover_chord_params({v[0], v[1], v[2]});
        OutputRecord r{RecordKind::solution, {}};
        r.add("eq", std::string("B")).add("x", v[0]).add("y", v[1]).add("z", v[2]);
        r.add("k", k).add("lambda", lam);
        records.push_back(std::move(r));
      } else {
        if (z_max_s.empty()) throw error(errc::precondition_violated, "--z-max is required");
        const Natural z_max = Natural::parse(z_max_s);
        if (brute) {
          for (const auto& p : brute_solutions(eq, z_max)) {
            OutputRecord r{RecordKind::solution, {}};
            r.add("eq", std::string(to_string(eq))).add("x", p.x).add("y", p.y).add("z", p.z);
            records.push_back(std::move(r));
          }
        } else {
          for (const auto& s : enumerate_solutions(eq, z_max)) {
            OutputRecord r{RecordKind::solution, {}};
            r.add("eq", std::string(to_string(eq))).add("x", s.x).add("y", s.y).add("z", s.z);
            r.add("k", s.k).add("lambda", s.lam);
            records.push_back(std::move(r));
          }
        }
      }
    } else if (*family) {
      const FamilyId f = *parse_family(family_s);
      if (!family_alpha_s.empty()) {
        for (const auto& m : enumerate_family(f, Natural::parse(family_alpha_s)))
          records.push_back(detail::member_record(m));
      } else if (!kappa_s.empty()) {
        records.push_back(detail::member_record(
            gen_family(f, Natural::parse(kappa_s), Natural::parse(lambda_s), alt)));
      } else {
        throw error(errc::precondition_violated, "family needs --kappa/--lambda or --alpha-max");
      }
    } else if (*classify) {
      const auto rep = theorem1_search(Natural::parse(classify_alpha_s));
      for (Combination c : kCombinations) {
        OutputRecord r{RecordKind::census, {}};
        r.add("combination", std::int64_t{id(c)})
            .add("leg", std::string(to_string(leg(c))))
            .add("diameter", std::string(circle_name(circle(c))))
            .add("count", Natural(rep.census[id(c) - 1]));
        records.push_back(std::move(r));
      }
    } else if (*construct) {
      const auto s = square_side_perimeter_triangle(Natural::parse(k_s), Natural::parse(l_s), t_val);
      OutputRecord r{RecordKind::triple, {}};
      r.add("a", s.a).add("b", s.b).add("c", s.c).add("perimeter", s.perimeter());
      records.push_back(std::move(r));
    } else if (*verify) {
      bool all_ok = true;
      if (target == "examples") {
        for (const auto& chk : check_published_examples()) {
          std::string detail;
          for (const auto& d : chk.discrepancies) {
            if (!detail.empty()) detail += "; ";
            detail += d.quantity + ": printed " + detail::square_text(d.printed_value, d.printed_root) +
                      ", recomputed " + detail::square_text(d.computed_value, d.computed_root);
          }
          const bool pass = chk.matches_published() && chk.oracle_consistent;
          all_ok = all_ok && pass;
          OutputRecord r{RecordKind::verification, {}};
          r.add("target", std::string("examples"))
              .add("check", "example-" + std::to_string(chk.label))
              .add("status", std::string(pass ? "pass" : "fail"))
              .add("detail", chk.matches_published() ? std::string("matches published values")
                                                     : detail)
              .add("family", std::string(to_string(chk.family)))
              .add("kappa", chk.kappa)
              .add("lambda", chk.lam)
              .add("published", std::string(chk.matches_published() ? "match" : "mismatch"))
              .add("recomputation", std::string(chk.oracle_consistent ? "consistent" : "inconsistent"));
          records.push_back(std::move(r));
        }
      } else if (target == "theorem1") {
        const Natural alpha_max = Natural::parse(v_alpha_s.empty() ? "100000" : v_alpha_s);
        const auto rep = theorem1_search(alpha_max);
        all_ok = rep.ok();
        records.push_back(detail::verification_record(
            "theorem1", "combinations-6-8", rep.counterexamples.empty(),
            std::to_string(rep.counterexamples.size()) + " counterexamples; " +
                std::to_string(rep.triples_scanned) + " triples scanned"));
        records.push_back(detail::verification_record(
            "theorem1", "mod4-obstruction", rep.obstruction_failures.empty(),
            std::to_string(rep.obstruction_failures.size()) + " failures over " +
                std::to_string(rep.gamma_square_triples) + " gamma-square triples"));
        records.push_back(detail::verification_record(
            "theorem1", "both-legs-square", rep.both_legs_square.empty(),
            std::to_string(rep.both_legs_square.size()) + " triples with both legs square"));
      } else if (target == "completeness") {
        const Natural z_max = Natural::parse(v_z_s);
        for (Equation eq : {Equation::A, Equation::B}) {
          const auto c = check_solution_completeness(eq, z_max);
          all_ok = all_ok && c.ok();
          records.push_back(detail::verification_record(
              "completeness", std::string("equation-") + std::string(to_string(eq)), c.ok(),
              std::to_string(c.parametric) + " parametric, " + std::to_string(c.brute) +
                  " scanned; only parametric: " + detail::points_text(c.only_parametric) +
                  "; only scanned: " + detail::points_text(c.only_brute)));
        }
        const Natural alpha_max = Natural::parse(v_alpha_s.empty() ? "1000000" : v_alpha_s);
        for (const auto& row : completeness_census(alpha_max)) {
          const bool pass = row.unsound.empty() && row.exceptional == row.predicted;
          all_ok = all_ok && pass;
          records.push_back(detail::verification_record(
              "completeness", "combination-" + std::to_string(id(row.combination)), pass,
              std::to_string(row.classified.size()) + " classified, " +
                  std::to_string(row.enumerated.size()) +
                  " enumerated; exceptional: " + detail::params_list(row.exceptional) +
                  "; predicted: " + detail::params_list(row.predicted) +
                  "; unsound: " + detail::params_list(row.unsound)));
        }
      } else {
        const auto c = check_diameter_consistency(Natural::parse(v_m_s));
        all_ok = c.ok();
        records.push_back(detail::verification_record(
            "consistency", "diameter-formulas", c.ok(),
            std::to_string(c.checked) + " triples checked, " + std::to_string(c.failures.size()) +
                " failures"));
      }
      code = all_ok ? exit_code::ok : exit_code::mismatch;
    }
  } catch (const error& e) {
    if (e.code() == errc::overflow_detected)
      err << "overflow: " << e.what() << '\n';
    else
      err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }

  write_records(out, records, detail::parse_format(format));
  return code;
}

}  // namespace pythdiam::cli
