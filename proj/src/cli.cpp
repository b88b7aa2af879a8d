#include "cob2/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "cob2/algebra_io.hpp"
#include "cob2/classify.hpp"
#include "cob2/selftest.hpp"
#include "cob2/surface.hpp"
#include "cob2/term.hpp"
#include "cob2/theta.hpp"

namespace cob2 {

namespace {

using ordered_json = nlohmann::ordered_json;

CategoryFlavor flavor_from_string(const std::string& s) {
  if (s == "oriented") return CategoryFlavor::Oriented;
  if (s == "orientable") return CategoryFlavor::Orientable;
  if (s == "unoriented") return CategoryFlavor::Unoriented;
  throw CLI::ValidationError("--flavor", "expected oriented|orientable|unoriented");
}

ordered_json arity_json(const Arity& a) {
  return ordered_json{{"inputs", a.inputs}, {"outputs", a.outputs}};
}

ordered_json membership_json(const MembershipReport& rep) {
  ordered_json comps = ordered_json::array();
  for (const ComponentReport& c : rep.components) {
    comps.push_back(ordered_json{{"chi", c.chi},
                                 {"b", c.boundary},
                                 {"X", c.x},
                                 {"crosscaps", c.crosscaps},
                                 {"even", c.even}});
  }
  return ordered_json{{"components", comps},
                      {"oriented", rep.oriented},
                      {"orientable_cat", rep.orientable_cat},
                      {"unoriented", rep.unoriented}};
}

void print_membership_table(std::ostream& out, const MembershipReport& rep) {
  out << "component  chi  b    X  crosscaps  even\n";
  int i = 0;
  for (const ComponentReport& c : rep.components) {
    out << (c.open ? "open " : "closed ") << ++i << "\t" << c.chi << "\t" << c.boundary
        << "\t" << c.x << "\t" << c.crosscaps << "\t" << (c.even ? "yes" : "no") << "\n";
  }
  out << "oriented: " << (rep.oriented ? "yes" : "no") << "\n";
  out << "orientable: " << (rep.orientable_cat ? "yes" : "no") << "\n";
  out << "unoriented: " << (rep.unoriented ? "yes" : "no") << "\n";
}

ordered_json matrix_json(const DenseMatrix<Rational>& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return ordered_json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

void print_matrix(std::ostream& out, const DenseMatrix<Rational>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).str();
    out << "\n";
  }
}

ordered_json report_json(const ValidationReport& rep) {
  ordered_json checks = ordered_json::array();
  for (const auto& e : rep.entries)
    checks.push_back(ordered_json{{"axiom", e.axiom}, {"pass", e.pass}, {"witness", e.witness}});
  return checks;
}

struct CommonArgs {
  bool json = false;
  std::string flavor = "unoriented";
  std::string algebra_path;
  std::uint64_t seed = 0;
  long cases = 200;
  std::vector<std::string> terms;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cob2 - normal forms, membership and TQFT evaluation for "
               "two-dimensional cobordism terms"};
  app.require_subcommand(1);

  CommonArgs a;

  auto add_term = [&](CLI::App* cmd, int count) {
    cmd->add_option("term", a.terms, "cobordism term(s)")->expected(count)->required();
  };
  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", a.json, "machine output"); };
  auto add_flavor = [&](CLI::App* cmd) {
    cmd->add_option("--flavor", a.flavor, "oriented|orientable|unoriented")
        ->default_str("unoriented");
  };
  auto add_algebra = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", a.algebra_path, "algebra spec JSON file")->required();
  };

  CLI::App* parse_cmd = app.add_subcommand("parse", "parse and arity-check a term");
  add_term(parse_cmd, 1);
  add_json(parse_cmd);

  CLI::App* normalize_cmd =
      app.add_subcommand("normalize", "topological normal form of a term");
  add_term(normalize_cmd, 1);
  add_json(normalize_cmd);

  CLI::App* eq_cmd = app.add_subcommand("eq", "decide equality of two terms");
  add_term(eq_cmd, 2);
  add_json(eq_cmd);
  add_flavor(eq_cmd);

  CLI::App* member_cmd =
      app.add_subcommand("member", "category membership report for a term");
  add_term(member_cmd, 1);
  add_json(member_cmd);
  add_flavor(member_cmd);

  CLI::App* synth_cmd =
      app.add_subcommand("synth", "resynthesize a generator word from the normal form");
  add_term(synth_cmd, 1);
  add_json(synth_cmd);
  add_flavor(synth_cmd);

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a term as an exact matrix");
  add_term(eval_cmd, 1);
  add_json(eval_cmd);
  add_algebra(eval_cmd);

  CLI::App* check_cmd = app.add_subcommand("check-algebra", "validate an algebra spec file");
  add_json(check_cmd);
  add_algebra(check_cmd);

  CLI::App* theta_cmd =
      app.add_subcommand("find-theta", "search for a Moebius element of an algebra");
  add_json(theta_cmd);
  add_algebra(theta_cmd);

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the verification suites");
  add_json(selftest_cmd);
  selftest_cmd->add_option("--seed", a.seed, "random seed")->default_val(0);
  selftest_cmd->add_option("--cases", a.cases, "cases per randomized suite")->default_val(200);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*parse_cmd) {
      TermPtr t = parse(a.terms[0]);
      Arity ar = arity(t);
      if (a.json) {
        out << ordered_json{{"term", render(t)}, {"arity", arity_json(ar)}}.dump() << "\n";
      } else {
        out << render(t) << "\n";
        out << "arity: " << ar.inputs << " -> " << ar.outputs << "\n";
      }
      return 0;
    }

    if (*normalize_cmd) {
      TermPtr t = parse(a.terms[0]);
      Surface s = normalize(t);
      if (a.json) {
        out << ordered_json{{"arity", arity_json(s.arity)}, {"surface", to_text(s)}}.dump()
            << "\n";
      } else {
        out << "arity: " << s.arity.inputs << " -> " << s.arity.outputs << "\n";
        out << to_text(s) << "\n";
      }
      return 0;
    }

    if (*eq_cmd) {
      CategoryFlavor flavor = flavor_from_string(a.flavor);
      bool equal = decide_equal(parse(a.terms[0]), parse(a.terms[1]), flavor);
      if (a.json)
        out << ordered_json{{"equal", equal}}.dump() << "\n";
      else
        out << (equal ? "equal" : "not equal") << "\n";
      return equal ? 0 : 1;
    }

    if (*member_cmd) {
      CategoryFlavor flavor = flavor_from_string(a.flavor);
      TermPtr t = parse(a.terms[0]);
      MembershipReport rep = in_ocob2(normalize(t));
      if (a.json)
        out << membership_json(rep).dump() << "\n";
      else
        print_membership_table(out, rep);
      return rep.verdict(flavor) ? 0 : 1;
    }

    if (*synth_cmd) {
      CategoryFlavor flavor = flavor_from_string(a.flavor);
      Surface s = normalize(parse(a.terms[0]));
      TermPtr word;
      try {
        word = synthesize_term(s, flavor);
      } catch (const FlavorError& e) {
        if (a.json)
          out << ordered_json{{"error", e.what()}}.dump() << "\n";
        else
          err << e.what() << "\n";
        return 1;
      }
      if (a.json)
        out << ordered_json{{"term", render(word)}}.dump() << "\n";
      else
        out << render(word) << "\n";
      return 0;
    }

    if (*eval_cmd) {
      AlgebraSpec spec = load_algebra_file(a.algebra_path);
      TermPtr t = parse(a.terms[0]);
      ExtendedAlgebra<Rational> ext =
          make_extended(spec.algebra, spec.involution,
                        term_uses(t, Generator::Theta) ? spec.theta : std::nullopt);
      DenseMatrix<Rational> m = evaluate(t, ext);
      if (a.json)
        out << matrix_json(m).dump() << "\n";
      else
        print_matrix(out, m);
      return 0;
    }

    if (*check_cmd) {
      AlgebraSpec spec = load_algebra_file(a.algebra_path);
      ValidationReport alg_rep = validate_algebra(spec.algebra);
      bool ok = alg_rep.ok();
      ValidationReport inv_rep, ext_rep;
      if (ok) {
        inv_rep = validate_involution(spec.algebra, spec.involution);
        ok = inv_rep.ok();
      }
      bool extended_checked = false;
      if (ok && spec.theta) {
        extended_checked = true;
        ext_rep = check_extended(spec.algebra, spec.involution, *spec.theta);
        ok = ext_rep.ok();
      }
      if (a.json) {
        ordered_json j{{"algebra", report_json(alg_rep)},
                       {"involution", report_json(inv_rep)},
                       {"ok", ok}};
        if (extended_checked) j["extended"] = report_json(ext_rep);
        out << j.dump() << "\n";
      } else {
        out << alg_rep.summary() << inv_rep.summary();
        if (extended_checked) out << ext_rep.summary();
        out << (ok ? "ok" : "failed") << "\n";
      }
      return ok ? 0 : 1;
    }

    if (*theta_cmd) {
      AlgebraSpec spec = load_algebra_file(a.algebra_path);
      ValidationReport alg_rep = validate_algebra(spec.algebra);
      if (!alg_rep.ok()) throw ValidationFailure("not a commutative Frobenius algebra", alg_rep);
      ValidationReport inv_rep = validate_involution(spec.algebra, spec.involution);
      if (!inv_rep.ok())
        throw ValidationFailure("not a Frobenius algebra involution", inv_rep);
      ThetaResult res = find_theta(spec.algebra, spec.involution);
      if (a.json) {
        ordered_json j;
        switch (res.status) {
          case ThetaResult::Status::Found: {
            ordered_json coeffs = ordered_json::array();
            for (Eigen::Index i = 0; i < res.theta->size(); ++i)
              coeffs.push_back((*res.theta)(i).str());
            j = ordered_json{{"status", "found"}, {"theta", coeffs}, {"detail", res.detail}};
            break;
          }
          case ThetaResult::Status::NoneOverQ:
            j = ordered_json{{"status", "none-over-Q"}, {"detail", res.detail}};
            break;
          case ThetaResult::Status::Undetermined:
            j = ordered_json{{"status", "undetermined"}, {"detail", res.detail}};
            break;
        }
        out << j.dump() << "\n";
      } else {
        switch (res.status) {
          case ThetaResult::Status::Found: {
            out << "theta = [";
            for (Eigen::Index i = 0; i < res.theta->size(); ++i)
              out << (i ? ", " : "") << (*res.theta)(i).str();
            out << "]\n";
            break;
          }
          case ThetaResult::Status::NoneOverQ:
            out << "none over Q\n";
            break;
          case ThetaResult::Status::Undetermined:
            out << "undetermined\n";
            break;
        }
      }
      return res.status == ThetaResult::Status::Found ? 0 : 1;
    }

    if (*selftest_cmd) {
      std::vector<SuiteResult> results = run_selftest({a.seed, a.cases});
      if (a.json) {
        ordered_json j = ordered_json::array();
        for (const SuiteResult& r : results)
          j.push_back(ordered_json{{"suite", r.name},
                                   {"pass", r.pass},
                                   {"checked", r.checked},
                                   {"detail", r.detail}});
        out << j.dump() << "\n";
      } else {
        for (const SuiteResult& r : results) {
          out << r.name << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.checked
              << " checks)";
          if (!r.detail.empty()) out << " - " << r.detail;
          out << "\n";
        }
      }
      return all_pass(results) ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ArityError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const FlavorError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const AlgebraIoError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ValidationFailure& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const MissingThetaError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cob2
