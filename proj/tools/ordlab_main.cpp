// ordlab: command-line front door for the ordinal workbench.
//
// Output is line-delimited records with a stable field order; multi-record
// commands (hardy, ks, chain, enum, verify) use tab-separated fields
// (kind, ordinal, position, extra).  --pretty switches to human output.
// Exit codes: 0 success/Pass, 1 Fail, 2 usage error, 3 budget/feasibility.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordlab/enumerate.hpp"
#include "ordlab/estimation.hpp"
#include "ordlab/hardy.hpp"
#include "ordlab/parse.hpp"
#include "ordlab/ramsey.hpp"
#include "ordlab/verify.hpp"

namespace {

using namespace ordlab;

int g_exit = 0;
bool g_pretty = false;

RenderStyle style() { return g_pretty ? RenderStyle::Unicode : RenderStyle::Ascii; }

std::string show(const Ordinal& a) { return render(a, style()); }

FinSet load_set(const std::string& spec) {
  if (spec.find(',') != std::string::npos || spec.find_first_not_of("0123456789") == std::string::npos)
    return FinSet::parse(spec);
  // otherwise a file: one natural per line, '#' comments
  std::ifstream in(spec);
  if (!in) throw domain_error("cannot open set file: " + spec);
  std::vector<Nat> elems;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string token;
    std::istringstream ls(line);
    while (ls >> token) elems.emplace_back(token);
  }
  return FinSet(std::move(elems));
}

void record(const std::string& kind, const std::string& ordinal, const Nat& position,
            const std::string& extra = "") {
  std::cout << kind << "\t" << ordinal << "\t" << position << "\t" << extra << "\n";
}

void emit_outcome(const HardyOutcome& out) {
  switch (out.status) {
    case HardyStatus::Value:
      record("value", "0", out.value, "succ=" + out.successor_steps.str());
      break;
    case HardyStatus::Undefined:
      // running off the carrier set is an answer, not a failure
      record("undefined", show(out.remaining), out.position,
             "succ=" + out.successor_steps.str());
      break;
    case HardyStatus::BudgetExceeded:
      record("budget-exceeded", show(out.remaining), out.position,
             "succ=" + out.successor_steps.str());
      g_exit = 3;
      break;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordlab: ordinal arithmetic workbench below eps_omega"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "human-oriented unicode output");

  std::string expr_a, expr_b, set_spec, alpha_s, beta_s, floor_s = "0";
  std::string lemma_id;
  std::vector<std::string> tuple, gamma, raw_params;
  Nat x_nat, a_nat;
  std::uint64_t budget = 10'000'000, cap = 1'000'000, seed = kDefaultSeed;
  int n_idx = 1, k_arg = 3, m_arg = 0, color_arg = 1;
  Nat psn_cap;

  auto* c_eval = app.add_subcommand("eval", "parse and normalize an expression");
  c_eval->add_option("expr", expr_a)->required();

  auto* c_cmp = app.add_subcommand("cmp", "compare two ordinals");
  c_cmp->add_option("a", expr_a)->required();
  c_cmp->add_option("b", expr_b)->required();

  auto* c_psn = app.add_subcommand("psn", "pseudonorm");
  c_psn->add_option("expr", expr_a)->required();

  auto* c_measures = app.add_subcommand("measures", "level l and height h");
  c_measures->add_option("expr", expr_a)->required();

  auto* c_fs = app.add_subcommand("fs", "fundamental sequence lam[n]");
  c_fs->add_option("expr", expr_a)->required();
  c_fs->add_option("n", n_idx)->required();

  auto* c_chain = app.add_subcommand("chain", "step-down descent");
  c_chain->add_option("expr", expr_a)->required();
  c_chain->add_option("n", n_idx)->required();
  c_chain->add_option("--floor", floor_s);
  c_chain->add_option("--budget", budget);

  auto* c_natsum = app.add_subcommand("natsum", "natural (Hessenberg) sum");
  c_natsum->add_option("a", expr_a)->required();
  c_natsum->add_option("b", expr_b)->required();

  auto* c_go = app.add_subcommand("go", "greatest ordinal below alpha with psn <= a");
  c_go->add_option("a", expr_a)->required();
  c_go->add_option("alpha", expr_b)->required();

  auto* c_f = app.add_subcommand("F", "largeness-inflation function");
  c_f->add_option("expr", expr_a)->required();

  auto* c_hardy = app.add_subcommand("hardy", "Hardy evaluation h_alpha(x)");
  c_hardy->add_option("expr", expr_a)->required();
  c_hardy->add_option("x", expr_b)->required();
  c_hardy->add_option("--set", set_spec);
  c_hardy->add_option("--budget", budget);

  auto* c_large = app.add_subcommand("large", "largeness classification");
  c_large->add_option("expr", expr_a)->required();
  c_large->add_option("--set", set_spec)->required();

  auto* c_ks = app.add_subcommand("ks", "Ketonen-Solovay trace");
  c_ks->add_option("expr", expr_a)->required();
  c_ks->add_option("--set", set_spec)->required();
  c_ks->add_option("--budget", budget);

  auto* c_split = app.add_subcommand("split", "splitting witness");
  c_split->add_option("--set", set_spec)->required();
  c_split->add_option("--alpha", alpha_s)->required();
  c_split->add_option("--beta", beta_s)->required();

  auto* c_extend = app.add_subcommand("extend", "extend to an exactly large set");
  c_extend->add_option("--set", set_spec)->required();
  c_extend->add_option("--alpha", alpha_s)->required();

  auto* c_color = app.add_subcommand("color", "L_k / R_k coloring");
  c_color->add_option("--k", k_arg);
  c_color->add_option("--m", m_arg);
  c_color->add_option("--tuple", tuple)->required();
  c_color->add_option("--set", set_spec);

  auto* c_theta = app.add_subcommand("theta", "estimating function construction");
  c_theta->add_option("--m", m_arg);
  c_theta->add_option("--color", color_arg)->required();
  c_theta->add_option("--gamma", gamma)->required();

  auto* c_enum = app.add_subcommand("enum", "enumerate a psn-bounded universe");
  std::string bound_s, psn_s;
  c_enum->add_option("--bound", bound_s)->required();
  c_enum->add_option("--psn", psn_s)->required();
  c_enum->add_option("--cap", cap);

  auto* c_verify = app.add_subcommand("verify", "run a lemma verifier");
  c_verify->add_option("lemma", lemma_id)->required();
  c_verify->add_option("params", raw_params, "key=value parameters");
  c_verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_eval) {
      std::cout << show(parse_ordinal(expr_a)) << "\n";
    } else if (*c_cmp) {
      auto c = compare(parse_ordinal(expr_a), parse_ordinal(expr_b));
      std::cout << (c == std::strong_ordering::less      ? "LT"
                    : c == std::strong_ordering::greater ? "GT"
                                                         : "EQ")
                << "\n";
    } else if (*c_psn) {
      std::cout << psn(parse_ordinal(expr_a)) << "\n";
    } else if (*c_measures) {
      auto [l, h] = level_and_height(parse_ordinal(expr_a));
      std::cout << l << "\t" << h << "\n";
    } else if (*c_fs) {
      std::cout << show(fs(parse_ordinal(expr_a), n_idx)) << "\n";
    } else if (*c_chain) {
      Ordinal cur = parse_ordinal(expr_a);
      Ordinal floor = parse_ordinal(floor_s);
      record("chain", show(cur), n_idx, "start");
      std::uint64_t used = 0;
      while (!cur.is_zero() && compare(cur, floor) == std::strong_ordering::greater) {
        if (used++ >= budget) {
          record("budget-exceeded", show(cur), n_idx, "");
          g_exit = 3;
          break;
        }
        bool limit = is_limit(cur);
        cur = step_down(cur, n_idx);
        record("chain", show(cur), n_idx, limit ? "limit" : "succ");
      }
    } else if (*c_natsum) {
      std::cout << show(natural_sum(parse_ordinal(expr_a), parse_ordinal(expr_b))) << "\n";
    } else if (*c_go) {
      std::cout << show(go(Nat(expr_a), parse_ordinal(expr_b))) << "\n";
    } else if (*c_f) {
      std::cout << show(f_explicit(parse_ordinal(expr_a))) << "\n";
    } else if (*c_hardy) {
      Carrier carrier = set_spec.empty() ? Carrier::naturals() : Carrier::of(load_set(set_spec));
      HardyOutcome out = hardy_run(parse_ordinal(expr_a), Nat(expr_b), carrier,
                                   HardyLimits{budget, UINT64_MAX},
                                   [&](const HardyStep& s) {
                                     record(s.kind == StepKind::LimitStep ? "limit" : "succ",
                                            show(s.ordinal), s.position);
                                   });
      emit_outcome(out);
    } else if (*c_large) {
      FinSet a = load_set(set_spec);
      LargenessResult r = largeness(a, parse_ordinal(expr_a));
      switch (r.kind) {
        case Largeness::Small: record("largeness", "small", 0); break;
        case Largeness::ExactlyLarge: record("largeness", "exactly-large", r.value); break;
        case Largeness::ProperlyLarge: record("largeness", "properly-large", r.value); break;
      }
    } else if (*c_ks) {
      FinSet a = load_set(set_spec);
      for (const auto& [elem, value] : ks_trace(parse_ordinal(expr_a), a, budget))
        record("ks", show(value), elem);
    } else if (*c_split) {
      FinSet a = load_set(set_spec);
      Nat u = split_point(a, parse_ordinal(alpha_s), parse_ordinal(beta_s));
      record("split", "u", u);
    } else if (*c_extend) {
      FinSet b = load_set(set_spec);
      FinSet ext = extend_to_exactly_large(b, parse_ordinal(alpha_s));
      for (const Nat& e : ext.elements()) record("extend", "element", e);
    } else if (*c_color) {
      if (set_spec.empty()) {
        std::vector<Ordinal> ords;
        for (const std::string& t : tuple) ords.push_back(parse_ordinal(t));
        ColorK ck = lk_color(m_arg, k_arg, ords);
        record("color", "lk", ck.value, "k=" + std::to_string(ck.k));
      } else {
        FinSet a = load_set(set_spec);
        std::vector<Nat> elems;
        for (const std::string& t : tuple) elems.emplace_back(t);
        ColorK ck = rk_color(m_arg, k_arg, a, elems, budget);
        record("color", "rk", ck.value, "k=" + std::to_string(ck.k));
      }
    } else if (*c_theta) {
      std::vector<Ordinal> ords;
      for (const std::string& t : gamma) ords.push_back(parse_ordinal(t));
      EstimatingFn fn = build_theta(m_arg, ords, color_arg);
      for (const auto& [dom, val] : fn.entries)
        record("theta", show(dom) + " -> " + show(val), 0);
      record("theta-bound", show(fn.bound), 0);
    } else if (*c_enum) {
      Universe u{parse_ordinal(bound_s), Nat(psn_s), cap};
      for (const Ordinal& a : enum_psn_bounded(u)) record("ordinal", show(a), 0);
    } else if (*c_verify) {
      VerifyOptions opts;
      opts.seed = seed;
      for (const std::string& p : raw_params) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw domain_error("verify: expected key=value, got " + p);
        opts.params[p.substr(0, eq)] = p.substr(eq + 1);
      }
      VerifyReport rep = verify(lemma_id, opts);
      std::cout << serialize(rep) << "\n";
      g_exit = rep.verdict == Verdict::Pass ? 0 : rep.verdict == Verdict::Fail ? 1 : 3;
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const feasibility_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return g_exit;
}
