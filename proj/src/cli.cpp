#include "toag/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "toag/axioms.hpp"
#include "toag/error.hpp"
#include "toag/extension.hpp"
#include "toag/presburger.hpp"
#include "toag/valuation.hpp"

namespace toag {
namespace {

TruncStructure load_structure(const std::string& spec) {
  if (auto builtin = parse_builtin_spec(spec)) return *builtin;
  std::ifstream in(spec);
  if (!in) throw ParseError("'" + spec + "' is neither a builtin spec nor a readable TOAG1 file");
  std::stringstream text;
  text << in.rdbuf();
  return load_finite_table(text.str());
}

// Exit code from a list of verdicts: any failure wins over exhaustion.
int exit_code(const std::vector<Verdict>& verdicts) {
  if (std::find(verdicts.begin(), verdicts.end(), Verdict::fail) != verdicts.end()) return kExitFail;
  if (std::find(verdicts.begin(), verdicts.end(), Verdict::exhausted_budget) != verdicts.end()) return kExitExhausted;
  return kExitPass;
}

std::string case_name(Case c) { return c == Case::case1 ? "case1" : "case2"; }

struct Flags {
  std::string spec;
  std::string spec_b;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::uint64_t kmax = 3;
  std::int64_t nmax = 30;
  std::size_t size = 0;
  std::string require = "none";
  std::string negate = "none";
  std::size_t size_max = 4;
  std::int64_t p = 0;
  std::int64_t k = 0;
};

int cmd_check(const Flags& f, std::ostream& out) {
  const auto t = load_structure(f.spec);
  CheckOptions options;
  options.seed = f.seed;
  if (f.budget) options.budget = f.budget;
  out << "STRUCTURE " << t.describe() << " seed=" << f.seed << '\n';
  std::vector<Verdict> verdicts;
  for (const auto& reports : {check_axioms(t, options), check_lemmas(t, options)}) {
    for (const auto& r : reports) {
      out << r.render() << '\n';
      verdicts.push_back(r.verdict);
    }
  }
  return exit_code(verdicts);
}

int cmd_embed(const Flags& f, std::ostream& out) {
  const auto t = load_structure(f.spec);
  ExtensionOptions options;
  options.seed = f.seed;
  options.kmax = f.kmax;
  if (f.budget) options.budget = f.budget;
  out << "STRUCTURE " << t.describe() << " kmax=" << f.kmax << " seed=" << f.seed << '\n';
  std::vector<Verdict> verdicts;
  const auto embedding = verify_embedding(t, options);
  out << embedding.render() << '\n';
  verdicts.push_back(embedding.verdict);
  const auto laws = verify_p_laws(t, options);
  for (const auto& law : laws.laws) {
    out << law.render() << '\n';
    verdicts.push_back(law.verdict);
  }
  for (const auto& c : laws.coverage) {
    const bool reachable = shape_reachable(c.shape);
    out << "SITUATION " << c.shape.situation << " inner=" << case_name(c.shape.inner)
        << " outer=" << case_name(c.shape.outer) << " count=" << c.count
        << " expected=" << (reachable ? "reachable" : "impossible") << '\n';
    if (!reachable && c.count > 0) verdicts.push_back(Verdict::fail);
  }
  return exit_code(verdicts);
}

PresburgerOptions presburger_options(const Flags& f) {
  PresburgerOptions options;
  options.n_max = f.nmax;
  options.seed = f.seed;
  if (f.budget) options.budget = f.budget;
  return options;
}

int cmd_classify(const Flags& f, std::ostream& out) {
  const auto t = load_structure(f.spec);
  const auto options = presburger_options(f);
  out << "STRUCTURE " << t.describe() << " nmax=" << f.nmax << " seed=" << f.seed << '\n';
  const auto report = is_presburger_toag(t, options);
  for (const auto& line : report.render()) out << line << '\n';
  if (report.verdict != Verdict::pass) return kExitFail;
  out << "SIGNATURE " << type_signature(t, options).render() << '\n';
  return kExitPass;
}

int cmd_compare(const Flags& f, std::ostream& out) {
  const auto a = load_structure(f.spec);
  const auto b = load_structure(f.spec_b);
  const auto options = presburger_options(f);
  out << "STRUCTURE A " << a.describe() << '\n'
      << "STRUCTURE B " << b.describe() << '\n'
      << "NMAX " << f.nmax << " seed=" << f.seed << '\n';
  for (const auto* t : {&a, &b}) {
    const auto report = is_presburger_toag(*t, options);
    if (report.verdict != Verdict::pass) {
      for (const auto& line : report.render()) out << line << '\n';
      out << "NOT EQUIVALENT reason=\"" << t->describe() << " is not a Presburger TOAG\"\n";
      return kExitFail;
    }
  }
  out << "SIGNATURE A " << type_signature(a, options).render() << '\n';
  out << "SIGNATURE B " << type_signature(b, options).render() << '\n';
  const auto verdict = elementarily_equivalent(a, b, options);
  out << verdict.render() << '\n';
  return verdict.equivalent ? kExitPass : kExitFail;
}

int cmd_enumerate(const Flags& f, std::ostream& out) {
  SearchSpec spec;
  spec.size = f.size;
  spec.required = parse_axiom_set(f.require);
  spec.negated = parse_axiom_set(f.negate);
  if (f.budget) spec.node_budget = f.budget;
  const auto result = enumerate_toags(spec);
  out << "# size=" << f.size << " require=" << format_axiom_set(spec.required)
      << " negate=" << format_axiom_set(spec.negated) << " seed=" << f.seed << '\n';
  for (std::size_t i = 0; i < result.tables.size(); ++i) {
    out << "# model " << i + 1 << '\n' << result.tables[i].to_text();
  }
  out << "# models=" << result.tables.size() << " nodes=" << result.stats.nodes
      << (result.stats.exhausted ? " EXHAUSTED-BUDGET" : "") << '\n';
  return result.stats.exhausted ? kExitExhausted : kExitPass;
}

int cmd_independence(const Flags& f, std::ostream& out) {
  const std::uint64_t budget = f.budget ? f.budget : SearchSpec{}.node_budget;
  out << "INDEPENDENCE size-max=" << f.size_max << " seed=" << f.seed << '\n';
  bool exhausted = false;
  for (const auto& entry : independence_report(f.size_max, budget)) {
    out << "AXIOM " << entry.id;
    if (entry.witness) {
      out << " INDEPENDENT size=" << entry.witness->top_index() << '\n' << entry.witness->to_text();
    } else {
      out << " NO-WITNESS searched-up-to=" << entry.searched_up_to << (entry.exhausted ? " EXHAUSTED-BUDGET" : "")
          << '\n';
    }
    exhausted = exhausted || (entry.exhausted && !entry.witness);
  }
  return exhausted ? kExitExhausted : kExitPass;
}

int cmd_valuation(const Flags& f, std::ostream& out) {
  const ResidueRing ring(f.p, f.k);
  const auto report = check_valuation_laws(ring);
  for (const auto& line : report.render()) out << line << '\n';
  std::vector<Verdict> verdicts;
  for (const auto& law : report.laws) verdicts.push_back(law.verdict);
  const auto t = value_toag(ring);
  out << "VALUE-TOAG " << t.describe() << '\n';
  for (const auto& r : check_axioms(t)) {
    out << r.render() << '\n';
    verdicts.push_back(r.verdict);
  }
  return exit_code(verdicts);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated ordered abelian groups: axiom checks, extension, classification", "toag"};
  app.require_subcommand(1);
  Flags f;
  const std::string spec_help = "Z:tau=<int>, Q:tau=<rat>, ZZ:tau=(a,b), QZ:tau=(q,b) or a TOAG1 file";

  auto* check = app.add_subcommand("check", "Axiom suite and lemma report");
  check->add_option("spec", f.spec, spec_help)->required();
  check->add_option("--budget", f.budget, "Sampled tuples per statement");

  auto* embed = app.add_subcommand("embed", "Embedding and laws of the extension monoid");
  embed->add_option("spec", f.spec, spec_help)->required();
  embed->add_option("--kmax", f.kmax, "Largest omega coordinate")->check(CLI::Range(0, 1000));
  embed->add_option("--budget", f.budget, "Tuples per law");

  auto* classify = app.add_subcommand("classify", "Presburger recognition and type signature");
  classify->add_option("spec", f.spec, spec_help)->required();
  classify->add_option("--nmax", f.nmax, "Largest modulus")->check(CLI::Range(1, 100000));
  classify->add_option("--budget", f.budget, "Sampled elements");

  auto* compare = app.add_subcommand("compare", "Elementary equivalence of two structures");
  compare->add_option("a", f.spec, spec_help)->required();
  compare->add_option("b", f.spec_b, spec_help)->required();
  compare->add_option("--nmax", f.nmax, "Largest modulus")->check(CLI::Range(1, 100000));
  compare->add_option("--budget", f.budget, "Sampled elements");

  auto* enumerate = app.add_subcommand("enumerate", "Finite tables satisfying an axiom selection");
  enumerate->add_option("--size", f.size, "Top index N")->required()->check(CLI::Range(1, 5));
  enumerate->add_option("--require", f.require, "Axiom ids, e.g. all or 1-9,11");
  enumerate->add_option("--negate", f.negate, "Axiom ids that must fail");
  enumerate->add_option("--budget", f.budget, "Search node budget");

  auto* independence = app.add_subcommand("independence", "Independence witnesses for Axioms 10-16");
  independence->add_option("--size-max", f.size_max, "Largest table size")->check(CLI::Range(1, 5));
  independence->add_option("--budget", f.budget, "Search node budget per size");

  auto* valuation = app.add_subcommand("valuation", "Truncated valuation on Z/p^k");
  valuation->add_option("--p", f.p, "Prime")->required();
  valuation->add_option("--k", f.k, "Exponent")->required();

  for (auto* sub : {check, embed, classify, compare, enumerate, independence, valuation}) {
    sub->add_option("--seed", f.seed, "Random seed (echoed)");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(f, out);
    if (*embed) return cmd_embed(f, out);
    if (*classify) return cmd_classify(f, out);
    if (*compare) return cmd_compare(f, out);
    if (*enumerate) return cmd_enumerate(f, out);
    if (*independence) return cmd_independence(f, out);
    return cmd_valuation(f, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace toag
