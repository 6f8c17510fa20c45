// hkslope: exact Hilbert-Kunz slope and multiplicity computations from the
// command line. Every subcommand prints a single JSON document on stdout.
// Exit codes: 0 success, 2 parse/validation error, 1 internal inconsistency.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hks/hks.hpp"
#include "hks/json_io.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace hks;

void emit(const json& j) { std::cout << j.dump() << "\n"; }

unsigned sweep_jobs() {
  unsigned jobs = std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  if (const char* env = std::getenv("HK_SWEEP_JOBS")) {
    const Int cap = parse_integer(env);
    if (cap < 1) throw InvalidArgument("HK_SWEEP_JOBS must be >= 1");
    if (cap < jobs) jobs = cap.convert_to<unsigned>();
  }
  return jobs;
}

struct Options {
  std::string hn_text;
  std::string hn2_text;
  std::int64_t arg = 0;
  bool arg_set = false;
  std::string level_text;
  std::string alpha_text;
  std::string beta_text;
  std::string gens_text;
  std::string elem_text;
  std::string method = "formula";
  std::int64_t twist_arg = 0;
  std::int64_t max_degree = 0;
};

std::int64_t require_arg(const Options& opt, const std::string& verb) {
  if (!opt.arg_set)
    throw InvalidArgument("hn " + verb + " needs --arg <int>");
  return opt.arg;
}

json run_hn(const std::string& verb, const Options& opt) {
  const HNData s = hn_from_json(parse_json(opt.hn_text));
  json out;
  if (verb == "mu-hk") {
    out["mu_hk"] = to_string(mu_hk(s));
  } else if (verb == "ss-defect") {
    out["ss_defect"] = to_string(ss_defect(s));
  } else if (verb == "dual") {
    out["hn"] = hn_to_json<json>(dual(s));
  } else if (verb == "twist") {
    out["hn"] = hn_to_json<json>(twist(s, require_arg(opt, verb)));
  } else if (verb == "pullback") {
    const std::int64_t n = require_arg(opt, verb);
    if (n < 1) throw InvalidArgument("pullback degree must be >= 1");
    out["hn"] = hn_to_json<json>(pullback(s, n));
  } else {
    if (opt.hn2_text.empty())
      throw InvalidArgument("hn " + verb + " needs --hn2 <json>");
    const HNData t = hn_from_json(parse_json(opt.hn2_text));
    out["hn"] = hn_to_json<json>(verb == "dsum" ? direct_sum(s, t)
                                                : tensor(s, t));
  }
  return out;
}

json run_ext_extend(const Options& opt) {
  const HNData s = hn_from_json(parse_json(opt.hn_text));
  const ClassLevel level = parse_class_level(opt.level_text);
  return extension_result_to_json<json>(extension_hn(s, level));
}

json run_ext_torsor(const Options& opt) {
  const HNData s = hn_from_json(parse_json(opt.hn_text));
  const ClassLevel level = parse_class_level(opt.level_text);
  json out;
  out["affine"] = is_affine_torsor(s, level);
  out["hk_drops"] = hk_drops(s, level);
  return out;
}

json run_ext_numkrit(const Options& opt) {
  const auto alphas = rationals_from_json(parse_json(opt.alpha_text));
  const auto betas = rationals_from_json(parse_json(opt.beta_text));
  const NumkritReport rep = numkrit_check(alphas, betas);
  json out;
  out["hypotheses_hold"] = rep.hypotheses_hold;
  out["inequality_holds"] = rep.inequality_holds;
  out["equality"] = rep.equality;
  return out;
}

json run_ideal_ehk(const Options& opt) {
  const MonomialIdeal ideal = minimalize(parse_generators(opt.gens_text));
  json out;
  if (opt.method == "both") {
    const Rational formula = ehk(ideal);
    const Rational oracle = ehk_oracle(ideal);
    out["formula"] = to_string(formula);
    out["oracle"] = to_string(oracle);
    out["agree"] = formula == oracle;
  } else if (opt.method == "oracle") {
    out["ehk"] = to_string(ehk_oracle(ideal));
    out["method"] = "oracle";
  } else if (opt.method == "formula") {
    out["ehk"] = to_string(ehk(ideal));
    out["method"] = "formula";
  } else {
    throw InvalidArgument("--method must be formula, oracle or both");
  }
  return out;
}

json run_ideal_member(const Options& opt) {
  const MonomialIdeal ideal = minimalize(parse_generators(opt.gens_text));
  const Monomial f = parse_monomial(opt.elem_text);
  if (f.a < 0 || f.b < 0)
    throw ParseError("element must have nonnegative exponents");
  json out;
  out["member"] = membership_via_hk(ideal, f);
  out["ehk_I"] = to_string(ehk(ideal));
  if (f.a == 0 && f.b == 0) {
    out["ehk_If"] = "0";  // adjoining 1 gives the unit ideal
  } else {
    std::vector<Monomial> gens = ideal.gens();
    gens.push_back(f);
    out["ehk_If"] = to_string(ehk(minimalize(std::move(gens))));
  }
  return out;
}

json run_ideal_syzygy(const Options& opt) {
  const MonomialIdeal ideal = minimalize(parse_generators(opt.gens_text));
  const SyzygySplitting split = syzygy_splitting(ideal);
  const HNData hn = syzygy_hn(ideal, opt.twist_arg);
  json out;
  out["splitting"] = split.e;
  out["twist"] = opt.twist_arg;
  out["hn"] = hn_to_json<json>(hn);
  out["mu_hk"] = to_string(mu_hk(hn));
  return out;
}

json run_check_sweep(const Options& opt) {
  if (opt.max_degree < 1)
    throw InvalidArgument("--max-degree must be >= 1");
  const SweepSummary sum =
      run_sweep(opt.max_degree, sweep_jobs());
  return sweep_summary_to_json<json>(sum);
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Hilbert-Kunz slope calculus"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* hn = app.add_subcommand("hn", "Filtration-data operations");
  hn->require_subcommand(1);
  static const char* kHnVerbs[] = {"mu-hk",    "dual",   "twist", "pullback",
                                   "dsum",     "tensor", "ss-defect"};
  for (const char* verb : kHnVerbs) {
    CLI::App* cmd = hn->add_subcommand(verb);
    cmd->add_option("--hn", opt.hn_text, "HN data as [[rank,degree],...]")
        ->required();
    cmd->add_option("--hn2", opt.hn2_text, "second HN data");
    cmd->add_option("--arg", opt.arg, "integer argument (twist degree etc.)")
        ->each([&opt](const std::string&) { opt.arg_set = true; });
  }

  CLI::App* ext = app.add_subcommand("ext", "Extension analysis");
  ext->require_subcommand(1);
  CLI::App* extend = ext->add_subcommand("extend");
  CLI::App* torsor = ext->add_subcommand("torsor-affine");
  for (CLI::App* cmd : {extend, torsor}) {
    cmd->add_option("--hn", opt.hn_text, "HN data as [[rank,degree],...]")
        ->required();
    cmd->add_option("--level", opt.level_text, "1-based class level or null")
        ->required();
  }
  CLI::App* numkrit = ext->add_subcommand("numkrit");
  numkrit->add_option("--alpha", opt.alpha_text, "rationals, ascending")
      ->required();
  numkrit->add_option("--beta", opt.beta_text, "rationals, one entry longer")
      ->required();

  CLI::App* ideal = app.add_subcommand("ideal", "Monomial ideals on P^1");
  ideal->require_subcommand(1);
  CLI::App* ehk_cmd = ideal->add_subcommand("ehk");
  CLI::App* member = ideal->add_subcommand("member");
  CLI::App* syzygy = ideal->add_subcommand("syzygy");
  for (CLI::App* cmd : {ehk_cmd, member, syzygy}) {
    cmd->add_option("--gens", opt.gens_text,
                    "generators, e.g. \"y^2, x*y, x^2\" or [[0,2],[1,1],[2,0]]")
        ->required();
  }
  ehk_cmd->add_option("--method", opt.method, "formula | oracle | both");
  member->add_option("--elem", opt.elem_text, "monomial, e.g. \"x*y\" or [1,1]")
      ->required();
  syzygy->add_option("--twist", opt.twist_arg, "twist of the syzygy bundle");

  CLI::App* check = app.add_subcommand("check", "Consistency sweeps");
  check->require_subcommand(1);
  CLI::App* sweep = check->add_subcommand("sweep");
  sweep->add_option("--max-degree", opt.max_degree,
                    "generator degree bound of the exhaustive family")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json err;
    err["error"] = {{"code", "Usage"}, {"message", e.what()}};
    emit(err);
    return 2;
  }

  try {
    json out;
    if (hn->parsed()) {
      for (const char* verb : kHnVerbs)
        if (hn->get_subcommand(verb)->parsed()) out = run_hn(verb, opt);
    } else if (extend->parsed()) {
      out = run_ext_extend(opt);
    } else if (torsor->parsed()) {
      out = run_ext_torsor(opt);
    } else if (numkrit->parsed()) {
      out = run_ext_numkrit(opt);
    } else if (ehk_cmd->parsed()) {
      out = run_ideal_ehk(opt);
    } else if (member->parsed()) {
      out = run_ideal_member(opt);
    } else if (syzygy->parsed()) {
      out = run_ideal_syzygy(opt);
    } else if (sweep->parsed()) {
      out = run_check_sweep(opt);
    }
    emit(out);
    return 0;
  } catch (const OracleInconsistency& e) {
    json err;
    err["error"] = {{"code", e.code()}, {"message", e.what()}};
    emit(err);
    return 1;
  } catch (const Error& e) {
    json err;
    err["error"] = {{"code", e.code()}, {"message", e.what()}};
    emit(err);
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
