// enriques: command line front end.
//
// Exit status: 0 when every verdict holds, 1 when one fails, 2 on input
// errors. With --json the result is a single envelope object on stdout.

#include "commands.hpp"

#include "enriques/errors.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>

namespace {

using namespace enriques::cli;

int emit(const std::string& command, const Report& r, const Inputs& in, const GlobalOptions& g,
         std::chrono::steady_clock::time_point start) {
  bool ok = true;
  for (const Verdict& v : r.verdicts) ok = ok && v.value;
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  if (g.json) {
    Json env;
    env["command"] = command;
    env["inputs_digest"] = in.digest();
    Json verdicts = Json::array();
    for (const Verdict& v : r.verdicts) verdicts.push_back({{"name", v.name}, {"value", v.value}});
    env["verdicts"] = verdicts;
    env["payload"] = r.payload;
    // Zero unless asked for, so that repeated runs are byte-identical.
    env["runtime_ms"] = g.timing ? elapsed : 0;
    std::cout << env.dump(2) << '\n';
  } else {
    if (r.text.empty()) std::cout << r.payload.dump(2) << '\n';
    for (const std::string& line : r.text) std::cout << line << '\n';
    for (const Verdict& v : r.verdicts) std::cout << v.name << ": " << (v.value ? "true" : "false") << '\n';
    if (g.timing) std::cout << "runtime_ms: " << elapsed << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enriques lattice toolkit"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_flag("--json", g.json, "print a JSON envelope");
  app.add_option("--seed", g.seed, "random seed for property runs");
  app.add_option("--cap", g.cap, "enumeration cap");
  app.add_option("--fixtures", g.fixtures, "fixtures directory");
  app.add_flag("--timing", g.timing, "report wall-clock time");

  std::function<Report(Inputs&)> run;
  auto bind = [&](CLI::App* sub, auto fn) {
    sub->fallthrough();
    sub->callback([&run, fn] { run = fn; });
  };

  VerifyEmbeddingArgs verify_args;
  auto* verify = app.add_subcommand("verify-embedding", "validate an embedding into N");
  verify->add_option("file", verify_args.file, "embedding JSON")->required();
  bind(verify, [&](Inputs& in) { return verify_embedding(verify_args, in); });

  TheoremAArgs ta_args;
  auto* ta = app.add_subcommand("theorem-a", "explicit embedding with a prescribed label");
  ta->add_option("--rho", ta_args.rho)->required();
  ta->add_option("--params", ta_args.params, "comma separated")->required();
  ta->add_option("--label", ta_args.label, "e.g. 1,0,1; all labels when omitted");
  bind(ta, [&](Inputs& in) { return theorem_a(ta_args, in); });

  BrauerImageArgs bi_args;
  auto* bi = app.add_subcommand("brauer-image", "labels reached by the explicit embeddings");
  bi->add_option("--rho", bi_args.rho)->required();
  bi->add_option("--params", bi_args.params)->required();
  bind(bi, [&](Inputs& in) { return brauer_image(bi_args, in); });

  LatticeSource ip_args;
  auto* ip = app.add_subcommand("im-phi-bound", "upper bound for the image of Phi");
  ip->add_option("--gram", ip_args.gram, "rows separated by ';'");
  ip->add_option("--gram-file", ip_args.file, "lattice JSON");
  bind(ip, [&](Inputs& in) { return im_phi_bound(ip_args, in); });

  RootsArgs roots_args;
  auto* rt = app.add_subcommand("roots", "vectors of a given norm in a definite lattice");
  rt->add_option("--gram", roots_args.lattice.gram, "rows separated by ';'");
  rt->add_option("--gram-file", roots_args.lattice.file, "lattice JSON");
  rt->add_option("--norm", roots_args.norm)->capture_default_str();
  bind(rt, [&](Inputs& in) { return roots(roots_args, g, in); });

  NikulinArgs nk_args;
  auto* nk = app.add_subcommand("nikulin-exists", "existence of an even lattice");
  nk->add_option("--sig", nk_args.sig, "t+,t-")->required();
  nk->add_option("--fqf", nk_args.fqf, "form JSON");
  nk->add_option("--lattice", nk_args.lattice, "lattice JSON whose form is used");
  bind(nk, [&](Inputs& in) { return nikulin_exists(nk_args, in); });

  StarArgs star_args;
  auto* st = app.add_subcommand("condition-star", "check condition (*) for a sublattice");
  st->add_option("--lattice", star_args.lattice)->required();
  st->add_option("--sublattice", star_args.sublattice, "JSON {\"basis\": vectors}")->required();
  bind(st, [&](Inputs& in) { return condition_star(star_args, in); });

  SublatticeArgs sub_args;
  auto* sb = app.add_subcommand("sublattice", "index-p sublattices, one step per prime");
  sb->add_option("--p", sub_args.p, "prime or comma separated primes")->required();
  sb->add_option("--lattice", sub_args.lattice)->required();
  bind(sb, [&](Inputs& in) { return sublattice(sub_args, in); });

  TransferArgs tr_args;
  auto* tr = app.add_subcommand("transfer", "move an embedding datum to a sublattice or overlattice");
  tr->add_option("--direction", tr_args.direction, "down or up")->required();
  tr->add_option("--lattice", tr_args.lattice, "the larger lattice L")->required();
  tr->add_option("--sublattice", tr_args.sublattice, "basis of L' in L")->required();
  tr->add_option("--datum", tr_args.datum, "datum JSON for the source lattice");
  tr->add_option("--embedding", tr_args.embedding, "embedding JSON of the source lattice");
  bind(tr, [&](Inputs& in) { return transfer(tr_args, in); });

  ClassGroupArgs cg_args;
  auto* cg = app.add_subcommand("class-group", "reduced forms of a fundamental discriminant");
  cg->add_option("-D,--discriminant", cg_args.disc)->required();
  bind(cg, [&](Inputs& in) { return class_group(cg_args, in); });

  TheoremCArgs tc_args;
  auto* tc = app.add_subcommand("theorem-c", "arithmetic of a rank-2 transcendental lattice");
  tc->add_option("--gram", tc_args.gram, "e.g. 2,1;1,10")->required();
  bind(tc, [&](Inputs& in) { return theorem_c(tc_args, in); });

  EpsilonArgs eps_args;
  auto* ep = app.add_subcommand("epsilon", "the character eps on a vector of N");
  ep->add_option("--vector", eps_args.vector, "twelve comma separated coordinates")->required();
  bind(ep, [&](Inputs& in) { return epsilon(eps_args, in); });

  StandardLatticeArgs sl_args;
  auto* sl = app.add_subcommand("standard-lattice", "Gram matrix of U, U2, E8, E82, M, N or Lambda");
  sl->add_option("--name", sl_args.name)->required();
  bind(sl, [&](Inputs& in) { return standard_lattice(sl_args, in); });

  AcceptArgs acc_args;
  auto* ac = app.add_subcommand("accept", "run acceptance criteria");
  ac->add_option("suite", acc_args.suite, "all, theorem-a, lemmas, nikulin, theorem-c or oracles")
      ->capture_default_str();
  bind(ac, [&](Inputs& in) { return accept(acc_args, g, in); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Inputs in;
    const Report r = run(in);
    return emit(command, r, in, g, start);
  } catch (const enriques::Error& e) {
    std::cerr << "enriques " << command << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "enriques " << command << ": " << e.what() << '\n';
    return 2;
  }
}
