// Command-line front end: parse posemigroup scenarios, run the analyses,
// and emit reports or DOT diagrams. Exit codes: 0 computed/pass, 1 a check
// failed with a witness, 2 parse or validation error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qreflect/closure.hpp"
#include "qreflect/dot.hpp"
#include "qreflect/examples.hpp"
#include "qreflect/ideal.hpp"
#include "qreflect/scenario.hpp"
#include "qreflect/suites.hpp"
#include "qreflect/word.hpp"

namespace {

using namespace qreflect;

struct Options {
  std::string file;
  int cap = kDefaultCap;
  std::string out;
  std::string format = "text";
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out);
  if (!out) throw Error("cannot write '" + opt.out + "'");
  out << text;
}

Scenario load(const Options& opt) {
  if (opt.file.empty()) throw Error("this command needs a scenario file");
  return parse_scenario(slurp(opt.file), opt.cap);
}

std::string list_quantale(const Options& opt, const FiniteQuantale& q,
                          const std::string& title) {
  if (opt.format == "dot") return emit_dot(q, title);
  std::string out = title + ": " + std::to_string(q.size()) + " sets\n";
  for (int i = 0; i < q.size(); ++i) out += "  " + q.label(i) + "\n";
  return out;
}

int report_exit(const Report& r) { return r.ok() ? 0 : 1; }

int cmd_validate(const Options& opt) {
  Scenario sc = load(opt);
  std::string out;
  for (std::size_t i = 0; i < sc.marked.size(); ++i) {
    const MarkedPosemigroup& ms = sc.marked[i];
    out += "posemigroup " + sc.names[i] + ": " +
           std::to_string(ms.sg().size()) + " elements, marking " +
           ms.marking().describe() + ", ";
    out += ms.sg().identity()
               ? "identity " + ms.poset().name(*ms.sg().identity())
               : std::string("no identity");
    out += "\n";
  }
  if (sc.morphism)
    out += "morphism " + sc.morphism->name + ": " + sc.names[sc.morphism->src] +
           " -> " + sc.names[sc.morphism->dst] + "\n";
  out += "valid\n";
  emit(opt, out);
  return 0;
}

int cmd_marking_check(const Options& opt) {
  Scenario sc = load(opt);
  std::string out;
  Report all;
  for (std::size_t i = 0; i < sc.marked.size(); ++i) {
    out += "== " + sc.names[i] + " ==\n";
    Report axioms = check_marking_axioms(sc.marked[i], opt.cap);
    Report quantale = check_marked_quantale(sc.marked[i], opt.cap);
    out += axioms.to_string() + quantale.to_string();
    all.merge(axioms);
    all.merge(quantale);
  }
  emit(opt, out);
  return report_exit(all);
}

int cmd_ideals(const Options& opt) {
  Scenario sc = load(opt);
  FiniteQuantale q = ideal_quantale(sc.marked[0], opt.cap);
  emit(opt, list_quantale(opt, q, "ideals of " + sc.names[0]));
  return 0;
}

int cmd_closed(const Options& opt) {
  Scenario sc = load(opt);
  FiniteQuantale q = closed_quantale(sc.marked[0].sg(), opt.cap);
  emit(opt, list_quantale(opt, q, "closed sets of " + sc.names[0]));
  return 0;
}

int cmd_reflect_ideal(const Options& opt) {
  Scenario sc = load(opt);
  Reflection r = reflection_t(sc.marked[0], opt.cap);
  std::string out = "ideal quantale of " + sc.names[0] + ": " +
                    std::to_string(r.target.size()) + " sets\n" +
                    r.report.to_string();
  emit(opt, out);
  return report_exit(r.report);
}

int cmd_reflect_closure(const Options& opt) {
  Scenario sc = load(opt);
  Reflection r = reflection_tau(sc.marked[0].sg(), opt.cap);
  std::string out = "closed quantale of " + sc.names[0] + ": " +
                    std::to_string(r.target.size()) + " sets\n" +
                    r.report.to_string();
  emit(opt, out);
  return report_exit(r.report);
}

int cmd_check_morphism(const Options& opt, const std::string& level) {
  Scenario sc = load(opt);
  if (!sc.morphism) throw Error("scenario has no morphism");
  const ScenarioMorphism& m = *sc.morphism;
  const MarkedPosemigroup& src = sc.marked[m.src];
  const MarkedPosemigroup& dst = sc.marked[m.dst];
  Report r;
  if (level == "posemigroup")
    r = check_marked_morphism(m.map, src, dst, MorphismLevel::posemigroup,
                              opt.cap);
  else if (level == "marked")
    r = check_marked_morphism(m.map, src, dst, MorphismLevel::marked, opt.cap);
  else if (level == "quantale")
    r = check_marked_morphism(m.map, src, dst, MorphismLevel::marked_quantale,
                              opt.cap);
  else {
    r = is_closure_preserving(src.sg(), dst.sg(), m.map, opt.cap);
    r.merge(check_morphism_theorems(m.map, src, dst, opt.cap));
  }
  emit(opt, "morphism " + m.name + " at level " + level + ":\n" + r.to_string());
  return report_exit(r);
}

int cmd_compare(const Options& opt) {
  Scenario sc = load(opt);
  const MarkedPosemigroup& ms = sc.marked[0];
  FiniteQuantale id = ideal_quantale(ms, opt.cap);
  FiniteQuantale cl = closed_quantale(ms.sg(), opt.cap);
  Report incl = inclusion_check(ms, opt.cap);
  auto iso = find_isomorphism(cl, id);
  std::string out = "ideals: " + std::to_string(id.size()) +
                    ", closed sets: " + std::to_string(cl.size()) + "\n";
  out += incl.to_string();
  out += std::string("isomorphic: ") + (iso ? "yes" : "no") + "\n";
  emit(opt, out);
  return report_exit(incl);
}

int cmd_dot(const Options& opt, const std::string& target) {
  Scenario sc = load(opt);
  std::string name = sc.names[0];
  if (target == "poset")
    emit(opt, emit_dot(sc.marked[0].poset(), name));
  else if (target == "ideals")
    emit(opt,
         emit_dot(ideal_quantale(sc.marked[0], opt.cap), "ideals of " + name));
  else
    emit(opt, emit_dot(closed_quantale(sc.marked[0].sg(), opt.cap),
                       "closed sets of " + name));
  return 0;
}

int cmd_examples(const Options& opt) {
  std::string out;
  Report all;
  auto run = [&](const std::string& name, Report r) {
    out += "== example " + name + " ==\n" + r.to_string();
    all.merge(r);
  };
  run("6.1", suites::example_61());
  run("6.2", suites::example_62(opt.cap));
  run("6.3", suites::example_63(opt.cap));
  run("6.4", suites::example_64(opt.cap));
  run("6.5", suites::example_65(opt.cap));
  out += all.ok() ? "all examples reproduced\n" : "some checks failed\n";
  emit(opt, out);
  return report_exit(all);
}

int cmd_word_check(const Options& opt) {
  Report r = suites::example_61();
  emit(opt, r.to_string());
  return report_exit(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite posemigroups, markings, and their quantale reflections"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--cap", opt.cap, "subset-enumeration cap")
      ->capture_default_str();
  app.add_option("--out", opt.out, "write output to a file");
  app.add_option("--format", opt.format, "output format: text or dot")
      ->check(CLI::IsMember({"text", "dot"}));

  std::string level = "posemigroup";
  std::string target = "poset";

  auto add_file = [&](CLI::App* cmd) {
    cmd->fallthrough();
    cmd->add_option("file", opt.file, "scenario file")->required();
  };
  add_file(app.add_subcommand("validate", "parse and validate a scenario"));
  add_file(app.add_subcommand("marking-check",
                              "marking axioms and the marked-quantale law"));
  add_file(app.add_subcommand("ideals", "list the ideal quantale"));
  add_file(app.add_subcommand("closed", "list the closed-set quantale"));
  add_file(
      app.add_subcommand("reflect-ideal", "reflection into the ideal quantale"));
  add_file(app.add_subcommand("reflect-closure",
                              "reflection into the closed-set quantale"));
  CLI::App* cm =
      app.add_subcommand("check-morphism", "check the scenario's morphism");
  add_file(cm);
  cm->add_option("--level", level, "posemigroup | marked | quantale | closure")
      ->check(CLI::IsMember({"posemigroup", "marked", "quantale", "closure"}));
  add_file(app.add_subcommand(
      "compare", "closed sets against ideals, with isomorphism search"));
  CLI::App* dot = app.add_subcommand("dot", "emit a Hasse diagram");
  add_file(dot);
  dot->add_option("--target", target, "ideals | closed | poset")
      ->check(CLI::IsMember({"ideals", "closed", "poset"}));
  app.add_subcommand("examples", "replay every bundled example");
  app.add_subcommand("word-check", "the symbolic word posemigroup suite");

  CLI11_PARSE(app, argc, argv);
  try {
    if (app.got_subcommand("validate")) return cmd_validate(opt);
    if (app.got_subcommand("marking-check")) return cmd_marking_check(opt);
    if (app.got_subcommand("ideals")) return cmd_ideals(opt);
    if (app.got_subcommand("closed")) return cmd_closed(opt);
    if (app.got_subcommand("reflect-ideal")) return cmd_reflect_ideal(opt);
    if (app.got_subcommand("reflect-closure")) return cmd_reflect_closure(opt);
    if (app.got_subcommand("check-morphism")) return cmd_check_morphism(opt, level);
    if (app.got_subcommand("compare")) return cmd_compare(opt);
    if (app.got_subcommand("dot")) return cmd_dot(opt, target);
    if (app.got_subcommand("examples")) return cmd_examples(opt);
    if (app.got_subcommand("word-check")) return cmd_word_check(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
