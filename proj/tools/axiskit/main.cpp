#include <iostream>
#include <iterator>

#include "CLI11.hpp"
#include "axiskit/commands.hpp"

using namespace axiskit::cli;

namespace {

struct Inputs {
  std::vector<std::string> paths;
  std::optional<int> twist;
  std::optional<std::string> pd;
};

void add_inputs(CLI::App* sub, Inputs& in, Options& opt) {
  sub->add_option("inputs", in.paths, "PD (.pd) or rotation-system (.json) files or directories; - reads PD from stdin");
  sub->add_option("--twist", in.twist, "standard twist projection with N crossings")->check(CLI::Range(4, 100000));
  sub->add_option("--pd", in.pd, "PD code given inline");
  sub->add_flag("--json", opt.json, "machine-readable output");
}

std::vector<Source> sources(const Inputs& in) {
  std::vector<Source> out;
  if (in.twist) out.push_back(twist_source(*in.twist));
  if (in.pd) out.push_back(pd_source(*in.pd));
  std::vector<std::string> paths;
  for (const auto& p : in.paths) {
    if (p == "-") {
      const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
      out.push_back({"<stdin>", [text] { return axiskit::parse_pd(text); }});
    } else {
      paths.push_back(p);
    }
  }
  for (auto& s : expand_inputs(paths)) out.push_back(std::move(s));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Axes, axis systems and axis polynomials of link projections"};
  app.require_subcommand(1);
  Inputs in;
  Options opt;
  std::vector<long long> eval;

  auto* axes = app.add_subcommand("axes", "list axes with lengths, odd segments and simplicity");
  auto* system = app.add_subcommand("system", "print the axis system");
  system->add_flag("--ce", opt.ce, "print the ce-representation");
  auto* poly = app.add_subcommand("poly", "print the axis polynomial");
  poly->add_option("--eval", eval, "evaluate at integers X Y")->expected(2)->allow_extra_args(false);
  auto* graphs = app.add_subcommand("graphs", "c-graph and e-graph");
  graphs->add_flag("--dot", opt.dot, "emit DOT documents");
  graphs->add_flag("--cycles", opt.cycles, "list qualifying four-cycles and dummies");
  graphs->add_flag("--reconstruct", opt.reconstruct, "rebuild the projection from its graphs");
  auto* recognize = app.add_subcommand("recognize", "decide whether the input is a standard twist projection");
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_flag("--timing", opt.timing, "report wall-clock time");
  auto* symmetry = app.add_subcommand("symmetry", "decide mirror symmetry of a knot projection");
  auto* reducible = app.add_subcommand("reducible", "find a reducible crossing");
  auto* compare_cmd = app.add_subcommand("compare", "compare polynomials and axis systems against the first input");
  auto* collide_cmd = app.add_subcommand("collide", "search random knot projections for equal axis systems");
  int collide_crossings = 6, collide_samples = 200;
  std::uint64_t collide_seed = 1;
  collide_cmd->add_option("--crossings", collide_crossings, "crossings per sample")->check(CLI::Range(1, 40));
  collide_cmd->add_option("--samples", collide_samples, "number of samples")->check(CLI::Range(1, 1000000));
  collide_cmd->add_option("--seed", collide_seed, "random seed");
  collide_cmd->add_flag("--json", opt.json, "machine-readable output");
  for (auto* sub : {axes, system, poly, graphs, recognize, verify, symmetry, reducible, compare_cmd}) {
    add_inputs(sub, in, opt);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (!eval.empty()) opt.eval = std::make_pair(eval[0], eval[1]);

  const std::string command = app.get_subcommands().front()->get_name();
  if (command == "collide") {
    return emit({collide(collide_crossings, collide_samples, collide_seed, opt)}, opt, std::cout, std::cerr);
  }

  std::vector<Source> srcs;
  try {
    srcs = sources(in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (srcs.empty()) {
    std::cerr << "error: no input; give a file, a directory, --pd or --twist\n";
    return 1;
  }

  if (command == "compare") return emit({compare(srcs, opt)}, opt, std::cout, std::cerr);
  return emit(run_batch(command, srcs, opt), opt, std::cout, std::cerr);
}
