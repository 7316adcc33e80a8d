#include "ef/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "ef/construct.hpp"
#include "ef/corpus.hpp"
#include "ef/cycles.hpp"
#include "ef/engel.hpp"
#include "ef/errors.hpp"
#include "ef/limits.hpp"
#include "ef/structure.hpp"
#include "ef/verify.hpp"

namespace ef {

namespace {

void print_series_orders(std::ostream& out, const char* label,
                         const SeriesRecord& rec) {
  out << label << ":";
  for (const auto& [name, grp] : rec.terms) out << ' ' << grp.order();
  out << '\n';
}

int run_analyze(const std::string& path, std::ostream& out) {
  const GroupFile gf = read_group_file(path);
  const PermGroup g = to_group(gf);
  out << "name: " << gf.name << '\n';
  out << "degree: " << g.degree() << '\n';
  out << "order: " << g.order() << '\n';

  const SeriesRecord f = fitting_series(g);
  out << "soluble: " << (f.stabilized_at_g ? "yes" : "no") << '\n';
  if (f.stabilized_at_g)
    out << "fitting height: " << f.height_or_length << '\n';
  else
    out << "fitting height: n/a\n";
  print_series_orders(out, "fitting series orders", f);

  const SeriesRecord fs = generalized_fitting_series(g);
  out << "generalized fitting height: " << fs.height_or_length << '\n';
  print_series_orders(out, "generalized fitting series orders", fs);

  const SeriesRecord ns = nonsoluble_series(g);
  out << "nonsoluble length: " << ns.height_or_length << '\n';
  print_series_orders(out, "nonsoluble series orders", ns);

  const bool sampled = f.probabilistic || fs.probabilistic || ns.probabilistic;
  out << "certified: " << (sampled ? "no" : "yes") << '\n';
  return 0;
}

int run_engel(const std::string& path, const std::string& element, int n,
              const std::string& side, std::uint64_t seed, std::ostream& out) {
  const GroupFile gf = read_group_file(path);
  const PermGroup g = to_group(gf);
  const Permutation x = parse_cycles(element, g.degree());
  const bool right = side == "right";
  const EngelSubgroupResult res =
      right ? right_engel_subgroup(g, x, n, seed, gf.name)
            : left_engel_subgroup(g, x, n, seed, gf.name);
  out << "group: " << gf.name << " (order " << g.order() << ")\n";
  out << "element: " << print_cycles(x) << '\n';
  out << "side: " << side << '\n';
  out << "n: " << n << '\n';
  out << "engel subgroup order: " << res.subgroup.order() << '\n';
  out << "mode: "
      << (res.mode == EngelMode::Exact ? "exact" : "probabilistic") << '\n';
  if (res.mode == EngelMode::Probabilistic)
    out << "samples: " << res.samples_used << '\n';
  return 0;
}

int run_verify(const std::string& corpus_dir, const VerifyConfig& cfg,
               std::ostream& out) {
  const std::vector<CorpusEntry> corpus = load_corpus_dir(corpus_dir);
  const std::vector<VerificationReport> reports = run_suite(corpus, cfg);
  for (const VerificationReport& r : reports) out << report_json(r) << '\n';
  const SuiteSummary s = summarize(reports);
  out << "# summary passes=" << s.passes << " fails=" << s.fails
      << " skips=" << s.skips << '\n';
  out << "# exercised";
  for (const auto& [check, count] : s.exercised)
    out << ' ' << check << '=' << count;
  out << '\n';
  for (const auto& [check, hist] : s.slack_histogram) {
    out << "# slack " << check;
    for (const auto& [slack, count] : hist) out << ' ' << slack << '=' << count;
    out << '\n';
  }
  return s.fails > 0 ? 1 : 0;
}

int run_construct(const std::string& spec, std::string name,
                  std::vector<std::string> tags, const std::string& out_path,
                  std::ostream& out) {
  const PermGroup g = build_construction(spec);
  if (name.empty()) name = spec;
  // Groups past the enumeration limit must carry the tag that keeps exact
  // element sweeps away from them; add it rather than trusting the caller.
  if (g.order() > Limits::current().enumeration &&
      std::find(tags.begin(), tags.end(), "no-enumeration") == tags.end())
    tags.push_back("no-enumeration");
  const GroupFile gf =
      to_group_file(name, g, std::move(tags), "constructed from: " + spec);
  if (out_path.empty()) {
    out << group_file_json(gf);
  } else {
    write_group_file(out_path, gf);
    out << "wrote " << out_path << " (degree " << g.degree() << ", order "
        << g.order() << ")\n";
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"finite group computations and the verification suite", "forge"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "structure summary of a group");
  std::string analyze_path;
  analyze->add_option("group", analyze_path, "group file (JSON)")->required();

  auto* engel = app.add_subcommand("engel", "Engel subgroup of an element");
  std::string engel_path, engel_element, engel_side = "right";
  int engel_n = 1;
  std::uint64_t engel_seed = 42;
  engel->add_option("group", engel_path, "group file (JSON)")->required();
  engel->add_option("--element", engel_element, "element in cycle notation")
      ->required();
  engel->add_option("--n", engel_n, "Engel depth (default 1)");
  engel->add_option("--side", engel_side, "right or left (default right)")
      ->check(CLI::IsMember({"right", "left"}));
  engel->add_option("--seed", engel_seed, "sampling seed (default 42)");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string corpus_dir;
  VerifyConfig cfg;
  verify->add_option("--corpus", corpus_dir, "directory of group files")
      ->required();
  verify->add_option("--seed", cfg.seed, "suite seed (default 42)");
  verify->add_option("--jobs", cfg.jobs, "worker threads (default 4)");
  verify->add_flag("--timings", cfg.timings, "report per-task runtimes");
  verify->add_flag("--weaken-f1", cfg.weaken_f1,
                   "self-test: weaken the soluble-radical bound by one and "
                   "expect failures");
  verify->add_option("--only-check", cfg.only_check, "replay filter: check id");
  verify->add_option("--only-group", cfg.only_group, "replay filter: group id");
  verify->add_option("--only-element", cfg.only_element,
                     "replay filter: element (cycle notation)");
  verify->add_option("--only-n", cfg.only_n, "replay filter: Engel depth");

  auto* construct = app.add_subcommand("construct", "build a group file");
  std::string spec, construct_name, construct_out;
  std::vector<std::string> construct_tags;
  construct->add_option("spec", spec,
                        "expression, e.g. \"Wreath(Alt(5), Cyclic(2))\"")
      ->required();
  construct->add_option("--name", construct_name, "group name (default: spec)");
  construct->add_option("--tag", construct_tags, "tag (repeatable)");
  construct->add_option("-o,--output", construct_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_path, out);
    if (engel->parsed())
      return run_engel(engel_path, engel_element, engel_n, engel_side,
                       engel_seed, out);
    if (verify->parsed()) return run_verify(corpus_dir, cfg, out);
    if (construct->parsed())
      return run_construct(spec, construct_name, construct_tags, construct_out,
                           out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace ef
