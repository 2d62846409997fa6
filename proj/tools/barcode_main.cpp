#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "barcode/action_graph.hpp"
#include "barcode/beta_map.hpp"
#include "barcode/bottleneck.hpp"
#include "barcode/diagnostics.hpp"
#include "barcode/foliation.hpp"
#include "barcode/generic_complex.hpp"
#include "barcode/json_io.hpp"
#include "barcode/render.hpp"
#include "barcode/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;     // validation / generation failure
constexpr int kExitParse = 2;      // parse, I/O, usage
constexpr int kExitInvariant = 3;  // verify found a violated invariant

void print_violations(const std::vector<barcode::Violation>& vs) {
  for (const auto& v : vs) std::cerr << v.code << ": " << v.detail << "\n";
}

int cmd_compute(const std::string& path, bool explain, bool strict) {
  auto data = barcode::parse_instance_file(path);
  auto mode = strict ? barcode::ValidateMode::strict : barcode::ValidateMode::lax;
  auto graph = barcode::ActionGraph::from(data, mode);
  auto result = barcode::compute_B_detailed(graph);
  if (explain)
    std::cout << barcode::dump(barcode::explain_json(graph, result));
  else
    std::cout << barcode::dump(barcode::barcode_json(result.barcode));
  return kExitOk;
}

int cmd_compute_gen(const std::string& path) {
  auto data = barcode::parse_instance_file(path);
  auto graph = barcode::ActionGraph::from(data);
  auto generic = barcode::validate_generic(graph);
  if (!generic.ok()) {
    print_violations(generic.violations);
    return kExitDomain;
  }
  std::cout << barcode::dump(barcode::barcode_json(barcode::compute_B_gen(*generic.instance)));
  return kExitOk;
}

int cmd_compare(const std::string& a_path, const std::string& b_path) {
  auto a = barcode::parse_barcode_file(a_path);
  auto b = barcode::parse_barcode_file(b_path);
  std::cout << barcode::format_double(barcode::bottleneck_distance(a, b)) << "\n";
  return kExitOk;
}

int cmd_validate(const std::string& path, bool strict) {
  auto data = barcode::parse_instance_file(path);
  auto mode = strict ? barcode::ValidateMode::strict : barcode::ValidateMode::lax;
  auto violations = barcode::validate(data, mode);
  if (violations.empty()) {
    std::cout << "ok\n";
    return kExitOk;
  }
  print_violations(violations);
  return kExitDomain;
}

int cmd_generate(int genus, std::uint64_t seed, int sources, int max_attempts,
                 const std::string& out_path) {
  barcode::GeneratorParams params;
  params.target_genus = genus;
  params.n_sources = sources;
  params.rng_seed = seed;
  params.max_attempts = max_attempts;
  auto gen = barcode::generate(params);
  barcode::GraphData data = gen.instance.graph.data();
  data.name = "generated-g" + std::to_string(genus) + "-s" + std::to_string(seed);
  barcode::write_file(out_path, barcode::dump(barcode::instance_json(data)));
  std::filesystem::path sidecar(out_path);
  sidecar.replace_extension(".provenance.json");
  barcode::write_file(sidecar.string(), barcode::dump(barcode::provenance_json(gen)));
  std::cerr << "wrote " << out_path << " (" << data.vertices.size() << " vertices, genus "
            << genus << ") and " << sidecar.string() << "\n";
  return kExitOk;
}

int cmd_plot(const std::string& path, const std::string& format) {
  auto b = barcode::parse_barcode_file(path);
  if (format == "svg")
    std::cout << barcode::render_svg(b);
  else
    std::cout << barcode::render_text(b);
  return kExitOk;
}

int cmd_verify(int seeds, int genus_max, std::uint64_t base_seed) {
  barcode::VerifyOptions opts;
  opts.seeds = seeds;
  opts.genus_max = genus_max;
  opts.base_seed = base_seed;
  auto report = barcode::run_verify(opts);
  std::cout << report.to_text();
  return report.all_pass() ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"persistence barcodes of action-filtered oriented graphs"};
  app.require_subcommand(1);

  std::string instance_path, barcode_a, barcode_b, out_path, format = "text";
  bool explain = false, strict = false;
  int genus = 0, sources = 1, max_attempts = 10000, seeds = 100, genus_max = 2;
  std::uint64_t seed = 0, base_seed = 1;

  auto* compute = app.add_subcommand("compute", "barcode of an instance via component merging");
  compute->add_option("instance", instance_path, "instance JSON file")->required();
  compute->add_flag("--explain", explain, "emit per-threshold diagnostics");
  compute->add_flag("--strict", strict, "enforce the strict index profile");

  auto* compute_gen =
      app.add_subcommand("compute-gen", "barcode of a generic instance via its chain complex");
  compute_gen->add_option("instance", instance_path, "instance JSON file")->required();

  auto* compare = app.add_subcommand("compare", "bottleneck distance between two barcodes");
  compare->add_option("a", barcode_a, "barcode JSON file")->required();
  compare->add_option("b", barcode_b, "barcode JSON file")->required();

  auto* validate = app.add_subcommand("validate", "check instance invariants");
  validate->add_option("instance", instance_path, "instance JSON file")->required();
  validate->add_flag("--strict", strict, "enforce the strict index profile");

  auto* generate = app.add_subcommand("generate", "sample a realizable generic instance");
  generate->add_option("--genus", genus, "target genus")->check(CLI::NonNegativeNumber);
  generate->add_option("--seed", seed, "rng seed")->envname("BARCODE_SEED");
  generate->add_option("--sources", sources, "number of sources")->check(CLI::PositiveNumber);
  generate->add_option("--max-attempts", max_attempts, "rejection budget")
      ->check(CLI::PositiveNumber);
  generate->add_option("--out", out_path, "output instance path")->required();

  auto* plot = app.add_subcommand("plot", "render a barcode");
  plot->add_option("barcode", barcode_a, "barcode JSON file")->required();
  plot->add_option("--format", format, "svg or text")
      ->check(CLI::IsMember({"svg", "text"}));

  auto* verify = app.add_subcommand("verify", "run the invariant suite on generated instances");
  verify->add_option("--seeds", seeds, "instances per genus")->check(CLI::NonNegativeNumber);
  verify->add_option("--genus-max", genus_max, "largest genus")->check(CLI::NonNegativeNumber);
  verify->add_option("--base-seed", base_seed, "base rng seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (app.got_subcommand(compute)) return cmd_compute(instance_path, explain, strict);
    if (app.got_subcommand(compute_gen)) return cmd_compute_gen(instance_path);
    if (app.got_subcommand(compare)) return cmd_compare(barcode_a, barcode_b);
    if (app.got_subcommand(validate)) return cmd_validate(instance_path, strict);
    if (app.got_subcommand(generate))
      return cmd_generate(genus, seed, sources, max_attempts, out_path);
    if (app.got_subcommand(plot)) return cmd_plot(barcode_a, format);
    if (app.got_subcommand(verify)) return cmd_verify(seeds, genus_max, base_seed);
  } catch (const barcode::ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitParse;
  } catch (const barcode::ValidationError& ex) {
    print_violations(ex.violations());
    return kExitDomain;
  } catch (const barcode::GenerationError& ex) {
    std::cerr << "generation failed: " << ex.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
