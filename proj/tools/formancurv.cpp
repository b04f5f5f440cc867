#include <algorithm>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "forman/error.hpp"
#include "forman/pipeline.hpp"

namespace {

constexpr std::pair<const char*, const char*> kCommands[] = {
    {"curvature", "edge curvatures of a graph or layer stack"},
    {"sensitivity", "partial derivatives and dimensionless sensitivities (one layer)"},
    {"evaluate", "per-vertex CE, CE_uni and difference scores"},
    {"identify", "weak vertex, layer and edge of a layer stack"},
    {"generate", "write a generated graph as JSON"},
    {"features", "feature matrix CSV for a synthetic dataset"},
    {"hist", "curvature histograms under each normalization"},
};

int fail(forman::ErrorCode code, const std::string& message) {
  std::cerr << "error: " << forman::error_category(code) << ": " << forman::error_code_name(code)
            << ": " << message << "\n";
  return forman::exit_status(code);
}

void emit(const std::vector<forman::Artifact>& artifacts, const std::string& out_dir) {
  if (out_dir.empty()) {
    for (const auto& a : artifacts) {
      if (artifacts.size() > 1) std::cout << "==> " << a.name << " <==\n";
      std::cout << a.content;
    }
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw forman::Error(forman::ErrorCode::kIoError, "cannot create '" + out_dir + "': " + ec.message());
  for (const auto& a : artifacts) {
    forman::write_text_file((std::filesystem::path(out_dir) / a.name).string(), a.content);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forman curvature on weighted and multiplex graphs"};
  app.require_subcommand(1, 1);

  forman::RunConfig config;
  std::string normalize, range, format = "csv", out_dir;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::vector<CLI::Option*> seed_opts, count_opts;

  for (const auto& [name, help] : kCommands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--input", config.input, "graph file (JSON)");
    sub->add_option("--generate", config.generate,
                    "generator spec: complete:N cycle:N tree:R:D er:N:P karate star:N path:N, "
                    "comma-separated per layer, or cg258 / cg888");
    seed_opts.push_back(sub->add_option("--seed", seed, "seed for random generators"));
    sub->add_option("--normalize", normalize, "none | mean | bounded")
        ->check(CLI::IsMember({"none", "mean", "bounded"}));
    sub->add_option("--range", range, "bounded scaling target lo:hi (default 1:10)");
    sub->add_option("--out", out_dir, "output directory (default: stdout)");
    sub->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    if (std::string_view(name) == "features") {
      sub->add_option("--iterations", config.iterations, "WL iterations (default 3)");
      sub->add_option("--dataset", config.dataset, "bridge | karate");
      count_opts.push_back(sub->add_option("--count", count, "graphs (bridge) or graphs per class (karate)"));
    }
    if (std::string_view(name) == "hist") {
      sub->add_option("--bins", config.bins, "histogram bins (default 30)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(forman::ErrorCode::kUsageError, e.what());
  }

  try {
    auto* sub = app.get_subcommands().front();
    config.command = sub->get_name();
    const auto given = [](const std::vector<CLI::Option*>& opts) {
      return std::any_of(opts.begin(), opts.end(), [](const CLI::Option* o) { return o->count() > 0; });
    };
    if (given(seed_opts)) config.seed = seed;
    if (given(count_opts)) config.count = count;
    if (normalize == "none") config.normalize = forman::NormalizeChoice::kNone;
    if (normalize == "mean") config.normalize = forman::NormalizeChoice::kMean;
    if (normalize == "bounded") config.normalize = forman::NormalizeChoice::kBounded;
    if (!range.empty()) std::tie(config.range_lo, config.range_hi) = forman::parse_range(range);
    config.format = format == "json" ? forman::ReportFormat::kJson : forman::ReportFormat::kCsv;
    emit(forman::run_pipeline(config), out_dir);
  } catch (const forman::Error& e) {
    return fail(e.code(), e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 70;
  }
  return 0;
}
