// Command-line front end: analyze presentation files, realize single
// relators as planar Heegaard diagrams, and reformat result files.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mlift/io.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_analyze(const std::string& path, const mlift::Config& cfg,
                const std::string& format, const std::string& cache_dir) {
  mlift::ParsedFile parsed = mlift::parse_presentations(read_input(path));
  for (const mlift::ParseError& e : parsed.errors)
    std::cerr << path << ":" << e.line << ": " << e.message << "\n";
  std::vector<mlift::MliftReport> reports =
      mlift::analyze_all(parsed.records, cfg, cache_dir);
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(mlift::report_to_json(r));
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << mlift::result_csv_header() << "\n";
    for (const auto& r : reports) std::cout << mlift::result_csv_row(r) << "\n";
  }
  return parsed.errors.empty() ? 0 : 1;
}

int run_realize(const std::string& word) {
  mlift::CyclicWord w;
  try {
    w = mlift::parse_cyclic(word, 2);
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  }
  if (w.empty()) {
    std::cerr << "parse error: relator reduces to the empty word\n";
    return 1;
  }
  auto d = mlift::realize(w);
  if (!d) {
    std::cout << "not-realizable\n";
    return 0;
  }
  std::cout << mlift::serialize(*d);
  return 0;
}

int run_table(const std::string& path, const std::string& format) {
  nlohmann::json doc = nlohmann::json::parse(read_input(path));
  std::vector<mlift::MliftReport> reports;
  for (const auto& j : doc) reports.push_back(mlift::report_from_json(j));
  std::sort(reports.begin(), reports.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(mlift::report_to_json(r));
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << mlift::table_csv_header() << "\n";
    for (const auto& r : reports) std::cout << mlift::table_csv_row(r) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Certifies non-fibered tunnel-number-one knot-manifold presentations "
      "and computes covering-degree thresholds for large cyclic covers"};
  app.require_subcommand(1);

  mlift::Config cfg;
  std::string format = "csv";
  std::string cache_dir;
  app.add_option("--max-m", cfg.max_m, "largest m to try")
      ->check(CLI::PositiveNumber);
  app.add_option("--cond4-bound", cfg.cond4_bound,
                 "alternative witness disks per condition-4 index")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "worker threads for analyze")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--cache-dir", cache_dir, "directory for cached reports");

  std::string analyze_path, realize_word, table_path;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze a presentation file");
  analyze->add_option("file", analyze_path, "input file, or - for stdin")
      ->required();
  CLI::App* realize = app.add_subcommand("realize", "draw one relator");
  realize->add_option("relator", realize_word, "relator word, e.g. xyXY")
      ->required();
  CLI::App* table = app.add_subcommand("table", "reformat analyze JSON output");
  table->add_option("file", table_path, "results JSON, or - for stdin")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(analyze_path, cfg, format, cache_dir);
    if (realize->parsed()) return run_realize(realize_word);
    if (table->parsed()) return run_table(table_path, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
