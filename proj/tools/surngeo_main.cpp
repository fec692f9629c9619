// surngeo: assign countries of origin to surnames from bibliographic records.
//
// Pipeline subcommands, each a pure file-to-file transform:
//   ingest    JSONL records -> trusted-linkage TSV
//   matrix    linkage TSV   -> surname-by-country count matrix TSV
//   assign    matrix TSV    -> per-surname assignment TSV (KL or Gini method)
//   stats     matrix + assignments -> top-k countries by assigned surnames
//   validate  assignments + control list + language map -> validation report
//
// Exit codes: 0 success, 1 I/O failure, 2 input format error (strict mode),
// 3 invalid configuration.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "surngeo/assign_gini.hpp"
#include "surngeo/assign_kl.hpp"
#include "surngeo/assignment.hpp"
#include "surngeo/errors.hpp"
#include "surngeo/linkage.hpp"
#include "surngeo/matrix.hpp"
#include "surngeo/normalize.hpp"
#include "surngeo/record.hpp"
#include "surngeo/tsv.hpp"
#include "surngeo/validate.hpp"

namespace {

using namespace surngeo;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitFormat = 2;
constexpr int kExitConfig = 3;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return in;
}

struct IngestArgs {
  std::string input, output, country_map;
  bool strict = false;
};

void run_ingest(const IngestArgs& args) {
  CountryNormalizer norm =
      args.country_map.empty() ? CountryNormalizer() : load_country_map(args.country_map);
  std::ifstream in = open_input(args.input);
  ExtractStats stats;
  atomic_write(args.output, [&](std::ostream& out) {
    stats = stream_extract(in, norm, args.strict ? ParseMode::Strict : ParseMode::Lenient,
                           [&out](const TrustedLinkage& linkage) { write_linkage_row(out, linkage); });
  });
  std::cerr << "records=" << stats.read.lines << " parsed=" << stats.read.parsed
            << " format_errors=" << stats.read.format_errors
            << " semantic_errors=" << stats.read.semantic_errors << " linkages=" << stats.linkages
            << '\n';
}

void run_matrix(const std::string& input, const std::string& output) {
  std::ifstream in = open_input(input);
  SurnameCountryMatrix m;
  std::uint64_t rows = 0;
  for_each_linkage_row(in, [&](const TrustedLinkage& linkage) {
    m.add(linkage.surname, linkage.country);
    ++rows;
  });
  save_matrix(std::filesystem::path(output), m);
  std::cerr << "rows=" << rows << " surnames=" << m.surname_count()
            << " countries=" << m.country_count() << " grand_total=" << m.grand_total() << '\n';
}

struct AssignArgs {
  std::string matrix, output;
  std::string method = "kl";
  std::string kl_mode = "point-mass";
  double percentile = 0.8;
  std::uint64_t min_count = 0;
};

void run_assign(const AssignArgs& args) {
  SurnameCountryMatrix m = load_matrix(std::filesystem::path(args.matrix));
  AssignmentSet set;
  if (args.method == "kl") {
    KlConfig cfg;
    cfg.percentile = args.percentile;
    cfg.mode = args.kl_mode == "global" ? KlMode::GlobalReference : KlMode::PointMass;
    set = assign_kl(m, cfg);
  } else {
    GiniConfig cfg;
    cfg.min_count = args.min_count;
    set = assign_gini(m, cfg);
  }
  atomic_write(args.output, [&set](std::ostream& out) { write_assignments(out, set); });
  std::uint64_t reliable = 0;
  for (const Assignment& a : set.entries) reliable += a.reliable ? 1 : 0;
  std::cerr << set.config_summary << '\n';
  std::cerr << "surnames=" << set.entries.size() << " reliable=" << reliable
            << " skipped=" << set.skipped << '\n';
}

void run_stats(const std::string& matrix_path, const std::string& assignments_path,
               const std::string& output, int top_k) {
  SurnameCountryMatrix m = load_matrix(std::filesystem::path(matrix_path));
  std::ifstream in = open_input(assignments_path);
  AssignmentSet set = read_assignments(in);
  auto ranked = top_countries(m, set, top_k);
  atomic_write(output, [&ranked](std::ostream& out) {
    for (const auto& [country, count] : ranked) out << country << '\t' << count << '\n';
  });
  std::cerr << "countries=" << ranked.size() << '\n';
}

struct ValidateArgs {
  std::string assignments, control, langmap, output;
};

void run_validate(const ValidateArgs& args) {
  std::ifstream in = open_input(args.assignments);
  AssignmentSet set = read_assignments(in);
  ControlList control = load_control(args.control);
  LanguageCountryMap map = load_langmap(std::filesystem::path(args.langmap));
  ValidationReport report = evaluate(set, control.entries, map);
  render_report(std::filesystem::path(args.output), report);
  std::cerr << "control=" << report.control_entries << " matched=" << report.totals.matched
            << " unmatched=" << report.unmatched << " warnings=" << control.warnings
            << " coverage_pct=" << format_fixed(100.0 * report.totals.coverage(), 2)
            << " correct_pct=" << format_fixed(100.0 * report.totals.correctness(), 2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surname-to-country assignment from bibliographic records"};
  app.require_subcommand(1);

  IngestArgs ingest_args;
  CLI::App* ingest = app.add_subcommand("ingest", "parse records and extract trusted linkages");
  ingest->add_option("-i,--input", ingest_args.input, "JSONL record file")->required();
  ingest->add_option("-o,--output", ingest_args.output, "linkage TSV to write")->required();
  ingest->add_option("--country-map", ingest_args.country_map, "country alias TSV");
  ingest->add_flag("--strict", ingest_args.strict, "fail on the first bad record");

  std::string matrix_input, matrix_output;
  CLI::App* matrix = app.add_subcommand("matrix", "accumulate linkages into the count matrix");
  matrix->add_option("-i,--input", matrix_input, "linkage TSV")->required();
  matrix->add_option("-o,--output", matrix_output, "matrix TSV to write")->required();

  AssignArgs assign_args;
  CLI::App* assign = app.add_subcommand("assign", "assign a country to every surname");
  assign->add_option("-m,--matrix", assign_args.matrix, "matrix TSV")->required();
  assign->add_option("-o,--output", assign_args.output, "assignment TSV to write")->required();
  assign->add_option("--method", assign_args.method, "kl or gini")
      ->check(CLI::IsMember({"kl", "gini"}));
  assign->add_option("--percentile", assign_args.percentile, "KL reliability percentile in (0, 1]");
  assign->add_option("--kl-mode", assign_args.kl_mode, "point-mass or global")
      ->check(CLI::IsMember({"point-mass", "global"}));
  assign->add_option("--min-count", assign_args.min_count, "Gini minimum publications per country");

  std::string stats_matrix, stats_assignments, stats_output;
  int stats_top = 36;
  CLI::App* stats = app.add_subcommand("stats", "top countries by assigned surnames");
  stats->add_option("-m,--matrix", stats_matrix, "matrix TSV")->required();
  stats->add_option("-a,--assignments", stats_assignments, "assignment TSV")->required();
  stats->add_option("-o,--output", stats_output, "report TSV to write")->required();
  stats->add_option("-k,--top", stats_top, "number of countries to list");

  ValidateArgs validate_args;
  CLI::App* validate = app.add_subcommand("validate", "score assignments against a control list");
  validate->add_option("-a,--assignments", validate_args.assignments, "assignment TSV")->required();
  validate->add_option("-c,--control", validate_args.control, "control list TSV")->required();
  validate->add_option("-l,--langmap", validate_args.langmap, "language map file")->required();
  validate->add_option("-o,--output", validate_args.output, "report TSV to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*ingest) {
      run_ingest(ingest_args);
    } else if (*matrix) {
      run_matrix(matrix_input, matrix_output);
    } else if (*assign) {
      if (!(assign_args.percentile > 0.0) || assign_args.percentile > 1.0)
        throw ConfigError("--percentile must be in (0, 1]");
      run_assign(assign_args);
    } else if (*stats) {
      if (stats_top < 1) throw ConfigError("--top must be at least 1");
      run_stats(stats_matrix, stats_assignments, stats_output, stats_top);
    } else if (*validate) {
      run_validate(validate_args);
    }
  } catch (const ConfigError& e) {
    std::cerr << "surngeo: configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const FormatError& e) {
    std::cerr << "surngeo: format error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const SemanticError& e) {
    std::cerr << "surngeo: invalid record: " << e.what() << '\n';
    return kExitFormat;
  } catch (const IoError& e) {
    std::cerr << "surngeo: I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "surngeo: error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}
