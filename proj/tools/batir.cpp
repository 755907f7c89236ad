// Command-line front end: list the catalog, verify entries, evaluate ad-hoc
// expressions, run benchmarks and export the catalog.
//
// Exit codes: 0 success / all selected entries pass, 1 verification failure,
// 2 usage error, 3 internal error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "batir/bench.hpp"
#include "batir/catalog.hpp"
#include "batir/catalog_io.hpp"
#include "batir/verify.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

std::uint64_t initial_seed() {
  if (const char* env = std::getenv("BATIR_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("BATIR_SEED", std::string("not an integer: ") + env);
    }
  }
  return kDefaultSeed;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
}

int cmd_list() {
  for (const auto& rec : batir::builtin_catalog())
    std::cout << rec.id << "  " << rec.title << " [" << rec.anchor << "]\n";
  return 0;
}

int cmd_verify(const std::string& id_filter, std::optional<std::int64_t> n_max,
               std::uint64_t seed, unsigned jobs, const std::string& format,
               const std::string& out_path, bool timings) {
  auto reports = batir::run_suite(id_filter, n_max, seed, jobs);
  if (format == "json") {
    std::cout << batir::reports_to_json(reports, timings);
  } else {
    for (const auto& r : reports) std::cout << batir::report_line(r) << "\n";
    std::size_t passed = 0;
    for (const auto& r : reports)
      if (r.status == batir::Status::Pass) ++passed;
    std::cout << passed << "/" << reports.size() << " identities pass (seed " << seed << ")\n";
  }
  if (!out_path.empty()) write_file(out_path, batir::reports_to_json(reports, timings));
  return batir::all_passed(reports) ? 0 : 1;
}

int cmd_eval(const std::string& text, const std::vector<std::string>& binds) {
  batir::ParamBinding binding;
  for (const auto& b : binds) {
    auto eq = b.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--bind", "expected name=value, got '" + b + "'");
    binding.scalars[b.substr(0, eq)] = batir::Rational::parse(b.substr(eq + 1));
  }
  batir::Expr e = batir::parse(text);
  std::cout << batir::eval(e, binding).str() << "\n";
  return 0;
}

int cmd_bench(const std::string& id_filter, const std::vector<std::int64_t>& n_points, int reps,
              std::uint64_t seed, const std::string& format, const std::string& out_path) {
  std::vector<std::string> ids;
  for (const auto* rec : batir::select_identities(id_filter)) ids.push_back(rec->id);
  auto rows = batir::bench(ids, n_points, reps, seed);
  std::string csv = batir::bench_csv(rows);
  if (format == "text") {
    for (const auto& r : rows)
      std::cout << r.id << " n=" << r.n << ": naive " << r.naive_ns << " ns, closed form "
                << r.closed_ns << " ns, speedup " << r.speedup << "\n";
  } else {
    std::cout << csv;
  }
  if (!out_path.empty()) write_file(out_path, csv);
  return 0;
}

int cmd_export(const std::string& out_path) {
  std::string dump = batir::export_catalog(batir::builtin_catalog());
  if (out_path.empty())
    std::cout << dump;
  else
    write_file(out_path, dump);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic verifier for a catalog of finite double-sum identities"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "list all catalog entries");

  std::string id_filter = "*";
  std::int64_t n_max_flag = -1;
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 0;
  std::string format = "text";
  std::string out_path;
  bool timings = false;
  auto* verify_cmd = app.add_subcommand("verify", "sweep identities and check exact equality");
  verify_cmd->add_option("--id", id_filter, "glob over identity ids (default: all)");
  verify_cmd->add_option("--n-max", n_max_flag, "override the per-entry sweep limit");
  verify_cmd->add_option("--seed", seed, "seed for randomized domains");
  verify_cmd->add_option("--jobs", jobs, "worker threads (default: hardware concurrency)");
  verify_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--out", out_path, "write the JSON report here");
  verify_cmd->add_flag("--timings", timings, "include wall_time in JSON reports");

  std::string eval_text;
  std::vector<std::string> binds;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one expression exactly");
  eval_cmd->add_option("expr", eval_text, "expression to evaluate")->required();
  eval_cmd->add_option("--bind", binds, "name=value, value as p or p/q (repeatable)");

  std::string bench_filter;
  std::vector<std::int64_t> n_points;
  int reps = 5;
  std::string bench_format = "csv";
  std::string bench_out;
  std::uint64_t bench_seed = kDefaultSeed;
  auto* bench_cmd = app.add_subcommand("bench", "time naive summation against the closed form");
  bench_cmd->add_option("--id", bench_filter, "glob over identity ids")->required();
  bench_cmd->add_option("--n", n_points, "sweep point (repeatable)")->required();
  bench_cmd->add_option("--reps", reps, "repetitions per measurement (>= 5)");
  bench_cmd->add_option("--seed", bench_seed, "seed for any randomized parameters");
  bench_cmd->add_option("--format", bench_format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}));
  bench_cmd->add_option("--out", bench_out, "write the CSV here");

  std::string export_out;
  auto* export_cmd = app.add_subcommand("export-catalog", "dump the catalog, one JSON record per line");
  export_cmd->add_option("--out", export_out, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!verify_cmd->count("--seed")) seed = initial_seed();
    if (!bench_cmd->count("--seed")) bench_seed = initial_seed();

    if (list_cmd->parsed()) return cmd_list();
    if (verify_cmd->parsed()) {
      std::optional<std::int64_t> n_max;
      if (verify_cmd->count("--n-max")) n_max = n_max_flag;
      return cmd_verify(id_filter, n_max, seed, jobs, format, out_path, timings);
    }
    if (eval_cmd->parsed()) return cmd_eval(eval_text, binds);
    if (bench_cmd->parsed())
      return cmd_bench(bench_filter, n_points, reps, bench_seed, bench_format, bench_out);
    if (export_cmd->parsed()) return cmd_export(export_out);
  } catch (const batir::UnknownIdentity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const batir::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
