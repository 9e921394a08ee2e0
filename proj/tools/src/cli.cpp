#include "schubert/cli/cli.hpp"

#include "schubert/cli/cache.hpp"
#include "schubert/cli/report.hpp"
#include "schubert/error.hpp"
#include "schubert/euler.hpp"
#include "schubert/oracle.hpp"
#include "schubert/parallel.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

namespace schubert::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string type;
  std::string parabolic;
  std::string cells;
  std::optional<int> n;
  std::string out = "json";
  std::string cache_dir;
  unsigned jobs = default_jobs();
  std::string report = "all";
};

std::vector<std::string> split(const std::string& text, char sep)
{
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

// 1-based comma list -> sorted 0-based subset.
std::vector<int> parse_parabolic(const std::string& text, int rank)
{
  std::vector<int> subset;
  const bool blank = std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (blank)
    return subset;
  for (const auto& part : split(text, ',')) {
    int i = 0;
    std::size_t used = 0;
    try {
      i = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size())
      throw Error(ErrorKind::InvalidInput, "bad parabolic index '" + part + "'");
    if (i < 1 || i > rank)
      throw Error(ErrorKind::InvalidInput, "parabolic index " + part + " outside 1.." + std::to_string(rank));
    subset.push_back(i - 1);
  }
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  return subset;
}

std::vector<Cell> parse_cells(const FlagVariety& space, const std::string& text)
{
  std::vector<Cell> cells;
  if (text.empty())
    return cells;
  for (const auto& word : split(text, ','))
    cells.push_back(space.parse_cell(word));
  return cells;
}

void add_space_options(CLI::App* sub, Options& o)
{
  sub->add_option("--type", o.type, "Cartan type label (A3, B2, G2, ...) or a Cartan matrix as a JSON array")
    ->required();
  sub->add_option("--parabolic", o.parabolic, "Simple roots generating P, 1-based comma list; empty for G/B");
  sub->add_option("--cache-dir", o.cache_dir, "Directory for cached tables")->envname("SCHUBERT_CACHE_DIR");
}

void add_output_options(CLI::App* sub, Options& o)
{
  sub->add_option("--out", o.out, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

// Reruns compare against the previous report instead of silently replacing it.
void persist_report(const fs::path& dir, const std::string& name, const std::string& text, std::ostream& err)
{
  fs::create_directories(dir);
  const fs::path file = dir / name;
  if (std::ifstream in{file, std::ios::binary}) {
    const std::string previous{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (previous != text)
      err << "warning: report differs from the previous run stored in " << file.string() << "\n";
  }
  std::ofstream(file, std::ios::binary | std::ios::trunc) << text;
}

std::string file_stem(const std::string& name)
{
  std::string s = name;
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)))
      c = '-';
  return s;
}

int dispatch(CLI::App& app, const Options& o, std::ostream& out, std::ostream& err)
{
  const Format format = o.out == "csv" ? Format::Csv : Format::Json;
  const CLI::App* sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();

  if (cmd == "oracle-check") {
    std::vector<int> ns;
    if (o.n)
      ns = {*o.n};
    else
      ns = {1, 2, 3, 4};
    bool ok = true;
    for (int n : ns) {
      if (n < 1 || n > 7)
        throw Error(ErrorKind::InvalidInput, "--n must lie in 1..7");
      const OracleReport r = proj_cross_check(n);
      ok = ok && r.ok();
      out << emit_oracle(r, format);
    }
    return ok ? kExitOk : kExitViolation;
  }

  const auto lie = LieType::create(o.type);
  if (cmd == "weyl") {
    out << emit_weyl(lie->group(), format);
    return kExitOk;
  }

  const std::vector<int> subset = parse_parabolic(o.parabolic, lie->group().rank());
  std::optional<fs::path> cache;
  if (!o.cache_dir.empty())
    cache = fs::path(o.cache_dir);
  const auto space = open_space(lie, subset, cache, o.jobs, err);
  const std::vector<Cell> cells = parse_cells(*space, o.cells);

  if (cmd == "table") {
    space->table().materialize(o.jobs);
    out << emit_table(*space, format);
    return kExitOk;
  }
  if (cmd == "csm" || cmd == "ssm") {
    out << emit_classes(*space, cmd, cells, format);
    return kExitOk;
  }
  if (cmd == "chi") {
    if (cells.empty())
      throw Error(ErrorKind::InvalidInput, "chi needs --cells");
    const NfoldEntry e = signed_chi(*space, cells);
    out << emit_chi(*space, e, format);
    return e.status == Status::Violation ? kExitViolation : kExitOk;
  }
  if (cmd == "constants") {
    if (cells.size() != 2)
      throw Error(ErrorKind::InvalidInput, "constants needs exactly two --cells");
    out << emit_constants(*space, cells[0], cells[1], structure_constants(*space, cells[0], cells[1]), format);
    return kExitOk;
  }

  // verify
  const int n = o.n.value_or(3);
  if (n < 1)
    throw Error(ErrorKind::InvalidInput, "--n must be positive");
  VerifySummary s;
  s.chevalley = chevalley_check(space->table());
  s.orthogonality = verify_orthogonality(*space, o.jobs);
  s.positivity = verify_positivity(*space, o.jobs);
  s.nfold = verify_nfold_sign(*space, n, o.jobs);
  s.two_fold_failures = check_two_fold_delta(*space, o.jobs);

  std::string text;
  std::string report = o.report;
  if (format == Format::Csv && report == "all")
    report = "positivity";
  if (report == "all")
    text = emit_verify(*space, s);
  else if (report == "positivity")
    text = emit_triples(*space, s.positivity, format);
  else if (report == "orthogonality")
    text = emit_orthogonality(*space, s.orthogonality, format);
  else
    text = emit_nfold(*space, s.nfold, format);
  if (cache)
    persist_report(*cache,
                   "verify-" + file_stem(space->name()) + "-n" + std::to_string(n) + "-" + report +
                     (format == Format::Csv ? ".csv" : ".json"),
                   text, err);
  out << text;
  return s.violations() == 0 ? kExitOk : kExitViolation;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  Options o;
  CLI::App app{"Schubert calculus on G/P: structure constants, CSM/SSM classes, Euler characteristics", "schubert"};
  app.require_subcommand(1);

  auto* weyl = app.add_subcommand("weyl", "List the Weyl group in length-lexicographic order");
  weyl->add_option("--type", o.type, "Cartan type label or JSON Cartan matrix")->required();
  add_output_options(weyl, o);

  auto* table = app.add_subcommand("table", "Structure constants of the Schubert basis");
  auto* csm = app.add_subcommand("csm", "CSM classes of Schubert cells");
  auto* ssm = app.add_subcommand("ssm", "SSM classes of Schubert cells");
  auto* chi = app.add_subcommand("chi", "Euler characteristic of a generic intersection of cells");
  auto* constants = app.add_subcommand("constants", "SSM structure constants a^nu for two cells");
  auto* verify = app.add_subcommand("verify", "Orthogonality, positivity and n-fold sign sweeps");
  for (auto* sub : {table, csm, ssm, chi, constants, verify}) {
    add_space_options(sub, o);
    add_output_options(sub, o);
  }
  for (auto* sub : {csm, ssm, chi, constants})
    sub->add_option("--cells", o.cells, "Comma-separated reduced words, e.g. s1,s2s1");
  verify->add_option("--n", o.n, "Number of cells in the n-fold sweep (default 3)");
  verify->add_option("--report", o.report, "Report to print")
    ->check(CLI::IsMember({"all", "positivity", "orthogonality", "nfold"}));

  auto* oracle = app.add_subcommand("oracle-check", "Compare with inclusion-exclusion on P^n");
  oracle->add_option("--n", o.n, "Dimension of P^n (default: 1 through 4)");
  add_output_options(oracle, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    return dispatch(app, o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_input_error() ? kExitInputError : kExitInternalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternalError;
  }
}

} // namespace schubert::cli
