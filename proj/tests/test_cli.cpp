#include "doctest.h"

#include "schubert/cli/cache.hpp"
#include "schubert/cli/cli.hpp"
#include "schubert/cli/report.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace schubert;
using namespace schubert::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name)
{
  const fs::path p = fs::temp_directory_path() / ("schubert-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

} // namespace

TEST_CASE("exit codes")
{
  CHECK(run({"weyl", "--type", "B2"}).code == kExitOk);
  CHECK(run({"weyl", "--type", "Z9"}).code == kExitInputError);
  CHECK(run({"weyl"}).code == kExitInputError);
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({"chi", "--type", "A2", "--cells", "s1", "--bogus"}).code == kExitInputError);
  CHECK(run({"chi", "--type", "A2", "--parabolic", "7", "--cells", "e"}).code == kExitInputError);
  CHECK(run({"chi", "--type", "A2", "--parabolic", "2", "--cells", "s2"}).code == kExitInputError);
  CHECK(run({"chi", "--type", "A2", "--cells", "s1", "--out", "xml"}).code == kExitInputError);
  CHECK(run({"chi", "--type", "A2"}).code == kExitInputError);
  CHECK(run({"constants", "--type", "A2", "--cells", "s1"}).code == kExitInputError);
  CHECK(run({"--help"}).code == kExitOk);
  const Run bad = run({"frobnicate"});
  CHECK(bad.err.find("Usage") != std::string::npos);
}

TEST_CASE("weyl listing")
{
  const Run r = run({"weyl", "--type", "B2"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == 8);
  CHECK(j["elements"].size() == 8);
  CHECK(j["elements"][0]["word"] == "e");
  CHECK(j["longest"] == "s1s2s1s2");
  const Run csv = run({"weyl", "--type", "A1", "--out", "csv"});
  CHECK(csv.out == "word,length\ne,0\ns1,1\n");
}

TEST_CASE("chi and constants on P1")
{
  const Run r = run({"chi", "--type", "A1", "--cells", "s1,s1,s1"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["chi"] == -1);
  CHECK(j["d"] == 1);
  CHECK(j["signed_chi"] == 1);
  const Run c = run({"constants", "--type", "A1", "--cells", "s1,s1", "--out", "csv"});
  CHECK(c.out == "nu,a\ne,-1\ns1,1\n");
  // Words are canonicalised.
  const Run w = run({"chi", "--type", "A2", "--cells", "s2s1s2,e", "--out", "csv"});
  CHECK(w.out.find("\ns1s2s1 e,") != std::string::npos);
}

TEST_CASE("verify A2 G/B")
{
  const Run r = run({"verify", "--type", "A2", "--parabolic", "", "--jobs", "2"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["positivity"]["triples"] == 216);
  CHECK(j["positivity"]["violations"] == 0);
  CHECK(j["violations"] == 0);
  const Run csv = run({"verify", "--type", "A2", "--out", "csv"});
  CHECK(csv.out.rfind("lambda,mu,nuprime,a,d,E,status\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 217);
}

TEST_CASE("A1 orthogonality in CSV is the identity")
{
  const Run r = run({"verify", "--type", "A1", "--report", "orthogonality", "--out", "csv"});
  CHECK(r.out == "cell,e,s1\ne,1,0\ns1,0,1\n");
}

TEST_CASE("output is independent of --jobs and repeatable")
{
  const Run a = run({"verify", "--type", "B2", "--jobs", "1"});
  const Run b = run({"verify", "--type", "B2", "--jobs", "4"});
  const Run c = run({"verify", "--type", "B2", "--jobs", "4"});
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
  CHECK(run({"ssm", "--type", "G2", "--jobs", "1"}).out == run({"ssm", "--type", "G2", "--jobs", "3"}).out);
}

TEST_CASE("empty reports are valid documents")
{
  const OracleReport empty;
  CHECK_NOTHROW(nlohmann::json::parse(emit_oracle(empty, Format::Json)));
  CHECK(emit_oracle(empty, Format::Csv) == "dims,oracle,pipeline\n");
  const auto x = FlagVariety::create("A1", {});
  const TripleReport none{x->name(), {}};
  CHECK(emit_triples(*x, none, Format::Csv) == "lambda,mu,nuprime,a,d,E,status\n");
  CHECK(nlohmann::json::parse(emit_triples(*x, none, Format::Json))["triples"] == 0);
}

TEST_CASE("rational coefficients are printed exactly")
{
  const Run r = run({"ssm", "--type", "A1", "--out", "csv"});
  CHECK(r.out == "cell,basis,coefficient\ne,s1,1\ns1,e,1\ns1,s1,-1\n");
}

TEST_CASE("oracle-check")
{
  const Run r = run({"oracle-check", "--n", "2"});
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["mismatches"].empty());
}

TEST_CASE("cache: missing directory is created and round trips exactly")
{
  const fs::path dir = scratch_dir("roundtrip") / "nested";
  const auto lie = LieType::create("A3");
  const std::vector<int> subset{0, 2};
  std::ostringstream warn;
  const auto computed = open_space(lie, subset, dir, 2, warn);
  CHECK(fs::exists(cache_path(dir, *lie, subset)));
  const CacheLoad load = read_space_cache(dir, lie, subset);
  REQUIRE(load.status == CacheStatus::Hit);
  const FlagVariety& cached = *load.space;
  for (Cell a : computed->cells()) {
    CHECK(cached.csm(a).coeffs() == computed->csm(a).coeffs());
    CHECK(cached.ssm(a).coeffs() == computed->ssm(a).coeffs());
    for (Cell b : computed->cells())
      CHECK(cached.table().product(a.index, b.index) == computed->table().product(a.index, b.index));
  }
  CHECK(emit_table(cached, Format::Json) == emit_table(*computed, Format::Json));
  CHECK(warn.str().empty());

  // Writing the loaded space again gives a byte-identical file.
  std::ifstream first(cache_path(dir, *lie, subset));
  const std::string before{std::istreambuf_iterator<char>(first), {}};
  write_space_cache(dir, cached);
  std::ifstream second(cache_path(dir, *lie, subset));
  CHECK(std::string{std::istreambuf_iterator<char>(second), {}} == before);
  fs::remove_all(dir.parent_path());
}

TEST_CASE("cache: stale fingerprints and corrupt files")
{
  const fs::path dir = scratch_dir("stale");
  const auto lie = LieType::create("A2");
  std::ostringstream warn;
  open_space(lie, {}, dir, 1, warn);
  const fs::path file = cache_path(dir, *lie, {});

  nlohmann::ordered_json doc;
  {
    std::ifstream in(file);
    doc = nlohmann::ordered_json::parse(in);
  }
  doc["fingerprint"] = "0000000000000000";
  std::ofstream(file) << doc.dump();
  CHECK(read_space_cache(dir, lie, {}).status == CacheStatus::Stale);
  const auto fresh = open_space(lie, {}, dir, 1, warn);
  CHECK(warn.str().find("different conventions") != std::string::npos);
  CHECK(read_space_cache(dir, lie, {}).status == CacheStatus::Hit);

  std::ofstream(file) << "{ not json";
  CHECK(read_space_cache(dir, lie, {}).status == CacheStatus::Corrupt);
  std::ostringstream warn2;
  const auto recomputed = open_space(lie, {}, dir, 1, warn2);
  CHECK(warn2.str().find("recomputing") != std::string::npos);
  CHECK(recomputed->num_cells() == 6);

  doc["fingerprint"] = nlohmann::ordered_json::parse(std::ifstream(file))["fingerprint"];
  doc["constants"][0][3] = "x";
  std::ofstream(file) << doc.dump();
  CHECK(read_space_cache(dir, lie, {}).status == CacheStatus::Corrupt);
  CHECK(read_space_cache(dir / "absent", lie, {}).status == CacheStatus::Missing);
  fs::remove_all(dir);
}

TEST_CASE("cache through the command line")
{
  const fs::path dir = scratch_dir("cli");
  const Run first = run({"verify", "--type", "A2", "--parabolic", "2", "--cache-dir", dir.string()});
  const Run second = run({"verify", "--type", "A2", "--parabolic", "2", "--cache-dir", dir.string()});
  CHECK(first.code == kExitOk);
  CHECK(first.out == second.out);
  CHECK(second.err.empty());
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir))
    files += entry.is_regular_file();
  CHECK(files == 2);
  fs::remove_all(dir);
}
