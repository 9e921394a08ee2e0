#include "schubert/cli/cache.hpp"

#include "schubert/error.hpp"

#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace schubert::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kConventions =
  "cartan a_ij=<alpha_i^vee,alpha_j>; basis opposite Schubert classes sigma_w of degree 2l(w); "
  "cells indexed by minimal representatives of W/W_P; csm(e)=sigma_w0, csm(ws_i)=((1+alpha_i)d_i-1)csm(w); "
  "constants integral";

std::uint64_t fnv1a(std::uint64_t h, std::string_view bytes)
{
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t v)
{
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

std::string subset_text(const std::vector<int>& subset)
{
  std::string s;
  for (std::size_t k = 0; k < subset.size(); ++k)
    s += (k ? "_" : "") + std::to_string(subset[k] + 1);
  return s;
}

Json sparse(const FlagVariety& space, const std::vector<Rational>& v)
{
  Json j = Json::object();
  for (Cell c : space.cells())
    if (v[c.index] != 0)
      j[space.cell_word(c)] = to_fraction_text(v[c.index]);
  return j;
}

std::vector<Rational> dense(const FlagVariety& space, const Json& j)
{
  std::vector<Rational> v(space.num_cells());
  for (const auto& [word, text] : j.items())
    v[space.parse_cell(word).index] = parse_rational(text.get<std::string>());
  return v;
}

} // namespace

std::uint64_t convention_fingerprint(const RootSystem& rs)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, kConventions);
  h = fnv1a(h, "format " + std::to_string(kCacheFormatVersion));
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j)
      h = fnv1a(h, std::to_string(rs.cartan(i, j)) + ",");
  return h;
}

fs::path cache_path(const fs::path& dir, const LieType& lie, const std::vector<int>& subset)
{
  std::string name = lie.label();
  for (char& c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)))
      c = '-';
  name += "-" + hex(convention_fingerprint(lie.root_system())).substr(0, 8);
  name += subset.empty() ? "-B" : "-P" + subset_text(subset);
  return dir / (name + ".json");
}

void write_space_cache(const fs::path& dir, const FlagVariety& space, unsigned jobs)
{
  fs::create_directories(dir);
  const MultTable& t = space.table();
  t.materialize(jobs);

  Json constants = Json::array();
  for (std::size_t b = 0; b < t.size(); ++b)
    for (std::size_t a = 0; a <= b; ++a)
      for (const auto& [w, c] : t.product(a, b))
        constants.push_back(Json::array({space.cell_word(Cell{std::uint32_t(a)}),
                                         space.cell_word(Cell{std::uint32_t(b)}), space.cell_word(Cell{w}), c}));
  Json cells = Json::array();
  Json csm = Json::object();
  for (Cell c : space.cells()) {
    cells.push_back(space.cell_word(c));
    csm[space.cell_word(c)] = sparse(space, space.csm(c).coeffs());
  }
  Json subset = Json::array();
  for (int i : space.parabolic().subset())
    subset.push_back(i + 1);
  const Json doc{{"format", kCacheFormatVersion},
                 {"fingerprint", hex(convention_fingerprint(space.lie().root_system()))},
                 {"type", space.lie().label()},
                 {"cartan", space.lie().root_system().cartan_matrix()},
                 {"parabolic", subset},
                 {"cells", cells},
                 {"constants", constants},
                 {"csm", csm},
                 {"total_chern", sparse(space, space.total_chern().coeffs())}};

  const fs::path target = cache_path(dir, space.lie(), space.parabolic().subset());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error(ErrorKind::InvalidInput, "cannot write cache file " + tmp.string());
    out << doc.dump(1) << "\n";
  }
  fs::rename(tmp, target);
}

CacheLoad read_space_cache(const fs::path& dir, std::shared_ptr<const LieType> lie, const std::vector<int>& subset)
{
  CacheLoad load;
  const fs::path file = cache_path(dir, *lie, subset);
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    load.status = CacheStatus::Missing;
    return load;
  }
  try {
    const Json doc = Json::parse(in);
    if (doc.at("format").get<int>() != kCacheFormatVersion ||
        doc.at("fingerprint").get<std::string>() != hex(convention_fingerprint(lie->root_system()))) {
      load.status = CacheStatus::Stale;
      load.message = "cache " + file.string() + " was written under different conventions; ignoring it";
      return load;
    }
    // A bare space is needed to translate words into cell indices.
    const auto shape = std::make_shared<FlagVariety>(lie, subset);
    Json cells = Json::array();
    for (Cell c : shape->cells())
      cells.push_back(shape->cell_word(c));
    if (doc.at("cells") != cells)
      throw Error(ErrorKind::InvalidInput, "cell list does not match");

    SpaceTables tables;
    for (const auto& row : doc.at("constants")) {
      Cell a = shape->parse_cell(row.at(0).get<std::string>());
      Cell b = shape->parse_cell(row.at(1).get<std::string>());
      if (b < a)
        std::swap(a, b);
      tables.constants.push_back(
        {a.index, b.index, shape->parse_cell(row.at(2).get<std::string>()).index, row.at(3).get<std::int64_t>()});
    }
    tables.csm.assign(shape->num_cells(), {});
    for (Cell c : shape->cells())
      tables.csm[c.index] = dense(*shape, doc.at("csm").at(shape->cell_word(c)));
    tables.total_chern = dense(*shape, doc.at("total_chern"));
    load.space = FlagVariety::from_tables(lie, subset, std::move(tables));
    load.status = CacheStatus::Hit;
  } catch (const std::exception& e) {
    load.status = CacheStatus::Corrupt;
    load.space.reset();
    load.message = "cache " + file.string() + " is unreadable (" + e.what() + "); recomputing";
  }
  return load;
}

std::shared_ptr<const FlagVariety> open_space(std::shared_ptr<const LieType> lie, const std::vector<int>& subset,
                                              const std::optional<fs::path>& dir, unsigned jobs, std::ostream& warn)
{
  if (dir) {
    CacheLoad load = read_space_cache(*dir, lie, subset);
    if (load.status == CacheStatus::Hit)
      return load.space;
    if (!load.message.empty())
      warn << "warning: " << load.message << "\n";
  }
  auto space = FlagVariety::create(std::move(lie), subset);
  if (dir)
    write_space_cache(*dir, *space, jobs);
  return space;
}

} // namespace schubert::cli
