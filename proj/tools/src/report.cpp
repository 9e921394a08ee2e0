#include "schubert/cli/report.hpp"

#include "json.hpp"

#include <sstream>

namespace schubert::cli {

using Json = nlohmann::ordered_json;

namespace {

Json exact(const Rational& q)
{
  if (is_integer(q))
    return to_int64(q);
  return to_fraction_text(q);
}

std::string csv_exact(const Rational& q)
{
  return is_integer(q) ? q.get_str() : to_fraction_text(q);
}

std::string dump(const Json& j)
{
  return j.dump(2) + "\n";
}

Json cell_list(const FlagVariety& space)
{
  Json cells = Json::array();
  for (Cell c : space.cells())
    cells.push_back(space.cell_word(c));
  return cells;
}

Json sparse(const CohClass& x)
{
  Json j = Json::object();
  for (Cell c : x.space().cells())
    if (x[c] != 0)
      j[x.space().cell_word(c)] = exact(x[c]);
  return j;
}

std::string joined_words(const FlagVariety& space, const std::vector<Cell>& cells, char sep)
{
  std::string s;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k)
      s += sep;
    s += space.cell_word(cells[k]);
  }
  return s;
}

Json triple_json(const FlagVariety& space, const TripleEntry& e)
{
  return Json{{"lambda", space.cell_word(e.lambda)},
              {"mu", space.cell_word(e.mu)},
              {"nuprime", space.cell_word(e.nuprime)},
              {"a", e.a},
              {"d", e.d},
              {"E", e.E},
              {"status", std::string(to_string(e.status))}};
}

Json nfold_json(const FlagVariety& space, const NfoldEntry& e)
{
  Json cells = Json::array();
  for (Cell c : e.cells)
    cells.push_back(space.cell_word(c));
  return Json{{"cells", cells},
              {"d", e.d},
              {"chi", e.chi},
              {"signed_chi", e.signed_chi},
              {"status", std::string(to_string(e.status))}};
}

} // namespace

std::string emit_weyl(const WeylGroup& g, Format f)
{
  if (f == Format::Csv) {
    std::string s = "word,length\n";
    for (ElementId w = 0; w < g.size(); ++w)
      s += g.word_string(w) + "," + std::to_string(g.length(w)) + "\n";
    return s;
  }
  Json elements = Json::array();
  for (ElementId w = 0; w < g.size(); ++w)
    elements.push_back(Json{{"word", g.word_string(w)}, {"length", g.length(w)}});
  return dump(Json{{"type", g.root_system().label()},
                   {"rank", g.rank()},
                   {"order", g.size()},
                   {"longest", g.word_string(g.longest())},
                   {"elements", elements}});
}

std::string emit_table(const FlagVariety& space, Format f)
{
  const MultTable& t = space.table();
  if (f == Format::Csv) {
    std::string s = "u,v,w,c\n";
    for (std::size_t b = 0; b < t.size(); ++b)
      for (std::size_t a = 0; a <= b; ++a)
        for (const auto& [w, c] : t.product(a, b))
          s += space.cell_word(Cell{std::uint32_t(a)}) + "," + space.cell_word(Cell{std::uint32_t(b)}) + "," +
               space.cell_word(Cell{w}) + "," + std::to_string(c) + "\n";
    return s;
  }
  Json constants = Json::array();
  for (std::size_t b = 0; b < t.size(); ++b)
    for (std::size_t a = 0; a <= b; ++a)
      for (const auto& [w, c] : t.product(a, b))
        constants.push_back(Json{{"u", space.cell_word(Cell{std::uint32_t(a)})},
                                 {"v", space.cell_word(Cell{std::uint32_t(b)})},
                                 {"w", space.cell_word(Cell{w})},
                                 {"c", c}});
  return dump(Json{{"space", space.name()}, {"cells", cell_list(space)}, {"constants", constants}});
}

std::string emit_classes(const FlagVariety& space, const std::string& which, const std::vector<Cell>& cells, Format f)
{
  const std::vector<Cell> chosen = cells.empty() ? space.cells() : cells;
  auto value = [&](Cell c) -> const CohClass& { return which == "csm" ? space.csm(c) : space.ssm(c); };
  if (f == Format::Csv) {
    std::string s = "cell,basis,coefficient\n";
    for (Cell c : chosen) {
      const CohClass& x = value(c);
      for (Cell b : space.cells())
        if (x[b] != 0)
          s += space.cell_word(c) + "," + space.cell_word(b) + "," + csv_exact(x[b]) + "\n";
    }
    return s;
  }
  Json classes = Json::array();
  for (Cell c : chosen)
    classes.push_back(Json{{"cell", space.cell_word(c)}, {which, sparse(value(c))}});
  return dump(Json{{"space", space.name()},
                   {"dim", space.dim()},
                   {"total_chern", sparse(space.total_chern())},
                   {"classes", classes}});
}

std::string emit_chi(const FlagVariety& space, const NfoldEntry& e, Format f)
{
  if (f == Format::Csv)
    return "cells,d,chi,signed_chi,status\n" + joined_words(space, e.cells, ' ') + "," + std::to_string(e.d) + "," +
           std::to_string(e.chi) + "," + std::to_string(e.signed_chi) + "," + std::string(to_string(e.status)) + "\n";
  Json j{{"space", space.name()}};
  j.update(nfold_json(space, e));
  return dump(j);
}

std::string emit_constants(const FlagVariety& space, Cell lambda, Cell mu,
                           const std::vector<std::pair<Cell, std::int64_t>>& constants, Format f)
{
  if (f == Format::Csv) {
    std::string s = "nu,a\n";
    for (const auto& [nu, a] : constants)
      s += space.cell_word(nu) + "," + std::to_string(a) + "\n";
    return s;
  }
  Json list = Json::array();
  for (const auto& [nu, a] : constants)
    list.push_back(Json{{"nu", space.cell_word(nu)}, {"a", a}});
  return dump(Json{{"space", space.name()},
                   {"lambda", space.cell_word(lambda)},
                   {"mu", space.cell_word(mu)},
                   {"constants", list}});
}

std::string emit_triples(const FlagVariety& space, const TripleReport& r, Format f)
{
  if (f == Format::Csv) {
    std::string s = "lambda,mu,nuprime,a,d,E,status\n";
    for (const auto& e : r.entries)
      s += space.cell_word(e.lambda) + "," + space.cell_word(e.mu) + "," + space.cell_word(e.nuprime) + "," +
           std::to_string(e.a) + "," + std::to_string(e.d) + "," + std::to_string(e.E) + "," +
           std::string(to_string(e.status)) + "\n";
    return s;
  }
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back(triple_json(space, e));
  return dump(Json{{"space", r.space},
                   {"triples", r.entries.size()},
                   {"violations", r.violations()},
                   {"entries", entries}});
}

std::string emit_orthogonality(const FlagVariety& space, const OrthogonalityReport& r, Format f)
{
  if (f == Format::Csv) {
    std::string s = "cell";
    for (Cell c : space.cells())
      s += "," + space.cell_word(c);
    s += "\n";
    for (std::size_t i = 0; i < r.matrix.size(); ++i) {
      s += space.cell_word(Cell{std::uint32_t(i)});
      for (auto v : r.matrix[i])
        s += "," + std::to_string(v);
      s += "\n";
    }
    return s;
  }
  return dump(Json{{"space", r.space}, {"cells", cell_list(space)}, {"matrix", r.matrix}, {"violations", r.violations()}});
}

std::string emit_nfold(const FlagVariety& space, const NfoldReport& r, Format f)
{
  if (f == Format::Csv) {
    std::string s = "cells,d,chi,signed_chi,status\n";
    for (const auto& e : r.entries)
      s += joined_words(space, e.cells, ' ') + "," + std::to_string(e.d) + "," + std::to_string(e.chi) + "," +
           std::to_string(e.signed_chi) + "," + std::string(to_string(e.status)) + "\n";
    return s;
  }
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back(nfold_json(space, e));
  return dump(Json{{"space", r.space},
                   {"n", r.n},
                   {"exhaustive", r.exhaustive},
                   {"tuples", r.entries.size()},
                   {"violations", r.violations()},
                   {"entries", entries}});
}

std::string emit_oracle(const OracleReport& r, Format f)
{
  auto dims_text = [](const std::vector<int>& dims) {
    std::string s;
    for (std::size_t k = 0; k < dims.size(); ++k)
      s += (k ? " " : "") + std::to_string(dims[k]);
    return s;
  };
  if (f == Format::Csv) {
    std::string s = "dims,oracle,pipeline\n";
    for (const auto& m : r.mismatches)
      s += dims_text(m.dims) + "," + std::to_string(m.oracle) + "," + std::to_string(m.pipeline) + "\n";
    return s;
  }
  Json mismatches = Json::array();
  for (const auto& m : r.mismatches)
    mismatches.push_back(Json{{"dims", m.dims}, {"oracle", m.oracle}, {"pipeline", m.pipeline}});
  return dump(Json{{"n", r.n}, {"checked", r.checked}, {"mismatches", mismatches}});
}

std::size_t VerifySummary::violations() const
{
  return orthogonality.violations() + positivity.violations() + nfold.violations() + two_fold_failures.size() +
         chevalley.mismatches.size();
}

std::string emit_verify(const FlagVariety& space, const VerifySummary& s)
{
  Json two_fold = Json::array();
  for (const auto& [a, b] : s.two_fold_failures)
    two_fold.push_back(Json::array({space.cell_word(a), space.cell_word(b)}));
  Json triples = Json::array();
  for (const auto& e : s.positivity.entries)
    triples.push_back(triple_json(space, e));
  Json nfold = Json::array();
  for (const auto& e : s.nfold.entries)
    nfold.push_back(nfold_json(space, e));
  return dump(Json{
    {"space", space.name()},
    {"cells", cell_list(space)},
    {"violations", s.violations()},
    {"orthogonality", Json{{"matrix", s.orthogonality.matrix}, {"violations", s.orthogonality.violations()}}},
    {"positivity",
     Json{{"triples", s.positivity.entries.size()}, {"violations", s.positivity.violations()}, {"entries", triples}}},
    {"nfold",
     Json{{"n", s.nfold.n},
          {"exhaustive", s.nfold.exhaustive},
          {"tuples", s.nfold.entries.size()},
          {"violations", s.nfold.violations()},
          {"entries", nfold}}},
    {"two_fold_delta", Json{{"failures", two_fold}}},
    {"chevalley", Json{{"rows_checked", s.chevalley.rows_checked}, {"mismatches", s.chevalley.mismatches}}},
  });
}

} // namespace schubert::cli
