#include "leibniz/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw ParseError(origin + ": " + what);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(path, "cannot open file for writing");
  out << text;
  if (!out) fail(path, "write failed");
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(origin, e.what());
  }
}

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& origin, const std::string& where) {
  for (const auto& item : obj.items())
    if (allowed.find(item.key()) == allowed.end())
      fail(origin, where + ": unknown field \"" + item.key() + "\"");
}

std::size_t read_index(const json& v, std::size_t dim, const std::string& origin,
                       const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 1)
    fail(origin, where + ": expected a positive integer index");
  const auto i = static_cast<std::size_t>(v.get<long long>());
  if (i > dim)
    fail(origin, where + ": index " + std::to_string(i) + " exceeds dim " +
                     std::to_string(dim));
  return i;
}

Rat read_rational(const json& v, const std::string& origin, const std::string& where) {
  if (!v.is_string()) fail(origin, where + ": expected a rational string");
  try {
    return Rat::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    fail(origin, where + ": " + e.what());
  }
}

Subspace read_basis_rows(const json& v, std::size_t dim, const std::string& origin,
                         const std::string& where) {
  if (!v.is_array()) fail(origin, where + ": expected an array of basis rows");
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < v.size(); ++r) {
    const json& rowj = v[r];
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!rowj.is_array() || rowj.size() != dim)
      fail(origin, rw + ": expected " + std::to_string(dim) + " entries");
    Vec row;
    for (std::size_t c = 0; c < dim; ++c)
      row.push_back(read_rational(rowj[c], origin, rw + "[" + std::to_string(c) + "]"));
    rows.push_back(std::move(row));
  }
  return Subspace::from_rows(dim, rows);
}

}  // namespace

AlgebraDoc parse_algebra(const std::string& text, const std::string& origin) {
  const json root = parse_json(text, origin);
  if (!root.is_object()) fail(origin, "top level must be an object");
  require_keys(root, {"brackets", "dim", "meta", "name", "unchecked"}, origin, "top level");

  if (!root.contains("name") || !root["name"].is_string())
    fail(origin, "\"name\" must be a string");
  const std::string name = root["name"].get<std::string>();

  if (!root.contains("dim") || !root["dim"].is_number_integer() ||
      root["dim"].get<long long>() < 1)
    fail(origin, "\"dim\" must be a positive integer");
  const auto dim = static_cast<std::size_t>(root["dim"].get<long long>());

  bool unchecked = false;
  if (root.contains("unchecked")) {
    if (!root["unchecked"].is_boolean()) fail(origin, "\"unchecked\" must be a boolean");
    unchecked = root["unchecked"].get<bool>();
  }

  if (!root.contains("brackets") || !root["brackets"].is_array())
    fail(origin, "\"brackets\" must be an array");

  std::vector<LeibnizAlgebra::Entry> entries;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const json& brackets = root["brackets"];
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const json& rec = brackets[b];
    const std::string where = "brackets[" + std::to_string(b) + "]";
    if (!rec.is_object()) fail(origin, where + ": expected an object");
    require_keys(rec, {"left", "result", "right"}, origin, where);
    if (!rec.contains("left") || !rec.contains("right") || !rec.contains("result"))
      fail(origin, where + ": needs fields left, right, result");
    const std::size_t left = read_index(rec["left"], dim, origin, where + ".left");
    const std::size_t right = read_index(rec["right"], dim, origin, where + ".right");
    if (!seen.insert({left, right}).second)
      fail(origin, where + ": duplicate bracket key (" + std::to_string(left) + "," +
                       std::to_string(right) + ")");
    const json& result = rec["result"];
    if (!result.is_array()) fail(origin, where + ".result: expected an array of terms");
    std::set<std::size_t> seen_idx;
    for (std::size_t t = 0; t < result.size(); ++t) {
      const json& term = result[t];
      const std::string tw = where + ".result[" + std::to_string(t) + "]";
      if (!term.is_array() || term.size() != 2)
        fail(origin, tw + ": expected an [index, rational] pair");
      const std::size_t k = read_index(term[0], dim, origin, tw);
      if (!seen_idx.insert(k).second)
        fail(origin, tw + ": duplicate result index " + std::to_string(k));
      const Rat c = read_rational(term[1], origin, tw);
      if (c.is_zero()) fail(origin, tw + ": zero coefficient is not canonical");
      entries.push_back({left - 1, right - 1, k - 1, c});
    }
  }

  AlgebraDoc doc{LeibnizAlgebra::create(dim, entries, name, unchecked), {}, {}, {}};

  if (root.contains("meta")) {
    const json& meta = root["meta"];
    if (!meta.is_object()) fail(origin, "\"meta\" must be an object");
    require_keys(meta, {"is_lie", "nilradical", "solvable_radical"}, origin, "meta");
    if (meta.contains("solvable_radical"))
      doc.solvable_radical =
          read_basis_rows(meta["solvable_radical"], dim, origin, "meta.solvable_radical");
    if (meta.contains("nilradical"))
      doc.nilradical = read_basis_rows(meta["nilradical"], dim, origin, "meta.nilradical");
    if (meta.contains("is_lie")) {
      if (!meta["is_lie"].is_boolean()) fail(origin, "meta.is_lie must be a boolean");
      doc.is_lie = meta["is_lie"].get<bool>();
    }
  }
  return doc;
}

AlgebraDoc load_algebra(const std::string& path) { return parse_algebra(slurp(path), path); }

std::string render_algebra(const AlgebraDoc& doc) {
  const LeibnizAlgebra& L = doc.algebra;
  const std::size_t d = L.dim();
  json root;
  root["name"] = L.name();
  root["dim"] = d;
  if (L.unchecked()) root["unchecked"] = true;
  json brackets = json::array();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto& terms = L.table(i, j);
      if (terms.empty()) continue;
      json rec;
      rec["left"] = i + 1;
      rec["right"] = j + 1;
      json result = json::array();
      for (const auto& [k, c] : terms) result.push_back({k + 1, c.str()});
      rec["result"] = std::move(result);
      brackets.push_back(std::move(rec));
    }
  }
  root["brackets"] = std::move(brackets);

  auto rows_json = [](const Subspace& s) {
    json rows = json::array();
    for (std::size_t r = 0; r < s.dim(); ++r) {
      json row = json::array();
      const Vec v = s.basis_row(r);
      for (const Rat& x : v) row.push_back(x.str());
      rows.push_back(std::move(row));
    }
    return rows;
  };
  if (doc.solvable_radical || doc.nilradical || doc.is_lie) {
    json meta;
    if (doc.solvable_radical) meta["solvable_radical"] = rows_json(*doc.solvable_radical);
    if (doc.nilradical) meta["nilradical"] = rows_json(*doc.nilradical);
    if (doc.is_lie) meta["is_lie"] = *doc.is_lie;
    root["meta"] = std::move(meta);
  }
  return root.dump(2) + "\n";
}

void save_algebra(const AlgebraDoc& doc, const std::string& path) {
  spill(path, render_algebra(doc));
}

Matrix parse_matrix(const std::string& text, const std::string& origin) {
  const json root = parse_json(text, origin);
  if (!root.is_object()) fail(origin, "top level must be an object");
  require_keys(root, {"cols", "entries", "rows"}, origin, "top level");
  if (!root.contains("rows") || !root.contains("cols") || !root.contains("entries"))
    fail(origin, "needs fields rows, cols, entries");
  if (!root["rows"].is_number_integer() || root["rows"].get<long long>() < 0 ||
      !root["cols"].is_number_integer() || root["cols"].get<long long>() < 0)
    fail(origin, "rows and cols must be nonnegative integers");
  const auto r = static_cast<std::size_t>(root["rows"].get<long long>());
  const auto c = static_cast<std::size_t>(root["cols"].get<long long>());
  const json& entries = root["entries"];
  if (!entries.is_array() || entries.size() != r)
    fail(origin, "entries must be an array of " + std::to_string(r) + " rows");
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const json& row = entries[i];
    const std::string where = "entries[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != c)
      fail(origin, where + ": expected " + std::to_string(c) + " entries");
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = read_rational(row[j], origin, where + "[" + std::to_string(j) + "]");
  }
  return m;
}

Matrix load_matrix(const std::string& path) { return parse_matrix(slurp(path), path); }

std::string render_matrix(const Matrix& m) {
  json root;
  root["rows"] = m.rows();
  root["cols"] = m.cols();
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    entries.push_back(std::move(row));
  }
  root["entries"] = std::move(entries);
  return root.dump(2) + "\n";
}

void save_matrix(const Matrix& m, const std::string& path) { spill(path, render_matrix(m)); }

Subspace load_subspace(const std::string& path) {
  return Subspace::from_matrix_rows(load_matrix(path));
}

}  // namespace leibniz
