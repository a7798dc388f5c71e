#include "rbx/model_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rbx/rational.hpp"

namespace rbx::io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;
using lin::QVec;
using lin::Rat;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::invalid_argument(path + ": " + what);
}

const json& require_field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing field");
  return *it;
}

void check_known_keys(const json& obj, const std::vector<std::string>& known,
                      const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const std::string& k : known) ok = ok || it.key() == k;
    if (!ok) fail(path + "." + it.key(), "unknown field");
  }
}

int parse_dim(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    fail(path, "expected a nonnegative integer");
  return static_cast<int>(v.get<long long>());
}

Rat parse_entry(const json& v, const std::string& path) {
  if (v.is_number_integer()) return lin::rat(v.get<long long>());
  if (v.is_string()) {
    try {
      return lin::parse_rat(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer or a \"p/q\" string");
}

QVec parse_vec(const json& v, std::size_t len, const std::string& path) {
  if (!v.is_array() || v.size() != len)
    fail(path, "expected an array of length " + std::to_string(len));
  QVec out(len, Rat(0));
  for (std::size_t i = 0; i < len; ++i)
    out[i] = parse_entry(v[i], path + "[" + std::to_string(i) + "]");
  return out;
}

QMatrix parse_matrix(const json& v, std::size_t rows, std::size_t cols,
                     const std::string& path) {
  if (!v.is_array() || v.size() != rows)
    fail(path, "expected " + std::to_string(rows) + " rows");
  std::vector<QVec> r;
  for (std::size_t i = 0; i < rows; ++i)
    r.push_back(parse_vec(v[i], cols, path + "[" + std::to_string(i) + "]"));
  return rows == 0 ? QMatrix(0, cols) : QMatrix::from_rows(r);
}

/* dim plus a square table of coordinate vectors under the given key. */
void parse_table(const json& v, const char* key, const std::string& path, int& dim,
                 std::vector<std::vector<QVec>>& table) {
  if (!v.is_object()) fail(path, "expected an object");
  check_known_keys(v, {"dim", key}, path);
  dim = parse_dim(require_field(v, "dim", path), path + ".dim");
  const json& rows = require_field(v, key, path);
  const std::string tpath = path + "." + key;
  const std::size_t n = static_cast<std::size_t>(dim);
  if (!rows.is_array() || rows.size() != n)
    fail(tpath, "expected " + std::to_string(dim) + " rows");
  table.assign(n, std::vector<QVec>());
  for (std::size_t i = 0; i < n; ++i) {
    const std::string rpath = tpath + "[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != n)
      fail(rpath, "expected " + std::to_string(dim) + " entries");
    for (std::size_t j = 0; j < n; ++j)
      table[i].push_back(parse_vec(rows[i][j], n, rpath + "[" + std::to_string(j) + "]"));
  }
}

lie::LieAlgebra parse_lie(const json& v, const std::string& path) {
  lie::LieAlgebra g;
  parse_table(v, "bracket", path, g.dim, g.bracket);
  return g;
}

std::map<std::string, QMatrix> parse_named_matrices(const json& v, std::size_t rows,
                                                    std::size_t cols,
                                                    const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object of named matrices");
  std::map<std::string, QMatrix> out;
  for (auto it = v.begin(); it != v.end(); ++it)
    out.emplace(it.key(), parse_matrix(it.value(), rows, cols, path + "." + it.key()));
  return out;
}

action::ActionModel parse_action(const json& v, const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object");
  check_known_keys(v, {"lie_algebra", "operator", "base_dim", "fields"}, path);
  action::ActionModel m;
  m.rb.algebra = parse_lie(require_field(v, "lie_algebra", path), path + ".lie_algebra");
  const std::size_t n = static_cast<std::size_t>(m.rb.algebra.dim);
  m.rb.bmap = parse_matrix(require_field(v, "operator", path), n, n, path + ".operator");
  m.base_dim = parse_dim(require_field(v, "base_dim", path), path + ".base_dim");
  const json& fields = require_field(v, "fields", path);
  const std::string fpath = path + ".fields";
  if (!fields.is_array() || fields.size() != n)
    fail(fpath, "expected " + std::to_string(m.rb.algebra.dim) + " fields");
  for (std::size_t i = 0; i < n; ++i) {
    const std::string ipath = fpath + "[" + std::to_string(i) + "]";
    if (!fields[i].is_array() || fields[i].size() != static_cast<std::size_t>(m.base_dim))
      fail(ipath, "expected " + std::to_string(m.base_dim) + " components");
    poly::PolyVecField x = poly::PolyVecField::zero(m.base_dim);
    for (int c = 0; c < m.base_dim; ++c) {
      const json& comp = fields[i][static_cast<std::size_t>(c)];
      const std::string cpath = ipath + "[" + std::to_string(c) + "]";
      if (!comp.is_string()) fail(cpath, "expected a polynomial string");
      try {
        x.components[static_cast<std::size_t>(c)] =
            poly::Poly::parse(comp.get<std::string>(), m.base_dim);
      } catch (const std::invalid_argument& e) {
        fail(cpath, e.what());
      }
    }
    m.phi.push_back(x);
  }
  return m;
}

Model parse_json(const json& root) {
  if (!root.is_object()) throw std::invalid_argument("model: expected a JSON object");
  check_known_keys(root,
                   {"lie_algebra", "representation", "operators", "pre_lie", "tensors",
                    "forms", "series", "action"},
                   "model");
  Model m;

  if (root.contains("lie_algebra")) {
    lie::LieRepPair pair;
    pair.algebra = parse_lie(root["lie_algebra"], "lie_algebra");
    if (root.contains("representation")) {
      const json& rep = root["representation"];
      if (!rep.is_object()) fail("representation", "expected an object");
      check_known_keys(rep, {"dim", "matrices"}, "representation");
      pair.rep.dim = parse_dim(require_field(rep, "dim", "representation"),
                               "representation.dim");
      const json& mats = require_field(rep, "matrices", "representation");
      const std::size_t n = static_cast<std::size_t>(pair.algebra.dim);
      if (!mats.is_array() || mats.size() != n)
        fail("representation.matrices",
             "expected " + std::to_string(pair.algebra.dim) + " matrices");
      for (std::size_t i = 0; i < n; ++i)
        pair.rep.action.push_back(
            parse_matrix(mats[i], static_cast<std::size_t>(pair.rep.dim),
                         static_cast<std::size_t>(pair.rep.dim),
                         "representation.matrices[" + std::to_string(i) + "]"));
    } else {
      pair.rep = lie::adjoint_rep(pair.algebra);
    }
    m.pair = pair;
  } else if (root.contains("representation")) {
    fail("representation", "requires lie_algebra");
  }

  if (root.contains("operators") || root.contains("series")) {
    if (!m.pair) fail(root.contains("operators") ? "operators" : "series",
                      "requires lie_algebra");
    const std::size_t rows = static_cast<std::size_t>(m.pair->algebra.dim);
    const std::size_t cols = static_cast<std::size_t>(m.pair->rep.dim);
    if (root.contains("operators"))
      m.operators = parse_named_matrices(root["operators"], rows, cols, "operators");
    if (root.contains("series")) {
      const json& series = root["series"];
      if (!series.is_object()) fail("series", "expected an object of named term lists");
      for (auto it = series.begin(); it != series.end(); ++it) {
        const std::string spath = "series." + it.key();
        if (!it.value().is_array()) fail(spath, "expected an array of matrices");
        std::vector<QMatrix> terms;
        for (std::size_t i = 0; i < it.value().size(); ++i)
          terms.push_back(parse_matrix(it.value()[i], rows, cols,
                                       spath + "[" + std::to_string(i) + "]"));
        m.series.emplace(it.key(), terms);
      }
    }
  }

  if (root.contains("pre_lie")) {
    prelie::PreLieAlgebra p;
    parse_table(root["pre_lie"], "product", "pre_lie", p.dim, p.product);
    m.pre_lie = p;
  }

  if (root.contains("tensors") || root.contains("forms")) {
    if (!m.pre_lie) fail(root.contains("tensors") ? "tensors" : "forms",
                         "requires pre_lie");
    const std::size_t d = static_cast<std::size_t>(m.pre_lie->dim);
    for (const char* key : {"tensors", "forms"}) {
      if (!root.contains(key)) continue;
      auto named = parse_named_matrices(root[key], d, d, key);
      for (const auto& [name, mat] : named)
        if (!mat.is_symmetric()) fail(std::string(key) + "." + name, "not symmetric");
      (std::string(key) == "tensors" ? m.tensors : m.forms) = std::move(named);
    }
  }

  if (root.contains("action")) m.action_model = parse_action(root["action"], "action");

  return m;
}

ordered_json entry_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p())
    return ordered_json(r.get_num().get_si());
  return ordered_json(lin::rat_string(r));
}

ordered_json vec_json(const QVec& v) {
  ordered_json out = ordered_json::array();
  for (const Rat& r : v) out.push_back(entry_json(r));
  return out;
}

ordered_json matrix_json(const QMatrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_json(m.row(i)));
  return out;
}

ordered_json table_json(int dim, const std::vector<std::vector<QVec>>& table) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < dim; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < dim; ++j)
      row.push_back(vec_json(table[static_cast<std::size_t>(i)]
                                  [static_cast<std::size_t>(j)]));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Model parse_model_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  return parse_json(root);
}

Model parse_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open model file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_text(buf.str());
}

std::string serialize_model(const Model& m) {
  ordered_json root = ordered_json::object();
  if (m.pair) {
    root["lie_algebra"] = {{"dim", m.pair->algebra.dim},
                           {"bracket", table_json(m.pair->algebra.dim,
                                                  m.pair->algebra.bracket)}};
    ordered_json mats = ordered_json::array();
    for (const QMatrix& a : m.pair->rep.action) mats.push_back(matrix_json(a));
    root["representation"] = {{"dim", m.pair->rep.dim}, {"matrices", mats}};
  }
  if (!m.operators.empty()) {
    ordered_json ops = ordered_json::object();
    for (const auto& [name, t] : m.operators) ops[name] = matrix_json(t);
    root["operators"] = ops;
  }
  if (m.pre_lie)
    root["pre_lie"] = {{"dim", m.pre_lie->dim},
                       {"product", table_json(m.pre_lie->dim, m.pre_lie->product)}};
  for (const auto* named : {&m.tensors, &m.forms}) {
    if (named->empty()) continue;
    ordered_json out = ordered_json::object();
    for (const auto& [name, t] : *named) out[name] = matrix_json(t);
    root[named == &m.tensors ? "tensors" : "forms"] = out;
  }
  if (!m.series.empty()) {
    ordered_json out = ordered_json::object();
    for (const auto& [name, terms] : m.series) {
      ordered_json list = ordered_json::array();
      for (const QMatrix& t : terms) list.push_back(matrix_json(t));
      out[name] = list;
    }
    root["series"] = out;
  }
  if (m.action_model) {
    const action::ActionModel& a = *m.action_model;
    ordered_json fields = ordered_json::array();
    for (const poly::PolyVecField& x : a.phi) {
      ordered_json comps = ordered_json::array();
      for (const poly::Poly& f : x.components) comps.push_back(f.to_string());
      fields.push_back(comps);
    }
    root["action"] = {{"lie_algebra",
                       ordered_json{{"dim", a.rb.algebra.dim},
                                    {"bracket", table_json(a.rb.algebra.dim,
                                                           a.rb.algebra.bracket)}}},
                      {"operator", matrix_json(a.rb.bmap)},
                      {"base_dim", a.base_dim},
                      {"fields", fields}};
  }
  return root.dump(2) + "\n";
}

bool models_equal(const Model& a, const Model& b) {
  if (a.pair.has_value() != b.pair.has_value()) return false;
  if (a.pair) {
    if (a.pair->algebra.dim != b.pair->algebra.dim) return false;
    if (a.pair->algebra.bracket != b.pair->algebra.bracket) return false;
    if (a.pair->rep.dim != b.pair->rep.dim) return false;
    if (a.pair->rep.action != b.pair->rep.action) return false;
  }
  if (a.pre_lie.has_value() != b.pre_lie.has_value()) return false;
  if (a.pre_lie && (a.pre_lie->dim != b.pre_lie->dim ||
                    a.pre_lie->product != b.pre_lie->product))
    return false;
  if (a.operators != b.operators || a.tensors != b.tensors || a.forms != b.forms ||
      a.series != b.series)
    return false;
  if (a.action_model.has_value() != b.action_model.has_value()) return false;
  if (a.action_model) {
    const action::ActionModel& x = *a.action_model;
    const action::ActionModel& y = *b.action_model;
    if (x.rb.algebra.dim != y.rb.algebra.dim ||
        x.rb.algebra.bracket != y.rb.algebra.bracket)
      return false;
    if (!(x.rb.bmap == y.rb.bmap) || x.base_dim != y.base_dim) return false;
    if (x.phi.size() != y.phi.size()) return false;
    for (std::size_t i = 0; i < x.phi.size(); ++i)
      if (!(x.phi[i] == y.phi[i])) return false;
  }
  return true;
}

}  // namespace rbx::io
