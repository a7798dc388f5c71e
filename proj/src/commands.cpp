#include "rbx/commands.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rbx/action.hpp"
#include "rbx/deform.hpp"
#include "rbx/kv.hpp"
#include "rbx/liealg.hpp"
#include "rbx/linalg.hpp"
#include "rbx/model_io.hpp"
#include "rbx/prelie.hpp"
#include "rbx/rbcx.hpp"

namespace rbx::cmd {

using ordered_json = nlohmann::ordered_json;
using lin::QMatrix;
using lin::QVec;
using lin::Rat;

namespace {

std::string file_label(const std::string& path) {
  std::size_t cut = path.find_last_of('/');
  return cut == std::string::npos ? path : path.substr(cut + 1);
}

ordered_json rat_array(const QVec& v) {
  ordered_json out = ordered_json::array();
  for (const Rat& r : v) out.push_back(lin::rat_string(r));
  return out;
}

ordered_json matrix_array(const QMatrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(rat_array(m.row(i)));
  return out;
}

struct Report {
  ordered_json verdicts = ordered_json::object();
  ordered_json dimensions = ordered_json::object();
  ordered_json representatives = ordered_json::object();
  ordered_json residuals = ordered_json::object();
  ordered_json h = ordered_json::array();
  bool has_h = false;
  bool all_ok = true;

  void verdict(const std::string& name, bool ok) {
    verdicts[name] = ok;
    all_ok = all_ok && ok;
  }

  void h_entry(int k, std::size_t dim) {
    has_h = true;
    h.push_back(ordered_json{{"k", k}, {"dim", dim}});
  }
};

/* Lookups; every miss is an input error for exit code 2. */

const lie::LieRepPair& need_pair(const io::Model& m) {
  if (!m.pair) throw std::invalid_argument("model has no lie_algebra section");
  return *m.pair;
}

const prelie::PreLieAlgebra& need_prelie(const io::Model& m) {
  if (!m.pre_lie) throw std::invalid_argument("model has no pre_lie section");
  return *m.pre_lie;
}

const action::ActionModel& need_action(const io::Model& m) {
  if (!m.action_model) throw std::invalid_argument("model has no action section");
  return *m.action_model;
}

const QMatrix& named_entry(const std::map<std::string, QMatrix>& table,
                           const std::string& name, const char* kind,
                           const char* flag) {
  if (name.empty())
    throw std::invalid_argument(std::string("missing ") + flag);
  auto it = table.find(name);
  if (it == table.end())
    throw std::invalid_argument(std::string("unknown ") + kind + " " + name);
  return it->second;
}

std::vector<QMatrix> named_terms(const std::map<std::string, QMatrix>& table,
                                 const std::vector<std::string>& names,
                                 const char* kind) {
  if (names.empty()) throw std::invalid_argument("missing --terms");
  std::vector<QMatrix> out;
  for (const std::string& n : names) out.push_back(named_entry(table, n, kind, "--terms"));
  return out;
}

std::pair<int, int> parse_degree_range(const std::string& text) {
  std::size_t cut = text.find(':');
  auto part = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("degrees: expected A:B with nonnegative integers");
    return std::stoi(s);
  };
  if (text.empty() || cut == std::string::npos)
    throw std::invalid_argument("degrees: expected A:B with nonnegative integers");
  int lo = part(text.substr(0, cut));
  int hi = part(text.substr(cut + 1));
  if (hi < lo) throw std::invalid_argument("degrees: range is empty");
  if (hi > 6) throw std::invalid_argument("degrees: upper bound above 6");
  return {lo, hi};
}

void record_violations(Report& rep, const std::vector<std::string>& violations) {
  if (violations.empty()) return;
  ordered_json list = ordered_json::array();
  for (const std::string& v : violations) list.push_back(v);
  if (rep.residuals.contains("violations"))
    for (const auto& v : list) rep.residuals["violations"].push_back(v);
  else
    rep.residuals["violations"] = list;
}

/* validate: every section present in the model is checked against its
   axioms. */
void cmd_validate(const io::Model& m, Report& rep) {
  if (m.pair) {
    lie::ValidationReport lv = lie::validate_lie(m.pair->algebra);
    rep.verdict("lie_algebra", lv.ok);
    record_violations(rep, lv.violations);
    lie::ValidationReport rv = lie::validate_rep(m.pair->algebra, m.pair->rep);
    rep.verdict("representation", rv.ok);
    record_violations(rep, rv.violations);
    rep.dimensions["algebra"] = m.pair->algebra.dim;
    rep.dimensions["module"] = m.pair->rep.dim;
  }
  if (m.pre_lie) {
    lie::ValidationReport pv = prelie::validate_prelie(*m.pre_lie);
    rep.verdict("pre_lie", pv.ok);
    record_violations(rep, pv.violations);
    rep.dimensions["pre_lie"] = m.pre_lie->dim;
  }
  if (m.action_model) {
    lie::ValidationReport av = action::validate_action(*m.action_model);
    rep.verdict("action", av.ok);
    record_violations(rep, av.violations);
    rep.dimensions["action_algebra"] = m.action_model->rb.algebra.dim;
    rep.dimensions["base"] = m.action_model->base_dim;
  }
}

void cmd_rb_check(const io::Model& m, const Request& r, Report& rep) {
  const lie::LieRepPair& p = need_pair(m);
  const QMatrix& t = named_entry(m.operators, r.operator_name, "operator", "--operator");
  rep.verdict("relative_rota_baxter", rbcx::is_relative_rb(p, t));
  rep.dimensions["algebra"] = p.algebra.dim;
  rep.dimensions["module"] = p.rep.dim;
  rep.residuals["defect"] = rat_array(rbcx::rb_defect(p, t).flatten());
}

void cmd_cohomology(const io::Model& m, const Request& r, Report& rep) {
  const lie::LieRepPair& p = need_pair(m);
  const QMatrix& t = named_entry(m.operators, r.operator_name, "operator", "--operator");
  auto [lo, hi] = parse_degree_range(r.degrees);
  bool rb = rbcx::is_relative_rb(p, t);
  rep.verdict("relative_rota_baxter", rb);
  rep.dimensions["algebra"] = p.algebra.dim;
  rep.dimensions["module"] = p.rep.dim;
  if (!rb) return;
  for (int k = lo; k <= hi; ++k) {
    rbcx::CohomologySummary s = rbcx::rb_cohomology(p, t, k);
    rep.h_entry(k, s.dim);
    ordered_json reps = ordered_json::array();
    for (const lie::Cochain& c : s.representatives) reps.push_back(rat_array(c.flatten()));
    rep.representatives["H" + std::to_string(k)] = reps;
  }
}

deform::DeformationSeries build_series(const io::Model& m, const Request& r) {
  deform::DeformationSeries s;
  s.base = named_entry(m.operators, r.operator_name, "operator", "--operator");
  s.terms = named_terms(m.operators, r.terms, "operator");
  return s;
}

void cmd_deform(const io::Model& m, const Request& r, Report& rep) {
  const lie::LieRepPair& p = need_pair(m);
  deform::DeformationSeries s = build_series(m, r);
  const std::string& sub = r.command[1];
  rep.dimensions["algebra"] = p.algebra.dim;
  rep.dimensions["module"] = p.rep.dim;
  rep.dimensions["order"] = s.order();

  bool rb = rbcx::is_relative_rb(p, s.base);
  rep.verdict("relative_rota_baxter", rb);
  if (!rb) return;

  std::vector<lie::Cochain> residuals = deform::order_residuals(p, s);
  bool flat = true;
  ordered_json rlist = ordered_json::array();
  for (const lie::Cochain& c : residuals) {
    flat = flat && c.is_zero();
    rlist.push_back(rat_array(c.flatten()));
  }
  rep.verdict("deformation", flat);
  rep.residuals["order_residuals"] = rlist;
  if (sub == "check" || !flat) return;

  lie::Cochain theta = deform::obstruction(p, s);
  rep.residuals["obstruction"] = rat_array(theta.flatten());
  if (sub == "obstruction") {
    rep.verdict("extendable",
                lin::in_column_space(rbcx::dT_matrix(p, s.base, 1), theta.flatten()));
    return;
  }
  std::optional<QMatrix> next = deform::extend(p, s);
  rep.verdict("extendable", next.has_value());
  if (next) rep.representatives["next_term"] = matrix_array(*next);
}

void cmd_gauge(const io::Model& m, const Request& r, Report& rep) {
  const lie::LieRepPair& p = need_pair(m);
  deform::DeformationSeries s;
  s.base = named_entry(m.operators, r.operator_name, "operator", "--operator");
  if (r.series_name.empty()) throw std::invalid_argument("missing --series");
  auto it = m.series.find(r.series_name);
  if (it == m.series.end())
    throw std::invalid_argument("unknown series " + r.series_name);
  s.terms = it->second;
  if (s.terms.empty()) throw std::invalid_argument("series has no terms");
  int order = r.order >= 0 ? r.order : s.order();
  if (order > 64) throw std::invalid_argument("order: truncation above 64");

  rep.dimensions["algebra"] = p.algebra.dim;
  rep.dimensions["module"] = p.rep.dim;
  rep.dimensions["order"] = order;

  bool rb = rbcx::is_relative_rb(p, s.base);
  rep.verdict("relative_rota_baxter", rb);
  if (!rb) return;
  rep.verdict("deformation", deform::is_deformation(p, s));
  if (!rep.all_ok) return;

  deform::InfinitesimalClass cls = deform::infinitesimal_class(p, s.base, s.terms[0]);
  rep.verdict("order1_trivial", cls.coboundary);
  if (!cls.coboundary) {
    rep.representatives["class"] = rat_array(cls.reduced.flatten());
    return;
  }

  /* The first-order term is d_T x for some x; exp(ad_{tx}) removes it. */
  QMatrix d0 = rbcx::dT_matrix(p, s.base, 0);
  std::optional<QVec> x =
      lin::solve_linear(d0, rbcx::operator_cochain(p, s.terms[0]).flatten());
  if (!x) throw std::logic_error("trivial class without a preimage");
  deform::DeformationSeries moved =
      deform::gauge_transform(p, s, deform::GaugeSeries{{*x}}, order);
  rep.verdict("straightened", moved.terms.empty() || moved.terms[0].is_zero());
  rep.representatives["gauge_vector"] = rat_array(*x);
  ordered_json out = ordered_json::array();
  for (const QMatrix& t : moved.terms) out.push_back(matrix_array(t));
  rep.representatives["transformed"] = out;
}

void cmd_prelie(const io::Model& m, const Request& r, Report& rep) {
  const prelie::PreLieAlgebra& a = need_prelie(m);
  lie::ValidationReport pv = prelie::validate_prelie(a);
  rep.verdict("pre_lie", pv.ok);
  record_violations(rep, pv.violations);
  rep.dimensions["pre_lie"] = a.dim;
  if (r.command[1] == "validate" || !pv.ok) return;
  for (int k = 0; k <= a.dim; ++k) {
    lin::Cohomology c = prelie::def_cohomology(a, k);
    rep.h_entry(k, c.dim);
    ordered_json reps = ordered_json::array();
    for (const QVec& v : c.representatives) reps.push_back(rat_array(v));
    rep.representatives["H" + std::to_string(k)] = reps;
  }
}

void cmd_kv(const io::Model& m, const Request& r, Report& rep) {
  const prelie::PreLieAlgebra& a = need_prelie(m);
  const QMatrix& h = named_entry(m.tensors, r.tensor_name, "tensor", "--tensor");
  const std::string& sub = r.command[1];
  rep.dimensions["pre_lie"] = a.dim;

  bool kv_ok = kv::is_kv(a, h);
  rep.verdict("koszul_vinberg", kv_ok);
  if (sub == "check") {
    rep.residuals["hh_bracket"] = rat_array(kv::hh_bracket(a, h).flatten());
    return;
  }
  if (!kv_ok) return;

  if (sub == "cohomology") {
    for (int k = 1; k <= 3; ++k) {
      kv::KVCohomologySummary s = kv::kv_cohomology(a, h, k, r.restricted);
      rep.h_entry(k, s.dim);
      ordered_json reps = ordered_json::array();
      for (const kv::KVCochain& c : s.representatives) reps.push_back(rat_array(c.flatten()));
      rep.representatives["H" + std::to_string(k)] = reps;
    }
    return;
  }

  kv::KVDeformationSeries s;
  s.base = h;
  s.terms = named_terms(m.tensors, r.terms, "tensor");
  rep.dimensions["order"] = s.order();
  bool flat = kv::is_kv_deformation(a, s);
  rep.verdict("deformation", flat);
  if (!flat) return;
  kv::KVCochain theta = kv::kv_obstruction(a, s);
  rep.residuals["obstruction"] = rat_array(theta.flatten());
  std::optional<QMatrix> next = kv::kv_extend(a, s);
  rep.verdict("extendable", next.has_value());
  if (sub == "extend" && next) rep.representatives["next_term"] = matrix_array(*next);
}

void cmd_hessian(const io::Model& m, const Request& r, Report& rep) {
  const prelie::PreLieAlgebra& a = need_prelie(m);
  const QMatrix& b = named_entry(m.forms, r.form_name, "form", "--form");
  rep.dimensions["pre_lie"] = a.dim;
  rep.verdict("pseudo_hessian", kv::pseudo_hessian_check(a, b));
}

void cmd_action_verify(const io::Model& m, Report& rep) {
  const action::ActionModel& am = need_action(m);
  lie::ValidationReport av = action::validate_action(am);
  rep.verdict("action_model", av.ok);
  record_violations(rep, av.violations);
  rep.dimensions["algebra"] = am.rb.algebra.dim;
  rep.dimensions["base"] = am.base_dim;
  if (!av.ok) return;

  /* Live certification of the operator identity on the algebroid over a
     deterministic sweep of monomial kernel sections. */
  std::vector<poly::Poly> coeffs{poly::Poly::constant(am.base_dim, Rat(1))};
  for (int a = 0; a < am.base_dim; ++a) {
    coeffs.push_back(poly::Poly::variable(am.base_dim, a));
    coeffs.push_back(coeffs.back() * coeffs.back());
  }
  bool ok = true;
  for (int i = 0; i < am.rb.algebra.dim && ok; ++i)
    for (int j = 0; j <= i && ok; ++j)
      for (const poly::Poly& f : coeffs) {
        if (!ok) break;
        for (const poly::Poly& g : coeffs) {
          action::PolySection s = action::constant_section(am, i).multiplied(f);
          action::PolySection t = action::constant_section(am, j).multiplied(g);
          if (!action::rb_identity_residual(am, s, t).is_zero()) {
            ok = false;
            break;
          }
        }
      }
  rep.verdict("algebroid_identity", ok);
}

ordered_json inputs_json(const Request& r) {
  ordered_json in = ordered_json::object();
  in["file"] = file_label(r.file);
  if (!r.operator_name.empty()) in["operator"] = r.operator_name;
  if (!r.terms.empty()) {
    std::string joined;
    for (const std::string& t : r.terms) joined += (joined.empty() ? "" : ",") + t;
    in["terms"] = joined;
  }
  if (!r.series_name.empty()) in["series"] = r.series_name;
  if (!r.tensor_name.empty()) in["tensor"] = r.tensor_name;
  if (!r.form_name.empty()) in["form"] = r.form_name;
  if (!r.degrees.empty()) in["degrees"] = r.degrees;
  if (r.order >= 0) in["order"] = r.order;
  if (r.restricted) in["restricted"] = true;
  return in;
}

std::string render_human(const ordered_json& report) {
  std::ostringstream out;
  auto line = [&](const std::string& k, const std::string& v) {
    out << k;
    const std::size_t width = std::max<std::size_t>(k.size() + 1, 28);
    for (std::size_t i = k.size(); i < width; ++i) out << ' ';
    out << v << '\n';
  };
  line("command", report["command"].get<std::string>());
  for (const auto& [k, v] : report["inputs"].items())
    line(k, v.is_string() ? v.get<std::string>() : v.dump());
  for (const auto& [k, v] : report["verdicts"].items())
    line("check " + k, v.get<bool>() ? "pass" : "FAIL");
  for (const auto& [k, v] : report["dimensions"].items()) line("dim " + k, v.dump());
  if (report.contains("H"))
    for (const auto& entry : report["H"])
      line("H^" + entry["k"].dump(), "dim " + entry["dim"].dump());
  for (const auto& [k, v] : report["representatives"].items()) line(k, v.dump());
  for (const auto& [k, v] : report["residuals"].items()) line(k, v.dump());
  return out.str();
}

}  // namespace

static void check_subcommand(const Request& r) {
  const std::string& head = r.command[0];
  auto expect = [&](std::initializer_list<const char*> subs) {
    if (r.command.size() == 2)
      for (const char* s : subs)
        if (r.command[1] == s) return;
    throw std::invalid_argument("unknown subcommand of " + head);
  };
  if (head == "deform") expect({"check", "obstruction", "extend"});
  if (head == "prelie") expect({"validate", "cohomology"});
  if (head == "kv") expect({"check", "cohomology", "obstruction", "extend"});
  if (head == "action") expect({"verify"});
}

Outcome run(const Request& r) {
  if (r.command.empty()) throw std::invalid_argument("missing command");
  check_subcommand(r);
  io::Model model = io::parse_model(r.file);
  Report rep;

  const std::string& head = r.command[0];
  if (head == "validate") {
    cmd_validate(model, rep);
  } else if (head == "rb-check") {
    cmd_rb_check(model, r, rep);
  } else if (head == "cohomology") {
    cmd_cohomology(model, r, rep);
  } else if (head == "deform") {
    cmd_deform(model, r, rep);
  } else if (head == "gauge") {
    cmd_gauge(model, r, rep);
  } else if (head == "prelie") {
    cmd_prelie(model, r, rep);
  } else if (head == "kv") {
    cmd_kv(model, r, rep);
  } else if (head == "hessian-check") {
    cmd_hessian(model, r, rep);
  } else if (head == "action") {
    cmd_action_verify(model, rep);
  } else {
    throw std::invalid_argument("unknown command " + head);
  }

  std::string name = r.command[0];
  for (std::size_t i = 1; i < r.command.size(); ++i) name += " " + r.command[i];
  ordered_json report;
  report["command"] = name;
  report["inputs"] = inputs_json(r);
  report["verdicts"] = rep.verdicts;
  report["dimensions"] = rep.dimensions;
  report["representatives"] = rep.representatives;
  report["residuals"] = rep.residuals;
  if (rep.has_h) report["H"] = rep.h;

  Outcome out;
  out.exit_code = rep.all_ok ? 0 : 1;
  out.output = r.json ? report.dump(2) + "\n" : render_human(report);
  return out;
}

}  // namespace rbx::cmd
