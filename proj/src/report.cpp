#include "qmod/report.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "qmod/degeneration.hpp"
#include "qmod/stability.hpp"

namespace qmod {

using json = nlohmann::ordered_json;

namespace {

struct Context {
  const InputDocument& doc;
  const CommandOptions& opts;
  Algebra alg;
  std::optional<ProjectiveCover> p;
  Report& rep;

  void line(const std::string& s) { rep.lines.push_back(s); }
  bool field_finite() const { return alg.field().is_finite(); }

  const ProjectiveCover& cover() {
    if (!p) {
      if (!doc.top) throw Error(ErrorKind::TypeMismatch, "this command needs a top block");
      p.emplace(alg, *doc.top);
    }
    return *p;
  }
  SweepLimits limits() const { return {opts.max_sweep, 100000}; }
  SubmodulePoint point() {
    if (doc.points.empty()) throw Error(ErrorKind::TypeMismatch, "this command needs a point block");
    return doc_point(cover(), doc.points.front());
  }
  const DimVector& dimvec() const {
    if (!doc.dimvec) throw Error(ErrorKind::TypeMismatch, "this command needs a dimvec block");
    return *doc.dimvec;
  }
};

json dims_json(const DimVector& d) { return json(d); }

json matrix_json(const Matrix& m) { return json(m.to_strings()); }

json module_json(const Rep& m) {
  json j;
  j["dims"] = dims_json(m.dims());
  json maps = json::object();
  const Quiver& q = m.algebra().quiver();
  for (int a = 0; a < q.arrow_count(); ++a) maps[q.arrow(a).label] = matrix_json(m.map(a));
  j["maps"] = maps;
  return j;
}

std::string matrix_text(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += (i ? ", " : "") + std::string("[");
    for (std::size_t k = 0; k < m.cols(); ++k) s += (k ? "," : "") + m(i, k).to_string();
    s += "]";
  }
  return s + "]";
}

void module_lines(Context& c, const std::string& indent, const Rep& m) {
  c.line(indent + "dims: " + dim_string(m.dims()));
  const Quiver& q = m.algebra().quiver();
  for (int a = 0; a < q.arrow_count(); ++a) c.line(indent + q.arrow(a).label + ": " + matrix_text(m.map(a)));
}

// Generators of C scaled so the deglex-largest term of each has coefficient 1.
std::vector<std::string> generator_strings(const InputDocument& doc, const ProjectiveCover& p, const SubmodulePoint& c) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < c.space.dim(); ++r) {
    Vec v = c.space.vector(r);
    DslVector d = vector_to_dsl(p, v);
    const Scalar lead = v[static_cast<std::size_t>(p.index(d.front().r, static_cast<std::size_t>(
                                                               p.algebra().basis_index(Path{p.generator_vertex(d.front().r),
                                                                                            d.front().arrows}))))];
    const Scalar inv = lead.inverse();
    for (auto& x : v) x = x * inv;
    out.push_back(render_vector(doc, vector_to_dsl(p, v)));
  }
  return out;
}

std::string joined(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

json point_json(Context& c, const SubmodulePoint& pt) {
  json j;
  j["generators"] = generator_strings(c.doc, c.cover(), pt);
  j["dim"] = pt.space.dim();
  j["quotient_dims"] = dims_json(pt.quotient_dims);
  return j;
}

std::string point_text(Context& c, const SubmodulePoint& pt) {
  return "span{" + joined(generator_strings(c.doc, c.cover(), pt)) + "}";
}

json skeleton_json(const ProjectiveCover& p, const Skeleton& s) {
  json paths = json::array();
  for (std::size_t i : display_order(p, s)) paths.push_back(p.label(i));
  return {{"paths", paths}, {"layering", layering_string(p.algebra().quiver(), s.layering)}};
}

std::string layering_of_dims(const Quiver& q, const SemisimpleSequence& s) { return layering_string(q, s); }

// ---------------------------------------------------------------------------

void cmd_algebra_info(Context& c) {
  const Algebra& a = c.alg;
  const Quiver& q = a.quiver();
  json& r = c.rep.result;
  r["field"] = a.field().name();
  r["dim"] = a.dim();
  r["loewy_length"] = a.loewy_length();
  r["max_len"] = a.max_len();
  r["nakayama"] = a.is_nakayama();
  r["homogeneous_ideal"] = a.is_homogeneous_ideal();
  r["monomial"] = a.is_monomial();
  json basis = json::array();
  for (const auto& p : a.basis()) basis.push_back(p.to_string(q));
  r["basis"] = basis;
  json proj = json::array();
  c.line("field: " + a.field().name());
  c.line("dim: " + std::to_string(a.dim()));
  c.line("loewy_length: " + std::to_string(a.loewy_length()));
  c.line("nakayama: " + std::string(a.is_nakayama() ? "true" : "false"));
  c.line("homogeneous_ideal: " + std::string(a.is_homogeneous_ideal() ? "true" : "false"));
  c.line("monomial: " + std::string(a.is_monomial() ? "true" : "false"));
  std::vector<std::string> names;
  for (const auto& p : a.basis()) names.push_back(p.to_string(q));
  c.line("basis: " + joined(names));
  for (int i = 0; i < q.vertex_count(); ++i) {
    const auto layers = a.projective_layer_dims(i);
    proj.push_back({{"vertex", q.vertex_labels()[static_cast<std::size_t>(i)]},
                    {"dims", dims_json(a.projective_dim_vector(i))},
                    {"layering", layering_of_dims(q, layers)}});
    c.line("P" + q.vertex_labels()[static_cast<std::size_t>(i)] + ": dims " + dim_string(a.projective_dim_vector(i)) +
           ", layering " + layering_of_dims(q, layers));
  }
  r["projectives"] = proj;
}

void cmd_skeleta(Context& c) {
  const ProjectiveCover& p = c.cover();
  std::vector<Skeleton> sk;
  std::string mode;
  if (c.doc.layering) {
    sk = enumerate_skeleta(p, *c.doc.layering);
    mode = "layering " + layering_string(p.algebra().quiver(), *c.doc.layering);
  } else if (!c.doc.points.empty()) {
    sk = skeleta_of_point(p, c.point());
    mode = "point";
  } else {
    sk = skeleta_with_dims(p, c.dimvec());
    mode = "dimvec " + dim_string(c.dimvec());
  }
  json list = json::array();
  for (const auto& s : sk) list.push_back(skeleton_json(p, s));
  c.rep.result["mode"] = mode;
  c.rep.result["count"] = sk.size();
  c.rep.result["skeleta"] = list;
  c.line("mode: " + mode);
  c.line("count: " + std::to_string(sk.size()));
  for (const auto& s : sk)
    c.line("  " + skeleton_string(p, s) + "  " + layering_string(p.algebra().quiver(), s.layering));
}

void chart_report(Context& c, const Skeleton& s, json& out) {
  const ProjectiveCover& p = c.cover();
  const auto pres = chart_equations(p, s);
  const auto names = pres.var_names();
  json vars = json::array(), eqs = json::array();
  c.line("chart " + skeleton_string(p, s));
  for (std::size_t k = 0; k < pres.vars.size(); ++k) {
    vars.push_back({{"name", names[k]}, {"congruence", pres.var_description(p, k)}});
    c.line("  " + names[k] + ": " + pres.var_description(p, k));
  }
  for (const auto& e : pres.equations) {
    eqs.push_back(e.to_string(names));
    c.line("  equation: " + e.to_string(names) + " = 0");
  }
  c.line("  variables: " + std::to_string(pres.vars.size()) + ", equations: " + std::to_string(pres.equations.size()));
  out = skeleton_json(p, s);
  out["variables"] = vars;
  out["equations"] = eqs;
  if (c.doc.coords) {
    const auto pt = coords_to_point(p, pres, doc_coords(p.field(), *c.doc.coords));
    out["point"] = point_json(c, pt);
    c.line("  point: " + point_text(c, pt));
  }
}

void cmd_chart(Context& c) {
  const ProjectiveCover& p = c.cover();
  std::vector<Skeleton> sk;
  if (c.doc.skeleton) {
    Skeleton s = doc_skeleton(p, *c.doc.skeleton);
    if (!skeleton_valid(p, s)) throw Error(ErrorKind::InvalidArgument, "skeleton is not closed under initial subpaths");
    sk.push_back(s);
  } else if (c.doc.layering) {
    sk = enumerate_skeleta(p, *c.doc.layering);
  } else {
    sk = skeleta_with_dims(p, c.dimvec());
  }
  json charts = json::array();
  for (const auto& s : sk) {
    json j;
    chart_report(c, s, j);
    charts.push_back(j);
  }
  c.rep.result["charts"] = charts;
}

void cmd_point(Context& c) {
  const ProjectiveCover& p = c.cover();
  const auto pt = c.point();
  const DimVector d = c.doc.dimvec ? *c.doc.dimvec : pt.quotient_dims;
  const bool grass = is_grass_point(p, pt, d);
  json& r = c.rep.result;
  r["point"] = point_json(c, pt);
  r["is_grass_point"] = grass;
  c.line("point: " + point_text(c, pt));
  c.line("quotient dims: " + dim_string(pt.quotient_dims));
  c.line("is_grass_point " + dim_string(d) + ": " + (grass ? "true" : "false"));
  const Rep m = coker_rep(p, pt);
  const auto lay = radical_layering(m);
  r["layering"] = layering_string(p.algebra().quiver(), lay);
  c.line("layering of P/C: " + layering_string(p.algebra().quiver(), lay));
  if (grass) {
    const auto sk = skeleta_of_point(p, pt);
    json list = json::array();
    for (const auto& s : sk) list.push_back(skeleton_json(p, s));
    r["skeleta"] = list;
    c.line("skeleta: " + std::to_string(sk.size()));
    for (const auto& s : sk) c.line("  " + skeleton_string(p, s));
  }
  if (p.algebra().is_homogeneous_ideal()) {
    const bool h = is_homogeneous_point(p, pt);
    r["homogeneous"] = h;
    c.line("homogeneous: " + std::string(h ? "true" : "false"));
  }
  EndoSpace e(p);
  const auto w = endo_invariance_witness(p, e, pt);
  r["endo_invariant"] = !w.has_value();
  if (w) r["endo_witness"] = e.describe(p, *w);
  c.line("endo_invariant: " + std::string(w ? "false (witness " + e.describe(p, *w) + ")" : "true"));
  r["module"] = module_json(m);
  c.line("module P/C:");
  module_lines(c, "  ", m);
}

void cmd_orbit(Context& c) {
  const ProjectiveCover& p = c.cover();
  const auto pt = c.point();
  EndoSpace e(p);
  const auto o = orbit_dims(p, e, pt);
  json& r = c.rep.result;
  r["point"] = point_json(c, pt);
  r["aut"] = o.aut;
  r["unipotent"] = o.unipotent;
  r["graded"] = o.graded;
  r["end_dim"] = o.end_dim;
  r["unipotent_group_dim"] = o.unipotent_dim;
  r["graded_group_dim"] = o.graded_dim;
  r["interpretation"] = o.tangent_bound ? "tangent bound" : "orbit dimension";
  c.line("point: " + point_text(c, pt));
  c.line("aut: " + std::to_string(o.aut) + " (dim End(P) = " + std::to_string(o.end_dim) + ")");
  c.line("unipotent: " + std::to_string(o.unipotent) + " (dim Hom(P,JP) = " + std::to_string(o.unipotent_dim) + ")");
  c.line("graded: " + std::to_string(o.graded) + " (degree-0 endomorphisms: " + std::to_string(o.graded_dim) + ")");
  c.line(std::string("interpretation: ") + (o.tangent_bound ? "tangent bound" : "orbit dimension"));
}

Rep module_of(Context& c) {
  if (c.doc.module) return doc_module(c.alg, *c.doc.module);
  if (!c.doc.points.empty()) return coker_rep(c.cover(), c.point());
  throw Error(ErrorKind::TypeMismatch, "this command needs a module or point block");
}

Weight weight_of(Context& c, const Rep& m) {
  if (c.doc.weight) return *c.doc.weight;
  const DimVector top = top_dims(m);
  if (total(top) == 1) {
    const auto i = static_cast<int>(std::find(top.begin(), top.end(), 1) - top.begin());
    return local_top_weight(i, m.dims());
  }
  throw Error(ErrorKind::TypeMismatch, "this command needs a weight block");
}

void cmd_stability(Context& c) {
  const Rep m = module_of(c);
  if (!rep_validate(m)) throw Error(ErrorKind::InvalidArgument, "module does not satisfy the relations");
  const Weight w = weight_of(c, m);
  const Stability s = classify_stability(m, w, c.limits());
  json& r = c.rep.result;
  r["weight"] = w;
  r["theta_d"] = theta_of(w, m.dims());
  r["verdict"] = stability_name(s);
  std::vector<std::string> ws;
  for (long x : w) ws.push_back(std::to_string(x));
  c.line("weight: (" + joined(ws, ",") + ")");
  c.line("theta(d): " + std::to_string(theta_of(w, m.dims())));
  c.line(std::string("verdict: ") + stability_name(s));
}

void cmd_stable_factors(Context& c) {
  const Rep m = module_of(c);
  const Weight w = weight_of(c, m);
  const auto fs = stable_factors(m, w, c.limits());
  json list = json::array();
  c.line("factors: " + std::to_string(fs.size()));
  for (const auto& f : fs) {
    list.push_back(module_json(f));
    c.line("factor:");
    module_lines(c, "  ", f);
  }
  c.rep.result["weight"] = w;
  c.rep.result["factors"] = list;
}

void cmd_maxdeg(Context& c) {
  const ProjectiveCover& p = c.cover();
  json& r = c.rep.result;
  if (!c.opts.have_candidates && !c.doc.points.empty()) {
    const auto pt = c.point();
    const auto t = no_proper_topstable_deg(p, pt, c.opts.seed);
    r["point"] = point_json(c, pt);
    r["no_proper_topstable_degeneration"] = tri_name(t.result);
    r["reason"] = t.reason;
    r["decomposition"] = decomposition_kind_name(t.decomposition.kind);
    json pieces = json::array();
    for (const auto& piece : t.decomposition.pieces) pieces.push_back(dims_json(piece.dims()));
    r["summand_dims"] = pieces;
    r["hom_P_JM"] = t.hom_p_jm;
    r["hom_M_JM"] = t.hom_m_jm;
    c.line("point: " + point_text(c, pt));
    c.line(std::string("no proper top-stable degeneration: ") + tri_name(t.result));
    c.line("reason: " + t.reason);
    std::vector<std::string> ds;
    for (const auto& piece : t.decomposition.pieces) ds.push_back(dim_string(piece.dims()));
    c.line(std::string("decomposition: ") + decomposition_kind_name(t.decomposition.kind) + " [" + joined(ds) + "]");
    return;
  }
  std::optional<std::vector<SubmodulePoint>> cands;
  if (c.opts.have_candidates) {
    cands.emplace();
    for (const auto& g : c.opts.candidates) cands->push_back(doc_point(p, g));
  }
  const DimVector d = c.doc.dimvec ? *c.doc.dimvec
                                   : (cands && !cands->empty() ? cands->front().quotient_dims : c.dimvec());
  std::optional<SubmodulePoint> src;
  if (!c.doc.points.empty()) src = c.point();
  if (!c.opts.have_candidates && !c.field_finite())
    throw Error(ErrorKind::SearchTooLarge, "a sweep needs a finite field; supply --candidates");
  TopdegOptions o;
  o.seed = c.opts.seed;
  o.sweep = c.limits();
  const auto res = maximal_topdeg_candidates(p, d, src, cands, o);
  json list = json::array();
  c.line("examined: " + std::to_string(res.examined) + (res.complete ? " (complete sweep)" : ""));
  c.line("survivors: " + std::to_string(res.survivors.size()));
  for (const auto& s : res.survivors) {
    json j = point_json(c, s.point);
    j["certificate"] = s.certificate;
    if (s.degeneration) j["degeneration"] = *s.degeneration;
    list.push_back(j);
    c.line("  " + point_text(c, s.point));
    c.line("    certificate: " + s.certificate);
    if (s.degeneration) c.line("    degeneration: " + *s.degeneration);
  }
  r["dimvec"] = dims_json(d);
  r["examined"] = res.examined;
  r["complete"] = res.complete;
  r["survivors"] = list;
}

void cmd_limit(Context& c) {
  const ProjectiveCover& p = c.cover();
  if (!c.doc.endo) throw Error(ErrorKind::TypeMismatch, "this command needs an endo block");
  const auto pt = c.point();
  const Matrix h = doc_endo(p, *c.doc.endo);
  const auto lim = one_param_limit(p, pt, h);
  c.rep.result["point"] = point_json(c, pt);
  c.rep.result["limit"] = point_json(c, lim);
  c.rep.result["limit_layering"] = layering_string(p.algebra().quiver(), radical_layering(coker_rep(p, lim)));
  c.line("point: " + point_text(c, pt));
  c.line("limit: " + point_text(c, lim));
  c.line("layering of P/limit: " + layering_string(p.algebra().quiver(), radical_layering(coker_rep(p, lim))));
}

void cmd_moduli(Context& c) {
  const ProjectiveCover& p = c.cover();
  json& r = c.rep.result;
  if (c.doc.total_dim && !c.doc.dimvec) {
    json strata = json::array();
    for (const auto& s : strata_by_total(p, *c.doc.total_dim)) {
      json charts = json::array();
      std::string desc;
      for (std::size_t k = 0; k < s.skeleta.size(); ++k) {
        charts.push_back({{"skeleton", skeleton_json(p, s.skeleta[k])["paths"]},
                          {"variables", s.chart_vars[k]},
                          {"equations", s.chart_equations[k]}});
        desc += (k ? ", " : "") + std::to_string(s.chart_vars[k]) + " vars/" + std::to_string(s.chart_equations[k]) + " eqs";
      }
      strata.push_back({{"dimvec", dims_json(s.d)}, {"charts", charts}});
      c.line("stratum " + dim_string(s.d) + ": " + std::to_string(s.skeleta.size()) + " chart(s): " + desc);
    }
    r["total"] = *c.doc.total_dim;
    r["strata"] = strata;
    return;
  }
  ModuliOptions o;
  o.seed = c.opts.seed;
  o.sweep = c.limits();
  const auto v = moduli_report(p, c.dimvec(), o);
  r["dimvec"] = dims_json(c.dimvec());
  r["verdict"] = verdict_name(v.kind);
  r["certificate"] = v.certificate;
  r["points_checked"] = v.points_checked;
  r["exhaustive"] = v.exhaustive;
  if (v.witness) r["witness"] = point_json(c, *v.witness);
  r["notes"] = v.notes;
  c.line(std::string("verdict: ") + verdict_name(v.kind));
  c.line("certificate: " + v.certificate);
  if (v.witness) c.line("witness: " + point_text(c, *v.witness));
  for (const auto& n : v.notes) c.line("note: " + n);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"algebra-info", "skeleta",  "chart",          "point",
                                              "orbit",        "stability", "stable-factors", "maxdeg-test",
                                              "limit",        "moduli-report"};
  return names;
}

Report run_command(const InputDocument& doc, const std::string& command, const CommandOptions& opts) {
  static const std::map<std::string, std::function<void(Context&)>> table{
      {"algebra-info", cmd_algebra_info}, {"skeleta", cmd_skeleta},     {"chart", cmd_chart},
      {"point", cmd_point},               {"orbit", cmd_orbit},         {"stability", cmd_stability},
      {"stable-factors", cmd_stable_factors}, {"maxdeg-test", cmd_maxdeg}, {"limit", cmd_limit},
      {"moduli-report", cmd_moduli}};
  auto it = table.find(command);
  if (it == table.end()) throw Error(ErrorKind::InvalidArgument, "unknown command '" + command + "'");
  Report rep;
  rep.command = command;
  rep.seed = opts.seed;
  Context c{doc, opts, doc_algebra(doc, opts.field), std::nullopt, rep};
  rep.result = json::object();
  it->second(c);
  return rep;
}

std::string render_text(const Report& r) {
  std::string s = "qmod " + std::string(kVersion) + " " + r.command + " (seed " + std::to_string(r.seed) + ")\n";
  for (const auto& l : r.lines) s += l + "\n";
  return s;
}

std::string render_json(const Report& r) {
  json j;
  j["tool"] = "qmod";
  j["version"] = kVersion;
  j["command"] = r.command;
  j["seed"] = r.seed;
  j["result"] = r.result;
  j["text"] = r.lines;
  return j.dump(2) + "\n";
}

std::vector<std::vector<DslVector>> parse_candidates(const InputDocument& doc, const std::string& text) {
  InputDocument head;
  head.vertices = doc.vertices;
  head.arrows = doc.arrows;
  head.field = doc.field;
  head.max_len = doc.max_len;
  head.relations = doc.relations;
  return parse_input(render_document(head) + text).points;
}

}  // namespace qmod
