#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "reedylab/bifib.hpp"
#include "reedylab/decomposition.hpp"
#include "reedylab/zoo.hpp"

namespace rlab::cli {

namespace {

const std::vector<std::string> kCommands = {"check-reedy", "standard-modules", "irreducibles", "decompose",
                                            "spans",       "glue",             "hovey",        "report"};

json objects_json(const ReedyCat& rc) {
  json a = json::array();
  for (int x = 0; x < static_cast<int>(rc.size()); ++x)
    a.push_back({{"name", rc.cat()->object(x)}, {"degree", rc.degree(x)}});
  return a;
}

Check check(std::string name, bool pass, std::vector<std::string> w = {}) {
  return {std::move(name), pass, std::move(w)};
}

void finish(Report& r) {
  bool ok = true;
  for (const auto& c : r.checks) ok = ok && c.pass;
  r.status = ok ? "PASS" : "FAIL";
}

// ---- spec files ----

Scalar scalar_of(const json& v, Field f) {
  if (v.is_number_integer()) return Scalar(f, v.get<long>());
  if (v.is_string()) {
    mpq_class q;
    try {
      q = mpq_class(v.get<std::string>());
    } catch (const std::exception&) {
      throw InputError("bad scalar: " + v.dump());
    }
    q.canonicalize();
    if (q.get_den() == 0) throw InputError("bad scalar: " + v.dump());
    return Scalar(f, q);
  }
  throw InputError("bad scalar: " + v.dump());
}

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string need_string(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_string()) throw InputError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

Instance instance_from_json(const json& doc, const std::optional<std::string>& field) {
  if (!doc.is_object()) throw InputError("spec: top level must be an object");
  Field f;
  try {
    f = Field::parse(field ? *field : doc.value("field", std::string("Q")));
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  const json& objs = need(doc, "objects", "spec");
  if (!objs.is_array() || objs.empty()) throw InputError("spec: \"objects\" must be a nonempty array");
  const int n = static_cast<int>(objs.size());
  std::vector<std::string> names;
  std::vector<int> degree;
  std::map<std::string, int> obj_id;
  // label -> (x, y, index)
  struct Where {
    int x, y, i;
  };
  std::map<std::string, Where> where;
  std::vector<std::vector<std::vector<std::string>>> labels(n, std::vector<std::vector<std::string>>(n));
  for (int x = 0; x < n; ++x) {
    const json& o = objs[x];
    const std::string ctx = "objects[" + std::to_string(x) + "]";
    names.push_back(need_string(o, "name", ctx));
    if (!obj_id.emplace(names.back(), x).second) throw InputError(ctx + ": duplicate object " + names.back());
    const json& d = need(o, "degree", ctx);
    if (!d.is_number_integer()) throw InputError(ctx + ": degree must be an integer");
    degree.push_back(d.get<int>());
    std::string id = o.value("identity", "1_" + names.back());
    labels[x][x].push_back(id);
    if (!where.emplace(id, Where{x, x, 0}).second) throw InputError(ctx + ": duplicate label " + id);
  }
  auto object = [&](const json& j, const char* key, const std::string& ctx) {
    std::string s = need_string(j, key, ctx);
    auto it = obj_id.find(s);
    if (it == obj_id.end()) throw InputError(ctx + ": unknown object " + s);
    return it->second;
  };
  auto label = [&](const std::string& s, const std::string& ctx) {
    auto it = where.find(s);
    if (it == where.end()) throw InputError(ctx + ": unknown label " + s);
    return it->second;
  };
  if (doc.contains("morphisms")) {
    const json& ms = doc.at("morphisms");
    if (!ms.is_array()) throw InputError("spec: \"morphisms\" must be an array");
    for (std::size_t k = 0; k < ms.size(); ++k) {
      const std::string ctx = "morphisms[" + std::to_string(k) + "]";
      const int x = object(ms[k], "from", ctx), y = object(ms[k], "to", ctx);
      const std::string l = need_string(ms[k], "label", ctx);
      const int i = static_cast<int>(labels[x][y].size());
      if (!where.emplace(l, Where{x, y, i}).second) throw InputError(ctx + ": duplicate label " + l);
      labels[x][y].push_back(l);
    }
  }
  // comp[(g, f)] = g o f
  std::map<std::pair<std::string, std::string>, std::string> comp;
  if (doc.contains("composition")) {
    const json& cs = doc.at("composition");
    if (!cs.is_array()) throw InputError("spec: \"composition\" must be an array");
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const std::string ctx = "composition[" + std::to_string(k) + "]";
      const std::string g = need_string(cs[k], "g", ctx), fl = need_string(cs[k], "f", ctx),
                        r = need_string(cs[k], "result", ctx);
      Where wg = label(g, ctx), wf = label(fl, ctx), wr = label(r, ctx);
      if (wf.y != wg.x) throw InputError(ctx + ": " + g + " o " + fl + " is not composable");
      if (wr.x != wf.x || wr.y != wg.y) throw InputError(ctx + ": " + r + " has the wrong source or target");
      comp[{g, fl}] = r;
    }
  }
  std::vector<int> ids(n, 0);
  // Totality, with identities filled in.
  std::vector<std::vector<std::vector<std::vector<int>>>> table(
      n, std::vector<std::vector<std::vector<int>>>(n, std::vector<std::vector<int>>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        auto& t = table[x][y][z];
        const auto &fs = labels[x][y], &gs = labels[y][z];
        t.assign(gs.size() * fs.size(), 0);
        for (std::size_t gi = 0; gi < gs.size(); ++gi)
          for (std::size_t fi = 0; fi < fs.size(); ++fi) {
            int r;
            if (y == z && gi == 0) {
              r = static_cast<int>(fi);
            } else if (x == y && fi == 0) {
              r = static_cast<int>(gi);
            } else {
              auto it = comp.find({gs[gi], fs[fi]});
              if (it == comp.end())
                throw InputError("spec: composition table not total: missing " + gs[gi] + " o " + fs[fi]);
              r = where.at(it->second).i;
            }
            t[gi * fs.size() + fi] = r;
          }
      }
  ConcreteCat c(names, labels, ids, [&table, &labels](int x, int y, int z, int g, int fi) {
    return table[x][y][z][static_cast<std::size_t>(g) * labels[x][y].size() + static_cast<std::size_t>(fi)];
  });
  LinCatPtr l;
  try {
    l = linearize(c, f);
  } catch (const AxiomViolation& e) {
    throw InputError(std::string("spec: ") + e.what());
  }

  // plus / minus: labels or {"from", "to", "vector"}; identities are in both.
  ReedyStructure rs;
  rs.degree = degree;
  auto read_side = [&](const char* key) {
    std::vector<std::vector<std::vector<Vec>>> vs(n, std::vector<std::vector<Vec>>(n));
    for (int x = 0; x < n; ++x) vs[x][x].push_back(l->basis_vec(x, x, 0));
    if (doc.contains(key)) {
      const json& side = doc.at(key);
      if (!side.is_array()) throw InputError(std::string("spec: \"") + key + "\" must be an array");
      for (std::size_t k = 0; k < side.size(); ++k) {
        const std::string ctx = std::string(key) + "[" + std::to_string(k) + "]";
        if (side[k].is_string()) {
          Where w = label(side[k].get<std::string>(), ctx);
          vs[w.x][w.y].push_back(l->basis_vec(w.x, w.y, w.i));
          continue;
        }
        const int x = object(side[k], "from", ctx), y = object(side[k], "to", ctx);
        const json& v = need(side[k], "vector", ctx);
        if (!v.is_array() || v.size() != l->dim(x, y)) throw InputError(ctx + ": vector has the wrong length");
        Vec vec;
        for (const auto& s : v) vec.push_back(scalar_of(s, f));
        vs[x][y].push_back(vec);
      }
    }
    std::vector<std::vector<Subspace>> out(n, std::vector<Subspace>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) out[x][y] = Subspace::span(l->dim(x, y), f, vs[x][y]);
    return out;
  };
  rs.plus = read_side("plus");
  rs.minus = read_side("minus");
  Instance inst;
  inst.name = doc.value("name", std::string("spec"));
  try {
    inst.rc = std::make_shared<const ReedyCat>(l, rs);
  } catch (const std::exception& e) {
    throw InputError(std::string("spec: ") + e.what());
  }
  inst.idempotents.assign(n, std::nullopt);
  if (doc.contains("idempotents")) {
    const json& id = doc.at("idempotents");
    if (!id.is_object()) throw InputError("spec: \"idempotents\" must be an object keyed by object name");
    for (const auto& [obj, list] : id.items()) {
      auto it = obj_id.find(obj);
      if (it == obj_id.end()) throw InputError("idempotents: unknown object " + obj);
      const std::size_t dim = inst.rc->local(it->second).n;
      std::vector<Vec> es;
      for (const auto& e : list) {
        if (!e.is_array() || e.size() != dim) throw InputError("idempotents." + obj + ": wrong length");
        Vec v;
        for (const auto& s : e) v.push_back(scalar_of(s, f));
        es.push_back(v);
      }
      inst.idempotents[it->second] = es;
    }
  }
  return inst;
}

Instance load_instance(const Options& o) {
  if (o.zoo.empty() == o.spec.empty()) throw InputError("give exactly one of --zoo and --spec");
  if (!o.spec.empty()) {
    std::ifstream in(o.spec);
    if (!in) throw InputError("cannot read " + o.spec);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("spec: ") + e.what());
    }
    return instance_from_json(doc, o.field);
  }
  Field f;
  try {
    f = Field::parse(o.field.value_or("Q"));
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  try {
    ZooInstance z = zoo(o.zoo, f);
    Instance inst;
    inst.name = z.name;
    inst.rc = z.rc;
    inst.base = z.base;
    inst.idempotents.assign(z.rc->size(), std::nullopt);
    return inst;
  } catch (const ParamOutOfRange& e) {
    throw InputError(std::string("PARAM_OUT_OF_RANGE: ") + e.what());
  } catch (const UnknownInstance& e) {
    throw InputError(e.what());
  }
}

namespace {

void check_reedy_cmd(const Instance& in, Report& r) {
  ReedyReport rr = check_reedy(*in.rc);
  r.checks.push_back(check("axiom (a): degrees and subcategories", rr.axiom_a && rr.subcategories));
  r.checks.push_back(check("axiom (b): plus and minus meet in the local algebra", rr.axiom_b));
  r.checks.push_back(check("axiom (c): rho is an isomorphism", rr.axiom_c));
  r.checks.push_back(check("axiom (d): degree order", rr.axiom_d));
  for (auto& c : r.checks)
    if (!c.pass) c.witnesses = rr.violations;
  json pairs = json::array();
  for (const auto& p : rr.pairs) {
    json blocks = json::array();
    for (const auto& [z, d] : p.block_dims) blocks.push_back({in.rc->cat()->object(z), d});
    pairs.push_back({{"x", in.rc->cat()->object(p.x)},
                     {"y", in.rc->cat()->object(p.y)},
                     {"hom_dim", p.hom_dim},
                     {"domain_dim", p.domain_dim},
                     {"rank", p.rank},
                     {"blocks", blocks}});
  }
  r.data["objects"] = objects_json(*in.rc);
  r.data["pairs"] = pairs;
}

void standard_modules_cmd(const Instance& in, Report& r) {
  const ReedyCat& rc = *in.rc;
  std::size_t run = 0;
  for (Side side : {Side::Left, Side::Right}) {
    const std::string tag = side == Side::Left ? "left" : "right";
    StandardSuiteReport s = check_standard_modules(rc, side);
    if (!s.hypothesis) {
      r.data[tag] = {{"skipped", "projectivity hypothesis fails"}};
      continue;
    }
    ++run;
    r.checks.push_back(check(tag + ": dim End = dim A_x", s.end_dims, s.witnesses));
    r.checks.push_back(check(tag + ": End is the local algebra", s.ring_map));
    r.checks.push_back(check(tag + ": Hom vanishing", s.hom_vanishing));
    r.checks.push_back(check(tag + ": Ext^1 vanishing", s.ext_vanishing));
    r.data[tag] = {{"hom", s.hom}, {"ext", s.ext}};
  }
  r.data["objects"] = objects_json(rc);
  if (!run) throw Unsupported("projectivity hypotheses fail on both sides");
}

void irreducibles_cmd(const Instance& in, Report& r) {
  IrreducibleCount c;
  try {
    c = count_irreducibles(*in.rc, in.idempotents);
  } catch (const NotSemisimpleUnsupported& e) {
    throw Unsupported(e.what());
  }
  json cc = json::array();
  for (const auto& k : c.conjugacy_classes) cc.push_back(k ? json(*k) : json(nullptr));
  r.data["per_object"] = c.per_object;
  r.data["total"] = c.total;
  r.data["conjugacy_classes"] = cc;
  r.data["objects"] = objects_json(*in.rc);
  r.checks.push_back(check("irreducibles counted", true));
}

json verdict_json(const ReedyCat& rc, const DecompositionVerdict& v) {
  json conds = json::array();
  for (const auto& c : v.conditions)
    conds.push_back({{"name", c.name}, {"pass", c.pass}, {"route", c.route}, {"witnesses", c.witnesses}});
  json d = {{"criterion", to_string(v.criterion)},
            {"dual", v.dual},
            {"conditions", conds},
            {"orthogonality", v.orthogonality},
            {"end_dims", v.end_dims},
            {"local_dims", v.local_dims},
            {"objects", objects_json(rc)}};
  if (!v.idempotents.empty()) {
    json e = json::array();
    for (const auto& i : v.idempotents) e.push_back(i.has_value());
    d["idempotent_found"] = e;
  }
  return d;
}

void push_verdict(const DecompositionVerdict& v, Report& r) {
  for (const auto& c : v.conditions) r.checks.push_back(check(c.name, c.pass, c.witnesses));
  r.checks.push_back(check("verdict", v.pass()));
}

void decompose_cmd(const Instance& in, const Options& o, Report& r) {
  if (o.criterion == "c") {
    auto v = check_theorem_C(*in.rc);
    push_verdict(v, r);
    r.data = verdict_json(*in.rc, v);
  } else if (o.criterion == "d") {
    auto v = o.dual ? check_theorem_D_dual(*in.rc) : check_theorem_D(*in.rc);
    push_verdict(v, r);
    r.data = verdict_json(*in.rc, v);
  } else if (o.criterion == "e") {
    if (!in.base) throw InputError("criterion e needs a span instance (span_inj, span_poset)");
    auto v = check_theorem_E(*in.base, in.rc->field());
    const auto& c = v.conditions;
    r.checks.push_back(check("EI", c.ei));
    r.checks.push_back(check("pullbacks", c.pullbacks));
    r.checks.push_back(check("locally finite", c.locally_finite));
    r.checks.push_back(check("automorphism group orders invertible", c.groups_invertible, c.witnesses));
    r.checks.push_back(check("all morphisms monic", c.all_mono));
    r.data["group_orders"] = c.group_orders;
    if (v.reedy) r.checks.push_back(check("span category is Reedy", v.reedy->pass(), v.reedy->violations));
    if (v.decomposition) {
      push_verdict(*v.decomposition, r);
      r.data["decomposition"] = verdict_json(*v.rc, *v.decomposition);
    }
  } else {
    throw InputError("unknown criterion " + o.criterion);
  }
}

void spans_cmd(const Instance& in, Report& r) {
  if (!in.base) throw InputError("spans needs a span instance (span_inj, span_poset)");
  const EICat& e = *in.base;
  auto c = check_theorem_E_conditions(e, in.rc->field());
  r.checks.push_back(check("EI", c.ei));
  r.checks.push_back(check("pullbacks", c.pullbacks, c.witnesses));
  r.checks.push_back(check("automorphism group orders invertible", c.groups_invertible));
  r.checks.push_back(check("all morphisms monic", c.all_mono));
  ReedyReport rr = check_reedy(*in.rc);
  r.checks.push_back(check("span category is Reedy", rr.pass(), rr.violations));
  const int n = static_cast<int>(in.rc->size());
  std::vector<std::vector<std::size_t>> homs(n, std::vector<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) homs[x][y] = in.rc->cat()->dim(x, y);
  r.data["hom_dims"] = homs;
  r.data["degrees"] = artinian_degree(e);
  r.data["group_orders"] = c.group_orders;
  r.data["free_action"] = c.free_action;
  r.data["objects"] = objects_json(*in.rc);
}

ClassPair pair_of(const std::string& name, std::size_t n) {
  if (name == "proj_all") return proj_all_pair(n);
  if (name == "all_inj") return all_inj_pair(n);
  if (name == "all_all") return all_all_pair(n);
  throw InputError("unknown pair " + name + " (proj_all, all_inj, all_all)");
}

json cotorsion_json(const CotorsionReport& c) {
  return {{"pair", c.pair},
          {"battery", c.battery},
          {"factorizations", c.factorizations},
          {"valid", c.valid},
          {"ext_pairs", c.ext_pairs},
          {"ext_violations", c.ext_violations},
          {"orthogonality", c.orthogonality},
          {"squares", c.squares},
          {"lifted", c.lifted},
          {"in_phi", c.in_phi},
          {"in_psi", c.in_psi}};
}

void push_cotorsion(const std::string& prefix, const CotorsionReport& c, Report& r) {
  r.checks.push_back(check(prefix + "approximation sequences", c.valid == c.factorizations, c.witnesses));
  r.checks.push_back(check(prefix + "Ext^1 orthogonality (SAMPLED)", c.ext_violations == 0));
  r.checks.push_back(check(prefix + "lifting squares", c.lifted == c.squares));
}

template <class F>
auto hypothesis_guard(F&& f) {
  try {
    return f();
  } catch (const std::domain_error& e) {
    throw Unsupported(e.what());
  } catch (const OracleMissing& e) {
    throw InputError(e.what());
  }
}

void glue_cmd(const Instance& in, const Options& o, Report& r) {
  ClassPair p = pair_of(o.pairs, in.rc->size());
  auto c = hypothesis_guard([&] { return cotorsion_glue_check(*in.rc, p, o.battery, o.seed); });
  push_cotorsion("", c, r);
  r.data = cotorsion_json(c);
}

void hovey_cmd(const Instance& in, const Options& o, Report& r) {
  HoveyTriple t;
  if (o.triples == "stable") t = stable_triple(in.rc->size());
  else if (o.triples == "trivial") t = trivial_triple(in.rc->size());
  else throw InputError("unknown triple " + o.triples + " (stable, trivial)");
  auto h = hypothesis_guard([&] { return hovey_glue_check(*in.rc, t, o.battery, o.seed); });
  r.checks.push_back(check("cocompatible (Q cap W)", h.cocompatible.pass, h.cocompatible.witnesses));
  r.checks.push_back(check("compatible (W cap R)", h.compatible.pass, h.compatible.witnesses));
  push_cotorsion("trivial cofibrations: ", h.cof, r);
  push_cotorsion("trivial fibrations: ", h.fib, r);
  r.checks.push_back(check("Phi(Q cap W) = Phi(Q) cap Mod_W", h.phi_identity));
  r.checks.push_back(check("Psi(W cap R) = Mod_W cap Psi(R)", h.psi_identity));
  r.checks.push_back(check("Mod_W thick", h.thick_violations == 0));
  if (h.hereditary_closure) r.checks.push_back(check("hereditary closure", *h.hereditary_closure));
  for (auto& c : r.checks)
    if (!c.pass && c.witnesses.empty()) c.witnesses = h.witnesses;
  r.data = {{"triple", t.name},
            {"cof", cotorsion_json(h.cof)},
            {"fib", cotorsion_json(h.fib)},
            {"sequences", h.sequences},
            {"probes", h.probes},
            {"probes_in_w", h.probes_in_w},
            {"compat_samples", h.cocompatible.samples + h.compatible.samples}};
}

Report blank(const Options& o, const Instance& in) {
  Report r;
  r.command = o.command;
  r.instance = in.name;
  r.field = in.rc->field().str();
  r.seed = o.seed;
  return r;
}

}  // namespace

Report run_command(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  Instance in = load_instance(o);
  Report r = blank(o, in);
  if (o.command == "check-reedy") check_reedy_cmd(in, r);
  else if (o.command == "standard-modules") standard_modules_cmd(in, r);
  else if (o.command == "irreducibles") irreducibles_cmd(in, r);
  else if (o.command == "decompose") decompose_cmd(in, o, r);
  else if (o.command == "spans") spans_cmd(in, r);
  else if (o.command == "glue") glue_cmd(in, o, r);
  else if (o.command == "hovey") hovey_cmd(in, o, r);
  else if (o.command == "report") {
    // Every applicable section; unsupported ones are recorded and skipped.
    std::vector<std::pair<std::string, std::string>> sections = {
        {"check-reedy", ""}, {"standard-modules", ""}, {"irreducibles", ""}, {"decompose", "c"}, {"decompose", "d"}};
    if (in.base) sections.push_back({"decompose", "e"});
    for (const auto& [cmd, crit] : sections) {
      Options so = o;
      so.command = cmd;
      so.criterion = crit.empty() ? o.criterion : crit;
      const std::string key = crit.empty() ? cmd : cmd + ":" + crit;
      Report sub = blank(so, in);
      try {
        Report full = run_command(so);
        sub = std::move(full);
      } catch (const Unsupported& e) {
        sub.status = "UNSUPPORTED";
        sub.data = {{"reason", e.what()}};
      }
      json sj = to_json(sub);
      sj.erase("wall_clock_ms");
      r.data[key] = sj;
      if (sub.status != "UNSUPPORTED") r.checks.push_back(check(key, sub.pass()));
    }
  } else {
    throw InputError("unknown command " + o.command);
  }
  finish(r);
  r.wall_clock_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witnesses", c.witnesses}});
  return {{"format", r.format},   {"command", r.command}, {"instance", r.instance},
          {"field", r.field},     {"seed", r.seed},       {"status", r.status},
          {"checks", checks},     {"data", r.data},       {"wall_clock_ms", r.wall_clock_ms}};
}

Report report_from_json(const json& j) {
  Report r;
  r.format = j.at("format").get<int>();
  if (r.format != 1) throw InputError("unsupported report format " + std::to_string(r.format));
  r.command = j.at("command").get<std::string>();
  r.instance = j.at("instance").get<std::string>();
  r.field = j.at("field").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.status = j.at("status").get<std::string>();
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                        c.at("witnesses").get<std::vector<std::string>>()});
  r.data = j.at("data");
  r.wall_clock_ms = j.at("wall_clock_ms").get<double>();
  return r;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.command << " on " << r.instance << " over " << r.field << " (seed " << r.seed << ")\n";
  for (const auto& c : r.checks) {
    os << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
    for (const auto& w : c.witnesses) os << "       " << w << "\n";
  }
  for (const auto& [k, v] : r.data.items()) {
    if (v.is_object() && v.contains("status")) os << "  " << k << ": " << v.at("status").get<std::string>() << "\n";
    else os << "  " << k << ": " << v.dump() << "\n";
  }
  os << r.status << "\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::string field;
  CLI::App app{"Checks for finite generalized Reedy categories and their module categories", "reedy-lab"};
  app.add_option("command", o.command, "check-reedy | standard-modules | irreducibles | decompose | spans | glue | "
                                       "hovey | report")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("--zoo", o.zoo, "built-in instance, e.g. fin_all:2");
  app.add_option("--spec", o.spec, "category spec file (JSON)");
  auto* fopt = app.add_option("--field", field, "Q or Fp:<p>");
  app.add_option("--seed", o.seed, "battery seed");
  app.add_option("--out", o.out, "write the JSON report to this path");
  app.add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--criterion", o.criterion, "decompose: c, d or e")->check(CLI::IsMember({"c", "d", "e"}));
  app.add_flag("--dual", o.dual, "decompose -c d: use the dual criterion");
  app.add_option("--pairs", o.pairs, "glue: proj_all, all_inj or all_all");
  app.add_option("--triples", o.triples, "hovey: stable or trivial");
  app.add_option("--battery", o.battery, "glue/hovey: number of random modules");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }
  if (fopt->count()) o.field = field;

  Report r;
  int code;
  try {
    r = run_command(o);
    code = r.pass() ? kPass : kFail;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Unsupported& e) {
    r.command = o.command;
    r.instance = o.zoo.empty() ? o.spec : o.zoo;
    r.field = o.field.value_or("Q");
    r.seed = o.seed;
    r.status = "UNSUPPORTED";
    r.data = {{"reason", e.what()}};
    err << "unsupported: " << e.what() << "\n";
    code = kUnsupported;
  }
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      err << "cannot write " << o.out << "\n";
      return kInputError;
    }
    f << to_json(r).dump(2) << "\n";
  }
  if (o.format == "json") out << to_json(r).dump(2) << "\n";
  else out << to_text(r);
  return code;
}

}  // namespace rlab::cli
