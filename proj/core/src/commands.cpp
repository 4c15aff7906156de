#include "repkit/commands.hpp"

#include "repkit/errors.hpp"
#include "repkit/presets.hpp"
#include "repkit/qh.hpp"
#include "repkit/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace repkit {

namespace {

struct CommonOpts {
  std::string algebra_path;
  std::string preset_name;
  int max_dim = 60;
  int max_modules = 500;
  int max_power = 256;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--algebra", o.algebra_path, "algebra description file (JSON)");
  cmd->add_option("--preset", o.preset_name, "built-in algebra name");
  cmd->add_option("--max-dim", o.max_dim, "enumeration dimension bound");
  cmd->add_option("--max-modules", o.max_modules, "enumeration count bound");
  cmd->add_option("--max-power", o.max_power, "radical power bound");
  cmd->add_option("--format", o.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
}

std::pair<AlgebraFile, AlgebraPtr> load_algebra(const CommonOpts& o) {
  if (o.algebra_path.empty() == o.preset_name.empty())
    throw ValidationError("provide exactly one of --algebra or --preset");
  AlgebraFile f;
  if (!o.preset_name.empty()) {
    f = preset(o.preset_name);
  } else {
    std::ifstream in(o.algebra_path);
    if (!in) throw ValidationError("cannot open '" + o.algebra_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    f = parse_algebra(ss.str());
  }
  return {f, build_algebra(f)};
}

EnumerationLimits limits_of(const CommonOpts& o) {
  EnumerationLimits l;
  l.max_dim = o.max_dim;
  l.max_modules = o.max_modules;
  return l;
}

int resolve_object(const IndexedCategory& c, const std::string& name) {
  for (int i = 0; i < c.size(); ++i)
    if (object_name(c, i) == name) return i;
  try {
    std::size_t pos = 0;
    int idx = std::stoi(name, &pos);
    if (pos == name.size() && idx >= 0 && idx < c.size()) return idx;
  } catch (...) {
  }
  throw ValidationError("unknown module '" + name + "'");
}

void report_check(Report& rep, const std::string& label, const CheckReport& r) {
  for (const auto& n : r.notes) rep.line(label + ": " + n);
  for (const auto& f : r.failures) rep.line(label + ": FAIL: " + f);
  rep.line(label + ": " + (r.pass ? "PASS" : "FAIL"));
  if (!r.pass) rep.status = "FAIL";
}

// Shared pipeline pieces -----------------------------------------------------

struct ModCategory {
  EnumerationResult en;
  IndexedCategory cat;
};

// Enumerates mod A; on UNDETERMINED fills the report and returns nullopt.
std::optional<ModCategory> enumerate_or_report(AlgebraPtr a, const CommonOpts& o,
                                               Report& rep) {
  ModCategory mc;
  mc.en = enumerate_indecomposables(a, limits_of(o));
  if (mc.en.status == EnumerationResult::Status::Undetermined) {
    rep.status = "UNDETERMINED";
    rep.add("reason", mc.en.reason);
    return std::nullopt;
  }
  mc.cat = make_category(a, mc.en.objects, true);
  return mc;
}

void run_basis(const AlgebraFile& f, AlgebraPtr a, Report& rep) {
  rep.add("dimension", a->dim());
  const Quiver& q = a->quiver();
  for (int u = 0; u < q.num_vertices(); ++u)
    for (int v = 0; v < q.num_vertices(); ++v) {
      const auto& paths = a->basis_paths(u, v);
      if (paths.empty()) continue;
      std::string l = q.vertex_name(u) + " -> " + q.vertex_name(v) + ":";
      for (const auto& p : paths) l += " " + path_to_string(q, p);
      rep.line(l);
    }
  (void)f;
}

void run_indec(AlgebraPtr a, const CommonOpts& o, Report& rep) {
  auto mc = enumerate_or_report(a, o, rep);
  if (!mc) return;
  rep.status = "FINITE";
  rep.add("modules", static_cast<long long>(mc->cat.size()));
  for (int i = 0; i < mc->cat.size(); ++i)
    rep.line(object_name(mc->cat, i) + " dim " +
             std::to_string(mc->cat.objects[i].total_dim()));
}

void run_radical(AlgebraPtr a, const CommonOpts& o, const std::string& pair_m,
                 const std::string& pair_n, int power, Report& rep) {
  auto mc = enumerate_or_report(a, o, rep);
  if (!mc) return;
  RadTable t = rad_power_table(mc->cat, o.max_power);
  rep.add("stabilization_index", t.stabilization_index);
  bool inf_zero = true;
  for (const auto& row : t.rad_infinity())
    for (const auto& s : row) inf_zero = inf_zero && s.is_zero();
  rep.add("rad_inf_zero", inf_zero ? "true" : "false");
  if (!pair_m.empty()) {
    int i = resolve_object(mc->cat, pair_m);
    int j = resolve_object(mc->cat, pair_n);
    rep.line("dim rad^" + std::to_string(power) + "(" + object_name(mc->cat, i) +
             ", " + object_name(mc->cat, j) + ") = " +
             std::to_string(t.power(i, j, power).dim()));
  } else {
    for (int i = 0; i < mc->cat.size(); ++i)
      for (int j = 0; j < mc->cat.size(); ++j) {
        std::string l = "rad(" + object_name(mc->cat, i) + ", " +
                        object_name(mc->cat, j) + "):";
        for (std::size_t nn = 0; nn < t.powers.size(); ++nn)
          l += " " + std::to_string(t.powers[nn][i][j].dim());
        rep.line(l);
      }
  }
}

void run_depth(AlgebraPtr a, const CommonOpts& o, const std::string& spec,
               Report& rep) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw ValidationError("--morphism must look like pi:V, iota:V, theta:V or beta:V");
  std::string kind = spec.substr(0, colon);
  std::string vname = spec.substr(colon + 1);
  int v = a->quiver().vertex_index(vname);

  if (kind == "beta") {
    auto mc = enumerate_or_report(a, o, rep);
    if (!mc) return;
    QHData qh = make_qh_data(a);
    characteristic_modules(qh);
    DeltaGoodCategory dgc = delta_good_category(qh, mc->cat, o.max_power);
    auto [i, j, f] = transport(dgc.fdelta, qh.beta[v]);
    rep.add("depth", depth(dgc.rad_table, i, j, f).to_string());
    return;
  }

  auto mc = enumerate_or_report(a, o, rep);
  if (!mc) return;
  RadTable t = rad_power_table(mc->cat, o.max_power);
  auto envs = simple_envelopes(a);
  const Morph* m = nullptr;
  if (kind == "pi")
    m = &envs[v].pi;
  else if (kind == "iota")
    m = &envs[v].iota;
  else if (kind == "theta")
    m = &envs[v].theta;
  else
    throw ValidationError("unknown morphism kind '" + kind + "'");
  auto [i, j, f] = transport(mc->cat, *m);
  rep.add("depth", depth(t, i, j, f).to_string());
}

void run_partitions(AlgebraPtr a, const CommonOpts& o, const std::string& kind,
                    Report& rep) {
  auto mc = enumerate_or_report(a, o, rep);
  if (!mc) return;
  bool post = kind == "post";
  Partition p = post ? postprojective_partition(mc->cat)
                     : preinjective_partition(mc->cat);
  rep.add(post ? "p" : "q", p.summary());
  for (std::size_t k = 0; k < p.levels.size(); ++k) {
    std::string l = (post ? "P_" : "I_") + std::to_string(k) + ":";
    for (int x : p.levels[k]) l += " " + object_name(mc->cat, x);
    rep.line(l);
  }
  for (std::size_t k = 0; k < p.levels.size(); ++k) {
    CheckReport r = post ? verify_cover(mc->cat, p, static_cast<int>(k))
                         : verify_cocover(mc->cat, p, static_cast<int>(k));
    report_check(rep, std::string(post ? "cover level " : "cocover level ") +
                          std::to_string(k),
                 r);
  }
}

void run_certify(AlgebraPtr a, const CommonOpts& o, Report& rep) {
  FiniteTypeCertificate cert = finite_type_certificate(a, limits_of(o), o.max_power);
  if (cert.status == FiniteTypeCertificate::Status::Undetermined) {
    rep.status = "UNDETERMINED";
    rep.add("reason", cert.reason);
    rep.add("modules_enumerated", static_cast<long long>(cert.module_count));
    return;
  }
  rep.status = "FINITE";
  rep.add("modules", static_cast<long long>(cert.module_count));
  rep.add("stabilization_index", cert.table.stabilization_index);
  for (std::size_t v = 0; v < cert.dp_pi.size(); ++v) {
    rep.line("dp(pi_S(" + a->quiver().vertex_name(static_cast<int>(v)) +
             ")) = " + cert.dp_pi[v].to_string());
    rep.line("dp(iota_S(" + a->quiver().vertex_name(static_cast<int>(v)) +
             ")) = " + cert.dp_iota[v].to_string());
  }
  report_check(rep, "certificate", cert.report);
  if (rep.status == "FAIL") return;
  rep.status = "FINITE";
}

void run_qh(AlgebraPtr a, Report& rep) {
  QHData qh = make_qh_data(a);
  const Quiver& q = a->quiver();
  for (int i = 0; i < q.num_vertices(); ++i) {
    rep.line("Delta(" + q.vertex_name(i) + ") dims " + dim_vector_string(qh.delta[i]));
    rep.line("Nabla(" + q.vertex_name(i) + ") dims " + dim_vector_string(qh.nabla[i]));
  }
  report_check(rep, "quasi-hereditary", is_quasi_hereditary(qh));
}

void run_tilting(AlgebraPtr a, Report& rep) {
  QHData qh = make_qh_data(a);
  CheckReport ck = is_quasi_hereditary(qh);
  if (!ck.pass) {
    report_check(rep, "quasi-hereditary", ck);
    return;
  }
  characteristic_modules(qh);
  const Quiver& q = a->quiver();
  for (int i = 0; i < q.num_vertices(); ++i) {
    rep.line("T(" + q.vertex_name(i) + ") dims " + dim_vector_string(qh.T[i]));
    rep.line("X(" + q.vertex_name(i) + ") dims " + dim_vector_string(qh.X[i]));
  }
}

void run_fdelta(AlgebraPtr a, const CommonOpts& o, Report& rep) {
  auto mc = enumerate_or_report(a, o, rep);
  if (!mc) return;
  QHData qh = make_qh_data(a);
  characteristic_modules(qh);
  DeltaGoodCategory dgc = delta_good_category(qh, mc->cat, o.max_power);
  rep.add("fdelta_size", static_cast<long long>(dgc.fdelta.size()));
  rep.add("p_delta", dgc.p_delta);
  rep.add("q_delta", dgc.q_delta);
  for (int i = 0; i < dgc.fdelta.size(); ++i)
    rep.line("member " + object_name(dgc.fdelta, i));
  std::string i0 = "I_0(Delta):";
  if (!dgc.pre.levels.empty())
    for (int x : dgc.pre.levels[0]) i0 += " " + object_name(dgc.fdelta, x);
  rep.line(i0);
}

void run_verify(AlgebraPtr a, const CommonOpts& o, const std::string& suite,
                Report& rep) {
  bool want_propdan = suite == "propdan" || suite == "all";
  bool want_s3 = suite == "section3" || suite == "all";
  bool want_s4 = suite == "section4" || suite == "all";
  if (!want_propdan && !want_s3 && !want_s4)
    throw ValidationError("unknown suite '" + suite + "'");

  auto mc = enumerate_or_report(a, o, rep);
  if (!mc) return;

  if (want_propdan) {
    RadTable t = rad_power_table(mc->cat, o.max_power);
    Partition post = postprojective_partition(mc->cat);
    Partition pre = preinjective_partition(mc->cat);
    report_check(rep, "propdan post", verify_propdan(t, post));
    report_check(rep, "propdan pre", verify_propdan(t, pre));
    for (std::size_t k = 0; k < post.levels.size(); ++k)
      report_check(rep, "cover level " + std::to_string(k),
                   verify_cover(mc->cat, post, static_cast<int>(k)));
    for (std::size_t k = 0; k < pre.levels.size(); ++k)
      report_check(rep, "cocover level " + std::to_string(k),
                   verify_cocover(mc->cat, pre, static_cast<int>(k)));
  }
  if (want_s3) {
    FiniteTypeCertificate cert = finite_type_certificate(a, limits_of(o), o.max_power);
    report_check(rep, "section3", cert.report);
  }
  if (want_s4) {
    QHData qh = make_qh_data(a);
    CheckReport ck = is_quasi_hereditary(qh);
    report_check(rep, "section4 qh", ck);
    if (ck.pass) {
      characteristic_modules(qh);
      DeltaGoodCategory dgc = delta_good_category(qh, mc->cat, o.max_power);
      report_check(rep, "section4", verify_section4(qh, dgc));
    }
  }
}

void run_chain(AlgebraPtr a, const CommonOpts& o, const std::string& module,
               const std::string& kind, Report& rep) {
  auto mc = enumerate_or_report(a, o, rep);
  if (!mc) return;
  int x = resolve_object(mc->cat, module);
  if (kind == "mono") {
    Partition pre = preinjective_partition(mc->cat);
    rep.add("level", pre.level_of(x));
    MonoChain chain = preinjective_mono_chain(mc->cat, pre, x);
    for (std::size_t s = 0; s < chain.steps.size(); ++s)
      rep.line("step " + std::to_string(s) + ": " +
               dim_vector_string(chain.steps[s].source) + " -> " +
               dim_vector_string(chain.steps[s].target) +
               (chain.steps[s].is_mono() ? " (mono)" : " (NOT MONO)"));
  } else if (kind == "epi") {
    Partition post = postprojective_partition(mc->cat);
    rep.add("level", post.level_of(x));
    EpiChain chain = postprojective_epi_chain(mc->cat, post, x);
    for (std::size_t s = 0; s < chain.steps.size(); ++s)
      rep.line("step " + std::to_string(s) + ": " +
               dim_vector_string(chain.steps[s].source) + " -> " +
               dim_vector_string(chain.steps[s].target) +
               (chain.steps[s].is_epi() ? " (epi)" : " (NOT EPI)"));
  } else {
    throw ValidationError("--kind must be mono or epi");
  }
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"repkit: exact computations in module categories of bound quiver algebras"};
  app.require_subcommand(1);

  CommonOpts o;
  std::vector<std::string> pair_v;
  std::string morphism, part_kind = "post", suite = "all";
  std::string chain_module, chain_kind = "mono";
  int power = 1;

  CLI::App* c_basis = app.add_subcommand("basis", "path basis of the algebra");
  CLI::App* c_indec = app.add_subcommand("indec", "enumerate indecomposables");
  CLI::App* c_radical = app.add_subcommand("radical", "radical power tables");
  c_radical->add_option("--pair", pair_v, "source and target module (name or index)")
      ->expected(2);
  c_radical->add_option("--power", power, "radical power");
  CLI::App* c_depth = app.add_subcommand("depth", "depth of a named morphism");
  c_depth->add_option("--morphism", morphism, "pi:V | iota:V | theta:V | beta:V")
      ->required();
  CLI::App* c_part = app.add_subcommand("partitions", "postprojective/preinjective partition");
  c_part->add_option("--kind", part_kind, "post|pre")
      ->check(CLI::IsMember({"post", "pre"}));
  CLI::App* c_cert = app.add_subcommand("certify", "finite-type certificate");
  CLI::App* c_qh = app.add_subcommand("qh", "standard modules and quasi-hereditary check");
  CLI::App* c_tilt = app.add_subcommand("tilting", "characteristic tilting modules");
  CLI::App* c_fdelta = app.add_subcommand("fdelta", "the Delta-good subcategory");
  CLI::App* c_verify = app.add_subcommand("verify", "verification suites");
  c_verify->add_option("--suite", suite, "propdan|section3|section4|all")
      ->check(CLI::IsMember({"propdan", "section3", "section4", "all"}));
  CLI::App* c_chain = app.add_subcommand("chain", "mono/epi chain through the partition levels");
  c_chain->add_option("--module", chain_module, "module (name or index)")->required();
  c_chain->add_option("--kind", chain_kind, "mono|epi")
      ->check(CLI::IsMember({"mono", "epi"}));

  for (CLI::App* c : {c_basis, c_indec, c_radical, c_depth, c_part, c_cert, c_qh,
                      c_tilt, c_fdelta, c_verify, c_chain})
    add_common(c, o);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  Report rep;
  CLI::App* sub = app.get_subcommands().front();
  rep.command = sub->get_name();
  try {
    auto [file, alg] = load_algebra(o);
    rep.algebra = file.name;
    if (sub == c_basis)
      run_basis(file, alg, rep);
    else if (sub == c_indec)
      run_indec(alg, o, rep);
    else if (sub == c_radical)
      run_radical(alg, o, pair_v.empty() ? "" : pair_v[0],
                  pair_v.empty() ? "" : pair_v[1], power, rep);
    else if (sub == c_depth)
      run_depth(alg, o, morphism, rep);
    else if (sub == c_part)
      run_partitions(alg, o, part_kind, rep);
    else if (sub == c_cert)
      run_certify(alg, o, rep);
    else if (sub == c_qh)
      run_qh(alg, rep);
    else if (sub == c_tilt)
      run_tilting(alg, rep);
    else if (sub == c_fdelta)
      run_fdelta(alg, o, rep);
    else if (sub == c_verify)
      run_verify(alg, o, suite, rep);
    else if (sub == c_chain)
      run_chain(alg, o, chain_module, chain_kind, rep);
  } catch (const std::exception& e) {
    rep.status = "FAIL";
    rep.add("error", e.what());
  }

  out << (o.format == "json" ? rep.to_json() : rep.to_text());
  if (rep.status == "FAIL") return 1;
  if (rep.status == "UNDETERMINED") return 2;
  return 0;
}

} // namespace repkit
