#include "app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "char_expr.hpp"
#include "suites.hpp"
#include "symirr/analysis.hpp"
#include "symirr/bounds.hpp"
#include "symirr/chartab_io.hpp"
#include "symirr/errors.hpp"
#include "symirr/plethysm.hpp"
#include "symirr/tablegen.hpp"

namespace symirr::cli {

namespace fs = std::filesystem;

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string data_dir = default_data_dir().string();
  int code = kExitOk;
};

fs::path resolve_path(const Context& ctx, const std::string& p) {
  if (fs::exists(p)) return p;
  const fs::path alt = fs::path(ctx.data_dir) / p;
  if (fs::exists(alt)) return alt;
  throw ParseError("cannot open " + p);
}

unsigned parse_count(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(s, &used);
    if (used != s.size() || v > 1000000) throw std::out_of_range(s);
    return static_cast<unsigned>(v);
  } catch (const std::logic_error&) {
    throw ParseError(what + " must be a non-negative integer, got '" + s + "'");
  }
}

BigInt parse_big(const std::string& s, const std::string& what) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) throw ParseError(what + " must be an integer, got '" + s + "'");
  return v;
}

// Positional arguments of table commands: [table] char [extra...]; --table replaces the first.
struct TableArgs {
  std::string table_opt;
  std::vector<std::string> pos;
};

struct Resolved {
  TablePtr table;
  std::vector<std::string> rest;
};

Resolved resolve_table_args(const Context& ctx, const TableArgs& a, std::size_t rest_count) {
  std::vector<std::string> pos = a.pos;
  std::string path = a.table_opt;
  if (path.empty()) {
    if (pos.empty()) throw ParseError("missing table path");
    path = pos.front();
    pos.erase(pos.begin());
  }
  if (pos.size() != rest_count) {
    throw ParseError("expected " + std::to_string(rest_count) + " argument(s) after the table, got " +
                     std::to_string(pos.size()));
  }
  return {load_table(resolve_path(ctx, path)), pos};
}

CLI::App* table_command(CLI::App& app, const std::string& name, const std::string& desc, TableArgs& a) {
  auto* sub = app.add_subcommand(name, desc);
  sub->add_option("--table", a.table_opt, "character table JSON");
  sub->add_option("args", a.pos, "[table] arguments")->required();
  return sub;
}

void print_analysis(std::ostream& out, const ClassFunction& f) {
  const Cyclotomic n = norm(f);
  out << "degree: " << f.degree() << "\n";
  out << "norm: " << n << "\n";
  const Decomposition d = decompose(f);
  out << "decomposition: " << d.to_string() << "\n";
  if (d.is_proper) out << "irreducible: " << (is_irreducible(f) ? "yes" : "no") << "\n";
}

void print_values(std::ostream& out, const ClassFunction& f) {
  out << "values:";
  for (const auto& v : f.values()) out << ' ' << v;
  out << "\n";
}

TablePtr find_table_named(const Context& ctx, const std::string& name, const std::vector<fs::path>& dirs) {
  for (const auto& dir : dirs) {
    if (!fs::is_directory(dir)) continue;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) {
      const std::string fn = e.path().filename().string();
      if (e.path().extension() == ".json" && fn.find(".fusion.") == std::string::npos) files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      try {
        auto t = load_table(f);
        if (t->name() == name) return t;
      } catch (const Error&) {
      }
    }
  }
  (void)ctx;
  throw ParseError("no table named " + name + " found next to the fusion file or in the data directory");
}

struct FusionArgs {
  std::string fusion;
  std::string sub;
  std::string over;
  std::string character;
};

FusionMap load_fusion(const Context& ctx, const FusionArgs& a) {
  const fs::path path = resolve_path(ctx, a.fusion);
  const std::string text = read_text_file(path);
  const FusionHeader h = parse_fusion_header(text, path.string());
  const std::vector<fs::path> dirs = {path.parent_path().empty() ? fs::path(".") : path.parent_path(),
                                      fs::path(ctx.data_dir)};
  TablePtr sub = a.sub.empty() ? find_table_named(ctx, h.subgroup, dirs) : load_table(resolve_path(ctx, a.sub));
  TablePtr over = a.over.empty() ? find_table_named(ctx, h.overgroup, dirs) : load_table(resolve_path(ctx, a.over));
  FusionMap fus = parse_fusion_json(text, sub, over, path.string());
  const auto rep = validate_fusion(fus);
  if (!rep.ok()) throw ValidationError(path.string() + ": " + rep.violations.front());
  return fus;
}

CLI::App* fusion_command(CLI::App& app, const std::string& name, const std::string& desc, FusionArgs& a) {
  auto* sub = app.add_subcommand(name, desc);
  sub->add_option("--fusion", a.fusion, "fusion map JSON")->required();
  sub->add_option("--sub", a.sub, "subgroup table JSON");
  sub->add_option("--over", a.over, "overgroup table JSON");
  sub->add_option("character", a.character, "character index or expression")->required();
  return sub;
}

void write_output(Context& ctx, const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    ctx.out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw ParseError("cannot write " + out_path);
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Exact character plethysm and bound checks", "symirr"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--data-dir", ctx.data_dir, "directory searched for bundled tables");

  TableArgs validate_a, decompose_a, sym_a, ext_a, schur_a, fs_a;
  table_command(app, "validate", "check a character table", validate_a)->callback([&] {
    const auto r = resolve_table_args(ctx, validate_a, 0);
    const auto rep = validate_table(*r.table);
    out << "table " << r.table->name() << ": order " << r.table->order().get_str() << ", "
        << r.table->class_count() << " classes\n";
    for (const auto& v : rep.violations) out << "violation: " << v << "\n";
    out << (rep.ok() ? "valid" : "invalid") << "\n";
    if (!rep.ok()) ctx.code = kExitValidation;
  });
  table_command(app, "decompose", "decompose a class function into irreducibles", decompose_a)->callback([&] {
    const auto r = resolve_table_args(ctx, decompose_a, 1);
    print_analysis(out, parse_character(r.table, r.rest[0]));
  });
  for (auto [name, a, is_sym] : {std::tuple{"sym", &sym_a, true}, std::tuple{"ext", &ext_a, false}}) {
    table_command(app, name, is_sym ? "symmetric power of a character" : "exterior power of a character", *a)
        ->callback([&ctx, &out, a = a, is_sym = is_sym] {
          const auto r = resolve_table_args(ctx, *a, 2);
          const auto f = parse_character(r.table, r.rest[0]);
          const unsigned k = parse_count(r.rest[1], "k");
          print_analysis(out, is_sym ? sym_power(f, k) : ext_power(f, k));
        });
  }
  table_command(app, "schur", "Schur functor S_lambda of a character", schur_a)->callback([&] {
    const auto r = resolve_table_args(ctx, schur_a, 2);
    const auto f = parse_character(r.table, r.rest[0]);
    const auto lambda = Partition::parse(r.rest[1]);
    out << "partition: " << lambda.to_string() << "\n";
    print_analysis(out, schur_functor(f, lambda));
  });
  table_command(app, "fs", "Frobenius-Schur indicator of an irreducible", fs_a)->callback([&] {
    const auto r = resolve_table_args(ctx, fs_a, 1);
    out << to_int(frobenius_schur(parse_character(r.table, r.rest[0]))) << "\n";
  });

  FusionArgs restrict_a, induce_a;
  fusion_command(app, "restrict", "restrict an overgroup character along a fusion", restrict_a)->callback([&] {
    const auto fus = load_fusion(ctx, restrict_a);
    const auto f = restrict_to(fus, parse_character(fus.overgroup, restrict_a.character));
    out << "table: " << fus.subgroup->name() << "\n";
    print_values(out, f);
    print_analysis(out, f);
  });
  fusion_command(app, "induce", "induce a subgroup character along a fusion", induce_a)->callback([&] {
    const auto fus = load_fusion(ctx, induce_a);
    const auto f = induce(fus, parse_character(fus.subgroup, induce_a.character));
    out << "table: " << fus.overgroup->name() << "\n";
    print_values(out, f);
    print_analysis(out, f);
  });

  std::uint64_t cyc_n = 0;
  std::string cyc_out;
  auto* gc = app.add_subcommand("gen-cyclic", "emit the table of a cyclic group");
  gc->add_option("n", cyc_n, "group order")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 16));
  gc->add_option("-o,--output", cyc_out, "output file");
  gc->callback([&] { write_output(ctx, cyc_out, table_to_json(*cyclic_table(cyc_n)) + "\n"); });

  std::uint64_t es_p = 0;
  unsigned es_n = 0;
  std::string es_variant, es_out;
  auto* ge = app.add_subcommand("gen-extraspecial", "emit the table of an extraspecial group p^(1+2n)");
  ge->add_option("p", es_p, "prime")->required();
  ge->add_option("n", es_n, "half rank")->required();
  ge->add_option("--variant", es_variant, "odd | plus | minus");
  ge->add_option("-o,--output", es_out, "output file");
  ge->callback([&] {
    const auto v = es_variant.empty() ? (es_p == 2 ? ExtraspecialVariant::EvenPlus : ExtraspecialVariant::OddExponentP)
                                      : parse_extraspecial_variant(es_variant);
    write_output(ctx, es_out, table_to_json(*extraspecial_table(es_p, es_n, v)) + "\n");
  });

  std::string suite = "all";
  bool as_json = false;
  unsigned jobs = 1;
  auto* vp = app.add_subcommand("verify-paper", "run named verification suites");
  vp->add_option("--suite", suite, "suite name or 'all'");
  vp->add_flag("--json", as_json, "machine-readable output");
  vp->add_option("--jobs", jobs, "suites run concurrently")->check(CLI::Range(1u, 64u));
  vp->callback([&] {
    if (suite != "all" && !is_suite(suite)) throw ParseError("unknown suite '" + suite + "'");
    SuiteOptions opts{ctx.data_dir, jobs};
    std::vector<SuiteResult> results;
    if (suite == "all") {
      results = run_all_suites(opts);
    } else {
      results.push_back(run_suite(suite, opts));
    }
    if (as_json) {
      out << format_json(results);
    } else {
      for (const auto& r : results) out << format_text(r);
    }
    const bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.ok(); });
    if (!ok) ctx.code = kExitSuiteMismatch;
  });

  unsigned st_d = 0, st_l = 0, st_k = 0;
  auto* st = app.add_subcommand("steinberg", "modular Steinberg product inequality");
  st->add_option("d", st_d)->required();
  st->add_option("l", st_l)->required();
  st->add_option("k", st_k)->required();
  st->callback([&] { out << steinberg_product_bound(st_d, st_l, st_k).to_line() << "\n"; });

  unsigned ws_n = 0;
  std::uint64_t ws_q = 0;
  int ws_sign = 1;
  auto* wsp = app.add_subcommand("weil-sp", "Weil degree (q^n + sign)/2 of Sp(2n,q)");
  wsp->add_option("n", ws_n)->required();
  wsp->add_option("q", ws_q)->required();
  wsp->add_option("sign", ws_sign)->required();
  wsp->callback([&] { out << weil_degree_sp(ws_n, ws_q, ws_sign).get_str() << "\n"; });

  unsigned su_n = 0;
  std::uint64_t su_q = 0;
  auto* su = app.add_subcommand("weil-su0", "unitary Weil degrees of SU(n,q)");
  su->add_option("n", su_n)->required();
  su->add_option("q", su_q)->required();
  su->callback([&] {
    const auto z = weil_degree_su0(su_n, su_q);
    out << "zeta0: " << symirr::to_string(z.value) << (z.integral ? " integral" : " NON-INTEGRAL") << "\n";
    out << "smallest: " << unitary_weil_degree(su_n, su_q).get_str() << "\n";
  });

  unsigned sp_n = 0;
  std::uint64_t sp_l = 0;
  auto* spin = app.add_subcommand("spin", "basic spin module dimensions");
  spin->add_option("n", sp_n)->required();
  spin->add_option("l", sp_l, "characteristic, 0 for complex")->required();
  spin->callback([&] {
    const auto s = basic_spin_dims(sp_n, sp_l);
    out << "kappa: " << s.kappa << "\nD1: " << s.d1.get_str() << "\nD2: " << s.d2.get_str()
        << "\nD3_lower: " << symirr::to_string(s.d3_lower) << "\n";
  });

  unsigned w3_n = 0;
  auto* w3 = app.add_subcommand("weil-sp3", "D1/D2 fourth-power degrees for Sp(2n,3)");
  w3->add_option("n", w3_n)->required();
  w3->callback([&] {
    const auto w = weil_sp3_power_degrees(w3_n);
    out << "D1: " << w.d1.get_str() << "\nD2: " << w.d2.get_str() << "\n";
  });

  unsigned tl_d = 0;
  auto* tl = app.add_subcommand("traceless", "dimensions of traceless symmetric and exterior powers");
  tl->add_option("d", tl_d)->required();
  tl->callback([&] {
    const auto t = traceless_power_dims(tl_d);
    out << "2w1: " << t.two_omega1.get_str() << "\n4w1: " << t.four_omega1.get_str() << "\n";
    if (t.has_omega4) out << "w4: " << t.omega4.get_str() << "\n";
  });

  std::string gf_family;
  unsigned gf_n = 0;
  std::uint64_t gf_q = 0;
  auto* gen = app.add_subcommand("generic", "generic Lie-type inequality");
  gen->add_option("family", gf_family)->required();
  gen->add_option("n", gf_n, "rank parameter (ignored by exceptional families)")->required();
  gen->add_option("q", gf_q)->required();
  gen->callback([&] { out << generic_case_check({parse_lie_family(gf_family), gf_n, gf_q}).to_line() << "\n"; });

  std::string key_v, key_q, key_i;
  auto* key = app.add_subcommand("key", "long-root key inequality");
  key->add_option("variant", key_v, "key1 | key2_wide | key2_narrow")->required();
  key->add_option("q_mod_z", key_q)->required();
  key->add_option("index", key_i)->required();
  key->callback([&] {
    out << key_inequality_check(parse_key_variant(key_v), parse_big(key_q, "q_mod_z"), parse_big(key_i, "index"))
               .to_line()
        << "\n";
  });

  std::string win_d, win_m, win_kind;
  unsigned win_k = 0;
  auto* win = app.add_subcommand("window", "m(G) against dim X^k(V)");
  win->add_option("d", win_d)->required();
  win->add_option("m", win_m)->required();
  win->add_option("k", win_k)->required();
  win->add_option("kind", win_kind, "sym | ext")->required();
  win->callback([&] {
    out << sporadic_window_check(parse_big(win_d, "d"), parse_big(win_m, "m"), win_k, parse_power_kind(win_kind))
               .to_line()
        << "\n";
  });

  std::string mb_order, mb_center = "1";
  auto* mb = app.add_subcommand("mbound", "floor(sqrt(|G|/|Z|))");
  mb->add_option("order", mb_order)->required();
  mb->add_option("center", mb_center);
  mb->callback([&] { out << m_bound(parse_big(mb_order, "order"), parse_big(mb_center, "center")).get_str() << "\n"; });

  std::string ib_dim, ib_deg, ib_index, ib_parity;
  auto* ib = app.add_subcommand("index-bound", "dimension against the index bound");
  ib->add_option("dim", ib_dim)->required();
  ib->add_option("degree", ib_deg)->required();
  ib->add_option("index", ib_index)->required();
  ib->add_option("parity", ib_parity, "even | odd")->required();
  ib->callback([&] {
    out << index_bound_check(parse_big(ib_dim, "dim"), parse_big(ib_deg, "degree"), parse_big(ib_index, "index"),
                             parse_parity(ib_parity))
               .to_line()
        << "\n";
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    return ctx.code;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace symirr::cli
