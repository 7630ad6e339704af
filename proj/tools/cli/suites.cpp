#include "suites.hpp"

#include <algorithm>
#include <future>
#include <map>

#include <json.hpp>

#include "symirr/analysis.hpp"
#include "symirr/bounds.hpp"
#include "symirr/chartab_io.hpp"
#include "symirr/errors.hpp"
#include "symirr/extraspecial.hpp"
#include "symirr/plethysm.hpp"
#include "symirr/tablegen.hpp"

namespace symirr::cli {

namespace fs = std::filesystem;

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skip:
      return "SKIP";
    case CheckStatus::Info:
      return "INFO";
  }
  return "?";
}

bool SuiteResult::ok() const { return count(CheckStatus::Fail) == 0; }

std::size_t SuiteResult::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

fs::path default_data_dir() {
#ifdef SYMIRR_DATA_DIR
  return fs::path(SYMIRR_DATA_DIR);
#else
  return fs::path("data/tables");
#endif
}

std::optional<ClassFunction> select_character(const TablePtr& t, long degree, int indicator) {
  for (const auto& chi : t->irreducibles()) {
    if (chi.degree() != Cyclotomic(degree)) continue;
    if (to_int(frobenius_schur(chi)) == indicator) return chi;
  }
  return std::nullopt;
}

WeilPair find_weil_pair(const TablePtr& sp43) {
  const auto xi = select_character(sp43, 5, 0);
  if (!xi) throw DomainError(sp43->name() + ": no non-real character of degree 5");
  for (const auto& eta : sp43->irreducibles()) {
    if (eta.degree() != Cyclotomic(4L) || frobenius_schur(eta) != IndicatorType::Complex) continue;
    const ClassFunction prod = *xi * eta;
    if (prod == prod.conj()) return {*xi, eta};
  }
  throw DomainError(sp43->name() + ": no non-real degree-4 character pairing with xi");
}

namespace {

class Builder {
 public:
  explicit Builder(std::string suite) { r_.suite = std::move(suite); }

  void expect(bool ok, std::string label, std::string detail = {}) {
    r_.checks.push_back({std::move(label), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
  }
  void info(std::string label, std::string detail) {
    r_.checks.push_back({std::move(label), CheckStatus::Info, std::move(detail)});
  }
  void skip(std::string label, std::string detail) {
    r_.checks.push_back({std::move(label), CheckStatus::Skip, std::move(detail)});
  }
  SuiteResult take() { return std::move(r_); }

 private:
  SuiteResult r_;
};

std::string str(const BigInt& v) { return v.get_str(); }
std::string str(const BigRational& v) { return symirr::to_string(v); }
std::string str(const Cyclotomic& v) { return v.to_string(); }

TablePtr fixture(const SuiteOptions& o, const std::string& file) { return load_table(o.data_dir / file); }

std::string pair_str(const BigInt& a, const BigInt& b) { return "(" + str(a) + "," + str(b) + ")"; }

SuiteResult lowdim_sl25(const SuiteOptions& o) {
  Builder b("lowdim-sl25");
  const auto t = fixture(o, "sl25.json");
  const auto f = select_character(t, 2, -1);
  if (!f) throw DomainError("sl25: no symplectic character of degree 2");
  PowerOperations ops(*f);
  for (unsigned k = 2; k <= 10; ++k) {
    const auto& s = ops.sym(k);
    const Cyclotomic n = norm(s);
    const bool expected = k <= 5;
    b.expect((n == Cyclotomic(1L)) == expected,
             "SL2(5) dim 2: Sym^" + std::to_string(k) + (expected ? " irreducible" : " reducible"),
             "degree=" + str(s.degree()) + " norm=" + str(n) + " decomposition=" + decompose(s).to_string());
  }
  return b.take();
}

SuiteResult weil_sp43(const SuiteOptions& o) {
  Builder b("weil-sp43");
  const auto t = fixture(o, "sp43.json");
  const auto [xi, eta] = find_weil_pair(t);
  PowerOperations px(xi), pxb(xi.conj()), pe(eta), peb(eta.conj());
  b.expect(px.sym(2) == pxb.sym(2), "Sp4(3) Weil: Sym^2(xi) = Sym^2(xibar)");
  b.expect(pe.ext(2) == peb.ext(2), "Sp4(3) Weil: Wedge^2(eta) = Wedge^2(etabar)");
  b.expect(px.ext(2) == peb.sym(2), "Sp4(3) Weil: Wedge^2(xi) = Sym^2(etabar)");
  b.expect(peb.sym(2) != pe.sym(2), "Sp4(3) Weil: Sym^2(etabar) != Sym^2(eta)");
  const Cyclotomic m1 = inner_product(px.sym(3), xi.conj());
  b.expect(m1 == Cyclotomic(1L), "Sp4(3) Weil: <Sym^3(xi), xibar> = 1", "value=" + str(m1));
  const Cyclotomic m2 = inner_product(pe.ext(3), eta.conj());
  b.expect(m2 == Cyclotomic(1L), "Sp4(3) Weil: <Wedge^3(eta), etabar> = 1", "value=" + str(m2));
  const ClassFunction prod = xi * eta;
  const Cyclotomic m3 = inner_product(prod, xi.conj() * eta.conj());
  b.expect(m3 == Cyclotomic(1L), "Sp4(3) Weil: <xi*eta, xibar*etabar> = 1", "value=" + str(m3));
  return b.take();
}

SuiteResult weil_degrees(const SuiteOptions& o) {
  Builder b("weil-degrees");
  for (unsigned n = 2; n <= 12; ++n) {
    const auto w = weil_sp3_power_degrees(n);
    const BigInt p = pow_int(3, n);
    const BigInt s = sym_dim((p - 1) / 2, 4);
    const BigInt e = ext_dim((p + 1) / 2, 4);
    b.expect(w.d1 == s && w.d2 == e, "Sp(2n,3) Weil: D1/D2 closed forms equal binomials (n=" + std::to_string(n) + ")",
             "closed=" + pair_str(w.d1, w.d2) + " binomial=" + pair_str(s, e));
  }
  const auto t = fixture(o, "sp43.json");
  auto has_degree = [&](const BigInt& d) {
    for (const auto& chi : t->irreducibles()) {
      if (chi.degree() == Cyclotomic(d)) return true;
    }
    return false;
  };
  for (int sign : {1, -1}) {
    const BigInt d = weil_degree_sp(2, 3, sign);
    b.expect(has_degree(d), std::string("Sp4(3): Weil degree (q^n") + (sign > 0 ? "+" : "-") + "1)/2 occurs",
             "degree=" + str(d));
  }
  const auto z = weil_degree_su0(4, 2);
  b.info("SU4(2): literal zeta^0 degree", "value=" + str(z.value) + (z.integral ? " integral" : " NON-INTEGRAL"));
  const BigInt u = unitary_weil_degree(4, 2);
  b.expect(has_degree(u), "SU4(2): smallest unitary Weil degree occurs in Sp4(3)", "degree=" + str(u));
  return b.take();
}

SuiteResult extraspecial_suite(const SuiteOptions&) {
  Builder b("extraspecial");
  struct Point {
    std::uint64_t p;
    unsigned n, k;
  };
  for (const Point pt : {Point{3, 1, 3}, Point{3, 2, 3}, Point{2, 1, 4}, Point{2, 2, 4}, Point{2, 3, 4}}) {
    const auto v = default_extraspecial_variant(pt.p);
    const auto all = extraspecial_fixed_dims_all(pt.p, pt.n, pt.k, v);
    const auto closed = extraspecial_closed_form(pt.p, pt.n, pt.k);
    const FixedDims& got = all.front();
    const bool same = std::all_of(all.begin(), all.end(), [&](const FixedDims& f) { return f == got; });
    const std::string label = std::to_string(pt.p) + "^(1+" + std::to_string(2 * pt.n) + ") on k=" +
                              std::to_string(pt.k) + ": fixed Sym/Wedge dims match closed form";
    b.expect(closed && *closed == got && same, label,
             "computed=" + pair_str(got.sym_fixed, got.ext_fixed) +
                 (closed ? " closed=" + pair_str(closed->sym_fixed, closed->ext_fixed) : std::string(" closed=none")) +
                 " faithful=" + std::to_string(all.size()));
  }
  return b.take();
}

std::vector<LieFamilyCase> generic_points() {
  using F = LieFamily;
  return {{F::PSL, 6, 2},       {F::PSU, 8, 2},         {F::PSU, 6, 3},     {F::PSU, 7, 3},
          {F::PSp_odd, 2, 7},   {F::PSp_odd, 3, 3},     {F::PSp_odd, 3, 7}, {F::Omega_odd, 3, 5},
          {F::Omega_odd, 4, 3}, {F::POmega_even, 4, 3}, {F::POmega_even, 5, 2},
          {F::E6, 0, 2},        {F::E6_twisted, 0, 3},  {F::E7, 0, 2},      {F::E8, 0, 2},
          {F::F4_odd, 0, 3},    {F::D4_triality, 0, 3}, {F::G2, 0, 5}};
}

SuiteResult generic_suite(const SuiteOptions&) {
  Builder b("generic");
  for (const auto& c : generic_points()) {
    const auto r = generic_case_check(c);
    b.expect(!r.holds(), r.label + ": lhs >= rhs (contradiction)", r.to_line());
  }
  return b.take();
}

SuiteResult windows_suite(const SuiteOptions&) {
  Builder b("windows");
  const BigInt monster = BigInt(26) * pow_int(10, 25);
  const BigInt baby("29823129106907136");
  const BigInt e62 = BigInt(166) * pow_int(10, 10);
  struct Window {
    std::string label;
    BigInt d;
    BigInt m;
    unsigned k;
    PowerKind kind;
    bool asserted;
  };
  const std::vector<Window> ws = {
      {"M: Wedge^6 at d=196882 exceeds m(G)", 196882, monster, 6, PowerKind::Ext, true},
      {"M: Sym^4 at d=8.9e6 exceeds m(G)", 8900000, monster, 4, PowerKind::Sym, true},
      {"M: Sym^4 at d=8.8e6 against m(G)", 8800000, monster, 4, PowerKind::Sym, false},
      {"B: Wedge^6 at d=4370 exceeds m(G)", 4370, baby, 6, PowerKind::Ext, true},
      {"B: Sym^4 at d=29130 exceeds m(G)", 29130, baby, 4, PowerKind::Sym, true},
      {"2E6(2): Sym^5 at d=1536 exceeds m(G)", 1536, e62, 5, PowerKind::Sym, true},
      {"2E6(2): Sym^4 at d=2513 exceeds m(G)", 2513, e62, 4, PowerKind::Sym, true},
  };
  for (const auto& w : ws) {
    const auto r = sporadic_window_check(w.d, w.m, w.k, w.kind, "window");
    if (w.asserted) {
      b.expect(r.holds(), w.label, r.to_line());
    } else {
      b.info(w.label, r.to_line());
    }
  }
  return b.take();
}

SuiteResult spin_suite(const SuiteOptions&) {
  Builder b("spin-dims");
  struct Row {
    unsigned n;
    std::uint64_t ell;
    unsigned kappa;
    long d1, d2, d3;
  };
  for (const Row& row : {Row{14, 7, 1, 32, 64, 0}, Row{14, 0, 0, 64, 0, 0}, Row{12, 5, 0, 32, 32, 56},
                         Row{9, 0, 0, 0, 0, 16}}) {
    const auto s = basic_spin_dims(row.n, row.ell);
    bool ok = true;
    if (row.d1) ok &= s.d1 == row.d1 && s.kappa == row.kappa;
    if (row.d2) ok &= s.d2 == row.d2;
    if (row.d3) ok &= s.d3_lower == row.d3;
    b.expect(ok, "basic spin dims (n=" + std::to_string(row.n) + ",l=" + std::to_string(row.ell) + ")",
             "kappa=" + std::to_string(s.kappa) + " D1=" + str(s.d1) + " D2=" + str(s.d2) +
                 " D3_lower=" + str(s.d3_lower));
  }
  return b.take();
}

SuiteResult traceless_suite(const SuiteOptions&) {
  Builder b("traceless");
  const auto t7 = traceless_power_dims(7);
  b.expect(t7.four_omega1 == 182, "G2 on dim 7: dim L(4w1) = 182", "value=" + str(t7.four_omega1));
  const auto t6 = traceless_power_dims(6);
  b.expect(t6.four_omega1 == 105, "dim 6: dim L(4w1) = 105", "value=" + str(t6.four_omega1));
  const auto t12 = traceless_power_dims(12);
  b.expect(t12.has_omega4 && t12.omega4 == 429, "dim 12: dim L(w4) = 429", "value=" + str(t12.omega4));
  return b.take();
}

SuiteResult steinberg_suite(const SuiteOptions&) {
  Builder b("steinberg");
  for (unsigned d = 3; d <= 10; ++d) {
    for (unsigned ell : {2u, 3u, 5u, 7u}) {
      for (unsigned k = ell; k <= 12; ++k) {
        const auto r = steinberg_product_bound(d, ell, k);
        b.expect(r.holds(), r.label + ": strict", r.to_line());
      }
    }
  }
  return b.take();
}

SuiteResult j2_suite(const SuiteOptions& o) {
  Builder b("j2-cover");
  const fs::path path = o.data_dir / "2j2.json";
  if (!fs::exists(path)) {
    b.skip("2.J2 dim 6: Sym^4 irreducible", "fixture absent: " + path.string());
    b.skip("2.J2 dim 6: Sym^5 norm", "fixture absent");
    return b.take();
  }
  const auto t = load_table(path);
  std::optional<ClassFunction> f;
  for (const auto& chi : t->irreducibles()) {
    if (chi.degree() == Cyclotomic(6L)) {
      f = chi;
      break;
    }
  }
  if (!f) throw DomainError(t->name() + ": no character of degree 6");
  PowerOperations ops(*f);
  const Cyclotomic n4 = norm(ops.sym(4));
  b.expect(n4 == Cyclotomic(1L), "2.J2 dim 6: Sym^4 irreducible",
           "degree=" + str(ops.sym(4).degree()) + " norm=" + str(n4));
  const Cyclotomic n5 = norm(ops.sym(5));
  b.info("2.J2 dim 6: Sym^5 norm", "degree=" + str(ops.sym(5).degree()) + " norm=" + str(n5) +
                                       (n5 == Cyclotomic(1L) ? " irreducible" : " reducible over 2.J2"));
  return b.take();
}

SuiteResult properties_suite(const SuiteOptions& o) {
  Builder b("properties");
  std::vector<std::pair<std::string, TablePtr>> tables;
  for (const char* f : {"a5.json", "s5.json", "sl25.json", "sp43.json", "2j2.json"}) {
    if (fs::exists(o.data_dir / f)) tables.emplace_back(f, fixture(o, f));
  }
  tables.emplace_back("C6", cyclic_table(6));
  tables.emplace_back("3^(1+2)+", extraspecial_table(3, 1, ExtraspecialVariant::OddExponentP));
  tables.emplace_back("2^(1+4)-", extraspecial_table(2, 2, ExtraspecialVariant::EvenMinus));
  for (const auto& [name, t] : tables) {
    const auto rep = validate_table(*t);
    b.expect(rep.ok(), "table validation incl. row/column orthogonality: " + name,
             rep.ok() ? "classes=" + std::to_string(t->class_count()) : rep.violations.front());
  }

  const auto a5 = fixture(o, "a5.json"), s5 = fixture(o, "s5.json");
  const FusionMap fus = parse_fusion_json(read_text_file(o.data_dir / "a5_s5.fusion.json"), a5, s5);
  bool recip = true;
  for (const auto& psi : a5->irreducibles()) {
    const auto ind = induce(fus, psi);
    for (const auto& chi : s5->irreducibles()) recip &= inner_product(restrict_to(fus, chi), psi) == inner_product(chi, ind);
  }
  b.expect(recip, "Frobenius reciprocity on A5 -> S5 for all irreducible pairs");

  std::vector<ClassFunction> chars;
  for (const char* f : {"a5.json", "s5.json", "sl25.json"}) {
    const auto t = fixture(o, f);
    for (std::size_t i = 1; i < std::min<std::size_t>(t->irreducible_count(), 4); ++i) chars.push_back(t->irreducible(i));
  }
  bool sum_ok = true, cauchy_ok = true;
  for (std::size_t a = 0; a < chars.size(); ++a) {
    for (std::size_t c = a; c < chars.size(); ++c) {
      if (chars[a].table() != chars[c].table()) continue;
      const auto& t = chars[a].table();
      PowerOperations f(chars[a]), g(chars[c]), sum(chars[a] + chars[c]), prod(chars[a] * chars[c]);
      for (unsigned k = 0; k <= 4; ++k) {
        ClassFunction s = ClassFunction::constant(t, Cyclotomic()), e = s, cs = s, ce = s;
        for (unsigned i = 0; i <= k; ++i) {
          s += f.sym(i) * g.sym(k - i);
          e += f.ext(i) * g.ext(k - i);
        }
        for (const auto& lambda : partitions_of(k)) {
          const auto sf = f.schur(lambda);
          cs += sf * g.schur(lambda);
          ce += sf * g.schur(lambda.conjugate());
        }
        sum_ok &= sum.sym(k) == s && sum.ext(k) == e;
        cauchy_ok &= prod.sym(k) == cs && prod.ext(k) == ce;
      }
    }
  }
  b.expect(sum_ok, "Sym/Wedge of a sum, k <= 4", "characters=" + std::to_string(chars.size()));
  b.expect(cauchy_ok, "Cauchy identities for tensor products, k <= 4", "characters=" + std::to_string(chars.size()));

  for (const char* f : {"a5.json", "s5.json", "sl25.json", "sp43.json"}) {
    const auto t = fixture(o, f);
    std::size_t tested = 0, failed = 0;
    for (const auto& chi : t->irreducibles()) {
      const auto ind = frobenius_schur(chi);
      if (ind == IndicatorType::Complex) continue;
      PowerOperations ops(chi);
      const unsigned long deg = chi.degree().to_rational().get_num().get_ui();
      for (unsigned k = 1; k <= 6; ++k) {
        if (ind == IndicatorType::Symplectic && k >= deg) break;
        ++tested;
        if (!containment_by_type(ops, k).holds()) ++failed;
      }
    }
    b.expect(failed == 0, std::string("indicator-driven containment, k <= 6: ") + f,
             "cases=" + std::to_string(tested) + " failed=" + std::to_string(failed));
  }
  return b.take();
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"lowdim-sl25", lowdim_sl25},   {"weil-sp43", weil_sp43},     {"weil-degrees", weil_degrees},
      {"extraspecial", extraspecial_suite}, {"generic", generic_suite}, {"windows", windows_suite},
      {"spin-dims", spin_suite},      {"traceless", traceless_suite}, {"steinberg", steinberg_suite},
      {"j2-cover", j2_suite},         {"properties", properties_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, fn] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  return std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(opts);
  }
  throw DomainError("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opts) {
  const auto& names = suite_names();
  std::vector<SuiteResult> out;
  out.reserve(names.size());
  const std::size_t jobs = std::max(1u, opts.jobs);
  for (std::size_t start = 0; start < names.size(); start += jobs) {
    std::vector<std::future<SuiteResult>> batch;
    for (std::size_t i = start; i < std::min(names.size(), start + jobs); ++i) {
      batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async,
                                 [&opts, &name = names[i]] { return run_suite(name, opts); }));
    }
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

std::string format_text(const SuiteResult& r) {
  std::string s;
  for (const auto& c : r.checks) {
    s += "[" + to_string(c.status) + "] " + c.label;
    if (!c.detail.empty()) s += " :: " + c.detail;
    s += "\n";
  }
  s += "suite " + r.suite + ": " + std::to_string(r.count(CheckStatus::Pass)) + " passed, " +
       std::to_string(r.count(CheckStatus::Fail)) + " failed, " + std::to_string(r.count(CheckStatus::Skip)) +
       " skipped, " + std::to_string(r.count(CheckStatus::Info)) + " info\n";
  return s;
}

std::string format_json(const std::vector<SuiteResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"label", c.label}, {"status", to_string(c.status)}, {"detail", c.detail}});
    }
    arr.push_back({{"suite", r.suite}, {"ok", r.ok()}, {"checks", std::move(checks)}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace symirr::cli
