#include "symirr/bounds.hpp"

#include <sstream>

#include "symirr/errors.hpp"

namespace symirr {

namespace {

BigInt big(std::uint64_t v) { return BigInt(std::to_string(v)); }
BigRational rat(const BigInt& v) { return BigRational(v); }
BigInt qpow(std::uint64_t q, unsigned e) { return pow_int(big(q), e); }

BigInt sym_binom(const BigInt& d, unsigned long k) { return k == 0 ? BigInt(1) : binomial(d + k - 1, k); }

void require_prime_power(std::uint64_t q) {
  if (prime_power_base(q) == 0) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
}

void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError(what);
}

}  // namespace

std::string BoundReport::to_line() const {
  std::ostringstream os;
  os << label << ' ' << lhs.get_str() << ' ' << rhs.get_str() << ' ' << verdict();
  return os.str();
}

BoundReport steinberg_product_bound(unsigned d, unsigned ell, unsigned k) {
  require(d >= 3, "steinberg_product_bound needs d >= 3");
  require(is_prime(ell), "ell must be prime");
  require(k >= 2 && ell <= k, "steinberg_product_bound needs k >= 2 and ell <= k");
  BoundReport r;
  r.label = "steinberg(d=" + std::to_string(d) + ",l=" + std::to_string(ell) + ",k=" + std::to_string(k) + ")";
  BigInt lhs = 1;
  std::string digits;
  for (unsigned rest = k; rest > 0; rest /= ell) {
    const unsigned a = rest % ell;
    lhs *= sym_binom(BigInt(d), a);
    digits += (digits.empty() ? "" : ",") + std::to_string(a);
  }
  r.lhs = lhs;
  r.rhs = sym_binom(BigInt(d), k);
  r.context = {{"d", std::to_string(d)}, {"l", std::to_string(ell)}, {"k", std::to_string(k)}, {"digits", digits}};
  return r;
}

BigInt weil_degree_sp(unsigned n, std::uint64_t q, int sign) {
  require(n >= 1, "weil_degree_sp needs n >= 1");
  require(q % 2 == 1, "weil_degree_sp needs odd q");
  require_prime_power(q);
  require(sign == 1 || sign == -1, "sign must be +1 or -1");
  return (qpow(q, n) + sign) / 2;
}

RationalDegree weil_degree_su0(unsigned n, std::uint64_t q) {
  require(n >= 3, "weil_degree_su0 needs n >= 3");
  require_prime_power(q);
  const BigInt sgn_q = (n % 2 == 0) ? big(q) : BigInt(-big(q));
  RationalDegree r;
  r.value = BigRational(qpow(q, n) - sgn_q, big(q) + 1);
  r.value.canonicalize();
  r.integral = r.value.get_den() == 1;
  return r;
}

BigInt unitary_weil_degree(unsigned n, std::uint64_t q) {
  require(n >= 2, "unitary_weil_degree needs n >= 2");
  require_prime_power(q);
  const BigInt sgn_q = (n % 2 == 0) ? big(q) : BigInt(-big(q));
  return (qpow(q, n) + sgn_q) / (big(q) + 1);
}

SpinDims basic_spin_dims(unsigned n, std::uint64_t ell) {
  require(n >= 8, "basic_spin_dims needs n >= 8");
  require(ell == 0 || is_prime(ell), "ell must be 0 or a prime");
  auto kappa = [&](unsigned m) -> unsigned { return (ell > 0 && m % ell == 0) ? 1 : 0; };
  auto d1 = [&](unsigned m) { return pow_int(2, (m - 2 - kappa(m)) / 2); };
  auto d2 = [&](unsigned m) { return pow_int(2, (m - 1 - kappa(m)) / 2); };
  SpinDims s;
  s.kappa = kappa(n);
  s.d1 = d1(n);
  s.d2 = d2(n);
  const BigRational a = BigRational(n - 5) * rat(d1(n - 2));
  BigRational half(n - 5, 2);
  half.canonicalize();
  const BigRational b = half * rat(d2(n - 2));
  s.d3_lower = a > b ? a : b;
  return s;
}

WeilPowerDegrees weil_sp3_power_degrees(unsigned n) {
  require(n >= 2, "weil_sp3_power_degrees needs n >= 2");
  const BigInt t = qpow(3, n);
  WeilPowerDegrees w;
  w.d1 = (t * t - 1) * (qpow(3, n - 1) + 1) * (t + 5) / 128;
  w.d2 = (t * t - 1) * (qpow(3, n - 1) - 1) * (t - 5) / 128;
  return w;
}

TracelessDims traceless_power_dims(unsigned d) {
  require(d >= 2, "traceless_power_dims needs d >= 2");
  const BigInt bd(d);
  TracelessDims t;
  t.two_omega1 = binomial(bd + 1, 2) - 1;
  t.four_omega1 = binomial(bd + 3, 4) - binomial(bd + 1, 2);
  if (d >= 8) {
    t.has_omega4 = true;
    t.omega4 = binomial(bd, 4) - binomial(bd, 2);
  }
  return t;
}

LieFamily parse_lie_family(const std::string& s) {
  for (LieFamily f : all_lie_families()) {
    if (to_string(f) == s) return f;
  }
  throw ParseError("unknown Lie family '" + s + "'");
}

std::string to_string(LieFamily f) {
  switch (f) {
    case LieFamily::PSL: return "PSL";
    case LieFamily::PSU: return "PSU";
    case LieFamily::PSp_odd: return "PSp_odd";
    case LieFamily::Omega_odd: return "Omega_odd";
    case LieFamily::POmega_even: return "POmega_even";
    case LieFamily::E6: return "E6";
    case LieFamily::E6_twisted: return "2E6";
    case LieFamily::E7: return "E7";
    case LieFamily::E8: return "E8";
    case LieFamily::F4_odd: return "F4_odd";
    case LieFamily::D4_triality: return "3D4";
    case LieFamily::G2: return "G2";
  }
  return "?";
}

std::vector<LieFamily> all_lie_families() {
  return {LieFamily::PSL, LieFamily::PSU, LieFamily::PSp_odd, LieFamily::Omega_odd, LieFamily::POmega_even,
          LieFamily::E6,  LieFamily::E6_twisted, LieFamily::E7, LieFamily::E8, LieFamily::F4_odd,
          LieFamily::D4_triality, LieFamily::G2};
}

bool is_exceptional(LieFamily f) {
  switch (f) {
    case LieFamily::PSL:
    case LieFamily::PSU:
    case LieFamily::PSp_odd:
    case LieFamily::Omega_odd:
    case LieFamily::POmega_even: return false;
    default: return true;
  }
}

BoundReport generic_case_check(const LieFamilyCase& c) {
  require_prime_power(c.q);
  const std::uint64_t q = c.q;
  const unsigned n = c.n;
  const bool q_odd = q % 2 == 1;
  auto Q = [&](unsigned e) { return rat(qpow(q, e)); };
  auto Qm1 = [&](unsigned e) { return rat(qpow(q, e) - 1); };
  auto Qp1 = [&](unsigned e) { return rat(qpow(q, e) + 1); };
  const BigRational qr = rat(big(q));

  BoundReport r;
  r.label = "generic:" + to_string(c.family);
  r.context = {{"family", to_string(c.family)}, {"q", std::to_string(q)}};
  if (!is_exceptional(c.family)) {
    r.label += "(n=" + std::to_string(n) + ",q=" + std::to_string(q) + ")";
    r.context.insert(r.context.begin() + 1, {"n", std::to_string(n)});
  } else {
    r.label += "(q=" + std::to_string(q) + ")";
  }

  switch (c.family) {
    case LieFamily::PSL:
      require(n >= 6, "PSL generic case needs n >= 6");
      r.lhs = Q(4 * n - 8);
      r.rhs = BigRational(15, 2) * Qm1(n) * (Q(n) - qr);
      break;
    case LieFamily::PSU: {
      require(n >= 6, "PSU generic case needs n >= 6");
      require(!(n == 6 && q == 2), "PSU generic case excludes (n,q) = (6,2)");
      require(n % 2 == 0 || q_odd, "PSU generic case needs q odd when n is odd");
      const BigRational s = (n % 2 == 0) ? BigRational(1) : BigRational(-1);
      r.lhs = Q(4 * n - 8);
      r.rhs = BigRational(24) * (Q(n) - s) * (Q(n) + s * qr);
      break;
    }
    case LieFamily::PSp_odd:
      require(n >= 2, "PSp generic case needs n >= 2");
      require(q_odd, "PSp generic case needs odd q");
      require(!(n == 2 && (q == 3 || q == 5)), "PSp generic case excludes (n,q) = (2,3), (2,5)");
      if (n >= 3) {
        r.lhs = Q(4 * n - 4);
        r.rhs = BigRational(3, 4) * Qm1(2 * n) * qr;
      } else {
        // Degree bound d >= (q^2-1)/2 against dim(V)^4 < 24 m(G).
        const BigRational d = Qm1(2) / 2;
        r.lhs = d * d * d * d;
        r.rhs = BigRational(24) * BigRational(4) * qr * Qm1(2) * Qm1(4) / (BigRational(9) * (qr - 1) * (qr - 1));
        r.label += "[max]";
      }
      break;
    case LieFamily::Omega_odd:
      require(n >= 3, "Omega generic case needs n >= 3");
      require(q_odd, "Omega generic case needs odd q");
      require(!(n == 3 && q == 3), "Omega generic case excludes (n,q) = (3,3)");
      r.lhs = Q(8 * n - 12);
      r.rhs = BigRational(3, 2) * Qm1(2 * n) * Qm1(2 * n - 2) * qr / Qm1(2);
      break;
    case LieFamily::POmega_even:
      require(n >= 4, "POmega generic case needs n >= 4");
      require(!(n == 4 && q == 2), "POmega generic case excludes (n,q) = (4,2)");
      r.lhs = Q(8 * n - 16);
      r.rhs = BigRational(15, 2) * (Qm1(n) * Qm1(2 * n - 2) * Qp1(n - 2) / Qm1(2)) * BigRational(12) * qr;
      break;
    case LieFamily::E8:
      r.lhs = Q(112);
      r.rhs = BigRational(12) * qr * Qm1(20) * Qm1(24) * Qm1(30) / (Qm1(6) * Qm1(10));
      break;
    case LieFamily::E7:
      r.lhs = Q(64);
      r.rhs = BigRational(24) * qr * Qm1(12) * Qm1(14) * Qm1(18) / (Qm1(4) * Qm1(6));
      break;
    case LieFamily::E6:
      r.lhs = Q(40);
      r.rhs = BigRational(72) * qr * Qm1(8) * Qm1(9) * Qm1(12) / (Qm1(3) * Qm1(4));
      break;
    case LieFamily::E6_twisted:
      require(q > 2, "2E6 generic case needs q > 2");
      r.lhs = Q(40);
      r.rhs = BigRational(72) * qr * Qm1(8) * Qp1(9) * Qm1(12) / (Qp1(3) * Qm1(4));
      break;
    case LieFamily::F4_odd:
      require(q_odd, "F4 generic case needs odd q");
      r.lhs = Q(28);
      r.rhs = BigRational(3, 4) * qr * Qp1(4) * Qm1(12);
      break;
    case LieFamily::D4_triality:
      require(q > 2, "3D4 generic case needs q > 2");
      r.lhs = Q(16);
      r.rhs = BigRational(36) * qr * (Q(8) + Q(4) + 1) * Qm1(2);
      break;
    case LieFamily::G2:
      require(q % 3 != 0 && q >= 5, "G2 generic case needs q >= 5 coprime to 3");
      r.lhs = Q(8);
      r.rhs = BigRational(15, 4) * qr * Qm1(6);
      break;
  }
  return r;
}

KeyVariant parse_key_variant(const std::string& s) {
  if (s == "key1") return KeyVariant::Key1;
  if (s == "key2_wide") return KeyVariant::Key2Wide;
  if (s == "key2_narrow") return KeyVariant::Key2Narrow;
  throw ParseError("unknown key variant '" + s + "' (key1, key2_wide, key2_narrow)");
}

BigRational key_constant(KeyVariant v) {
  switch (v) {
    case KeyVariant::Key1: return BigRational(3, 2);
    case KeyVariant::Key2Wide: return BigRational(15, 2);
    case KeyVariant::Key2Narrow: return BigRational(24);
  }
  return 0;
}

BoundReport key_inequality_check(KeyVariant v, const BigInt& q_mod_z, const BigInt& index_gc) {
  require(q_mod_z > 0 && index_gc > 0, "key inequality needs positive integers");
  static const char* names[] = {"key1", "key2_wide", "key2_narrow"};
  BoundReport r;
  r.label = names[static_cast<int>(v)];
  r.lhs = rat(q_mod_z * q_mod_z);
  r.rhs = key_constant(v) * rat(index_gc);
  r.context = {{"QmodZ", q_mod_z.get_str()}, {"indexGC", index_gc.get_str()}};
  return r;
}

PowerKind parse_power_kind(const std::string& s) {
  if (s == "sym" || s == "Sym") return PowerKind::Sym;
  if (s == "ext" || s == "wedge" || s == "Ext") return PowerKind::Ext;
  throw ParseError("power kind must be 'sym' or 'ext', got '" + s + "'");
}

std::string to_string(PowerKind k) { return k == PowerKind::Sym ? "Sym" : "Ext"; }

BoundReport sporadic_window_check(const BigInt& d_min, const BigInt& m_g, unsigned k, PowerKind kind,
                                  const std::string& label) {
  require(d_min > 0 && m_g > 0 && k > 0, "sporadic window check needs positive inputs");
  BoundReport r;
  r.label = label;
  r.lhs = rat(m_g);
  r.rhs = rat(kind == PowerKind::Sym ? sym_binom(d_min, k) : binomial(d_min, k));
  r.context = {{"d", d_min.get_str()}, {"k", std::to_string(k)}, {"power", to_string(kind)}};
  return r;
}

BigInt m_bound(const BigInt& group_order, const BigInt& center_order) {
  require(group_order > 0 && center_order > 0, "m_bound needs positive orders");
  require(group_order % center_order == 0, "center order must divide the group order");
  BigInt quotient = group_order / center_order;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), quotient.get_mpz_t());
  return root;
}

}  // namespace symirr
