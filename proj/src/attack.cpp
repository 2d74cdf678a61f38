#include "circdlp/attack.hpp"

#include <numeric>

#include "circdlp/linalg.hpp"
#include "circdlp/numth.hpp"

namespace circdlp {

Poly char_poly(const Circulant& a) { return charpoly(a.expand()); }

std::string PolyQuotientGroup::key(const Element& a) const {
  std::string out;
  out.reserve(static_cast<std::size_t>(a.degree() + 1) * 8);
  for (std::uint64_t v : a.coeff_values())
    for (unsigned i = 0; i < 8; ++i) out.push_back(static_cast<char>(v >> (8 * i) & 0xff));
  return out;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> crt_combine(std::uint64_t r1,
                                                                   std::uint64_t m1,
                                                                   std::uint64_t r2,
                                                                   std::uint64_t m2) {
  std::uint64_t g = std::gcd(m1, m2);
  if (r1 % g != r2 % g) return std::nullopt;
  std::uint64_t m2g = m2 / g;
  if (m2g != 0 && m1 > ~std::uint64_t{0} / m2g)
    throw Error("combined modulus exceeds the desk-scale word size");
  std::uint64_t lcm = m1 * m2g;
  if (m2g == 1) return std::make_pair(r1 % lcm, lcm);

  // x = r1 + m1 * t with t = (r2 - r1)/g * (m1/g)^-1 (mod m2/g)
  std::uint64_t m1g = m1 / g;
  std::uint64_t diff = (r2 % m2 + m2 - r1 % m2) % m2;  // = r2 - r1 (mod m2), divisible by g
  std::uint64_t t = (diff / g) % m2g;
  // inverse of m1g mod m2g by extended Euclid
  std::int64_t s = 0, ns = 1;
  std::int64_t r = static_cast<std::int64_t>(m2g), nr = static_cast<std::int64_t>(m1g % m2g);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = s - q * ns;
    s = ns;
    ns = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  std::uint64_t inv = s < 0 ? static_cast<std::uint64_t>(s + static_cast<std::int64_t>(m2g))
                            : static_cast<std::uint64_t>(s);
  t = static_cast<std::uint64_t>(static_cast<unsigned __int128>(t) * inv % m2g);
  std::uint64_t x = r1 + m1 * t;
  return std::make_pair(x % lcm, lcm);
}

namespace {

// Deterministic stream for the equal-degree splitting; attacks must produce
// byte-identical reports run to run.
constexpr std::uint64_t kSplitSeed = 0x517D5EEDull;

Poly trace_map_char2(const Poly& h, const Poly& g, unsigned km) {
  Poly acc = h % g;
  Poly cur = acc;
  for (unsigned i = 1; i < km; ++i) {
    cur = cur * cur % g;
    acc = acc + cur;
  }
  return acc;
}

void equal_degree_split(const Poly& g, unsigned m, Rng& rng, std::vector<Poly>& out) {
  if (g.degree() == static_cast<int>(m)) {
    out.push_back(g.monic());
    return;
  }
  const FieldSpec& spec = g.spec();
  for (unsigned attempt = 0; attempt < 200; ++attempt) {
    Poly h = random_poly_below(spec, static_cast<unsigned>(g.degree()), rng);
    if (h.degree() < 1) continue;
    Poly t(spec);
    if (spec.is_char2()) {
      t = trace_map_char2(h, g, spec.k() * m);
    } else {
      // (q^m - 1)/2 must fit a word at desk scale.
      unsigned __int128 qm = 1;
      for (unsigned i = 0; i < m; ++i) qm *= spec.p();
      if (qm - 1 > (static_cast<unsigned __int128>(1) << 62))
        throw Error("equal-degree splitting exponent exceeds desk scale");
      std::uint64_t e = static_cast<std::uint64_t>((qm - 1) / 2);
      t = poly_pow_mod(h, e, g) - Poly::one(spec);
    }
    Poly s = poly_gcd(t, g);
    if (s.degree() > 0 && s.degree() < g.degree()) {
      equal_degree_split(s, m, rng, out);
      equal_degree_split((g / s).monic(), m, rng, out);
      return;
    }
  }
  throw Error("equal-degree splitting failed to find a separating element");
}

}  // namespace

std::vector<Poly> factor_squarefree_poly(const Poly& f) {
  if (f.degree() < 1) throw Error("factoring a constant polynomial");
  Rng rng(kSplitSeed);
  std::vector<Poly> out;
  Poly rem = f.monic();
  Poly x = Poly::x(f.spec());
  Poly h = x;
  unsigned m = 0;
  while (rem.degree() > 0 && 2 * (m + 1) <= static_cast<unsigned>(rem.degree())) {
    ++m;
    h = poly_frobenius_q(h, rem);
    Poly g = poly_gcd(h - x, rem);
    if (g.degree() > 0) {
      equal_degree_split(g, m, rng, out);
      rem = (rem / g).monic();
      h = h % rem;
    }
  }
  if (rem.degree() > 0) out.push_back(rem);
  return out;
}

namespace {

// Solves target = base^m in F_q^* and returns m modulo ord(base).
LeakFinding ground_field_dlog(const std::string& name, const FieldElement& base,
                              const FieldElement& target, const DlogInstance& inst) {
  LeakFinding f;
  f.name = name;
  const FieldSpec& spec = base.spec();
  OpCounter* outer = detail::tl_counter;
  OpCounter counter;
  {
    OpCounterScope scope(&counter);
    FieldUnitGroup grp{spec};
    std::uint64_t group_order = spec.q_minus_one();
    auto fac = numth::factor_u64(group_order);
    std::uint64_t t = group_element_order(grp, base, group_order, fac);
    std::vector<std::pair<std::uint64_t, unsigned>> fac_t;
    for (auto [p, e] : fac) {
      unsigned mult = 0;
      std::uint64_t tt = t;
      while (tt % p == 0) {
        ++mult;
        tt /= p;
      }
      if (mult) fac_t.emplace_back(p, mult);
    }
    try {
      std::uint64_t x = pohlig_hellman(grp, base, target, t, fac_t);
      f.recovered = true;
      f.residue = x;
      f.modulus = t;
    } catch (const InvalidInstanceError& e) {
      f.note = e.what();
    }
  }
  OpCounts delta = counter.snapshot();
  f.group_mults = delta.group_mults;
  if (outer) outer->add_counts(delta);
  if (f.recovered && inst.true_m)
    f.matches_true_m = inst.true_m->mod_u64(f.modulus) == f.residue;
  return f;
}

}  // namespace

LeakFinding detect_determinant_leak(const DlogInstance& inst) {
  FieldElement det_a = inst.base.det();
  if (det_a.is_one()) {
    LeakFinding f;
    f.name = "determinant";
    f.blocked = true;
    f.note = "det(A) = 1 generates the trivial subgroup";
    return f;
  }
  if (det_a.is_zero()) {
    LeakFinding f;
    f.name = "determinant";
    f.note = "det(A) = 0: base is singular, not a DLP instance";
    return f;
  }
  LeakFinding f = ground_field_dlog("determinant", det_a, inst.target.det(), inst);
  if (!f.recovered && f.note.empty()) f.note = "determinant solve failed";
  return f;
}

LeakFinding detect_rowsum_leak(const DlogInstance& inst) {
  FieldElement rs_a = inst.base.row_sum();
  if (rs_a.is_one()) {
    LeakFinding f;
    f.name = "row-sum";
    f.blocked = true;
    f.note = "row_sum(A) = 1 generates the trivial subgroup";
    return f;
  }
  if (rs_a.is_zero()) {
    LeakFinding f;
    f.name = "row-sum";
    f.note = "row_sum(A) = 0: base is singular, not a DLP instance";
    return f;
  }
  return ground_field_dlog("row-sum", rs_a, inst.target.row_sum(), inst);
}

namespace {

struct FactorAttackPart {
  std::uint64_t residue;
  std::uint64_t modulus;
};

// DLP in (F_q[x]/f)^* for an irreducible factor f: order q^deg(f) - 1.
std::optional<FactorAttackPart> attack_factor_field(const Poly& f, const Poly& base_res,
                                                    const Poly& target_res,
                                                    const std::vector<std::pair<std::uint64_t, unsigned>>& fac,
                                                    std::uint64_t group_order,
                                                    std::string& note) {
  PolyQuotientGroup grp{f};
  Poly b = base_res % f;
  Poly t = target_res % f;
  if (b.is_zero() || t.is_zero()) {
    note = "projection vanishes modulo a factor";
    return std::nullopt;
  }
  std::uint64_t order = group_element_order(grp, b, group_order, fac);
  std::vector<std::pair<std::uint64_t, unsigned>> fac_order;
  for (auto [p, e] : fac) {
    unsigned mult = 0;
    std::uint64_t tt = order;
    while (tt % p == 0) {
      ++mult;
      tt /= p;
    }
    if (mult) fac_order.emplace_back(p, mult);
  }
  std::uint64_t x = pohlig_hellman(grp, b, t, order, fac_order);
  return FactorAttackPart{x, order};
}

bool group_order_u64(const FieldSpec& spec, unsigned ext_degree, std::uint64_t& out) {
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < spec.k(); ++i) q *= spec.p();
  unsigned __int128 n = 1;
  for (unsigned i = 0; i < ext_degree; ++i) {
    n *= q;
    if (n > (static_cast<unsigned __int128>(1) << 63)) return false;
  }
  out = static_cast<std::uint64_t>(n - 1);
  return true;
}

}  // namespace

LeakFinding projection_attack(
    const DlogInstance& inst,
    const std::optional<std::vector<std::pair<std::uint64_t, unsigned>>>& supplied_fac) {
  LeakFinding f;
  f.name = "crt-projection";
  const ParamSet& ps = inst.params;
  const FieldSpec& spec = ps.spec;

  if (ps.d % spec.p() == 0) {
    f.note = "gcd(d, q) != 1: the ring does not split";
    return f;
  }

  OpCounter* outer = detail::tl_counter;
  OpCounter counter;
  {
    OpCounterScope scope(&counter);
    CrtPair base_split = inst.base.crt_split(ps.psi);
    CrtPair target_split = inst.target.crt_split(ps.psi);

    bool psi_irreducible = is_prime(ps.d) && ps.d % spec.p() != 0 &&
                           multiplicative_order(numth::modpow(spec.p(), spec.k(), ps.d), ps.d) ==
                               static_cast<std::uint64_t>(ps.d) - 1;
    try {
      if (psi_irreducible) {
        if (!supplied_fac) {
          f.note = "unsupported: no factorization of q^(d-1) - 1 supplied";
        } else {
          std::uint64_t group_order = 0;
          if (!group_order_u64(spec, ps.d - 1, group_order)) {
            f.note = "unsupported: group order exceeds the desk-scale word size";
          } else {
            std::string sub_note;
            auto part = attack_factor_field(ps.psi.monic(), base_split.residue(),
                                            target_split.residue(), *supplied_fac, group_order,
                                            sub_note);
            if (part) {
              f.recovered = true;
              f.residue = part->residue;
              f.modulus = part->modulus;
              f.note = "DLP solved in F_q[x]/psi";
            } else {
              f.note = sub_note;
            }
          }
        }
      } else {
        if (ps.psi.degree() > 32) {
          f.note = "unsupported: psi is reducible with degree above the splitting bound";
        } else if (poly_gcd(ps.psi, poly_derivative(ps.psi)).degree() != 0) {
          f.note = "unsupported: psi is not squarefree";
        } else {
          std::vector<Poly> factors = factor_squarefree_poly(ps.psi);
          bool have = false;
          std::uint64_t res = 0, mod = 1;
          std::string skip_note;
          for (const Poly& fac_poly : factors) {
            std::uint64_t group_order = 0;
            if (!group_order_u64(spec, static_cast<unsigned>(fac_poly.degree()), group_order)) {
              skip_note = "a factor field exceeds the desk-scale word size";
              continue;
            }
            auto fac = numth::factor_u64(group_order);
            std::string sub_note;
            auto part = attack_factor_field(fac_poly, base_split.residue(), target_split.residue(),
                                            fac, group_order, sub_note);
            if (!part) {
              skip_note = sub_note;
              continue;
            }
            if (!have) {
              res = part->residue;
              mod = part->modulus;
              have = true;
            } else {
              auto combined = crt_combine(res, mod, part->residue, part->modulus);
              if (!combined) {
                f.note = "inconsistent residues across factor fields";
                have = false;
                break;
              }
              res = combined->first;
              mod = combined->second;
            }
          }
          if (have) {
            f.recovered = true;
            f.residue = res;
            f.modulus = mod;
            f.note = "DLP solved per irreducible factor of psi, " +
                     std::to_string(factors.size()) + " factors";
            if (!skip_note.empty()) f.note += " (partial: " + skip_note + ")";
          } else if (f.note.empty()) {
            f.note = skip_note.empty() ? "no factor field produced a residue" : skip_note;
          }
        }
      }
    } catch (const InvalidInstanceError& e) {
      f.note = e.what();
    } catch (const Error& e) {
      f.note = e.what();
    }
  }
  OpCounts delta = counter.snapshot();
  f.group_mults = delta.group_mults;
  if (outer) outer->add_counts(delta);
  if (f.recovered && inst.true_m)
    f.matches_true_m = inst.true_m->mod_u64(f.modulus) == f.residue;
  return f;
}

AttackReport full_attack(
    const DlogInstance& inst,
    const std::optional<std::vector<std::pair<std::uint64_t, unsigned>>>& supplied_fac) {
  AttackReport report;
  OpCounter counter;
  OpCounterScope scope(&counter);

  auto fac = supplied_fac;
  if (!fac) fac = preset_group_order_factorization(inst.params);

  report.leaks.push_back(detect_determinant_leak(inst));
  report.leaks.push_back(detect_rowsum_leak(inst));
  report.leaks.push_back(projection_attack(inst, fac));

  bool have = false;
  std::uint64_t res = 0, mod = 1;
  bool inconsistent = false;
  for (const auto& leak : report.leaks) {
    if (!leak.recovered) continue;
    if (!have) {
      res = leak.residue;
      mod = leak.modulus;
      have = true;
      continue;
    }
    auto combined = crt_combine(res, mod, leak.residue, leak.modulus);
    if (!combined) {
      inconsistent = true;
      break;
    }
    res = combined->first;
    mod = combined->second;
  }
  report.combined_valid = have && !inconsistent;
  if (report.combined_valid) {
    report.combined_residue = res;
    report.combined_modulus = mod;
  }

  // Order of the base: lcm of the row-sum order and the projected order.
  std::optional<std::uint64_t> proj_mod, rowsum_mod;
  for (const auto& leak : report.leaks) {
    if (leak.name == "crt-projection" && leak.recovered) proj_mod = leak.modulus;
    if (leak.name == "row-sum") {
      if (leak.blocked)
        rowsum_mod = 1;
      else if (leak.recovered)
        rowsum_mod = leak.modulus;
    }
  }
  if (proj_mod && rowsum_mod)
    report.base_order = std::lcm(*proj_mod, *rowsum_mod);

  if (report.combined_valid) {
    Circulant probe = inst.base.pow(report.combined_residue);
    report.verified = probe == inst.target;
    report.success = report.verified && report.base_order &&
                     report.combined_modulus >= *report.base_order;
  }
  report.work = counter.snapshot();
  return report;
}

}  // namespace circdlp
