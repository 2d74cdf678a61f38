#ifndef CIRCDLP_ATTACK_HPP
#define CIRCDLP_ATTACK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "circdlp/bigint.hpp"
#include "circdlp/opcount.hpp"
#include "circdlp/params.hpp"
#include "circdlp/poly.hpp"

namespace circdlp {

/// A discrete-log problem: given base A and target B = A^m, recover m.
/// true_m is carried in known-answer mode so reports can grade themselves.
struct DlogInstance {
  ParamSet params;
  Circulant base;
  Circulant target;
  std::optional<BigUint> true_m;
};

/// Outcome of one leak detector or of the CRT projection.
struct LeakFinding {
  std::string name;
  bool blocked = false;     // the paper's condition prevents this leak
  bool recovered = false;   // residue/modulus below are meaningful
  std::uint64_t residue = 0;
  std::uint64_t modulus = 1;
  std::uint64_t group_mults = 0;  // solver work
  bool matches_true_m = false;    // known-answer mode only
  std::string note;
};

/// Combined outcome of the full reduction chain.
struct AttackReport {
  std::vector<LeakFinding> leaks;
  bool combined_valid = false;
  std::uint64_t combined_residue = 0;
  std::uint64_t combined_modulus = 1;
  std::optional<std::uint64_t> base_order;
  bool verified = false;  // base^combined_residue == target
  bool success = false;   // verified and combined modulus covers the base order
  OpCounts work;
};

/// Characteristic polynomial of the d x d expansion (monic, degree d).
/// (x - 1) divides it whenever the row sum is 1.
Poly char_poly(const Circulant& a);

/// Generalized CRT: combines residues over not-necessarily-coprime moduli.
/// Returns nullopt when the residues are inconsistent modulo the gcd.
std::optional<std::pair<std::uint64_t, std::uint64_t>> crt_combine(std::uint64_t r1,
                                                                   std::uint64_t m1,
                                                                   std::uint64_t r2,
                                                                   std::uint64_t m2);

/// Factors a squarefree monic polynomial into monic irreducibles
/// (distinct-degree then equal-degree splitting). Deterministic: the random
/// splitting elements come from a fixed-seed stream.
std::vector<Poly> factor_squarefree_poly(const Poly& f);

// ---------------------------------------------------------------------------
// Generic-group solvers. A group type G provides:
//   using Element = ...;
//   Element identity() const;
//   Element mul(const Element&, const Element&) const;   // ticks group_mults
//   Element inverse(const Element&) const;
//   bool equal(const Element&, const Element&) const;
//   std::string key(const Element&) const;               // injective
// ---------------------------------------------------------------------------

template <class G>
typename G::Element group_pow(const G& g, typename G::Element base, std::uint64_t e) {
  typename G::Element acc = g.identity();
  while (e) {
    if (e & 1) acc = g.mul(acc, base);
    e >>= 1;
    if (e) base = g.mul(base, base);
  }
  return acc;
}

/// Baby-step giant-step: least x in [0, bound) with g^x = h, in O(sqrt(bound))
/// group multiplications. Every candidate is re-verified by exponentiation
/// before being returned.
template <class G>
std::optional<std::uint64_t> bsgs(const G& grp, const typename G::Element& g,
                                  const typename G::Element& h, std::uint64_t bound) {
  if (bound == 0) return std::nullopt;
  std::uint64_t m = 1;
  while (m * m < bound) ++m;

  std::unordered_map<std::string, std::uint64_t> table;
  table.reserve(m);
  typename G::Element baby = grp.identity();
  for (std::uint64_t j = 0; j < m; ++j) {
    table.emplace(grp.key(baby), j);  // smallest j wins
    baby = grp.mul(baby, g);
  }

  typename G::Element giant = grp.inverse(group_pow(grp, g, m));
  typename G::Element cur = h;
  for (std::uint64_t i = 0; i * m < bound; ++i) {
    auto it = table.find(grp.key(cur));
    if (it != table.end()) {
      std::uint64_t x = i * m + it->second;
      if (x < bound && grp.equal(group_pow(grp, g, x), h)) return x;
    }
    cur = grp.mul(cur, giant);
  }
  return std::nullopt;
}

/// Exact order of g given the group order and its factorization.
template <class G>
std::uint64_t group_element_order(const G& grp, const typename G::Element& g,
                                  std::uint64_t group_order,
                                  const std::vector<std::pair<std::uint64_t, unsigned>>& fac) {
  std::uint64_t t = group_order;
  for (auto [p, e] : fac) {
    for (unsigned i = 0; i < e && t % p == 0; ++i) {
      std::uint64_t cand = t / p;
      if (grp.equal(group_pow(grp, g, cand), grp.identity()))
        t = cand;
      else
        break;
    }
  }
  return t;
}

/// Pohlig-Hellman: x mod order with g^x = h, where g has the given order and
/// the factorization multiplies out to it. Per-prime-power subproblems are
/// independent and run in parallel; results recombine by the CRT and the
/// final answer is verified by exponentiation. Throws InvalidInstanceError
/// when any subproblem has no solution or the verification fails.
template <class G>
std::uint64_t pohlig_hellman(const G& grp, const typename G::Element& g,
                             const typename G::Element& h, std::uint64_t order,
                             const std::vector<std::pair<std::uint64_t, unsigned>>& fac);

/// F_q^* with multiplication; used for the determinant and row-sum leaks.
struct FieldUnitGroup {
  FieldSpec spec;
  using Element = FieldElement;
  Element identity() const { return spec.one(); }
  Element mul(const Element& a, const Element& b) const {
    detail::tick_group_mult();
    return a * b;
  }
  Element inverse(const Element& a) const { return a.inverse(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string key(const Element& a) const {
    Bytes b = a.to_bytes();
    return std::string(b.begin(), b.end());
  }
};

/// (F_q[x]/f)^* for monic f; the projected group of the CRT attack.
struct PolyQuotientGroup {
  Poly modulus;
  using Element = Poly;
  Element identity() const { return Poly::one(modulus.spec()); }
  Element mul(const Element& a, const Element& b) const {
    detail::tick_group_mult();
    return a * b % modulus;
  }
  Element inverse(const Element& a) const { return poly_inverse_mod(a, modulus); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string key(const Element& a) const;
};

/// The circulant unit group itself (the ring product already counts).
struct CirculantGroup {
  FieldSpec spec;
  unsigned d;
  using Element = Circulant;
  Element identity() const { return Circulant::identity(spec, d); }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inverse(const Element& a) const { return a.inverse(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string key(const Element& a) const {
    Bytes b = a.to_bytes();
    return std::string(b.begin(), b.end());
  }
};

/// det(A) != 1 hands out m mod ord(det A) because the determinant is
/// multiplicative down to the ground field; condition (i) blocks it.
LeakFinding detect_determinant_leak(const DlogInstance& inst);

/// The row sum is a ground-field eigenvalue; row_sum(A) != 1 hands out
/// m mod ord(row_sum A). Condition (ii) blocks it.
LeakFinding detect_rowsum_leak(const DlogInstance& inst);

/// Projects through the CRT split onto F_q[x]/psi and solves there. With psi
/// irreducible this is a DLP in F_{q^{d-1}} and needs the caller-supplied
/// factorization of q^{d-1} - 1; with psi reducible (deg <= 32) it attacks
/// each factor field independently and CRT-combines the residues.
LeakFinding projection_attack(const DlogInstance& inst,
                              const std::optional<std::vector<std::pair<std::uint64_t, unsigned>>>&
                                  group_order_factorization);

/// Runs every detector, CRT-combines the residues, and verifies the result
/// by exponentiation. All failures are report content, never exceptions.
AttackReport full_attack(const DlogInstance& inst,
                         const std::optional<std::vector<std::pair<std::uint64_t, unsigned>>>&
                             group_order_factorization = std::nullopt);

}  // namespace circdlp

#include "circdlp/attack_impl.hpp"

#endif  // CIRCDLP_ATTACK_HPP
