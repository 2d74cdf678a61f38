#ifndef CIRCDLP_ATTACK_IMPL_HPP
#define CIRCDLP_ATTACK_IMPL_HPP

#include <future>

#include "circdlp/errors.hpp"

namespace circdlp {

namespace detail {

inline std::uint64_t crt_pair_coprime(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2,
                                      std::uint64_t m2) {
  // Coprime moduli; result mod m1*m2. Callers keep m1*m2 within a word.
  std::uint64_t m1_inv_mod_m2 = 1;
  {
    // extended Euclid on machine words
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m2), nr = static_cast<std::int64_t>(m1 % m2);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    m1_inv_mod_m2 =
        t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(m2)) : static_cast<std::uint64_t>(t);
  }
  unsigned __int128 diff = r2 >= r1 % m2 ? r2 - r1 % m2 : r2 + m2 - r1 % m2;
  std::uint64_t t = static_cast<std::uint64_t>(diff % m2);
  t = static_cast<std::uint64_t>(static_cast<unsigned __int128>(t) * m1_inv_mod_m2 % m2);
  return r1 + m1 * t;
}

}  // namespace detail

template <class G>
std::uint64_t pohlig_hellman(const G& grp, const typename G::Element& g,
                             const typename G::Element& h, std::uint64_t order,
                             const std::vector<std::pair<std::uint64_t, unsigned>>& fac) {
  std::uint64_t check = 1;
  for (auto [p, e] : fac)
    for (unsigned i = 0; i < e; ++i) check *= p;
  if (check != order)
    throw InvalidInstanceError("factorization does not multiply out to the stated order");

  struct SubResult {
    std::uint64_t residue;
    std::uint64_t modulus;
  };

  OpCounter* ambient = detail::tl_counter;
  auto solve_prime_power = [&](std::uint64_t p, unsigned e) -> SubResult {
    OpCounterScope scope(ambient);
    std::uint64_t pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    typename G::Element g1 = group_pow(grp, g, order / pe);
    typename G::Element h1 = group_pow(grp, h, order / pe);
    // gamma has order p; recover the base-p digits of x mod p^e.
    std::uint64_t pe_minus1 = pe / p;
    typename G::Element gamma = group_pow(grp, g1, pe_minus1);
    typename G::Element g1_inv = grp.inverse(g1);
    std::uint64_t x = 0, pj = 1;
    for (unsigned j = 0; j < e; ++j) {
      typename G::Element rest = grp.mul(h1, group_pow(grp, g1_inv, x));
      typename G::Element target = group_pow(grp, rest, pe_minus1 / pj);
      auto digit = bsgs(grp, gamma, target, p);
      if (!digit)
        throw InvalidInstanceError("no solution in the order-" + std::to_string(p) +
                                   " subgroup: target is outside the group generated by the base");
      x += *digit * pj;
      pj *= p;
    }
    return {x, pe};
  };

  std::vector<SubResult> parts;
  if (fac.size() > 1) {
    std::vector<std::future<SubResult>> futures;
    futures.reserve(fac.size());
    for (auto [p, e] : fac)
      futures.push_back(std::async(std::launch::async, solve_prime_power, p, e));
    for (auto& f : futures) parts.push_back(f.get());
  } else {
    for (auto [p, e] : fac) parts.push_back(solve_prime_power(p, e));
  }

  std::uint64_t x = 0, m = 1;
  for (const auto& part : parts) {
    x = detail::crt_pair_coprime(x, m, part.residue, part.modulus);
    m *= part.modulus;
  }
  if (!grp.equal(group_pow(grp, g, x), h))
    throw InvalidInstanceError("recombined exponent failed verification");
  return x;
}

}  // namespace circdlp

#endif  // CIRCDLP_ATTACK_IMPL_HPP
