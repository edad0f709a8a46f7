#ifndef SYLSPLIT_STRUCTURE_HPP
#define SYLSPLIT_STRUCTURE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "cayley.hpp"
#include "quotient.hpp"
#include "search.hpp"

namespace sylsplit {

inline PermGroup center(const PermGroup& G) { return centralizer(G, G); }

inline bool is_p_group(const PermGroup& G, std::uint64_t p) { return is_p_power(G.order(), p); }

/// A Sylow p-subgroup by normalizer ascent: starting from 1, repeatedly
/// adjoin the lexicographically least p-element of N_G(P) outside P.
/// Returns the trivial group when p does not divide |G|.
inline PermGroup sylow(const PermGroup& G, std::uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("sylow: " + std::to_string(p) + " is not prime");
  const std::uint64_t target = p_part(G.order(), p);
  PermGroup P = PermGroup::trivial(G.degree());
  while (P.order() < target) {
    PermGroup N = P.is_trivial() ? G : normalizer(G, P);
    std::unordered_set<Permutation, PermutationHash> members;
    P.for_each_element([&](const Permutation& x) { members.insert(x); });
    std::optional<Permutation> best;
    N.for_each_element([&](const Permutation& h) {
      if ((best && !(h < *best)) || !is_p_power(h.order(), p) || members.count(h))
        return;
      best = h;
    });
    if (!best)
      throw InternalInconsistency("sylow: no p-element in N_G(P) \\ P although |P| < p-part");
    std::vector<Permutation> gens = P.generators();
    gens.push_back(*best);
    P = PermGroup(G.degree(), std::move(gens));
  }
  return P;
}

/// O_p(G) as the core of a Sylow subgroup: the elements of S whose whole
/// G-class lies in S.
inline PermGroup p_core(const PermGroup& G, std::uint64_t p, const PermGroup& S) {
  std::unordered_set<Permutation, PermutationHash> in_s, decided;
  S.for_each_element([&](const Permutation& x) { in_s.insert(x); });
  std::vector<Permutation> core;
  S.for_each_element([&](const Permutation& x) {
    if (decided.count(x))
      return;
    std::vector<Permutation> cls{x};
    std::unordered_set<Permutation, PermutationHash> seen{x};
    bool inside = true;
    for (std::size_t i = 0; i < cls.size() && inside; ++i)
      for (const auto& s : G.generators()) {
        Permutation y = cls[i].conjugate_by(s);
        if (!in_s.count(y)) {
          inside = false;
          break;
        }
        if (seen.insert(y).second)
          cls.push_back(std::move(y));
      }
    decided.insert(cls.begin(), cls.end());
    if (inside)
      core.insert(core.end(), cls.begin(), cls.end());
  });
  (void)p;
  return PermGroup(G.degree(), std::move(core));
}

inline PermGroup p_core(const PermGroup& G, std::uint64_t p) { return p_core(G, p, sylow(G, p)); }

/// O_{p'}(G): adjoin normal closures of p'-element classes while the result
/// stays a p'-group. One pass over class representatives suffices, since every
/// class inside O_{p'}(G) is accepted whenever it is reached.
inline PermGroup p_prime_core(const PermGroup& G, std::uint64_t p) {
  PermGroup N = PermGroup::trivial(G.degree());
  if (G.order() % p != 0)
    return G;
  std::unordered_set<Permutation, PermutationHash> seen;
  G.for_each_element([&](const Permutation& g) {
    if (seen.count(g))
      return;
    auto cls = conjugacy_class(G, g);
    seen.insert(cls.begin(), cls.end());
    if (g.order() % p == 0 || N.contains(g))
      return;
    std::vector<Permutation> seed = N.generators();
    seed.push_back(g);
    PermGroup M = normal_closure(G, std::move(seed));
    if (M.order() % p != 0)
      N = std::move(M);
  });
  return N;
}

/// O_p, O_{p'}, O_{p',p} and Z_p^* of G.
struct RadicalSeries {
  std::uint64_t p = 0;
  PermGroup o_p;
  PermGroup o_p_prime;
  PermGroup o_p_prime_p;
  PermGroup z_p_star;
};

inline RadicalSeries radical_series(const PermGroup& G, std::uint64_t p, const Caps& caps = default_caps()) {
  if (!is_prime(p))
    throw std::invalid_argument("radical_series: " + std::to_string(p) + " is not prime");
  RadicalSeries rs;
  rs.p = p;
  rs.o_p = p_core(G, p);
  rs.o_p_prime = p_prime_core(G, p);
  Quotient q(G, rs.o_p_prime, caps);
  rs.o_p_prime_p = q.preimage(p_core(q.group(), p));
  rs.z_p_star = q.preimage(center(q.group()));
  return rs;
}

/// d(S), the abelian subgroups of order d(S), and J(S) = <A(S)>.
struct ThompsonData {
  std::uint64_t d = 1;
  std::vector<PermGroup> witnesses;
  PermGroup j;
};

inline ThompsonData thompson(const PermGroup& S, const Caps& caps = default_caps()) {
  if (S.order() > 1 && prime_divisors(S.order()).size() != 1)
    throw std::invalid_argument("thompson: S is not a p-group");
  CayleyTable table(S, caps.subgroup_enumeration);
  auto abelian = table.abelian_subgroups();
  ThompsonData out;
  out.d = abelian.front().size();
  std::vector<std::size_t> gens;
  for (const auto& A : abelian) {
    if (A.size() != out.d)
      break;
    out.witnesses.push_back(table.to_group(A));
    auto a_gens = table.generators_of(A);
    gens.insert(gens.end(), a_gens.begin(), a_gens.end());
  }
  out.j = table.to_group(table.generate(gens));
  return out;
}

/// Invariant factors d_1 | d_2 | ... with one basis element per factor.
struct AbelianDecomp {
  std::vector<std::uint64_t> invariant_factors;
  std::vector<Permutation> basis;

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (auto d : invariant_factors)
      n *= d;
    return n;
  }
};

namespace detail {

// Basis of an abelian q-group with exponent partition `exps` (descending),
// chosen by backtracking over elements in lexicographic order.
inline bool extend_primary_basis(const std::vector<Permutation>& elems, std::uint64_t q,
                                 const std::vector<unsigned>& exps, std::size_t depth,
                                 std::vector<Permutation>& chosen,
                                 std::unordered_set<Permutation, PermutationHash>& span) {
  if (depth == exps.size())
    return true;
  std::uint64_t want = 1;
  for (unsigned e = 0; e < exps[depth]; ++e)
    want *= q;
  for (const auto& x : elems) {
    if (x.order() != want)
      continue;
    // <x> ∩ span = 1: x^(want/q) generates the socle of <x>.
    if (span.count(x.pow(static_cast<long long>(want / q))))
      continue;
    std::unordered_set<Permutation, PermutationHash> next;
    Permutation power = x.pow(0);
    for (std::uint64_t k = 0; k < want; ++k) {
      for (const auto& s : span)
        next.insert(s * power);
      power *= x;
    }
    chosen.push_back(x);
    auto saved = std::move(span);
    span = std::move(next);
    if (extend_primary_basis(elems, q, exps, depth + 1, chosen, span))
      return true;
    span = std::move(saved);
    chosen.pop_back();
  }
  return false;
}

} // namespace detail

inline AbelianDecomp abelian_decomp(const PermGroup& A) {
  if (!A.is_abelian())
    throw std::invalid_argument("abelian_decomp: group is not abelian");
  AbelianDecomp out;
  if (A.is_trivial())
    return out;
  auto elems = A.elements();
  std::sort(elems.begin(), elems.end());

  // Per prime: exponents e_1 >= e_2 >= ... from |Omega_k| counts, then a basis.
  std::vector<std::vector<std::uint64_t>> prime_powers;
  std::vector<std::vector<Permutation>> prime_bases;
  for (std::uint64_t q : prime_divisors(A.order())) {
    std::vector<Permutation> primary;
    for (const auto& x : elems)
      if (is_p_power(x.order(), q))
        primary.push_back(x);
    std::vector<unsigned> log_omega{0};
    std::uint64_t qk = 1;
    while (log_omega.back() < 64) {
      qk *= q;
      std::uint64_t count = 0;
      for (const auto& x : primary)
        if (qk % x.order() == 0)
          ++count;
      unsigned lg = 0;
      for (std::uint64_t c = count; c > 1; c /= q)
        ++lg;
      log_omega.push_back(lg);
      if (count == primary.size())
        break;
    }
    // number of cyclic factors with exponent >= k is log|Omega_k| - log|Omega_{k-1}|
    std::vector<unsigned> exps;
    for (std::size_t k = log_omega.size() - 1; k >= 1; --k) {
      unsigned at_least_k = log_omega[k] - log_omega[k - 1];
      unsigned at_least_next = k + 1 < log_omega.size() ? log_omega[k + 1] - log_omega[k] : 0;
      for (unsigned i = at_least_next; i < at_least_k; ++i)
        exps.push_back(static_cast<unsigned>(k));
    }
    std::vector<Permutation> chosen;
    std::unordered_set<Permutation, PermutationHash> span{A.identity()};
    if (!detail::extend_primary_basis(primary, q, exps, 0, chosen, span))
      throw InternalInconsistency("abelian_decomp: no basis found for primary component");
    std::vector<std::uint64_t> powers;
    for (unsigned e : exps) {
      std::uint64_t v = 1;
      for (unsigned i = 0; i < e; ++i)
        v *= q;
      powers.push_back(v);
    }
    prime_powers.push_back(std::move(powers));
    prime_bases.push_back(std::move(chosen));
  }

  // Combine primary components, largest factors first, then reverse.
  std::size_t rank = 0;
  for (const auto& pp : prime_powers)
    rank = std::max(rank, pp.size());
  for (std::size_t i = 0; i < rank; ++i) {
    std::uint64_t d = 1;
    Permutation b = A.identity();
    for (std::size_t k = 0; k < prime_powers.size(); ++k)
      if (i < prime_powers[k].size()) {
        d *= prime_powers[k][i];
        b *= prime_bases[k][i];
      }
    out.invariant_factors.push_back(d);
    out.basis.push_back(std::move(b));
  }
  std::reverse(out.invariant_factors.begin(), out.invariant_factors.end());
  std::reverse(out.basis.begin(), out.basis.end());
  return out;
}

/// [A, G] for A normalized by G.
inline PermGroup commutator_with(const PermGroup& A, const PermGroup& G) {
  require_same_degree(A, G);
  for (const auto& a : A.generators())
    for (const auto& g : G.generators())
      if (!A.contains(a.conjugate_by(g)))
        throw std::invalid_argument("commutator_with: A is not normalized by G");
  std::vector<Permutation> seed;
  for (const auto& a : A.generators())
    for (const auto& g : G.generators())
      seed.push_back(commutator(a, g));
  return normal_closure(join(A, G), std::move(seed));
}

/// Outcome of an exhaustive complement search in an abelian group.
struct ComplementResult {
  std::optional<PermGroup> complement;
  std::size_t subgroups_scanned = 0;   // subgroups B of A with B ∩ W = 1
  std::uint64_t largest_avoiding = 1;  // max |B| among them
};

/// Looks for B <= A with B ∩ W = 1 and |B||W| = |A|. Every subgroup meeting W
/// trivially is reachable through such subgroups, so the scan is exhaustive.
inline ComplementResult complement_search(const PermGroup& A, const PermGroup& W,
                                          const Caps& caps = default_caps()) {
  if (!A.is_abelian())
    throw std::invalid_argument("complement_search: A is not abelian");
  if (!W.is_subgroup_of(A))
    throw std::invalid_argument("complement_search: W is not a subgroup of A");
  if (A.order() > caps.complement_order)
    throw ResourceError("complement_order", caps.complement_order, A.order());
  ComplementResult out;
  const std::uint64_t want = A.order() / W.order();
  if (W.is_trivial()) {
    out.complement = A;
    out.subgroups_scanned = 1;
    out.largest_avoiding = A.order();
    return out;
  }
  CayleyTable table(A, caps.complement_order);
  ElementSet w = table.set_of(W);
  std::vector<ElementSet> found{table.trivial()};
  std::unordered_set<ElementSet, ElementSetHash> seen{table.trivial()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (found[i].size() == want) {
      out.complement = table.to_group(found[i]);
      break;
    }
    for (std::size_t x = 0; x < table.size(); ++x) {
      if (found[i].contains(x) || w.contains(x))
        continue;
      ElementSet next = table.closure(found[i], {x});
      if (next.intersect(w).size() != 1 || !seen.insert(next).second)
        continue;
      found.push_back(std::move(next));
    }
  }
  out.subgroups_scanned = found.size();
  for (const auto& b : found)
    out.largest_avoiding = std::max<std::uint64_t>(out.largest_avoiding, b.size());
  return out;
}

} // namespace sylsplit

#endif // SYLSPLIT_STRUCTURE_HPP
