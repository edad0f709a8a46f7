#ifndef SYLSPLIT_THEOREM_HPP
#define SYLSPLIT_THEOREM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "transfer.hpp"

namespace sylsplit {

/// Which hypothesis of the splitting theorem applies, strongest first.
enum class CaseTag { sylow_normal, solvable, z_in_o22, odd_p, z_in_opf, none };

inline std::string_view to_string(CaseTag c) {
  switch (c) {
  case CaseTag::sylow_normal: return "sylow_normal";
  case CaseTag::solvable: return "solvable";
  case CaseTag::z_in_o22: return "z_in_o22";
  case CaseTag::odd_p: return "odd_p";
  case CaseTag::z_in_opf: return "z_in_opf";
  case CaseTag::none: return "none";
  }
  return "none";
}

inline CaseTag case_tag_from_string(std::string_view s) {
  for (CaseTag c : {CaseTag::sylow_normal, CaseTag::solvable, CaseTag::z_in_o22, CaseTag::odd_p,
                    CaseTag::z_in_opf, CaseTag::none})
    if (to_string(c) == s)
      return c;
  throw std::invalid_argument("unknown case tag '" + std::string(s) + "'");
}

enum class Verdict { verified, counterexample, hypothesis_not_satisfied, error };

inline std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::verified: return "verified";
  case Verdict::counterexample: return "counterexample";
  case Verdict::hypothesis_not_satisfied: return "hypothesis_not_satisfied";
  case Verdict::error: return "error";
  }
  return "error";
}

inline Verdict verdict_from_string(std::string_view s) {
  for (Verdict v : {Verdict::verified, Verdict::counterexample, Verdict::hypothesis_not_satisfied, Verdict::error})
    if (to_string(v) == s)
      return v;
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

/// G with a fixed Sylow p-subgroup S and its center.
struct Setting {
  PermGroup G;
  std::uint64_t p = 2;
  PermGroup S;
  PermGroup ZS;
};

inline Setting make_setting(const PermGroup& G, std::uint64_t p) {
  PermGroup S = sylow(G, p);
  PermGroup ZS = center(S);
  return {G, p, std::move(S), std::move(ZS)};
}

inline Setting make_setting(const PermGroup& G, std::uint64_t p, const PermGroup& S) {
  if (!S.is_subgroup_of(G) || S.order() != p_part(G.order(), p))
    throw std::invalid_argument("S is not a Sylow " + std::to_string(p) + "-subgroup of G");
  return {G, p, S, center(S)};
}

struct SplitReport {
  std::string group_name;
  std::uint64_t p = 0;
  CaseTag case_tag = CaseTag::none;
  std::string chosen_h;
  SplitWitness witness;
  AbelianDecomp zs_type;
  AbelianDecomp w_type;
  AbelianDecomp kernel_type;
  Verdict verdict = Verdict::error;
  // Diagnostic mode only.
  std::optional<PermGroup> complement;
  std::size_t refutation_subgroups_scanned = 0;
};

/// Strongest applicable tag in the order sylow_normal > solvable > z_in_o22 > odd_p > none.
inline CaseTag classify_case(const Setting& st, const Caps& caps = default_caps()) {
  if (st.S.is_trivial() || is_normal(st.S, st.G))
    return CaseTag::sylow_normal;
  bool solvable = is_solvable(st.G);
  bool constrained = false;
  if (solvable || st.p == 2)
    constrained = radical_series(st.G, st.p, caps).o_p_prime_p.contains_all(st.ZS.generators());
  if (solvable) {
    if (!constrained)
      throw InternalInconsistency("solvable group with Z(S) outside O_{p',p}(G)");
    return CaseTag::solvable;
  }
  if (st.p == 2 && constrained)
    return CaseTag::z_in_o22;
  if (st.p % 2 == 1)
    return CaseTag::odd_p;
  return CaseTag::none;
}

inline CaseTag classify_case(const PermGroup& G, std::uint64_t p, const Caps& caps = default_caps()) {
  return classify_case(make_setting(G, p), caps);
}

namespace detail {

inline void finish_types(SplitReport& r, const PermGroup& ZS) {
  r.zs_type = abelian_decomp(ZS);
  r.w_type = abelian_decomp(r.witness.w);
  r.kernel_type = abelian_decomp(r.witness.kernel);
}

/// Hypotheses failed: compute W and decide by exhaustive complement search.
inline SplitReport diagnose(const Setting& st, PermGroup w, SplitReport r, const Caps& caps) {
  r.case_tag = CaseTag::none;
  r.chosen_h = "none (diagnostic)";
  r.witness.w = std::move(w);
  ComplementResult cr = complement_search(st.ZS, r.witness.w, caps);
  r.refutation_subgroups_scanned = cr.subgroups_scanned;
  r.complement = cr.complement;
  r.witness.image = r.witness.w;
  r.witness.kernel = cr.complement.value_or(PermGroup::trivial(st.G.degree()));
  certify_direct_product(r.witness, st.ZS);
  r.verdict = cr.complement ? Verdict::hypothesis_not_satisfied : Verdict::counterexample;
  finish_types(r, st.ZS);
  return r;
}

} // namespace detail

/// Runs the splitting pipeline. With `diagnostic` false, an unsatisfied
/// hypothesis throws HypothesisError; otherwise W_G(S) is computed anyway and
/// a complement is searched for.
inline SplitReport verify_wgs(const Setting& st, bool diagnostic = true, const Caps& caps = default_caps()) {
  SplitReport r;
  r.p = st.p;
  r.case_tag = classify_case(st, caps);
  switch (r.case_tag) {
  case CaseTag::none:
    if (!diagnostic)
      throw HypothesisError("no hypothesis of the splitting theorem holds for p = " + std::to_string(st.p));
    return detail::diagnose(st, weakly_closed_subgroup(st.G, st.S), std::move(r), caps);
  case CaseTag::sylow_normal:
  case CaseTag::solvable:
  case CaseTag::z_in_o22:
    r.chosen_h = "G";
    r.witness = split_via_transfer(st.G, st.S, st.p, caps);
    break;
  case CaseTag::odd_p: {
    r.chosen_h = "N_G(J(S))";
    ThompsonData td = thompson(st.S, caps);
    PermGroup H = normalizer(st.G, td.j);
    PermGroup ZJ = center(td.j);
    bool chain = st.ZS.is_subgroup_of(ZJ) &&
                 radical_series(H, st.p, caps).o_p_prime_p.contains_all(td.j.generators());
    if (!chain)
      throw InternalInconsistency("Z(S) <= Z(J(S)) <= J(S) <= O_{p',p}(N_G(J(S))) fails");
    r.witness = split_via_transfer(H, st.S, st.p, caps);
    PermGroup WG = weakly_closed_subgroup(st.G, st.S);
    if (!(WG == r.witness.w))
      throw InternalInconsistency("W_G(S) differs from W_H(S) for H = N_G(J(S))");
    r.witness.w = WG;
    certify_direct_product(r.witness, st.ZS);
    break;
  }
  case CaseTag::z_in_opf:
    throw std::logic_error("z_in_opf is a fusion-system tag");
  }
  if (!r.witness.holds())
    throw InternalInconsistency("direct-product certificate failed under the theorem's hypotheses");
  r.verdict = Verdict::verified;
  detail::finish_types(r, st.ZS);
  return r;
}

inline SplitReport verify_wgs(const PermGroup& G, std::uint64_t p, bool diagnostic = true,
                              const Caps& caps = default_caps()) {
  return verify_wgs(make_setting(G, p), diagnostic, caps);
}

/// Z(S) = (Z(S) ∩ Z(G)) x [Z(S), G] for S normal in G.
struct NormalSylowReport {
  PermGroup central_part;
  PermGroup commutator_part;
  bool direct_product_ok = false;
  bool w_matches_central_part = false;

  bool holds() const noexcept { return direct_product_ok && w_matches_central_part; }
};

inline NormalSylowReport verify_normal_sylow(const Setting& st) {
  if (!is_normal(st.S, st.G))
    throw HypothesisError("verify_normal_sylow: S is not normal in G");
  NormalSylowReport r;
  r.central_part = subgroup_intersection(st.ZS, center(st.G));
  r.commutator_part = commutator_with(st.ZS, st.G);
  PermGroup meet = subgroup_intersection(r.central_part, r.commutator_part);
  r.direct_product_ok = r.commutator_part.is_subgroup_of(st.ZS) && meet.is_trivial() &&
                        r.central_part.order() * r.commutator_part.order() == st.ZS.order();
  r.w_matches_central_part = weakly_closed_subgroup(st.G, st.S) == r.central_part;
  return r;
}

inline NormalSylowReport verify_normal_sylow(const PermGroup& G, std::uint64_t p) {
  return verify_normal_sylow(make_setting(G, p));
}

enum class CheckOutcome { pass, fail, not_applicable };

inline std::string_view to_string(CheckOutcome c) {
  switch (c) {
  case CheckOutcome::pass: return "pass";
  case CheckOutcome::fail: return "fail";
  case CheckOutcome::not_applicable: return "n/a";
  }
  return "n/a";
}

inline CheckOutcome check_outcome_from_string(std::string_view s) {
  for (CheckOutcome c : {CheckOutcome::pass, CheckOutcome::fail, CheckOutcome::not_applicable})
    if (to_string(c) == s)
      return c;
  throw std::invalid_argument("unknown check outcome '" + std::string(s) + "'");
}

struct CheckResult {
  CheckOutcome outcome = CheckOutcome::not_applicable;
  std::string detail;
};

struct CrossCheckReport {
  CheckResult zp_star;          // W_G(S) = Z(S) ∩ Z_p^*(G)
  CheckResult weak_closure_control; // p odd: W_G(S) = W_H(S) = O_p(Z(H)), H = N_G(J(S))
  CheckResult quotient_naturality;  // O_{p'}(G) != 1: z -> zN carries W onto W
};

namespace detail {

inline CheckResult make_check(bool ok, std::string detail) {
  return {ok ? CheckOutcome::pass : CheckOutcome::fail, std::move(detail)};
}

inline std::string order_text(const PermGroup& X) { return std::to_string(X.order()); }

/// Elements of p-power order in an abelian group.
inline PermGroup abelian_p_part(const PermGroup& A, std::uint64_t p) {
  std::vector<Permutation> gens;
  A.for_each_element([&](const Permutation& x) {
    if (is_p_power(x.order(), p))
      gens.push_back(x);
  });
  return PermGroup(A.degree(), std::move(gens));
}

} // namespace detail

/// Quotient naturality: z -> zN is a bijection Z(S) -> Z(SN/N) taking
/// W_G(S) onto W_{G/N}(SN/N).
inline CheckResult check_quotient_naturality(const Setting& st, const PermGroup& N, const Caps& caps = default_caps()) {
  Quotient q(st.G, N, caps);
  PermGroup Sq = q.image(st.S);
  PermGroup ZSq = center(Sq);
  std::unordered_set<Permutation, PermutationHash> images;
  bool into = true;
  st.ZS.for_each_element([&](const Permutation& z) {
    Permutation zq = q.image(z);
    into = into && ZSq.contains(zq);
    images.insert(std::move(zq));
  });
  bool bijective = into && images.size() == st.ZS.order() && ZSq.order() == st.ZS.order();
  PermGroup W = weakly_closed_subgroup(st.G, st.S);
  PermGroup Wq = weakly_closed_subgroup(q.group(), Sq);
  PermGroup W_image = q.image(W);
  bool carries = W_image == Wq;
  return detail::make_check(bijective && carries,
                            "|N| = " + detail::order_text(N) + ", |Z(S)| = " + detail::order_text(st.ZS) +
                                ", |Z(SN/N)| = " + detail::order_text(ZSq) + ", |W| = " + detail::order_text(W) +
                                ", |W_{G/N}| = " + detail::order_text(Wq));
}

inline CrossCheckReport cross_checks(const Setting& st, const Caps& caps = default_caps()) {
  CrossCheckReport out;
  PermGroup W = weakly_closed_subgroup(st.G, st.S);
  RadicalSeries rs = radical_series(st.G, st.p, caps);

  PermGroup rhs = subgroup_intersection(st.ZS, rs.z_p_star);
  out.zp_star = detail::make_check(W == rhs, "|W_G(S)| = " + detail::order_text(W) +
                                                 ", |Z(S) ∩ Z_p^*(G)| = " + detail::order_text(rhs));

  if (st.p % 2 == 1 && !st.S.is_trivial()) {
    ThompsonData td = thompson(st.S, caps);
    PermGroup H = normalizer(st.G, td.j);
    PermGroup WH = weakly_closed_subgroup(H, st.S);
    PermGroup OpZH = detail::abelian_p_part(center(H), st.p);
    out.weak_closure_control =
        detail::make_check(W == WH && WH == OpZH, "|W_G(S)| = " + detail::order_text(W) + ", |W_H(S)| = " +
                                                      detail::order_text(WH) + ", |O_p(Z(H))| = " +
                                                      detail::order_text(OpZH) + ", |H| = " + detail::order_text(H));
  } else {
    out.weak_closure_control = {CheckOutcome::not_applicable, "p = 2"};
  }

  if (!rs.o_p_prime.is_trivial())
    out.quotient_naturality = check_quotient_naturality(st, rs.o_p_prime, caps);
  else
    out.quotient_naturality = {CheckOutcome::not_applicable, "O_{p'}(G) = 1"};
  return out;
}

inline CrossCheckReport cross_checks(const PermGroup& G, std::uint64_t p, const Caps& caps = default_caps()) {
  return cross_checks(make_setting(G, p), caps);
}

/// A6 extended by a cyclic group <a> of order 4 acting as the transposition
/// (5,6), with its explicit Sylow 2-subgroup.
struct A6Example {
  PermGroup G;
  PermGroup S;
  Permutation a;
  Permutation z;
  SplitReport report;
};

inline A6Example build_a6_example(const Caps& caps = default_caps()) {
  constexpr std::size_t degree = 10;
  auto P = [](std::string_view s) { return parse_cycles(s, degree); };
  A6Example ex;
  ex.a = P("(5,6)(7,8,9,10)");
  ex.z = P("(1,2)(3,4)");
  ex.G = PermGroup(degree, {P("(1,2,3,4,5)"), P("(4,5,6)"), ex.a});
  ex.S = PermGroup(degree, {P("(1,3)(2,4)"), P("(1,2)(5,6)"), ex.a});
  auto fail = [](const std::string& what) { throw InternalInconsistency("A6 example construction: " + what); };
  if (ex.a.order() != 4)
    fail("a does not have order 4");
  if (ex.G.order() != 1440)
    fail("|G| = " + std::to_string(ex.G.order()) + ", expected 1440");
  if (ex.S.order() != 32 || !ex.S.is_subgroup_of(ex.G))
    fail("S is not a subgroup of order 32");
  Permutation t = P("(5,6)");
  for (std::string_view gen : {"(1,2,3,4,5)", "(4,5,6)"})
    if (P(gen).conjugate_by(ex.a) != P(gen).conjugate_by(t))
      fail("conjugation by a does not act on A6 as (5,6)");
  Permutation a2 = ex.a * ex.a;
  for (const auto& g : ex.G.generators())
    if (a2 * g != g * a2)
      fail("a^2 is not central");
  ex.report = verify_wgs(make_setting(ex.G, 2, ex.S), true, caps);
  ex.report.group_name = "a6-c4-example";
  return ex;
}

} // namespace sylsplit

#endif // SYLSPLIT_THEOREM_HPP
