#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nqr/graph.hpp"
#include "nqr/permgrp.hpp"
#include "nqr/rational.hpp"

namespace nqr {

/// One necessary condition on a graph with a complete normal quotient K_{m+1}.
struct ConstraintItem {
  int number = 0;
  std::string statement;
  BigInt lhs;
  BigInt rhs;
  bool applicable = true;  // item 5 is waived for complete multipartite graphs
  bool pass = false;
};

struct ConstraintReport {
  std::array<ConstraintItem, 5> items;
  bool all_pass() const;
};

/// Evaluates, for orbit size b, quotient valency m, multicover degree l:
///   1. (b-1) mu = l m (l-1)
///   2. (b-l) mu = l (l m - l - lambda)
///   3. mu (l-1) = l (l + lambda - m)
///   4. l | mu            (lhs = mu mod l, rhs = 0)
///   5. mu <= (m-1) l     (only when the graph is not complete multipartite)
ConstraintReport check_complete_quotient_constraints(std::int64_t b, std::int64_t m, std::int64_t ell,
                                                     std::int64_t lambda, std::int64_t mu,
                                                     bool complete_multipartite);

struct CompleteQuotientParams {
  std::int64_t m = 0;
  std::int64_t ell = 0;
  std::int64_t r = 0;  // mu / l
  std::int64_t b = 0;
  SrgParams derived;
  SpectralData spectral;
};

struct Infeasibility {
  std::string reason;
};

using Derivation = std::variant<CompleteQuotientParams, Infeasibility>;

/// Parameters forced by (m, l, r): b = (m l - m + r)/r, n = (m+1) b, k = m l,
/// lambda = (r-1) l + m - r, mu = r l, with eigenvalues m - r and -l.
/// Non-integral b (or coinciding eigenvalues) is reported as Infeasibility.
/// DomainError unless m >= 1, l >= 2, r >= 1.
Derivation derive_complete_quotient_params(std::int64_t m, std::int64_t ell, std::int64_t r);

/// m l (m+1)(l-1) / (m - r + l). Equals the standard multiplicity of theta
/// only when r = 1; in general the standard value is this divided by r.
Rational closed_form_m_theta(std::int64_t m, std::int64_t ell, std::int64_t r);

/// m/(m-r+l) * (m^2 l - m^2 + 2rm + m l - m + l r m - r^2 + r).
/// A published expansion of m_tau that does not match the standard formula
/// ((n-1) theta + k)/(theta - tau); kept for comparison only.
Rational expanded_m_tau(std::int64_t m, std::int64_t ell, std::int64_t r);

struct FeasibleRecord {
  CompleteQuotientParams params;
  std::vector<std::string> family_matches;  // {"unknown"} when nothing matches
  bool complete_multipartite = false;
};

/// Known families whose parameter tuple equals p.
std::vector<std::string> family_matches(const SrgParams& p);

/// Every (m, l, r) in [1,m_max] x [2,l_max] x [1,r_max], in that order, whose
/// derived tuple passes: integral b >= l, lambda >= 0, integral nonnegative
/// multiplicities, k(k-lambda-1) = mu(n-k-1), and mu <= (m-1) l unless the
/// tuple is complete multipartite.
std::vector<FeasibleRecord> enumerate_feasible(std::int64_t m_max, std::int64_t ell_max, std::int64_t r_max);

enum class QuotientClass {
  complete_bipartite,
  complete_multipartite,
  k33_minus_3k3,
  multipartite_minus,
  unclassified,
};

std::string_view to_string(QuotientClass c);

struct Classification {
  QuotientClass tag = QuotientClass::unclassified;
  std::string label;
  SrgParams params;
  std::int64_t m = 0;
  std::int64_t ell = 0;
  std::int64_t b = 0;
};

/// Identifies a ve-srg with a complete normal quotient K_{m+1} under
/// (G, N). Throws DomainError if the hypotheses fail or the quotient is not
/// complete, TheoremViolation if a forced isomorphism type is not found.
Classification classify_small_complete_quotient(const Graph& gamma, const PermGroup& g, const PermGroup& n);

}  // namespace nqr
