#include "nqr/feasibility.hpp"

#include <algorithm>
#include <future>

#include "nqr/errors.hpp"
#include "nqr/families.hpp"
#include "nqr/galois.hpp"
#include "nqr/quotient.hpp"

namespace nqr {

namespace {

ConstraintItem equation(int number, std::string statement, BigInt lhs, BigInt rhs) {
  ConstraintItem item;
  item.number = number;
  item.statement = std::move(statement);
  item.pass = lhs == rhs;
  item.lhs = std::move(lhs);
  item.rhs = std::move(rhs);
  return item;
}

BigInt isqrt_exact(const BigInt& v, bool& exact) {
  BigInt s = sqrt(v);
  exact = s * s == v;
  return s;
}

}  // namespace

bool ConstraintReport::all_pass() const {
  for (const auto& item : items)
    if (item.applicable && !item.pass) return false;
  return true;
}

ConstraintReport check_complete_quotient_constraints(std::int64_t b, std::int64_t m, std::int64_t ell,
                                                     std::int64_t lambda, std::int64_t mu,
                                                     bool complete_multipartite) {
  const BigInt B = b, M = m, L = ell, LAM = lambda, MU = mu;
  ConstraintReport report;
  report.items[0] = equation(1, "(b-1)mu = l m (l-1)", (B - 1) * MU, L * M * (L - 1));
  report.items[1] = equation(2, "(b-l)mu = l(l m - l - lambda)", (B - L) * MU, L * (L * M - L - LAM));
  report.items[2] = equation(3, "mu(l-1) = l(l + lambda - m)", MU * (L - 1), L * (L + LAM - M));

  ConstraintItem& div = report.items[3];
  div.number = 4;
  div.statement = "l | mu";
  div.lhs = ell == 0 ? MU : BigInt(MU % L);
  div.rhs = 0;
  div.pass = ell != 0 && div.lhs == 0;

  ConstraintItem& bound = report.items[4];
  bound.number = 5;
  bound.statement = "mu <= (m-1) l";
  bound.lhs = MU;
  bound.rhs = (M - 1) * L;
  bound.applicable = !complete_multipartite;
  bound.pass = bound.lhs <= bound.rhs;
  return report;
}

Derivation derive_complete_quotient_params(std::int64_t m, std::int64_t ell, std::int64_t r) {
  if (m < 1 || ell < 2 || r < 1)
    throw DomainError("derive_complete_quotient_params: need m >= 1, l >= 2, r >= 1");

  const std::int64_t num = m * ell - m + r;
  if (num % r != 0)
    return Infeasibility{"b = (m l - m + r)/r = " + std::to_string(num) + "/" + std::to_string(r) +
                         " is not an integer"};
  if (r == m + ell) return Infeasibility{"theta = m - r equals tau = -l"};

  CompleteQuotientParams out;
  out.m = m;
  out.ell = ell;
  out.r = r;
  out.b = num / r;
  out.derived = SrgParams{(m + 1) * out.b, m * ell, (r - 1) * ell + m - r, r * ell};

  const auto& p = out.derived;
  SpectralData& s = out.spectral;
  s.theta = Rational(m - r);
  s.tau = Rational(-ell);
  s.discriminant = BigInt(p.lambda - p.mu) * (p.lambda - p.mu) + 4 * BigInt(p.k - p.mu);
  const BigInt expected = BigInt(m + ell - r) * (m + ell - r);
  if (s.discriminant != expected)
    throw TheoremViolation("discriminant " + to_string(s.discriminant) + " != (m+l-r)^2 = " +
                           to_string(expected));
  bool exact = false;
  const BigInt root = isqrt_exact(s.discriminant, exact);
  const Rational hi(BigInt(p.lambda - p.mu) + root, 2), lo(BigInt(p.lambda - p.mu) - root, 2);
  // theta < tau once r > m + l; the roots are compared as a pair.
  if (!exact || !((hi == s.theta && lo == s.tau) || (hi == s.tau && lo == s.theta)))
    throw TheoremViolation("eigenvalues of the derived tuple are not m - r and -l");

  const Rational n1(p.n - 1), k(p.k);
  s.m_theta = (n1 * s.tau + k) / (s.tau - s.theta);
  s.m_tau = (n1 * s.theta + k) / (s.theta - s.tau);
  return out;
}

Rational closed_form_m_theta(std::int64_t m, std::int64_t ell, std::int64_t r) {
  if (m - r + ell == 0) throw DomainError("closed_form_m_theta: m - r + l = 0");
  return Rational(BigInt(m) * ell * (m + 1) * (ell - 1), BigInt(m - r + ell));
}

Rational expanded_m_tau(std::int64_t m, std::int64_t ell, std::int64_t r) {
  if (m - r + ell == 0) throw DomainError("expanded_m_tau: m - r + l = 0");
  const BigInt M = m, L = ell, R = r;
  const BigInt poly = M * M * L - M * M + 2 * R * M + M * L - M + L * R * M - R * R + R;
  return Rational(M, M - R + L) * Rational(poly);
}

std::vector<std::string> family_matches(const SrgParams& p) {
  std::vector<std::string> out;
  const auto add_if = [&](bool cond, std::string name) {
    if (cond) out.push_back(std::move(name));
  };
  for (std::int64_t b = 2; b * b <= p.n; ++b) {
    add_if(p == SrgParams{b * b, 2 * (b - 1), b - 2, 2}, "box(" + std::to_string(b) + ")");
    if (b >= 3)
      add_if(p == SrgParams{b * b, (b - 1) * (b - 1), (b - 2) * (b - 2), (b - 1) * (b - 2)},
             "multipartite_minus(" + std::to_string(b) + ")");
  }
  for (std::int64_t parts = 2; parts <= p.n; ++parts) {
    if (p.n % parts != 0) continue;
    const std::int64_t size = p.n / parts;
    if (size < 2) continue;
    add_if(p == SrgParams{p.n, p.n - size, p.n - 2 * size, p.n - size},
           "complete_multipartite(" + std::to_string(parts) + "," + std::to_string(size) + ")");
  }
  for (std::int64_t v = 5; v * (v - 1) / 2 <= p.n; ++v) {
    const std::int64_t nn = v * (v - 1) / 2;
    add_if(p == SrgParams{nn, (v - 2) * (v - 3) / 2, (v - 4) * (v - 5) / 2, (v - 3) * (v - 4) / 2},
           "kneser2(" + std::to_string(v) + ")");
  }
  if (p.n % 4 == 1 && prime_power(static_cast<std::uint64_t>(p.n)))
    add_if(p == SrgParams{p.n, (p.n - 1) / 2, (p.n - 5) / 4, (p.n - 1) / 4},
           "paley(" + std::to_string(p.n) + ")");
  if (out.empty()) out.push_back("unknown");
  return out;
}

namespace {

bool nonnegative_integer(const Rational& q) { return is_integral(q) && q >= 0; }

std::vector<FeasibleRecord> sweep_m(std::int64_t m, std::int64_t ell_max, std::int64_t r_max) {
  std::vector<FeasibleRecord> out;
  for (std::int64_t ell = 2; ell <= ell_max; ++ell) {
    for (std::int64_t r = 1; r <= r_max; ++r) {
      const Derivation d = derive_complete_quotient_params(m, ell, r);
      const auto* params = std::get_if<CompleteQuotientParams>(&d);
      if (params == nullptr) continue;
      const SrgParams& p = params->derived;
      if (params->b < ell || p.lambda < 0) continue;
      if (!nonnegative_integer(params->spectral.m_theta) || !nonnegative_integer(params->spectral.m_tau))
        continue;
      if (BigInt(p.k) * (p.k - p.lambda - 1) != BigInt(p.mu) * (p.n - p.k - 1)) continue;
      // mu = m l exactly when the tuple is K_{(m+1)[l]}.
      const bool cm = r == m;
      if (!cm && p.mu > (m - 1) * ell) continue;
      out.push_back(FeasibleRecord{*params, family_matches(p), cm});
    }
  }
  return out;
}

}  // namespace

std::vector<FeasibleRecord> enumerate_feasible(std::int64_t m_max, std::int64_t ell_max, std::int64_t r_max) {
  if (m_max < 1 || ell_max < 1 || r_max < 1) throw DomainError("enumerate_feasible: bounds must be >= 1");
  std::vector<std::future<std::vector<FeasibleRecord>>> parts;
  for (std::int64_t m = 1; m <= m_max; ++m)
    parts.push_back(std::async(std::launch::async, sweep_m, m, ell_max, r_max));
  std::vector<FeasibleRecord> out;
  for (auto& part : parts) {
    auto chunk = part.get();
    out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  }
  return out;
}

std::string_view to_string(QuotientClass c) {
  switch (c) {
    case QuotientClass::complete_bipartite: return "complete-bipartite";
    case QuotientClass::complete_multipartite: return "complete-multipartite";
    case QuotientClass::k33_minus_3k3: return "K_{3[3]}−3K₃";
    case QuotientClass::multipartite_minus: return "multipartite-minus";
    case QuotientClass::unclassified: return "unclassified";
  }
  return "unclassified";
}

namespace {

bool is_complete_bipartite(const Graph& g, const Partition& sides) {
  if (sides.size() != 2) return false;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const bool same = std::binary_search(sides[0].begin(), sides[0].end(), u) ==
                        std::binary_search(sides[0].begin(), sides[0].end(), v);
      if (g.adjacent(u, v) == same) return false;
    }
  return true;
}

}  // namespace

Classification classify_small_complete_quotient(const Graph& gamma, const PermGroup& g, const PermGroup& n) {
  const Lemma23Report report = check_lemma23(gamma, g, n);
  if (!is_edge_transitive(g, gamma)) throw DomainError("classify: G is not edge-transitive on the graph");
  const auto params = srg_params(gamma);
  if (!params) throw DomainError("classify: graph is not strongly regular");
  if (!report.multicover) throw DomainError("classify: orbits of N do not form a multicover");

  const QuotientResult q = quotient_graph(gamma, n);
  if (!is_complete(q.quotient)) throw DomainError("classify: normal quotient is not complete");
  if (!q.b) throw DomainError("classify: orbits of N have unequal sizes");

  Classification out;
  out.params = *params;
  out.m = static_cast<std::int64_t>(q.quotient.order()) - 1;
  out.ell = static_cast<std::int64_t>(*report.multicover);
  out.b = static_cast<std::int64_t>(*q.b);
  const std::string b_str = std::to_string(out.b);

  if (out.m == 1) {
    if (!is_complete_bipartite(gamma, q.orbits))
      throw TheoremViolation("quotient K_2 but graph is not K_{" + b_str + "," + b_str + "}");
    out.tag = QuotientClass::complete_bipartite;
    out.label = "K_{" + b_str + "," + b_str + "}";
    return out;
  }

  if (const auto shape = is_complete_multipartite(gamma);
      shape && shape->parts == q.quotient.order() && shape->part_size == *q.b) {
    out.tag = QuotientClass::complete_multipartite;
    out.label = "K_{" + std::to_string(shape->parts) + "[" + b_str + "]}";
    return out;
  }

  if (out.m == 2) {
    if (out.b != 3 || !are_isomorphic_small(gamma, multipartite_minus(3).graph))
      throw TheoremViolation("quotient K_3 but graph is neither K_{3[" + b_str + "]} nor K_{3[3]}-3K_3");
    out.tag = QuotientClass::k33_minus_3k3;
    out.label = std::string(to_string(out.tag));
    return out;
  }

  if (out.params.mu == (out.m - 1) * out.ell) {
    if (out.b != out.ell + 1 || out.b != out.m + 1)
      throw TheoremViolation("mu = (m-1)l but b = " + b_str + " differs from l+1 or m+1");
    if (!are_isomorphic_small(gamma, multipartite_minus(static_cast<std::size_t>(out.b)).graph))
      throw TheoremViolation("mu = (m-1)l but graph is not K_{" + b_str + "[" + b_str + "]}-" + b_str + "K_" +
                             b_str);
    out.tag = QuotientClass::multipartite_minus;
    out.label = "K_{" + b_str + "[" + b_str + "]}-" + b_str + "K_" + b_str;
    return out;
  }

  out.tag = QuotientClass::unclassified;
  out.label = "srg(" + std::to_string(out.params.n) + "," + std::to_string(out.params.k) + "," +
              std::to_string(out.params.lambda) + "," + std::to_string(out.params.mu) + ")";
  return out;
}

}  // namespace nqr
