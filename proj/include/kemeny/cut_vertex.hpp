#pragma once

// Algebra of 1-sums G = H1 (+)_v H2 at a shared cut vertex v.

#include "kemeny/numeric.hpp"

namespace kemeny {

/// What one branch of a 1-sum contributes at the shared vertex v.
struct CutSummary {
  BigInt tree_count = 1;
  BigInt edge_count = 0;
  BigInt dfd = 0;               // d^T F d
  BigInt moment_numerator = 0;  // d^T f^v = tau * mu(H, v)

  Rational kemeny() const { return Rational(dfd, 4 * edge_count * tree_count); }
  Rational moment() const { return Rational(moment_numerator, tree_count); }
};

/// d^T F d of the 1-sum of two branches glued at their cut vertices.
inline BigInt one_sum_dfd(const CutSummary& h1, const CutSummary& h2) {
  return h2.tree_count * h1.dfd + h1.tree_count * h2.dfd + 4 * h2.tree_count * h2.edge_count * h1.moment_numerator +
         4 * h1.tree_count * h1.edge_count * h2.moment_numerator;
}

/// Summary of the 1-sum at the identified vertex; moments add at a cut vertex.
inline CutSummary compose(const CutSummary& h1, const CutSummary& h2) {
  return {h1.tree_count * h2.tree_count, h1.edge_count + h2.edge_count, one_sum_dfd(h1, h2),
          h2.tree_count * h1.moment_numerator + h1.tree_count * h2.moment_numerator};
}

/// Kemeny's constant, moment at the cut vertex and edge count of a branch.
struct BranchValues {
  Rational kemeny;
  Rational moment;
  BigInt edges;
};

/// kappa(G~) - kappa(G) where G = G1 (+)_v G2 and G~ adds one edge inside G1.
/// `g1_tilde.edges` must be g1.edges + 1. A branch G2 without edges
/// contributes nothing.
inline Rational cut_vertex_delta(const BranchValues& g1, const BranchValues& g1_tilde, const BranchValues& g2) {
  detail::require(g1_tilde.edges == g1.edges + 1, "g1_tilde must have exactly one more edge than g1");
  const Rational delta1 = g1_tilde.kemeny - g1.kemeny;
  if (g2.edges == 0) return delta1;
  const Rational m2(g2.edges);
  const Rational m(g1.edges + g2.edges);
  const Rational branch = g2.moment - g2.kemeny;
  return delta1 + m2 / (m + 1) * (g1_tilde.moment - g1_tilde.kemeny - branch) -
         m2 / m * (g1.moment - g1.kemeny - branch);
}

}  // namespace kemeny
