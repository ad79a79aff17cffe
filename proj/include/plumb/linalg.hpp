#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "plumb/errors.hpp"
#include "plumb/graph.hpp"
#include "plumb/matrix.hpp"

namespace plumb {

/// Sylvester certificate: Delta_1..Delta_n and whether (-1)^k Delta_k > 0 for all k.
struct DefinitenessCertificate {
  std::vector<Rational> minors;
  bool verdict = false;
};

/// Exact determinants of the top-left k x k blocks, k = 1..n.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

/// Throws plumb::Error for a non-symmetric matrix.
DefinitenessCertificate is_negative_definite(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

/// Counts of positive, negative and zero entries of a diagonal congruent to m
/// (Sylvester's law of inertia). Requires a symmetric matrix.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
Inertia inertia(const RationalMatrix& m);

/// Exact solution of m x = b by rational Gaussian elimination with
/// largest-magnitude partial pivoting. The result is checked by substitution.
/// Throws SingularMatrixError naming the elimination stage with no pivot.
class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(std::size_t stage)
      : Error("singular matrix: no nonzero pivot at elimination stage " + std::to_string(stage + 1)),
        stage_(stage) {}
  std::size_t stage() const noexcept { return stage_; }

 private:
  std::size_t stage_;
};
RationalVector solve(const RationalMatrix& m, const RationalVector& b);

/// z with -Q z = area. Refuses (plumb::Error) unless Q is negative definite;
/// throws InvariantError if some z_i <= 0, which Q's shape rules out.
RationalVector weight_vector(const RationalMatrix& q, const RationalVector& area);
RationalVector weight_vector(const PlumbingGraph& g);

/// True iff every entry of Q x is <= 0, i.e. (x, E_i) <= 0 for all i.
/// Q must be symmetric, negative definite, with nonnegative off-diagonal entries.
bool lemma_cone_check(const RationalMatrix& q, const RationalVector& x);

/// Seeded instance generator: off-diagonals uniform in [0, max_mult], diagonal
/// -(row off-diagonal sum + t_i) with t_i uniform in [1, 3]. Strict diagonal
/// dominance with a negative diagonal makes the result negative definite.
RationalMatrix random_negdef_graph_matrix(std::size_t n, long max_mult, std::uint64_t seed);

}  // namespace plumb
