#include "plumb/linalg.hpp"

#include <utility>

#include "plumb/random.hpp"

namespace plumb {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error("matrix literal is not square");
    for (long v : row) data_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RationalMatrix RationalMatrix::leading_block(std::size_t k) const {
  RationalMatrix out(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
  }
  return out;
}

RationalVector operator*(const RationalMatrix& m, const RationalVector& x) {
  if (x.size() != m.size()) throw Error("dimension mismatch in matrix-vector product");
  RationalVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < m.size(); ++j) acc += m(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& m) {
  RationalMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = -m(i, j);
  }
  return out;
}

namespace {

std::size_t largest_pivot_row(const RationalMatrix& a, std::size_t col) {
  std::size_t best = col;
  for (std::size_t r = col + 1; r < a.size(); ++r) {
    if (abs(a(r, col)) > abs(a(best, col))) best = r;
  }
  return best;
}

void swap_rows(RationalMatrix& a, std::size_t r1, std::size_t r2) {
  for (std::size_t j = 0; j < a.size(); ++j) std::swap(a(r1, j), a(r2, j));
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
  RationalMatrix a = m;
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = largest_pivot_row(a, k);
    if (sgn(a(p, k)) == 0) return 0;
    if (p != k) {
      swap_rows(a, p, k);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      const Rational f = a(r, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(r, j) -= f * a(k, j);
    }
  }
  return det;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
  // Unpivoted elimination keeps every leading block intact, so Delta_k is the
  // running product of pivots until the first zero pivot; past that point each
  // remaining minor is computed directly.
  const std::size_t n = m.size();
  std::vector<Rational> minors;
  minors.reserve(n);
  RationalMatrix a = m;
  Rational running = 1;
  std::size_t k = 0;
  for (; k < n; ++k) {
    if (sgn(a(k, k)) == 0) break;
    running *= a(k, k);
    minors.push_back(running);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      const Rational f = a(r, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(r, j) -= f * a(k, j);
    }
  }
  for (; k < n; ++k) minors.push_back(determinant(m.leading_block(k + 1)));
  return minors;
}

DefinitenessCertificate is_negative_definite(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw Error("definiteness test needs a symmetric matrix");
  DefinitenessCertificate cert;
  cert.minors = leading_principal_minors(m);
  cert.verdict = true;
  for (std::size_t k = 0; k < cert.minors.size(); ++k) {
    // (-1)^(k+1) Delta_{k+1} > 0
    const int expected = (k % 2 == 0) ? -1 : 1;
    if (sgn(cert.minors[k]) != expected) cert.verdict = false;
  }
  return cert;
}

Inertia inertia(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw Error("inertia needs a symmetric matrix");
  RationalMatrix a = m;
  const std::size_t n = a.size();
  Inertia out;
  auto sym_swap = [&](std::size_t i, std::size_t j) {
    swap_rows(a, i, j);
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, p)) == 0) ++p;
    if (p == n) {
      // zero diagonal: fold a nonzero off-diagonal into row/column k
      std::size_t i = n, j = n;
      for (std::size_t r = k; r < n && i == n; ++r) {
        for (std::size_t c = r + 1; c < n; ++c) {
          if (sgn(a(r, c)) != 0) {
            i = r;
            j = c;
            break;
          }
        }
      }
      if (i == n) {
        out.zero += n - k;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
      for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
      p = i;
    }
    if (p != k) sym_swap(p, k);
    const Rational pivot = a(k, k);
    (sgn(pivot) > 0 ? out.positive : out.negative) += 1;
    // Schur complement on the trailing block
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      const Rational f = a(r, k) / pivot;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      a(r, k) = 0;
      a(k, r) = 0;
    }
  }
  return out;
}

RationalVector solve(const RationalMatrix& m, const RationalVector& b) {
  const std::size_t n = m.size();
  if (b.size() != n) throw Error("dimension mismatch in solve");
  RationalMatrix a = m;
  RationalVector rhs = b;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = largest_pivot_row(a, k);
    if (sgn(a(p, k)) == 0) throw SingularMatrixError(k);
    if (p != k) {
      swap_rows(a, p, k);
      std::swap(rhs[p], rhs[k]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      const Rational f = a(r, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(r, j) -= f * a(k, j);
      rhs[r] -= f * rhs[k];
    }
  }
  RationalVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
    x[i] = acc / a(i, i);
  }
  if (m * x != b) throw InvariantError("solve: substitution check failed");
  return x;
}

RationalVector weight_vector(const RationalMatrix& q, const RationalVector& area) {
  const auto cert = is_negative_definite(q);
  if (!cert.verdict) throw Error("intersection form is not negative definite; refusing to solve -Qz = a");
  const RationalVector z = solve(-q, area);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (sgn(z[i]) <= 0) {
      throw InvariantError("weight vector entry " + std::to_string(i) + " = " + format_rational(z[i]) +
                           " is not positive");
    }
  }
  return z;
}

RationalVector weight_vector(const PlumbingGraph& g) {
  RationalVector area;
  area.reserve(g.size());
  for (const auto& v : g.vertices()) area.push_back(v.area_hat);
  return weight_vector(intersection_matrix(g), area);
}

bool lemma_cone_check(const RationalMatrix& q, const RationalVector& x) {
  if (!q.is_symmetric()) throw Error("lemma_cone_check: Q is not symmetric");
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (i != j && sgn(q(i, j)) < 0) throw Error("lemma_cone_check: Q has a negative off-diagonal entry");
    }
  }
  if (!is_negative_definite(q).verdict) throw Error("lemma_cone_check: Q is not negative definite");
  const RationalVector qx = q * x;
  for (const auto& v : qx) {
    if (sgn(v) > 0) return false;
  }
  return true;
}

RationalMatrix random_negdef_graph_matrix(std::size_t n, long max_mult, std::uint64_t seed) {
  if (n < 1) throw Error("random_negdef_graph_matrix: n must be >= 1");
  if (max_mult < 0) throw Error("random_negdef_graph_matrix: max_mult must be >= 0");
  SplitMix64 rng(seed);
  RationalMatrix q(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const long m = rng.uniform(0, max_mult);
      q(i, j) = m;
      q(j, i) = m;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) row += q(i, j);
    }
    q(i, i) = -(row + rng.uniform(1, 3));
  }
  return q;
}

}  // namespace plumb
