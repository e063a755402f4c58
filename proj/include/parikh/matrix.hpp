#pragma once

#include <optional>
#include <string>

#include <Eigen/Core>

#include "parikh/word.hpp"

namespace parikh {

/// Unit upper-triangular (s+1)x(s+1) matrix over nonnegative integers.
template <class Scalar>
using BasicParikhMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using ParikhMatrix = BasicParikhMatrix<Count>;

/// Exact product; throws OverflowError instead of wrapping.
template <class Derived, class OtherDerived>
BasicParikhMatrix<typename Derived::Scalar> checked_product(const Eigen::MatrixBase<Derived>& lhs,
                                                            const Eigen::MatrixBase<OtherDerived>& rhs) {
  using Scalar = typename Derived::Scalar;
  static_assert(std::is_same_v<Scalar, typename OtherDerived::Scalar>, "mixed scalar product");
  if (lhs.cols() != rhs.rows()) throw DomainError("matrix dimension mismatch");
  BasicParikhMatrix<Scalar> out = BasicParikhMatrix<Scalar>::Zero(lhs.rows(), rhs.cols());
  for (Eigen::Index i = 0; i < lhs.rows(); ++i) {
    for (Eigen::Index k = 0; k < lhs.cols(); ++k) {
      Scalar a = lhs(i, k);
      if (a == 0) continue;
      for (Eigen::Index j = 0; j < rhs.cols(); ++j) {
        out(i, j) = checked_add(out(i, j), checked_mul(a, rhs(k, j)));
      }
    }
  }
  return out;
}

/// True when `m` is square with unit diagonal and zeros below it.
template <class Derived>
bool is_unit_upper_triangular(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 1) return false;
    for (Eigen::Index j = 0; j < i; ++j) {
      if (m(i, j) != 0) return false;
    }
  }
  return true;
}

/// Psi(a_q): identity with a single 1 at (q, q+1).
ParikhMatrix generator(const OrderedAlphabet& alphabet, Letter letter);

/// Psi(w) as the ordered product of letter generators. Right-multiplying by
/// Psi(a_q) adds column q into column q+1, which is what this does per letter.
ParikhMatrix parikh_matrix(const Word& w);

/// Psi(w) assembled entry by entry from |w|_{a_i ... a_j}; an independent route
/// used to cross-check parikh_matrix.
ParikhMatrix parikh_matrix_from_counts(const Word& w);

/// Matrix multiply for Parikh matrices: checks shapes and the unit-triangular
/// invariant on the way in.
ParikhMatrix matrix_multiply(const ParikhMatrix& lhs, const ParikhMatrix& rhs);

/// Psi(w) == Psi(w2).
bool m_equivalent(const Word& w, const Word& w2);

/// Equal counts on every sequence of distinct letters, in any order.
bool strong_m_equivalent(const Word& w, const Word& w2);

/// Equal counts on every strictly increasing letter sequence.
bool p_equivalent(const Word& w, const Word& w2);

/// Least subset S (by size, then lexicographically) with
/// Psi_S(pi_S(w)) != Psi_S(pi_S(w2)); nullopt when the words are P-equivalent.
std::optional<LetterSet> p_distinct(const Word& w, const Word& w2);

/// Row-major nested array, e.g. [[1,2],[0,1]].
std::string to_json_rows(const ParikhMatrix& m);

}  // namespace parikh
