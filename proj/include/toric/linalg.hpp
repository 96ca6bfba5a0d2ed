#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/numeric.hpp"

namespace toric {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotUnimodularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntegerMatrix& m);

/// Coefficients c with sum_i c_i * basis[i] == target.
std::vector<Rational> solve_in_basis(std::span<const IntegerVector> basis,
                                     const IntegerVector& target);

/// The covector m with <m, basis[index]> = 1 and <m, basis[j]> = 0 otherwise.
/// Requires |det(basis)| = 1 so that m is integral.
Covector dual_functional(std::span<const IntegerVector> basis, std::size_t index);

/// All dual functionals of a unimodular basis at once; row i is
/// dual_functional(basis, i).
std::vector<Covector> dual_basis(std::span<const IntegerVector> basis);

/// Inverse of an integer matrix with determinant +-1, computed with integer
/// row operations only. Throws NotUnimodularError otherwise.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

Integer gcd_of(const IntegerVector& v);

IntegerVector add(const IntegerVector& a, const IntegerVector& b);
IntegerVector scale(const Integer& s, const IntegerVector& v);
IntegerVector mat_vec(const IntegerMatrix& m, const IntegerVector& v);
bool is_zero(const IntegerVector& v);

// ---------------------------------------------------------------------------
// Exact feasibility of homogeneous strict/equality systems.

enum class ConstraintKind { Positive, Zero };

/// form(x) > 0 or form(x) = 0 over rational unknowns x.
struct LinearConstraint {
  Covector form;
  ConstraintKind kind = ConstraintKind::Positive;
};

/// Looks for x in Q^num_unknowns with form(x) >= 1 for every Positive
/// constraint and form(x) = 0 for every Zero constraint. The returned witness
/// has been checked by substitution. std::nullopt means infeasible.
///
/// Phase-one simplex over exact rationals with Bland's pivoting rule; free
/// unknowns are split into differences of non-negative variables.
std::optional<std::vector<Rational>> lp_feasible_strict(
    std::span<const LinearConstraint> constraints, std::size_t num_unknowns);

}  // namespace toric
