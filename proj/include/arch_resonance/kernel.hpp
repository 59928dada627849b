#pragma once

#include "arch_resonance/model.hpp"

#include <Eigen/Dense>

#include <array>

namespace arch_resonance {

// Relative tolerance on |p0| and |p2^2 - 4 p0| below which a degenerate basis
// is selected.
inline constexpr double kDegeneracyTol = 1e-10;
// Normalized pivots at or below this magnitude count as exact zeros.
inline constexpr double kZeroPivotTol = 1e-13;
// Minimum segment length (rad) on either side of a crack.
inline constexpr double kMinSegment = 1e-9;

/// Coefficients of X'''' + p2 X'' + p0 X = 0 at a trial eigenvalue K.
struct CharCoeffs {
    double K = 0.0;
    double p2 = 2.0;  // 2 + K eta
    double p0 = 1.0;  // 1 - K
};

CharCoeffs characteristic_coefficients(double K, double eta_nd);

enum class BasisBranch {
    TwoTrig,             // K < 1: lambda^2 roots both negative
    TrigPlusHyperbolic,  // K > 1: one positive, one negative
    DegenerateZeroRoot,  // K = 1: lambda^2 = 0 is a root
    DegenerateRepeated,  // K = 0: lambda^2 = -1 double root
};

// Value and the first four derivatives with respect to phi.
using Derivatives = std::array<double, 5>;

/// The four fundamental solutions of the characteristic ODE at one K.
///
/// With lambda^2 roots s1 >= s2 the functions are ordered
/// [C(s1), S(s1), C(s2), S(s2)] where
///   C(s) = cosh(sqrt(s) phi), S(s) = sinh(sqrt(s) phi) / sqrt(s)   for s > 0
///   C(s) = cos(sqrt(-s) phi), S(s) = sin(sqrt(-s) phi) / sqrt(-s)  for s < 0
///   C(0) = 1, S(0) = phi.
/// Both C and S are entire in s, so the basis (and any determinant assembled
/// from it) varies continuously through K = 1. In the repeated-root branch the
/// basis is [cos a phi, sin(a phi)/a, phi cos a phi, phi sin a phi].
class ModeBasis {
public:
    ModeBasis(const CharCoeffs& coeffs, double tol = kDegeneracyTol);

    const CharCoeffs& coeffs() const { return coeffs_; }
    BasisBranch branch() const { return branch_; }
    // lambda^2 roots, first >= second.
    const std::array<double, 2>& root_squares() const { return s_; }
    // sqrt(|s1|), sqrt(|s2|)
    std::array<double, 2> wavenumbers() const;

    Derivatives evaluate(int index, double phi) const;

private:
    CharCoeffs coeffs_;
    BasisBranch branch_;
    std::array<double, 2> s_;
};

ModeBasis quartic_roots(const CharCoeffs& coeffs, double tol = kDegeneracyTol);

/// The basis restricted to one segment [lo, hi], shifted so phi is measured
/// from lo. A hyperbolic pair whose growth over the segment exceeds e is
/// replaced by the decaying exponentials exp(-c (phi - lo)), exp(c (phi - hi)),
/// which stay bounded for any c. Every such change of basis has a positive
/// Jacobian so determinant signs are unaffected.
class SegmentBasis {
public:
    SegmentBasis(const ModeBasis& basis, double lo, double hi);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool exponential_pair() const { return exponential_; }

    Derivatives evaluate(int index, double phi) const;
    // sum_i coefficients[i] * basis_i, derivative `order` (0..4)
    double combine(const double* coefficients, double phi, int order) const;

private:
    ModeBasis basis_;
    double lo_;
    double hi_;
    bool exponential_;
    double c_ = 0.0;
};

/// K_n = (lambda^2 - 1)^2 / (1 + eta lambda^2), lambda = n pi / beta: the exact
/// eigenvalues of the uncracked simply supported arch (mode shape sin(lambda phi)).
double uncracked_K_closed_form(int n, double beta, double eta_nd);

using DenseMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor, 8, 8>;

struct BoundaryMatrix {
    DenseMatrix entries;
    int order() const { return static_cast<int>(entries.rows()); }
};

// Rows: [X(0), X''(0), X(beta), X''(beta)].
BoundaryMatrix assemble_uncracked(const ModeBasis& basis, double beta);

// Unknowns: 4 coefficients on [0, alpha] then 4 on [alpha, beta]. Rows:
// [X1(0), X1''(0), X2(beta), X2''(beta), X1(a)-X2(a), X1''(a)-X2''(a),
//  V1(a)-V2(a), X2'(a)-X1'(a)-theta_c (X1''(a)+X1(a))],
// with shear V = X''' + (1 + K eta) X'. The hinge rotation follows the arch
// bending moment X'' + X.
// Throws DegenerateSegment when either segment is shorter than kMinSegment.
BoundaryMatrix assemble_cracked(const ModeBasis& basis, double beta, double alpha,
                                double theta_c);

BoundaryMatrix assemble(const ArchProblem& problem, double K);

/// LU with partial pivoting of the row-max-normalized matrix, P (D A) = L U.
struct RowScaledLu {
    DenseMatrix lu;                   // unit L below the diagonal, U on and above
    std::array<int, 8> permutation{};  // row i of LU came from row permutation[i]
    int parity = 1;
    Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 8, 1> row_scale;  // max |a_ij| per row
    bool zero_row = false;
};

RowScaledLu lu_factorize(const DenseMatrix& matrix);

struct DeterminantResult {
    int sign = 0;
    double log_magnitude = 0.0;             // log |det A|
    double normalized_log_magnitude = 0.0;  // log |det D A|, D = row normalization
    double min_pivot = 0.0;                 // smallest |pivot| of D A
};

DeterminantResult det_sign_logmag(const DenseMatrix& matrix);
DeterminantResult det_sign_logmag(const BoundaryMatrix& matrix);

}  // namespace arch_resonance
