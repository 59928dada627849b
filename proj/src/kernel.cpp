#include "arch_resonance/kernel.hpp"

#include "arch_resonance/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace arch_resonance {

namespace {

// Derivatives of C(s; x) and S(s; x) follow from C' = s S and S' = C.
void trig_hyp_pair(double s, double x, Derivatives& c_out, Derivatives& s_out) {
    double c = 1.0;
    double sv = x;
    if (s > 0.0) {
        const double k = std::sqrt(s);
        c = std::cosh(k * x);
        sv = std::sinh(k * x) / k;
    } else if (s < 0.0) {
        const double k = std::sqrt(-s);
        c = std::cos(k * x);
        sv = std::sin(k * x) / k;
    }
    c_out = {c, s * sv, s * c, s * s * sv, s * s * c};
    s_out = {sv, c, s * sv, s * c, s * s * sv};
}

// (x g)^(k) = x g^(k) + k g^(k-1)
Derivatives times_phi(const Derivatives& g, double x) {
    Derivatives out{};
    out[0] = x * g[0];
    for (int k = 1; k < 5; ++k) out[k] = x * g[k] + k * g[k - 1];
    return out;
}

}  // namespace

CharCoeffs characteristic_coefficients(double K, double eta_nd) {
    if (!(K >= 0.0) || !(eta_nd >= 0.0)) {
        throw InvalidArgument("characteristic coefficients need K >= 0 and eta >= 0");
    }
    return CharCoeffs{K, 2.0 + K * eta_nd, 1.0 - K};
}

ModeBasis::ModeBasis(const CharCoeffs& coeffs, double tol) : coeffs_(coeffs) {
    const double p2 = coeffs.p2;
    const double p0 = coeffs.p0;
    if (!(p2 > 0.0) || !std::isfinite(p0)) {
        throw InvalidArgument("mode basis requires p2 > 0 and finite p0");
    }
    const double scale = std::max(1.0, p2 * p2);
    const double disc = p2 * p2 - 4.0 * p0;
    if (std::abs(disc) <= tol * scale) {
        branch_ = BasisBranch::DegenerateRepeated;
        s_ = {-0.5 * p2, -0.5 * p2};
        return;
    }
    if (disc < 0.0) {
        throw InvalidArgument("characteristic roots are complex (p2^2 < 4 p0)");
    }
    if (std::abs(p0) <= tol * scale) {
        branch_ = BasisBranch::DegenerateZeroRoot;
        s_ = {0.0, -p2};
        return;
    }
    // s1 s2 = p0; take the non-cancelling root first.
    const double s2 = -0.5 * (p2 + std::sqrt(disc));
    const double s1 = p0 / s2;
    s_ = {s1, s2};
    branch_ = s1 > 0.0 ? BasisBranch::TrigPlusHyperbolic : BasisBranch::TwoTrig;
}

std::array<double, 2> ModeBasis::wavenumbers() const {
    return {std::sqrt(std::abs(s_[0])), std::sqrt(std::abs(s_[1]))};
}

Derivatives ModeBasis::evaluate(int index, double phi) const {
    if (index < 0 || index > 3) throw InvalidArgument("basis index must be in 0..3");
    if (branch_ == BasisBranch::DegenerateRepeated) {
        const double a = std::sqrt(-s_[0]);
        const double c = std::cos(a * phi);
        const double sn = std::sin(a * phi);
        const double a2 = a * a;
        const Derivatives cos_d{c, -a * sn, -a2 * c, a2 * a * sn, a2 * a2 * c};
        switch (index) {
            case 0: return cos_d;
            case 1: return {sn / a, c, -a * sn, -a2 * c, a2 * a * sn};
            case 2: return times_phi(cos_d, phi);
            default: return times_phi({sn, a * c, -a2 * sn, -a2 * a * c, a2 * a2 * sn}, phi);
        }
    }
    Derivatives c_d{};
    Derivatives s_d{};
    trig_hyp_pair(s_[index / 2], phi, c_d, s_d);
    return index % 2 == 0 ? c_d : s_d;
}

ModeBasis quartic_roots(const CharCoeffs& coeffs, double tol) { return ModeBasis(coeffs, tol); }

SegmentBasis::SegmentBasis(const ModeBasis& basis, double lo, double hi)
    : basis_(basis), lo_(lo), hi_(hi), exponential_(false) {
    if (basis.branch() == BasisBranch::TrigPlusHyperbolic) {
        c_ = std::sqrt(basis.root_squares()[0]);
        exponential_ = c_ * (hi - lo) > 1.0;
    }
}

Derivatives SegmentBasis::evaluate(int index, double phi) const {
    const double x = phi - lo_;
    if (exponential_ && index < 2) {
        const double sign = index == 0 ? -1.0 : 1.0;
        double value = index == 0 ? std::exp(-c_ * x) : std::exp(c_ * (phi - hi_));
        Derivatives out{};
        for (int k = 0; k < 5; ++k) {
            out[k] = value;
            value *= sign * c_;
        }
        return out;
    }
    return basis_.evaluate(index, x);
}

double SegmentBasis::combine(const double* coefficients, double phi, int order) const {
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) sum += coefficients[i] * evaluate(i, phi)[order];
    return sum;
}

double uncracked_K_closed_form(int n, double beta, double eta_nd) {
    if (n < 1 || !(beta > 0.0) || !(eta_nd >= 0.0)) {
        throw InvalidArgument("closed form needs n >= 1, beta > 0, eta >= 0");
    }
    const double lambda = n * kPi / beta;
    const double l2 = lambda * lambda;
    return (l2 - 1.0) * (l2 - 1.0) / (1.0 + eta_nd * l2);
}

BoundaryMatrix assemble_uncracked(const ModeBasis& basis, double beta) {
    if (!(beta > 0.0)) throw InvalidArgument("beta must be positive");
    const SegmentBasis seg(basis, 0.0, beta);
    BoundaryMatrix m{DenseMatrix::Zero(4, 4)};
    for (int j = 0; j < 4; ++j) {
        const Derivatives at0 = seg.evaluate(j, 0.0);
        const Derivatives atb = seg.evaluate(j, beta);
        m.entries(0, j) = at0[0];
        m.entries(1, j) = at0[2];
        m.entries(2, j) = atb[0];
        m.entries(3, j) = atb[2];
    }
    return m;
}

BoundaryMatrix assemble_cracked(const ModeBasis& basis, double beta, double alpha,
                                double theta_c) {
    if (!(alpha > kMinSegment) || !(beta - alpha > kMinSegment)) {
        throw DegenerateSegment("crack position leaves an empty segment");
    }
    if (!(theta_c >= 0.0)) throw InvalidArgument("crack compliance must be >= 0");
    const SegmentBasis left(basis, 0.0, alpha);
    const SegmentBasis right(basis, alpha, beta);
    // Shear resultant X''' + (1 + K eta) X' and bending moment X'' + X.
    const double shear = basis.coeffs().p2 - 1.0;
    BoundaryMatrix m{DenseMatrix::Zero(8, 8)};
    for (int j = 0; j < 4; ++j) {
        const Derivatives l0 = left.evaluate(j, 0.0);
        const Derivatives la = left.evaluate(j, alpha);
        const Derivatives ra = right.evaluate(j, alpha);
        const Derivatives rb = right.evaluate(j, beta);
        const int r = j + 4;
        m.entries(0, j) = l0[0];
        m.entries(1, j) = l0[2];
        m.entries(2, r) = rb[0];
        m.entries(3, r) = rb[2];
        m.entries(4, j) = la[0];
        m.entries(4, r) = -ra[0];
        m.entries(5, j) = la[2];
        m.entries(5, r) = -ra[2];
        m.entries(6, j) = la[3] + shear * la[1];
        m.entries(6, r) = -ra[3] - shear * ra[1];
        m.entries(7, j) = -la[1] - theta_c * (la[2] + la[0]);
        m.entries(7, r) = ra[1];
    }
    return m;
}

BoundaryMatrix assemble(const ArchProblem& problem, double K) {
    const ModeBasis basis = quartic_roots(characteristic_coefficients(K, problem.eta_nd()));
    if (problem.crack()) {
        return assemble_cracked(basis, problem.beta(), problem.crack()->alpha,
                                problem.crack()->theta_c);
    }
    return assemble_uncracked(basis, problem.beta());
}

RowScaledLu lu_factorize(const DenseMatrix& matrix) {
    const int n = static_cast<int>(matrix.rows());
    if (n != matrix.cols() || n < 1 || n > 8) {
        throw InvalidArgument("lu_factorize expects a square matrix of order 1..8");
    }
    RowScaledLu out;
    out.lu = matrix;
    out.row_scale.resize(n);
    for (int i = 0; i < n; ++i) {
        double scale = out.lu.row(i).cwiseAbs().maxCoeff();
        if (!std::isfinite(scale)) throw InvalidArgument("matrix has non-finite entries");
        if (scale == 0.0) {
            out.zero_row = true;
            scale = 1.0;
        }
        out.row_scale(i) = scale;
        out.lu.row(i) /= scale;
        out.permutation[i] = i;
    }
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int i = k + 1; i < n; ++i) {
            if (std::abs(out.lu(i, k)) > std::abs(out.lu(pivot, k))) pivot = i;
        }
        if (pivot != k) {
            out.lu.row(k).swap(out.lu.row(pivot));
            std::swap(out.permutation[k], out.permutation[pivot]);
            out.parity = -out.parity;
        }
        const double diag = out.lu(k, k);
        if (diag == 0.0) continue;
        for (int i = k + 1; i < n; ++i) {
            const double factor = out.lu(i, k) / diag;
            out.lu(i, k) = factor;
            for (int j = k + 1; j < n; ++j) out.lu(i, j) -= factor * out.lu(k, j);
        }
    }
    return out;
}

DeterminantResult det_sign_logmag(const DenseMatrix& matrix) {
    const RowScaledLu lu = lu_factorize(matrix);
    const int n = static_cast<int>(matrix.rows());
    DeterminantResult out;
    if (lu.zero_row) {
        out.sign = 0;
        out.log_magnitude = -std::numeric_limits<double>::infinity();
        out.normalized_log_magnitude = out.log_magnitude;
        return out;
    }
    int sign = lu.parity;
    double normalized = 0.0;
    double scales = 0.0;
    double min_pivot = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        const double pivot = lu.lu(k, k);
        if (pivot < 0.0) sign = -sign;
        normalized += std::log(std::abs(pivot));
        scales += std::log(lu.row_scale(k));
        min_pivot = std::min(min_pivot, std::abs(pivot));
    }
    out.sign = min_pivot <= kZeroPivotTol ? 0 : sign;
    out.normalized_log_magnitude = normalized;
    out.log_magnitude = normalized + scales;
    out.min_pivot = min_pivot;
    return out;
}

DeterminantResult det_sign_logmag(const BoundaryMatrix& matrix) {
    return det_sign_logmag(matrix.entries);
}

}  // namespace arch_resonance
