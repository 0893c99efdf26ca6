#pragma once

#include "jpotapov/types.hpp"

namespace jp {

/// (H + H*)/2; guards Hermitian code paths against floating-point drift.
CMatrix hermitize(const CMatrix& H);

/// Moore-Penrose inverse by SVD. Singular values below
/// rank_rel * max(sigma_max, scale_floor) * max(rows, cols) are treated as
/// zero. The floor matters for defect matrices that are zero up to roundoff
/// of an O(scale_floor) computation; without it nothing would be cut.
CMatrix pinv(const CMatrix& M, const Tolerances& tol = {}, double scale_floor = 0.0);

/// Numerical rank at the same cutoff pinv uses.
int numerical_rank(const CMatrix& M, const Tolerances& tol = {});

/// Hermitian square root of a PSD matrix via eigendecomposition of (H+H*)/2.
/// Eigenvalues in [-psd_eig, 0) are clamped to 0; throws NotPSD below that.
CMatrix psd_sqrt(const CMatrix& H, const Tolerances& tol = {});

/// Largest singular value.
double spectral_norm(const CMatrix& M);

enum class Contractivity { Strict, Boundary, No };

/// Classifies A by the smallest eigenvalue of J - A*JA.
Contractivity j_contractivity(const CMatrix& A, const CMatrix& J, const Tolerances& tol = {});
Contractivity j_contractivity(const CMatrix& A, const SignatureMatrix& J,
                              const Tolerances& tol = {});

/// ||A*JA - J|| <= residual * ||J||.
bool is_j_unitary(const CMatrix& A, const CMatrix& J, const Tolerances& tol = {});
bool is_j_unitary(const CMatrix& A, const SignatureMatrix& J, const Tolerances& tol = {});

/// Eigenvalues of the hermitized input, ascending.
Eigen::VectorXd hermitian_eigenvalues(const CMatrix& H);

}  // namespace jp
