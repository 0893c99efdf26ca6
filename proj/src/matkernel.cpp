#include "jpotapov/matkernel.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace jp {

SignatureMatrix::SignatureMatrix(CMatrix J, double tol_sym) : J_(std::move(J)) {
    if (J_.rows() != J_.cols() || J_.rows() == 0) {
        throw DimensionMismatch("signature matrix must be square and nonempty");
    }
    const double sym = (J_ - J_.adjoint()).norm();
    const double invol = (J_ * J_ - CMatrix::Identity(J_.rows(), J_.cols())).norm();
    if (sym > tol_sym || invol > tol_sym) {
        throw InvalidParam("not a signature matrix: ||J-J*||=" + std::to_string(sym) +
                           ", ||J^2-I||=" + std::to_string(invol));
    }
}

SignatureMatrix SignatureMatrix::identity(int m) {
    return SignatureMatrix(CMatrix::Identity(m, m));
}

SignatureMatrix SignatureMatrix::diagonal(const std::vector<int>& signs) {
    const int m = static_cast<int>(signs.size());
    CMatrix J = CMatrix::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        if (signs[i] != 1 && signs[i] != -1) {
            throw InvalidParam("diagonal signature entries must be +1 or -1");
        }
        J(i, i) = Complex(static_cast<double>(signs[i]), 0.0);
    }
    return SignatureMatrix(std::move(J));
}

bool SignatureMatrix::is_identity(double tol) const {
    return (J_ - CMatrix::Identity(J_.rows(), J_.cols())).norm() <= tol;
}

CMatrix SignatureMatrix::block_diag(int copies) const {
    const int m = dim();
    CMatrix out = CMatrix::Zero(m * copies, m * copies);
    for (int k = 0; k < copies; ++k) {
        out.block(k * m, k * m, m, m) = J_;
    }
    return out;
}

CMatrix SignatureMatrix::proj_p() const {
    return 0.5 * (CMatrix::Identity(dim(), dim()) + J_);
}

CMatrix SignatureMatrix::proj_q() const {
    return 0.5 * (CMatrix::Identity(dim(), dim()) - J_);
}

CMatrix hermitize(const CMatrix& H) {
    return 0.5 * (H + H.adjoint());
}

CMatrix pinv(const CMatrix& M, const Tolerances& tol, double scale_floor) {
    if (M.size() == 0) return M.adjoint();
    Eigen::JacobiSVD<CMatrix> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cutoff = tol.rank_rel * std::max(sv.size() > 0 ? sv(0) : 0.0, scale_floor) *
                          std::max(M.rows(), M.cols());
    Eigen::VectorXd inv_sv(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        inv_sv(i) = sv(i) > cutoff ? 1.0 / sv(i) : 0.0;
    }
    return svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().adjoint();
}

int numerical_rank(const CMatrix& M, const Tolerances& tol) {
    if (M.size() == 0) return 0;
    Eigen::JacobiSVD<CMatrix> svd(M);
    const auto& sv = svd.singularValues();
    const double cutoff = std::max(tol.rank_rel * sv(0) * std::max(M.rows(), M.cols()), 1e-13);
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) ++r;
    }
    return r;
}

Eigen::VectorXd hermitian_eigenvalues(const CMatrix& H) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitize(H), Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

CMatrix psd_sqrt(const CMatrix& H, const Tolerances& tol) {
    if (H.rows() != H.cols()) throw DimensionMismatch("psd_sqrt needs a square matrix");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitize(H));
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double scale = std::max(1.0, ev.size() > 0 ? ev.cwiseAbs().maxCoeff() : 0.0);
    const double slack = tol.psd_eig * scale;
    Eigen::VectorXd root(ev.size());
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) < -slack) {
            throw NotPSD("psd_sqrt: eigenvalue " + std::to_string(ev(i)) + " below -" +
                         std::to_string(slack));
        }
        root(i) = ev(i) > 0.0 ? std::sqrt(ev(i)) : 0.0;
    }
    return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

double spectral_norm(const CMatrix& M) {
    if (M.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(M);
    return svd.singularValues()(0);
}

Contractivity j_contractivity(const CMatrix& A, const CMatrix& J, const Tolerances& tol) {
    if (A.rows() != A.cols() || A.rows() != J.rows()) {
        throw DimensionMismatch("j_contractivity: A and J must be square of equal size");
    }
    const CMatrix defect = J - A.adjoint() * J * A;
    const double lambda_min = hermitian_eigenvalues(defect).minCoeff();
    if (lambda_min > tol.psd_eig) return Contractivity::Strict;
    if (lambda_min >= -tol.psd_eig) return Contractivity::Boundary;
    return Contractivity::No;
}

Contractivity j_contractivity(const CMatrix& A, const SignatureMatrix& J, const Tolerances& tol) {
    return j_contractivity(A, J.matrix(), tol);
}

bool is_j_unitary(const CMatrix& A, const CMatrix& J, const Tolerances& tol) {
    if (A.rows() != A.cols() || A.rows() != J.rows()) {
        throw DimensionMismatch("is_j_unitary: A and J must be square of equal size");
    }
    return spectral_norm(A.adjoint() * J * A - J) <= tol.residual * std::max(1.0, spectral_norm(J));
}

bool is_j_unitary(const CMatrix& A, const SignatureMatrix& J, const Tolerances& tol) {
    return is_j_unitary(A, J.matrix(), tol);
}

}  // namespace jp
