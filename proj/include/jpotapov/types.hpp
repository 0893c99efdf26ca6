#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace jp {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Numerical slacks used by every rank / positivity / identity decision.
struct Tolerances {
    double rank_rel = 1e-12;  ///< relative singular-value cutoff for pinv/rank
    double psd_eig = 1e-10;   ///< slack below zero tolerated on PSD eigenvalues
    double residual = 1e-10;  ///< slack on identity checks (Penrose, J-unitarity, ...)
};

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define JP_DEFINE_ERROR(NAME)                      \
    class NAME : public Error {                    \
      public:                                      \
        using Error::Error;                        \
    }

JP_DEFINE_ERROR(DimensionMismatch);
JP_DEFINE_ERROR(NotPSD);
JP_DEFINE_ERROR(NotPotapov);
JP_DEFINE_ERROR(NotStrict);
JP_DEFINE_ERROR(NotContractive);
JP_DEFINE_ERROR(SingularPG);
JP_DEFINE_ERROR(InvalidFactorData);
JP_DEFINE_ERROR(InvalidParam);
JP_DEFINE_ERROR(SingularAtOrigin);
JP_DEFINE_ERROR(SingularDenominator);
JP_DEFINE_ERROR(OutsideCommonDomain);
JP_DEFINE_ERROR(SingularRadius);
JP_DEFINE_ERROR(SingularTransfer);
JP_DEFINE_ERROR(AllSamplesSingular);
JP_DEFINE_ERROR(DegreeExceeded);
JP_DEFINE_ERROR(ParseError);

#undef JP_DEFINE_ERROR

/// Hermitian involution J (J* = J, J^2 = I). Immutable after construction.
class SignatureMatrix {
  public:
    explicit SignatureMatrix(CMatrix J, double tol_sym = 1e-12);

    static SignatureMatrix identity(int m);
    static SignatureMatrix diagonal(const std::vector<int>& signs);

    int dim() const { return static_cast<int>(J_.rows()); }
    const CMatrix& matrix() const { return J_; }
    bool is_identity(double tol = 1e-12) const;

    /// diag(J, ..., J) with `copies` diagonal blocks.
    CMatrix block_diag(int copies) const;

    /// Orthoprojections P_J = (I+J)/2 and Q_J = (I-J)/2.
    CMatrix proj_p() const;
    CMatrix proj_q() const;

  private:
    CMatrix J_;
};

}  // namespace jp
