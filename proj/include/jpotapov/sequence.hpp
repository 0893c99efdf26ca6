#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jpotapov/matkernel.hpp"
#include "jpotapov/types.hpp"

namespace jp {

enum class Classification { Strict, Degenerate, Invalid };

const char* to_string(Classification c);

/// Center and semi-radii of the matrix ball admissible next coefficients
/// live in, together with square-root and pseudoinverse caches.
struct BallParams {
    CMatrix M;  ///< center
    CMatrix L;  ///< left defect (Hermitian PSD)
    CMatrix R;  ///< right defect (Hermitian PSD)
    CMatrix sqrtL, sqrtR;
    CMatrix sqrtL_pinv, sqrtR_pinv;
    CMatrix L_pinv, R_pinv;
    double scale = 1.0;  ///< ambient magnitude the defects were computed at
};

/// A finite coefficient sequence A_0..A_n together with its signature matrix.
/// The block Toeplitz matrix, both defect matrices, the classification and
/// (when the sequence is admissible) the order-n ball parameters are computed
/// eagerly at construction; instances are immutable afterwards.
class PotapovSeq {
  public:
    PotapovSeq(SignatureMatrix J, std::vector<CMatrix> coeffs, Tolerances tol = {});

    int dim() const { return signature_.dim(); }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const SignatureMatrix& signature() const { return signature_; }
    const std::vector<CMatrix>& coeffs() const { return coeffs_; }
    const CMatrix& coeff(int j) const { return coeffs_.at(static_cast<size_t>(j)); }
    const Tolerances& tol() const { return tol_; }

    Classification classification() const { return classification_; }
    /// Ambient magnitude of the defect-matrix computation; rank cuts and PSD
    /// slacks are taken relative to it.
    double defect_scale() const { return defect_scale_; }
    const CMatrix& toeplitz() const { return toeplitz_; }
    const CMatrix& defect_p() const { return defect_p_; }
    const CMatrix& defect_q() const { return defect_q_; }

    /// Order-n ball parameters; throws NotPotapov when the sequence is invalid.
    const BallParams& ball() const;

    /// Stacked column (A_1*, ..., A_k*)* of size km x m, 1 <= k <= n.
    CMatrix y(int k) const;
    /// Row (A_k, A_{k-1}, ..., A_1) of size m x km.
    CMatrix z(int k) const;

    /// The subsequence A_0..A_k as its own PotapovSeq.
    PotapovSeq prefix(int k) const;

  private:
    SignatureMatrix signature_;
    std::vector<CMatrix> coeffs_;
    Tolerances tol_;
    CMatrix toeplitz_, defect_p_, defect_q_;
    Classification classification_;
    double defect_scale_ = 1.0;
    std::optional<BallParams> ball_;
};

/// Lower-triangular block Toeplitz matrix S_n, block (i,j) = A_{i-j} for i >= j.
CMatrix block_toeplitz(const PotapovSeq& seq);

/// (P_{n,J}, Q_{n,J}) = (J_[n] - S_n J_[n] S_n*, J_[n] - S_n* J_[n] S_n).
std::pair<CMatrix, CMatrix> defect_matrices(const PotapovSeq& seq);

BallParams ball_parameters(const PotapovSeq& seq);

Classification classify(const PotapovSeq& seq);

/// Appends k coefficients, each the current ball center.
PotapovSeq extend_central(const PotapovSeq& seq, int k);

/// Appends M + sqrt(L) K sqrt(R); K must be contractive.
PotapovSeq extend_with_parameter(const PotapovSeq& seq, const CMatrix& K);

/// Potapov-Ginzburg transform of the coefficient sequence, taken with respect
/// to `transform_j`. Maps Potapov sequences for `transform_j` to Schur
/// sequences and back; the returned sequence carries `result_j`.
PotapovSeq pg_transform_seq(const PotapovSeq& seq, const SignatureMatrix& transform_j,
                            const SignatureMatrix& result_j);

/// PG transform with respect to the sequence's own J; the result is a Schur
/// sequence and carries J' = I_m.
PotapovSeq pg_transform_seq(const PotapovSeq& seq);

/// Inverse direction: interprets `schur_seq` as the PG transform of a
/// J-Potapov sequence and recovers the latter.
PotapovSeq pg_transform_seq_inverse(const PotapovSeq& schur_seq, const SignatureMatrix& j);

/// Deterministic strict J-Potapov sequence: A_0 sampled in the interior of the
/// strict J-contractive set, followed by n extensions with ||K|| <= margin.
PotapovSeq random_strict_seq(int m, const SignatureMatrix& j, int n, std::uint64_t seed,
                             double margin, Tolerances tol = {});

}  // namespace jp
