#include "jpotapov/sequence.hpp"

#include <cmath>
#include <random>

namespace jp {

const char* to_string(Classification c) {
    switch (c) {
        case Classification::Strict: return "strict";
        case Classification::Degenerate: return "degenerate";
        case Classification::Invalid: return "invalid";
    }
    return "unknown";
}

namespace {

// True zeros of the defect matrices surface as roundoff of an O(1 + ||S||^2)
// computation; rank cuts and PSD slacks are taken relative to this.
double coeff_scale(const std::vector<CMatrix>& coeffs) {
    double ambient = 1.0;
    for (const CMatrix& a : coeffs) ambient = std::max(ambient, a.squaredNorm());
    return ambient * static_cast<double>(coeffs.size());
}

CMatrix build_toeplitz(const std::vector<CMatrix>& coeffs, int m) {
    const int blocks = static_cast<int>(coeffs.size());
    CMatrix s = CMatrix::Zero(blocks * m, blocks * m);
    for (int i = 0; i < blocks; ++i) {
        for (int j = 0; j <= i; ++j) {
            s.block(i * m, j * m, m, m) = coeffs[static_cast<size_t>(i - j)];
        }
    }
    return s;
}

BallParams make_ball(const SignatureMatrix& sig, const std::vector<CMatrix>& coeffs,
                     const Tolerances& tol) {
    const int m = sig.dim();
    const int n = static_cast<int>(coeffs.size()) - 1;
    const CMatrix& j = sig.matrix();
    const CMatrix& a0 = coeffs[0];
    BallParams bp;
    bp.scale = coeff_scale(coeffs);
    if (n == 0) {
        bp.M = CMatrix::Zero(m, m);
        bp.L = hermitize(j - a0 * j * a0.adjoint());
        bp.R = hermitize(j - a0.adjoint() * j * a0);
    } else {
        std::vector<CMatrix> head(coeffs.begin(), coeffs.end() - 1);
        const CMatrix s = build_toeplitz(head, m);
        const CMatrix jn = sig.block_diag(n);
        const CMatrix p = hermitize(jn - s * jn * s.adjoint());
        const CMatrix q = hermitize(jn - s.adjoint() * jn * s);
        CMatrix y(n * m, m), z(m, n * m);
        for (int k = 1; k <= n; ++k) {
            y.block((k - 1) * m, 0, m, m) = coeffs[static_cast<size_t>(k)];
            z.block(0, (n - k) * m, m, m) = coeffs[static_cast<size_t>(k)];
        }
        bp.M = -z * jn * s.adjoint() * pinv(p, tol, bp.scale) * y;
        bp.L = hermitize(j - a0 * j * a0.adjoint() - z * pinv(q, tol, bp.scale) * z.adjoint());
        bp.R = hermitize(j - a0.adjoint() * j * a0 - y.adjoint() * pinv(p, tol, bp.scale) * y);
    }
    // One eigendecomposition per defect keeps the rank decisions of L, L^+,
    // sqrt(L) and sqrt(L)^+ consistent with each other.
    const auto kit = [&](const CMatrix& h, CMatrix& root, CMatrix& root_pinv, CMatrix& h_pinv) {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
        const Eigen::VectorXd& ev = es.eigenvalues();
        const double slack = tol.psd_eig * std::max(1.0, bp.scale);
        const double cutoff =
            tol.rank_rel * std::max(ev.cwiseAbs().maxCoeff(), bp.scale) * ev.size();
        Eigen::VectorXd sq(ev.size()), sq_inv(ev.size()), inv(ev.size());
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            if (ev(i) < -slack) {
                throw NotPSD("defect matrix eigenvalue " + std::to_string(ev(i)) +
                             " below -" + std::to_string(slack));
            }
            // eigenvalues below the rank cutoff are true zeros of the defect;
            // keeping their square roots would leak O(sqrt(eps)) garbage into
            // sqrt(L) K sqrt(R) products
            sq(i) = ev(i) > cutoff ? std::sqrt(ev(i)) : 0.0;
            sq_inv(i) = ev(i) > cutoff ? 1.0 / sq(i) : 0.0;
            inv(i) = ev(i) > cutoff ? 1.0 / ev(i) : 0.0;
        }
        const CMatrix& v = es.eigenvectors();
        root = v * sq.asDiagonal() * v.adjoint();
        root_pinv = v * sq_inv.asDiagonal() * v.adjoint();
        h_pinv = v * inv.asDiagonal() * v.adjoint();
    };
    kit(bp.L, bp.sqrtL, bp.sqrtL_pinv, bp.L_pinv);
    kit(bp.R, bp.sqrtR, bp.sqrtR_pinv, bp.R_pinv);
    return bp;
}

}  // namespace

PotapovSeq::PotapovSeq(SignatureMatrix j, std::vector<CMatrix> coeffs, Tolerances tol)
    : signature_(std::move(j)), coeffs_(std::move(coeffs)), tol_(tol) {
    if (coeffs_.empty()) throw InvalidParam("a sequence needs at least A_0");
    const int m = signature_.dim();
    for (const CMatrix& a : coeffs_) {
        if (a.rows() != m || a.cols() != m) {
            throw DimensionMismatch("all coefficients must be m x m");
        }
    }
    toeplitz_ = build_toeplitz(coeffs_, m);
    defect_scale_ = coeff_scale(coeffs_);
    const CMatrix jn = signature_.block_diag(order() + 1);
    defect_p_ = hermitize(jn - toeplitz_ * jn * toeplitz_.adjoint());
    defect_q_ = hermitize(jn - toeplitz_.adjoint() * jn * toeplitz_);
    switch (j_contractivity(toeplitz_, jn, tol_)) {
        case Contractivity::Strict: classification_ = Classification::Strict; break;
        case Contractivity::Boundary: classification_ = Classification::Degenerate; break;
        case Contractivity::No: classification_ = Classification::Invalid; break;
    }
    if (classification_ != Classification::Invalid) {
        ball_ = make_ball(signature_, coeffs_, tol_);
    }
}

const BallParams& PotapovSeq::ball() const {
    if (!ball_) throw NotPotapov("sequence is not a J-Potapov sequence");
    return *ball_;
}

CMatrix PotapovSeq::y(int k) const {
    const int m = dim();
    if (k < 1 || k > order()) throw DimensionMismatch("y(k) needs 1 <= k <= n");
    CMatrix out(k * m, m);
    for (int j = 1; j <= k; ++j) {
        out.block((j - 1) * m, 0, m, m) = coeffs_[static_cast<size_t>(j)];
    }
    return out;
}

CMatrix PotapovSeq::z(int k) const {
    const int m = dim();
    if (k < 1 || k > order()) throw DimensionMismatch("z(k) needs 1 <= k <= n");
    CMatrix out(m, k * m);
    for (int j = 1; j <= k; ++j) {
        out.block(0, (k - j) * m, m, m) = coeffs_[static_cast<size_t>(j)];
    }
    return out;
}

PotapovSeq PotapovSeq::prefix(int k) const {
    if (k < 0 || k > order()) throw DimensionMismatch("prefix order out of range");
    std::vector<CMatrix> head(coeffs_.begin(), coeffs_.begin() + k + 1);
    return PotapovSeq(signature_, std::move(head), tol_);
}

CMatrix block_toeplitz(const PotapovSeq& seq) {
    return seq.toeplitz();
}

std::pair<CMatrix, CMatrix> defect_matrices(const PotapovSeq& seq) {
    return {seq.defect_p(), seq.defect_q()};
}

BallParams ball_parameters(const PotapovSeq& seq) {
    return seq.ball();
}

Classification classify(const PotapovSeq& seq) {
    return seq.classification();
}

PotapovSeq extend_central(const PotapovSeq& seq, int k) {
    if (seq.classification() == Classification::Invalid) {
        throw NotPotapov("cannot extend an invalid sequence");
    }
    PotapovSeq cur = seq;
    for (int i = 0; i < k; ++i) {
        std::vector<CMatrix> c = cur.coeffs();
        c.push_back(cur.ball().M);
        cur = PotapovSeq(cur.signature(), std::move(c), cur.tol());
    }
    return cur;
}

PotapovSeq extend_with_parameter(const PotapovSeq& seq, const CMatrix& k) {
    if (seq.classification() == Classification::Invalid) {
        throw NotPotapov("cannot extend an invalid sequence");
    }
    const Tolerances& tol = seq.tol();
    if (k.rows() != seq.dim() || k.cols() != seq.dim()) {
        throw DimensionMismatch("parameter K must be m x m");
    }
    if (spectral_norm(k) > 1.0 + tol.residual) {
        throw NotContractive("||K|| = " + std::to_string(spectral_norm(k)) + " exceeds 1");
    }
    const BallParams& bp = seq.ball();
    std::vector<CMatrix> c = seq.coeffs();
    c.push_back(bp.M + bp.sqrtL * k * bp.sqrtR);
    return PotapovSeq(seq.signature(), std::move(c), tol);
}

PotapovSeq pg_transform_seq(const PotapovSeq& seq, const SignatureMatrix& transform_j,
                            const SignatureMatrix& result_j) {
    const int m = seq.dim();
    if (transform_j.dim() != m || result_j.dim() != m) {
        throw DimensionMismatch("transform signature must match sequence dimension");
    }
    const CMatrix p = transform_j.proj_p();
    const CMatrix q = transform_j.proj_q();
    // From (P S^A + Q) = S^B (Q S^A + P), block diagonal d gives
    //   B_d = (P A_d + delta_{d0} Q - sum_{l<d} B_l Q A_{d-l}) (Q A_0 + P)^{-1}.
    const CMatrix base = q * seq.coeff(0) + p;
    Eigen::FullPivLU<CMatrix> lu(base);
    if (!lu.isInvertible() || std::abs(base.determinant()) <= seq.tol().residual) {
        throw SingularPG("det(Q_J A_0 + P_J) is numerically zero");
    }
    const CMatrix base_inv = lu.inverse();
    std::vector<CMatrix> b;
    b.reserve(seq.coeffs().size());
    for (int d = 0; d <= seq.order(); ++d) {
        CMatrix rhs = p * seq.coeff(d);
        if (d == 0) rhs += q;
        for (int l = 0; l < d; ++l) {
            rhs -= b[static_cast<size_t>(l)] * q * seq.coeff(d - l);
        }
        b.push_back(rhs * base_inv);
    }
    return PotapovSeq(result_j, std::move(b), seq.tol());
}

PotapovSeq pg_transform_seq(const PotapovSeq& seq) {
    return pg_transform_seq(seq, seq.signature(), SignatureMatrix::identity(seq.dim()));
}

PotapovSeq pg_transform_seq_inverse(const PotapovSeq& schur_seq, const SignatureMatrix& j) {
    return pg_transform_seq(schur_seq, j, j);
}

namespace {

CMatrix random_gaussian(int m, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix out(m, m);
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < m; ++k) {
            out(i, k) = Complex(g(rng), g(rng));
        }
    }
    return out;
}

}  // namespace

PotapovSeq random_strict_seq(int m, const SignatureMatrix& j, int n, std::uint64_t seed,
                             double margin, Tolerances tol) {
    if (!(margin >= 0.0 && margin < 1.0)) throw InvalidParam("margin must lie in [0, 1)");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Strictly J-contractive A_0 via the PG transform of an interior Schur
    // point B_0 = delta I + E; plain down-scaling of a Gaussian never reaches
    // the strict J-contractive set when J is indefinite. The diagonal-dominant
    // shape keeps Q_J B_0 + P_J and the J-side defects well conditioned.
    const CMatrix p = j.proj_p();
    const CMatrix q = j.proj_q();
    CMatrix a0;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 64) throw Error("random_strict_seq: failed to sample A_0");
        const double delta = 0.45 + 0.15 * unit(rng);
        CMatrix g = random_gaussian(m, rng);
        const double norm = spectral_norm(g);
        if (norm < 1e-8) continue;
        const CMatrix b0 =
            delta * CMatrix::Identity(m, m) + (0.15 * unit(rng) / norm) * g;
        const CMatrix base = q * b0 + p;
        a0 = (p * b0 + q) * base.inverse();
        const CMatrix defect = j.matrix() - a0.adjoint() * j.matrix() * a0;
        const Eigen::VectorXd ev = hermitian_eigenvalues(defect);
        if (ev.minCoeff() > 0.05 * std::max(1.0, ev.maxCoeff())) break;
    }

    PotapovSeq seq(j, {a0}, tol);
    for (int step = 0; step < n; ++step) {
        CMatrix g = random_gaussian(m, rng);
        const double norm = spectral_norm(g);
        const double target = margin * unit(rng);
        CMatrix k = norm > 1e-12 ? CMatrix((target / norm) * g) : CMatrix::Zero(m, m);
        seq = extend_with_parameter(seq, k);
    }
    return seq;
}

}  // namespace jp
