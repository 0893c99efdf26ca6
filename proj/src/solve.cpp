#include "jpotapov/solve.hpp"

#include <cmath>

namespace jp {

SchurParam SchurParam::constant(CMatrix k) {
    return SchurParam(MatrixPoly::constant(std::move(k)), true);
}

SchurParam SchurParam::poly(MatrixPoly p) {
    const bool constant = p.degree() == 0;
    return SchurParam(std::move(p), constant);
}

SchurParam SchurParam::zero(int m) {
    return SchurParam(MatrixPoly::zero(m, m), true);
}

void SchurParam::validate(int m, const Tolerances& tol) const {
    if (poly_.rows() != m || poly_.cols() != m) {
        throw InvalidParam("parameter must be m x m");
    }
    if (constant_) {
        const double norm = spectral_norm(poly_.coeff(0));
        if (norm > 1.0 + tol.residual) {
            throw InvalidParam("constant parameter has norm " + std::to_string(norm));
        }
        return;
    }
    // Polynomial parameters are certified through their coefficient prefix:
    // a Schur sequence of the same degree. Conservative but exact at the
    // degrees this library uses.
    PotapovSeq check(SignatureMatrix::identity(m), poly_.coeffs(), tol);
    if (check.classification() == Classification::Invalid) {
        throw InvalidParam("polynomial parameter coefficients are not a Schur sequence");
    }
}

namespace {

void require_admissible(const PotapovSeq& seq) {
    if (seq.classification() == Classification::Invalid) {
        throw NotPotapov("sequence is not a J-Potapov sequence");
    }
}

MatrixPoly conjugated_param(const MatrixPoly& s, const CMatrix& left, const CMatrix& right) {
    std::vector<CMatrix> out;
    out.reserve(static_cast<size_t>(s.degree()) + 1);
    for (int k = 0; k <= s.degree(); ++k) out.push_back(left * s.coeff(k) * right);
    return MatrixPoly(std::move(out));
}

}  // namespace

QuotientPair central_function(const PotapovSeq& seq) {
    require_admissible(seq);
    const FourPolys fp = four_polys_general(seq);
    return QuotientPair{RationalMatrixFn{fp.pi, fp.rho, Orientation::Left},
                        RationalMatrixFn{fp.sigma, fp.tau, Orientation::Right}};
}

QuotientPair lft_solution(const PotapovSeq& seq, const SchurParam& s) {
    return lft_solution(seq, s, four_polys_general(seq));
}

QuotientPair lft_solution(const PotapovSeq& seq, const SchurParam& s, const FourPolys& fp) {
    require_admissible(seq);
    s.validate(seq.dim(), seq.tol());
    const int n = seq.order();
    const CMatrix& j = seq.signature().matrix();
    const BallParams& bp = seq.ball();

    const MatrixPoly f_left = conjugated_param(s.as_poly(), bp.sqrtL_pinv, bp.sqrtR);
    const MatrixPoly f_right = conjugated_param(s.as_poly(), bp.sqrtL, bp.sqrtR_pinv);

    const MatrixPoly num_l = (reciprocal(fp.tau, n).left_mul(j) * f_left).shifted() + fp.pi;
    const MatrixPoly den_l = (reciprocal(fp.sigma, n).left_mul(j) * f_left).shifted() + fp.rho;
    const MatrixPoly den_r = (f_right * reciprocal(fp.pi, n).right_mul(j)).shifted() + fp.tau;
    const MatrixPoly num_r = (f_right * reciprocal(fp.rho, n).right_mul(j)).shifted() + fp.sigma;

    return QuotientPair{RationalMatrixFn{num_l, den_l, Orientation::Left},
                        RationalMatrixFn{num_r, den_r, Orientation::Right}};
}

std::vector<CMatrix> taylor_coeffs(const RationalMatrixFn& f, int k) {
    if (k < 0) throw InvalidParam("taylor_coeffs needs k >= 0");
    const CMatrix d0 = f.den.coeff(0);
    Eigen::FullPivLU<CMatrix> lu(d0);
    if (!lu.isInvertible()) {
        throw SingularAtOrigin("denominator singular at the origin");
    }
    const CMatrix d0_inv = lu.inverse();
    // den(0) invertible, so den^{-1} has a two-sided power series; build it by
    // recursive convolution and convolve with num on the recorded side.
    std::vector<CMatrix> inv_series;
    inv_series.reserve(static_cast<size_t>(k) + 1);
    inv_series.push_back(d0_inv);
    for (int j = 1; j <= k; ++j) {
        CMatrix acc = CMatrix::Zero(d0.rows(), d0.cols());
        for (int i = 1; i <= std::min(j, f.den.degree()); ++i) {
            acc += f.den.coeff(i) * inv_series[static_cast<size_t>(j - i)];
        }
        inv_series.push_back(-d0_inv * acc);
    }
    std::vector<CMatrix> out;
    out.reserve(static_cast<size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
        CMatrix acc = CMatrix::Zero(f.num.rows(), f.num.cols());
        for (int i = 0; i <= std::min(j, f.num.degree()); ++i) {
            if (f.orientation == Orientation::Left) {
                acc += f.num.coeff(i) * inv_series[static_cast<size_t>(j - i)];
            } else {
                acc += inv_series[static_cast<size_t>(j - i)] * f.num.coeff(i);
            }
        }
        out.push_back(std::move(acc));
    }
    return out;
}

UniquenessResult uniqueness(const PotapovSeq& seq) {
    require_admissible(seq);
    const BallParams& bp = seq.ball();
    const double thr = seq.tol().residual;
    const bool unique = spectral_norm(bp.L) <= thr || spectral_norm(bp.R) <= thr;
    return UniquenessResult{unique, central_function(seq).left};
}

SchurParam canonical_parameter(const PotapovSeq& seq, const SchurParam& s) {
    require_admissible(seq);
    const BallParams& bp = seq.ball();
    const CMatrix proj_left = bp.L * bp.L_pinv;
    const CMatrix proj_right = bp.R_pinv * bp.R;
    MatrixPoly projected = conjugated_param(s.as_poly(), proj_left, proj_right);
    if (s.is_constant()) return SchurParam::constant(projected.coeff(0));
    return SchurParam::poly(std::move(projected));
}

bool parameter_equivalence(const PotapovSeq& seq, const SchurParam& s1, const SchurParam& s2) {
    require_admissible(seq);
    const BallParams& bp = seq.ball();
    const MatrixPoly lhs = conjugated_param(s1.as_poly(), bp.sqrtL, bp.sqrtR);
    const MatrixPoly rhs = conjugated_param(s2.as_poly(), bp.sqrtL, bp.sqrtR);
    const double scale =
        std::max(1.0, spectral_norm(bp.sqrtL) * spectral_norm(bp.sqrtR));
    return lhs.coeff_distance(rhs) <= 100.0 * seq.tol().residual * scale;
}

bool j_unitary_boundary_test(const RationalMatrixFn& f, const SignatureMatrix& j, int samples,
                             double tol_unitary) {
    if (samples < 1) throw InvalidParam("need at least one boundary sample");
    int used = 0;
    bool consistent = true;
    for (int i = 0; i < samples; ++i) {
        const double theta = 2.0 * M_PI * static_cast<double>(i) / samples;
        const Complex z(std::cos(theta), std::sin(theta));
        const CMatrix den = f.den(z);
        if (std::abs(den.determinant()) < 1e-6) continue;
        ++used;
        const CMatrix val = f(z);
        const double defect = spectral_norm(val.adjoint() * j.matrix() * val - j.matrix());
        const double scale = std::max(1.0, spectral_norm(val));
        if (defect > tol_unitary * scale * scale) consistent = false;
    }
    if (used == 0) throw AllSamplesSingular("denominator vanished at every boundary sample");
    return consistent;
}

bool bp_product_check(const MatrixPoly& pi, const MatrixPoly& rho, const SignatureMatrix& j,
                      const Tolerances& tol) {
    const CMatrix p = j.proj_p();
    const CMatrix q = j.proj_q();
    // (II) on a disk mesh.
    const int angles = 48;
    for (int ri = 0; ri <= 10; ++ri) {
        const double r = 0.095 * ri;
        const int na = ri == 0 ? 1 : angles;
        for (int ai = 0; ai < na; ++ai) {
            const double theta = 2.0 * M_PI * ai / na;
            const Complex w = r * Complex(std::cos(theta), std::sin(theta));
            const CMatrix mix = q * pi(w) + p * rho(w);
            if (std::abs(mix.determinant()) < 1e-8) return false;
        }
    }
    // (III) on the circle.
    for (int i = 0; i < 64; ++i) {
        const double theta = 2.0 * M_PI * i / 64;
        const Complex z(std::cos(theta), std::sin(theta));
        const CMatrix rz = rho(z);
        const CMatrix pz = pi(z);
        const CMatrix diff = rz.adjoint() * j.matrix() * rz - pz.adjoint() * j.matrix() * pz;
        const double scale = std::max(1.0, rz.squaredNorm() + pz.squaredNorm());
        if (spectral_norm(diff) > 1000.0 * tol.residual * scale) return false;
    }
    return true;
}

}  // namespace jp
