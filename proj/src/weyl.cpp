#include "jpotapov/weyl.hpp"

#include <cmath>
#include <limits>

namespace jp {

namespace {

void require_strict(const PotapovSeq& seq) {
    if (seq.classification() != Classification::Strict) {
        throw NotStrict("Weyl ball theory requires a strict J-Potapov sequence");
    }
}

CMatrix pd_inverse(const CMatrix& h) {
    return hermitize(h).inverse();
}

}  // namespace

CMatrix chi(const PotapovSeq& seq, Complex w) {
    require_strict(seq);
    const int n = seq.order();
    const CMatrix& j = seq.signature().matrix();
    const FourPolys fp = four_polys_strict(seq);
    const BallParams& bp = seq.ball();
    const CMatrix rho_w = fp.rho(w);
    Eigen::FullPivLU<CMatrix> rho_lu(rho_w);
    if (!rho_lu.isInvertible()) {
        throw SingularDenominator("det rho(w) = 0");
    }
    const CMatrix primary =
        w * bp.sqrtR * rho_lu.solve(j * reciprocal(fp.sigma, n)(w)) * bp.sqrtL_pinv;
    const CMatrix tau_w = fp.tau(w);
    Eigen::FullPivLU<CMatrix> tau_lu(tau_w);
    if (tau_lu.isInvertible()) {
        const CMatrix alternate = w * bp.sqrtR_pinv * reciprocal(fp.pi, n)(w) * j *
                                  tau_lu.inverse() * bp.sqrtL;
        const double scale = std::max(1.0, primary.norm());
        if ((primary - alternate).norm() > 1e-6 * scale) {
            throw Error("chi: rho- and tau-based forms disagree");
        }
    }
    return primary;
}

bool in_common_holomorphy(const PotapovSeq& seq, Complex w) {
    require_strict(seq);
    const FourPolys fp = four_polys_strict(seq);
    const double tol = seq.tol().residual;
    if (std::abs(fp.rho(w).determinant()) <= tol) return false;
    return spectral_norm(chi(seq, w)) < 1.0 - tol;
}

double r0(const PotapovSeq& seq) {
    require_strict(seq);
    if (seq.signature().is_identity()) return 1.0;
    const BallParams bp = seq.prefix(0).ball();
    const CMatrix& j = seq.signature().matrix();
    const CMatrix a0 = seq.coeff(0);
    const double primary = 1.0 / spectral_norm(bp.sqrtR * j * a0.adjoint() * bp.sqrtL_pinv);
    const double alternate = 1.0 / spectral_norm(bp.sqrtR_pinv * a0.adjoint() * j * bp.sqrtL);
    if (std::abs(primary - alternate) > 1e-10 * std::max(1.0, primary)) {
        throw Error("r0: the two closed forms disagree");
    }
    return primary;
}

WeylBall weyl_ball(const PotapovSeq& seq, Complex w) {
    require_strict(seq);
    if (!in_common_holomorphy(seq, w)) {
        throw OutsideCommonDomain("w is outside the common holomorphy set");
    }
    const int n = seq.order();
    const CMatrix& j = seq.signature().matrix();
    const FourPolys fp = four_polys_strict(seq);
    const BallParams& bp = seq.ball();
    const CMatrix l_inv = pd_inverse(bp.L);
    const CMatrix r_inv = pd_inverse(bp.R);
    const double aw = std::norm(w);  // |w|^2

    const CMatrix tau_w = fp.tau(w);
    const CMatrix rho_w = fp.rho(w);
    const CMatrix sigma_w = fp.sigma(w);
    const CMatrix pi_w = fp.pi(w);
    const CMatrix pi_rec = reciprocal(fp.pi, n)(w);
    const CMatrix rho_rec = reciprocal(fp.rho, n)(w);
    const CMatrix sigma_rec = reciprocal(fp.sigma, n)(w);
    const CMatrix tau_rec = reciprocal(fp.tau, n)(w);

    const CMatrix phi = hermitize(tau_w.adjoint() * l_inv * tau_w -
                                  aw * j * pi_rec.adjoint() * r_inv * pi_rec * j);
    const CMatrix psi = hermitize(rho_w * r_inv * rho_w.adjoint() -
                                  aw * j * sigma_rec * l_inv * sigma_rec.adjoint() * j);

    WeylBall ball;
    ball.w = w;
    ball.order = n;
    ball.l_raw = hermitize(pd_inverse(phi));
    ball.r_raw = hermitize(pd_inverse(psi));
    ball.center =
        ball.l_raw * (tau_w.adjoint() * l_inv * sigma_w - aw * j * pi_rec.adjoint() * r_inv * rho_rec * j);
    const CMatrix center_alt =
        (pi_w * r_inv * rho_w.adjoint() - aw * j * tau_rec * l_inv * sigma_rec.adjoint() * j) *
        ball.r_raw;
    if ((ball.center - center_alt).norm() > 1e-9 * std::max(1.0, ball.center.norm())) {
        throw Error("weyl_ball: Phi- and Psi-based centers disagree");
    }
    const double mod_pow = std::pow(std::abs(w), n + 1);
    ball.l_norm = mod_pow * psd_sqrt(ball.l_raw, seq.tol());
    ball.r_half = psd_sqrt(ball.r_raw, seq.tol());
    return ball;
}

double ball_membership(const WeylBall& ball, const CMatrix& x) {
    if (x.rows() != ball.center.rows() || x.cols() != ball.center.cols()) {
        throw DimensionMismatch("ball_membership: X has the wrong size");
    }
    const CMatrix diff = x - ball.center;
    const double l_scale = spectral_norm(ball.l_norm);
    if (l_scale <= 1e-14) {
        // Degenerate w = 0 ball: the value set is the single point center.
        return diff.norm() <= 1e-10 * std::max(1.0, ball.center.norm())
                   ? 0.0
                   : std::numeric_limits<double>::infinity();
    }
    Eigen::FullPivLU<CMatrix> l_lu(ball.l_norm);
    Eigen::FullPivLU<CMatrix> r_lu(ball.r_half);
    if (!l_lu.isInvertible() || !r_lu.isInvertible()) {
        throw SingularRadius("ball semi-radius is singular");
    }
    return spectral_norm(l_lu.solve(diff) * r_lu.inverse());
}

WeylBall pg_ball_transfer(const WeylBall& schur_ball, const SignatureMatrix& j) {
    const CMatrix p = j.proj_p();
    const CMatrix q = j.proj_q();
    const CMatrix& m = schur_ball.center;
    const double fade = std::pow(std::norm(schur_ball.w), schur_ball.order + 1);  // |w|^{2(n+1)}
    const CMatrix l_inv = pd_inverse(schur_ball.l_raw);
    const CMatrix r_inv = pd_inverse(schur_ball.r_raw);

    const CMatrix left_mix = m * q - p;
    const CMatrix right_mix = q * m + p;
    if (std::abs(right_mix.determinant()) < 1e-12 || std::abs(left_mix.determinant()) < 1e-12) {
        throw SingularTransfer("Q_J M + P_J is numerically singular");
    }

    WeylBall out;
    out.w = schur_ball.w;
    out.order = schur_ball.order;
    out.l_raw = hermitize(
        pd_inverse(hermitize(left_mix.adjoint() * l_inv * left_mix - fade * q * schur_ball.r_raw * q)));
    // The right-radius transfer carries Q_J on both sides of the fading term;
    // with P_J there the J = I_m transfer would fail to be the identity.
    out.r_raw = hermitize(pd_inverse(
        hermitize(right_mix * r_inv * right_mix.adjoint() - fade * q * schur_ball.l_raw * q)));
    out.center =
        ((p * m + q) * r_inv * right_mix.adjoint() - fade * p * schur_ball.l_raw * q) * out.r_raw;
    const CMatrix center_alt =
        out.l_raw * (left_mix.adjoint() * l_inv * (q - m * p) + fade * q * schur_ball.r_raw * p);
    if ((out.center - center_alt).norm() > 1e-8 * std::max(1.0, out.center.norm())) {
        throw Error("pg_ball_transfer: the two center formulas disagree");
    }
    const double mod_pow = std::pow(std::abs(out.w), out.order + 1);
    out.l_norm = mod_pow * psd_sqrt(out.l_raw);
    out.r_half = psd_sqrt(out.r_raw);
    return out;
}

std::pair<CMatrix, CMatrix> pg_unitaries(const PotapovSeq& seq) {
    require_strict(seq);
    const PotapovSeq schur = pg_transform_seq(seq);
    const BallParams& jp_ball = seq.ball();
    const BallParams& sc_ball = schur.ball();
    const CMatrix p = seq.signature().proj_p();
    const CMatrix q = seq.signature().proj_q();
    const CMatrix& b0 = schur.coeff(0);
    const CMatrix u1 = jp_ball.sqrtL * (b0 * q - p).adjoint() * sc_ball.sqrtL_pinv;
    const CMatrix u2 = jp_ball.sqrtR * (q * b0 + p) * sc_ball.sqrtR_pinv;
    return {u1, u2};
}

RationalMatrixFn extremal_function(const PotapovSeq& seq, Complex w) {
    require_strict(seq);
    if (!in_common_holomorphy(seq, w)) {
        throw OutsideCommonDomain("w is outside the common holomorphy set");
    }
    const CMatrix parameter = -chi(seq, w).adjoint();
    return lft_solution(seq, SchurParam::constant(parameter)).left;
}

LimitTable limit_study(const PotapovSeq& tower, Complex w, int n_max) {
    require_strict(tower);
    if (n_max > tower.order()) throw InvalidParam("limit_study: tower shorter than n_max");
    LimitTable table;
    int consecutive = 0;
    for (int k = 0; k <= n_max; ++k) {
        const PotapovSeq pre = tower.prefix(k);
        if (!in_common_holomorphy(pre, w)) {
            if (!table.rows.empty()) {
                // H^(k) grows with k; losing the point again would contradict that.
                throw Error("limit_study: point left the common holomorphy set");
            }
            continue;
        }
        const WeylBall ball = weyl_ball(pre, w);
        LimitRow row{k, ball.center, ball.l_raw, ball.r_raw,
                     numerical_rank(ball.l_raw, tower.tol()),
                     numerical_rank(ball.r_raw, tower.tol())};
        if (!table.rows.empty()) {
            const double step = (row.l_raw - table.rows.back().l_raw).norm();
            if (step <= 1e-9) {
                if (++consecutive >= 3 && !table.stagnated) {
                    table.stagnated = true;
                    table.stagnation_order = k;
                }
            } else {
                consecutive = 0;
            }
        }
        table.rows.push_back(std::move(row));
    }
    if (table.rows.empty()) {
        throw OutsideCommonDomain("w is outside the common holomorphy set at every order");
    }
    table.l_limit = table.rows.back().l_raw;
    table.r_limit = table.rows.back().r_raw;
    table.rank_l_limit = table.rows.back().rank_l;
    table.rank_r_limit = table.rows.back().rank_r;

    // Schur-side limits mapped through the PG transform, at matched order.
    const int last = table.rows.back().order;
    const PotapovSeq schur = pg_transform_seq(tower.prefix(last));
    const WeylBall sc = weyl_ball(schur, w);
    const CMatrix p = tower.signature().proj_p();
    const CMatrix q = tower.signature().proj_q();
    const CMatrix g = sc.center;
    const CMatrix left_mix = g * q - p;
    const CMatrix right_mix = q * g + p;
    const CMatrix left_inv = left_mix.inverse();
    const CMatrix right_inv = right_mix.inverse();
    table.l_pg_mapped = hermitize(left_inv * sc.l_raw * left_inv.adjoint());
    table.r_pg_mapped = hermitize(right_inv.adjoint() * sc.r_raw * right_inv);
    return table;
}

}  // namespace jp
