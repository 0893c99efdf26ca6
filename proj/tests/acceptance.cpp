// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is pinned here, not configurable.

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "jpotapov/weyl.hpp"

using namespace jp;

namespace {

struct Harness {
    bool all_ok = true;
    int index = 0;

    void run(const std::string& name, const std::function<void(double&)>& body) {
        ++index;
        double worst = 0.0;
        std::string note;
        bool ok = true;
        try {
            body(worst);
        } catch (const std::exception& e) {
            ok = false;
            note = std::string(" [") + e.what() + "]";
        }
        ok = ok && worst <= 1.0;
        all_ok = all_ok && ok;
        std::printf("%s  %2d  %s (worst normalized residual %.3e)%s\n", ok ? "PASS" : "FAIL",
                    index, name.c_str(), worst, note.c_str());
    }
};

CMatrix random_gaussian(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix out(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) out(i, j) = Complex(g(rng), g(rng));
    }
    return out;
}

CMatrix random_contraction(int m, double norm_target, std::mt19937_64& rng) {
    CMatrix g = random_gaussian(m, m, rng);
    const double n = spectral_norm(g);
    return n > 1e-12 ? CMatrix((norm_target / n) * g) : CMatrix::Zero(m, m);
}

SignatureMatrix random_signature(int m, std::mt19937_64& rng, bool force_mixed = false) {
    std::uniform_int_distribution<int> coin(0, 1);
    for (;;) {
        std::vector<int> signs(static_cast<size_t>(m));
        bool has_minus = false;
        for (int i = 0; i < m; ++i) {
            signs[static_cast<size_t>(i)] = coin(rng) ? 1 : -1;
            has_minus = has_minus || signs[static_cast<size_t>(i)] < 0;
        }
        if (force_mixed && !has_minus) continue;
        return SignatureMatrix::diagonal(signs);
    }
}

Complex random_disk_point(double radius, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = radius * std::sqrt(u(rng));
    const double theta = 2.0 * M_PI * u(rng);
    return Complex(r * std::cos(theta), r * std::sin(theta));
}

CMatrix random_unitary(int m, std::mt19937_64& rng) {
    const CMatrix g = random_gaussian(m, m, rng);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    return q;
}

CMatrix scalar1(Complex z) {
    CMatrix m(1, 1);
    m(0, 0) = z;
    return m;
}

double rel(double value, double scale) {
    return value / std::max(1.0, scale);
}

}  // namespace

int main() {
    Harness h;

    // 1. Interpolation fidelity on 200 strict instances.
    h.run("interpolation fidelity (strict)", [&](double& worst) {
        std::mt19937_64 rng(1001);
        for (int i = 0; i < 200; ++i) {
            const int m = 1 + i % 3;
            const int n = (i / 3) % 6;
            const PotapovSeq seq = random_strict_seq(m, random_signature(m, rng), n, rng(), 0.55);
            const SchurParam s = SchurParam::constant(random_contraction(m, 0.95, rng));
            const auto coeffs = taylor_coeffs(lft_solution(seq, s).left, n);
            for (int k = 0; k <= n; ++k) {
                const double res = (coeffs[static_cast<size_t>(k)] - seq.coeff(k))
                                       .cwiseAbs()
                                       .maxCoeff();
                worst = std::max(worst, res / 1e-9);
            }
        }
    });

    // 2. Degenerate fidelity on 50 boundary/rank-deficient instances.
    h.run("interpolation fidelity (degenerate) + canonical parameter", [&](double& worst) {
        std::mt19937_64 rng(2002);
        for (int i = 0; i < 50; ++i) {
            const int m = 1 + i % 3;
            const SignatureMatrix j = random_signature(m, rng);
            PotapovSeq seq = [&]() {
                if (i % 2 == 0) {
                    // strict seed pushed onto the boundary by a norm-one K
                    PotapovSeq strict = random_strict_seq(m, j, i % 3, rng(), 0.5);
                    CMatrix k;
                    if (m == 1) {
                        k = scalar1(std::polar(1.0, 0.3 + 0.1 * i));
                    } else {
                        const CMatrix u = random_unitary(m, rng);
                        const CMatrix v = random_unitary(m, rng);
                        Eigen::VectorXd sv(m);
                        for (int d = 0; d < m; ++d) sv(d) = d == 0 ? 1.0 : 0.4;
                        k = u * sv.cast<Complex>().asDiagonal() * v.adjoint();
                    }
                    return extend_with_parameter(strict, k);
                }
                // A_0 with rank-deficient defect via the PG transform of a
                // boundary Schur point
                for (;;) {
                    const CMatrix u = random_unitary(m, rng);
                    const CMatrix v = random_unitary(m, rng);
                    Eigen::VectorXd sv(m);
                    for (int d = 0; d < m; ++d) sv(d) = d == 0 ? 1.0 : 0.5;
                    const CMatrix b0 = u * sv.cast<Complex>().asDiagonal() * v.adjoint();
                    if (std::abs((j.proj_q() * b0 + j.proj_p()).determinant()) < 0.1) continue;
                    const PotapovSeq point(SignatureMatrix::identity(m), {b0});
                    PotapovSeq a = pg_transform_seq_inverse(point, j);
                    return extend_central(a, i % 3);
                }
            }();
            if (seq.classification() != Classification::Degenerate) {
                worst = std::numeric_limits<double>::infinity();
                continue;
            }
            const int n = seq.order();
            const SchurParam s = SchurParam::constant(random_contraction(m, 0.9, rng));
            const QuotientPair f = lft_solution(seq, s);
            const auto coeffs = taylor_coeffs(f.left, n);
            for (int k = 0; k <= n; ++k) {
                const double res = (coeffs[static_cast<size_t>(k)] - seq.coeff(k))
                                       .cwiseAbs()
                                       .maxCoeff();
                worst = std::max(worst, res / 1e-8);
            }
            const QuotientPair f_sharp = lft_solution(seq, canonical_parameter(seq, s));
            int used = 0;
            while (used < 20) {
                const Complex w = random_disk_point(0.8, rng);
                // solutions are meromorphic; stay away from denominator zeros
                if (std::abs(f.left.den(w).determinant()) < 1e-3) continue;
                ++used;
                worst = std::max(worst, (f.left(w) - f_sharp.left(w)).norm() / 1e-9);
            }
        }
    });

    // 3. Central Taylor coefficients continue with the ball centers.
    h.run("central-sequence consistency", [&](double& worst) {
        std::mt19937_64 rng(3003);
        for (int i = 0; i < 60; ++i) {
            const int m = 1 + i % 3;
            const int n = i % 4;
            const PotapovSeq seq = random_strict_seq(m, random_signature(m, rng), n, rng(), 0.5);
            const PotapovSeq tower = extend_central(seq, 3);
            const auto coeffs = taylor_coeffs(central_function(seq).left, n + 3);
            for (int k = n + 1; k <= n + 3; ++k) {
                worst = std::max(
                    worst, (coeffs[static_cast<size_t>(k)] - tower.coeff(k)).norm() / 1e-9);
            }
        }
    });

    // 4. Algebraic identity suite at 20 sample points per instance.
    h.run("algebraic identity suite", [&](double& worst) {
        std::mt19937_64 rng(4004);
        for (int i = 0; i < 25; ++i) {
            const int m = 1 + i % 3;
            const int n = 1 + i % 4;
            const SignatureMatrix sig = random_signature(m, rng);
            const PotapovSeq seq = random_strict_seq(m, sig, n, rng(), 0.5);
            const CMatrix& j = sig.matrix();
            const BallParams& bp = seq.ball();
            const FourPolys fp = four_polys_general(seq);
            const ResolventPair rp = resolvents(seq);
            const ResolventFactors fac = resolvent_factors(seq);
            MatrixPoly prod = fac.c0;
            for (const MatrixPoly& g : fac.g) prod = prod * g;
            worst = std::max(worst, prod.coeff_distance(rp.c) / 1e-9);
            const CMatrix u = resolvent_symplectic_unit(m);
            CMatrix jbox = CMatrix::Zero(2 * m, 2 * m);
            jbox.topLeftCorner(m, m) = j;
            jbox.bottomRightCorner(m, m) = -j;
            CMatrix pm = CMatrix::Identity(2 * m, 2 * m);
            pm.bottomRightCorner(m, m) *= -1.0;
            for (int t = 0; t < 20; ++t) {
                const Complex w = random_disk_point(0.95, rng);
                const Complex wn = std::pow(w, n);
                const CMatrix cd_l = fp.tau(w) * j * reciprocal(fp.tau, n)(w) -
                                     fp.sigma(w) * j * reciprocal(fp.sigma, n)(w) - wn * bp.L;
                const CMatrix cd_r = reciprocal(fp.rho, n)(w) * j * fp.rho(w) -
                                     reciprocal(fp.pi, n)(w) * j * fp.pi(w) - wn * bp.R;
                worst = std::max(worst, rel(cd_l.norm(), bp.L.norm()) / 1e-9);
                worst = std::max(worst, rel(cd_r.norm(), bp.R.norm()) / 1e-9);
                worst = std::max(
                    worst, (fp.tau(w) * fp.pi(w) - fp.sigma(w) * fp.rho(w)).norm() / 1e-9);
                const Complex det_target = std::pow(w, (n + 1) * m);
                worst = std::max(worst, rel(std::abs(rp.c(w).determinant() - det_target),
                                            std::abs(det_target)) /
                                            1e-9);
                worst = std::max(
                    worst, (rp.d(w) * u * rp.c(w) - std::pow(w, n + 1) * u).norm() / 1e-9);
                const Complex z = std::polar(1.0, 2.0 * M_PI * t / 20.0 + 0.05 * i);
                const CMatrix cz = rp.c(z);
                worst = std::max(
                    worst, rel((cz.adjoint() * jbox * cz - pm).norm(), cz.squaredNorm()) / 1e-9);
            }
        }
    });

    // 5. Weyl ball containment and extremality.
    h.run("weyl ball containment / extremality / Schwarz", [&](double& worst) {
        std::mt19937_64 rng(5005);
        for (int i = 0; i < 200; ++i) {
            const int m = 1 + i % 3;
            const int n = i % 5;
            const PotapovSeq seq = random_strict_seq(m, random_signature(m, rng), n, rng(), 0.5);
            Complex w = random_disk_point(0.75 * r0(seq), rng);
            if (std::abs(w) < 1e-3) w += 0.05;
            const WeylBall ball = weyl_ball(seq, w);
            const SchurParam s = SchurParam::constant(random_contraction(m, 1.0, rng));
            const double mu = ball_membership(ball, lft_solution(seq, s).left(w));
            worst = std::max(worst, (mu - 1.0) / 1e-8);
            if (m == 1) {
                const SchurParam uni =
                    SchurParam::constant(scalar1(std::polar(1.0, 0.2 + 0.03 * i)));
                const double edge = ball_membership(ball, lft_solution(seq, uni).left(w));
                worst = std::max(worst, std::abs(edge - 1.0) / 1e-6);
            }
        }
        // scalar Schwarz lemma ball, exactly
        const PotapovSeq schwarz(SignatureMatrix::identity(1), {scalar1(0.0)});
        const Complex w(0.37, -0.21);
        const WeylBall ball = weyl_ball(schwarz, w);
        worst = std::max(worst, ball.center.norm() / 1e-12);
        worst = std::max(worst, std::abs(ball.l_norm(0, 0) - Complex(std::abs(w), 0)) / 1e-12);
        worst = std::max(worst, std::abs(ball.r_half(0, 0) - Complex(1, 0)) / 1e-12);
    });

    // 6. Ball-parameter laws: monotone radii, equal determinants, stagnation.
    h.run("ball-parameter laws", [&](double& worst) {
        std::mt19937_64 rng(6006);
        for (int i = 0; i < 100; ++i) {
            const int m = 1 + i % 2;
            const int n = i % 3;
            const PotapovSeq seq =
                random_strict_seq(m, random_signature(m, rng), n + 1, rng(), 0.5);
            Complex w = random_disk_point(0.7 * r0(seq.prefix(n)), rng);
            if (std::abs(w) < 1e-3) w += 0.05;
            const WeylBall lo = weyl_ball(seq.prefix(n), w);
            const WeylBall hi = weyl_ball(seq, w);
            worst = std::max(worst,
                             -hermitian_eigenvalues(lo.l_raw - hi.l_raw).minCoeff() / 1e-10);
            worst = std::max(worst,
                             -hermitian_eigenvalues(lo.r_raw - hi.r_raw).minCoeff() / 1e-10);
            const double dl = hi.l_raw.determinant().real();
            const double dr = hi.r_raw.determinant().real();
            worst = std::max(worst, rel(std::abs(dl - dr), std::abs(dl)) / 1e-8);

            // stagnation booleans (i), (ii), (iii) agree; random extensions
            // generically stagnate nowhere, extremal ones everywhere
            const PotapovSeq pre = seq.prefix(n);
            const BallParams& bp = pre.ball();
            const CMatrix kk = bp.sqrtL_pinv * (seq.coeff(n + 1) - bp.M) * bp.sqrtR_pinv;
            const double thr = 1e-8 * std::max(1.0, lo.l_raw.norm());
            const bool b1 = (lo.l_raw - hi.l_raw).norm() <= thr;
            const bool b2 = (lo.r_raw - hi.r_raw).norm() <= thr;
            const bool b3 = (chi(pre, w) + kk.adjoint()).norm() <= 1e-7;
            if (b1 != b2 || b2 != b3) {
                worst = std::numeric_limits<double>::infinity();
            }

            // the stagnating extension: (i)-(iii) hold there, and at w != 0 the
            // next center coincides with the next central function, which is
            // statement (iv)
            const PotapovSeq extremal =
                extend_with_parameter(pre, -chi(pre, w).adjoint());
            const WeylBall ext = weyl_ball(extremal, w);
            worst = std::max(worst, (lo.l_raw - ext.l_raw).norm() /
                                        (1e-8 * std::max(1.0, lo.l_raw.norm())));
            worst = std::max(worst, (lo.r_raw - ext.r_raw).norm() /
                                        (1e-8 * std::max(1.0, lo.r_raw.norm())));
            const CMatrix f_c = central_function(extremal).left(w);
            worst = std::max(worst,
                             (ext.center - f_c).norm() / (1e-7 * std::max(1.0, f_c.norm())));
        }
    });

    // 7. Potapov-Ginzburg coherence.
    h.run("pg coherence (involution, unitaries, ball transfer)", [&](double& worst) {
        std::mt19937_64 rng(7007);
        for (int i = 0; i < 100; ++i) {
            const int m = 1 + i % 3;
            const int n = i % 5;
            const SignatureMatrix j = random_signature(m, rng);
            const PotapovSeq seq = random_strict_seq(m, j, n, rng(), 0.5);
            const PotapovSeq schur = pg_transform_seq(seq);
            const PotapovSeq back = pg_transform_seq_inverse(schur, j);
            for (int k = 0; k <= n; ++k) {
                worst = std::max(worst, (back.coeff(k) - seq.coeff(k)).norm() / 1e-10);
            }

            const auto [u1, u2] = pg_unitaries(seq);
            worst = std::max(worst,
                             (u1.adjoint() * u1 - CMatrix::Identity(m, m)).norm() / 1e-9);
            worst = std::max(worst,
                             (u2.adjoint() * u2 - CMatrix::Identity(m, m)).norm() / 1e-9);
            const ResolventPair jp_res = resolvents(seq);
            const ResolventPair sc_res = resolvents(schur);
            CMatrix mix = CMatrix::Zero(2 * m, 2 * m);
            mix.topLeftCorner(m, m) = j.proj_p();
            mix.topRightCorner(m, m) = j.proj_q();
            mix.bottomLeftCorner(m, m) = j.proj_q();
            mix.bottomRightCorner(m, m) = j.proj_p();
            CMatrix u = CMatrix::Zero(2 * m, 2 * m);
            u.topLeftCorner(m, m) = -u1;
            u.bottomRightCorner(m, m) = u2;
            const MatrixPoly lhs = sc_res.c.left_mul(mix);
            const MatrixPoly rhs = jp_res.c.right_mul(u);
            worst = std::max(
                worst, lhs.coeff_distance(rhs) / (1e-9 * std::max(1.0, rhs.coeff(0).norm())));

            Complex w = random_disk_point(0.7 * r0(seq), rng);
            if (std::abs(w) < 1e-3) w += 0.05;
            const WeylBall direct = weyl_ball(seq, w);
            const WeylBall sball = weyl_ball(schur, w);
            const CMatrix p = j.proj_p();
            const CMatrix q = j.proj_q();
            const double fade = std::pow(std::norm(w), n + 1);
            const CMatrix l_inv = hermitize(sball.l_raw).inverse();
            const CMatrix r_inv = hermitize(sball.r_raw).inverse();
            const CMatrix& mm = sball.center;
            const CMatrix f3 = hermitize(
                ((mm * q - p).adjoint() * l_inv * (mm * q - p) - fade * q * sball.r_raw * q)
                    .eval())
                                   .inverse();
            const CMatrix f4 = hermitize(((q * mm + p) * r_inv * (q * mm + p).adjoint() -
                                          fade * q * sball.l_raw * q)
                                             .eval())
                                   .inverse();
            const CMatrix f1 =
                ((p * mm + q) * r_inv * (q * mm + p).adjoint() - fade * p * sball.l_raw * q) * f4;
            const CMatrix f2 =
                f3 * ((mm * q - p).adjoint() * l_inv * (q - mm * p) + fade * q * sball.r_raw * p);
            const double scale = std::max(1.0, direct.l_raw.norm() + direct.r_raw.norm());
            worst = std::max(worst, (f3 - direct.l_raw).norm() / (1e-8 * scale));
            worst = std::max(worst, (f4 - direct.r_raw).norm() / (1e-8 * scale));
            worst = std::max(worst, (f1 - direct.center).norm() / (1e-8 * scale));
            worst = std::max(worst, (f2 - direct.center).norm() / (1e-8 * scale));
        }
    });

    // 8. Holomorphy radius r_0.
    h.run("holomorphy radius", [&](double& worst) {
        std::mt19937_64 rng(8008);
        for (int i = 0; i < 50; ++i) {
            const int m = 1 + i % 3;
            const SignatureMatrix j = random_signature(m, rng, /*force_mixed=*/true);
            const PotapovSeq seq = random_strict_seq(m, j, i % 4, rng(), 0.5);
            const double radius = 0.99 * r0(seq);
            for (int t = 0; t < 8; ++t) {
                const Complex w = std::polar(radius, 2.0 * M_PI * t / 8.0);
                if (!in_common_holomorphy(seq, w)) {
                    worst = std::numeric_limits<double>::infinity();
                }
            }
        }
        // scalar witness: J = -1, A_0 = 2, S = 1 has its pole at 1/2 = r_0
        const PotapovSeq two(SignatureMatrix::diagonal({-1}), {scalar1(2.0)});
        worst = std::max(worst, std::abs(r0(two) - 0.5) / 1e-12);
        const QuotientPair f = lft_solution(two, SchurParam::constant(scalar1(1.0)));
        const CMatrix d0 = f.left.den.coeff(0);
        const CMatrix d1 = f.left.den.coeff(1);
        const Complex root = -d0(0, 0) / d1(0, 0);
        worst = std::max(worst, std::abs(root - Complex(0.5, 0)) / 1e-12);
    });

    // 9. Uniqueness.
    h.run("uniqueness and inner boundary behaviour", [&](double& worst) {
        std::mt19937_64 rng(9009);
        for (int i = 0; i < 25; ++i) {
            const int m = 1 + i % 3;
            const SignatureMatrix j = random_signature(m, rng);
            const PotapovSeq strict = random_strict_seq(m, j, i % 3, rng(), 0.5);
            const PotapovSeq sealed = extend_with_parameter(strict, random_unitary(m, rng));
            if (!uniqueness(sealed).unique) {
                worst = std::numeric_limits<double>::infinity();
                continue;
            }
            const QuotientPair f0 = lft_solution(sealed, SchurParam::zero(m));
            const QuotientPair f1 =
                lft_solution(sealed, SchurParam::constant(random_contraction(m, 0.9, rng)));
            for (int t = 0; t < 10; ++t) {
                const Complex w = random_disk_point(0.55, rng);
                worst = std::max(worst, (f0.left(w) - f1.left(w)).norm() / 1e-10);
            }
            if (!j_unitary_boundary_test(central_function(sealed).left, j)) {
                worst = std::numeric_limits<double>::infinity();
            }
            if (uniqueness(strict).unique ||
                j_unitary_boundary_test(central_function(strict).left, j)) {
                worst = std::numeric_limits<double>::infinity();
            }
        }
    });

    // 10. Limit behaviour of the ball parameters.
    h.run("limit behaviour (central and extremal towers)", [&](double& worst) {
        std::mt19937_64 rng(1010);
        const SignatureMatrix j = SignatureMatrix::diagonal({1, -1});
        const PotapovSeq seed = random_strict_seq(2, j, 2, 31415, 0.5);
        const int n_max = 16;
        const PotapovSeq tower = extend_central(seed, n_max - seed.order());
        const Complex w = 0.5 * r0(seed) * std::polar(1.0, 0.8);
        const CMatrix f_at_w = central_function(seed).left(w);
        const LimitTable table = limit_study(tower, w, n_max);
        double prev = std::numeric_limits<double>::infinity();
        for (const LimitRow& row : table.rows) {
            const double err = (row.center - f_at_w).norm();
            if (row.order >= 12) {
                worst = std::max(worst, err / 1e-6);
                if (prev > 1e-13 && err > prev + 1e-13) {
                    worst = std::numeric_limits<double>::infinity();
                }
            }
            prev = err;
        }

        // extremal tower: constant radii rows, constant terminal rank
        const Complex w_star = 0.4 * r0(seed) * std::polar(1.0, 0.3);
        PotapovSeq ext = seed;
        for (int step = 0; step < 9; ++step) {
            ext = extend_with_parameter(ext, -chi(ext, w_star).adjoint());
        }
        const LimitTable ext_table = limit_study(ext, w_star, ext.order());
        for (const LimitRow& row : ext_table.rows) {
            if (row.order < seed.order()) continue;
            worst = std::max(worst, (row.l_raw - ext_table.l_limit).norm() /
                                        (1e-8 * std::max(1.0, ext_table.l_limit.norm())));
            worst = std::max(worst, (row.r_raw - ext_table.r_limit).norm() /
                                        (1e-8 * std::max(1.0, ext_table.r_limit.norm())));
        }
        std::vector<int> ranks;
        for (int t = 0; t < 10; ++t) {
            const Complex v = random_disk_point(0.45 * r0(seed), rng);
            ranks.push_back(limit_study(ext, v, ext.order()).rank_l_limit);
        }
        for (int r : ranks) {
            if (r != ranks.front()) worst = std::numeric_limits<double>::infinity();
        }
    });

    // 11. Blaschke-Potapov elementary factors.
    h.run("blaschke-potapov factors", [&](double& worst) {
        std::mt19937_64 rng(1111);
        const SignatureMatrix j11 = SignatureMatrix::diagonal({1, -1});
        const CMatrix jm = j11.matrix();
        CMatrix p = CMatrix::Zero(2, 2);
        p(0, 0) = 1.0;
        CMatrix q = CMatrix::Zero(2, 2);
        q(1, 1) = 1.0;
        CMatrix r(2, 2);
        r << 0.5, -0.5, 0.5, -0.5;
        const Complex alpha(0.25, -0.35);
        const Complex u_pole(std::cos(0.6), std::sin(0.6));
        const RationalMatrixFn first = bp_factor(BPFirst{alpha, p}, j11);
        const RationalMatrixFn second = bp_factor(BPSecond{alpha, q}, j11);
        const RationalMatrixFn third = bp_factor(BPThird{u_pole, r}, j11);
        for (int t = 0; t < 10; ++t) {
            const Complex w = random_disk_point(0.9, rng);
            const Complex b = blaschke_factor(alpha, w);
            const CMatrix f1 = first(w);
            worst = std::max(
                worst,
                (jm - f1.adjoint() * jm * f1 - (1.0 - std::norm(b)) * jm * p).norm() / 1e-10);
            if (std::abs(b) > 0.05) {
                const CMatrix f2 = second(w);
                const double gain = (1.0 - std::norm(b)) / std::norm(b);
                worst = std::max(
                    worst,
                    (jm - f2.adjoint() * jm * f2 - gain * (-(jm * q))).norm() / 1e-10);
            }
            const CMatrix f3 = third(w);
            const double gain3 = 2.0 * (1.0 - std::norm(w)) / std::norm(u_pole - w);
            worst = std::max(
                worst, (jm - f3.adjoint() * jm * f3 - gain3 * (jm * r)).norm() / 1e-10);
        }
        if (!bp_product_check(first.num, first.den, j11) ||
            !bp_product_check(third.num, third.den, j11)) {
            worst = std::numeric_limits<double>::infinity();
        }
        if (bp_product_check(MatrixPoly::constant(0.5 * CMatrix::Identity(2, 2)),
                             MatrixPoly::identity(2), j11)) {
            worst = std::numeric_limits<double>::infinity();
        }
    });

    std::printf(h.all_ok ? "acceptance: all criteria passed\n"
                         : "acceptance: FAILURES present\n");
    return h.all_ok ? 0 : 1;
}
