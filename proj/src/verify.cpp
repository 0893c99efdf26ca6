#include "jpotapov/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "jpotapov/weyl.hpp"

namespace jp {

namespace {

struct Check {
    std::string name;
    std::function<double()> worst_residual;  // <= 1 means pass (normalized)
};

CMatrix random_gaussian(int m, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix out(m, m);
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < m; ++k) out(i, k) = Complex(g(rng), g(rng));
    }
    return out;
}

SignatureMatrix random_signature(int m, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<int> signs(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) signs[static_cast<size_t>(i)] = coin(rng) ? 1 : -1;
    return SignatureMatrix::diagonal(signs);
}

CMatrix random_contraction(int m, double norm_target, std::mt19937_64& rng) {
    CMatrix g = random_gaussian(m, rng);
    const double n = spectral_norm(g);
    return n > 1e-12 ? CMatrix((norm_target / n) * g) : CMatrix::Zero(m, m);
}

Complex random_disk_point(double radius, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = radius * std::sqrt(u(rng));
    const double theta = 2.0 * M_PI * u(rng);
    return Complex(r * std::cos(theta), r * std::sin(theta));
}

}  // namespace

bool run_verification(std::uint64_t seed, int count, std::ostream& out) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> mdist(1, 3);
    std::uniform_int_distribution<int> ndist(0, 4);

    struct Instance {
        PotapovSeq seq;
        Complex w;
    };
    std::vector<Instance> instances;
    for (int i = 0; i < count; ++i) {
        const int m = mdist(rng);
        const int n = ndist(rng);
        const SignatureMatrix j = random_signature(m, rng);
        PotapovSeq seq = random_strict_seq(m, j, n, rng(), 0.55);
        const double radius = 0.6 * r0(seq);
        instances.push_back(Instance{std::move(seq), random_disk_point(radius, rng)});
    }

    std::vector<Check> checks;

    checks.push_back({"penrose identities", [&] {
        double worst = 0.0;
        for (int i = 0; i < count; ++i) {
            const CMatrix m = random_gaussian(3, rng);
            const CMatrix mp = pinv(m);
            worst = std::max(worst, (m * mp * m - m).norm() / 1e-10);
            worst = std::max(worst, (mp * m * mp - mp).norm() / 1e-10);
            worst = std::max(worst, (m * mp - (m * mp).adjoint()).norm() / 1e-10);
        }
        return worst;
    }});

    checks.push_back({"psd_sqrt squares back", [&] {
        double worst = 0.0;
        for (int i = 0; i < count; ++i) {
            const CMatrix x = random_gaussian(3, rng);
            const CMatrix h = x * x.adjoint();
            const CMatrix r = psd_sqrt(h);
            worst = std::max(worst, (r * r - h).norm() / (1e-10 * std::max(1.0, h.norm())));
        }
        return worst;
    }});

    checks.push_back({"hereditary prefixes", [&] {
        for (const Instance& inst : instances) {
            for (int k = 0; k <= inst.seq.order(); ++k) {
                if (inst.seq.prefix(k).classification() != Classification::Strict) return 2.0;
            }
        }
        return 0.0;
    }});

    checks.push_back({"det L = det R", [&] {
        double worst = 0.0;
        for (const Instance& inst : instances) {
            const BallParams& bp = inst.seq.ball();
            const double dl = bp.L.determinant().real();
            const double dr = bp.R.determinant().real();
            worst = std::max(worst, std::abs(dl - dr) / (1e-8 * std::max(1.0, std::abs(dl))));
        }
        return worst;
    }});

    checks.push_back({"pg involution / strict Schur image", [&] {
        double worst = 0.0;
        for (const Instance& inst : instances) {
            const PotapovSeq schur = pg_transform_seq(inst.seq);
            if (schur.classification() != Classification::Strict) return 2.0;
            const PotapovSeq back = pg_transform_seq_inverse(schur, inst.seq.signature());
            for (int k = 0; k <= inst.seq.order(); ++k) {
                worst = std::max(worst, (back.coeff(k) - inst.seq.coeff(k)).norm() / 1e-10);
            }
        }
        return worst;
    }});

    checks.push_back({"parameter recovery", [&] {
        double worst = 0.0;
        for (const Instance& inst : instances) {
            const CMatrix k = random_contraction(inst.seq.dim(), 0.7, rng);
            const PotapovSeq ext = extend_with_parameter(inst.seq, k);
            const BallParams& bp = inst.seq.ball();
            const CMatrix rec =
                bp.sqrtL_pinv * (ext.coeff(ext.order()) - bp.M) * bp.sqrtR_pinv;
            worst = std::max(worst, (rec - k).norm() / 1e-9);
        }
        return worst;
    }});

    checks.push_back({"christoffel-darboux identities", [&] {
        double worst = 0.0;
        for (const Instance& inst : instances) {
            const int n = inst.seq.order();
            const CMatrix& j = inst.seq.signature().matrix();
            const BallParams& bp = inst.seq.ball();
            const FourPolys fp = four_polys_general(inst.seq);
            for (int t = 0; t < 6; ++t) {
                const Complex w = random_disk_point(0.9, rng);
                const Complex wn = std::pow(w, n);
                const CMatrix lhs1 = fp.tau(w) * j * reciprocal(fp.tau, n)(w) -
                                     fp.sigma(w) * j * reciprocal(fp.sigma, n)(w);
                const CMatrix lhs2 = reciprocal(fp.rho, n)(w) * j * fp.rho(w) -
                                     reciprocal(fp.pi, n)(w) * j * fp.pi(w);
                worst = std::max(worst, (lhs1 - wn * bp.L).norm() / 1e-9);
                worst = std::max(worst, (lhs2 - wn * bp.R).norm() / 1e-9);
                const CMatrix couple = fp.tau(w) * fp.pi(w) - fp.sigma(w) * fp.rho(w);
                worst = std::max(worst, couple.norm() / 1e-9);
            }
        }
        return worst;
    }});

    checks.push_back({"resolvent determinant / symplectic identities", [&] {
        double worst = 0.0;
        for (const Instance& inst : instances) {
            const int n = inst.seq.order();
            const int m = inst.seq.dim();
            const ResolventPair rp = resolvents(inst.seq);
            const CMatrix u = resolvent_symplectic_unit(m);
            for (int t = 0; t < 4; ++t) {
                const Complex w = random_disk_point(0.9, rng);
                const Complex expect = std::pow(w, (n + 1) * m);
                const Complex det = rp.c(w).determinant();
                worst = std::max(worst, std::abs(det - expect) / (1e-9 * std::max(1.0, std::abs(expect))));
                const CMatrix sym = rp.d(w) * u * rp.c(w) - std::pow(w, n + 1) * u;
                worst = std::max(worst, sym.norm() / 1e-8);
            }
        }
        return worst;
    }});

    checks.push_back({"three constructions, one transform", [&] {
        double worst = 0.0;
        for (const Instance& inst : instances) {
            const SchurParam s = SchurParam::constant(random_contraction(inst.seq.dim(), 0.8, rng));
            const QuotientPair f = lft_solution(inst.seq, s);
            const FourPolys rec = four_polys_recursive(inst.seq);
            const FourPolys gen = four_polys_general(inst.seq);
            worst = std::max(worst, rec.pi.coeff_distance(gen.pi) / 1e-8);
            for (int t = 0; t < 4; ++t) {
                const Complex w = random_disk_point(0.8, rng);
                worst = std::max(worst, (f.left(w) - f.right(w)).norm() /
                                            (1e-8 * std::max(1.0, f.left(w).norm())));
            }
        }
        return worst;
    }});

    checks.push_back({"interpolation of f_S", [&] {
        double worst = 0.0;
        for (const Instance& inst : instances) {
            const SchurParam s = SchurParam::constant(random_contraction(inst.seq.dim(), 0.9, rng));
            const QuotientPair f = lft_solution(inst.seq, s);
            // extra inversion depth so wrong-order bugs surface
            const auto coeffs = taylor_coeffs(f.left, inst.seq.order() + 8);
            for (int k = 0; k <= inst.seq.order(); ++k) {
                worst = std::max(worst,
                                 (coeffs[static_cast<size_t>(k)] - inst.seq.coeff(k)).norm() / 1e-9);
            }
        }
        return worst;
    }});

    checks.push_back({"solution values J-contractive", [&] {
        for (const Instance& inst : instances) {
            const SchurParam s = SchurParam::constant(random_contraction(inst.seq.dim(), 0.9, rng));
            const QuotientPair f = lft_solution(inst.seq, s);
            const CMatrix val = f.left(inst.w);
            if (j_contractivity(val, inst.seq.signature()) == Contractivity::No) return 2.0;
        }
        return 0.0;
    }});

    checks.push_back({"weyl membership and monotone radii", [&] {
        double worst = 0.0;
        for (const Instance& inst : instances) {
            if (std::abs(inst.w) < 1e-3) continue;
            const WeylBall ball = weyl_ball(inst.seq, inst.w);
            const SchurParam s = SchurParam::constant(random_contraction(inst.seq.dim(), 1.0, rng));
            const QuotientPair f = lft_solution(inst.seq, s);
            const double mu = ball_membership(ball, f.left(inst.w));
            worst = std::max(worst, (mu - 1.0) / 1e-8);
            if (inst.seq.order() >= 1) {
                const WeylBall prev = weyl_ball(inst.seq.prefix(inst.seq.order() - 1), inst.w);
                const double lmin = hermitian_eigenvalues(prev.l_raw - ball.l_raw).minCoeff();
                worst = std::max(worst, -lmin / 1e-9);
            }
            const double dl = ball.l_raw.determinant().real();
            const double dr = ball.r_raw.determinant().real();
            worst = std::max(worst, std::abs(dl - dr) / (1e-8 * std::max(1.0, std::abs(dl))));
        }
        return worst;
    }});

    checks.push_back({"pg ball transfer", [&] {
        double worst = 0.0;
        for (const Instance& inst : instances) {
            if (std::abs(inst.w) < 1e-3) continue;
            const WeylBall direct = weyl_ball(inst.seq, inst.w);
            const WeylBall schur = weyl_ball(pg_transform_seq(inst.seq), inst.w);
            const WeylBall mapped = pg_ball_transfer(schur, inst.seq.signature());
            const double scale = std::max(1.0, direct.l_raw.norm());
            worst = std::max(worst, (mapped.l_raw - direct.l_raw).norm() / (1e-8 * scale));
            worst = std::max(worst, (mapped.r_raw - direct.r_raw).norm() / (1e-8 * scale));
            worst = std::max(worst, (mapped.center - direct.center).norm() / (1e-8 * scale));
        }
        return worst;
    }});

    checks.push_back({"r0 disk inside common holomorphy set", [&] {
        for (const Instance& inst : instances) {
            const double radius = 0.99 * r0(inst.seq);
            for (int t = 0; t < 6; ++t) {
                const double theta = 2.0 * M_PI * t / 6.0;
                const Complex w = radius * Complex(std::cos(theta), std::sin(theta));
                if (!in_common_holomorphy(inst.seq, w)) return 2.0;
            }
        }
        return 0.0;
    }});

    bool all_ok = true;
    for (const Check& check : checks) {
        double worst = 0.0;
        std::string note;
        try {
            worst = check.worst_residual();
        } catch (const std::exception& e) {
            worst = 2.0;
            note = std::string(" (") + e.what() + ")";
        }
        const bool ok = worst <= 1.0;
        all_ok = all_ok && ok;
        out << (ok ? "PASS" : "FAIL") << "  " << check.name << note << "\n";
    }
    return all_ok;
}

}  // namespace jp
