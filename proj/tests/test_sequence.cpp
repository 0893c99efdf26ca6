#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jpotapov/sequence.hpp"
#include "testutil.hpp"

using namespace jp;
using jptest::mixed_signature;
using jptest::random_contraction;
using jptest::random_gaussian;
using jptest::random_signature;
using jptest::scalar1;

namespace {

PotapovSeq scalar_seq(double j_sign, std::vector<Complex> values) {
    std::vector<CMatrix> coeffs;
    for (Complex v : values) coeffs.push_back(scalar1(v));
    return PotapovSeq(SignatureMatrix::diagonal({j_sign > 0 ? 1 : -1}), std::move(coeffs));
}

}  // namespace

TEST_CASE("block toeplitz layout") {
    const PotapovSeq single = scalar_seq(1, {Complex(0.3, 0.1)});
    CHECK((block_toeplitz(single) - single.coeff(0)).norm() == doctest::Approx(0.0));

    const PotapovSeq pair = scalar_seq(1, {0.0, 1.0});
    CMatrix expect(2, 2);
    expect << 0, 0, 1, 0;
    CHECK((block_toeplitz(pair) - expect).norm() == doctest::Approx(0.0));

    std::mt19937_64 rng(3);
    const PotapovSeq seq = random_strict_seq(2, mixed_signature(2), 3, rng(), 0.5);
    const CMatrix s = block_toeplitz(seq);
    CHECK((s.block(4, 2, 2, 2) - seq.coeff(1)).norm() == doctest::Approx(0.0));
    CHECK((s.block(6, 0, 2, 2) - seq.coeff(3)).norm() == doctest::Approx(0.0));
    CHECK(s.block(0, 2, 2, 2).norm() == doctest::Approx(0.0));
}

TEST_CASE("defect matrices") {
    const auto [p0, q0] = defect_matrices(scalar_seq(1, {0.0}));
    CHECK(std::abs(p0(0, 0) - Complex(1, 0)) < 1e-14);
    CHECK(std::abs(q0(0, 0) - Complex(1, 0)) < 1e-14);

    const auto [p1, q1] = defect_matrices(scalar_seq(-1, {2.0}));
    CHECK(std::abs(p1(0, 0) - Complex(3, 0)) < 1e-14);
    CHECK(std::abs(q1(0, 0) - Complex(3, 0)) < 1e-14);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const PotapovSeq seq = random_strict_seq(2, random_signature(2, rng), 2, rng(), 0.5);
        const auto [p, q] = defect_matrices(seq);
        CHECK((p - p.adjoint()).norm() <= 1e-12 * std::max(1.0, p.norm()));
        CHECK(hermitian_eigenvalues(p).minCoeff() > 0.0);
        CHECK(hermitian_eigenvalues(q).minCoeff() > 0.0);
    }
}

TEST_CASE("ball parameters at order zero") {
    const BallParams half = ball_parameters(scalar_seq(1, {0.5}));
    CHECK(half.M.norm() == doctest::Approx(0.0));
    CHECK(std::abs(half.L(0, 0) - Complex(0.75, 0)) < 1e-14);
    CHECK(std::abs(half.R(0, 0) - Complex(0.75, 0)) < 1e-14);

    const PotapovSeq unitary(SignatureMatrix::diagonal({1, -1}),
                             {CMatrix::Identity(2, 2)});
    const BallParams ub = ball_parameters(unitary);
    CHECK(ub.M.norm() == doctest::Approx(0.0));
    CHECK(ub.L.norm() <= 1e-13);
    CHECK(ub.R.norm() <= 1e-13);

    const BallParams exp2 = ball_parameters(scalar_seq(-1, {2.0}));
    CHECK(std::abs(exp2.L(0, 0) - Complex(3, 0)) < 1e-13);
    CHECK(std::abs(exp2.R(0, 0) - Complex(3, 0)) < 1e-13);
}

TEST_CASE("classification") {
    CHECK(classify(scalar_seq(1, {0.0, 0.5})) == Classification::Strict);
    CHECK(classify(PotapovSeq(SignatureMatrix::identity(2), {CMatrix::Identity(2, 2)})) ==
          Classification::Degenerate);
    CHECK(classify(scalar_seq(1, {2.0})) == Classification::Invalid);
    CHECK_THROWS_AS(scalar_seq(1, {2.0}).ball(), NotPotapov);
}

TEST_CASE("central extension") {
    const PotapovSeq zero3 = extend_central(scalar_seq(1, {0.0}), 3);
    CHECK(zero3.order() == 3);
    for (int k = 0; k <= 3; ++k) CHECK(zero3.coeff(k).norm() == doctest::Approx(0.0));

    const PotapovSeq eye = extend_central(
        PotapovSeq(SignatureMatrix::identity(2), {CMatrix::Identity(2, 2)}), 2);
    CHECK(eye.coeff(1).norm() <= 1e-12);
    CHECK(eye.coeff(2).norm() <= 1e-12);
    CHECK(eye.classification() == Classification::Degenerate);

    const PotapovSeq two = extend_central(scalar_seq(-1, {2.0}), 1);
    CHECK(two.coeff(1).norm() <= 1e-12);
    CHECK(two.classification() != Classification::Invalid);
}

TEST_CASE("extension with a parameter") {
    std::mt19937_64 rng(7);
    const PotapovSeq base = scalar_seq(1, {0.5});

    const PotapovSeq central = extend_with_parameter(base, CMatrix::Zero(1, 1));
    CHECK((central.coeff(1) - extend_central(base, 1).coeff(1)).norm() == doctest::Approx(0.0));

    const PotapovSeq boundary = extend_with_parameter(scalar_seq(1, {0.0}), scalar1(1.0));
    CHECK(std::abs(boundary.coeff(1)(0, 0) - Complex(1, 0)) < 1e-14);
    CHECK(boundary.classification() == Classification::Degenerate);

    const PotapovSeq strict = extend_with_parameter(base, scalar1(0.5));
    CHECK(std::abs(strict.coeff(1)(0, 0) - Complex(0.375, 0)) < 1e-14);
    CHECK(strict.classification() == Classification::Strict);

    CHECK_THROWS_AS(extend_with_parameter(base, scalar1(1.5)), NotContractive);

    // Theorem-level equivalence: the appended coefficient is admissible
    // exactly when ||K|| <= 1, tested on a grid of norms straddling 1.
    for (int trial = 0; trial < 8; ++trial) {
        const int m = 2;
        const SignatureMatrix j = random_signature(m, rng);
        const PotapovSeq seq = random_strict_seq(m, j, 2, rng(), 0.5);
        const BallParams& bp = seq.ball();
        for (double norm : {0.25, 0.9, 0.999}) {
            const CMatrix k = random_contraction(m, norm, rng);
            std::vector<CMatrix> c = seq.coeffs();
            c.push_back(bp.M + bp.sqrtL * k * bp.sqrtR);
            CHECK(PotapovSeq(j, c).classification() == Classification::Strict);
        }
        for (double norm : {1.05, 1.5}) {
            const CMatrix k = random_contraction(m, norm, rng);
            std::vector<CMatrix> c = seq.coeffs();
            c.push_back(bp.M + bp.sqrtL * k * bp.sqrtR);
            CHECK(PotapovSeq(j, c).classification() == Classification::Invalid);
        }
    }
}

TEST_CASE("hereditary property and determinant identity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 3);
        const PotapovSeq seq = random_strict_seq(m, random_signature(m, rng), 3, rng(), 0.55);
        for (int k = 0; k <= seq.order(); ++k) {
            const PotapovSeq pre = seq.prefix(k);
            CHECK(pre.classification() == Classification::Strict);
            const BallParams& bp = pre.ball();
            const double dl = bp.L.determinant().real();
            const double dr = bp.R.determinant().real();
            CHECK(std::abs(dl - dr) <= 1e-8 * std::max(1.0, std::abs(dl)));
        }
    }
}

TEST_CASE("potapov-ginzburg transform of sequences") {
    // J = I: the transform is the identity
    std::mt19937_64 rng(13);
    const PotapovSeq schur = random_strict_seq(2, SignatureMatrix::identity(2), 2, rng(), 0.5);
    const PotapovSeq same = pg_transform_seq(schur);
    for (int k = 0; k <= 2; ++k) {
        CHECK((same.coeff(k) - schur.coeff(k)).norm() <= 1e-13);
    }

    // scalar case J = -1, A_0 = 2: P = 0, Q = 1, so B_0 = 1/A_0
    const PotapovSeq flip = pg_transform_seq(scalar_seq(-1, {2.0}));
    CHECK(std::abs(flip.coeff(0)(0, 0) - Complex(0.5, 0)) < 1e-14);
    CHECK(flip.classification() == Classification::Strict);

    // involution + Schur image on random strict sequences
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 3);
        const SignatureMatrix j = random_signature(m, rng);
        const PotapovSeq seq = random_strict_seq(m, j, 1 + static_cast<int>(rng() % 3),
                                                 rng(), 0.55);
        const PotapovSeq image = pg_transform_seq(seq);
        CHECK(image.signature().is_identity());
        CHECK(image.classification() == Classification::Strict);
        const PotapovSeq back = pg_transform_seq_inverse(image, j);
        for (int k = 0; k <= seq.order(); ++k) {
            CHECK((back.coeff(k) - seq.coeff(k)).norm() <= 1e-10);
        }
    }
}

TEST_CASE("random strict sequences") {
    const SignatureMatrix j = mixed_signature(2);

    // determinism
    const PotapovSeq a = random_strict_seq(2, j, 3, 42, 0.5);
    const PotapovSeq b = random_strict_seq(2, j, 3, 42, 0.5);
    for (int k = 0; k <= 3; ++k) CHECK((a.coeff(k) - b.coeff(k)).norm() == doctest::Approx(0.0));

    // margin 0 collapses onto the central extension of the sampled A_0
    const PotapovSeq flat = random_strict_seq(2, j, 2, 7, 0.0);
    const PotapovSeq central = extend_central(flat.prefix(0), 2);
    for (int k = 0; k <= 2; ++k) CHECK((flat.coeff(k) - central.coeff(k)).norm() <= 1e-12);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 3);
        const PotapovSeq seq =
            random_strict_seq(m, random_signature(m, rng), 1 + static_cast<int>(rng() % 4),
                              rng(), 0.6);
        CHECK(seq.classification() == Classification::Strict);
    }
}

TEST_CASE("parameter recovery from an extension") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 15; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 3);
        const PotapovSeq seq = random_strict_seq(m, random_signature(m, rng), 2, rng(), 0.5);
        const CMatrix k = random_contraction(m, 0.8, rng);
        const PotapovSeq ext = extend_with_parameter(seq, k);
        const BallParams& bp = seq.ball();
        const CMatrix recovered = bp.sqrtL_pinv * (ext.coeff(3) - bp.M) * bp.sqrtR_pinv;
        CHECK((recovered - k).norm() <= 1e-9);
    }
}
