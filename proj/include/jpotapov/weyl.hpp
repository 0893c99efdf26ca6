#pragma once

#include "jpotapov/solve.hpp"

namespace jp {

/// Value set {f(w)} over all solutions at a fixed point, as a matrix ball.
/// The left semi-radius carries the |w|^{n+1} normalization.
struct WeylBall {
    Complex w;
    int order;       ///< n of the sequence the ball belongs to
    CMatrix center;  ///< curly M
    CMatrix l_raw;   ///< curly L (Hermitian positive definite)
    CMatrix r_raw;   ///< curly R
    CMatrix l_norm;  ///< |w|^{n+1} sqrt(curly L)
    CMatrix r_half;  ///< sqrt(curly R)
};

/// chi_{n,J}(w); strictly contractive exactly on the common holomorphy set.
CMatrix chi(const PotapovSeq& seq, Complex w);

/// w lies in H^(n): det rho(w) != 0 and ||chi(w)|| < 1.
bool in_common_holomorphy(const PotapovSeq& seq, Complex w);

/// Radius of the disk around 0 guaranteed inside every H^(n); equals 1 for
/// J = I and the inverse norm of sqrt(R_1) J A_0* sqrt(L_1)^{-1} otherwise.
double r0(const PotapovSeq& seq);

WeylBall weyl_ball(const PotapovSeq& seq, Complex w);

/// ||l_norm^{-1} (X - center) r_half^{-1}||; membership iff <= 1.
double ball_membership(const WeylBall& ball, const CMatrix& x);

/// Maps the Weyl ball of the PG-transformed (Schur) sequence back to the
/// J side; all four transfer formulas are evaluated and cross-checked.
WeylBall pg_ball_transfer(const WeylBall& schur_ball, const SignatureMatrix& j);

/// The constant unitaries relating the J-side resolvents to the Schur-side
/// ones: A_J C_n = c_{n,J} diag(-U1, U2).
std::pair<CMatrix, CMatrix> pg_unitaries(const PotapovSeq& seq);

/// f_w = f_S with the constant parameter -chi(w)*; its coefficient tower has
/// stationary ball parameters at w.
RationalMatrixFn extremal_function(const PotapovSeq& seq, Complex w);

struct LimitRow {
    int order;
    CMatrix center, l_raw, r_raw;
    int rank_l, rank_r;
};

struct LimitTable {
    std::vector<LimitRow> rows;
    CMatrix l_limit, r_limit;          ///< last computed iterates
    CMatrix l_pg_mapped, r_pg_mapped;  ///< Schur-side limits mapped through PG
    int rank_l_limit = 0, rank_r_limit = 0;
    bool stagnated = false;
    int stagnation_order = -1;
};

/// Ball parameters of every admissible prefix order k0..N of the tower at w.
LimitTable limit_study(const PotapovSeq& tower, Complex w, int n_max);

}  // namespace jp
