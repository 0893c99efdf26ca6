#pragma once

#include "jpotapov/polynomials.hpp"

namespace jp {

/// Free parameter of the linear fractional solution family: a constant
/// contraction or a matrix polynomial whose coefficients form a Schur
/// sequence.
class SchurParam {
  public:
    static SchurParam constant(CMatrix k);
    static SchurParam poly(MatrixPoly p);
    static SchurParam zero(int m);

    bool is_constant() const { return constant_; }
    const MatrixPoly& as_poly() const { return poly_; }
    int dim() const { return poly_.rows(); }
    CMatrix operator()(Complex w) const { return poly_(w); }

    /// Throws InvalidParam unless the parameter is a valid m x m Schur datum.
    void validate(int m, const Tolerances& tol) const;

  private:
    SchurParam(MatrixPoly p, bool constant) : poly_(std::move(p)), constant_(constant) {}
    MatrixPoly poly_;
    bool constant_ = true;
};

/// Left and right quotient representations of the same function.
struct QuotientPair {
    RationalMatrixFn left;
    RationalMatrixFn right;
};

/// The central function: always choose the ball center. Left form pi rho^{-1},
/// right form tau^{-1} sigma.
QuotientPair central_function(const PotapovSeq& seq);

/// The solution f_S attached to a parameter, in both quotient forms.
QuotientPair lft_solution(const PotapovSeq& seq, const SchurParam& s);

/// Same transformation through an explicitly chosen polynomial quadruple
/// (general, recursive and strict constructions all generate the same map).
QuotientPair lft_solution(const PotapovSeq& seq, const SchurParam& s, const FourPolys& fp);

/// First k+1 Taylor coefficients at 0 via power-series inversion of den.
std::vector<CMatrix> taylor_coeffs(const RationalMatrixFn& f, int k);

struct UniquenessResult {
    bool unique;
    RationalMatrixFn witness;  ///< the central function
};

/// Unique solution iff L_{n+1,J} = 0 or R_{n+1,J} = 0.
UniquenessResult uniqueness(const PotapovSeq& seq);

/// S# = (L L^+) S (R^+ R), the canonical representative of S's class.
SchurParam canonical_parameter(const PotapovSeq& seq, const SchurParam& s);

/// True iff sqrt(L) S_i sqrt(R) agree coefficientwise.
bool parameter_equivalence(const PotapovSeq& seq, const SchurParam& s1, const SchurParam& s2);

/// Samples f on the unit circle (skipping near-singular denominators) and
/// reports whether every sampled value is J-unitary. Sampled, not certified.
bool j_unitary_boundary_test(const RationalMatrixFn& f, const SignatureMatrix& j,
                             int samples = 64, double tol_unitary = 1e-8);

/// Sampled check of the two finite Blaschke-Potapov product conditions for the
/// quotient pi rho^{-1}: det[Q_J pi(w) + P_J rho(w)] != 0 on a disk mesh and
/// rho* J rho = pi* J pi on the circle.
bool bp_product_check(const MatrixPoly& pi, const MatrixPoly& rho, const SignatureMatrix& j,
                      const Tolerances& tol = {});

}  // namespace jp
