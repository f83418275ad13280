#pragma once

#include <array>
#include <utility>

#include "drp/grid_field.hpp"
#include "drp/scheme.hpp"
#include "drp/svd.hpp"

// Minimum-norm analysis of the error equation M1 E + E M2 = F (corner weights zero).
//
// With M1 = U1 S1 V1^T and M2 = U2 S2 V2^T, multiplying by U1^T on the left and V2 on the
// right gives S1 (V1^T E V2) + (U1^T E U2) S2 = U1^T F V2. Treating the two rotated copies
// of E as independent unknowns, the leading block decouples entry by entry into
//   s1_i x_ij + s2_j y_ij = f_ij,
// whose minimum-norm solution is x = s1 f / (s1^2 + s2^2), y = s2 f / (s1^2 + s2^2).
namespace drp {

/// Eigenvalue-style quantities of the 2x2 Gram blocks, in the form they are usually quoted:
///   m1: (2b^2 + d^2 + e^2 -/+ (d + e) sqrt(4b^2 + d^2 + e^2 - 2de)) / 2
///   m2: alpha^2, gamma^2
/// These are NOT the singular values of M1 and M2 in general (M1^T M1 is pentadiagonal);
/// use svd() for the exact spectrum.
struct PaperBlockValues {
    std::array<double, 2> m1;
    std::array<double, 2> m2;
};

[[nodiscard]] PaperBlockValues paper_block_values(const SchemeCoefficients& s);

/// paper_block_values with their quoted multiplicities (n_x-1)/2 and n_t/2.
/// Throws PreconditionError if n_x - 1 or n_t is odd.
struct BlockGramSpectrum {
    PaperBlockValues values;
    int m1_multiplicity = 0;
    int m2_multiplicity = 0;
};

[[nodiscard]] BlockGramSpectrum block_gram_spectrum(const SchemeCoefficients& s, int n_x, int n_t);

/// Blocks of U1^T F V2 split at (rank1, rank2).
struct PartitionedRhs {
    Matrix f11, f12, f21, f22;
};

[[nodiscard]] PartitionedRhs partition_rhs(const Matrix& u1, const Matrix& f, const Matrix& v2,
                                           int rank1, int rank2);

/// m1_part multiplies the M1 singular values, m2_part the M2 singular values.
struct MinNormPair {
    Matrix m1_part;
    Matrix m2_part;
};

/// Entrywise minimum-norm solution of m1_diag[i] x + m2_diag[j] y = f11(i, j).
/// Throws SingularError for an entry with both factors zero and f11(i, j) != 0.
[[nodiscard]] MinNormPair min_norm_entries(const Vector& m1_diag, const Vector& m2_diag,
                                           const Matrix& f11);

/// e12 = diag(m1_diag)^{-1} f12 and e21 = f21 diag(m2_diag)^{-1}.
/// Throws SingularError on any zero diagonal entry that is actually used.
[[nodiscard]] std::pair<Matrix, Matrix> offdiag_blocks(const Vector& m1_diag,
                                                       const Vector& m2_diag, const Matrix& f12,
                                                       const Matrix& f21);

/// Everything the partitioned solve produces. Unconstrained blocks are zero-filled, which is
/// the minimum-norm choice.
struct MinNormSolution {
    SvdFactorization m1_svd;
    SvdFactorization m2_svd;
    int rank1 = 0;
    int rank2 = 0;
    PartitionedRhs rhs;
    MinNormPair leading;
    Matrix e12;  // rows of V1^T E V2 beyond the M2 rank
    Matrix e21;  // columns of U1^T E U2 beyond the M1 rank

    /// Full-size V1^T E V2 = [[leading.m1_part, e12], [0, 0]].
    [[nodiscard]] Matrix right_rotated() const;
    /// Full-size U1^T E U2 = [[leading.m2_part, 0], [e21, 0]].
    [[nodiscard]] Matrix left_rotated() const;
    /// diag(s1) E11 + E11' diag(s2) - F11 on the leading block.
    [[nodiscard]] Matrix leading_residual() const;
};

[[nodiscard]] MinNormSolution min_norm_solve(const Matrix& m1, const Matrix& m2, const Matrix& f,
                                             double rank_tol = 1e-12);

/// sqrt(n_t (n_x - 1)) * ( |U_exact| ( sqrt((n_x-1)/2) sqrt(2b^2 + d^2 + e^2)
///                         + sqrt(n_t/2) sqrt(alpha^2 + gamma^2) ) + |M0| ),
/// the Frobenius bound on the leading block of U1^T F V2.
[[nodiscard]] double norm_bound(const SchemeCoefficients& s, const Discretization& d,
                                double norm_u_exact, double norm_m0);

struct ObjectiveValues {
    double f1 = 0.0;  // sqrt(2 beta^2 + delta^2 + epsilon^2)
    double f2 = 0.0;  // sqrt(alpha^2 + gamma^2)
    double f3 = 0.0;  // |M0|_F
};

[[nodiscard]] ObjectiveValues objectives(const SchemeCoefficients& s, const Matrix& m0);

enum class DrpSource {
    paper,   // tabulated closed form
    oracle,  // true minimizer of the integrated wavenumber error
};

/// Tuned DRP scheme: x parts from the DRP coefficients at h, t parts equal to -0.9 times the
/// x parts (so the assembled beta, delta, epsilon are 0.1 x the spatial weights),
/// alpha = 10, gamma = 0, corner weights zero.
[[nodiscard]] SchemeCoefficients tune_scheme(double h, double tau,
                                             DrpSource source = DrpSource::paper);

}  // namespace drp
