#pragma once

#include "twistorlab/forms.hpp"
#include "twistorlab/lambda2.hpp"

#include <complex>
#include <optional>

namespace twistorlab {

/// Abstract co-frame labels used by the coefficient tables in this module:
/// 0,1,2 = phi1, phi2, phi3 and 3,4,5 = their conjugates.
inline constexpr std::array<int, 3> kOneZeroPlus = {0, 1, 2};   // J+
inline constexpr std::array<int, 3> kOneZeroMinus = {0, 1, 5};  // J-

enum class JSign { Plus, Minus };

/// Coefficients of the curvature 2-form in the complex co-frame, as
/// functions of the block entries, together with the derived quantities
/// that feed the first-Gauduchon and Chern-form conditions.
struct LambdaSet {
  Complex l12;    // coefficient of phi1 ^ phi2   (real-valued)
  Complex l1b2b;  // conj(phi1) ^ conj(phi2)
  Complex l11b;   // phi1 ^ conj(phi1)
  Complex l22b;   // phi2 ^ conj(phi2)
  Complex l1b2;   // conj(phi1) ^ phi2
  Complex l12b;   // phi1 ^ conj(phi2)
  double t = 1.0;

  double lambda1 = 0.0;          // l12(1 - 2 t^2 l12) - 2 t^2 sum of |.|^2
  bool lambda1_imag_flag = false;
  Complex lambda2;               // t^2 (B21 + i B31)
  Complex lambda3;               // t^2 (A12 - i A13)

  double sum_sq_mixed() const {
    return std::norm(l11b) + std::norm(l22b) + std::norm(l1b2) +
           std::norm(l12b);
  }

  /// Curvature 2-form in the abstract co-frame.
  AltForm rho() const;
  /// rho minus its l12 phi1^phi2 part.
  AltForm capital_lambda() const;
};

LambdaSet lambda_from_blocks(const CurvatureBlocks& blocks, double t);

/// The block entries recoverable from the lambda coefficients, in the order
/// A12, A13, A22, A23, A33, B12, B13, B22, B23, B32, B33.
std::array<double, 11> reconstruct_block_entries(const LambdaSet& l);
std::array<double, 11> block_entries_for_reconstruction(
    const CurvatureBlocks& blocks);

/// |l11b + l22b| = (1/2) sqrt(A12^2 + A13^2); zero exactly on the
/// balanced locus (anti-self-duality once quantified over all frames).
double balanced_defect(const LambdaSet& l);

/// Full coefficient table of dK(t) for either almost complex structure as
/// a degree-3 form in the abstract co-frame.
AltForm dk_coefficients(const LambdaSet& l, JSign sign);

/// Kaehler form in the abstract co-frame.
AltForm k_form_abstract(double t, JSign sign);

/// K ^ dK as a degree-5 form (used by the balanced condition tests).
AltForm k_wedge_dk(const LambdaSet& l, JSign sign);

/// Distance from dK(t) = 0: the max of |1 -+ 2 t^2 l12| and the moduli of
/// the remaining lambda coefficients.
double kahler_defect(const LambdaSet& l, JSign sign);

/// Signed first-Gauduchon obstructions. These expressions equal the
/// coefficient obstruction of ddbar K ^ K only under the anti-self-dual,
/// constant-scalar-curvature hypotheses; callers gate on applicability.
double gauduchon1_plus(const CurvatureBlocks& blocks, const LambdaSet& l,
                       double t);
double gauduchon1_minus(const CurvatureBlocks& blocks, const LambdaSet& l,
                        double t);

struct TypeDecomposition {
  AltForm d21_dbar_k_plus;    // identically zero
  AltForm d21_dm12_k_plus;    // 2 i t^2 |l1b2b|^2 phi1^phi2^phib1^phib2
  AltForm d21_dbar_k_minus;   // 2 i t^2 conj(l11b + l22b) phi1^phi2^phib3^phi3
  AltForm d21_dm12_k_minus;   // i (1 + 2 t^2 l12) (l12 ... + ... + ...)
};

TypeDecomposition type_decomposition_coeffs(const LambdaSet& l);

struct AsdEinsteinIdentities {
  bool applicable = false;
  // Max moduli of the dbar K- and partial K- coefficient tables (zero for
  // anti-self-dual Einstein input).
  double dbar_k_minus_max = 0.0;
  double partial_k_minus_max = 0.0;
  // ddbar K+ from the closed form in s and t.
  AltForm ddbar_k_plus{4};
  // Max coefficient difference between the closed form and the general
  // assembly from the blocks.
  double consistency_defect = 0.0;
};

AsdEinsteinIdentities asd_einstein_identities(const CurvatureBlocks& blocks, double t,
                             double tol = 1e-8);

/// General ddbar K+ coefficient table assembled from the blocks (valid
/// under the anti-self-dual constant-s hypotheses it was derived under).
AltForm ddbar_k_plus_from_blocks(const CurvatureBlocks& blocks, double t);

/// sqrt(12/s) when s > 0.
std::optional<double> t_star(const CurvatureBlocks& blocks);

enum class Symplectic12Class { PlusAndMinus, MinusOnly, Neither };

Symplectic12Class classify_12_symplectic(const CurvatureBlocks& blocks,
                                         double t, double tol = 1e-8);

/// Supremum of a per-frame quantity over random frame rotations (the
/// computable realization of "for all frames").
template <typename F>
double sup_over_rotations(const CurvatureBlocks& blocks, F quantity,
                          int rotations, std::mt19937_64& rng) {
  double sup = quantity(blocks);
  for (int i = 0; i < rotations; ++i)
    sup = std::max(sup, quantity(rotate_blocks(blocks, random_so4(rng))));
  return sup;
}

}  // namespace twistorlab
