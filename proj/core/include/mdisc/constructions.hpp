#pragma once

#include <array>
#include <optional>
#include <string>

#include "mdisc/povm.hpp"

namespace mdisc {

/// Orthonormal set of vectors. Construction rejects sets whose pairwise
/// inner products exceed 1e-9 or whose norms deviate from 1 by more than
/// 1e-12.
struct Basis {
  std::size_t dim = 0;
  std::vector<CVec> vectors;

  Basis() = default;
  Basis(std::size_t dim, std::vector<CVec> vectors);
  std::size_t size() const { return vectors.size(); }
};

struct ConditionWitness {
  std::array<std::size_t, 4> indices{};  // (k,l,i,j) or (a,a',x,x') depending on the check
  double overlap = 0.0;
};

struct ConditionReport {
  bool satisfied = false;
  std::optional<ConditionWitness> witness;
};

// Shift-and-phase unitaries. Z = diag(1, w, ..., w^{d-1}) with w = exp(2*pi*i/d);
// X cyclically shifts |i> -> |i+1 mod d>; the displacement family is X^k Z^l.
ComplexMatrix weyl_z(std::size_t d);
ComplexMatrix weyl_x(std::size_t d);
ComplexMatrix weyl_unitary(std::size_t k, std::size_t l, std::size_t d);

/// Four rank-one projective measurements in dimension 4, one basis per
/// setting; basis x holds the vectors v_x^a indexed by outcome a.
std::vector<Basis> table1_bases();
/// The d=4 projective ensemble built from table1_bases() with uniform priors.
MeasurementEnsemble table1_projective_ensemble();

/// Conditions for perfect entangled-but-not-single-system discrimination of
/// rank-one projective measurements: (1) for every outcome a the vectors
/// v_x^a over settings x are orthonormal, (2) some outcome pair (a, a') has
/// every cross overlap |<v_x^a|v_{x'}^{a'}>| strictly below 1.
ConditionReport check_projective_advantage_conditions(const std::vector<Basis>& bases);

/// d POVMs with d^2 outcomes each: element (k,l) of setting x is
/// (1/d) U_{k,l} |v_x><v_x| U_{k,l}^dagger, flattened as a = k*d + l.
MeasurementEnsemble weyl_covariant_povm_ensemble(const Basis& basis);

/// Some (k,l) != (0,0) has all overlaps |<v_j|U_{k,l}|v_i>| < 1. The witness
/// records that (k,l) with its largest overlap.
ConditionReport check_cond(const Basis& basis);

/// All diagonal overlaps |<v_i|U_{k,l}|v_i>| stay away from zero; this makes
/// the Weyl-covariant POVMs informationally complete. The witness holds the
/// minimal overlap found.
ConditionReport check_ic_condition(const Basis& basis);

/// A unitary with no eigenvector in common with any X^k Z^l; its eigenbasis
/// therefore passes check_cond (established here for d >= 3).
ComplexMatrix sarkar_unitary(std::size_t d);

/// Eigenbasis of a (generally non-Hermitian) unitary, computed by jointly
/// diagonalizing (U+U^dagger)/2 and (U-U^dagger)/(2i); degenerate subspaces
/// of the first are refined by the second (grouping tolerance 1e-8).
Basis unitary_eigenbasis(const ComplexMatrix& u);

/// {cos(b)|0> + e^{ia} sin(b)|1>, e^{-ia} sin(b)|0> - cos(b)|1>}, b in (0, pi/4).
Basis magic_qubit_basis(double alpha, double beta);

/// canonical parameters alpha = pi/4, beta = acos(1/sqrt(3))/2 used by the
/// informationally complete examples.
Basis magic_qubit_basis_canonical();

/// r-fold tensor powers of a qubit basis, ordered by binary index (first
/// factor most significant).
Basis tensor_power_basis(const Basis& b, std::size_t r);

/// The dimension-3 basis {|1>-|2>, (1+sqrt3)|0>+|1>+|2>, (1-sqrt3)|0>+|1>+|2>},
/// normalized.
Basis ic_basis_d3();

/// |<j|v_i>| equals 1/d on the diagonal and sqrt(d+1)/d off it; the entry
/// condition for the (d+1)-outcome construction.
ConditionReport check_condd1(const Basis& basis);

/// Printed example vectors satisfying check_condd1 for d = 2, 3, 4.
Basis example_basis_dplus1(std::size_t d);

/// d POVMs with d+1 outcomes: element a < d of setting x is
/// (d/(d+1)) |eta^a_x><eta^a_x| with eta^a_x = Z^a v_x, and element d uses
/// eta^d_x = |x>. Throws if the basis fails check_condd1 (completeness would
/// break); the _unchecked variant builds the elements regardless.
MeasurementEnsemble dplus1_povm_ensemble(const Basis& basis);
MeasurementEnsemble dplus1_povm_ensemble_unchecked(const Basis& basis);

/// The two three-outcome qubit POVMs {(2/3)|v_i><v_i|, (2/3)|Zv_i><Zv_i|,
/// (2/3)|i><i|}; identical to dplus1_povm_ensemble(example_basis_dplus1(2)).
MeasurementEnsemble trine_pair_ensemble();

// Bob-side projective measurements that achieve perfect discrimination with
// the maximally entangled state, one POVM per Alice outcome; elements are
// transposed projectors onto the construction vectors.
std::vector<Povm> projective_proof_bob(const std::vector<Basis>& bases);
std::vector<Povm> weyl_proof_bob(const Basis& basis);
std::vector<Povm> dplus1_proof_bob(const Basis& basis);

// --- string-tag catalog ------------------------------------------------
//
// Tags: "table1", "trine", "ic:2", "ic:3", "ic:4", "dplus1:2", "dplus1:3",
// "dplus1:4", and "weyl:<d>:<basis>" with basis one of comp | magic | ic3 |
// magic2 | sarkar. "ic:2" equals "weyl:2:magic", "ic:3" equals "weyl:3:ic3",
// "ic:4" equals "weyl:4:magic2".

MeasurementEnsemble ensemble_from_tag(const std::string& tag);
std::vector<Povm> proof_bob_from_tag(const std::string& tag);
/// The condition report appropriate for the tag's construction: the
/// projective-advantage conditions for table1, check_cond/check_ic for the
/// Weyl families, check_condd1 for the d+1 families.
ConditionReport condition_report_from_tag(const std::string& tag);
std::vector<std::string> known_tags();

/// Randomized search for basis sets satisfying both projective-advantage
/// conditions: draws `trials` sets of d Haar-like random orthonormal bases
/// and counts the hits. None is ever found at d = 2, 3; d = 4 admits them.
std::size_t count_projective_advantage_random(std::size_t d, std::size_t trials,
                                             std::uint64_t seed);

}  // namespace mdisc
