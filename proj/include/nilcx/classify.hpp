#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nilcx/liealg.hpp"

namespace nilcx {
namespace classify {

/// The eighteen isomorphism classes of 6-dimensional nilpotent Lie algebras
/// carrying a complex structure.
enum class AlgebraClass {
  h1, h2, h3, h4, h5, h6, h7, h8, h9, h10, h11, h12, h13, h14, h15, h16,
  h19minus, h26plus,
};

std::string to_string(AlgebraClass cls);

/// d w1 = d w2 = 0, d w3 = rho w^{12} + w^{1 1b} + lambda w^{1 2b}
///                         + D w^{2 2b};  rho in {0,1}, lambda >= 0 real,
/// Im D >= 0.
struct TwoStepTriple {
  int rho = 1;
  Scalar lambda;
  Scalar D;
};

/// The complex-parallelizable structures d w3 = rho w^{12}: the torus for
/// rho = 0 and the Iwasawa algebra h5 for rho = 1.
struct ParallelizableStructure {
  int rho = 1;
};

/// d w1 = 0, d w2 = w^{1 1b}, d w3 = rho w^{12} + B w^{1 2b} + c w^{2 1b};
/// rho in {0,1}, c >= 0 real, (rho, B, c) != (0, 0, 0).
struct ThreeStepTriple {
  int rho = 1;
  Scalar B;
  Scalar c;
};

/// The general nilpotent reduction: d w1 = 0, d w2 = eps w^{1 1b},
/// d w3 = rho w^{12} + (1-eps) A w^{1 1b} + B w^{1 2b} + C w^{2 1b}
///        + (1-eps) D w^{2 2b}.
struct GeneralNilpotentParams {
  int eps = 0;
  int rho = 0;
  Scalar A, B, C, D;
};

/// d w1 = 0, d w2 = w^{13} + w^{1 3b},
/// d w3 = i eps w^{1 1b} +/- i (w^{1 2b} - w^{2 1b}).
struct NonNilpotentParams {
  int eps = 0;
  int sign = +1;
};

StructureEquations equations_of(const TwoStepTriple& t);
StructureEquations equations_of(const ParallelizableStructure& t);
StructureEquations equations_of(const ThreeStepTriple& t);
StructureEquations equations_of(const GeneralNilpotentParams& t);
StructureEquations equations_of(const NonNilpotentParams& t);

AlgebraClass classify_2step(const TwoStepTriple& t);
AlgebraClass classify_3step(const ThreeStepTriple& t);
AlgebraClass classify_parallelizable(const ParallelizableStructure& t);
AlgebraClass classify_non_nilpotent(const NonNilpotentParams& t);

/// Equivalence of non-abelian (rho = 1) two-step triples.  Exact: when the
/// decision needs an irrational square root the predicate throws
/// ExactUnrepresentable (the inequality alone is available below).
bool equivalent_2step(const TwoStepTriple& a, const TwoStepTriple& b);

/// The bare solvability inequality 4y^2 - (t^2-l^2)(4x + t^2-l^2) >= 0 for
/// reaching first parameter t from (lambda, D).  Necessary for equivalence
/// when lambda != t; always decidable exactly.
bool reachability_condition(const TwoStepTriple& from, const Scalar& t);

/// The unique candidate D' (Im D' >= 0) such that (1, t, D') can be
/// equivalent to the triple; requires rho = 1, D != 0, lambda != t and a
/// rational square root of the reachability discriminant.
Scalar reachable_parameter(const TwoStepTriple& from, const Scalar& t);

struct TwoStepCanonical {
  TwoStepTriple triple;
  AlgebraClass cls;
};
struct ThreeStepCanonical {
  ThreeStepTriple triple;
  AlgebraClass cls;
};

/// The unique classification-table representative equivalent to the input.
TwoStepCanonical canonical_form(const TwoStepTriple& t);
ThreeStepCanonical canonical_form(const ThreeStepTriple& t);

/// Basis-change coefficients sigma^1 = a w^1 + b w^2, sigma^2 = c w^1 + f w^2,
/// sigma^3 = e w^3 intertwining two equivalent non-abelian triples.  The
/// construction is verified by direct substitution before returning.
struct AutomorphismWitness {
  Scalar a, b, c, e, f;
};
AutomorphismWitness automorphism_witness(const TwoStepTriple& from,
                                         const TwoStepTriple& to);

/// Identification of arbitrary structure equations against the fingerprint
/// table of the eighteen algebras.  Throws std::domain_error when nothing
/// matches and InternalAlarm on an ambiguous match.
AlgebraClass identify(const StructureEquations& eqs);
AlgebraClass identify(const RealStructureEquations& eqs);

/// The classification table: class, defining real structure equations and
/// fingerprint.  Built once from the embedded real equations; pairwise
/// distinctness of the fingerprints is asserted at construction.
struct AlgebraTableEntry {
  AlgebraClass cls;
  RealStructureEquations real;
  Fingerprint fp;
};
const std::vector<AlgebraTableEntry>& algebra_table();

/// The defining real structure equations of one class.
const RealStructureEquations& real_equations(AlgebraClass cls);

}  // namespace classify
}  // namespace nilcx
