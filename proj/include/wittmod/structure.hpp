#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittmod/matrix.hpp"
#include "wittmod/modules.hpp"
#include "wittmod/poly.hpp"
#include "wittmod/witt.hpp"

namespace wittmod {

/// Exponent tuple j and shift a of a Y-polynomial Y(j) = prod_i Y^i_{j_i}.
struct YSpec {
  MultiIndex j;
  Scalar a;
};

/// Row-reduced basis of a subspace of the polynomials of degree <= degree_bound,
/// rows laid out as coeff_vector.
struct SubspaceBasis {
  std::size_t n = 0;
  int degree_bound = 0;
  Matrix rows;

  std::size_t dimension() const noexcept { return rows.nrows(); }
  std::vector<Poly> polys() const;
  bool operator==(const SubspaceBasis&) const = default;
};

/// Eigenvalues on the Cartan elements e_11-e_22, ..., e_nn-e_{n+1,n+1}.
struct Weight {
  std::vector<Scalar> values;
  bool operator==(const Weight&) const = default;
};

struct NamedCheck {
  std::string name;
  bool pass = false;
};

/// a = -m/(n+1).
Scalar reducible_a(std::size_t n, int m);

/// m if a = -m/(n+1) with m a non-negative integer, otherwise nullopt.
/// The module Omega_{1-a} is reducible exactly when this has a value.
std::optional<int> reducibility_index(std::size_t n, const Scalar& a);

/// Y^i_j = (d_i + a)(d_i + a + 1)...(d_i + a + j - 1); Y^i_0 = 1. i is 1-based.
Poly y_factor(std::size_t n, std::size_t i, int j, const Scalar& a);
Poly y_product(const YSpec& spec);

/// All j in Z_+^n with |j| = total, lexicographically decreasing.
std::vector<MultiIndex> compositions(std::size_t n, int total);

/// The spanning set d^k Y(j), |j| = m+1, |k| <= degree_bound - m - 1.
std::vector<Poly> w_spanning_set(std::size_t n, int m, int degree_bound);

/// RREF basis of the degree-filtered piece of W_{1-a}, a = -m/(n+1).
/// Empty when degree_bound < m + 1.
SubspaceBasis w_basis(std::size_t n, int m, int degree_bound);

/// Row-reduced span of polynomials of degree <= degree_bound.
SubspaceBasis span_of(std::size_t n, const std::vector<Poly>& polys, int degree_bound);

bool member_w(const Poly& p, const SubspaceBasis& basis);

/// p modulo the subspace, as a polynomial (zero iff p is a member).
Poly reduce_modulo(const Poly& p, const SubspaceBasis& basis);

/// dim P_{<=D} - dim(W cap P_{<=D}) as computed by w_basis.
std::size_t quotient_dim(std::size_t n, int m, int degree_bound);

struct QuotientDimension {
  std::size_t value = 0;                                   // value at the largest bound
  std::vector<std::pair<int, std::size_t>> by_bound;       // (bound, quotient dim)
  bool stable = false;                                     // identical across all bounds
};

/// Evaluates quotient_dim at bounds m+1 .. m+1+extra_bounds.
QuotientDimension quotient_dim_stable(std::size_t n, int m, int extra_bounds = 2);

/// Dimension of the irreducible sl(n+1)-module with highest weight
/// sum_i w_i Lambda_i (Weyl dimension formula).
unsigned long weyl_dimension(const std::vector<int>& fundamental_coords);

/// The sl(n+1) generators e_{i,i+1}, e_{i+1,i} (1 <= i <= n-1), e_{n,n+1},
/// e_{n+1,n}, labelled "e_{i,j}".
std::vector<std::pair<std::string, WittElement>> sl_generators(std::size_t n);

struct ClosureResult {
  SubspaceBasis basis;   // slice of degree <= degree_bound
  bool stable = false;   // fixpoint reached inside the exploration window
  int rounds = 0;
};

inline constexpr int kDefaultClosureRounds = 64;
/// Largest number of extra degrees the default closure window may grow by.
inline constexpr int kClosureWindowGrowth = 12;

/// Smallest subspace V of the window P_{<=bound+slack} containing gens with
/// g(V) cap P_{<=bound+slack} inside V for every sl_generator g. The degree
/// <= bound slice is returned, stable when the iteration settled within
/// max_rounds.
///
/// A negative slack grows the window instead, starting from m+2,
/// m = max(0, largest generator degree - 1), until the slice is unchanged over
/// two consecutive enlargements; stable then also requires that this happened
/// within kClosureWindowGrowth extra degrees.
ClosureResult sl_closure(const OmegaModule& m, const std::vector<Poly>& gens, int degree_bound,
                         int slack = -1, int max_rounds = kDefaultClosureRounds);

/// lambda_1 (lambda_r^{-1} e_{r,1} - e_{n+1,1}); lowers the d_r-degree by one.
WittElement elimination_operator(const OmegaModule& m, std::size_t r);

/// The five-term operator mapping a monic degree-d element of C[d1] to
/// d(d-1+(n+1)a) d1^{d-1} + lower terms.
WittElement lowering_operator(const OmegaModule& m);

/// Clears d_n, ..., d_2 from p by repeated elimination_operator applications.
Poly eliminate_to_first_variable(const OmegaModule& m, const Poly& p);

/// One reduction step: returns an element of the sl(n+1)-submodule generated
/// by p with total degree d-1 (or lower, if elimination already dropped the
/// degree). Throws DomainError for zero or constant p and ObstructionError if
/// d(d-1+(n+1)a) = 0.
Poly reduce_degree(const OmegaModule& m, const Poly& p);

struct WitnessChain {
  bool reached_one = false;
  std::vector<int> degrees;                 // degree after each step, starting with deg p
  std::optional<int> obstruction_degree;    // set when the chain stopped on an obstruction
  Poly final_poly{0};
};

WitnessChain irreducible_chain(const OmegaModule& m, const Poly& p);

/// True iff repeated reduce_degree drives p to the constant 1 (after scaling).
bool irreducible_witness(const OmegaModule& m, const Poly& p);

struct LowestWeightReport {
  Weight weight;
  std::vector<NamedCheck> checks;
  bool all_pass() const;
};

/// Cartan eigenvalues and lowering images of Y^1_m modulo W for a = -m/(n+1).
LowestWeightReport lowest_weight_report(std::size_t n, int m, const CVec& lambda);

/// Same computation; throws StructuralViolation on the first failed identity.
/// For valid input the result is (-m, 0, ..., 0).
Weight lowest_weight_check(std::size_t n, int m, const CVec& lambda);

struct ModuleParams {
  Scalar a;
  CVec lambda;
  bool operator==(const ModuleParams&) const = default;
};

/// Recovers (a, lambda) purely from actions on the generator 1:
/// e_{n+1,i} 1 = lambda_i^{-1}(d_i + a).
ModuleParams extract_params(const OmegaModule& m);

/// Omega-family isomorphism test.
bool isomorphic(const OmegaModule& m1, const OmegaModule& m2);

/// W-family isomorphism test; false unless both parameters a lie in -(1/(n+1))Z_+.
bool isomorphic_w(const OmegaModule& m1, const OmegaModule& m2);

}  // namespace wittmod
