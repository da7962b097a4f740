#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "koszul/gflin.hpp"
#include "koszul/module.hpp"
#include "koszul/regval.hpp"

namespace koszul {

// Family I_1, ..., I_d of ideals generated by linear forms. Each member is
// stored as the coefficient matrix of a basis of its span: full row rank,
// reduced row echelon form, one linear form per row.
struct LinearIdealFamily {
    PolyRing ring;
    std::vector<FpMatrix> spaces;

    int size() const { return (int)spaces.size(); }
};

// forms[i] spans the i-th space; redundant generators are reduced away.
// Every form must be homogeneous of degree 1 (zero polynomials are dropped).
LinearIdealFamily make_family(const PolyRing& R, const std::vector<std::vector<Poly>>& forms);

std::vector<Poly> family_forms(const LinearIdealFamily& F, int i); // basis of V_i
Ideal family_ideal(const LinearIdealFamily& F, int i);             // I_i

Ideal product_ideal(const LinearIdealFamily& F); // I = I_1 ... I_d

// sum of the I_i with i in A (0-based); A must be nonempty
Ideal index_ideal(const LinearIdealFamily& F, const std::vector<int>& A);
// product of the I_j with j outside the drop set; the empty product is (1)
Ideal complementary_product(const LinearIdealFamily& F, const std::vector<int>& drop);

struct PrimaryComponent {
    std::vector<int> index_set; // A, 0-based, ascending
    Ideal base;                 // I_A
    int exponent = 0;           // |A|
    Ideal component;            // I_A^|A|
};

struct PrimaryDecomposition {
    Ideal product;                             // I
    std::vector<PrimaryComponent> components;  // all 2^d - 1 of them
    Ideal fine;                                // intersection of the components
    Ideal coarse;                              // J_1 cap ... cap J_d cap I_[d]^d
};

// Materializes the decomposition of the product into powers of the index
// ideals and certifies I = fine = coarse by mutual Groebner membership.
// The identities are theorems, so a failure is an engine bug. d <= 6.
PrimaryDecomposition primary_decomposition_linprod(const LinearIdealFamily& F);

struct ColonSubringCheck {
    Ideal colon;                                    // I : f, original coordinates
    int subring_dim = 0;                            // dim V, V = V_1 + ... + V_d
    std::vector<std::vector<std::uint32_t>> to_new; // row j: the j-th new variable in the old ones
    std::vector<std::vector<std::uint32_t>> to_old; // inverse substitution, old vars in new ones
    std::vector<Poly> certified; // reduced GB of I : f written in the new coordinates
};

// Verifies that I : f is generated by elements of the subring k[V]: change
// coordinates so that a basis of V comes first, rewrite a reduced GB of
// I : f, and inspect variable support. Throws CheckFailed on violation
// (a theorem failure, hence an engine bug) and ZeroDivisorArgument on f = 0.
ColonSubringCheck colon_subring_check(const LinearIdealFamily& F, const Poly& f);

struct SubquotientModule {
    Ideal numerator, denominator;
    PresentedModule realized;
};

// num/den as a presented module: one generator per numerator generator,
// relations = the kernel of mapping those onto their classes mod den.
// Throws NotContained unless den is contained in num.
SubquotientModule subquotient(const PolyRing& R, const Ideal& num, const Ideal& den);

struct TraceEntry {
    std::string name; // which module of the tower
    RegValue reg;
    int bound = 0; // asserted upper bound on reg
    bool within = false;
};

struct ProofTrace {
    int d = 0;
    int deg_f = 0;
    int aux_i = -1, aux_j = -1; // indices chosen for the auxiliary modules, -1 if none
    std::vector<TraceEntry> entries;
    bool all_within = true;
};

// The regularity certificates behind the product-times-hypersurface
// equality: builds M_i = ((I:f) cap J_1 cap ... cap J_i)/I for i in
// [i_lo, i_hi], every N_t = ((I:f) cap J_1 cap ... cap J_t + J_{t+1})/J_{t+1},
// and for d >= 2 one instance of the auxiliary modules P_0, P_1 (and U_j/Y_j
// when d >= 3). Asserts reg M_i <= d-1, reg N_t <= d-1, reg P_0 <= d-2,
// reg P_1 <= d-2, reg U_j/Y_j <= d-3; throws BoundViolated otherwise.
ProofTrace proof_trace(const LinearIdealFamily& F, const Poly& f, int i_lo, int i_hi);

// JSON report: family, f, per-module regularity, asserted bound, pass/fail
std::string proof_trace_json(const LinearIdealFamily& F, const Poly& f, const ProofTrace& t);

// deterministic pseudo-random family: d members, 1..max_forms forms each
LinearIdealFamily random_family(const PolyRing& R, int d, int max_forms, std::uint64_t seed);

} // namespace koszul
