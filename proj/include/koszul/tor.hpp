#pragma once

#include <string>
#include <utility>
#include <vector>

#include "koszul/resolution.hpp"

namespace koszul {

// F tensor N for a free module F: one shifted block copy of N per generator.
// Block g occupies cover components [g*rank(N), (g+1)*rank(N)).
PresentedModule tensor_free_with_module(const PolyRing& R, const FreeModule& F,
                                        const PresentedModule& N);

// the induced map (Fsrc tensor N) -> (Ftgt tensor N) of a polynomial matrix
// d: Fsrc -> Ftgt; skips make_map validation since well-definedness is
// structural here
ModuleMap tensor_matrix_with_module(const PolyRing& R, const PolyMatrix& d,
                                    const FreeModule& Fsrc, const FreeModule& Ftgt,
                                    const PresentedModule& N);

// Homology at one spot: ker(outgoing)/im(incoming). Either map may be null
// (missing end of the complex); `at` is the module the homology lives on.
PresentedModule homology_at(const PresentedModule& at, const ModuleMap* incoming,
                            const ModuleMap* outgoing);

// d[k] maps C_{k+1} -> C_k; returns H_0..H_L, L = d.size(). Checks adjacency
// and that consecutive maps compose to zero.
std::vector<PresentedModule> homology_of_presented_complex(const std::vector<ModuleMap>& d);

struct TorModule {
    int i = 0;
    PresentedModule value;
    std::string provenance; // which resolution was tensored
};

// H_i(F(M) tensor N) with F(M) the minimal resolution of the FIRST argument.
// Both modules must live over the polynomial ring itself.
TorModule tor_module(const PresentedModule& M, const PresentedModule& N, int i);
// all of Tor_0..Tor_pdim(M) in one pass over a single resolution
std::vector<TorModule> tor_all(const PresentedModule& M, const PresentedModule& N);

struct CregReport {
    RegValue creg;                                 // sup_i (reg Tor_i - i)
    std::vector<std::pair<int, RegValue>> per_index; // (i, reg Tor_i - i)
    int pdim = 0;                                  // bound used for the sup
    RegValue reg_m, reg_n;
};

// Chardin mixed regularity. Construction asserts creg >= reg M + reg N for
// nonzero arguments; a violation is an engine bug, not an input error.
CregReport creg(const PresentedModule& M, const PresentedModule& N);

struct ChardinReport {
    CregReport base;
    bool inequality_holds = false;
    int dim_tor1 = -1; // krull dimension of Tor_1, -1 if zero
    bool equality_applicable = false; // dim Tor_1 <= 1
    bool equality_holds = false;      // creg == reg M + reg N
};
ChardinReport check_chardin(const PresentedModule& M, const PresentedModule& N);

struct TorLinearReport {
    RegValue creg;     // creg_S(S/I, S/J)
    RegValue reg_si;   // reg S/I
    RegValue margin;   // creg - reg S/I
    bool linear = false; // margin <= 1
};
// is R = S/J Tor-linear at the single test ideal I
TorLinearReport is_tor_linear(const PolyRing& R, const Ideal& J, const Ideal& I);

/// for 2 <= i <= pdim: nonzero Tor_i(S/J, S/I) has an (i+d)-linear resolution
bool check_tor_linear_strand(const PolyRing& R, const Ideal& J, const Ideal& I, int d);

struct CompareRegReport {
    RegValue lhs;        // truncated reg_R(R/IR), R = S/(f)
    RegValue rhs;        // max{reg S/I, sup_{i>=1}(reg Tor_i(S/I, S/(f)) - (i+1))}
    bool stabilized = false;
    bool holds = false;
};
// the regularity comparison for the surjection S -> S/(f); asserts lhs <= rhs
CompareRegReport check_compare_reg(const PolyRing& R, const Ideal& I, const Poly& f, int cutoff);

} // namespace koszul
