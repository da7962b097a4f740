#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "koszul/module.hpp"
#include "koszul/regval.hpp"
#include "koszul/rng.hpp"

namespace koszul {

// Witness that phi: N -> N' factors as beta . alpha through a middle module
// with alpha injective, beta surjective, I Coker(alpha) = 0 and
// I Ker(beta) = 0. All maps are degree 0.
struct ApproximationWitness {
    ModuleMap phi;
    Ideal ideal;
    PresentedModule mid;
    ModuleMap alpha; // src(phi) -> mid
    ModuleMap beta;  // mid -> tgt(phi)
};

// Per-condition diagnostic; `failing` names the first condition that broke,
// `offender` prints a nonzero product certifying an annihilation failure.
struct WitnessReport {
    bool ok = false;
    std::string failing;
    std::vector<std::pair<std::string, bool>> conditions;
    std::string offender;
};

WitnessReport verify_witness(const ApproximationWitness& w);
std::string witness_report_json(const WitnessReport& r);

// factor-through witnesses for the two degenerate shapes: a surjection
// factors through its source, an injection through its target
ApproximationWitness witness_for_surjective(const ModuleMap& phi, const Ideal& I);
ApproximationWitness witness_for_injective(const ModuleMap& phi, const Ideal& I);

// Nested submodules of a common ambient Q: span(m) <= span(p),
// span(mp) <= span(pp), m <= mp, p <= pp componentwise as spans, and
// I mp <= span(m), I pp <= span(p). Encodes phi: P/M -> P'/M' with the
// middle module P'/M.
struct SandwichData {
    PresentedModule ambient;
    Ideal ideal;
    std::vector<FreeElem> m_gens, p_gens, mp_gens, pp_gens;
};

// throws NotASandwich naming the violated containment
ApproximationWitness witness_from_sandwich(const SandwichData& s);

// I kills both the kernel and the cokernel of phi (necessary for a witness
// to exist, and sufficient when phi is injective or surjective)
bool check_kernel_cokernel(const ModuleMap& phi, const Ideal& I);

// The witness for phi tensor id_B built from w, with middle module
// (G tensor mid) / (W alpha(src)) for a presentation B = G/W.
ApproximationWitness induced_tensor_witness(const ApproximationWitness& w,
                                            const PresentedModule& B);
// The witness for W(src) -> W(tgt) where W(X) = span{ w_k tensor x_u } inside
// G tensor X, for given elements w_gens of the free module G.
ApproximationWitness induced_W_witness(const ApproximationWitness& w, const FreeModule& G,
                                       const std::vector<FreeElem>& w_gens);
// The witness for Tor_i(phi, B), i >= 1, for surjective phi: higher i is
// shifted down by replacing B with its syzygies, and at i = 1 both Tor
// modules are realized inside G tensor F as (GU cap WF)/WU resp (GV cap WF)/WV
// and sandwiched there.
ApproximationWitness induced_tor_witness(const ApproximationWitness& w, const PresentedModule& B,
                                         int i);

struct KerannReport {
    bool kernel = false;   // I Ker(pi) = 0
    bool square = false;   // I^2 Ker(pi) = 0
    bool cokernel = false; // I Coker(pi) = 0
    std::string offender;  // nonzero element of I Ker(pi), when one exists
};

std::string kerann_report_json(const KerannReport& r);

// pi = phi tensor id_B for a witnessed map; asserts the strong conclusion
// I Ker(pi) = I Coker(pi) = 0 and throws AssertionFailed otherwise
KerannReport check_kerann(const ApproximationWitness& w, const PresentedModule& B);
// weak form for maps that merely pass check_kernel_cokernel: asserts
// I^2 Ker(pi) = 0 and I Coker(pi) = 0, and reports without asserting
// whether the strong form I Ker(pi) = 0 happened to hold as well
KerannReport check_kerann_weak(const ModuleMap& phi, const Ideal& I, const PresentedModule& B);

// (0 :_N y) has finite length, for a linear form y
bool is_filter_regular(const PresentedModule& N, const Poly& y);
// random linear forms until one is filter-regular for every module given
Poly find_filter_regular(const std::vector<PresentedModule>& mods, std::uint64_t seed,
                         int max_tries = 64);

// top degree of H^0_m(N); minus infinity when N is saturated
RegValue a0(const PresentedModule& N);

// Witnessed approximations phi_i: N -> N_i with ideals I_i whose sum contains
// every monomial of degree t.
struct GeneralizedApproxSystem {
    PresentedModule base;
    std::vector<ApproximationWitness> entries;
    int t = 1;
};

struct SystemReport {
    bool ok = false;
    bool coverage = false; // m^t <= I_1 + ... + I_d
    std::vector<WitnessReport> entries;
    std::string failing;
};

SystemReport verify_system(const PresentedModule& N, const std::vector<ApproximationWitness>& entries,
                           int t);
std::string system_report_json(const SystemReport& r);
// validated constructor; throws InvalidParameter / UnsupportedQuotient
GeneralizedApproxSystem make_system(PresentedModule N, std::vector<ApproximationWitness> entries,
                                    int t);

// reg N <= max{ max_i reg N_i + 1, reg(N/yN) } + t - 1 for a y that is
// filter-regular for N and every N_i; also cross-checks the recursion
// reg N = max{ reg(N/yN), a0(N) }
struct DS33Report {
    RegValue lhs;       // reg N
    RegValue rhs;
    RegValue reg_mod_y; // reg(N/yN)
    RegValue a0_value;  // a0(N)
    std::vector<RegValue> entry_regs;
    bool holds = false;
};

DS33Report check_DS33(const GeneralizedApproxSystem& sys, const Poly& y);

// reg N <= max{ max_i reg N_i + 1, b } + (t-1) n with b the largest degree
// of a minimal generator of N
struct DS35Report {
    RegValue lhs;
    RegValue rhs;
    RegValue top_gen; // b
    std::vector<RegValue> entry_regs;
    bool holds = false;
};

DS35Report check_DS35(const GeneralizedApproxSystem& sys);

} // namespace koszul
