#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "koszul/gb.hpp"
#include "koszul/regval.hpp"

namespace koszul {

// Finitely presented graded module over S = k[x_1..x_n] or over R = S/J:
// the cokernel of relations inside a graded free cover. Modules over R are
// stored as S-data; the quotient ideal's multiples of the cover generators
// are folded into the relation basis, so normal forms and ranks are always
// computed over S.
struct PresentedModule {
    PolyRing ring;
    Ideal quotient;                  // J with its GB; empty means over S itself
    FreeModule cover;                // generator degrees
    std::vector<FreeElem> relations; // as handed in
    std::vector<FreeElem> rel_gb;    // GB of relations + J * e_i, POT

    bool over_quotient() const { return !quotient.gens.empty(); }
};

PresentedModule make_module(const PolyRing& R, Ideal quotient, FreeModule cover,
                            std::vector<FreeElem> relations);
// free module over S/J
PresentedModule make_free_module(const PolyRing& R, Ideal quotient, std::vector<int> shifts);
// (S/J)/I = S/(J+I) as a cyclic module over S/J
PresentedModule cyclic_module(const PolyRing& R, Ideal quotient, const Ideal& I);
// the ideal I, generated by I.gens, as a module over S/J
PresentedModule ideal_as_module(const PolyRing& R, Ideal quotient, const Ideal& I);

// the same data with the quotient folded into the relations; the underlying
// S-module of an S/J-module
PresentedModule underlying_s_module(const PresentedModule& M);

bool same_quotient(const PresentedModule& A, const PresentedModule& B);
// identical presentations (ring, quotient, cover, relation span)
bool presentations_match(const PresentedModule& A, const PresentedModule& B);

bool is_zero_module(const PresentedModule& M);
// canonical representative of an element given in cover coordinates
FreeElem module_nf(const PresentedModule& M, const FreeElem& v);
bool element_is_zero_in(const PresentedModule& M, const FreeElem& v);

RegValue largest_generator_degree(const PresentedModule& M);
RegValue largest_relation_degree(const PresentedModule& M);

PresentedModule shift_module(const PresentedModule& M, int k); // M(k)
PresentedModule direct_sum(const PresentedModule& A, const PresentedModule& B);
PresentedModule tensor_product(const PresentedModule& A, const PresentedModule& B);

// M / (submodule generated by the given cover elements)
PresentedModule quotient_by_elements(const PresentedModule& M, const std::vector<FreeElem>& elems);

// (span(elems) + relations) / relations, with the inclusion data kept
struct Submodule {
    PresentedModule module;
    std::vector<FreeElem> gens_in_ambient; // cover elements of the ambient module
};
Submodule submodule_from_elements(const PresentedModule& M, std::vector<FreeElem> elems);

// first (quotient generator, cover component) whose product is nonzero in M,
// if I fails to annihilate M
std::optional<std::pair<int, int>> annihilation_failure(const PresentedModule& M, const Ideal& I);
bool ideal_annihilates(const PresentedModule& M, const Ideal& I);

// Degree-d map of presented modules determined by images of cover generators.
struct ModuleMap {
    PresentedModule src, tgt;
    int degree = 0;
    std::vector<FreeElem> images; // in tgt.cover
};

ModuleMap make_map(PresentedModule src, PresentedModule tgt, std::vector<FreeElem> images,
                   int degree = 0);
FreeElem map_apply(const ModuleMap& f, const FreeElem& v);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f); // g after f
ModuleMap identity_map(const PresentedModule& M);
// multiplication by a homogeneous polynomial
ModuleMap multiplication_map(const PresentedModule& M, const Poly& f);

PresentedModule map_kernel(const ModuleMap& f);
Submodule map_kernel_sub(const ModuleMap& f); // kernel + its generators in src.cover
PresentedModule map_image(const ModuleMap& f);
PresentedModule map_cokernel(const ModuleMap& f);
bool map_is_surjective(const ModuleMap& f);
bool map_is_zero(const ModuleMap& f);

// (0 :_M f); throws on f = 0
Submodule module_colon_zero(const PresentedModule& M, const Poly& f);

// H^0_m(M): everything killed by a power of the irrelevant maximal ideal,
// found by iterating "kill one power of m" until the chain stabilizes
struct Saturation {
    PresentedModule h0;
    std::vector<FreeElem> gens_in_ambient;
};
Saturation saturate_zero(const PresentedModule& M);

// phi tensor id_N, for phi: A -> B
ModuleMap tensor_map_with_module(const ModuleMap& phi, const PresentedModule& N);

// Workhorse shared by kernels, images, intersections: GB of the submodule
// {a in T : sum a_i images[i] lies in span(target_rel)}. images[i] must be
// homogeneous of degree T.gen_degs[i].
std::vector<FreeElem> preimage_gb(const PolyRing& R, const FreeModule& G, const FreeModule& T,
                                  const std::vector<FreeElem>& images,
                                  const std::vector<FreeElem>& target_rel);
// coordinates a with sum a_i images[i] = v modulo span(target_rel)
std::optional<FreeElem> express_modulo(const PolyRing& R, const FreeModule& G,
                                       const FreeModule& T, const std::vector<FreeElem>& images,
                                       const std::vector<FreeElem>& target_rel,
                                       const FreeElem& v);

} // namespace koszul
