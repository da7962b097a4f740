#pragma once

// Brute-force degreewise linear algebra, independent of the Groebner engine.
// A graded submodule is pinned down degree by degree: enumerate the monomial
// basis of the ambient free module in that degree, turn multiples of the
// generators into vectors, row reduce. Slow and obviously correct; the unit
// tests compare the engine against this.

#include <map>
#include <utility>
#include <vector>

#include "koszul/freemod.hpp"
#include "koszul/gflin.hpp"

namespace koszul::oracle {

std::vector<Monomial> monomials_of_degree(const PolyRing& R, int d);

// monomial basis (m, comp) of the degree-d piece of the free module F
struct DegBasis {
    int degree = 0;
    std::vector<std::pair<Monomial, int>> elems;
    std::map<std::pair<std::vector<std::uint16_t>, int>, int> index;

    int dim() const { return (int)elems.size(); }
};

DegBasis degree_basis(const PolyRing& R, const FreeModule& F, int d);

std::vector<std::uint32_t> coord_vector(const PolyRing& R, const DegBasis& B, const FreeElem& v);

// rows span the degree-d piece of the submodule generated by gens
FpMatrix span_matrix(const PolyRing& R, const FreeModule& F, const std::vector<FreeElem>& gens,
                     int d);

int submodule_dim(const PolyRing& R, const FreeModule& F, const std::vector<FreeElem>& gens,
                  int d);

// membership of a homogeneous element
bool submodule_member(const PolyRing& R, const FreeModule& F, const std::vector<FreeElem>& gens,
                      const FreeElem& v);

// rank-1 conveniences for ideals
int ideal_dim(const PolyRing& R, const std::vector<Poly>& gens, int d);
bool ideal_member(const PolyRing& R, const std::vector<Poly>& gens, const Poly& f);

// dimension of the degree-d kernel of the map Fsrc -> Ftgt sending the i-th
// generator to images[i]
int map_kernel_dim(const PolyRing& R, const FreeModule& Fsrc, const FreeModule& Ftgt,
                   const std::vector<FreeElem>& images, int d);

} // namespace koszul::oracle
