#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "koszul/freemod.hpp"

namespace koszul {

// f = sum_k quotients[k] * basis[k] + rem, every term of rem irreducible
struct NFResult {
    FreeElem rem;
    std::vector<Poly> quotients;
};

FreeElem normal_form(const PolyRing& R, const ModuleOrder& ord, const FreeElem& f,
                     const std::vector<FreeElem>& basis);
NFResult nf_with_quotients(const PolyRing& R, const ModuleOrder& ord, const FreeElem& f,
                           const std::vector<FreeElem>& basis);

// Buchberger over a graded free module. Input generators must be homogeneous
// with respect to F's shifts. Returns the reduced monic Groebner basis,
// sorted descending by lead term, which is canonical for the given order.
std::vector<FreeElem> buchberger(const PolyRing& R, const FreeModule& F, const ModuleOrder& ord,
                                 const std::vector<FreeElem>& gens);

// minimal + tail-reduced + monic; input must already be a Groebner basis
std::vector<FreeElem> interreduce_gb(const PolyRing& R, const ModuleOrder& ord,
                                     std::vector<FreeElem> elems);

bool gb_contains(const PolyRing& R, const ModuleOrder& ord, const std::vector<FreeElem>& gb,
                 const FreeElem& v);

// Groebner basis of the graph {(w_i, u_i)} in G + T under an order that makes
// the G block dominate. One computation answers membership in <w_i>,
// "express v in terms of the w_i", and gives a basis of the submodule of T of
// tag-combinations whose w-combination vanishes (kernels, syzygies,
// intersections, preimages are all instances).
struct TaggedGB {
    FreeModule ambient; // G shifts followed by T shifts
    int rank_g = 0;
    OrderPtr ord;
    std::vector<FreeElem> elems;

    int rank_t() const { return ambient.rank() - rank_g; }
};

TaggedGB tagged_gb(const PolyRing& R, const FreeModule& G, const FreeModule& T,
                   const std::vector<std::pair<FreeElem, FreeElem>>& graph,
                   OrderPtr g_order = nullptr);

// normal form of (v, 0); first = G part, second = T part
std::pair<FreeElem, FreeElem> tagged_nf(const PolyRing& R, const TaggedGB& tg, const FreeElem& v);
bool tagged_contains(const PolyRing& R, const TaggedGB& tg, const FreeElem& v);
// coordinates s in T with v = sum s_i w_i, when v lies in <w_i>
std::optional<FreeElem> tagged_express(const PolyRing& R, const TaggedGB& tg, const FreeElem& v);
// GB (under TOP on T) of { s in T : sum s_i w_i = 0 }
std::vector<FreeElem> tagged_pure(const PolyRing& R, const TaggedGB& tg);

// Syzygies of a monic Groebner basis under the induced order on the free
// module with one generator per basis element. The input must be sorted by
// lead component ascending and lead monomial lex-descending within a
// component; that ordering is what caps the length of the iterated
// construction at the number of variables.
struct SchreyerLevel {
    FreeModule G;
    OrderPtr ord;
    std::vector<FreeElem> syz; // GB of the syzygy module, interreduced
};

void sort_for_schreyer(const PolyRing& R, std::vector<FreeElem>& gb);
SchreyerLevel schreyer_syzygies(const PolyRing& R, const FreeModule& F, OrderPtr ordF,
                                const std::vector<FreeElem>& gb_sorted);

// rank-1 conversions
FreeElem poly_as_fe(const Poly& p);
Poly fe_as_poly(const PolyRing& R, const FreeElem& v);

// Homogeneous ideal with its reduced Groebner basis computed up front.
struct Ideal {
    std::vector<Poly> gens; // as given (zero generators dropped)
    std::vector<Poly> gb;   // reduced monic GB, descending grevlex
};

Ideal make_ideal(const PolyRing& R, std::vector<Poly> gens);
bool ideal_is_zero(const Ideal& I);
bool ideal_is_unit(const Ideal& I);
bool ideal_contains(const PolyRing& R, const Ideal& I, const Poly& f);
bool ideal_contains_ideal(const PolyRing& R, const Ideal& I, const Ideal& J); // J subset of I
bool ideal_equal(const PolyRing& R, const Ideal& I, const Ideal& J);
Poly ideal_nf(const PolyRing& R, const Ideal& I, const Poly& f);
Ideal ideal_sum(const PolyRing& R, const Ideal& I, const Ideal& J);
Ideal ideal_product(const PolyRing& R, const Ideal& I, const Ideal& J);
Ideal ideal_power(const PolyRing& R, const Ideal& I, int k);
Ideal ideal_intersect(const PolyRing& R, const Ideal& I, const Ideal& J);
Ideal ideal_colon_poly(const PolyRing& R, const Ideal& I, const Poly& f);
// coordinates on I.gens when f is a member
std::optional<std::vector<Poly>> ideal_membership_certificate(const PolyRing& R, const Ideal& I,
                                                              const Poly& f);

} // namespace koszul
