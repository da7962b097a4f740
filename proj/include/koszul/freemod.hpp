#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/poly.hpp"

namespace koszul {

// Graded free module R(-d_1) + ... + R(-d_r): we only store the generator
// degrees, so deg(m * e_i) = deg(m) + gen_degs[i].
struct FreeModule {
    std::vector<int> gen_degs;

    int rank() const { return (int)gen_degs.size(); }
    bool operator==(const FreeModule& o) const { return gen_degs == o.gen_degs; }
    bool operator!=(const FreeModule& o) const { return !(*this == o); }
};

struct ModTerm {
    Monomial m;
    int comp = 0;
    std::uint32_t c = 0;
};

// Monomial order on a free module. POT and TOP are the standard ones;
// Schreyer carries the lead terms of the generators it was induced by plus
// the order on the module below (so towers of induced orders work); Elim
// splits components into a primary block that dominates a tag block, which is
// what turns one Groebner run into kernel/preimage/membership answers.
class ModuleOrder {
public:
    enum class Kind { POT, TOP, Schreyer, Elim };

    static std::shared_ptr<const ModuleOrder> pot();
    static std::shared_ptr<const ModuleOrder> top();
    static std::shared_ptr<const ModuleOrder> schreyer(
        std::vector<std::pair<Monomial, int>> gen_leads,
        std::shared_ptr<const ModuleOrder> base);
    // components [0, primary_rank) beat components >= primary_rank; the
    // primary block is compared by `primary`, the tag block by TOP
    static std::shared_ptr<const ModuleOrder> elim(
        int primary_rank, std::shared_ptr<const ModuleOrder> primary);

    Kind kind() const { return kind_; }
    int primary_rank() const { return primary_rank_; }

    // <0, 0, >0 as usual; "greater" means earlier in a normalized element
    int compare(const Monomial& ma, int ca, const Monomial& mb, int cb) const;

private:
    ModuleOrder(Kind k) : kind_(k) {}
    Kind kind_;
    std::vector<std::pair<Monomial, int>> gen_leads_;
    std::shared_ptr<const ModuleOrder> base_;
    int primary_rank_ = 0;
};

using OrderPtr = std::shared_ptr<const ModuleOrder>;

// Element of a free module: terms strictly descending in the active order,
// nonzero coefficients.
class FreeElem {
public:
    FreeElem() = default;
    explicit FreeElem(std::vector<ModTerm> sorted_terms) : t_(std::move(sorted_terms)) {}

    bool is_zero() const { return t_.empty(); }
    const std::vector<ModTerm>& terms() const { return t_; }
    const ModTerm& lead() const;
    size_t size() const { return t_.size(); }

    bool operator==(const FreeElem& o) const;
    bool operator!=(const FreeElem& o) const { return !(*this == o); }

private:
    std::vector<ModTerm> t_;
};

FreeElem fe_from_terms(const PolyRing& R, const ModuleOrder& ord, std::vector<ModTerm> raw);
FreeElem fe_gen(const PolyRing& R, int comp); // e_comp
FreeElem fe_add(const PolyRing& R, const ModuleOrder& ord, const FreeElem& a, const FreeElem& b);
FreeElem fe_sub(const PolyRing& R, const ModuleOrder& ord, const FreeElem& a, const FreeElem& b);
FreeElem fe_neg(const PolyRing& R, const FreeElem& a);
FreeElem fe_scale(const PolyRing& R, const FreeElem& a, std::uint32_t c);
FreeElem fe_mul_term(const PolyRing& R, const Term& t, const FreeElem& a);
// a - t*b
FreeElem fe_axpy(const PolyRing& R, const ModuleOrder& ord, const FreeElem& a, const Term& t,
                 const FreeElem& b);
FreeElem fe_monic(const PolyRing& R, const FreeElem& a);

// assemble from one polynomial per component / split back
FreeElem fe_from_polys(const PolyRing& R, const ModuleOrder& ord, const std::vector<Poly>& comps);
std::vector<Poly> fe_to_polys(const PolyRing& R, const FreeElem& a, int rank);
Poly fe_component(const PolyRing& R, const FreeElem& a, int comp);

bool fe_is_homogeneous(const FreeModule& F, const FreeElem& a);
// degree of a homogeneous element; nullopt for 0, throws otherwise
std::optional<int> fe_degree_checked(const FreeModule& F, const FreeElem& a);

std::string fe_str(const PolyRing& R, const FreeElem& a);

} // namespace koszul
