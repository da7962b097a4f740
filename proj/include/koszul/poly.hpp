#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/ring.hpp"

namespace koszul {

struct Term {
    Monomial m;
    std::uint32_t c = 0; // nonzero in normalized polys
};

// Polynomial over GF(p): terms strictly descending in grevlex, no zero
// coefficients. The zero polynomial has no terms. The engine is graded, so
// most entry points insist on homogeneous inputs; arithmetic itself does not
// care.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Term> sorted_terms) : t_(std::move(sorted_terms)) {}

    bool is_zero() const { return t_.empty(); }
    const std::vector<Term>& terms() const { return t_; }
    const Term& lead() const;
    size_t size() const { return t_.size(); }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    std::vector<Term> t_;
};

// canonicalize an arbitrary term list (sort, merge, drop zeros)
Poly poly_from_terms(const PolyRing& R, std::vector<Term> raw);

Poly poly_zero();
Poly poly_const(const PolyRing& R, std::uint32_t c);
Poly poly_var(const PolyRing& R, int i);
Poly poly_term(const PolyRing& R, Monomial m, std::uint32_t c);

Poly poly_add(const PolyRing& R, const Poly& a, const Poly& b);
Poly poly_sub(const PolyRing& R, const Poly& a, const Poly& b);
Poly poly_neg(const PolyRing& R, const Poly& a);
Poly poly_scale(const PolyRing& R, const Poly& a, std::uint32_t c);
Poly poly_mul_term(const PolyRing& R, const Term& t, const Poly& a);
Poly poly_mul(const PolyRing& R, const Poly& a, const Poly& b);
Poly poly_pow(const PolyRing& R, const Poly& a, int k);
// a - t*b, the inner loop of division
Poly poly_axpy(const PolyRing& R, const Poly& a, const Term& t, const Poly& b);
Poly poly_monic(const PolyRing& R, const Poly& a);

// degree of a homogeneous poly; nullopt for 0, throws NotHomogeneous otherwise
std::optional<int> poly_degree_checked(const Poly& a);
bool poly_is_homogeneous(const Poly& a);
// largest total degree among terms (0 -> nullopt); no homogeneity demand
std::optional<int> poly_top_degree(const Poly& a);

// exact division by a polynomial, throws InternalError when not exact
Poly poly_exact_div(const PolyRing& R, const Poly& a, const Poly& b);

// replace variable x_j by the linear form sum_k M[j][k] x_k of the same ring;
// M is nvars x nvars row-major over GF(p)
Poly substitute_linear(const PolyRing& R, const Poly& a,
                       const std::vector<std::vector<std::uint32_t>>& M);

std::string poly_str(const PolyRing& R, const Poly& a);

} // namespace koszul
