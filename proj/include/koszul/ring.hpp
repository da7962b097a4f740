#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/field.hpp"

namespace koszul {

// Standard graded polynomial ring k[x_1..x_n] over GF(p), every variable in
// degree 1. The only ring order is grevlex.
class PolyRing {
public:
    PolyRing(PrimeField field, std::vector<std::string> vars);

    const PrimeField& field() const { return field_; }
    int nvars() const { return (int)vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var(int i) const { return vars_[i]; }

    bool operator==(const PolyRing& o) const
    {
        return field_ == o.field_ && vars_ == o.vars_;
    }
    bool operator!=(const PolyRing& o) const { return !(*this == o); }

private:
    PrimeField field_;
    std::vector<std::string> vars_;
};

inline void require_same_ring(const PolyRing& a, const PolyRing& b)
{
    if (a != b) throw RingMismatch();
}

// Exponent vector with cached total degree. Exponents are 16-bit and
// addition is overflow-checked.
struct Monomial {
    std::vector<std::uint16_t> e;
    int deg = 0;

    static Monomial one(int nvars) { return Monomial{std::vector<std::uint16_t>(nvars, 0), 0}; }
    static Monomial var(int nvars, int i, int power = 1)
    {
        Monomial m = one(nvars);
        m.e[i] = (std::uint16_t)power;
        m.deg = power;
        return m;
    }
    static Monomial of(std::vector<std::uint16_t> exps)
    {
        int d = 0;
        for (auto x : exps) d += x;
        return Monomial{std::move(exps), d};
    }

    bool is_one() const { return deg == 0; }
    bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_div(const Monomial& a, const Monomial& b); // a / b, requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// grevlex: higher total degree wins; on equal degree the LAST differing
// exponent decides, smaller exponent greater. Returns <0, 0, >0.
int grevlex_compare(const Monomial& a, const Monomial& b);

// plain lex with x_1 > x_2 > ...; used to sort basis elements for the
// syzygy tower, not as a ring order
int lex_compare(const Monomial& a, const Monomial& b);

std::string mono_str(const PolyRing& R, const Monomial& m);

} // namespace koszul
