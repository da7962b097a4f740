#include "koszul/ring.hpp"

#include <limits>
#include <set>
#include <sstream>

namespace koszul {

PolyRing::PolyRing(PrimeField field, std::vector<std::string> vars)
    : field_(field), vars_(std::move(vars))
{
    if (vars_.empty()) throw InvalidParameter("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty()) throw InvalidParameter("empty variable name");
        if (!seen.insert(v).second) throw InvalidParameter("duplicate variable name: " + v);
    }
}

Monomial mono_mul(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) {
        std::uint32_t s = (std::uint32_t)r.e[i] + b.e[i];
        if (s > std::numeric_limits<std::uint16_t>::max())
            throw InternalBoundExceeded("monomial exponent overflow");
        r.e[i] = (std::uint16_t)s;
    }
    r.deg = a.deg + b.deg;
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b)
{
    if (a.deg > b.deg) return false;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) {
        if (b.e[i] > r.e[i]) throw InternalError("mono_div: not divisible");
        r.e[i] = (std::uint16_t)(r.e[i] - b.e[i]);
    }
    r.deg = a.deg - b.deg;
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    r.deg = 0;
    for (size_t i = 0; i < r.e.size(); ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b)
{
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
}

int grevlex_compare(const Monomial& a, const Monomial& b)
{
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (int i = (int)a.e.size() - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
}

int lex_compare(const Monomial& a, const Monomial& b)
{
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

std::string mono_str(const PolyRing& R, const Monomial& m)
{
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < R.nvars(); ++i) {
        if (m.e[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << R.var(i);
        if (m.e[i] > 1) os << "^" << m.e[i];
    }
    return os.str();
}

} // namespace koszul
