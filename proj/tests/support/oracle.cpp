#include "support/oracle.hpp"

#include <algorithm>

#include "koszul/gb.hpp"

namespace koszul::oracle {

std::vector<Monomial> monomials_of_degree(const PolyRing& R, int d)
{
    int n = R.nvars();
    std::vector<Monomial> out;
    std::vector<std::uint16_t> e(n, 0);
    // enumerate exponent vectors summing to d
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            e[pos] = (std::uint16_t)left;
            out.push_back(Monomial::of(e));
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[pos] = (std::uint16_t)k;
            self(self, pos + 1, left - k);
        }
        e[pos] = 0;
    };
    if (d >= 0) rec(rec, 0, d);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) > 0; });
    return out;
}

DegBasis degree_basis(const PolyRing& R, const FreeModule& F, int d)
{
    DegBasis B;
    B.degree = d;
    for (int c = 0; c < F.rank(); ++c) {
        int md = d - F.gen_degs[c];
        if (md < 0) continue;
        for (auto& m : monomials_of_degree(R, md)) {
            B.index[{m.e, c}] = (int)B.elems.size();
            B.elems.emplace_back(m, c);
        }
    }
    return B;
}

std::vector<std::uint32_t> coord_vector(const PolyRing& R, const DegBasis& B, const FreeElem& v)
{
    (void)R;
    std::vector<std::uint32_t> out(B.elems.size(), 0);
    for (const auto& t : v.terms()) {
        auto it = B.index.find({t.m.e, t.comp});
        if (it == B.index.end()) throw InternalError("element not in the expected degree");
        out[it->second] = t.c;
    }
    return out;
}

FpMatrix span_matrix(const PolyRing& R, const FreeModule& F, const std::vector<FreeElem>& gens,
                     int d)
{
    DegBasis B = degree_basis(R, F, d);
    FpMatrix M(0, B.dim(), R.field());
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int e = *fe_degree_checked(F, g);
        if (e > d) continue;
        for (auto& m : monomials_of_degree(R, d - e)) {
            FreeElem mg = fe_mul_term(R, Term{m, 1}, g);
            M.append_row(coord_vector(R, B, mg));
        }
    }
    return M;
}

int submodule_dim(const PolyRing& R, const FreeModule& F, const std::vector<FreeElem>& gens,
                  int d)
{
    FpMatrix M = span_matrix(R, F, gens, d);
    return rank(std::move(M));
}

bool submodule_member(const PolyRing& R, const FreeModule& F, const std::vector<FreeElem>& gens,
                      const FreeElem& v)
{
    if (v.is_zero()) return true;
    int d = *fe_degree_checked(F, v);
    FpMatrix M = span_matrix(R, F, gens, d);
    std::vector<int> piv;
    rref(M, &piv);
    return in_rowspace(M, piv, coord_vector(R, degree_basis(R, F, d), v));
}

static FreeModule rank1() { return FreeModule{{0}}; }

int ideal_dim(const PolyRing& R, const std::vector<Poly>& gens, int d)
{
    std::vector<FreeElem> fes;
    for (const auto& g : gens) fes.push_back(poly_as_fe(g));
    return submodule_dim(R, rank1(), fes, d);
}

bool ideal_member(const PolyRing& R, const std::vector<Poly>& gens, const Poly& f)
{
    std::vector<FreeElem> fes;
    for (const auto& g : gens) fes.push_back(poly_as_fe(g));
    return submodule_member(R, rank1(), fes, poly_as_fe(f));
}

int map_kernel_dim(const PolyRing& R, const FreeModule& Fsrc, const FreeModule& Ftgt,
                   const std::vector<FreeElem>& images, int d)
{
    DegBasis S = degree_basis(R, Fsrc, d);
    DegBasis T = degree_basis(R, Ftgt, d);
    FpMatrix M(0, T.dim(), R.field());
    for (const auto& [m, c] : S.elems)
        M.append_row(coord_vector(R, T, fe_mul_term(R, Term{m, 1}, images[c])));
    return S.dim() - rank(std::move(M));
}

} // namespace koszul::oracle
