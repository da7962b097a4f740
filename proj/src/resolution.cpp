#include "koszul/resolution.hpp"

#include <algorithm>

namespace koszul {

static OrderPtr pot()
{
    static OrderPtr o = ModuleOrder::pot();
    return o;
}

PolyMatrix matrix_from_columns(const PolyRing& R, int tgt_rank, const std::vector<FreeElem>& cols)
{
    PolyMatrix m(tgt_rank, (int)cols.size());
    for (int c = 0; c < (int)cols.size(); ++c) {
        auto polys = fe_to_polys(R, cols[c], tgt_rank);
        for (int r = 0; r < tgt_rank; ++r) m.at(r, c) = std::move(polys[r]);
    }
    return m;
}

FreeElem matrix_column(const PolyRing& R, const PolyMatrix& m, int c)
{
    std::vector<Poly> polys(m.nrows);
    for (int r = 0; r < m.nrows; ++r) polys[r] = m.at(r, c);
    return fe_from_polys(R, *pot(), polys);
}

static Poly reduce_mod(const PolyRing& R, const Ideal& J, const Poly& f)
{
    if (J.gb.empty() || f.is_zero()) return f;
    return ideal_nf(R, J, f);
}

void check_complex(const GradedComplex& C)
{
    const PolyRing& R = C.ring;
    for (int k = 0; k < (int)C.diffs.size(); ++k) {
        const PolyMatrix& d = C.diffs[k];
        const FreeModule& src = C.mods[k + 1];
        const FreeModule& tgt = C.mods[k];
        if (d.nrows != tgt.rank() || d.ncols != src.rank())
            throw InternalError("differential shape mismatch");
        for (int r = 0; r < d.nrows; ++r)
            for (int c = 0; c < d.ncols; ++c) {
                auto deg = poly_degree_checked(d.at(r, c));
                if (deg && *deg != src.gen_degs[c] - tgt.gen_degs[r])
                    throw NotHomogeneous("differential entry of the wrong degree");
            }
    }
    for (int k = 0; k + 1 < (int)C.diffs.size(); ++k) {
        const PolyMatrix& b = C.diffs[k];     // mods[k+1] -> mods[k]
        const PolyMatrix& c = C.diffs[k + 1]; // mods[k+2] -> mods[k+1]
        for (int i = 0; i < b.nrows; ++i)
            for (int j = 0; j < c.ncols; ++j) {
                Poly s;
                for (int t = 0; t < b.ncols; ++t)
                    s = poly_add(C.ring, s, poly_mul(C.ring, b.at(i, t), c.at(t, j)));
                if (!reduce_mod(R, C.quotient, s).is_zero()) throw NotAComplex();
            }
    }
}

GradedComplex schreyer_resolution(const PresentedModule& M)
{
    if (M.over_quotient())
        throw UnsupportedQuotient("free resolutions are computed over the polynomial ring");
    const PolyRing& R = M.ring;
    GradedComplex C{R, Ideal{}, {M.cover}, {}};

    FreeModule ambient = M.cover;
    OrderPtr ord = pot();
    std::vector<FreeElem> gb = M.rel_gb;
    sort_for_schreyer(R, gb);

    int cap = R.nvars() + 2;
    for (int k = 1; !gb.empty(); ++k) {
        if (k > cap) throw InternalError("resolution exceeded the syzygy length bound");
        SchreyerLevel lv = schreyer_syzygies(R, ambient, ord, gb);
        C.mods.push_back(lv.G);
        C.diffs.push_back(matrix_from_columns(R, ambient.rank(), gb));
        ambient = lv.G;
        ord = lv.ord;
        gb = std::move(lv.syz);
        sort_for_schreyer(R, gb);
    }
    return C;
}

GradedComplex minimalize(GradedComplex C)
{
    const PolyRing& R = C.ring;
    const auto& F = R.field();
    for (;;) {
        int lvl = -1, pr = -1, ps = -1;
        for (int k = 0; k < (int)C.diffs.size() && lvl < 0; ++k) {
            const PolyMatrix& d = C.diffs[k];
            for (int r = 0; r < d.nrows && lvl < 0; ++r)
                for (int c = 0; c < d.ncols; ++c)
                    if (!d.at(r, c).is_zero() && d.at(r, c).lead().m.is_one()) {
                        lvl = k;
                        pr = r;
                        ps = c;
                        break;
                    }
        }
        if (lvl < 0) break;

        PolyMatrix& B = C.diffs[lvl];
        std::uint32_t ainv = F.inv(B.at(pr, ps).lead().c);
        // split off the trivial subcomplex through the unit at (pr, ps)
        PolyMatrix nb(B.nrows - 1, B.ncols - 1);
        for (int r = 0, nr = 0; r < B.nrows; ++r) {
            if (r == pr) continue;
            for (int c = 0, nc = 0; c < B.ncols; ++c) {
                if (c == ps) continue;
                Poly upd = poly_sub(
                    R, B.at(r, c),
                    poly_scale(R, poly_mul(R, B.at(r, ps), B.at(pr, c)), ainv));
                nb.at(nr, nc) = reduce_mod(R, C.quotient, upd);
                ++nc;
            }
            ++nr;
        }
        C.diffs[lvl] = std::move(nb);
        C.mods[lvl].gen_degs.erase(C.mods[lvl].gen_degs.begin() + pr);
        C.mods[lvl + 1].gen_degs.erase(C.mods[lvl + 1].gen_degs.begin() + ps);
        if (lvl + 1 < (int)C.diffs.size()) {
            PolyMatrix& up = C.diffs[lvl + 1];
            PolyMatrix nu(up.nrows - 1, up.ncols);
            for (int r = 0, nr = 0; r < up.nrows; ++r) {
                if (r == ps) continue;
                for (int c = 0; c < up.ncols; ++c) nu.at(nr, c) = std::move(up.at(r, c));
                ++nr;
            }
            C.diffs[lvl + 1] = std::move(nu);
        }
        if (lvl > 0) {
            PolyMatrix& dn = C.diffs[lvl - 1];
            PolyMatrix nd(dn.nrows, dn.ncols - 1);
            for (int r = 0; r < dn.nrows; ++r)
                for (int c = 0, nc = 0; c < dn.ncols; ++c) {
                    if (c == pr) continue;
                    nd.at(r, nc++) = std::move(dn.at(r, c));
                }
            C.diffs[lvl - 1] = std::move(nd);
        }
    }
    while (C.mods.size() > 1 && C.mods.back().rank() == 0) {
        C.mods.pop_back();
        C.diffs.pop_back();
    }
    return C;
}

GradedComplex minimal_resolution(const PresentedModule& M)
{
    return minimalize(schreyer_resolution(underlying_s_module(M)));
}

BettiTable betti_from_complex(const GradedComplex& C, std::optional<int> cutoff)
{
    BettiTable B;
    B.cutoff = cutoff;
    for (int i = 0; i < (int)C.mods.size(); ++i) {
        if (cutoff && i > *cutoff) break;
        for (int d : C.mods[i].gen_degs) ++B.entries[{i, d}];
    }
    return B;
}

BettiTable betti_table(const PresentedModule& M)
{
    return betti_from_complex(minimal_resolution(M), std::nullopt);
}

RegValue regularity_of_betti(const BettiTable& B)
{
    RegValue r = minus_infinity();
    for (const auto& [ij, v] : B.entries)
        if (v != 0) r = reg_max(r, ij.second - ij.first);
    return r;
}

RegValue regularity(const PresentedModule& M)
{
    return regularity_of_betti(betti_table(M));
}

bool betti_is_linear(const BettiTable& B)
{
    std::optional<int> gen_deg;
    for (const auto& [ij, v] : B.entries) {
        if (v == 0) continue;
        if (ij.first == 0) {
            if (gen_deg && *gen_deg != ij.second) return false;
            gen_deg = ij.second;
        }
    }
    if (!gen_deg) return true; // zero module
    for (const auto& [ij, v] : B.entries)
        if (v != 0 && ij.second != *gen_deg + ij.first) return false;
    return true;
}

bool has_linear_resolution(const PresentedModule& M)
{
    return betti_is_linear(betti_table(M));
}

HilbertSeries hilbert_series(const PresentedModule& M)
{
    GradedComplex C = schreyer_resolution(underlying_s_module(M));
    HilbertSeries H;
    H.nvars = M.ring.nvars();
    for (int i = 0; i < (int)C.mods.size(); ++i)
        for (int d : C.mods[i].gen_degs) H.numer[d] += (i % 2 == 0) ? 1 : -1;
    for (auto it = H.numer.begin(); it != H.numer.end();)
        it = it->second == 0 ? H.numer.erase(it) : std::next(it);
    return H;
}

static long long binom(long long n, long long k)
{
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long hilbert_function(const HilbertSeries& H, int d)
{
    long long s = 0;
    for (const auto& [j, c] : H.numer) {
        if (j > d) break;
        s += c * binom(H.nvars - 1 + d - j, H.nvars - 1);
    }
    return s;
}

int krull_dim_of(const HilbertSeries& H)
{
    if (H.numer.empty()) return -1;
    // multiplicity of the root t = 1 in the numerator
    std::map<int, long long> cur = H.numer;
    int mult = 0;
    for (;;) {
        long long total = 0;
        for (auto& [j, c] : cur) total += c;
        if (total != 0) break;
        // divide by (1 - t): prefix sums
        std::map<int, long long> next;
        long long acc = 0;
        int lo = cur.begin()->first, hi = cur.rbegin()->first;
        for (int j = lo; j <= hi; ++j) {
            acc += cur.count(j) ? cur[j] : 0;
            if (j < hi && acc != 0) next[j] = acc;
            if (j == hi && acc != 0) throw InternalError("inexact series division");
        }
        cur = std::move(next);
        ++mult;
        if (cur.empty()) break; // numerator was exactly (1-t)^mult times 0? cannot happen
    }
    return H.nvars - mult;
}

int krull_dim(const PresentedModule& M)
{
    return krull_dim_of(hilbert_series(M));
}

bool is_finite_length(const PresentedModule& M)
{
    return krull_dim(M) <= 0;
}

RegValue top_degree(const PresentedModule& M)
{
    HilbertSeries H = hilbert_series(M);
    if (H.numer.empty()) return minus_infinity();
    if (krull_dim_of(H) > 0) throw NotFiniteLength();
    // N(t) / (1-t)^n is the (finite) Hilbert polynomialless function
    std::map<int, long long> cur = H.numer;
    for (int k = 0; k < H.nvars; ++k) {
        std::map<int, long long> next;
        long long acc = 0;
        int lo = cur.begin()->first, hi = cur.rbegin()->first;
        for (int j = lo; j <= hi; ++j) {
            acc += cur.count(j) ? cur[j] : 0;
            if (acc != 0) next[j] = acc;
        }
        // exactness of every division is guaranteed by dim <= 0
        cur = std::move(next);
        if (cur.empty()) return minus_infinity();
    }
    return cur.rbegin()->first;
}

GradedComplex resolution_over_hypersurface(const PresentedModule& M, int cutoff)
{
    if (cutoff < 0) throw InvalidParameter("cutoff must be nonnegative");
    if (M.quotient.gb.size() != 1)
        throw UnsupportedQuotient("resolutions over quotients need a single hypersurface");
    const PolyRing& R = M.ring;
    const Poly& f = M.quotient.gb[0];

    GradedComplex C{R, M.quotient, {M.cover}, {}};

    // reduce a cover element mod f, componentwise
    auto reduce_fe = [&](const FreeElem& v, int rank) {
        std::vector<FreeElem> fgens;
        for (int i = 0; i < rank; ++i) {
            std::vector<ModTerm> ts;
            for (const auto& t : f.terms()) ts.push_back(ModTerm{t.m, i, t.c});
            fgens.push_back(FreeElem(std::move(ts)));
        }
        return normal_form(R, *pot(), v, fgens);
    };

    std::vector<FreeElem> gens;
    for (const auto& r : M.relations) {
        FreeElem g = reduce_fe(r, M.cover.rank());
        if (!g.is_zero()) gens.push_back(std::move(g));
    }

    FreeModule prev = M.cover;
    for (int k = 1; k <= cutoff + 1 && !gens.empty(); ++k) {
        FreeModule next;
        for (const auto& g : gens) next.gen_degs.push_back(*fe_degree_checked(prev, g));
        C.mods.push_back(next);
        C.diffs.push_back(matrix_from_columns(R, prev.rank(), gens));

        // S-syzygies of [gens | f * identity], projected to the gens block
        std::vector<FreeElem> target_rel;
        for (int i = 0; i < prev.rank(); ++i) {
            std::vector<ModTerm> ts;
            for (const auto& t : f.terms()) ts.push_back(ModTerm{t.m, i, t.c});
            target_rel.push_back(FreeElem(std::move(ts)));
        }
        auto P = preimage_gb(R, prev, next, gens, target_rel);
        std::vector<FreeElem> reduced;
        for (const auto& p : P) {
            FreeElem q = reduce_fe(p, next.rank());
            if (!q.is_zero()) reduced.push_back(std::move(q));
        }
        gens = std::move(reduced);
        prev = std::move(next);
    }

    C = minimalize(std::move(C));
    while ((int)C.mods.size() > cutoff + 1) {
        C.mods.pop_back();
        C.diffs.pop_back();
    }
    return C;
}

BettiTable betti_over_hypersurface(const PresentedModule& M, int cutoff)
{
    return betti_from_complex(resolution_over_hypersurface(M, cutoff), cutoff);
}

TruncatedReg regularity_over_hypersurface(const PresentedModule& M, int cutoff)
{
    BettiTable B = betti_over_hypersurface(M, cutoff);
    TruncatedReg out{regularity_of_betti(B), false};
    if (cutoff >= 4) {
        // the top strand (j - i maximized per column) must be flat on [2, cutoff]
        std::map<int, int> top;
        for (const auto& [ij, v] : B.entries)
            if (v != 0) {
                auto it = top.find(ij.first);
                int slope = ij.second - ij.first;
                if (it == top.end() || it->second < slope) top[ij.first] = slope;
            }
        bool ok = true;
        std::optional<int> common;
        for (int i = 2; i <= cutoff; ++i) {
            auto it = top.find(i);
            if (it == top.end()) break; // finite resolution: stabilized trivially
            if (!common) common = it->second;
            if (*common != it->second) ok = false;
        }
        out.stabilized = ok;
    }
    return out;
}

} // namespace koszul
