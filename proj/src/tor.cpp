#include "koszul/tor.hpp"

#include <algorithm>

namespace koszul {

namespace {

const OrderPtr& pot()
{
    static OrderPtr p = ModuleOrder::pot();
    return p;
}

PresentedModule zero_module(const PolyRing& R)
{
    return make_module(R, Ideal{}, FreeModule{std::vector<int>{}}, {});
}

void require_polynomial_ring(const PresentedModule& M)
{
    if (M.over_quotient())
        throw UnsupportedQuotient("Tor is computed over the polynomial ring");
}

} // namespace

PresentedModule tensor_free_with_module(const PolyRing& R, const FreeModule& F,
                                        const PresentedModule& N)
{
    int rn = N.cover.rank();
    FreeModule cover;
    for (int g = 0; g < F.rank(); ++g)
        for (int u = 0; u < rn; ++u)
            cover.gen_degs.push_back(F.gen_degs[g] + N.cover.gen_degs[u]);
    std::vector<FreeElem> rels;
    for (int g = 0; g < F.rank(); ++g)
        for (const auto& r : N.relations) {
            std::vector<ModTerm> ts = r.terms();
            for (auto& t : ts) t.comp += g * rn;
            rels.push_back(FreeElem(std::move(ts)));
        }
    return make_module(R, N.quotient, std::move(cover), std::move(rels));
}

ModuleMap tensor_matrix_with_module(const PolyRing& R, const PolyMatrix& d,
                                    const FreeModule& Fsrc, const FreeModule& Ftgt,
                                    const PresentedModule& N)
{
    if (d.ncols != Fsrc.rank() || d.nrows != Ftgt.rank())
        throw InternalError("tensored differential shape mismatch");
    PresentedModule src = tensor_free_with_module(R, Fsrc, N);
    PresentedModule tgt = tensor_free_with_module(R, Ftgt, N);
    int rn = N.cover.rank();
    std::vector<FreeElem> images;
    for (int g = 0; g < Fsrc.rank(); ++g)
        for (int u = 0; u < rn; ++u) {
            std::vector<ModTerm> ts;
            for (int r = 0; r < d.nrows; ++r)
                for (const auto& t : d.at(r, g).terms())
                    ts.push_back(ModTerm{t.m, r * rn + u, t.c});
            images.push_back(fe_from_terms(R, *pot(), std::move(ts)));
        }
    // structural well-definedness: block relations map to block relations
    return ModuleMap{std::move(src), std::move(tgt), 0, std::move(images)};
}

PresentedModule homology_at(const PresentedModule& at, const ModuleMap* incoming,
                            const ModuleMap* outgoing)
{
    if (!incoming && !outgoing) return at;
    if (!outgoing) return map_cokernel(*incoming);
    if (!incoming) return map_kernel(*outgoing);

    Submodule K = map_kernel_sub(*outgoing);
    const PolyRing& R = at.ring;
    std::vector<FreeElem> in_kernel_coords;
    for (const auto& v : incoming->images) {
        if (element_is_zero_in(at, v)) continue;
        auto expr = express_modulo(R, at.cover, K.module.cover, K.gens_in_ambient, at.rel_gb, v);
        if (!expr) throw InternalError("homology: incoming image is not a cycle");
        in_kernel_coords.push_back(std::move(*expr));
    }
    return quotient_by_elements(K.module, in_kernel_coords);
}

std::vector<PresentedModule> homology_of_presented_complex(const std::vector<ModuleMap>& d)
{
    if (d.empty()) throw InvalidParameter("empty complex");
    for (size_t k = 0; k + 1 < d.size(); ++k) {
        if (!presentations_match(d[k].src, d[k + 1].tgt))
            throw InvalidParameter("consecutive maps do not share a module");
        if (!map_is_zero(compose(d[k], d[k + 1]))) throw NotAComplex();
    }
    std::vector<PresentedModule> H;
    size_t L = d.size();
    for (size_t i = 0; i <= L; ++i) {
        const ModuleMap* out = i >= 1 ? &d[i - 1] : nullptr;
        const ModuleMap* in = i < L ? &d[i] : nullptr;
        const PresentedModule& at = i < L ? d[i].tgt : d[L - 1].src;
        H.push_back(homology_at(at, in, out));
    }
    return H;
}

std::vector<TorModule> tor_all(const PresentedModule& M, const PresentedModule& N)
{
    require_polynomial_ring(M);
    require_polynomial_ring(N);
    require_same_ring(M.ring, N.ring);
    const PolyRing& R = M.ring;
    if (is_zero_module(M) || is_zero_module(N))
        return {TorModule{0, zero_module(R), "zero argument"}};

    GradedComplex F = minimal_resolution(M);
    int L = F.length();
    std::vector<PresentedModule> C;
    for (int k = 0; k <= L; ++k) C.push_back(tensor_free_with_module(R, F.mods[k], N));
    std::vector<ModuleMap> maps; // maps[k]: C_{k+1} -> C_k
    for (int k = 0; k < L; ++k)
        maps.push_back(tensor_matrix_with_module(R, F.diffs[k], F.mods[k + 1], F.mods[k], N));

    std::vector<TorModule> out;
    for (int i = 0; i <= L; ++i) {
        const ModuleMap* outgoing = i >= 1 ? &maps[i - 1] : nullptr;
        const ModuleMap* incoming = i < L ? &maps[i] : nullptr;
        out.push_back(TorModule{i, homology_at(C[i], incoming, outgoing),
                                "minimal resolution of the first argument"});
    }
    return out;
}

TorModule tor_module(const PresentedModule& M, const PresentedModule& N, int i)
{
    if (i < 0) throw InvalidParameter("negative homological index");
    auto all = tor_all(M, N);
    if (i < (int)all.size()) return std::move(all[i]);
    return TorModule{i, zero_module(M.ring), "past the projective dimension"};
}

namespace {

CregReport creg_from_tors(const PresentedModule& M, const PresentedModule& N,
                          const std::vector<TorModule>& tors)
{
    CregReport rep;
    rep.reg_m = regularity(M);
    rep.reg_n = regularity(N);
    rep.pdim = (int)tors.size() - 1;
    rep.creg = minus_infinity();
    for (const auto& t : tors) {
        RegValue ri = reg_add(regularity(t.value), -t.i);
        rep.per_index.emplace_back(t.i, ri);
        rep.creg = reg_max(rep.creg, ri);
    }
    if (rep.reg_m && rep.reg_n) {
        RegValue bound = *rep.reg_m + *rep.reg_n;
        if (!reg_le(bound, rep.creg))
            throw BoundViolated("creg is below reg M + reg N");
    }
    return rep;
}

} // namespace

CregReport creg(const PresentedModule& M, const PresentedModule& N)
{
    return creg_from_tors(M, N, tor_all(M, N));
}

ChardinReport check_chardin(const PresentedModule& M, const PresentedModule& N)
{
    auto tors = tor_all(M, N);
    ChardinReport rep;
    rep.base = creg_from_tors(M, N, tors);
    RegValue sum = rep.base.reg_m && rep.base.reg_n
                       ? RegValue{*rep.base.reg_m + *rep.base.reg_n}
                       : minus_infinity();
    rep.inequality_holds = reg_le(sum, rep.base.creg);
    rep.dim_tor1 = tors.size() > 1 ? krull_dim(tors[1].value) : -1;
    rep.equality_applicable = rep.dim_tor1 <= 1;
    rep.equality_holds = rep.base.creg == sum;
    return rep;
}

TorLinearReport is_tor_linear(const PolyRing& R, const Ideal& J, const Ideal& I)
{
    PresentedModule SI = cyclic_module(R, Ideal{}, I);
    PresentedModule SJ = cyclic_module(R, Ideal{}, J);
    CregReport c = creg(SI, SJ);
    TorLinearReport rep;
    rep.creg = c.creg;
    rep.reg_si = c.reg_m;
    rep.margin = c.creg && rep.reg_si ? RegValue{*c.creg - *rep.reg_si} : minus_infinity();
    rep.linear = reg_le(rep.margin, 1);
    return rep;
}

bool check_tor_linear_strand(const PolyRing& R, const Ideal& J, const Ideal& I, int d)
{
    PresentedModule SJ = cyclic_module(R, Ideal{}, J);
    PresentedModule SI = cyclic_module(R, Ideal{}, I);
    auto tors = tor_all(SJ, SI);
    for (const auto& t : tors) {
        if (t.i < 2 || is_zero_module(t.value)) continue;
        BettiTable B = betti_table(t.value);
        if (!betti_is_linear(B)) return false;
        for (const auto& [ij, v] : B.entries)
            if (ij.first == 0 && v != 0 && ij.second != t.i + d) return false;
    }
    return true;
}

CompareRegReport check_compare_reg(const PolyRing& R, const Ideal& I, const Poly& f, int cutoff)
{
    Ideal Q = make_ideal(R, {f});
    PresentedModule over_r = cyclic_module(R, Q, I);
    TruncatedReg lhs = regularity_over_hypersurface(over_r, cutoff);

    PresentedModule SI = cyclic_module(R, Ideal{}, I);
    PresentedModule SF = cyclic_module(R, Ideal{}, Q);
    auto tors = tor_all(SI, SF);
    RegValue rhs = regularity(SI); // + reg_R R = 0
    for (const auto& t : tors)
        if (t.i >= 1) rhs = reg_max(rhs, reg_add(regularity(t.value), -(t.i + 1)));

    CompareRegReport rep;
    rep.lhs = lhs.value;
    rep.rhs = rhs;
    rep.stabilized = lhs.stabilized;
    rep.holds = reg_le(rep.lhs, rep.rhs);
    if (!rep.holds) throw BoundViolated("regularity comparison bound failed");
    return rep;
}

} // namespace koszul
