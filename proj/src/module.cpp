#include "koszul/module.hpp"

#include <algorithm>

namespace koszul {

static OrderPtr pot()
{
    static OrderPtr o = ModuleOrder::pot();
    return o;
}

static FreeElem poly_times_gen(const Poly& g, int comp)
{
    std::vector<ModTerm> ts;
    ts.reserve(g.size());
    for (const auto& t : g.terms()) ts.push_back(ModTerm{t.m, comp, t.c});
    return FreeElem(std::move(ts)); // same component, so grevlex order carries over
}

static std::vector<FreeElem> with_quotient_rows(const PolyRing& R, const Ideal& J,
                                                const FreeModule& cover,
                                                const std::vector<FreeElem>& rels)
{
    (void)R;
    std::vector<FreeElem> out = rels;
    for (const auto& g : J.gens)
        for (int i = 0; i < cover.rank(); ++i) out.push_back(poly_times_gen(g, i));
    return out;
}

PresentedModule make_module(const PolyRing& R, Ideal quotient, FreeModule cover,
                            std::vector<FreeElem> relations)
{
    for (auto& r : relations) {
        for (const auto& t : r.terms()) {
            if (t.comp < 0 || t.comp >= cover.rank())
                throw InvalidParameter("relation component out of range");
            if ((int)t.m.e.size() != R.nvars())
                throw InvalidParameter("relation from a different ring");
        }
        // canonicalize storage order; callers may hand elements produced
        // under elimination or schreyer orders
        r = fe_from_terms(R, *pot(), r.terms());
        fe_degree_checked(cover, r);
    }
    PresentedModule M{R, std::move(quotient), std::move(cover), std::move(relations), {}};
    M.rel_gb = buchberger(R, M.cover, *pot(), with_quotient_rows(R, M.quotient, M.cover, M.relations));
    return M;
}

PresentedModule make_free_module(const PolyRing& R, Ideal quotient, std::vector<int> shifts)
{
    return make_module(R, std::move(quotient), FreeModule{std::move(shifts)}, {});
}

PresentedModule cyclic_module(const PolyRing& R, Ideal quotient, const Ideal& I)
{
    std::vector<FreeElem> rels;
    for (const auto& g : I.gens) rels.push_back(poly_as_fe(g));
    return make_module(R, std::move(quotient), FreeModule{{0}}, std::move(rels));
}

PresentedModule ideal_as_module(const PolyRing& R, Ideal quotient, const Ideal& I)
{
    FreeModule T;
    std::vector<FreeElem> images;
    for (const auto& g : I.gens) {
        T.gen_degs.push_back(*poly_degree_checked(g));
        images.push_back(poly_as_fe(g));
    }
    std::vector<FreeElem> ambient_rel;
    for (const auto& g : quotient.gens) ambient_rel.push_back(poly_as_fe(g));
    auto rels = preimage_gb(R, FreeModule{{0}}, T, images, ambient_rel);
    return make_module(R, std::move(quotient), std::move(T), std::move(rels));
}

PresentedModule underlying_s_module(const PresentedModule& M)
{
    if (!M.over_quotient()) return M;
    return make_module(M.ring, Ideal{}, M.cover, M.rel_gb);
}

bool same_quotient(const PresentedModule& A, const PresentedModule& B)
{
    return A.ring == B.ring && A.quotient.gb == B.quotient.gb;
}

bool presentations_match(const PresentedModule& A, const PresentedModule& B)
{
    return same_quotient(A, B) && A.cover == B.cover && A.rel_gb == B.rel_gb;
}

bool is_zero_module(const PresentedModule& M)
{
    for (int i = 0; i < M.cover.rank(); ++i)
        if (!element_is_zero_in(M, fe_gen(M.ring, i))) return false;
    return true;
}

FreeElem module_nf(const PresentedModule& M, const FreeElem& v)
{
    return normal_form(M.ring, *pot(), v, M.rel_gb);
}

bool element_is_zero_in(const PresentedModule& M, const FreeElem& v)
{
    return module_nf(M, v).is_zero();
}

RegValue largest_generator_degree(const PresentedModule& M)
{
    RegValue r = minus_infinity();
    for (int d : M.cover.gen_degs) r = reg_max(r, d);
    return r;
}

RegValue largest_relation_degree(const PresentedModule& M)
{
    RegValue r = minus_infinity();
    for (const auto& g : M.rel_gb) r = reg_max(r, fe_degree_checked(M.cover, g));
    return r;
}

PresentedModule shift_module(const PresentedModule& M, int k)
{
    PresentedModule out = M;
    for (auto& d : out.cover.gen_degs) d -= k;
    return out;
}

static FreeElem reindex(const FreeElem& v, int offset)
{
    std::vector<ModTerm> ts = v.terms();
    for (auto& t : ts) t.comp += offset;
    return FreeElem(std::move(ts));
}

PresentedModule direct_sum(const PresentedModule& A, const PresentedModule& B)
{
    require_same_ring(A.ring, B.ring);
    if (!same_quotient(A, B)) throw DifferentQuotients();
    FreeModule cover = A.cover;
    cover.gen_degs.insert(cover.gen_degs.end(), B.cover.gen_degs.begin(),
                          B.cover.gen_degs.end());
    std::vector<FreeElem> rels = A.relations;
    for (const auto& r : B.relations) rels.push_back(reindex(r, A.cover.rank()));
    return make_module(A.ring, A.quotient, std::move(cover), std::move(rels));
}

PresentedModule tensor_product(const PresentedModule& A, const PresentedModule& B)
{
    require_same_ring(A.ring, B.ring);
    if (!same_quotient(A, B)) throw DifferentQuotients();
    int ra = A.cover.rank(), rb = B.cover.rank();
    FreeModule cover;
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < rb; ++j)
            cover.gen_degs.push_back(A.cover.gen_degs[i] + B.cover.gen_degs[j]);
    // relations: rel_A tensor e_j and e_i tensor rel_B
    std::vector<FreeElem> rels;
    for (const auto& r : A.relations)
        for (int j = 0; j < rb; ++j) {
            std::vector<ModTerm> ts = r.terms();
            for (auto& t : ts) t.comp = t.comp * rb + j;
            rels.push_back(fe_from_terms(A.ring, *pot(), std::move(ts)));
        }
    for (const auto& s : B.relations)
        for (int i = 0; i < ra; ++i) {
            std::vector<ModTerm> ts = s.terms();
            for (auto& t : ts) t.comp = i * rb + t.comp;
            rels.push_back(fe_from_terms(A.ring, *pot(), std::move(ts)));
        }
    return make_module(A.ring, A.quotient, std::move(cover), std::move(rels));
}

PresentedModule quotient_by_elements(const PresentedModule& M, const std::vector<FreeElem>& elems)
{
    std::vector<FreeElem> rels = M.relations;
    rels.insert(rels.end(), elems.begin(), elems.end());
    return make_module(M.ring, M.quotient, M.cover, std::move(rels));
}

Submodule submodule_from_elements(const PresentedModule& M, std::vector<FreeElem> elems)
{
    std::vector<FreeElem> gens;
    for (auto& e : elems)
        if (!element_is_zero_in(M, e))
            gens.push_back(fe_from_terms(M.ring, *pot(), e.terms()));
    FreeModule T;
    for (const auto& g : gens) T.gen_degs.push_back(*fe_degree_checked(M.cover, g));
    auto rels = preimage_gb(M.ring, M.cover, T, gens, M.rel_gb);
    Submodule out{make_module(M.ring, M.quotient, std::move(T), std::move(rels)), std::move(gens)};
    return out;
}

std::optional<std::pair<int, int>> annihilation_failure(const PresentedModule& M, const Ideal& I)
{
    for (int g = 0; g < (int)I.gens.size(); ++g)
        for (int c = 0; c < M.cover.rank(); ++c)
            if (!element_is_zero_in(M, poly_times_gen(I.gens[g], c)))
                return std::make_pair(g, c);
    return std::nullopt;
}

bool ideal_annihilates(const PresentedModule& M, const Ideal& I)
{
    return !annihilation_failure(M, I).has_value();
}

static FreeElem apply_images(const PolyRing& R, const std::vector<FreeElem>& images,
                             const FreeElem& v)
{
    FreeElem acc;
    for (const auto& t : v.terms())
        acc = fe_add(R, *pot(), acc, fe_mul_term(R, Term{t.m, t.c}, images[t.comp]));
    return acc;
}

ModuleMap make_map(PresentedModule src, PresentedModule tgt, std::vector<FreeElem> images,
                   int degree)
{
    require_same_ring(src.ring, tgt.ring);
    if (!same_quotient(src, tgt)) throw DifferentQuotients();
    if ((int)images.size() != src.cover.rank())
        throw InvalidParameter("map needs one image per generator");
    for (auto& im : images) im = fe_from_terms(src.ring, *pot(), im.terms());
    for (int i = 0; i < (int)images.size(); ++i) {
        auto d = fe_degree_checked(tgt.cover, images[i]);
        if (d && *d != src.cover.gen_degs[i] + degree)
            throw InvalidParameter("map image has the wrong degree");
        for (const auto& t : images[i].terms())
            if (t.comp < 0 || t.comp >= tgt.cover.rank())
                throw InvalidParameter("map image component out of range");
    }
    for (const auto& r : src.rel_gb)
        if (!element_is_zero_in(tgt, apply_images(src.ring, images, r)))
            throw InvalidParameter("map does not respect the relations");
    return ModuleMap{std::move(src), std::move(tgt), degree, std::move(images)};
}

FreeElem map_apply(const ModuleMap& f, const FreeElem& v)
{
    return apply_images(f.src.ring, f.images, v);
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f)
{
    if (!presentations_match(f.tgt, g.src))
        throw InvalidParameter("composition: inner target differs from outer source");
    std::vector<FreeElem> images;
    images.reserve(f.images.size());
    for (const auto& im : f.images) images.push_back(map_apply(g, im));
    return make_map(f.src, g.tgt, std::move(images), f.degree + g.degree);
}

ModuleMap identity_map(const PresentedModule& M)
{
    std::vector<FreeElem> images;
    for (int i = 0; i < M.cover.rank(); ++i) images.push_back(fe_gen(M.ring, i));
    return make_map(M, M, std::move(images), 0);
}

ModuleMap multiplication_map(const PresentedModule& M, const Poly& f)
{
    int d = f.is_zero() ? 0 : *poly_degree_checked(f);
    std::vector<FreeElem> images;
    for (int i = 0; i < M.cover.rank(); ++i) images.push_back(poly_times_gen(f, i));
    return make_map(M, M, std::move(images), d);
}

Submodule map_kernel_sub(const ModuleMap& f)
{
    const PolyRing& R = f.src.ring;
    FreeModule T = f.src.cover;
    for (auto& d : T.gen_degs) d += f.degree;
    auto gens = preimage_gb(R, f.tgt.cover, T, f.images, f.tgt.rel_gb);
    // reinterpret in src.cover (degrees differ from T by the map degree only)
    return submodule_from_elements(f.src, std::move(gens));
}

PresentedModule map_kernel(const ModuleMap& f)
{
    return map_kernel_sub(f).module;
}

PresentedModule map_image(const ModuleMap& f)
{
    return submodule_from_elements(f.tgt, f.images).module;
}

PresentedModule map_cokernel(const ModuleMap& f)
{
    return quotient_by_elements(f.tgt, f.images);
}

bool map_is_surjective(const ModuleMap& f)
{
    return is_zero_module(map_cokernel(f));
}

bool map_is_zero(const ModuleMap& f)
{
    for (const auto& im : f.images)
        if (!element_is_zero_in(f.tgt, im)) return false;
    return true;
}

Submodule module_colon_zero(const PresentedModule& M, const Poly& f)
{
    if (f.is_zero()) throw ZeroDivisorArgument();
    return map_kernel_sub(multiplication_map(M, f));
}

Saturation saturate_zero(const PresentedModule& M)
{
    const PolyRing& R = M.ring;
    int n = R.nvars();
    int rank = M.cover.rank();

    // target of u -> (x_1 u, ..., x_n u): n copies of the cover
    FreeModule blocks;
    for (int k = 0; k < n; ++k)
        blocks.gen_degs.insert(blocks.gen_degs.end(), M.cover.gen_degs.begin(),
                               M.cover.gen_degs.end());
    std::vector<FreeElem> images;
    for (int i = 0; i < rank; ++i) {
        std::vector<ModTerm> ts;
        for (int k = 0; k < n; ++k)
            ts.push_back(ModTerm{Monomial::var(n, k), k * rank + i, 1});
        images.push_back(fe_from_terms(R, *pot(), std::move(ts)));
    }
    FreeModule T = M.cover;
    for (auto& d : T.gen_degs) d += 1;

    RegValue topd = largest_relation_degree(M);
    int limit = (topd ? std::max(0, *topd) : 0) + n + 1;

    std::vector<FreeElem> U = M.rel_gb;
    for (int iter = 0;; ++iter) {
        if (iter > limit)
            throw InternalBoundExceeded("socle chain failed to stabilize within its bound");
        std::vector<FreeElem> target_rel;
        for (const auto& u : U)
            for (int k = 0; k < n; ++k) target_rel.push_back(reindex(u, k * rank));
        auto next_gens = preimage_gb(R, blocks, T, images, target_rel);
        auto next = buchberger(R, M.cover, *pot(), next_gens);
        if (next == U) break;
        U = std::move(next);
    }
    Submodule sub = submodule_from_elements(M, U);
    return Saturation{std::move(sub.module), std::move(sub.gens_in_ambient)};
}

ModuleMap tensor_map_with_module(const ModuleMap& phi, const PresentedModule& N)
{
    PresentedModule src = tensor_product(phi.src, N);
    PresentedModule tgt = tensor_product(phi.tgt, N);
    int rb = N.cover.rank();
    std::vector<FreeElem> images;
    for (int i = 0; i < phi.src.cover.rank(); ++i)
        for (int j = 0; j < rb; ++j) {
            std::vector<ModTerm> ts = phi.images[i].terms();
            for (auto& t : ts) t.comp = t.comp * rb + j;
            images.push_back(fe_from_terms(phi.src.ring, *pot(), std::move(ts)));
        }
    return make_map(std::move(src), std::move(tgt), std::move(images), phi.degree);
}

std::vector<FreeElem> preimage_gb(const PolyRing& R, const FreeModule& G, const FreeModule& T,
                                  const std::vector<FreeElem>& images,
                                  const std::vector<FreeElem>& target_rel)
{
    if ((int)images.size() != T.rank())
        throw InternalError("preimage: one image per generator required");
    std::vector<std::pair<FreeElem, FreeElem>> graph;
    for (int i = 0; i < T.rank(); ++i) graph.emplace_back(images[i], fe_gen(R, i));
    for (const auto& r : target_rel) graph.emplace_back(r, FreeElem());
    return tagged_pure(R, tagged_gb(R, G, T, graph));
}

std::optional<FreeElem> express_modulo(const PolyRing& R, const FreeModule& G,
                                       const FreeModule& T, const std::vector<FreeElem>& images,
                                       const std::vector<FreeElem>& target_rel,
                                       const FreeElem& v)
{
    std::vector<std::pair<FreeElem, FreeElem>> graph;
    for (int i = 0; i < T.rank(); ++i) graph.emplace_back(images[i], fe_gen(R, i));
    for (const auto& r : target_rel) graph.emplace_back(r, FreeElem());
    TaggedGB tg = tagged_gb(R, G, T, graph);
    auto s = tagged_express(R, tg, v);
    if (!s) return std::nullopt;
    return fe_from_terms(R, *pot(), s->terms());
}

} // namespace koszul
