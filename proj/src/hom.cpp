#include "modtop/hom.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "modtop/errors.hpp"

namespace modtop {

bool Hom::is_surjective() const {
    std::set<unsigned> img(map.begin(), map.end());
    return img.size() == dst.order;
}

bool Hom::is_injective() const {
    std::set<unsigned> img(map.begin(), map.end());
    return img.size() == src.order;
}

Hom make_hom(const Module& src, const Module& dst, const std::vector<Element>& images) {
    if (!(src.ring == dst.ring)) throw input_error("homomorphism requires a common ring");
    if (images.size() != src.orders.size())
        throw input_error("expected one image per source generator");
    Hom h;
    h.src = src;
    h.dst = dst;
    for (std::size_t i = 0; i < images.size(); ++i) {
        unsigned img = dst.index_of(images[i]);
        if (dst.scalar(src.orders[i] % dst.ring.modulus, img) != 0)
            throw input_error("ill-defined homomorphism: generator " + std::to_string(i) +
                              " has order " + std::to_string(src.orders[i]) +
                              " but its image does not vanish under it");
        h.gen_images.push_back(img);
    }
    h.map.resize(src.order);
    for (unsigned a = 0; a < src.order; ++a) {
        Element e = src.element_at(a);
        unsigned acc = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            acc = dst.add(acc, dst.scalar(e[i], h.gen_images[i]));
        h.map[a] = acc;
    }
    return h;
}

Bitset kernel(const Hom& h) {
    Bitset k(h.src.order);
    for (unsigned a = 0; a < h.src.order; ++a)
        if (h.map[a] == 0) k.set(a);
    return k;
}

Bitset image(const Hom& h) {
    Bitset im(h.dst.order);
    for (unsigned a = 0; a < h.src.order; ++a) im.set(h.map[a]);
    return im;
}

Bitset preimage(const Hom& h, const Bitset& dst_set) {
    Bitset p(h.src.order);
    for (unsigned a = 0; a < h.src.order; ++a)
        if (dst_set.test(h.map[a])) p.set(a);
    return p;
}

Bitset image_of(const Hom& h, const Bitset& src_set) {
    Bitset im(h.dst.order);
    for (unsigned a : src_set.bits()) im.set(h.map[a]);
    return im;
}

ContractionReport has_contraction_property(const Hom& h, ClassName c,
                                           const Lattice& src_lat, const Lattice& dst_lat) {
    ContractionReport rep;
    rep.holds = true;
    for (int n : members_of_class(dst_lat, c)) {
        Bitset pre = preimage(h, dst_lat.subs[n]);
        int pid = src_lat.id_of(pre);
        if (!is_in_class(src_lat, pid, c)) {
            rep.holds = false;
            rep.witness = n;
            return rep;
        }
    }
    return rep;
}

InducedMap phi_shriek(const Hom& h, ClassName c, LatticePtr src_lat, LatticePtr dst_lat) {
    ContractionReport con = has_contraction_property(h, c, *src_lat, *dst_lat);
    if (!con.holds)
        throw input_error("phi_! undefined: contraction property fails for class " +
                          to_string(c));

    InducedMap im;
    im.src_space = build_space(src_lat, c);
    im.dst_space = build_space(dst_lat, c);
    im.point_map.resize(im.dst_space.points.size());
    for (std::size_t p = 0; p < im.dst_space.points.size(); ++p) {
        Bitset pre = preimage(h, dst_lat->subs[im.dst_space.points[p]]);
        im.point_map[p] = im.src_space.point_of_sub[src_lat->id_of(pre)];
    }

    // structural: phi_!^{-1}(C(N)) = C(<phi(N)>) for every N in S(src)
    im.structural_continuity = true;
    for (int n = 0; n < src_lat->size() && im.structural_continuity; ++n) {
        PointSet lhs(im.dst_space.points.size());
        for (std::size_t p = 0; p < im.dst_space.points.size(); ++p)
            if (im.src_space.csub(n).test(im.point_map[p])) lhs.set(p);
        int pushed = dst_lat->id_of(image_of(h, src_lat->subs[n]));
        if (lhs != im.dst_space.csub(pushed)) {
            im.structural_continuity = false;
            im.witness = "subbasis preimage mismatch at submodule id " + std::to_string(n);
        }
    }

    // extensional: preimages of closed sets are closed
    im.extensional_continuity = true;
    for (const PointSet& k : all_closed_sets(im.src_space)) {
        PointSet pre(im.dst_space.points.size());
        for (std::size_t p = 0; p < im.dst_space.points.size(); ++p)
            if (k.test(im.point_map[p])) pre.set(p);
        if (!is_closed(im.dst_space, pre)) {
            im.extensional_continuity = false;
            if (im.witness.empty()) im.witness = "preimage of a closed set is not closed";
            break;
        }
    }
    return im;
}

namespace {
std::string label_ids(const std::vector<int>& ids) {
    std::string s = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ids[i]);
    }
    return s + "]";
}
}  // namespace

ConmapReport verify_conmap(const Hom& h, ClassName c, LatticePtr src_lat, LatticePtr dst_lat) {
    ConmapReport rep;
    rep.surjective = h.is_surjective();
    rep.contraction = has_contraction_property(h, c, *src_lat, *dst_lat);
    if (!rep.contraction.holds) return rep;

    InducedMap im = phi_shriek(h, c, src_lat, dst_lat);
    const StructureSpace& S = im.src_space;
    const StructureSpace& D = im.dst_space;

    // monotone: N' ⊆ N'' ⇒ preimages nest
    IdentityCheck mono{"monotone-preimage", true, true, ""};
    for (int a = 0; a < dst_lat->size(); ++a)
        for (int b = 0; b < dst_lat->size(); ++b) {
            if (!dst_lat->leq(a, b)) continue;
            if (!preimage(h, dst_lat->subs[a]).subset_of(preimage(h, dst_lat->subs[b]))) {
                mono.holds = false;
                mono.witness = "ids " + std::to_string(a) + "," + std::to_string(b);
            }
        }
    rep.identities.push_back(mono);

    IdentityCheck sub{"subbasis-preimage", im.structural_continuity, true, im.witness};
    rep.identities.push_back(sub);

    // surjective: phi(phi^{-1}(N')) = N' on D_c(dst)
    IdentityCheck surj{"surjective-image-of-preimage", true, rep.surjective, ""};
    if (rep.surjective) {
        for (int n : D.points) {
            if (image_of(h, preimage(h, dst_lat->subs[n])) != dst_lat->subs[n]) {
                surj.holds = false;
                surj.witness = "dst id " + std::to_string(n);
            }
        }
    }
    rep.identities.push_back(surj);

    // closure(im phi_!) = C(ker phi)
    int ker_id = src_lat->id_of(kernel(h));
    PointSet image_points(S.points.size());
    for (std::size_t p = 0; p < D.points.size(); ++p) image_points.set(im.point_map[p]);
    IdentityCheck clo{"closure-of-image", closure(S, image_points) == S.csub(ker_id), true, ""};
    if (!clo.holds) clo.witness = "kernel id " + std::to_string(ker_id);
    rep.identities.push_back(clo);

    // density biconditional: dense ⟺ ker phi ⊆ ∩ { L in D_c(src) }
    rep.dense = closure(S, image_points) == S.full_set();
    Bitset meet(src_lat->mod.order);
    if (!S.points.empty()) {
        meet = src_lat->subs[S.points[0]];
        for (int n : S.points) meet &= src_lat->subs[n];
    } else {
        meet = src_lat->subs[src_lat->full_id];  // empty intersection convention
    }
    bool ker_below = kernel(h).subset_of(meet);
    IdentityCheck dens{"dense-iff-kernel-below-meet", rep.dense == ker_below, true, ""};
    rep.identities.push_back(dens);

    IdentityCheck cont{"continuous", im.structural_continuity && im.extensional_continuity,
                       true, im.witness};
    rep.identities.push_back(cont);

    if (rep.surjective) {
        // homeomorphism onto C(ker phi): bijective, continuous, closed
        IdentityCheck bij{"bijection-onto-C(ker)", true, true, ""};
        std::set<int> seen(im.point_map.begin(), im.point_map.end());
        bij.holds = seen.size() == im.point_map.size() && image_points == S.csub(ker_id);
        if (!bij.holds)
            bij.witness = "image points " + label_ids(std::vector<int>(seen.begin(), seen.end()));
        rep.identities.push_back(bij);

        IdentityCheck closed_map{"closed-map", true, true, ""};
        for (const PointSet& k : all_closed_sets(D)) {
            PointSet img(S.points.size());
            for (std::size_t p : k.bits()) img.set(im.point_map[p]);
            // image must be closed within the subspace C(ker phi)
            PointSet rel = closure(S, img) & S.csub(ker_id);
            if (rel != img) {
                closed_map.holds = false;
                closed_map.witness = "a closed set maps to a non-closed set";
                break;
            }
        }
        rep.identities.push_back(closed_map);
    }
    return rep;
}

namespace {

struct CosetTable {
    std::vector<unsigned> rep_of_elem;   // element -> canonical coset representative
    std::vector<unsigned> reps;          // sorted representatives
    std::vector<int> coset_of_rep;       // element -> coset index (via rep), -1 otherwise
    int add(const Module& m, int a, int b) const {
        unsigned s = m.add(reps[a], reps[b]);
        return coset_of_rep[rep_of_elem[s]];
    }
};

CosetTable make_cosets(const Module& m, const Bitset& n_elems) {
    CosetTable t;
    t.rep_of_elem.assign(m.order, 0);
    std::vector<char> done(m.order, 0);
    for (unsigned a = 0; a < m.order; ++a) {
        if (done[a]) continue;
        // coset a + N; canonical representative = smallest element index
        std::vector<unsigned> coset;
        for (unsigned x : n_elems.bits()) coset.push_back(m.add(a, x));
        unsigned rep = *std::min_element(coset.begin(), coset.end());
        for (unsigned e : coset) { t.rep_of_elem[e] = rep; done[e] = 1; }
    }
    t.coset_of_rep.assign(m.order, -1);
    for (unsigned a = 0; a < m.order; ++a)
        if (t.rep_of_elem[a] == a) t.reps.push_back(a);
    std::sort(t.reps.begin(), t.reps.end());
    for (std::size_t i = 0; i < t.reps.size(); ++i) t.coset_of_rep[t.reps[i]] = static_cast<int>(i);
    return t;
}

/// Invariant factors c1 >= c2 >= ... (each dividing the previous) from the
/// order statistics d(m) = #{q : m*q = 0}.
std::vector<unsigned> invariant_factors(const Module& m, const CosetTable& t) {
    unsigned q = static_cast<unsigned>(t.reps.size());
    if (q == 1) return {};
    auto killed_by = [&](unsigned k) {
        unsigned cnt = 0;
        for (int c = 0; c < static_cast<int>(q); ++c) {
            int acc = 0;
            for (unsigned i = 0; i < k; ++i) acc = t.add(m, acc, c);
            if (acc == 0) ++cnt;
        }
        return cnt;
    };
    std::map<unsigned, std::vector<unsigned>> valuations;  // prime -> v_p per factor index
    unsigned rest = q;
    for (unsigned p = 2; p <= rest; ++p) {
        if (rest % p) continue;
        while (rest % p == 0) rest /= p;
        std::vector<unsigned> e;  // e[t-1] = #factors with v_p >= t
        unsigned pt = 1;
        unsigned prev = killed_by(1);
        for (;;) {
            pt *= p;
            unsigned cur = killed_by(pt);
            if (cur == prev) break;
            unsigned ratio = cur / prev, log = 0;
            while (ratio > 1) { ratio /= p; ++log; }
            e.push_back(log);
            prev = cur;
        }
        unsigned nfac = e.empty() ? 0 : e[0];
        std::vector<unsigned> v(nfac, 0);
        for (unsigned i = 0; i < nfac; ++i)
            for (unsigned tt = 0; tt < e.size(); ++tt)
                if (e[tt] >= i + 1) ++v[i];
        valuations[p] = v;
    }
    std::size_t nfac = 0;
    for (auto& [p, v] : valuations) nfac = std::max(nfac, v.size());
    std::vector<unsigned> factors(nfac, 1);
    for (auto& [p, v] : valuations)
        for (std::size_t i = 0; i < v.size(); ++i)
            for (unsigned j = 0; j < v[i]; ++j) factors[i] *= p;
    return factors;
}

unsigned coset_order(const Module& m, const CosetTable& t, int c) {
    int acc = c;
    unsigned k = 1;
    while (acc != 0) { acc = t.add(m, acc, c); ++k; }
    return k;
}

/// Depth-first search for a generating tuple realizing the invariant factors;
/// the partial span { sum x_i g_i : x_i < factors[i], i <= pos } must stay
/// injective at every step.
bool find_generators(const Module& m, const CosetTable& t, const std::vector<unsigned>& factors,
                     std::size_t pos, std::vector<int>& gens, const std::vector<int>& span) {
    unsigned q = static_cast<unsigned>(t.reps.size());
    if (pos == factors.size()) return span.size() == q;
    for (int g = 1; g < static_cast<int>(q); ++g) {
        if (coset_order(m, t, g) != factors[pos]) continue;
        std::vector<char> used(q, 0);
        for (int s : span) used[s] = 1;
        std::vector<int> new_span(span);
        bool ok = true;
        int shift = 0;
        for (unsigned x = 1; x < factors[pos] && ok; ++x) {
            shift = t.add(m, shift, g);
            for (int s : span) {
                int v = t.add(m, s, shift);
                if (used[v]) { ok = false; break; }
                used[v] = 1;
                new_span.push_back(v);
            }
        }
        if (!ok) continue;
        gens.push_back(g);
        if (find_generators(m, t, factors, pos + 1, gens, new_span)) return true;
        gens.pop_back();
    }
    return false;
}

}  // namespace

Quotient quotient_module(const Module& m, const Bitset& n_elems) {
    if (n_elems.size() != m.order || !n_elems.test(0))
        throw input_error("quotient requires a submodule of the given module");
    for (std::size_t a : n_elems.bits())
        for (std::size_t b : n_elems.bits())
            if (!n_elems.test(m.add(static_cast<unsigned>(a), static_cast<unsigned>(b))))
                throw input_error("quotient requires a submodule of the given module");
    CosetTable t = make_cosets(m, n_elems);
    std::vector<unsigned> factors = invariant_factors(m, t);
    Module q = make_module(m.ring, factors);

    std::vector<int> gens;
    std::vector<int> span = {0};
    if (!find_generators(m, t, factors, 0, gens, span))
        throw std::logic_error("no generating tuple realizes the invariant factors");

    // index the cosets by the quotient coordinates they carry under gens
    std::vector<int> elem_of_coset(t.reps.size(), -1);
    for (unsigned idx = 0; idx < q.order; ++idx) {
        Element e = q.element_at(idx);
        int acc = 0;
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (unsigned x = 0; x < e[i]; ++x) acc = t.add(m, acc, gens[i]);
        if (elem_of_coset[acc] != -1) throw std::logic_error("generator span is not free");
        elem_of_coset[acc] = static_cast<int>(idx);
    }

    std::vector<Element> images;
    for (std::size_t i = 0; i < m.orders.size(); ++i) {
        Element e(m.orders.size(), 0);
        e[i] = m.orders[i] == 1 ? 0 : 1;
        unsigned gen_idx = m.index_of(e);
        int coset = t.coset_of_rep[t.rep_of_elem[gen_idx]];
        images.push_back(q.element_at(static_cast<unsigned>(elem_of_coset[coset])));
    }
    Quotient out{q, make_hom(m, q, images)};
    if (!out.projection.is_surjective()) throw std::logic_error("quotient projection not surjective");
    if (kernel(out.projection) != n_elems) throw std::logic_error("quotient kernel mismatch");
    return out;
}

}  // namespace modtop
