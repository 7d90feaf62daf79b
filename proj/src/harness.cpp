#include "modtop/harness.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "modtop/errors.hpp"
#include "modtop/hom.hpp"
#include "modtop/labels.hpp"
#include "modtop/space.hpp"

namespace modtop::harness {

namespace {

constexpr int kFamilies = 100;  // seeded random families per family-based statement

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t stmt_seed(const Corpus& corpus, const std::string& id, const Instance& inst) {
    return splitmix(corpus.seed ^ splitmix(fnv1a(id)) ^ splitmix(fnv1a(instance_name(inst))));
}

bool is_prime_number(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Per-(module, class) workspace with lazily cached expensive analyses.
struct SpaceCtx {
    LatticePtr lat;
    StructureSpace sp;
    std::optional<std::vector<PointSet>> closed_cache;
    std::optional<SeparationReport> sep_cache;
    std::optional<bool> conn_cache;

    SpaceCtx(LatticePtr l, ClassName c) : lat(std::move(l)), sp(build_space(lat, c)) {}

    const std::vector<PointSet>& closed() {
        if (!closed_cache) closed_cache = all_closed_sets(sp);
        return *closed_cache;
    }
    const SeparationReport& sep() {
        if (!sep_cache) sep_cache = separation_report(sp);
        return *sep_cache;
    }
    bool connected() {
        if (!conn_cache) conn_cache = is_connected(sp);
        return *conn_cache;
    }
};

template <typename Fn>
CheckResult guarded(const std::string& id, const Instance& inst, Fn&& fn) {
    CheckResult res;
    res.statement_id = id;
    res.instance = inst;
    try {
        fn(res);
    } catch (const cap_error& e) {
        res.verdict = Verdict::skipped;
        res.witness = e.what();
    } catch (const std::exception& e) {
        res.verdict = Verdict::fail;
        res.witness = std::string("exception: ") + e.what();
    }
    return res;
}

std::string lbl(const Lattice& lat, int id) { return submodule_label(lat, id); }

/// First maximal submodule missing from the class, if any.
std::optional<int> missing_maximal(const Lattice& lat, const StructureSpace& sp) {
    for (int m : lat.maximal_ids())
        if (sp.point_of_sub[m] < 0) return m;
    return std::nullopt;
}

void fail(CheckResult& res, std::string witness) {
    res.verdict = Verdict::fail;
    res.witness = std::move(witness);
}

void unmet(CheckResult& res, std::string hypothesis) {
    res.verdict = Verdict::hypothesis_not_met;
    res.witness = std::move(hypothesis);
}

/// C(N) = emptyset iff N = M, the downgraded quasi-compactness witness.
void check_empty_iff_full(CheckResult& res, const Lattice& lat, const StructureSpace& sp) {
    for (int i = 0; i < lat.size(); ++i) {
        bool empty = sp.csub(i).none();
        if (empty && i != lat.full_id)
            return fail(res, "C(N) is empty for N=" + lbl(lat, i) + " although N is proper");
        if (!empty && i == lat.full_id) return fail(res, "C(M) is nonempty");
    }
}

bool subbasis_expressible(const StructureSpace& sp, const PointSet& f) {
    PointSet u = sp.empty_set();
    for (const PointSet& s : sp.subbasis)
        if (s.subset_of(f)) u |= s;
    return u == f;
}

// ---------------------------------------------------------------------------
// space-level statements
// ---------------------------------------------------------------------------

const std::vector<std::string>& space_statement_catalog() {
    static const std::vector<std::string> ids = {
        "lemma-closure-props.1",
        "lemma-closure-props.2",
        "lemma-closure-props.3",
        "lemma-closure-props.3.families",
        "lemma-closure-props.4",
        "lemma-closure-props.5",
        "thm-fg-quasicompact.witness",
        "thm-fg-quasicompact.finite-subfamily",
        "thm-maximal-quasicompact",
        "cor-quasicompact-classes",
        "prop-maximal-converse",
        "thm-noetherian-quasicompact",
        "cor-noetherian-space",
        "prop-t0",
        "lemma-irreducible-subbasis",
        "cor-irreducible-proper",
        "thm-t1.fwd",
        "thm-t1.bwd",
        "cor-artinian",
        "lemma-omega",
        "thm-sobriety.fwd",
        "thm-sobriety.bwd",
        "cor-sober-classes",
        "prop-sober-classes",
        "thm-spectral-proper",
        "cor-spectral-iff-sober.fwd",
        "cor-spectral-iff-sober.bwd",
        "lemma-strong-disconnect.basis",
        "lemma-strong-disconnect.disconnected",
        "thm-disconnected-iff.fwd",
        "thm-disconnected-iff.bwd",
        "thm-connected-if-zero",
        "cor-connected-classes",
        "info-top-module",
    };
    return ids;
}

bool space_statement_applies(const std::string& id, ClassName c) {
    auto in = [c](std::initializer_list<ClassName> cs) {
        return std::find(cs.begin(), cs.end(), c) != cs.end();
    };
    if (id == "cor-quasicompact-classes")
        return in({ClassName::maximal, ClassName::prime, ClassName::semiprime,
                   ClassName::extraordinary, ClassName::strongly_irreducible, ClassName::primary,
                   ClassName::irreducible, ClassName::completely_irreducible, ClassName::radical});
    if (id == "prop-maximal-converse") return c == ClassName::finitely_generated;
    if (id == "cor-irreducible-proper") return c == ClassName::proper;
    if (id == "cor-sober-classes")
        return in({ClassName::proper, ClassName::prime, ClassName::minimal_prime});
    if (id == "prop-sober-classes")
        return in({ClassName::strongly_irreducible, ClassName::semiprime,
                   ClassName::extraordinary});
    if (id == "thm-spectral-proper") return c == ClassName::proper;
    if (id == "cor-connected-classes")
        return in({ClassName::proper, ClassName::finitely_generated, ClassName::cyclic});
    return true;
}

CheckResult run_space_statement(const std::string& id, SpaceCtx& ctx, const Instance& inst,
                                const Corpus& corpus) {
    return guarded(id, inst, [&](CheckResult& res) {
        const Lattice& lat = *ctx.lat;
        const StructureSpace& sp = ctx.sp;
        int nsub = lat.size();

        if (id == "lemma-closure-props.1") {
            for (int i = 0; i < nsub; ++i)
                for (int j = 0; j < nsub; ++j) {
                    if (i == j || !lat.leq(i, j)) continue;
                    if (!sp.csub(j).subset_of(sp.csub(i)))
                        return fail(res, "N=" + lbl(lat, i) + " within N'=" + lbl(lat, j) +
                                             " but C(N') is not within C(N)");
                }
        } else if (id == "lemma-closure-props.2") {
            if (sp.csub(lat.zero_id) != sp.full_set()) return fail(res, "C(0) differs from D(M)");
            if (sp.csub(lat.full_id).any()) return fail(res, "C(M) is nonempty");
        } else if (id == "lemma-closure-props.3") {
            for (int i = 0; i < nsub; ++i)
                for (int j = i; j < nsub; ++j)
                    if ((sp.csub(i) & sp.csub(j)) != sp.csub(lat.sum_id(i, j)))
                        return fail(res, "C(N) meet C(N') differs from C(N+N') for N=" +
                                             lbl(lat, i) + ", N'=" + lbl(lat, j));
        } else if (id == "lemma-closure-props.3.families") {
            std::mt19937_64 rng(stmt_seed(corpus, id, inst));
            for (int t = 0; t < kFamilies; ++t) {
                std::size_t k = 1 + rng() % 4;
                PointSet meet = sp.full_set();
                int sum = lat.zero_id;
                std::string names;
                for (std::size_t u = 0; u < k; ++u) {
                    int n = static_cast<int>(rng() % nsub);
                    meet &= sp.csub(n);
                    sum = lat.sum_id(sum, n);
                    names += (u ? "," : "") + lbl(lat, n);
                }
                if (meet != sp.csub(sum))
                    return fail(res, "family {" + names + "}: intersection differs from C(sum)");
            }
        } else if (id == "lemma-closure-props.4") {
            for (int i = 0; i < nsub; ++i)
                for (int j = i; j < nsub; ++j)
                    if (!(sp.csub(i) | sp.csub(j)).subset_of(sp.csub(lat.intersect_id(i, j))))
                        return fail(res, "C(N) union C(N') not within C(N meet N') for N=" +
                                             lbl(lat, i) + ", N'=" + lbl(lat, j));
        } else if (id == "lemma-closure-props.5") {
            for (int i = 0; i < nsub; ++i)
                if (!sp.csub(radical_id(lat, i)).subset_of(sp.csub(i)))
                    return fail(res, "C(rad N) not within C(N) for N=" + lbl(lat, i));
        } else if (id == "thm-fg-quasicompact.witness") {
            res.label = "finite-trivial+witness";
            if (auto m = missing_maximal(lat, sp))
                return unmet(res, "hypothesis: the class contains all maximal submodules; " +
                                      lbl(lat, *m) + " is outside the class");
            check_empty_iff_full(res, lat, sp);
        } else if (id == "thm-fg-quasicompact.finite-subfamily") {
            res.label = "finite-trivial+witness";
            std::mt19937_64 rng(stmt_seed(corpus, id, inst));
            for (int t = 0; t < kFamilies; ++t) {
                std::size_t k = 1 + rng() % 5;
                std::vector<int> family;
                for (std::size_t u = 0; u < k; ++u) family.push_back(static_cast<int>(rng() % nsub));
                auto meet_of = [&](const std::vector<int>& ids) {
                    PointSet m = sp.full_set();
                    for (int n : ids) m &= sp.csub(n);
                    return m;
                };
                if (meet_of(family).any()) family.push_back(lat.full_id);
                std::vector<int> kept = family;
                bool changed = true;
                while (changed && kept.size() > 1) {
                    changed = false;
                    for (std::size_t p = 0; p < kept.size(); ++p) {
                        std::vector<int> trial = kept;
                        trial.erase(trial.begin() + static_cast<long>(p));
                        if (meet_of(trial).none()) {
                            kept = std::move(trial);
                            changed = true;
                            break;
                        }
                    }
                }
                if (kept.empty() || meet_of(kept).any())
                    return fail(res, "family #" + std::to_string(t) +
                                         ": extracted subfamily does not have empty intersection");
            }
        } else if (id == "thm-maximal-quasicompact" || id == "cor-quasicompact-classes") {
            res.label = "finite-trivial+witness";
            if (auto m = missing_maximal(lat, sp))
                return unmet(res, "hypothesis: the class contains all maximal submodules; " +
                                      lbl(lat, *m) + " is outside the class");
            check_empty_iff_full(res, lat, sp);
        } else if (id == "prop-maximal-converse") {
            for (int m : lat.maximal_ids())
                if (sp.point_of_sub[m] < 0)
                    return fail(res, "maximal submodule " + lbl(lat, m) +
                                         " is missing from the finitely generated class");
        } else if (id == "thm-noetherian-quasicompact") {
            res.label = "finite-trivial+witness";
            std::mt19937_64 rng(stmt_seed(corpus, id, inst));
            for (int t = 0; t < kFamilies; ++t) {
                std::size_t k = 1 + rng() % 5;
                std::vector<int> family;
                for (std::size_t u = 0; u < k; ++u) family.push_back(static_cast<int>(rng() % nsub));
                auto sum_of = [&](const std::vector<int>& ids) {
                    int s = lat.zero_id;
                    for (int n : ids) s = lat.sum_id(s, n);
                    return s;
                };
                auto meet_of = [&](const std::vector<int>& ids) {
                    PointSet m = sp.full_set();
                    for (int n : ids) m &= sp.csub(n);
                    return m;
                };
                int total = sum_of(family);
                std::vector<int> kept = family;
                bool changed = true;
                while (changed && kept.size() > 1) {
                    changed = false;
                    for (std::size_t p = 0; p < kept.size(); ++p) {
                        std::vector<int> trial = kept;
                        trial.erase(trial.begin() + static_cast<long>(p));
                        if (sum_of(trial) == total) {
                            kept = std::move(trial);
                            changed = true;
                            break;
                        }
                    }
                }
                if (sum_of(kept) != total || meet_of(kept) != sp.csub(total) ||
                    meet_of(kept) != meet_of(family))
                    return fail(res, "family #" + std::to_string(t) +
                                         ": finite subfamily does not reproduce the intersection");
            }
        } else if (id == "cor-noetherian-space") {
            res.label = "finite-trivial+witness";
            for (const PointSet& f : ctx.closed()) {
                PointSet u = sp.empty_set();
                for (std::size_t x : f.bits()) u |= sp.point_closure[x];
                if (u != f)
                    return fail(res, "a closed set differs from the union of its point closures");
            }
            for (int p = 0; p < sp.point_count(); ++p) {
                auto rep = irreducible_and_generics(sp, sp.point_closure[p]);
                if (!rep.irreducible)
                    return fail(res, "the closure of " + lbl(lat, sp.points[p]) +
                                         " is not irreducible");
            }
        } else if (id == "prop-t0") {
            if (!ctx.sep().t0) {
                for (int p = 0; p < sp.point_count(); ++p)
                    for (int q = p + 1; q < sp.point_count(); ++q)
                        if (sp.point_closure[p] == sp.point_closure[q])
                            return fail(res, "distinct points " + lbl(lat, sp.points[p]) + " and " +
                                                 lbl(lat, sp.points[q]) + " share their closure");
                return fail(res, "space reported as not T0");
            }
        } else if (id == "lemma-irreducible-subbasis") {
            for (int i = 0; i < nsub; ++i) {
                int p = sp.point_of_sub[i];
                if (p < 0) continue;
                PointSet single = sp.empty_set();
                single.set(static_cast<std::size_t>(p));
                if (closure(sp, single) != sp.csub(i))
                    return fail(res, "closure of {N} differs from C(N) for N=" + lbl(lat, i));
                auto rep = irreducible_and_generics(sp, sp.csub(i));
                if (!rep.irreducible)
                    return fail(res, "C(N) is not irreducible for N=" + lbl(lat, i));
                if (std::find(rep.generic_points.begin(), rep.generic_points.end(), p) ==
                    rep.generic_points.end())
                    return fail(res, "N=" + lbl(lat, i) + " is not a generic point of C(N)");
            }
        } else if (id == "cor-irreducible-proper") {
            for (std::size_t s = 0; s < sp.subbasis.size(); ++s) {
                if (sp.subbasis[s].none()) continue;
                if (!irreducible_and_generics(sp, sp.subbasis[s]).irreducible)
                    return fail(res, "C(" + lbl(lat, sp.witnesses[s].front()) +
                                         ") is not irreducible");
            }
        } else if (id == "thm-t1.fwd") {
            for (int p = 0; p < sp.point_count(); ++p)
                for (int m : lat.maximal_ids())
                    if (lat.leq(sp.points[p], m) && sp.point_of_sub[m] < 0)
                        return unmet(res,
                                     "hypothesis: every maximal submodule over a point lies in "
                                     "the class; " +
                                         lbl(lat, m) + " over " + lbl(lat, sp.points[p]) +
                                         " is outside the class");
            if (ctx.sep().t1)
                for (int p = 0; p < sp.point_count(); ++p)
                    if (!is_in_class(lat, sp.points[p], ClassName::maximal))
                        return fail(res, "space is T1 but the point " + lbl(lat, sp.points[p]) +
                                             " is not a maximal submodule");
        } else if (id == "thm-t1.bwd") {
            bool all_max = true;
            for (int p = 0; p < sp.point_count(); ++p)
                all_max = all_max && is_in_class(lat, sp.points[p], ClassName::maximal);
            if (all_max && !ctx.sep().t1)
                return fail(res, "every point is maximal yet the space is not T1");
        } else if (id == "cor-artinian") {
            res.label = "finite-trivial+witness";
            bool discrete = true;
            for (int p = 0; p < sp.point_count(); ++p)
                discrete = discrete && sp.point_closure[p].count() == 1;
            if (discrete != ctx.sep().t1)
                return fail(res, "direct discreteness check disagrees with the T1 report");
            if (!discrete) return unmet(res, "hypothesis: the structure space is discrete");
        } else if (id == "lemma-omega") {
            for (int i = 0; i < nsub; ++i) {
                if (sp.point_of_sub[i] < 0) continue;
                int w = omega_id(sp, i);
                if (w != i)
                    return fail(res, "omega(N)=" + lbl(lat, w) + " differs from N=" + lbl(lat, i));
            }
        } else if (id == "thm-sobriety.fwd") {
            for (int i = 0; i < nsub; ++i) {
                const PointSet& set = sp.csub(i);
                if (set.none()) continue;
                auto rep = irreducible_and_generics(sp, set);
                if (!rep.irreducible || rep.generic_points.size() != 1) continue;
                int w = omega_id(sp, i);
                int p = sp.point_of_sub[w];
                if (p < 0 || !set.test(static_cast<std::size_t>(p)))
                    return fail(res, "C(N) for N=" + lbl(lat, i) +
                                         " has a unique generic point but omega(N)=" +
                                         lbl(lat, w) + " is not in C(N)");
            }
        } else if (id == "thm-sobriety.bwd") {
            for (int i = 0; i < nsub; ++i) {
                const PointSet& set = sp.csub(i);
                if (set.none()) continue;
                auto rep = irreducible_and_generics(sp, set);
                if (!rep.irreducible) continue;
                int w = omega_id(sp, i);
                int p = sp.point_of_sub[w];
                if (p < 0 || !set.test(static_cast<std::size_t>(p))) continue;
                if (rep.generic_points.size() != 1)
                    return fail(res, "omega(N) lies in C(N) for N=" + lbl(lat, i) +
                                         " but C(N) has " +
                                         std::to_string(rep.generic_points.size()) +
                                         " generic points");
            }
        } else if (id == "cor-sober-classes" || id == "prop-sober-classes") {
            if (!ctx.sep().sober) return fail(res, "space is not sober");
        } else if (id == "thm-spectral-proper") {
            if (!is_spectral(sp)) return fail(res, "space fails the spectral-space definition");
        } else if (id == "cor-spectral-iff-sober.fwd") {
            if (is_spectral(sp) && !ctx.sep().sober)
                return fail(res, "space is spectral but not sober");
        } else if (id == "cor-spectral-iff-sober.bwd") {
            if (ctx.sep().sober && !is_spectral(sp))
                return fail(res, "space is sober but not spectral");
        } else if (id == "lemma-strong-disconnect.basis") {
            for (int i = 0; i < nsub; ++i)
                for (int j = i; j < nsub; ++j)
                    if ((sp.csub(i) & sp.csub(j)) != sp.csub(lat.sum_id(i, j)))
                        return fail(res, "C(N) meet C(N') is not the basis set C(N+N') for N=" +
                                             lbl(lat, i) + ", N'=" + lbl(lat, j));
        } else if (id == "lemma-strong-disconnect.disconnected") {
            if (ctx.connected()) return unmet(res, "hypothesis: the space is disconnected");
            auto sd = strongly_disconnects(sp);
            if (!sd) return fail(res, "disconnected space admits no strong disconnection");
            const auto& [a, b] = *sd;
            if (a.none() || b.none() || a.intersects(b) || (a | b) != sp.full_set() ||
                !subbasis_expressible(sp, a) || !subbasis_expressible(sp, b))
                return fail(res, "reported strong disconnection is invalid");
        } else if (id == "thm-disconnected-iff.fwd") {
            if (!ctx.connected() && !strongly_disconnects(sp))
                return fail(res, "space is disconnected but nothing strongly disconnects it");
        } else if (id == "thm-disconnected-iff.bwd") {
            if (strongly_disconnects(sp) && ctx.connected())
                return fail(res, "a strong disconnection exists but the space is connected");
        } else if (id == "thm-connected-if-zero") {
            if (sp.point_of_sub[lat.zero_id] < 0)
                return unmet(res, "hypothesis: the zero submodule lies in the class");
            if (!ctx.connected())
                return fail(res, "zero submodule is a point but the space is disconnected");
        } else if (id == "cor-connected-classes") {
            if (!ctx.connected()) return fail(res, "space is disconnected");
        } else if (id == "info-top-module") {
            res.label = "informational";
            TopReport rep = is_top_module(sp);
            if (rep.is_top) {
                res.witness = "top=true";
            } else {
                res.witness = "top=false; C(" + lbl(lat, rep.witness->first) + ") union C(" +
                              lbl(lat, rep.witness->second) + ") is not a subbasis set";
            }
        } else {
            throw std::logic_error("unknown statement: " + id);
        }
    });
}

// ---------------------------------------------------------------------------
// module-level statements (independent of any one class)
// ---------------------------------------------------------------------------

std::vector<std::string> module_statement_catalog(unsigned modulus) {
    std::vector<std::string> ids = {
        "class-implications.maximal-implies-prime",
        "class-implications.prime-implies-semiprime",
        "class-implications.semiprime-intersection",
        "class-implications.strongly-irreducible-implies-irreducible",
        "class-implications.completely-irreducible-iff-irreducible",
        "class-implications.minimal-prime-conjunction",
        "class-implications.fg-all-proper",
    };
    if (is_prime_number(modulus)) ids.push_back("class-implications.vector-space-prime");
    return ids;
}

CheckResult run_module_statement(const std::string& id, LatticePtr latp, const Instance& inst) {
    return guarded(id, inst, [&](CheckResult& res) {
        const Lattice& lat = *latp;
        if (id == "class-implications.maximal-implies-prime") {
            for (int m : lat.maximal_ids())
                if (!is_in_class(lat, m, ClassName::prime))
                    return fail(res, "maximal submodule " + lbl(lat, m) + " is not prime");
        } else if (id == "class-implications.prime-implies-semiprime") {
            for (int p : members_of_class(lat, ClassName::prime))
                if (!is_in_class(lat, p, ClassName::semiprime))
                    return fail(res, "prime submodule " + lbl(lat, p) + " is not semiprime");
        } else if (id == "class-implications.semiprime-intersection") {
            std::vector<int> preds = members_of_class(lat, ClassName::semiprime);
            std::set<int> meets;
            for (int p : members_of_class(lat, ClassName::prime)) meets.insert(p);
            bool grew = true;
            while (grew) {
                grew = false;
                std::vector<int> cur(meets.begin(), meets.end());
                for (std::size_t i = 0; i < cur.size(); ++i)
                    for (std::size_t j = i + 1; j < cur.size(); ++j)
                        if (meets.insert(lat.intersect_id(cur[i], cur[j])).second) grew = true;
            }
            std::vector<int> direct(meets.begin(), meets.end());
            if (preds != direct) {
                for (int n : direct)
                    if (std::find(preds.begin(), preds.end(), n) == preds.end())
                        return fail(res, lbl(lat, n) +
                                             " is an intersection of primes but not classified "
                                             "semiprime");
                for (int n : preds)
                    if (std::find(direct.begin(), direct.end(), n) == direct.end())
                        return fail(res, lbl(lat, n) +
                                             " is classified semiprime but is no intersection of "
                                             "primes");
            }
        } else if (id == "class-implications.strongly-irreducible-implies-irreducible") {
            for (int n : members_of_class(lat, ClassName::strongly_irreducible))
                if (!is_in_class(lat, n, ClassName::irreducible))
                    return fail(res, "strongly irreducible " + lbl(lat, n) + " is not irreducible");
        } else if (id == "class-implications.completely-irreducible-iff-irreducible") {
            auto ci = members_of_class(lat, ClassName::completely_irreducible);
            auto ir = members_of_class(lat, ClassName::irreducible);
            if (ci != ir)
                return fail(res,
                            "completely irreducible and irreducible members differ on this "
                            "finite lattice");
        } else if (id == "class-implications.minimal-prime-conjunction") {
            for (int i = 0; i < lat.size(); ++i) {
                if (i == lat.full_id) continue;
                bool mp = is_in_class(lat, i, ClassName::minimal_prime);
                bool conj = is_in_class(lat, i, ClassName::minimal) &&
                            is_in_class(lat, i, ClassName::prime);
                if (mp != conj)
                    return fail(res, "minimal-prime disagrees with minimal-and-prime on " +
                                         lbl(lat, i));
            }
        } else if (id == "class-implications.fg-all-proper") {
            auto fg = members_of_class(lat, ClassName::finitely_generated);
            if (static_cast<int>(fg.size()) != lat.size() - 1)
                return fail(res, "a proper submodule of a finite module is not finitely generated");
        } else if (id == "class-implications.vector-space-prime") {
            for (int i = 0; i < lat.size(); ++i) {
                if (i == lat.full_id) continue;
                if (!is_in_class(lat, i, ClassName::prime))
                    return fail(res, "proper subspace " + lbl(lat, i) +
                                         " of a vector space is not prime");
            }
        } else {
            throw std::logic_error("unknown statement: " + id);
        }
    });
}

// ---------------------------------------------------------------------------
// induced-map statements over the fixed hom suite
// ---------------------------------------------------------------------------

struct BuiltHom {
    Hom hom;
    LatticePtr src_lat;
    LatticePtr dst_lat;
};

BuiltHom build_hom_case(const HomCase& hc, const Caps& caps) {
    Ring ring = make_ring(hc.ring);
    Module src = make_module(ring, hc.src_orders);
    if (hc.is_quotient) {
        std::vector<unsigned> gen_ids;
        for (const auto& e : hc.kernel_gens) gen_ids.push_back(src.index_of(e));
        Bitset n = generate(src, gen_ids);
        Quotient q = quotient_module(src, n);
        return {q.projection, enumerate_submodules(src, caps),
                enumerate_submodules(q.quotient, caps)};
    }
    Module dst = make_module(ring, hc.dst_orders);
    std::vector<Element> images(hc.images.begin(), hc.images.end());
    return {make_hom(src, dst, images), enumerate_submodules(src, caps),
            enumerate_submodules(dst, caps)};
}

const IdentityCheck* find_identity(const ConmapReport& rep, std::string_view name) {
    for (const auto& i : rep.identities)
        if (i.name == name) return &i;
    return nullptr;
}

CheckResult run_hom_statement(const std::string& id, const HomCase& hc, const Corpus& corpus) {
    Instance inst{hc.ring, hc.src_orders, hc.cls, hc.name};
    return guarded(id, inst, [&](CheckResult& res) {
        BuiltHom built = build_hom_case(hc, corpus.caps);
        ConmapReport rep = verify_conmap(built.hom, hc.cls, built.src_lat, built.dst_lat);
        auto require = [&](std::initializer_list<std::string_view> names) {
            for (std::string_view name : names) {
                const IdentityCheck* ic = find_identity(rep, name);
                if (!ic) return fail(res, "identity " + std::string(name) + " was not checked");
                if (ic->applicable && !ic->holds)
                    return fail(res, "identity " + std::string(name) + " fails" +
                                         (ic->witness.empty() ? "" : ": " + ic->witness));
            }
        };
        auto contraction_gate = [&]() {
            if (rep.contraction.holds) return false;
            std::string w = "hypothesis: contraction property";
            if (rep.contraction.witness)
                w += "; the preimage of " + lbl(*built.dst_lat, *rep.contraction.witness) +
                     " leaves the class";
            unmet(res, w);
            return true;
        };
        if (id == "prop-conmap.continuity") {
            if (contraction_gate()) return;
            require({"monotone-preimage", "subbasis-preimage", "continuous"});
        } else if (id == "prop-conmap.homeomorphism") {
            if (contraction_gate()) return;
            if (!rep.surjective) return unmet(res, "hypothesis: the homomorphism is surjective");
            require({"surjective-image-of-preimage", "bijection-onto-C(ker)", "closed-map",
                     "continuous"});
        } else if (id == "prop-conmap.dense") {
            if (contraction_gate()) return;
            require({"closure-of-image", "dense-iff-kernel-below-meet"});
        } else if (id == "cor-quotient") {
            if (contraction_gate()) return;
            if (!rep.surjective)
                return fail(res, "quotient projection is not surjective");
            require({"bijection-onto-C(ker)", "closed-map", "continuous",
                     "surjective-image-of-preimage"});
        } else {
            throw std::logic_error("unknown statement: " + id);
        }
    });
}

std::vector<std::string> hom_statement_catalog(const HomCase& hc) {
    std::vector<std::string> ids = {"prop-conmap.continuity", "prop-conmap.homeomorphism",
                                    "prop-conmap.dense"};
    if (hc.is_quotient) ids.push_back("cor-quotient");
    return ids;
}

}  // namespace

// ---------------------------------------------------------------------------
// public surface
// ---------------------------------------------------------------------------

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::hypothesis_not_met: return "hypothesis-not-met";
        case Verdict::skipped: return "skipped";
    }
    return "unknown";
}

std::string module_name(unsigned ring, const std::vector<unsigned>& orders) {
    if (orders.size() == 1 && orders[0] == ring) return "Z/" + std::to_string(ring);
    if (orders.empty()) return "0 over Z/" + std::to_string(ring);
    std::string s;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (i) s += "x";
        s += "Z/" + std::to_string(orders[i]);
    }
    return s + " over Z/" + std::to_string(ring);
}

std::string instance_name(const Instance& inst) {
    std::string s = module_name(inst.ring, inst.orders);
    if (inst.cls) s += ", class " + to_string(*inst.cls);
    if (!inst.hom.empty()) s += ", hom " + inst.hom;
    return s;
}

Corpus default_corpus() {
    Corpus c;
    for (unsigned n = 2; n <= 24; ++n) c.modules.push_back({n, {n}});
    c.modules.push_back({2, {2, 2}});
    c.modules.push_back({2, {2, 2, 2}});
    c.modules.push_back({3, {3, 3}});
    c.modules.push_back({4, {2, 4}});
    c.modules.push_back({12, {2, 6}});
    c.modules.push_back({4, {4, 4}});
    return c;
}

const std::vector<HomCase>& hom_suite() {
    static const std::vector<HomCase> suite = {
        {"identity Z/6", ClassName::prime, 6, {6}, {6}, {{1}}, false, {}},
        {"quotient Z/4 by <2>", ClassName::proper, 4, {4}, {}, {}, true, {{2}}},
        {"quotient Z/6 by <3>", ClassName::proper, 6, {6}, {}, {}, true, {{3}}},
        {"quotient Z/12 by <6>", ClassName::prime, 12, {12}, {}, {}, true, {{6}}},
        {"mod-2 surjection Z/4 to Z/2", ClassName::proper, 4, {4}, {2}, {{1}}, false, {}},
        {"zero map on Z/4", ClassName::proper, 4, {4}, {4}, {{0}}, false, {}},
        {"doubling inclusion Z/2 to Z/4", ClassName::maximal, 4, {2}, {4}, {{2}}, false, {}},
        {"doubling inclusion Z/3 to Z/6", ClassName::proper, 6, {3}, {6}, {{2}}, false, {}},
        {"identity on the 2-plane", ClassName::prime, 2, {2, 2}, {2, 2}, {{1, 0}, {0, 1}}, false,
         {}},
        {"first projection of the 2-plane", ClassName::proper, 2, {2, 2}, {2}, {{1}, {0}}, false,
         {}},
        {"unit scaling on Z/6", ClassName::proper, 6, {6}, {6}, {{5}}, false, {}},
        {"doubling endomorphism of Z/8", ClassName::proper, 8, {8}, {8}, {{2}}, false, {}},
        {"quotient of the 2-plane by a line", ClassName::proper, 2, {2, 2}, {}, {}, true,
         {{1, 0}}},
        {"quotient Z/2xZ/4 by <(0,2)>", ClassName::proper, 4, {2, 4}, {}, {}, true, {{0, 2}}},
    };
    return suite;
}

std::vector<CheckResult> run_all(const Corpus& corpus) {
    std::vector<CheckResult> out;
    for (const auto& [ring, orders] : corpus.modules) {
        Instance base{ring, orders, std::nullopt, ""};
        LatticePtr lat;
        try {
            lat = enumerate_submodules(make_module(make_ring(ring), orders), corpus.caps);
        } catch (const cap_error& e) {
            out.push_back({"corpus-instance", base, Verdict::skipped, e.what(), ""});
            continue;
        }
        if (!corpus.only_class)
            for (const auto& id : module_statement_catalog(ring))
                out.push_back(run_module_statement(id, lat, base));
        for (ClassName cls : all_classes()) {
            if (corpus.only_class && cls != *corpus.only_class) continue;
            Instance inst = base;
            inst.cls = cls;
            SpaceCtx ctx(lat, cls);
            for (const auto& id : space_statement_catalog()) {
                if (!space_statement_applies(id, cls)) continue;
                out.push_back(run_space_statement(id, ctx, inst, corpus));
            }
        }
    }
    if (corpus.include_homs)
        for (const HomCase& hc : hom_suite())
            for (const auto& id : hom_statement_catalog(hc))
                out.push_back(run_hom_statement(id, hc, corpus));
    return out;
}

CheckResult run_statement(const std::string& statement_id, const Instance& inst,
                          const Corpus& corpus) {
    if (!inst.hom.empty()) {
        for (const HomCase& hc : hom_suite()) {
            if (hc.name != inst.hom) continue;
            auto ids = hom_statement_catalog(hc);
            if (std::find(ids.begin(), ids.end(), statement_id) == ids.end())
                throw input_error("statement " + statement_id + " does not apply to hom case " +
                                  hc.name);
            return run_hom_statement(statement_id, hc, corpus);
        }
        throw input_error("unknown hom case: " + inst.hom);
    }
    Module mod = make_module(make_ring(inst.ring), inst.orders);
    if (statement_id.rfind("class-implications.", 0) == 0) {
        auto ids = module_statement_catalog(inst.ring);
        if (std::find(ids.begin(), ids.end(), statement_id) == ids.end())
            throw input_error("statement " + statement_id + " does not apply to modulus " +
                              std::to_string(inst.ring));
        return guarded(statement_id, inst, [&](CheckResult& res) {
            res = run_module_statement(statement_id, enumerate_submodules(mod, corpus.caps), inst);
        });
    }
    const auto& sids = space_statement_catalog();
    if (std::find(sids.begin(), sids.end(), statement_id) == sids.end())
        throw input_error("unknown statement: " + statement_id);
    if (!inst.cls) throw input_error("statement " + statement_id + " needs a class");
    if (!space_statement_applies(statement_id, *inst.cls))
        throw input_error("statement " + statement_id + " does not apply to class " +
                          to_string(*inst.cls));
    return guarded(statement_id, inst, [&](CheckResult& res) {
        SpaceCtx ctx(enumerate_submodules(mod, corpus.caps), *inst.cls);
        res = run_space_statement(statement_id, ctx, inst, corpus);
    });
}

namespace {

std::vector<Instance> shrink_candidates(const Instance& inst) {
    std::vector<Instance> out;
    // drop one cyclic factor
    if (inst.orders.size() > 1) {
        for (std::size_t i = 0; i < inst.orders.size(); ++i) {
            Instance c = inst;
            c.orders.erase(c.orders.begin() + static_cast<long>(i));
            out.push_back(c);
        }
    }
    // shrink one factor order to a proper divisor
    for (std::size_t i = 0; i < inst.orders.size(); ++i)
        for (unsigned d = 2; d < inst.orders[i]; ++d) {
            if (inst.orders[i] % d != 0) continue;
            Instance c = inst;
            c.orders[i] = d;
            out.push_back(c);
        }
    // shrink the ring modulus over its divisors, reducing factor orders alongside
    for (unsigned n = 2; n < inst.ring; ++n) {
        if (inst.ring % n != 0) continue;
        Instance c = inst;
        c.ring = n;
        for (auto& d : c.orders) d = std::gcd(d, n);
        out.push_back(c);
    }
    return out;
}

}  // namespace

CheckResult minimize(const CheckResult& failing, const Corpus& corpus) {
    if (failing.verdict != Verdict::fail) throw input_error("nothing to minimize");
    if (!failing.instance.hom.empty()) return failing;
    CheckResult best = failing;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (const Instance& cand : shrink_candidates(best.instance)) {
            CheckResult r = run_statement(best.statement_id, cand, corpus);
            if (r.verdict == Verdict::fail) {
                best = r;
                shrunk = true;
                break;
            }
        }
    }
    return best;
}

nlohmann::ordered_json instance_json(const Instance& inst) {
    nlohmann::ordered_json j;
    j["ring"] = inst.ring;
    j["orders"] = inst.orders;
    if (inst.cls) j["class"] = to_string(*inst.cls);
    if (!inst.hom.empty()) j["hom"] = inst.hom;
    return j;
}

nlohmann::ordered_json result_json(const CheckResult& r) {
    nlohmann::ordered_json j;
    j["statement"] = r.statement_id;
    j["instance"] = instance_json(r.instance);
    j["verdict"] = std::string(verdict_name(r.verdict));
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.label.empty()) j["label"] = r.label;
    return j;
}

nlohmann::ordered_json summary_json(const std::vector<CheckResult>& results) {
    std::size_t pass = 0, failed = 0, unmet_count = 0, skipped = 0;
    for (const auto& r : results) {
        switch (r.verdict) {
            case Verdict::pass: ++pass; break;
            case Verdict::fail: ++failed; break;
            case Verdict::hypothesis_not_met: ++unmet_count; break;
            case Verdict::skipped: ++skipped; break;
        }
    }
    nlohmann::ordered_json j;
    j["total"] = results.size();
    j["pass"] = pass;
    j["fail"] = failed;
    j["hypothesis-not-met"] = unmet_count;
    j["skipped"] = skipped;
    return j;
}

nlohmann::ordered_json report_json(const std::vector<CheckResult>& results, const Corpus& corpus) {
    nlohmann::ordered_json j;
    j["tool_version"] = std::string(kToolVersion);
    nlohmann::ordered_json mods = nlohmann::ordered_json::array();
    for (const auto& [ring, orders] : corpus.modules) {
        nlohmann::ordered_json m;
        m["ring"] = ring;
        m["orders"] = orders;
        mods.push_back(m);
    }
    j["corpus"] = {{"modules", mods}, {"seed", corpus.seed}};
    j["summary"] = summary_json(results);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) arr.push_back(result_json(r));
    j["results"] = arr;
    return j;
}

}  // namespace modtop::harness
