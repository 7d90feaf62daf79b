#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "modtop/classes.hpp"
#include "modtop/errors.hpp"
#include "modtop/harness.hpp"
#include "modtop/hom.hpp"
#include "modtop/labels.hpp"
#include "modtop/lattice.hpp"
#include "modtop/space.hpp"

namespace {

using namespace modtop;
using nlohmann::ordered_json;

struct Options {
    unsigned ring = 0;
    std::vector<unsigned> orders;
    std::string cls = "all";
    std::string format = "text";
    unsigned max_elements = Caps{}.max_elements;
    unsigned max_submodules = Caps{}.max_submodules;
    std::uint64_t seed = 0;
    std::string out;
    // hom only
    std::vector<unsigned> src;
    std::vector<unsigned> dst;
    std::string images;
};

Caps caps_of(const Options& o) { return Caps{o.max_elements, o.max_submodules}; }

ClassName class_of(const std::string& s) {
    std::optional<ClassName> c = parse_class(s);
    if (!c) throw input_error("unknown class name: " + s);
    return *c;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw input_error("cannot open output file: " + out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

std::vector<Element> parse_images(const std::string& s) {
    std::vector<Element> images;
    if (s.empty()) return images;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t stop = s.find(';', start);
        std::string tuple = s.substr(start, stop == std::string::npos ? stop : stop - start);
        Element e;
        std::size_t t = 0;
        while (t <= tuple.size()) {
            std::size_t c = tuple.find(',', t);
            std::string tok = tuple.substr(t, c == std::string::npos ? c : c - t);
            try {
                std::size_t used = 0;
                unsigned long v = std::stoul(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                e.push_back(static_cast<unsigned>(v));
            } catch (const std::exception&) {
                throw input_error("malformed --images entry: '" + tok + "'");
            }
            if (c == std::string::npos) break;
            t = c + 1;
        }
        images.push_back(std::move(e));
        if (stop == std::string::npos) break;
        start = stop + 1;
    }
    return images;
}

ordered_json instance_header(const Options& o, bool with_class) {
    ordered_json j;
    j["ring"] = o.ring;
    j["orders"] = o.orders;
    if (with_class) j["class"] = o.cls;
    return j;
}

// ---------------------------------------------------------------------------
// inspect
// ---------------------------------------------------------------------------

int run_inspect(const Options& o) {
    LatticePtr lat = enumerate_submodules(make_module(make_ring(o.ring), o.orders), caps_of(o));
    if (o.format == "json") {
        ordered_json j;
        j["tool_version"] = std::string(harness::kToolVersion);
        j["instance"] = instance_header(o, false);
        ordered_json arr = ordered_json::array();
        for (int i = 0; i < lat->size(); ++i) {
            ordered_json s;
            s["id"] = i;
            s["label"] = submodule_label(*lat, i);
            s["order"] = lat->subs[i].count();
            ordered_json cl;
            for (ClassName c : all_classes()) cl[to_string(c)] = is_in_class(*lat, i, c);
            s["classes"] = cl;
            arr.push_back(s);
        }
        j["submodules"] = arr;
        emit(j.dump(2), o.out);
        return 0;
    }
    std::string t = harness::module_name(o.ring, o.orders) + ": " +
                    std::to_string(lat->size()) + " submodules\n";
    for (int i = 0; i < lat->size(); ++i) {
        t += "  [" + std::to_string(i) + "] " + submodule_label(*lat, i) +
             " (order " + std::to_string(lat->subs[i].count()) + ")";
        std::string in;
        for (ClassName c : all_classes())
            if (is_in_class(*lat, i, c)) in += (in.empty() ? "" : ", ") + to_string(c);
        t += in.empty() ? "" : ": " + in;
        t += "\n";
    }
    emit(t, o.out);
    return 0;
}

// ---------------------------------------------------------------------------
// space
// ---------------------------------------------------------------------------

std::string dot_space(const StructureSpace& sp, const std::string& title) {
    std::string d = "strict digraph \"" + title + "\" {\n  rankdir=BT;\n";
    for (int p = 0; p < sp.point_count(); ++p)
        d += "  \"" + submodule_label(*sp.lat, sp.points[p]) + "\";\n";
    for (auto [p, q] : specialization_preorder(sp)) {
        if (p == q) continue;
        d += "  \"" + submodule_label(*sp.lat, sp.points[p]) + "\" -> \"" +
             submodule_label(*sp.lat, sp.points[q]) + "\";\n";
    }
    d += "}\n";
    return d;
}

int run_space(const Options& o) {
    ClassName cls = class_of(o.cls);
    LatticePtr lat = enumerate_submodules(make_module(make_ring(o.ring), o.orders), caps_of(o));
    StructureSpace sp = build_space(lat, cls);
    std::string title = harness::module_name(o.ring, o.orders) + "; " + o.cls;

    if (o.format == "dot") {
        emit(dot_space(sp, title), o.out);
        return 0;
    }

    SeparationReport sep = separation_report(sp);
    bool spectral = is_spectral(sp);
    bool connected = is_connected(sp);
    TopReport top = is_top_module(sp);
    auto sd = strongly_disconnects(sp);

    if (o.format == "json") {
        ordered_json j;
        j["tool_version"] = std::string(harness::kToolVersion);
        j["instance"] = instance_header(o, true);
        ordered_json s;
        ordered_json pts = ordered_json::array();
        for (int p = 0; p < sp.point_count(); ++p) {
            ordered_json e;
            e["id"] = sp.points[p];
            e["label"] = submodule_label(*lat, sp.points[p]);
            pts.push_back(e);
        }
        s["points"] = pts;
        ordered_json sb = ordered_json::array();
        for (std::size_t i = 0; i < sp.subbasis.size(); ++i) {
            ordered_json e;
            ordered_json wit = ordered_json::array();
            for (int n : sp.witnesses[i]) wit.push_back(submodule_label(*lat, n));
            e["witnesses"] = wit;
            ordered_json members = ordered_json::array();
            for (std::size_t p : sp.subbasis[i].bits()) members.push_back(p);
            e["points"] = members;
            sb.push_back(e);
        }
        s["subbasis"] = sb;
        s["separation"] = {{"t0", sep.t0}, {"t1", sep.t1}, {"sober", sep.sober}};
        s["spectral"] = spectral;
        s["connected"] = connected;
        ordered_json tj;
        tj["is_top"] = top.is_top;
        if (top.witness)
            tj["witness"] = {submodule_label(*lat, top.witness->first),
                             submodule_label(*lat, top.witness->second)};
        s["top"] = tj;
        if (sd) {
            ordered_json a = ordered_json::array(), b = ordered_json::array();
            for (std::size_t p : sd->first.bits()) a.push_back(p);
            for (std::size_t p : sd->second.bits()) b.push_back(p);
            s["strong_disconnection"] = {{"a", a}, {"b", b}};
        } else {
            s["strong_disconnection"] = nullptr;
        }
        ordered_json spec = ordered_json::array();
        for (auto [p, q] : specialization_preorder(sp))
            if (p != q) spec.push_back({p, q});
        s["specialization"] = spec;
        j["space"] = s;
        emit(j.dump(2), o.out);
        return 0;
    }

    std::string t = "D(" + title + ")\n";
    t += "points: " + std::to_string(sp.point_count()) + "\n";
    for (int p = 0; p < sp.point_count(); ++p)
        t += "  [" + std::to_string(p) + "] " + submodule_label(*lat, sp.points[p]) + "\n";
    t += "distinct subbasis sets: " + std::to_string(sp.subbasis.size()) + "\n";
    t += std::string("separation: t0=") + (sep.t0 ? "yes" : "no") +
         " t1=" + (sep.t1 ? "yes" : "no") + " sober=" + (sep.sober ? "yes" : "no") + "\n";
    t += std::string("spectral: ") + (spectral ? "yes" : "no") + "\n";
    t += std::string("connected: ") + (connected ? "yes" : "no") + "\n";
    if (top.is_top) {
        t += "top module: yes\n";
    } else {
        t += "top module: no (C(" + submodule_label(*lat, top.witness->first) + ") union C(" +
             submodule_label(*lat, top.witness->second) + ") is not a subbasis set)\n";
    }
    if (sd) {
        auto part = [&](const PointSet& x) {
            std::string r;
            for (std::size_t p : x.bits())
                r += (r.empty() ? "" : ", ") + submodule_label(*lat, sp.points[p]);
            return "{" + r + "}";
        };
        t += "strong disconnection: " + part(sd->first) + " | " + part(sd->second) + "\n";
    } else {
        t += "strong disconnection: none\n";
    }
    emit(t, o.out);
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const Options& o, bool have_ring) {
    harness::Corpus corpus;
    if (have_ring) {
        corpus.modules = {{o.ring, o.orders}};
        corpus.include_homs = false;
    } else {
        corpus = harness::default_corpus();
    }
    corpus.seed = o.seed;
    corpus.caps = caps_of(o);
    if (o.cls != "all") corpus.only_class = class_of(o.cls);

    std::vector<harness::CheckResult> results = harness::run_all(corpus);
    bool any_fail = false;
    for (const auto& r : results) any_fail = any_fail || r.verdict == harness::Verdict::fail;

    if (o.format == "json") {
        emit(harness::report_json(results, corpus).dump(2), o.out);
    } else {
        ordered_json sum = harness::summary_json(results);
        std::string t = std::string(harness::kToolVersion) + "\n";
        t += "corpus: " + std::to_string(corpus.modules.size()) + " modules, seed " +
             std::to_string(corpus.seed) + "\n";
        t += "checks: total=" + sum["total"].dump() + " pass=" + sum["pass"].dump() +
             " fail=" + sum["fail"].dump() +
             " hypothesis-not-met=" + sum["hypothesis-not-met"].dump() +
             " skipped=" + sum["skipped"].dump() + "\n";
        for (const auto& r : results) {
            if (r.verdict == harness::Verdict::pass) continue;
            if (r.verdict == harness::Verdict::hypothesis_not_met) continue;
            t += std::string(harness::verdict_name(r.verdict)) + ": " + r.statement_id + " @ " +
                 harness::instance_name(r.instance) + (r.witness.empty() ? "" : ": " + r.witness) +
                 "\n";
        }
        emit(t, o.out);
    }
    return any_fail ? 1 : 0;
}

// ---------------------------------------------------------------------------
// hom
// ---------------------------------------------------------------------------

int run_hom(const Options& o) {
    ClassName cls = class_of(o.cls);
    Ring ring = make_ring(o.ring);
    Module src = make_module(ring, o.src);
    Module dst = make_module(ring, o.dst);
    Hom h = make_hom(src, dst, parse_images(o.images));
    LatticePtr src_lat = enumerate_submodules(src, caps_of(o));
    LatticePtr dst_lat = enumerate_submodules(dst, caps_of(o));
    ConmapReport rep = verify_conmap(h, cls, src_lat, dst_lat);
    bool ok = rep.contraction.holds && rep.all_hold();

    if (o.format == "json") {
        ordered_json j;
        j["tool_version"] = std::string(harness::kToolVersion);
        ordered_json inst;
        inst["ring"] = o.ring;
        inst["src"] = o.src;
        inst["dst"] = o.dst;
        ordered_json ims = ordered_json::array();
        for (unsigned gi : h.gen_images) ims.push_back(element_label(dst, gi));
        inst["images"] = ims;
        inst["class"] = o.cls;
        j["instance"] = inst;
        ordered_json r;
        r["well_defined"] = rep.well_defined;
        r["surjective"] = rep.surjective;
        r["injective"] = h.is_injective();
        r["kernel"] = submodule_label(*src_lat, src_lat->id_of(kernel(h)));
        r["image"] = submodule_label(*dst_lat, dst_lat->id_of(image(h)));
        ordered_json con;
        con["holds"] = rep.contraction.holds;
        if (rep.contraction.witness)
            con["witness"] = submodule_label(*dst_lat, *rep.contraction.witness);
        r["contraction"] = con;
        ordered_json ids = ordered_json::array();
        for (const auto& ic : rep.identities) {
            ordered_json e;
            e["name"] = ic.name;
            e["applicable"] = ic.applicable;
            e["holds"] = ic.holds;
            if (!ic.witness.empty()) e["witness"] = ic.witness;
            ids.push_back(e);
        }
        r["identities"] = ids;
        if (rep.contraction.holds) r["dense"] = rep.dense;
        j["report"] = r;
        emit(j.dump(2), o.out);
        return ok ? 0 : 1;
    }

    std::string t = "hom " + harness::module_name(o.ring, o.src) + " -> " +
                    harness::module_name(o.ring, o.dst) + ", class " + o.cls + "\n";
    t += std::string("surjective: ") + (rep.surjective ? "yes" : "no") +
         ", injective: " + (h.is_injective() ? "yes" : "no") + "\n";
    t += "kernel: " + submodule_label(*src_lat, src_lat->id_of(kernel(h))) +
         ", image: " + submodule_label(*dst_lat, dst_lat->id_of(image(h))) + "\n";
    if (!rep.contraction.holds) {
        t += "contraction property: FAILS";
        if (rep.contraction.witness)
            t += " (preimage of " + submodule_label(*dst_lat, *rep.contraction.witness) +
                 " leaves the class)";
        t += "\nno induced map; identity checks skipped\n";
        emit(t, o.out);
        return 1;
    }
    t += "contraction property: holds\n";
    for (const auto& ic : rep.identities) {
        t += "  " + ic.name + ": ";
        if (!ic.applicable)
            t += "n/a";
        else
            t += ic.holds ? "ok" : ("FAIL" + (ic.witness.empty() ? "" : " (" + ic.witness + ")"));
        t += "\n";
    }
    t += std::string("dense image: ") + (rep.dense ? "yes" : "no") + "\n";
    emit(t, o.out);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite module structure spaces: submodule lattices, distinguished "
                 "classes, topology reports, statement verification"};
    app.require_subcommand(1);

    Options o;
    auto add_caps = [&](CLI::App* c) {
        c->add_option("--max-elements", o.max_elements, "module size cap");
        c->add_option("--max-submodules", o.max_submodules, "lattice size cap");
        c->add_option("--out", o.out, "write output to a file instead of stdout");
    };

    CLI::App* inspect = app.add_subcommand("inspect", "list submodules and class membership");
    inspect->add_option("--ring", o.ring, "ring modulus n")->required();
    inspect->add_option("--orders", o.orders, "cyclic factor orders")
        ->delimiter(',')
        ->required();
    inspect->add_option("--format", o.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    add_caps(inspect);

    CLI::App* space = app.add_subcommand("space", "report one structure space");
    space->add_option("--ring", o.ring, "ring modulus n")->required();
    space->add_option("--orders", o.orders, "cyclic factor orders")->delimiter(',')->required();
    space->add_option("--class", o.cls, "distinguished class")->required();
    space->add_option("--format", o.format, "text|json|dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    add_caps(space);

    CLI::App* verify = app.add_subcommand("verify", "verify the statement suite");
    CLI::Option* vring = verify->add_option("--ring", o.ring, "ring modulus n");
    verify->add_option("--orders", o.orders, "cyclic factor orders")
        ->delimiter(',')
        ->needs(vring);
    verify->add_option("--class", o.cls, "distinguished class or 'all'");
    verify->add_option("--format", o.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--seed", o.seed, "seed for sampled families");
    add_caps(verify);

    CLI::App* hom = app.add_subcommand("hom", "verify the induced map of one homomorphism");
    hom->add_option("--ring", o.ring, "ring modulus n")->required();
    hom->add_option("--src", o.src, "source factor orders")->delimiter(',')->required();
    hom->add_option("--dst", o.dst, "target factor orders")->delimiter(',')->required();
    hom->add_option("--images", o.images,
                    "generator images, tuples ';'-separated, coordinates ','-separated");
    hom->add_option("--class", o.cls, "distinguished class")->required();
    hom->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    add_caps(hom);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*inspect) return run_inspect(o);
        if (*space) return run_space(o);
        if (*verify) {
            if (vring->count() == 0 && !o.orders.empty())
                throw input_error("--orders requires --ring");
            if (vring->count() > 0 && o.orders.empty()) o.orders = {o.ring};
            return run_verify(o, vring->count() > 0);
        }
        if (*hom) return run_hom(o);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const cap_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
