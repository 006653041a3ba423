#include "curvlab/cli.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "curvlab/admissible.hpp"
#include "curvlab/chains.hpp"
#include "curvlab/curvature.hpp"
#include "curvlab/generators.hpp"
#include "curvlab/lp.hpp"
#include "curvlab/pairing.hpp"
#include "curvlab/rotmap_io.hpp"

namespace curvlab {

namespace {

int usage() {
    std::cerr <<
        "usage: curvlab <command> [options]\n"
        "  gen <prism N | antiprism N | g208 | gN N | quilt208 | multi10 | multi11>\n"
        "      [--out file.rot] [--dot file.dot]\n"
        "  audit <file.rot> [--format text|json]\n"
        "  discharge --input <file.rot> [--report out.json] [--per-face] [--refine]\n"
        "  chains <file.rot> [--format text|json]\n"
        "  surgery <file.rot> --chain <index> --out <file.rot>\n"
        "  table [--json]\n"
        "  lp --scenarios <file> [--weights <file>] [--optimize]\n";
    return 2;
}

struct Args {
    std::vector<std::string> pos;
    std::map<std::string, std::string> opt;
    std::set<std::string> flags;
};

Args split_args(const std::vector<std::string>& args, const std::set<std::string>& value_opts) {
    Args a;
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& s = args[i];
        if (s.rfind("--", 0) == 0) {
            if (value_opts.count(s)) {
                if (i + 1 >= args.size()) throw lp_error("missing value for " + s);
                a.opt[s] = args[++i];
            } else {
                a.flags.insert(s);
            }
        } else {
            a.pos.push_back(s);
        }
    }
    return a;
}

PlanarMap generate(const std::vector<std::string>& spec) {
    if (spec.empty()) throw generator_error("missing generator name");
    const std::string& kind = spec[0];
    auto arg = [&](size_t i) {
        if (spec.size() <= i) throw generator_error(kind + " needs a size argument");
        return std::stoi(spec[i]);
    };
    if (kind == "prism") return prism(arg(1));
    if (kind == "antiprism") return antiprism(arg(1));
    if (kind == "g208") return graph208_chain();
    if (kind == "gN") return g_family(arg(1));
    if (kind == "quilt208") return graph208_quilt();
    if (kind == "multi10") return multi_incidence_example(10);
    if (kind == "multi11") return multi_incidence_example(11);
    throw generator_error("unknown generator '" + kind + "'");
}

nlohmann::json rational_json(const Rational& r) {
    return {{"exact", r.str()}, {"approx", r.approx()}};
}

int cmd_gen(const Args& a) {
    PlanarMap m = generate(a.pos);
    if (a.opt.count("--out"))
        write_rotmap_file(m, a.opt.at("--out"));
    else
        write_rotmap(m, std::cout);
    if (a.opt.count("--dot")) write_dot_file(m, a.opt.at("--dot"));
    return 0;
}

int cmd_audit(const Args& a) {
    if (a.pos.empty()) return usage();
    PlanarMap m = read_rotmap_file(a.pos[0]);
    AuditReport rep = global_audit(m);
    if (a.opt.count("--format") && a.opt.at("--format") == "json")
        std::cout << rep.json() << "\n";
    else
        std::cout << rep.text();
    return rep.pass() ? 0 : 1;
}

int cmd_discharge(const Args& a) {
    if (!a.opt.count("--input")) return usage();
    PlanarMap m = read_rotmap_file(a.opt.at("--input"));
    Pairing p = build_pairing(m);
    AuditReport rep = global_audit(m, p);

    nlohmann::json j;
    j["verdict"] = rep.pass() ? "pass" : "fail";
    j["vertices"] = m.vertex_count();
    j["pairing"] = nlohmann::json::array();
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
        for (const auto& e : p.rows[v]) {
            nlohmann::json je;
            je["vertex"] = v;
            je["target"] = e.target.str();
            je["value"] = rational_json(e.value);
            je["rule"] = e.rule;
            j["pairing"].push_back(je);
        }
    }
    if (a.flags.count("--per-face")) {
        j["targets"] = nlohmann::json::array();
        for (const auto& t : p.targets()) {
            auto fc = face_contribution(m, p, t);
            nlohmann::json jt;
            jt["target"] = t.str();
            if (t.kind == DischargeTarget::Face) jt["size"] = m.face_size(t.face);
            jt["mass"] = rational_json(fc.mass);
            jt["c"] = rational_json(fc.c);
            jt["c_plus"] = rational_json(fc.c_plus);
            jt["c_minus"] = rational_json(fc.c_minus);
            j["targets"].push_back(jt);
        }
    }
    if (a.flags.count("--refine")) {
        j["refinements"] = nlohmann::json::array();
        for (const auto& t : p.targets()) {
            if (t.kind != DischargeTarget::Face) continue;
            int size = m.face_size(t.face);
            if (size < 14 || size > 41 || size == 19) continue;
            auto fc = face_contribution(m, p, t);
            if (fc.mass.is_zero()) continue;
            auto ref = edge_refinement(m, p, t.face);
            nlohmann::json jr;
            jr["face"] = t.face;
            jr["size"] = size;
            jr["total"] = rational_json(ref.total);
            jr["matches_c"] = (ref.total == fc.c);
            jr["edges"] = nlohmann::json::array();
            for (size_t i = 0; i < ref.edges.size(); ++i) {
                nlohmann::json je;
                je["edge"] = ref.edges[i];
                je["c"] = rational_json(ref.edge_c[i]);
                jr["edges"].push_back(je);
            }
            if (ref.has_bucket) jr["bucket"] = rational_json(ref.bucket_c);
            j["refinements"].push_back(jr);
        }
    }
    j["report"] = nlohmann::json::parse(rep.json());
    if (a.opt.count("--report")) {
        std::ofstream out(a.opt.at("--report"));
        out << j.dump(2) << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return rep.pass() ? 0 : 1;
}

int cmd_chains(const Args& a) {
    if (a.pos.empty()) return usage();
    PlanarMap m = read_rotmap_file(a.pos[0]);
    auto chains = find_chains(m);
    nlohmann::json j;
    j["count"] = chains.size();
    j["chains"] = nlohmann::json::array();
    for (const auto& c : chains) {
        nlohmann::json jc;
        jc["length"] = c.length();
        jc["closed"] = c.closed;
        jc["triangles"] = c.triangles;
        jc["support_vertices"] = c.support_vertices(m).size();
        jc["support_edges"] = c.support_edges(m).size();
        j["chains"].push_back(jc);
    }
    if (a.opt.count("--format") && a.opt.at("--format") == "text") {
        for (const auto& c : chains)
            std::cout << (c.closed ? "closed" : "open") << " chain of length " << c.length()
                      << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_surgery(const Args& a) {
    if (a.pos.empty() || !a.opt.count("--out")) return usage();
    PlanarMap m = read_rotmap_file(a.pos[0]);
    auto chains = find_chains(m);
    size_t idx = a.opt.count("--chain") ? std::stoul(a.opt.at("--chain")) : 0;
    if (idx >= chains.size()) throw chain_error("chain index out of range");
    PlanarMap result = chain_surgery(m, chains[idx]);
    write_rotmap_file(result, a.opt.at("--out"));
    std::cout << "vertices: " << result.vertex_count() << "\n";
    return 0;
}

int cmd_table(const Args& a) {
    auto fams = enumerate_admissible();
    if (a.flags.count("--json")) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& f : fams) {
            nlohmann::json jf;
            jf["fixed"] = f.fixed;
            if (f.mid) jf["mid"] = {{"lo", f.mid->first}, {"hi", f.mid->second}};
            if (f.has_free) {
                jf["lo"] = f.lo;
                if (f.hi) jf["hi"] = *f.hi;
            }
            jf["text"] = f.text();
            j.push_back(jf);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& f : fams) std::cout << f.text() << "\n";
    }
    return 0;
}

int cmd_lp(const Args& a) {
    if (!a.opt.count("--scenarios")) return usage();
    ScenarioSet set = load_scenarios(a.opt.at("--scenarios"));
    WeightSet w = set.weights;
    if (a.opt.count("--weights")) load_weights(a.opt.at("--weights"), w);
    if (a.flags.count("--optimize")) {
        auto r = solve_scenarios(set);
        std::cout << (r.feasible ? "feasible" : "infeasible") << "\n";
        std::cout << "margin: " << r.margin.str() << " (" << r.margin.approx() << ")\n";
        std::cout << "certified: " << (r.certified ? "yes" : "no") << "\n";
        for (const auto& [name, value] : r.weights.values)
            std::cout << "  " << name << " = " << value.str() << "\n";
        if (!r.infeasible_core.empty()) {
            std::cout << "irreducible violated subset:\n";
            for (const auto& id : r.infeasible_core) std::cout << "  " << id << "\n";
        }
        return r.feasible ? 0 : 1;
    }
    auto rep = verify_weights(set, w);
    for (const auto& c : rep.cases) {
        std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.id << "  margin " << c.margin.str()
                  << " (" << c.margin.approx() << ")";
        if (c.quoted_margin)
            std::cout << "  tabulated " << c.quoted_margin->str() << " ("
                      << c.quoted_margin->approx() << ")";
        std::cout << "\n";
    }
    std::cout << "min margin: " << rep.min_margin.str() << " (" << rep.min_margin.approx()
              << ")\n";
    return rep.feasible ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args) {
    if (args.empty()) return usage();
    const std::string& cmd = args[0];
    std::vector<std::string> rest(args.begin() + 1, args.end());
    const std::set<std::string> value_opts{"--out", "--dot", "--format", "--input",
                                           "--report", "--chain", "--scenarios", "--weights"};
    try {
        Args a = split_args(rest, value_opts);
        if (cmd == "gen") return cmd_gen(a);
        if (cmd == "audit") return cmd_audit(a);
        if (cmd == "discharge") return cmd_discharge(a);
        if (cmd == "chains") return cmd_chains(a);
        if (cmd == "surgery") return cmd_surgery(a);
        if (cmd == "table") return cmd_table(a);
        if (cmd == "lp") return cmd_lp(a);
        return usage();
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const lp_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace curvlab
