#include "curvlab/rotmap_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace curvlab {

PlanarMap read_rotmap(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    std::map<long, std::vector<long>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t i = line.find_first_not_of(" \t");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        if (!header_seen) {
            std::istringstream hs(line);
            std::string word;
            int version = 0;
            if (!(hs >> word >> version) || word != "rotmap" || version != 1)
                throw parse_error("expected header 'rotmap 1'", lineno, 1);
            header_seen = true;
            continue;
        }
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error("missing ':' in vertex line", lineno, static_cast<int>(line.size()));
        std::string head = line.substr(0, colon);
        long v;
        {
            std::istringstream hs(head);
            std::string tok;
            if (!(hs >> tok)) throw parse_error("missing vertex id", lineno, 1);
            if (tok.size() > 1 && tok[0] == 'v') tok = tok.substr(1);
            try {
                size_t used = 0;
                v = std::stol(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw parse_error("bad vertex id '" + tok + "'", lineno, 1);
            }
            std::string extra;
            if (hs >> extra) throw parse_error("unexpected token before ':'", lineno, static_cast<int>(colon));
        }
        if (v < 0) throw parse_error("negative vertex id", lineno, 1);
        if (rows.count(v)) throw parse_error("vertex " + std::to_string(v) + " listed twice", lineno, 1);
        std::vector<long> nbrs;
        std::istringstream body(line.substr(colon + 1));
        std::string tok;
        while (body >> tok) {
            if (tok.size() > 1 && tok[0] == 'v') tok = tok.substr(1);
            try {
                size_t used = 0;
                long w = std::stol(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                nbrs.push_back(w);
            } catch (const std::exception&) {
                throw parse_error("bad neighbor token '" + tok + "'", lineno, static_cast<int>(colon + 2));
            }
        }
        rows.emplace(v, std::move(nbrs));
    }
    if (!header_seen) throw parse_error("missing 'rotmap 1' header", lineno ? lineno : 1, 1);
    if (rows.empty()) throw parse_error("no vertex lines", lineno, 1);

    // ids may be sparse in files; build() wants dense ids in input order
    std::map<long, int> dense;
    for (auto& [v, _] : rows) dense.emplace(v, static_cast<int>(dense.size()));
    std::vector<std::vector<VertexId>> lists(rows.size());
    for (auto& [v, nbrs] : rows) {
        auto& l = lists[dense[v]];
        for (long w : nbrs) {
            auto it = dense.find(w);
            if (it == dense.end())
                throw parse_error("vertex " + std::to_string(v) + " references undeclared neighbor " +
                                      std::to_string(w),
                                  0, 0);
            l.push_back(it->second);
        }
    }
    return PlanarMap::build(lists);
}

PlanarMap read_rotmap_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'", 0, 0);
    return read_rotmap(in);
}

void write_rotmap(const PlanarMap& m, std::ostream& out) {
    out << "rotmap 1\n";
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
        out << v << ":";
        for (VertexId w : m.neighbors(v)) out << ' ' << w;
        out << '\n';
    }
}

void write_rotmap_file(const PlanarMap& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw write_error("cannot open '" + path + "' for writing");
    write_rotmap(m, out);
    out.flush();
    if (!out) throw write_error("write to '" + path + "' failed");
}

std::string rotmap_string(const PlanarMap& m) {
    std::ostringstream os;
    write_rotmap(m, os);
    return os.str();
}

void write_dot(const PlanarMap& m, std::ostream& out) {
    out << "graph map {\n  node [shape=point];\n";
    for (EdgeId e = 0; e < m.edge_count(); ++e) {
        auto vs = m.everts(e);
        out << "  " << vs[0] << " -- " << vs[1] << ";\n";
    }
    out << "}\n";
}

void write_dot_file(const PlanarMap& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw write_error("cannot open '" + path + "' for writing");
    write_dot(m, out);
}

} // namespace curvlab
