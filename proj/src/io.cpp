#include "adhc/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace adhc {

namespace {

// Strips comments and blank lines; returns the next payload line.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto end = line.find_last_not_of(" \t\r");
        if (end == std::string::npos) continue;
        line.erase(end + 1);
        return true;
    }
    return false;
}

} // namespace

Digraph parse_digraph(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("empty input");
    std::istringstream hdr(line);
    long long n = -1, m = -1;
    if (!(hdr >> n >> m) || n < 0 || m < 0) throw ParseError("malformed header, expected 'N M'");
    std::string trailing;
    if (hdr >> trailing) throw ParseError("malformed header, expected 'N M'");

    Digraph d((int)n);
    for (long long i = 0; i < m; ++i) {
        if (!next_line(in, line)) throw ParseError("expected " + std::to_string(m) + " arcs, got " + std::to_string(i));
        std::istringstream row(line);
        long long u, v;
        if (!(row >> u >> v)) throw ParseError("malformed arc line: " + line);
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("vertex id out of range: " + line);
        if (u == v) throw ParseError("loop arc rejected: " + line);
        d.add_arc((int)u, (int)v);
    }
    return d;
}

Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

std::string serialize_digraph(const Digraph& d) {
    auto arcs = d.arcs(); // emitted in (u, v) lexicographic order already
    std::ostringstream out;
    out << d.order() << ' ' << arcs.size() << '\n';
    for (auto [u, v] : arcs) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

const char* kind_name(CertKind k) {
    switch (k) {
        case CertKind::adhc: return "adhc";
        case CertKind::adp: return "adp";
        case CertKind::two_factor: return "2factor";
        case CertKind::dhc: return "dhc";
    }
    return "?";
}

} // namespace

Certificate parse_certificate(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("empty certificate");
    Certificate c;
    if (line == "adhc")
        c.kind = CertKind::adhc;
    else if (line == "adp")
        c.kind = CertKind::adp;
    else if (line == "2factor")
        c.kind = CertKind::two_factor;
    else if (line == "dhc")
        c.kind = CertKind::dhc;
    else
        throw ParseError("unknown certificate kind: " + line);

    bool cycle_kind = c.kind != CertKind::adp;
    while (next_line(in, line)) {
        auto bar = line.find('|');
        if (bar == std::string::npos) throw ParseError("certificate walk missing '|'");
        OrientedWalk w;
        w.kind = cycle_kind ? OrientedWalk::Kind::cycle : OrientedWalk::Kind::path;
        std::istringstream vs(line.substr(0, bar));
        long long v;
        while (vs >> v) w.verts.push_back((int)v);
        for (char ch : line.substr(bar + 1)) {
            if (ch == ' ' || ch == '\t') continue;
            if (ch == '+')
                w.bits.push_back(1);
            else if (ch == '-')
                w.bits.push_back(0);
            else
                throw ParseError(std::string("bad orientation character: ") + ch);
        }
        c.walks.push_back(std::move(w));
    }
    if (c.walks.empty()) throw ParseError("certificate has no walks");
    return c;
}

Certificate parse_certificate(const std::string& text) {
    std::istringstream in(text);
    return parse_certificate(in);
}

std::string serialize_certificate(const Certificate& c) {
    std::ostringstream out;
    out << kind_name(c.kind) << '\n';
    for (const auto& w : c.walks) {
        for (size_t i = 0; i < w.verts.size(); ++i) out << w.verts[i] << ' ';
        out << '|';
        for (auto b : w.bits) out << (b ? '+' : '-');
        out << '\n';
    }
    return out.str();
}

Verdict verify_certificate(const Digraph& d, const Certificate& c) {
    switch (c.kind) {
        case CertKind::adhc: {
            if (c.walks.size() != 1) return {false, "adhc certificate needs exactly one cycle"};
            WalkRequire req;
            req.anti_directed = true;
            req.spanning = true;
            return verify_walk(d, c.walks[0], req);
        }
        case CertKind::adp: {
            if (c.walks.size() != 1) return {false, "adp certificate needs exactly one path"};
            WalkRequire req;
            req.anti_directed = true;
            return verify_walk(d, c.walks[0], req);
        }
        case CertKind::dhc: {
            if (c.walks.size() != 1) return {false, "dhc certificate needs exactly one cycle"};
            WalkRequire req;
            req.directed = true;
            req.spanning = true;
            return verify_walk(d, c.walks[0], req);
        }
        case CertKind::two_factor: {
            TwoFactorCert tf;
            tf.cycles = c.walks;
            return verify_two_factor(d, tf);
        }
    }
    return {false, "unknown kind"};
}

std::string to_dot(const Digraph& d) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (int v = 0; v < d.order(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

Digraph read_digraph_file(const std::string& path) {
    if (path == "-") return parse_digraph(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return parse_digraph(in);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

} // namespace adhc
