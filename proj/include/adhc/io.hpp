#pragma once

#include "adhc/digraph.hpp"
#include "adhc/walk.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace adhc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text format: line 1 "N M", then M lines "u v" (arc u -> v, 0-indexed).
// Lines starting with '#' are comments.  Serialization is canonical: arcs
// deduplicated and sorted lexicographically.
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);
std::string serialize_digraph(const Digraph& d);

// Certificate format: line 1 is one of "adhc", "adp", "2factor", "dhc"; then
// one line per walk: space-separated vertices, '|', orientation bits as
// '+'/'-'.
enum class CertKind { adhc, adp, two_factor, dhc };

struct Certificate {
    CertKind kind = CertKind::adhc;
    std::vector<OrientedWalk> walks;
};

Certificate parse_certificate(std::istream& in);
Certificate parse_certificate(const std::string& text);
std::string serialize_certificate(const Certificate& c);

// Checks a certificate against its host digraph with the predicates implied
// by its kind (adhc: spanning anti-directed cycle; adp: anti-directed path;
// 2factor: anti-directed 2-factor; dhc: spanning directed cycle).
Verdict verify_certificate(const Digraph& d, const Certificate& c);

std::string to_dot(const Digraph& d);

Digraph read_digraph_file(const std::string& path); // "-" reads stdin
void write_file(const std::string& path, const std::string& content);

} // namespace adhc
