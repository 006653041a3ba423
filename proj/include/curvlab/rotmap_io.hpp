#ifndef CURVLAB_ROTMAP_IO_HPP
#define CURVLAB_ROTMAP_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "curvlab/planar_map.hpp"

namespace curvlab {

// rotmap text format:
//   header line "rotmap 1", then one line per vertex
//     vID: nbr nbr nbr ...
//   listing the neighbors counterclockwise. Blank lines and lines starting
//   with '#' are ignored. Vertex ids are decimal integers.
// The emitter writes vertices in ascending id, single-space separated, with
// LF line endings.

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

class write_error : public std::runtime_error {
public:
    explicit write_error(const std::string& what) : std::runtime_error(what) {}
};

PlanarMap read_rotmap(std::istream& in);
PlanarMap read_rotmap_file(const std::string& path);
void write_rotmap(const PlanarMap& m, std::ostream& out);
void write_rotmap_file(const PlanarMap& m, const std::string& path);
std::string rotmap_string(const PlanarMap& m);

// Graphviz export of the underlying graph (neato-friendly).
void write_dot(const PlanarMap& m, std::ostream& out);
void write_dot_file(const PlanarMap& m, const std::string& path);

} // namespace curvlab

#endif
