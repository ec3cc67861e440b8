#ifndef UFD_CURVE_IO_HPP
#define UFD_CURVE_IO_HPP

#include <string>

#include "ufd/curves.hpp"

namespace ufd {

// JSON curve format:
//   {"dim": 2, "vertices": [V, ...]}
// where each vertex V is one of
//   [x, y, ...]                                   shorthand for a point
//   {"kind": "point",   "x": [..]}
//   {"kind": "options", "options": [[..], [..]]}
//   {"kind": "disk",    "center": [..], "radius": r}
//   {"kind": "segment", "a": [..], "b": [..]}
// Doubles round-trip bit exactly.  Parse errors name the offending vertex.

uncertain_curve parse_uncertain_curve(const std::string& text);
// Accepts only curves whose vertices are all points.
poly_curve parse_poly_curve(const std::string& text);

std::string format_curve(const uncertain_curve& u);
std::string format_curve(const poly_curve& c);

uncertain_curve load_uncertain_curve(const std::string& path);
poly_curve load_poly_curve(const std::string& path);
void save_curve(const std::string& path, const uncertain_curve& u);
void save_curve(const std::string& path, const poly_curve& c);

}  // namespace ufd

#endif
