#ifndef COHERE_CCM_IO_HPP_
#define COHERE_CCM_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "cohere/color_matrix.hpp"

namespace cohere {

// The .ccm text format:
//
//   n r
//   c(0,0) c(0,1) ... c(0,n-1)
//   ...
//
// '#' starts a comment running to end of line; blank lines are ignored.
// The declared rank must match the colors actually present.
ColorMatrix parse_ccm(std::string_view text);
ColorMatrix read_ccm(std::istream& in);
ColorMatrix load_ccm(const std::string& path);

// Writes the canonical byte form: header line, then one line per row with
// single spaces and a trailing newline. parse_ccm(format_ccm(m)) == m.
std::string format_ccm(const ColorMatrix& m);
void write_ccm(std::ostream& out, const ColorMatrix& m);
void save_ccm(const std::string& path, const ColorMatrix& m);

}  // namespace cohere

#endif  // COHERE_CCM_IO_HPP_
