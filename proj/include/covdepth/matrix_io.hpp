#ifndef COVDEPTH_MATRIX_IO_HPP
#define COVDEPTH_MATRIX_IO_HPP

#include <iosfwd>
#include <string>

#include "covdepth/expectation.hpp"

namespace covdepth {

/// Matrix file format: a header line "q k n", then k lines of n entries in
/// [0, q-1] (base-p polynomial encoding for extension fields). Lines
/// starting with '#' are comments. Throws ParseError on malformed input.
GeneratorMatrix read_matrix(std::istream& in);
GeneratorMatrix read_matrix_file(const std::string& path);

}  // namespace covdepth

#endif
