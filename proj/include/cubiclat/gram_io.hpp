#pragma once

#include <iosfwd>
#include <string>

#include "cubiclat/lattice.hpp"

namespace cubiclat {

// Text documents for Gram matrices.  '#' starts a comment that runs to end of
// line; CR/LF and arbitrary whitespace are tolerated; integers only.
//
// Z-lattice document:
//   rank 3
//   gram
//   1 0 0
//   0 1 0
//   0 0 1
//
// O_K-lattice document (entries are x y z coordinate triples, row-major):
//   family shanks
//   a 7
//   rank 1
//   okgram
//   1 0 0

GramMatrix read_gram(std::istream& in);
GramMatrix read_gram_file(const std::string& path);
void write_gram(std::ostream& out, const GramMatrix& G);

OKGramMatrix read_ok_gram(std::istream& in);
OKGramMatrix read_ok_gram_file(const std::string& path);
void write_ok_gram(std::ostream& out, const OKGramMatrix& L);

} // namespace cubiclat
