#pragma once

#include <iosfwd>
#include <string>

#include "graphdeblur/sparse.hpp"

namespace graphdeblur::mtx {

// Coordinate real format, 1-based indices, %.17g values. Symmetric matrices
// are written with the `symmetric` qualifier and only their lower triangle.
void write(std::ostream& os, const SparseMatrix& m);
void write_file(const std::string& path, const SparseMatrix& m);

// Accepts coordinate real/integer/pattern with general or symmetric storage.
// Symmetric input is expanded and tagged symmetric.
SparseMatrix read(std::istream& is);
SparseMatrix read_file(const std::string& path);

}  // namespace graphdeblur::mtx
