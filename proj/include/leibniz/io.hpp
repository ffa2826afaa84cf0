#pragma once

#include <optional>
#include <string>

#include "leibniz/algebra.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

/// An algebra file: the multiplication table plus optional annotations
/// (known solvable radical / nilradical bases, Lie flag).
struct AlgebraDoc {
  LeibnizAlgebra algebra;
  std::optional<Subspace> solvable_radical;
  std::optional<Subspace> nilradical;
  std::optional<bool> is_lie;
};

/// Strict JSON reader. Indices are 1-based, rationals are strings, unlisted
/// products are zero. Duplicate (left,right) bracket keys, duplicate result
/// indices, unknown fields, and out-of-range indices are rejected with a
/// ParseError carrying the origin and field context. The Leibniz identity is
/// validated unless the file sets "unchecked": true.
AlgebraDoc parse_algebra(const std::string& text, const std::string& origin);
AlgebraDoc load_algebra(const std::string& path);

/// Canonical form: alphabetical keys, brackets sorted by (left,right),
/// result terms sorted by index, canonical rational strings, two-space
/// indent, trailing newline. render(parse(f)) == f for canonical files.
std::string render_algebra(const AlgebraDoc& doc);
void save_algebra(const AlgebraDoc& doc, const std::string& path);

/// Matrix files: {"cols": c, "entries": [[rational-string row]..], "rows": r}.
Matrix parse_matrix(const std::string& text, const std::string& origin);
Matrix load_matrix(const std::string& path);
std::string render_matrix(const Matrix& m);
void save_matrix(const Matrix& m, const std::string& path);

/// Matrix file read as basis rows of a subspace of Q^cols.
Subspace load_subspace(const std::string& path);

}  // namespace leibniz
