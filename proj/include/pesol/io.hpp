#pragma once

#include <iosfwd>
#include <string>

#include "pesol/algebra.hpp"
#include "pesol/construct.hpp"
#include "pesol/solution.hpp"

namespace pesol {

enum class Format { pesol, json };

/// PESOL v1 text format: line 1 "PESOL 1"; line 2 n; then n product rows and
/// n theta rows, each n space-separated 0-based entries. Round trips are
/// bit-exact. The json encoding mirrors the same fields verbatim:
/// {"format":"PESOL","version":1,"n":...,"product":[...],"theta":[...]}.
/// Readers autodetect the encoding; parse errors report line numbers.
RawTables read_raw_tables(std::istream& in);
Solution read_solution(std::istream& in);
void write_tables(std::ostream& out, const RawTables& t, Format f = Format::pesol);
void write_solution(std::ostream& out, const Solution& s, Format f = Format::pesol);

/// Semigroup file: line 1 n, then the n Cayley-table rows.
Semigroup read_semigroup(std::istream& in);

/// Permutations serialize as whitespace-separated 0-based image lists.
Permutation parse_permutation(const std::string& line);
std::string format_permutation(const Permutation& p);

/// Cocycle file: header "|G| |X|", then |G|^2 permutations of X, one per
/// line, (a,b) in row-major order. The header order must match `g`.
Cocycle read_cocycle(std::istream& in, const GroupTable& g);

/// Sigma file: header "|G| |X|", then |G| permutations of X, one per line.
SigmaFamily read_sigma(std::istream& in, const GroupTable& g);

}  // namespace pesol
