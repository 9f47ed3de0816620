#pragma once

#include <istream>
#include <string>

#include "sigcol/reduction.hpp"
#include "sigcol/signed.hpp"

namespace sigcol {

/// Signed edge list:
///
///     # comment
///     n 3
///     0 1 +
///     1 2 -
///
/// The "n" line comes first; the sign column may be omitted (defaults to +).
SignedGraph read_signed_graph(std::istream& in);
std::string write_signed_graph(const SignedGraph& sg);

/// One line per vertex, "v: a b" with 1 <= a < b. Every vertex 0..n-1 must
/// appear exactly once (MissingList / InvalidList otherwise).
ListAssignment read_list_assignment(std::istream& in, int n);

/// Opens `path` ("-" is standard input) and applies `read`.
SignedGraph read_signed_graph_file(const std::string& path);
ListAssignment read_list_assignment_file(const std::string& path, int n);

}  // namespace sigcol
