// Text formats: trees as single-line JSON records, DOT export, and model
// files.
//
// Tree record, fields always written in this order:
//
//   {"vertices":[0,1,2],"edges":[[0,1,"a"],[1,2,"b"]],"start":0,"end":1}
//
// Model file, '#' starts a comment, blank lines are ignored:
//
//   n=<order>
//   id=<index>          (or id=none for a semigroup; an identity is adjoined)
//   <n rows of n space-separated indices>
//   plus= i0 i1 ...     (optional)
//   star= i0 i1 ...     (optional)

#ifndef ADEQUATE_IO_HPP_
#define ADEQUATE_IO_HPP_

#include <iosfwd>  // for istream
#include <string>  // for string
#include <string_view>

#include "adequate/models.hpp"
#include "adequate/tree.hpp"

namespace adequate {

  // One line, no trailing newline.
  std::string write_tree(SigmaTree const& tree);

  // Throws Error(format_error) on malformed input (position = byte offset
  // when known) and the validate_tree errors on invalid trees.
  SigmaTree read_tree(std::string_view text);

  // Directed graph; edges carry `label`, the start vertex has shape=rarrow,
  // the end vertex shape=doublecircle (both, with peripheries=2, when they
  // coincide).
  std::string write_dot(SigmaTree const& tree);

  std::string write_model(FiniteUnaryAlgebra const& m);

  // Throws Error(format_error) with position = 1-based line number.
  FiniteUnaryAlgebra read_model(std::string_view text);

  std::string read_all(std::istream& in);

}  // namespace adequate

#endif  // ADEQUATE_IO_HPP_
