#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csgen/corpus.hpp"

namespace csgen {

// One node of a constituency tree. Leaves carry the terminal token in
// `label` and have no children; spans are half-open token ranges.
struct ParseNode {
  std::string label;
  std::vector<ParseNode> children;
  std::size_t lo = 0;
  std::size_t hi = 0;

  bool is_leaf() const { return children.empty(); }
  std::size_t length() const { return hi - lo; }
};

struct ParseTree {
  ParseNode root;
  std::vector<std::string> leaves;  // in-order terminals == sentence tokens
};

// Reads one tree in bracketed notation, e.g.
//   (S (NP (DT the) (NN movie)) (VP (VBD ended)))
// Spans are filled bottom-up. Throws ParseError with a 1-based character
// offset on unbalanced input, ValidationError on empty input.
ParseTree parse_bracketed_tree(std::string_view text);

// One tree per line, aligned with the corpus by line index. A blank line
// means "no tree for that sentence". Each tree's leaves must reproduce the
// sentence tokens exactly.
std::vector<std::optional<ParseTree>> load_trees(const std::filesystem::path& path,
                                                 const Corpus& corpus);

}  // namespace csgen
