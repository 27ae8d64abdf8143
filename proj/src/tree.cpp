#include "csgen/tree.hpp"

#include <cctype>
#include <fstream>

#include "csgen/errors.hpp"
#include "jsonl.hpp"

namespace csgen {

namespace {

struct BracketParser {
  std::string_view text;
  std::size_t pos = 0;
  std::vector<std::string> leaves;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos + 1); }

  bool at_end() const { return pos >= text.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  std::string read_atom() {
    std::size_t start = pos;
    while (!at_end() && text[pos] != '(' && text[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    return std::string(text.substr(start, pos - start));
  }

  ParseNode parse_node() {
    ++pos;  // consume '('
    skip_ws();
    ParseNode node;
    if (!at_end() && text[pos] != '(' && text[pos] != ')') node.label = read_atom();
    node.lo = leaves.size();
    skip_ws();
    while (!at_end() && text[pos] != ')') {
      if (text[pos] == '(') {
        node.children.push_back(parse_node());
      } else {
        ParseNode leaf;
        leaf.label = read_atom();
        leaf.lo = leaves.size();
        leaf.hi = leaf.lo + 1;
        leaves.push_back(leaf.label);
        node.children.push_back(std::move(leaf));
      }
      skip_ws();
    }
    if (at_end()) fail("unexpected end of input");
    if (node.children.empty()) fail("empty constituent");
    ++pos;  // consume ')'
    node.hi = leaves.size();
    return node;
  }
};

}  // namespace

ParseTree parse_bracketed_tree(std::string_view text) {
  BracketParser parser{text};
  parser.skip_ws();
  if (parser.at_end()) throw ValidationError("empty parse tree input");
  if (text[parser.pos] != '(') parser.fail("expected '('");
  ParseTree tree;
  tree.root = parser.parse_node();
  parser.skip_ws();
  if (!parser.at_end()) parser.fail("trailing input after tree");
  tree.leaves = std::move(parser.leaves);
  return tree;
}

std::vector<std::optional<ParseTree>> load_trees(const std::filesystem::path& path,
                                                 const Corpus& corpus) {
  std::ifstream in = detail::open_input(path);
  std::vector<std::optional<ParseTree>> trees(corpus.size());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = line.find_first_not_of(" \t") == std::string::npos;
    if (line_no > corpus.size()) {
      if (blank) continue;
      throw ValidationError(path.string() + ": more trees than corpus sentences");
    }
    if (blank) continue;
    ParseTree tree;
    try {
      tree = parse_bracketed_tree(line);
    } catch (const Error& e) {
      throw ValidationError(path.string() + ": line " + std::to_string(line_no) + ": " +
                            e.what());
    }
    const LabeledSentence& sentence = corpus[line_no - 1];
    if (tree.leaves != sentence.tokens) {
      throw ValidationError(path.string() + ": line " + std::to_string(line_no) +
                            ": tree leaves do not match tokens of sentence " + sentence.id);
    }
    trees[line_no - 1] = std::move(tree);
  }
  return trees;
}

}  // namespace csgen
