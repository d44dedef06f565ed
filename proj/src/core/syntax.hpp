#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scg {

enum class TokenClass { Identifier, Keyword, Literal, Operator, Punct };

struct Token {
  std::string text;
  TokenClass cls;

  bool operator==(const Token&) const = default;
};

// Fault-tolerant lexer for C-family fragments (C++ and Java share one token
// grammar here). Comments and string/char literal bodies collapse into single
// literal tokens; unknown characters become punctuation; never fails.
std::vector<Token> tokenize(std::string_view fragment);

// Syntactic categories assigned by the lightweight tagger. The list is a
// versioned constant: serialized artifacts depend on these exact strings.
enum class Category : uint8_t {
  Unit, ExprStmt, DeclStmt, If, Else, Condition, Block, For, While, Do,
  Switch, Case, Return, Call, ArgumentList, Argument, ParameterList,
  Function, Type, Expr, Operator, Name, Literal, Modifier,
};

inline constexpr int kCategoryVocabularyVersion = 1;
inline constexpr std::array<const char*, 24> kCategoryVocabulary = {
    "unit", "expr_stmt", "decl_stmt", "if", "else", "condition", "block",
    "for", "while", "do", "switch", "case", "return", "call",
    "argument_list", "argument", "parameter_list", "function", "type",
    "expr", "operator", "name", "literal", "modifier",
};

const char* category_name(Category category);

struct CategoryNode {
  Category label;
  std::vector<CategoryNode> children;

  bool is_leaf() const { return children.empty(); }
};

// Hierarchy of syntactic-category-labelled tokens for one code fragment.
// The root is always "unit"; nesting depth is capped at 64 (deeper structure
// flattens into the enclosing node).
struct CategoryTree {
  CategoryNode root{Category::Unit, {}};
};

inline constexpr int kMaxTreeDepth = 64;

// Best-effort recursive-descent categorization. Total: any token sequence,
// including invalid or truncated code, produces a tree; unclosed braces and
// parens close implicitly at end of input. Every token that is not pure
// structural punctuation ( ) { } ; , becomes exactly one leaf.
CategoryTree build_category_tree(const std::vector<Token>& tokens);

// Debug rendering: one label per line, two-space indentation per level.
std::string tree_to_indented_text(const CategoryTree& tree);

}  // namespace scg
