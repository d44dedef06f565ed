#include "core/syntax.hpp"

#include <algorithm>
#include <unordered_set>

namespace scg {

namespace {

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$';
}

bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_digit(char c) { return c >= '0' && c <= '9'; }

const std::unordered_set<std::string_view>& keyword_set() {
  static const std::unordered_set<std::string_view> keywords = {
      // control flow
      "if", "else", "for", "while", "do", "switch", "case", "default",
      "return", "break", "continue", "goto", "try", "catch", "finally",
      "throw", "throws",
      // types
      "void", "int", "long", "short", "float", "double", "char", "bool",
      "boolean", "byte", "signed", "unsigned", "auto", "var", "wchar_t",
      // modifiers
      "public", "private", "protected", "static", "final", "const",
      "constexpr", "volatile", "virtual", "override", "abstract", "native",
      "synchronized", "transient", "strictfp", "extern", "inline",
      "register", "mutable", "friend", "explicit",
      // value-like
      "true", "false", "null", "nullptr", "this", "super",
      // declarations and operator-like keywords
      "class", "struct", "enum", "union", "interface", "namespace",
      "template", "typename", "using", "import", "package", "extends",
      "implements", "new", "delete", "sizeof", "instanceof", "typeid",
      "operator", "assert",
  };
  return keywords;
}

bool is_type_keyword(std::string_view text) {
  static const std::unordered_set<std::string_view> types = {
      "void", "int", "long", "short", "float", "double", "char", "bool",
      "boolean", "byte", "signed", "unsigned", "auto", "var", "wchar_t",
  };
  return types.count(text) > 0;
}

bool is_modifier_keyword(std::string_view text) {
  static const std::unordered_set<std::string_view> modifiers = {
      "public", "private", "protected", "static", "final", "const",
      "constexpr", "volatile", "virtual", "override", "abstract", "native",
      "synchronized", "transient", "strictfp", "extern", "inline",
      "register", "mutable", "friend", "explicit",
  };
  return modifiers.count(text) > 0;
}

bool is_value_keyword(std::string_view text) {
  return text == "true" || text == "false" || text == "null" || text == "nullptr";
}

// Multi-character operators, longest first within each group.
constexpr std::string_view kOperators3[] = {"<<=", ">>=", "->*", "...", "<=>", ">>>"};
constexpr std::string_view kOperators2[] = {
    "<<", ">>", "<=", ">=", "==", "!=", "&&", "||", "++", "--", "+=", "-=",
    "*=", "/=", "%=", "&=", "|=", "^=", "->", "::",
};
constexpr std::string_view kOperators1 = "+-*/%<>=!&|^~?.:";

}  // namespace

std::vector<Token> tokenize(std::string_view fragment) {
  std::vector<Token> tokens;
  size_t i = 0;
  const size_t n = fragment.size();

  const auto push = [&](size_t begin, size_t end, TokenClass cls) {
    tokens.push_back({std::string(fragment.substr(begin, end - begin)), cls});
  };

  while (i < n) {
    const char c = fragment[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      ++i;
      continue;
    }

    // Comments collapse to one literal token.
    if (c == '/' && i + 1 < n && fragment[i + 1] == '/') {
      size_t end = fragment.find('\n', i);
      if (end == std::string_view::npos) end = n;
      push(i, end, TokenClass::Literal);
      i = end;
      continue;
    }
    if (c == '/' && i + 1 < n && fragment[i + 1] == '*') {
      size_t end = fragment.find("*/", i + 2);
      end = (end == std::string_view::npos) ? n : end + 2;
      push(i, end, TokenClass::Literal);
      i = end;
      continue;
    }

    // String and char literals; contents are opaque. Unterminated literals
    // end at the line break (or end of fragment).
    if (c == '"' || c == '\'') {
      size_t j = i + 1;
      while (j < n && fragment[j] != c && fragment[j] != '\n') {
        if (fragment[j] == '\\' && j + 1 < n) ++j;
        ++j;
      }
      if (j < n && fragment[j] == c) ++j;
      push(i, j, TokenClass::Literal);
      i = j;
      continue;
    }

    // Numbers, including the leading-dot form ".5".
    if (is_digit(c) || (c == '.' && i + 1 < n && is_digit(fragment[i + 1]))) {
      size_t j = i;
      while (j < n) {
        const char d = fragment[j];
        if (is_ident_char(d) || d == '.') {
          ++j;
        } else if ((d == '+' || d == '-') && j > i &&
                   (fragment[j - 1] == 'e' || fragment[j - 1] == 'E' ||
                    fragment[j - 1] == 'p' || fragment[j - 1] == 'P')) {
          ++j;
        } else {
          break;
        }
      }
      push(i, j, TokenClass::Literal);
      i = j;
      continue;
    }

    if (is_ident_start(c)) {
      size_t j = i + 1;
      while (j < n && is_ident_char(fragment[j])) ++j;
      const std::string_view word = fragment.substr(i, j - i);
      push(i, j, keyword_set().count(word) ? TokenClass::Keyword
                                           : TokenClass::Identifier);
      i = j;
      continue;
    }

    // Operators by maximal munch.
    bool matched = false;
    if (i + 3 <= n) {
      const std::string_view three = fragment.substr(i, 3);
      for (const std::string_view op : kOperators3) {
        if (three == op) {
          push(i, i + 3, TokenClass::Operator);
          i += 3;
          matched = true;
          break;
        }
      }
    }
    if (matched) continue;
    if (i + 2 <= n) {
      const std::string_view two = fragment.substr(i, 2);
      for (const std::string_view op : kOperators2) {
        if (two == op) {
          push(i, i + 2, TokenClass::Operator);
          i += 2;
          matched = true;
          break;
        }
      }
    }
    if (matched) continue;
    if (kOperators1.find(c) != std::string_view::npos) {
      push(i, i + 1, TokenClass::Operator);
      ++i;
      continue;
    }
    // Everything else (including unknown bytes) is punctuation.
    push(i, i + 1, TokenClass::Punct);
    ++i;
  }
  return tokens;
}

const char* category_name(Category category) {
  return kCategoryVocabulary[static_cast<size_t>(category)];
}

namespace {

bool is_structural_punct(const Token& token) {
  if (token.cls != TokenClass::Punct || token.text.size() != 1) return false;
  const char c = token.text[0];
  return c == '(' || c == ')' || c == '{' || c == '}' || c == ';' || c == ',';
}

// Leaf category for a token that carries through to the tree.
Category leaf_category(const Token& token) {
  switch (token.cls) {
    case TokenClass::Identifier:
      return Category::Name;
    case TokenClass::Literal:
      return Category::Literal;
    case TokenClass::Operator:
      return Category::Operator;
    case TokenClass::Keyword:
      if (is_type_keyword(token.text)) return Category::Type;
      if (is_modifier_keyword(token.text)) return Category::Modifier;
      if (is_value_keyword(token.text)) return Category::Literal;
      return Category::Name;
    case TokenClass::Punct:
      return Category::Operator;  // non-structural punctuation, e.g. [ ] # @
  }
  return Category::Name;
}

bool is_token_leaf_label(Category label) {
  return label == Category::Name || label == Category::Literal ||
         label == Category::Operator || label == Category::Type ||
         label == Category::Modifier;
}

// Interior nodes that ended up with no token leaves below them carry no
// information; dropping them keeps the leaf set exactly the non-structural
// tokens. The root survives even when empty.
void prune_empty_interior(CategoryNode& node) {
  for (CategoryNode& child : node.children) prune_empty_interior(child);
  std::erase_if(node.children, [](const CategoryNode& child) {
    return child.children.empty() && !is_token_leaf_label(child.label);
  });
}

class TreeBuilder {
 public:
  explicit TreeBuilder(const std::vector<Token>& tokens) : tokens_(tokens) {}

  CategoryTree build() {
    CategoryTree tree;
    while (!at_end()) {
      if (is_punct("}")) {
        ++pos_;  // stray closer in a truncated fragment
        continue;
      }
      parse_statement(tree.root, 1);
    }
    prune_empty_interior(tree.root);
    return tree;
  }

 private:
  const std::vector<Token>& tokens_;
  size_t pos_ = 0;

  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token& peek(size_t ahead = 0) const { return tokens_[pos_ + ahead]; }
  bool has(size_t ahead) const { return pos_ + ahead < tokens_.size(); }

  bool is_punct(std::string_view text, size_t ahead = 0) const {
    return has(ahead) && peek(ahead).cls == TokenClass::Punct &&
           peek(ahead).text == text;
  }
  bool is_operator(std::string_view text, size_t ahead = 0) const {
    return has(ahead) && peek(ahead).cls == TokenClass::Operator &&
           peek(ahead).text == text;
  }
  bool is_keyword(std::string_view text, size_t ahead = 0) const {
    return has(ahead) && peek(ahead).cls == TokenClass::Keyword &&
           peek(ahead).text == text;
  }

  // Depth accounting: `depth` is the depth of the node being filled (the
  // root unit is 1). Interior children are only created while a leaf below
  // them would still fit under the cap; past that, structure flattens into
  // the current node and no parse path recurses further.
  static bool can_nest(int depth) { return depth + 1 < kMaxTreeDepth; }

  CategoryNode& child_or_self(CategoryNode& node, int depth, Category label,
                              int* child_depth) {
    if (!can_nest(depth)) {
      *child_depth = depth;
      return node;
    }
    node.children.push_back(CategoryNode{label, {}});
    *child_depth = depth + 1;
    return node.children.back();
  }

  void consume_leaf(CategoryNode& node) {
    node.children.push_back(CategoryNode{leaf_category(peek()), {}});
    ++pos_;
  }

  void skip_structural() { ++pos_; }

  // ---- statements ----

  void parse_statement(CategoryNode& parent, int depth) {
    if (at_end()) return;
    if (!can_nest(depth)) {
      // Depth cap reached: flatten one token into the parent and return;
      // enclosing loops keep the cursor moving without further recursion.
      if (is_structural_punct(peek())) skip_structural();
      else consume_leaf(parent);
      return;
    }
    if (is_punct(";")) {
      skip_structural();  // empty statement
      return;
    }
    if (is_punct("{")) {
      parse_block(parent, depth);
      return;
    }
    if (is_punct("}")) return;  // caller's block closes

    if (peek().cls == TokenClass::Keyword) {
      const std::string& kw = peek().text;
      if (kw == "if") return parse_if(parent, depth);
      if (kw == "else") return parse_else(parent, depth);
      if (kw == "for" || kw == "while" || kw == "switch")
        return parse_keyword_condition_statement(parent, depth);
      if (kw == "do") return parse_do(parent, depth);
      if (kw == "case" || kw == "default") return parse_case(parent, depth);
      if (kw == "return") return parse_return(parent, depth);
      if (is_type_keyword(kw) || is_modifier_keyword(kw))
        return parse_declaration(parent, depth);
      // other keywords fall through to an expression statement
    } else if (peek().cls == TokenClass::Identifier) {
      if (looks_like_declaration()) return parse_declaration(parent, depth);
    }

    int d = 0;
    CategoryNode& stmt = child_or_self(parent, depth, Category::ExprStmt, &d);
    int ed = 0;
    CategoryNode& expr = child_or_self(stmt, d, Category::Expr, &ed);
    parse_expr_run(expr, ed, ";}");
    if (is_punct(";")) skip_structural();
  }

  void parse_block(CategoryNode& parent, int depth) {
    skip_structural();  // '{'
    int d = 0;
    CategoryNode& block = child_or_self(parent, depth, Category::Block, &d);
    while (!at_end() && !is_punct("}")) parse_statement(block, d);
    if (is_punct("}")) skip_structural();
  }

  void parse_body(CategoryNode& parent, int depth) {
    if (at_end()) return;
    if (is_punct("{")) parse_block(parent, depth);
    else parse_statement(parent, depth);
  }

  // Parses "( a ; b ; c )" into a condition node with one expr child per
  // non-empty segment. The opening paren must be current; an unclosed paren
  // ends at EOF.
  void parse_condition(CategoryNode& parent, int depth) {
    if (!is_punct("(")) return;
    skip_structural();  // '('
    int d = 0;
    CategoryNode& cond = child_or_self(parent, depth, Category::Condition, &d);
    while (!at_end() && !is_punct(")")) {
      if (is_punct(";")) {
        skip_structural();
        continue;
      }
      int ed = 0;
      CategoryNode& expr = child_or_self(cond, d, Category::Expr, &ed);
      parse_expr_run(expr, ed, ";)");
    }
    if (is_punct(")")) skip_structural();
  }

  void parse_if(CategoryNode& parent, int depth) {
    int d = 0;
    CategoryNode& node = child_or_self(parent, depth, Category::If, &d);
    consume_leaf(node);  // 'if'
    parse_condition(node, d);
    if (!at_end() && !is_keyword("else") && !is_punct("}")) parse_body(node, d);
    if (is_keyword("else")) parse_else(node, d);
  }

  void parse_else(CategoryNode& parent, int depth) {
    int d = 0;
    CategoryNode& node = child_or_self(parent, depth, Category::Else, &d);
    consume_leaf(node);  // 'else'
    parse_body(node, d);
  }

  void parse_keyword_condition_statement(CategoryNode& parent, int depth) {
    const std::string& kw = peek().text;
    const Category label = kw == "for"     ? Category::For
                           : kw == "while" ? Category::While
                                           : Category::Switch;
    int d = 0;
    CategoryNode& node = child_or_self(parent, depth, label, &d);
    consume_leaf(node);
    parse_condition(node, d);
    if (!at_end() && !is_punct("}")) parse_body(node, d);
  }

  void parse_do(CategoryNode& parent, int depth) {
    int d = 0;
    CategoryNode& node = child_or_self(parent, depth, Category::Do, &d);
    consume_leaf(node);  // 'do'
    parse_body(node, d);
    if (is_keyword("while")) {
      consume_leaf(node);  // trailing 'while'
      parse_condition(node, d);
    }
    if (is_punct(";")) skip_structural();
  }

  void parse_case(CategoryNode& parent, int depth) {
    int d = 0;
    CategoryNode& node = child_or_self(parent, depth, Category::Case, &d);
    consume_leaf(node);  // 'case' / 'default'
    if (!at_end() && !is_operator(":") && !is_punct(";") && !is_punct("}")) {
      int ed = 0;
      CategoryNode& expr = child_or_self(node, d, Category::Expr, &ed);
      parse_expr_run(expr, ed, ";}", /*stop_at_colon=*/true);
    }
    if (is_operator(":")) consume_leaf(node);  // ':' stays as a leaf
  }

  void parse_return(CategoryNode& parent, int depth) {
    int d = 0;
    CategoryNode& node = child_or_self(parent, depth, Category::Return, &d);
    consume_leaf(node);  // 'return'
    if (!at_end() && !is_punct(";") && !is_punct("}")) {
      int ed = 0;
      CategoryNode& expr = child_or_self(node, d, Category::Expr, &ed);
      parse_expr_run(expr, ed, ";}");
    }
    if (is_punct(";")) skip_structural();
  }

  // True for statement heads like "MyType x ..." or "MyType foo(...)".
  bool looks_like_declaration() const {
    return has(1) && peek(0).cls == TokenClass::Identifier &&
           peek(1).cls == TokenClass::Identifier;
  }

  // Scans ahead for "<modifiers/types/names> name ( ... ) {", the
  // function-definition shape shared by C++ and Java.
  bool looks_like_function_definition() const {
    size_t j = pos_;
    size_t head_tokens = 0;
    const size_t limit = std::min(tokens_.size(), pos_ + 64);
    while (j < limit) {
      const Token& t = tokens_[j];
      const bool head_token =
          t.cls == TokenClass::Identifier ||
          (t.cls == TokenClass::Keyword &&
           (is_type_keyword(t.text) || is_modifier_keyword(t.text))) ||
          (t.cls == TokenClass::Operator &&
           (t.text == "*" || t.text == "&" || t.text == "::"));
      if (!head_token) break;
      ++j;
      ++head_tokens;
    }
    if (head_tokens < 2 || j >= limit) return false;
    if (tokens_[j - 1].cls != TokenClass::Identifier) return false;
    if (!(tokens_[j].cls == TokenClass::Punct && tokens_[j].text == "(")) return false;
    int balance = 0;
    for (; j < tokens_.size(); ++j) {
      const Token& t = tokens_[j];
      if (t.cls != TokenClass::Punct) continue;
      if (t.text == "(") ++balance;
      else if (t.text == ")") {
        --balance;
        if (balance == 0) break;
      }
    }
    if (balance != 0) return false;
    return j + 1 < tokens_.size() && tokens_[j + 1].cls == TokenClass::Punct &&
           tokens_[j + 1].text == "{";
  }

  void parse_declaration(CategoryNode& parent, int depth) {
    if (looks_like_function_definition()) return parse_function(parent, depth);

    int d = 0;
    CategoryNode& node = child_or_self(parent, depth, Category::DeclStmt, &d);
    while (!at_end() && peek().cls == TokenClass::Keyword &&
           is_modifier_keyword(peek().text)) {
      consume_leaf(node);
    }
    bool saw_type = false;
    while (!at_end() && peek().cls == TokenClass::Keyword &&
           is_type_keyword(peek().text)) {
      consume_leaf(node);
      saw_type = true;
    }
    if (!saw_type && !at_end() && peek().cls == TokenClass::Identifier &&
        has(1) && peek(1).cls == TokenClass::Identifier) {
      // custom type name in type position
      node.children.push_back(CategoryNode{Category::Type, {}});
      ++pos_;
    }
    if (!at_end() && !is_punct(";") && !is_punct("}")) {
      int ed = 0;
      CategoryNode& expr = child_or_self(node, d, Category::Expr, &ed);
      parse_expr_run(expr, ed, ";}");
    }
    if (is_punct(";")) skip_structural();
  }

  void parse_function(CategoryNode& parent, int depth) {
    int d = 0;
    CategoryNode& node = child_or_self(parent, depth, Category::Function, &d);
    // Head: everything before "name (" maps to modifier/type leaves.
    while (!at_end() && !is_punct("(")) {
      const Token& t = peek();
      if (t.cls == TokenClass::Identifier && is_punct("(", 1)) {
        node.children.push_back(CategoryNode{Category::Name, {}});
        ++pos_;
        break;
      }
      if (t.cls == TokenClass::Identifier) {
        node.children.push_back(CategoryNode{Category::Type, {}});
        ++pos_;
      } else {
        consume_leaf(node);
      }
    }
    if (is_punct("(")) {
      skip_structural();
      int pd = 0;
      CategoryNode& params = child_or_self(node, d, Category::ParameterList, &pd);
      while (!at_end() && !is_punct(")")) {
        if (is_punct(",")) {
          skip_structural();
          continue;
        }
        int ed = 0;
        CategoryNode& param = child_or_self(params, pd, Category::Expr, &ed);
        parse_expr_run(param, ed, ",)");
      }
      if (is_punct(")")) skip_structural();
    }
    if (is_punct("{")) parse_block(node, d);
    else if (is_punct(";")) skip_structural();
  }

  // ---- expressions ----

  // Appends leaves and nested structure to `node` until a stop token or end
  // of input. `stops` lists single-character punctuation that ends the run;
  // the stop token itself is left for the caller. Structural punctuation
  // that is not a stop is consumed silently.
  void parse_expr_run(CategoryNode& node, int depth, std::string_view stops,
                      bool stop_at_colon = false) {
    while (!at_end()) {
      const Token& t = peek();
      if (t.cls == TokenClass::Punct && t.text.size() == 1 &&
          stops.find(t.text[0]) != std::string_view::npos) {
        return;
      }
      if (stop_at_colon && t.cls == TokenClass::Operator && t.text == ":") return;

      if (t.cls == TokenClass::Identifier && is_punct("(", 1)) {
        if (can_nest(depth)) {
          parse_call(node, depth);
        } else {
          consume_leaf(node);  // callee flattens
          skip_structural();   // '('
        }
        continue;
      }
      if (t.cls == TokenClass::Punct && (t.text == "(" || t.text == "{")) {
        const char closer = t.text == "(" ? ')' : '}';
        skip_structural();
        if (can_nest(depth)) {
          int ed = 0;
          CategoryNode& nested = child_or_self(node, depth, Category::Expr, &ed);
          parse_expr_run(nested, ed, std::string_view(&closer, 1));
          if (is_punct(std::string_view(&closer, 1))) skip_structural();
        }
        continue;
      }
      if (t.cls == TokenClass::Punct && is_structural_punct(t)) {
        skip_structural();  // stray , ; ) } inside a truncated expression
        continue;
      }
      consume_leaf(node);
    }
  }

  void parse_call(CategoryNode& parent, int depth) {
    int d = 0;
    CategoryNode& call = child_or_self(parent, depth, Category::Call, &d);
    consume_leaf(call);  // callee name
    skip_structural();   // '('
    int ad = 0;
    CategoryNode& args = child_or_self(call, d, Category::ArgumentList, &ad);
    while (!at_end() && !is_punct(")")) {
      if (is_punct(",")) {
        skip_structural();
        continue;
      }
      int gd = 0;
      CategoryNode& arg = child_or_self(args, ad, Category::Argument, &gd);
      int ed = 0;
      CategoryNode& expr = child_or_self(arg, gd, Category::Expr, &ed);
      parse_expr_run(expr, ed, ",)");
    }
    if (is_punct(")")) skip_structural();
  }
};

void render_node(const CategoryNode& node, int indent, std::string& out) {
  out.append(static_cast<size_t>(indent) * 2, ' ');
  out.append(category_name(node.label));
  out.push_back('\n');
  for (const CategoryNode& child : node.children) {
    render_node(child, indent + 1, out);
  }
}

}  // namespace

CategoryTree build_category_tree(const std::vector<Token>& tokens) {
  return TreeBuilder(tokens).build();
}

std::string tree_to_indented_text(const CategoryTree& tree) {
  std::string out;
  render_node(tree.root, 0, out);
  return out;
}

}  // namespace scg
