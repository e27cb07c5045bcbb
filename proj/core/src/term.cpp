#include "adequate/term.hpp"

#include <algorithm>  // for min_element
#include <utility>    // for pair

#include "adequate/canonical.hpp"
#include "adequate/error.hpp"
#include "adequate/pruning.hpp"

namespace adequate {

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::vector<Letter> const& letters)
      : implicit_(false), single_characters_(true), letters_() {
    for (auto const& letter : letters) {
      if (!is_valid_letter(letter)) {
        throw Error(ErrorKind::format_error,
                    "invalid letter \"" + letter + "\"");
      }
      letters_.insert(letter);
      single_characters_ = single_characters_ && letter.size() == 1;
    }
  }

  Alphabet Alphabet::from_list(std::string_view list) {
    std::vector<Letter> letters;
    std::size_t         begin = 0;
    while (begin <= list.size()) {
      std::size_t comma = list.find(',', begin);
      if (comma == std::string_view::npos) {
        comma = list.size();
      }
      std::string_view item = list.substr(begin, comma - begin);
      while (!item.empty() && item.front() == ' ') {
        item.remove_prefix(1);
      }
      while (!item.empty() && item.back() == ' ') {
        item.remove_suffix(1);
      }
      letters.emplace_back(item);
      begin = comma + 1;
    }
    return Alphabet(letters);
  }

  bool Alphabet::contains(std::string_view letter) const {
    if (implicit_) {
      return letter.size() == 1 && letter[0] >= 'a' && letter[0] <= 'z';
    }
    return letters_.count(Letter(letter)) != 0;
  }

  std::vector<Letter> Alphabet::letters() const {
    if (implicit_) {
      std::vector<Letter> result;
      for (char c = 'a'; c <= 'z'; ++c) {
        result.emplace_back(1, c);
      }
      return result;
    }
    return {letters_.begin(), letters_.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Term
  ////////////////////////////////////////////////////////////////////////

  Term Term::identity() {
    return Term();
  }

  Term Term::letter(Letter label) {
    Term t;
    t.kind_  = Kind::letter;
    t.label_ = std::move(label);
    return t;
  }

  Term Term::product(Term left, Term right) {
    Term t;
    t.kind_  = Kind::product;
    t.size_  = 1 + left.size_ + right.size_;
    t.left_  = std::make_shared<Term const>(std::move(left));
    t.right_ = std::make_shared<Term const>(std::move(right));
    return t;
  }

  Term Term::plus(Term operand) {
    Term t;
    t.kind_ = Kind::plus;
    t.size_ = 1 + operand.size_;
    t.left_ = std::make_shared<Term const>(std::move(operand));
    return t;
  }

  Term Term::star(Term operand) {
    Term t;
    t.kind_ = Kind::star;
    t.size_ = 1 + operand.size_;
    t.left_ = std::make_shared<Term const>(std::move(operand));
    return t;
  }

  bool operator==(Term const& x, Term const& y) {
    if (x.kind_ != y.kind_) {
      return false;
    }
    switch (x.kind_) {
      case Term::Kind::identity:
        return true;
      case Term::Kind::letter:
        return x.label_ == y.label_;
      case Term::Kind::product:
        return x.left() == y.left() && x.right() == y.right();
      case Term::Kind::plus:
      case Term::Kind::star:
        return x.operand() == y.operand();
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    bool is_run_start(char c) {
      return c >= 'a' && c <= 'z';
    }

    bool is_run_char(char c) {
      return is_run_start(c) || (c >= '0' && c <= '9') || c == '_';
    }

    bool is_space(char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r';
    }

    enum class TokenKind { one, letter, open, close, plus, star, end };

    struct Token {
      TokenKind   kind;
      std::string text;
      std::size_t position;
    };

    std::vector<Token> tokenize(std::string_view input,
                                Alphabet const&  alphabet) {
      std::vector<Token> tokens;
      std::size_t        i = 0;
      while (i < input.size()) {
        char c = input[i];
        if (is_space(c)) {
          ++i;
        } else if (c == '1') {
          tokens.push_back({TokenKind::one, "1", i++});
        } else if (c == '(') {
          tokens.push_back({TokenKind::open, "(", i++});
        } else if (c == ')') {
          tokens.push_back({TokenKind::close, ")", i++});
        } else if (c == '^') {
          if (i + 1 < input.size() && input[i + 1] == '+') {
            tokens.push_back({TokenKind::plus, "^+", i});
          } else if (i + 1 < input.size() && input[i + 1] == '*') {
            tokens.push_back({TokenKind::star, "^*", i});
          } else {
            throw Error(ErrorKind::syntax_error,
                        "expected '+' or '*' after '^'",
                        i + 1);
          }
          i += 2;
        } else if (is_run_start(c)) {
          std::size_t begin = i;
          while (i < input.size() && is_run_char(input[i])) {
            ++i;
          }
          std::string_view run = input.substr(begin, i - begin);
          if (alphabet.contains(run)) {
            tokens.push_back({TokenKind::letter, std::string(run), begin});
            continue;
          }
          for (std::size_t k = 0; k < run.size(); ++k) {
            if (!alphabet.contains(run.substr(k, 1))) {
              throw Error(ErrorKind::unknown_letter,
                          "\"" + std::string(run)
                              + "\" is not a letter or a word in the "
                                "alphabet",
                          begin);
            }
          }
          for (std::size_t k = 0; k < run.size(); ++k) {
            tokens.push_back(
                {TokenKind::letter, std::string(1, run[k]), begin + k});
          }
        } else {
          throw Error(ErrorKind::syntax_error,
                      std::string("unexpected character '") + c + "'",
                      i);
        }
      }
      tokens.push_back({TokenKind::end, "", input.size()});
      return tokens;
    }

    class Parser {
     public:
      Parser(std::vector<Token> tokens, AlgebraMode mode)
          : tokens_(std::move(tokens)), mode_(mode) {}

      Term parse() {
        Term t = term();
        if (peek().kind != TokenKind::end) {
          fail("unexpected '" + peek().text + "'");
        }
        return t;
      }

     private:
      Token const& peek() const {
        return tokens_[next_];
      }

      [[noreturn]] void fail(std::string const& message) const {
        throw Error(ErrorKind::syntax_error, message, peek().position);
      }

      bool starts_atom() const {
        auto kind = peek().kind;
        return kind == TokenKind::one || kind == TokenKind::letter
               || kind == TokenKind::open;
      }

      Term term() {
        if (!starts_atom()) {
          fail(peek().kind == TokenKind::end ? "unexpected end of input"
                                             : "expected a term");
        }
        Term result = factor();
        while (starts_atom()) {
          result = Term::product(std::move(result), factor());
        }
        return result;
      }

      Term factor() {
        Term result = atom();
        while (true) {
          Token const& token = peek();
          if (token.kind == TokenKind::plus) {
            if (!mode_.has_plus()) {
              throw Error(ErrorKind::operation_not_in_signature,
                          "plus is not available in right mode",
                          token.position);
            }
            ++next_;
            result = Term::plus(std::move(result));
          } else if (token.kind == TokenKind::star) {
            if (!mode_.has_star()) {
              throw Error(ErrorKind::operation_not_in_signature,
                          "star is not available in left mode",
                          token.position);
            }
            ++next_;
            result = Term::star(std::move(result));
          } else {
            return result;
          }
        }
      }

      Term atom() {
        Token const& token = peek();
        switch (token.kind) {
          case TokenKind::one:
            if (!mode_.has_identity()) {
              throw Error(ErrorKind::operation_not_in_signature,
                          "no identity in semigroup mode",
                          token.position);
            }
            ++next_;
            return Term::identity();
          case TokenKind::letter:
            ++next_;
            return Term::letter(token.text);
          case TokenKind::open: {
            ++next_;
            Term inner = term();
            if (peek().kind != TokenKind::close) {
              fail(peek().kind == TokenKind::end ? "unexpected end of input"
                                                 : "expected ')'");
            }
            ++next_;
            return inner;
          }
          default:
            fail("expected a term");
        }
      }

      std::vector<Token> tokens_;
      std::size_t        next_ = 0;
      AlgebraMode        mode_;
    };

  }  // namespace

  Term parse_term(std::string_view input,
                  Alphabet const&  alphabet,
                  AlgebraMode      mode) {
    return Parser(tokenize(input, alphabet), mode).parse();
  }

  void check_signature(Term const& t, AlgebraMode mode) {
    switch (t.kind()) {
      case Term::Kind::identity:
        if (!mode.has_identity()) {
          throw Error(ErrorKind::operation_not_in_signature,
                      "no identity in semigroup mode");
        }
        return;
      case Term::Kind::letter:
        return;
      case Term::Kind::product:
        check_signature(t.left(), mode);
        check_signature(t.right(), mode);
        return;
      case Term::Kind::plus:
        if (!mode.has_plus()) {
          throw Error(ErrorKind::operation_not_in_signature,
                      "plus is not available in right mode");
        }
        check_signature(t.operand(), mode);
        return;
      case Term::Kind::star:
        if (!mode.has_star()) {
          throw Error(ErrorKind::operation_not_in_signature,
                      "star is not available in left mode");
        }
        check_signature(t.operand(), mode);
        return;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Printing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string print(Term const& t, bool compact);

    std::string print_operand(Term const& t, bool compact) {
      std::string inner = print(t, compact);
      return t.kind() == Term::Kind::product ? "(" + inner + ")" : inner;
    }

    std::string join(std::string left, std::string const& right, bool compact) {
      bool need_space = !left.empty() && !right.empty()
                        && is_run_char(left.back()) && is_run_char(right[0])
                        && !(compact && is_run_start(right[0]));
      if (need_space) {
        left += ' ';
      }
      return left + right;
    }

    std::string print(Term const& t, bool compact) {
      switch (t.kind()) {
        case Term::Kind::identity:
          return "1";
        case Term::Kind::letter:
          return t.label();
        case Term::Kind::product: {
          std::string right = print(t.right(), compact);
          if (t.right().kind() == Term::Kind::product) {
            right = "(" + right + ")";
          }
          return join(print(t.left(), compact), right, compact);
        }
        case Term::Kind::plus:
          return print_operand(t.operand(), compact) + "^+";
        case Term::Kind::star:
          return print_operand(t.operand(), compact) + "^*";
      }
      return "";
    }
  }  // namespace

  std::string print_term(Term const& t, Alphabet const& alphabet) {
    return print(t, alphabet.single_characters());
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    SigmaTree eval_unpruned(Term const& t) {
      switch (t.kind()) {
        case Term::Kind::identity:
          return SigmaTree::trivial();
        case Term::Kind::letter:
          return SigmaTree::base(t.label());
        case Term::Kind::product:
          return unpruned_multiply(eval_unpruned(t.left()),
                                   eval_unpruned(t.right()));
        case Term::Kind::plus:
          return unpruned_plus(eval_unpruned(t.operand()));
        case Term::Kind::star:
          return unpruned_star(eval_unpruned(t.operand()));
      }
      return SigmaTree::trivial();
    }

    // Operands are pruned by construction, so the unpruned operation followed
    // by prune is the pruned operation.
    SigmaTree eval_pruned(Term const& t) {
      switch (t.kind()) {
        case Term::Kind::identity:
          return SigmaTree::trivial();
        case Term::Kind::letter:
          return SigmaTree::base(t.label());
        case Term::Kind::product:
          return prune(
              unpruned_multiply(eval_pruned(t.left()), eval_pruned(t.right())));
        case Term::Kind::plus:
          return prune(unpruned_plus(eval_pruned(t.operand())));
        case Term::Kind::star:
          return prune(unpruned_star(eval_pruned(t.operand())));
      }
      return SigmaTree::trivial();
    }
  }  // namespace

  SigmaTree eval_term(Term const& t, bool pruned, AlgebraMode mode) {
    check_signature(t, mode);
    return pruned ? eval_pruned(t) : eval_unpruned(t);
  }

  ////////////////////////////////////////////////////////////////////////
  // Decomposition
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Term times(Term x, Term y) {
      if (x.kind() == Term::Kind::identity) {
        return y;
      }
      if (y.kind() == Term::Kind::identity) {
        return x;
      }
      return Term::product(std::move(x), std::move(y));
    }

    Term decompose(SigmaTree const& x) {
      if (x.is_trivial()) {
        return Term::identity();
      }
      vertex_type const v0 = x.start();
      std::vector<bool> blocked(x.number_of_edges(), false);
      if (!x.trunk().empty()) {
        // x = y a z, splitting at the first trunk edge.
        edge_index  e  = x.trunk().front();
        vertex_type v1 = x.edge(e).target;
        blocked[e]     = true;
        auto y         = component(x, v0, blocked, v0, v0);
        auto z         = component(x, v1, blocked, v1, x.end());
        return times(times(decompose(y.tree), Term::letter(x.edge(e).label)),
                     decompose(z.tree));
      }
      // Idempotent: split off the branch at the start vertex whose encoding
      // is least; x = y (a z)^+ or x = y (z a)^*.
      std::vector<std::pair<std::string, edge_index>> coded;
      for (auto adj : {x.out_edges(v0), x.in_edges(v0)}) {
        for (edge_index e : adj) {
          coded.emplace_back(branch_encoding(x, v0, e), e);
        }
      }
      edge_index  e = std::min_element(coded.begin(), coded.end())->second;
      vertex_type w = x.other_end(e, v0);
      blocked[e]    = true;
      auto  y       = component(x, v0, blocked, v0, v0);
      auto  z       = component(x, w, blocked, w, w);
      Term  a       = Term::letter(x.edge(e).label);
      if (x.edge(e).source == v0) {
        return times(decompose(y.tree),
                     Term::plus(times(std::move(a), decompose(z.tree))));
      }
      return times(decompose(y.tree),
                   Term::star(times(decompose(z.tree), std::move(a))));
    }
  }  // namespace

  Term tree_to_term(SigmaTree const& x, Sidedness sidedness) {
    if (!has_sidedness(x, sidedness)) {
      throw Error(ErrorKind::not_sided,
                  "tree is not " + to_string(sidedness) + " adequate");
    }
    if (!is_pruned(x)) {
      throw Error(ErrorKind::not_pruned, "tree is not pruned");
    }
    return decompose(x);
  }

  bool words_equal(std::string_view s,
                   std::string_view t,
                   AlgebraMode      mode,
                   Alphabet const&  alphabet) {
    Term      x = parse_term(s, alphabet, mode);
    Term      y = parse_term(t, alphabet, mode);
    SigmaTree u = eval_term(x, true, mode);
    SigmaTree v = eval_term(y, true, mode);
    return are_isomorphic(u, v);
  }

}  // namespace adequate
