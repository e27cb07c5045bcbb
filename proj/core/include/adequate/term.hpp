// Terms over an alphabet in the signature (product, plus, star, identity):
// parsing, printing, evaluation to trees, and recovery of a term from a
// pruned tree.
//
// Grammar (whitespace between tokens is ignored):
//
//   term   := factor { factor }
//   factor := atom { "^+" | "^*" }
//   atom   := "1" | letter | "(" term ")"
//
// Letters are maximal runs matching [a-z][a-z0-9_]*. A run that is not itself
// a letter of the alphabet is read as a sequence of one-character letters
// when every character is one, so "ab" means a followed by b over {a, b}.

#ifndef ADEQUATE_TERM_HPP_
#define ADEQUATE_TERM_HPP_

#include <cstddef>  // for size_t
#include <memory>   // for shared_ptr
#include <set>      // for set
#include <string>   // for string
#include <string_view>
#include <vector>  // for vector

#include "adequate/algebra.hpp"
#include "adequate/tree.hpp"

namespace adequate {

  class Alphabet {
   public:
    // The implicit alphabet: every single lower-case ASCII letter.
    Alphabet() = default;
    explicit Alphabet(std::vector<Letter> const& letters);

    // Parses "a,b,c". Throws Error(format_error) on an empty or invalid
    // letter.
    static Alphabet from_list(std::string_view list);

    bool is_implicit() const noexcept {
      return implicit_;
    }

    bool contains(std::string_view letter) const;

    // Whether every letter is a single character (true when implicit).
    bool single_characters() const noexcept {
      return single_characters_;
    }

    // The declared letters; {"a", ..., "z"} when implicit.
    std::vector<Letter> letters() const;

   private:
    bool             implicit_          = true;
    bool             single_characters_ = true;
    std::set<Letter> letters_;
  };

  class Term {
   public:
    enum class Kind { identity, letter, product, plus, star };

    static Term identity();
    static Term letter(Letter label);
    static Term product(Term left, Term right);
    static Term plus(Term operand);
    static Term star(Term operand);

    Kind kind() const noexcept {
      return kind_;
    }

    // For letters.
    Letter const& label() const noexcept {
      return label_;
    }

    // For products.
    Term const& left() const {
      return *left_;
    }
    Term const& right() const {
      return *right_;
    }

    // For plus and star.
    Term const& operand() const {
      return *left_;
    }

    // Number of nodes.
    std::size_t size() const noexcept {
      return size_;
    }

    friend bool operator==(Term const& x, Term const& y);

   private:
    Term() = default;

    Kind                        kind_ = Kind::identity;
    Letter                      label_;
    std::shared_ptr<Term const> left_;
    std::shared_ptr<Term const> right_;
    std::size_t                 size_ = 1;
  };

  // Throws Error with kind syntax_error (position = byte offset),
  // unknown_letter, or operation_not_in_signature.
  Term parse_term(std::string_view   input,
                  Alphabet const&    alphabet = {},
                  AlgebraMode        mode     = {});

  // Throws Error(operation_not_in_signature) if t uses an operation outside
  // the signature of `mode`.
  void check_signature(Term const& t, AlgebraMode mode);

  // Minimal parentheses. Adjacent letters are juxtaposed when the alphabet
  // has only one-character letters, and separated by a space otherwise.
  std::string print_term(Term const& t, Alphabet const& alphabet = {});

  // Evaluates with the unpruned operations, or with the pruned ones.
  SigmaTree eval_term(Term const& t, bool pruned, AlgebraMode mode = {});

  // A term whose pruned evaluation is isomorphic to x. In left [right] mode x
  // must be left [right] adequate, otherwise Error(not_sided); x must be
  // pruned, otherwise Error(not_pruned).
  Term tree_to_term(SigmaTree const& x,
                    Sidedness        sidedness = Sidedness::two_sided);

  // Decides equality of two terms in the free object selected by `mode`.
  bool words_equal(std::string_view s,
                   std::string_view t,
                   AlgebraMode      mode     = {},
                   Alphabet const&  alphabet = {});

}  // namespace adequate

#endif  // ADEQUATE_TERM_HPP_
