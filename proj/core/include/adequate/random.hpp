// Seeded random trees and terms.

#ifndef ADEQUATE_RANDOM_HPP_
#define ADEQUATE_RANDOM_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <random>   // for mt19937_64
#include <vector>   // for vector

#include "adequate/algebra.hpp"
#include "adequate/term.hpp"
#include "adequate/tree.hpp"

namespace adequate {

  struct RandomSpec {
    std::uint64_t       seed      = 0;
    std::size_t         max_edges = 5;
    std::vector<Letter> alphabet  = {"a", "b"};
    Sidedness           sidedness = Sidedness::two_sided;
  };

  // Grows a tree edge by edge from a single vertex: the number of edges is
  // uniform in [0, max_edges], each new edge joins a uniformly chosen vertex
  // to a new one. Left: edges point away from vertex 0, which is the start.
  // Right: edges point towards vertex 0, which is the end. Two-sided: random
  // orientations, random start, end uniform among the vertices reachable
  // from it.
  SigmaTree random_tree(std::mt19937_64&           rng,
                        std::size_t                max_edges,
                        std::vector<Letter> const& alphabet,
                        Sidedness                  sidedness);

  SigmaTree random_tree(RandomSpec const& spec);

  // A random term with between 1 and max_letters letter occurrences using
  // only operations in the signature of `mode`.
  Term random_term(std::mt19937_64&           rng,
                   std::size_t                max_letters,
                   std::vector<Letter> const& alphabet,
                   AlgebraMode                mode);

  // max_edges bounds the number of letters.
  Term random_term(RandomSpec const& spec);

}  // namespace adequate

#endif  // ADEQUATE_RANDOM_HPP_
