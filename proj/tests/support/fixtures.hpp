// Hand-built trees shared by the tests.

#ifndef ADEQUATE_TESTS_FIXTURES_HPP_
#define ADEQUATE_TESTS_FIXTURES_HPP_

#include <string>  // for string
#include <vector>  // for vector

#include "adequate/tree.hpp"

namespace fixtures {

  using adequate::SigmaTree;

  // A=0, B=1, C=2, D=3: A->B:a, B->C:b, A->D:a, start A, end D.
  inline SigmaTree example_left() {
    return SigmaTree(4, {{0, 1, "a"}, {1, 2, "b"}, {0, 3, "a"}}, 0, 3);
  }

  // 0->1:a, 1->2:b, start 0, end 1.
  inline SigmaTree example_middle() {
    return SigmaTree(3, {{0, 1, "a"}, {1, 2, "b"}}, 0, 1);
  }

  // H=0, I=1, J=2, K=3, L=4: H->I:a, I->J:b, I->K:b, L->K:b, start H, end I.
  inline SigmaTree example_right() {
    return SigmaTree(
        5, {{0, 1, "a"}, {1, 2, "b"}, {1, 3, "b"}, {4, 3, "b"}}, 0, 1);
  }

  // A directed path spelling `word`, start at the front, end at the back.
  inline SigmaTree path(std::vector<std::string> const& word) {
    std::vector<adequate::Edge> edges;
    for (std::size_t i = 0; i < word.size(); ++i) {
      edges.push_back({static_cast<adequate::vertex_type>(i),
                       static_cast<adequate::vertex_type>(i + 1),
                       word[i]});
    }
    return SigmaTree(word.size() + 1,
                     std::move(edges),
                     0,
                     static_cast<adequate::vertex_type>(word.size()));
  }

}  // namespace fixtures

#endif  // ADEQUATE_TESTS_FIXTURES_HPP_
