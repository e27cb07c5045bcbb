#include <random>   // for mt19937_64
#include <sstream>  // for istringstream

#include "doctest.h"

#include "adequate/canonical.hpp"
#include "adequate/error.hpp"
#include "adequate/io.hpp"
#include "adequate/models.hpp"
#include "adequate/random.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace adequate;

namespace {
  std::string data(char const* name) {
    return oracle::read_file(std::string(ADEQUATE_TEST_DATA) + "/" + name);
  }

  Error read_error(std::string_view text) {
    try {
      read_tree(text);
    } catch (Error const& e) {
      return e;
    }
    FAIL("expected an error for " << text);
    return Error(ErrorKind::format_error, "");
  }
}  // namespace

TEST_CASE("tree format is exact") {
  CHECK(write_tree(fixtures::example_middle())
        == R"({"vertices":[0,1,2],"edges":[[0,1,"a"],[1,2,"b"]],"start":0,"end":1})");
  CHECK(write_tree(SigmaTree::trivial())
        == R"({"vertices":[0],"edges":[],"start":0,"end":0})");
}

TEST_CASE("data files hold the example trees") {
  CHECK(are_isomorphic(read_tree(data("example_left.json")),
                       fixtures::example_left()));
  CHECK(are_isomorphic(read_tree(data("example_middle.json")),
                       fixtures::example_middle()));
  CHECK(are_isomorphic(read_tree(data("example_right.json")),
                       fixtures::example_right()));
}

TEST_CASE("serialization round-trip") {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 500; ++i) {
    SigmaTree x = random_tree(rng, 10, {"a", "b", "x_1"}, Sidedness::two_sided);
    SigmaTree y = read_tree(write_tree(x));
    CHECK(canonical_form(x) == canonical_form(y));
    CHECK(write_tree(y) == write_tree(x));
  }
}

TEST_CASE("tree format errors") {
  CHECK(read_error("{").kind() == ErrorKind::format_error);
  CHECK(read_error("{").has_position());
  CHECK(read_error("[]").kind() == ErrorKind::format_error);
  CHECK(read_error(R"({"vertices":[0],"edges":[],"start":0})").kind()
        == ErrorKind::format_error);
  CHECK(read_error(R"({"vertices":[0],"edges":[],"start":0,"end":0,"x":1})")
            .kind()
        == ErrorKind::format_error);
  CHECK(read_error(R"({"vertices":[-1],"edges":[],"start":0,"end":0})").kind()
        == ErrorKind::format_error);
  CHECK(read_error(R"({"vertices":[0,1],"edges":[[0,1]],"start":0,"end":0})")
            .kind()
        == ErrorKind::format_error);
  CHECK(read_error(
            R"({"vertices":[0,1],"edges":[[0,1,"a"]],"start":1,"end":0})")
            .kind()
        == ErrorKind::no_trunk_path);
  CHECK(read_error(R"({"vertices":[0,1],"edges":[],"start":0,"end":0})")
            .kind()
        == ErrorKind::not_a_tree);
}

TEST_CASE("DOT export") {
  CHECK(write_dot(fixtures::example_middle())
        == "digraph tree {\n"
           "  0 [shape=rarrow];\n"
           "  1 [shape=doublecircle];\n"
           "  2;\n"
           "  0 -> 1 [label=\"a\"];\n"
           "  1 -> 2 [label=\"b\"];\n"
           "}\n");
  CHECK(write_dot(SigmaTree::trivial())
        == "digraph tree {\n  0 [shape=rarrow, peripheries=2];\n}\n");
}

TEST_CASE("model files") {
  FiniteUnaryAlgebra m = read_model(data("semilattice.model"));
  CHECK(m.order() == 2);
  CHECK(m.identity() == 0);
  CHECK(m.multiply(1, 1) == 1);
  CHECK(m.plus_table() == std::vector<element_type>{0, 1});
  CHECK_FALSE(m.has_star());
  CHECK(verify_left_adequate(m));

  std::string text = write_model(m);
  CHECK(text == "n=2\nid=0\n0 1\n1 1\nplus= 0 1\n");
  FiniteUnaryAlgebra again = read_model(text);
  CHECK(again.table() == m.table());
  CHECK(again.plus_table() == m.plus_table());

  FiniteUnaryAlgebra s
      = read_model("n=1\nid=none\n0\nplus= 0\n");
  CHECK(s.order() == 2);
  CHECK(s.adjoined_identity());
  CHECK(s.identity() == 1);
  CHECK(verify_left_adequate(s));
}

TEST_CASE("model format errors carry line numbers") {
  auto line_of = [](std::string_view text) {
    try {
      read_model(text);
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::format_error);
      return e.position();
    }
    FAIL("expected an error");
    return std::size_t(0);
  };
  CHECK(line_of("n=2\nid=0\n0 1\n1 x\n") == 4);
  CHECK(line_of("# c\nn=2\nid=0\n0 1\n1 1\nplus= 0\n") == 6);
  CHECK(line_of("n=2\nid=5\n") == 2);
  CHECK(line_of("id=0\n") == 1);
  CHECK(line_of("n=2\nid=0\n0 1\n1 2\n") == 4);
  CHECK(line_of("n=1\nid=0\n0\nfoo= 0\n") == 4);
}

TEST_CASE("read_all") {
  std::istringstream in("abc\ndef");
  CHECK(read_all(in) == "abc\ndef");
}
