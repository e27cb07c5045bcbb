#include "adequate/random.hpp"

#include "adequate/error.hpp"

namespace adequate {

  namespace {
    std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }

    Letter const& pick_letter(std::mt19937_64&           rng,
                              std::vector<Letter> const& alphabet) {
      if (alphabet.empty()) {
        throw Error(ErrorKind::format_error, "empty alphabet");
      }
      return alphabet[uniform(rng, 0, alphabet.size() - 1)];
    }
  }  // namespace

  SigmaTree random_tree(std::mt19937_64&           rng,
                        std::size_t                max_edges,
                        std::vector<Letter> const& alphabet,
                        Sidedness                  sidedness) {
    std::size_t const number_of_edges = uniform(rng, 0, max_edges);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < number_of_edges; ++i) {
      auto        u = static_cast<vertex_type>(uniform(rng, 0, i));
      auto        w = static_cast<vertex_type>(i + 1);
      bool        away;
      switch (sidedness) {
        case Sidedness::left:
          away = true;
          break;
        case Sidedness::right:
          away = false;
          break;
        default:
          away = uniform(rng, 0, 1) == 0;
          break;
      }
      Letter const& label = pick_letter(rng, alphabet);
      edges.push_back(away ? Edge{u, w, label} : Edge{w, u, label});
    }
    std::size_t const n = number_of_edges + 1;
    vertex_type       start = 0;
    vertex_type       end   = 0;
    switch (sidedness) {
      case Sidedness::left:
        end = static_cast<vertex_type>(uniform(rng, 0, n - 1));
        break;
      case Sidedness::right:
        start = static_cast<vertex_type>(uniform(rng, 0, n - 1));
        break;
      default: {
        start = static_cast<vertex_type>(uniform(rng, 0, n - 1));
        // Reachability needs the adjacency, so build the tree once first.
        SigmaTree                probe(n, edges, start, start);
        auto                     reach = probe.reachable_from(start);
        std::vector<vertex_type> targets;
        for (vertex_type v = 0; v < n; ++v) {
          if (reach[v]) {
            targets.push_back(v);
          }
        }
        end = targets[uniform(rng, 0, targets.size() - 1)];
        break;
      }
    }
    return SigmaTree(n, std::move(edges), start, end);
  }

  SigmaTree random_tree(RandomSpec const& spec) {
    std::mt19937_64 rng(spec.seed);
    return random_tree(rng, spec.max_edges, spec.alphabet, spec.sidedness);
  }

  namespace {
    Term wrap(std::mt19937_64& rng, Term t, AlgebraMode mode) {
      // Roughly one node in three gets a unary operation.
      while (uniform(rng, 0, 2) == 0) {
        bool use_plus = mode.has_plus()
                        && (!mode.has_star() || uniform(rng, 0, 1) == 0);
        t = use_plus ? Term::plus(std::move(t)) : Term::star(std::move(t));
      }
      return t;
    }

    Term grow(std::mt19937_64&           rng,
              std::size_t                letters,
              std::vector<Letter> const& alphabet,
              AlgebraMode                mode) {
      if (letters == 1) {
        if (mode.has_identity() && uniform(rng, 0, 9) == 0) {
          return wrap(rng, Term::identity(), mode);
        }
        return wrap(rng, Term::letter(pick_letter(rng, alphabet)), mode);
      }
      std::size_t left = uniform(rng, 1, letters - 1);
      return wrap(rng,
                  Term::product(grow(rng, left, alphabet, mode),
                                grow(rng, letters - left, alphabet, mode)),
                  mode);
    }
  }  // namespace

  Term random_term(std::mt19937_64&           rng,
                   std::size_t                max_letters,
                   std::vector<Letter> const& alphabet,
                   AlgebraMode                mode) {
    std::size_t letters = uniform(rng, 1, std::max<std::size_t>(1, max_letters));
    return grow(rng, letters, alphabet, mode);
  }

  Term random_term(RandomSpec const& spec) {
    std::mt19937_64 rng(spec.seed);
    AlgebraMode     mode{spec.sidedness, Unit::monoid};
    return random_term(rng, spec.max_edges, spec.alphabet, mode);
  }

}  // namespace adequate
