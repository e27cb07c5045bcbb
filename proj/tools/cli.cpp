#include "cli.hpp"

#include <fstream>  // for ifstream
#include <istream>  // for istream
#include <ostream>  // for ostream

#include "CLI11.hpp"

#include "adequate/algebra.hpp"
#include "adequate/error.hpp"
#include "adequate/io.hpp"
#include "adequate/models.hpp"
#include "adequate/pruning.hpp"
#include "adequate/random.hpp"
#include "adequate/term.hpp"

namespace adequate::cli {

  namespace {

    struct Options {
      std::string   mode = "two";
      bool          semigroup = false;
      std::string   alphabet;
      std::uint64_t seed      = 0;
      std::size_t   max_edges = 5;
      bool          trusted   = false;
      bool          trace     = false;
      bool          show_term = false;
      std::string   model_file;
      std::string   assignment;
      std::vector<std::string> inputs;
    };

    Sidedness parse_sidedness(std::string const& mode) {
      if (mode == "left") {
        return Sidedness::left;
      }
      if (mode == "right") {
        return Sidedness::right;
      }
      return Sidedness::two_sided;
    }

    AlgebraMode algebra_mode(Options const& opts) {
      return AlgebraMode{parse_sidedness(opts.mode),
                         opts.semigroup ? Unit::semigroup : Unit::monoid};
    }

    Alphabet alphabet_of(Options const& opts) {
      return opts.alphabet.empty() ? Alphabet()
                                   : Alphabet::from_list(opts.alphabet);
    }

    std::string trim(std::string s) {
      auto first = s.find_first_not_of(" \t\r\n");
      if (first == std::string::npos) {
        return "";
      }
      return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
    }

    // "-" means stdin.
    std::string term_argument(std::string const& arg, std::istream& in) {
      return arg == "-" ? trim(read_all(in)) : arg;
    }

    std::string file_argument(std::string const& arg, std::istream& in) {
      if (arg == "-") {
        return read_all(in);
      }
      std::ifstream file(arg);
      if (!file) {
        throw Error(ErrorKind::format_error, "cannot open \"" + arg + "\"");
      }
      return read_all(file);
    }

    std::string describe(SigmaTree const& x, edge_index e) {
      Edge const& edge = x.edge(e);
      return std::to_string(edge.source) + "->" + std::to_string(edge.target)
             + ":" + edge.label;
    }

    void check_pruned_sidedness(SigmaTree const& x, AlgebraMode mode) {
      if (!has_sidedness(x, mode.sidedness)) {
        throw Error(ErrorKind::not_sided,
                    "result is not " + to_string(mode.sidedness)
                        + " adequate");
      }
      if (!mode.has_identity() && x.is_trivial()) {
        throw Error(ErrorKind::operation_not_in_signature,
                    "the trivial tree is not an element in semigroup mode");
      }
    }

    int normalize(Options const& opts,
                  std::istream&  in,
                  std::ostream&  out) {
      AlgebraMode mode = algebra_mode(opts);
      Alphabet    sigma = alphabet_of(opts);
      Term t = parse_term(term_argument(opts.inputs.at(0), in), sigma, mode);
      SigmaTree x = eval_term(t, true, mode);
      check_pruned_sidedness(x, mode);
      out << write_tree(x) << "\n";
      if (opts.show_term) {
        out << print_term(tree_to_term(x, mode.sidedness), sigma) << "\n";
      }
      return EXIT_OK;
    }

    int equal(Options const& opts, std::istream& in, std::ostream& out) {
      AlgebraMode mode  = algebra_mode(opts);
      Alphabet    sigma = alphabet_of(opts);
      bool        same  = words_equal(term_argument(opts.inputs.at(0), in),
                              term_argument(opts.inputs.at(1), in),
                              mode,
                              sigma);
      out << (same ? "EQUAL" : "NOT-EQUAL") << "\n";
      return same ? EXIT_OK : EXIT_NOT_EQUAL;
    }

    int classify_tree(Options const& opts, std::istream& in, std::ostream& out) {
      SigmaTree x = read_tree(file_argument(opts.inputs.at(0), in));
      out << to_string(classify(x)) << "\n";
      return EXIT_OK;
    }

    int prune_tree(Options const& opts,
                   std::istream&  in,
                   std::ostream&  out,
                   std::ostream&  err) {
      SigmaTree x = read_tree(file_argument(opts.inputs.at(0), in));
      if (!opts.trace) {
        out << write_tree(prune(x)) << "\n";
        return EXIT_OK;
      }
      // Each step is reported against the tree it applies to.
      SigmaTree current = x;
      std::size_t index = 0;
      while (auto step = find_fold(current)) {
        err << "fold " << index++ << " anchor=" << step->anchor_vertex
            << " absorbed=" << describe(current, step->absorbed_edge)
            << " absorbing=" << describe(current, step->absorbing_edge)
            << "\n";
        current = apply_fold(current, *step).tree;
      }
      out << write_tree(current) << "\n";
      return EXIT_OK;
    }

    int export_dot(Options const& opts, std::istream& in, std::ostream& out) {
      SigmaTree x = read_tree(file_argument(opts.inputs.at(0), in));
      out << write_dot(x);
      return EXIT_OK;
    }

    int eval(Options const& opts, std::istream& in, std::ostream& out) {
      AlgebraMode mode = algebra_mode(opts);
      if (mode.sidedness == Sidedness::two_sided) {
        throw Error(ErrorKind::mode_error,
                    "eval needs --mode left or --mode right");
      }
      Alphabet sigma = alphabet_of(opts);
      Term t = parse_term(term_argument(opts.inputs.at(0), in), sigma, mode);
      std::ifstream file(opts.model_file);
      if (!file) {
        throw Error(ErrorKind::format_error,
                    "cannot open \"" + opts.model_file + "\"");
      }
      FiniteUnaryAlgebra  m   = read_model(read_all(file));
      // a missing unary table is derived from the multiplication
      if (mode.sidedness == Sidedness::left && !m.has_plus()) {
        if (auto plus = derive_plus(m)) {
          m = m.with_plus(*plus);
        }
      } else if (mode.sidedness == Sidedness::right && !m.has_star()) {
        if (auto star = derive_star(m)) {
          m = m.with_star(*star);
        }
      }
      GeneratorAssignment chi = GeneratorAssignment::from_list(opts.assignment);
      RhoHat      rho_hat(chi, m, mode.sidedness, opts.trusted);
      SigmaTree   x = eval_term(t, true, mode);
      out << rho_hat(x) << "\n";
      return EXIT_OK;
    }

    int generate(Options const& opts, std::ostream& out) {
      RandomSpec spec;
      spec.seed      = opts.seed;
      spec.max_edges = opts.max_edges;
      spec.sidedness = parse_sidedness(opts.mode);
      if (!opts.alphabet.empty()) {
        spec.alphabet = alphabet_of(opts).letters();
      }
      if (opts.show_term) {
        out << print_term(random_term(spec), alphabet_of(opts)) << "\n";
      } else {
        out << write_tree(random_tree(spec)) << "\n";
      }
      return EXIT_OK;
    }

    int exit_code_for(ErrorKind kind) {
      switch (kind) {
        case ErrorKind::operation_not_in_signature:
        case ErrorKind::mode_error:
        case ErrorKind::not_sided:
          return EXIT_MODE_VIOLATION;
        default:
          return EXIT_INPUT_ERROR;
      }
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Free left, right and two-sided adequate monoids as trees",
                 "adequate"};
    app.require_subcommand(1);
    Options opts;

    auto add_mode = [&](CLI::App* sub) {
      sub->add_option("--mode", opts.mode, "Signature: left, right or two")
          ->check(CLI::IsMember({"left", "right", "two"}));
      sub->add_flag("--semigroup", opts.semigroup, "No identity constant");
      sub->add_option(
          "--alphabet", opts.alphabet, "Comma-separated letters, e.g. a,b");
    };

    auto* normalize_cmd
        = app.add_subcommand("normalize", "Print the pruned tree of a term");
    add_mode(normalize_cmd);
    normalize_cmd->add_flag("--term", opts.show_term, "Also print a term");
    normalize_cmd->add_option("TERM", opts.inputs, "Term, or - for stdin")
        ->required()
        ->expected(1);

    auto* equal_cmd
        = app.add_subcommand("equal", "Decide whether two terms are equal");
    add_mode(equal_cmd);
    equal_cmd->add_option("TERMS", opts.inputs, "Two terms")
        ->required()
        ->expected(2);

    auto* classify_cmd
        = app.add_subcommand("classify", "Print the flags of a tree file");
    classify_cmd->add_option("FILE", opts.inputs, "Tree file, or -")
        ->required()
        ->expected(1);

    auto* prune_cmd = app.add_subcommand("prune", "Prune a tree file");
    prune_cmd->add_flag("--trace", opts.trace, "Log fold steps to stderr");
    prune_cmd->add_option("FILE", opts.inputs, "Tree file, or -")
        ->required()
        ->expected(1);

    auto* dot_cmd
        = app.add_subcommand("export-dot", "Print a tree file as DOT");
    dot_cmd->add_option("FILE", opts.inputs, "Tree file, or -")
        ->required()
        ->expected(1);

    auto* eval_cmd = app.add_subcommand(
        "eval", "Evaluate a term in a finite left or right adequate monoid");
    add_mode(eval_cmd);
    eval_cmd->add_option("--model", opts.model_file, "Model file")
        ->required();
    eval_cmd
        ->add_option("--assign", opts.assignment, "Letter values, e.g. a=1,b=0")
        ->required();
    eval_cmd->add_flag("--trusted", opts.trusted, "Skip model verification");
    eval_cmd->add_option("TERM", opts.inputs, "Term, or - for stdin")
        ->required()
        ->expected(1);

    auto* gen_cmd = app.add_subcommand("gen", "Print a random tree or term");
    add_mode(gen_cmd);
    gen_cmd->add_option("--seed", opts.seed, "Random seed");
    gen_cmd->add_option("--max-edges", opts.max_edges, "Size bound");
    gen_cmd->add_flag("--term", opts.show_term, "Generate a term instead");

    std::vector<char const*> argv = {"adequate"};
    for (auto const& arg : args) {
      argv.push_back(arg.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return EXIT_OK;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return EXIT_OK;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return EXIT_INPUT_ERROR;
    }

    try {
      if (normalize_cmd->parsed()) {
        return normalize(opts, in, out);
      }
      if (equal_cmd->parsed()) {
        return equal(opts, in, out);
      }
      if (classify_cmd->parsed()) {
        return classify_tree(opts, in, out);
      }
      if (prune_cmd->parsed()) {
        return prune_tree(opts, in, out, err);
      }
      if (dot_cmd->parsed()) {
        return export_dot(opts, in, out);
      }
      if (eval_cmd->parsed()) {
        return eval(opts, in, out);
      }
      if (gen_cmd->parsed()) {
        return generate(opts, out);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_code_for(e.kind());
    }
    return EXIT_INPUT_ERROR;
  }

}  // namespace adequate::cli
