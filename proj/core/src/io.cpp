#include "adequate/io.hpp"

#include <istream>   // for istream
#include <iterator>  // for istreambuf_iterator
#include <sstream>   // for istringstream, ostringstream

#include "json.hpp"

#include "adequate/error.hpp"

namespace adequate {

  std::string write_tree(SigmaTree const& tree) {
    nlohmann::ordered_json record;
    auto vertices = nlohmann::ordered_json::array();
    for (vertex_type v = 0; v < tree.number_of_vertices(); ++v) {
      vertices.push_back(v);
    }
    auto edges = nlohmann::ordered_json::array();
    for (auto const& e : tree.edges()) {
      edges.push_back({e.source, e.target, e.label});
    }
    record["vertices"] = std::move(vertices);
    record["edges"]    = std::move(edges);
    record["start"]    = tree.start();
    record["end"]      = tree.end();
    return record.dump();
  }

  namespace {
    std::uint64_t as_id(nlohmann::json const& value, char const* what) {
      if (!value.is_number_unsigned()) {
        throw Error(ErrorKind::format_error,
                    std::string(what) + " must be a non-negative integer");
      }
      return value.get<std::uint64_t>();
    }
  }  // namespace

  SigmaTree read_tree(std::string_view text) {
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw Error(ErrorKind::format_error, e.what(), e.byte);
    }
    if (!record.is_object()) {
      throw Error(ErrorKind::format_error, "tree record must be an object");
    }
    for (auto const& [key, value] : record.items()) {
      if (key != "vertices" && key != "edges" && key != "start"
          && key != "end") {
        throw Error(ErrorKind::format_error, "unknown field \"" + key + "\"");
      }
    }
    for (char const* key : {"vertices", "edges", "start", "end"}) {
      if (!record.contains(key)) {
        throw Error(ErrorKind::format_error,
                    std::string("missing field \"") + key + "\"");
      }
    }
    RawTree raw;
    if (!record["vertices"].is_array() || !record["edges"].is_array()) {
      throw Error(ErrorKind::format_error,
                  "\"vertices\" and \"edges\" must be arrays");
    }
    for (auto const& v : record["vertices"]) {
      raw.vertices.push_back(as_id(v, "vertex id"));
    }
    for (auto const& e : record["edges"]) {
      if (!e.is_array() || e.size() != 3 || !e[2].is_string()) {
        throw Error(ErrorKind::format_error,
                    "each edge must be [source, target, \"label\"]");
      }
      raw.edges.push_back(RawEdge{as_id(e[0], "edge source"),
                                  as_id(e[1], "edge target"),
                                  e[2].get<std::string>()});
    }
    raw.start = as_id(record["start"], "start");
    raw.end   = as_id(record["end"], "end");
    return validate_tree(raw);
  }

  std::string write_dot(SigmaTree const& tree) {
    std::ostringstream out;
    out << "digraph tree {\n";
    for (vertex_type v = 0; v < tree.number_of_vertices(); ++v) {
      out << "  " << v;
      if (v == tree.start() && v == tree.end()) {
        out << " [shape=rarrow, peripheries=2]";
      } else if (v == tree.start()) {
        out << " [shape=rarrow]";
      } else if (v == tree.end()) {
        out << " [shape=doublecircle]";
      }
      out << ";\n";
    }
    for (auto const& e : tree.edges()) {
      // json string escaping is a valid DOT quoted string for our labels.
      out << "  " << e.source << " -> " << e.target
          << " [label=" << nlohmann::json(e.label).dump() << "];\n";
    }
    out << "}\n";
    return out.str();
  }

  std::string write_model(FiniteUnaryAlgebra const& m) {
    std::ostringstream out;
    std::size_t const  n = m.order();
    out << "n=" << n << "\n";
    out << "id=" << m.identity() << "\n";
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        out << (y == 0 ? "" : " ") << m.multiply(x, y);
      }
      out << "\n";
    }
    auto unary = [&](char const* name, auto const& table) {
      if (table) {
        out << name << "=";
        for (element_type x : *table) {
          out << " " << x;
        }
        out << "\n";
      }
    };
    unary("plus", m.plus_table());
    unary("star", m.star_table());
    return out.str();
  }

  namespace {
    std::vector<element_type> parse_indices(std::string const& text,
                                            std::size_t        line) {
      std::istringstream        in(text);
      std::vector<element_type> result;
      std::string               word;
      while (in >> word) {
        try {
          std::size_t used  = 0;
          auto        value = std::stoul(word, &used);
          if (used != word.size()) {
            throw std::invalid_argument(word);
          }
          result.push_back(static_cast<element_type>(value));
        } catch (std::logic_error const&) {
          throw Error(ErrorKind::format_error,
                      "expected an element index, got \"" + word + "\"",
                      line);
        }
      }
      return result;
    }

    std::string trim(std::string s) {
      auto first = s.find_first_not_of(" \t\r");
      if (first == std::string::npos) {
        return "";
      }
      auto last = s.find_last_not_of(" \t\r");
      return s.substr(first, last - first + 1);
    }
  }  // namespace

  FiniteUnaryAlgebra read_model(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        number = 0;

    // Non-empty, comment-stripped lines with their line numbers.
    std::vector<std::pair<std::size_t, std::string>> lines;
    while (std::getline(in, line)) {
      ++number;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      line = trim(line);
      if (!line.empty()) {
        lines.emplace_back(number, line);
      }
    }

    std::size_t next   = 0;
    auto        expect = [&](std::string const& prefix) {
      if (next >= lines.size()) {
        throw Error(ErrorKind::format_error,
                    "missing \"" + prefix + "\" line",
                    number + 1);
      }
      auto const& [where, content] = lines[next];
      if (content.rfind(prefix, 0) != 0) {
        throw Error(ErrorKind::format_error,
                    "expected \"" + prefix + "...\"",
                    where);
      }
      ++next;
      return std::make_pair(where, trim(content.substr(prefix.size())));
    };

    auto [order_line, order_text] = expect("n=");
    auto order_values             = parse_indices(order_text, order_line);
    if (order_values.size() != 1 || order_values[0] == 0) {
      throw Error(
          ErrorKind::format_error, "expected a positive order", order_line);
    }
    std::size_t const n = order_values[0];

    auto [id_line, id_text] = expect("id=");
    bool semigroup          = id_text == "none";
    element_type identity   = 0;
    if (!semigroup) {
      auto id_values = parse_indices(id_text, id_line);
      if (id_values.size() != 1 || id_values[0] >= n) {
        throw Error(ErrorKind::format_error, "bad identity index", id_line);
      }
      identity = id_values[0];
    }

    std::vector<element_type> table;
    for (std::size_t row = 0; row < n; ++row) {
      if (next >= lines.size()) {
        throw Error(ErrorKind::format_error,
                    "missing multiplication table row",
                    number + 1);
      }
      auto const& [where, content] = lines[next++];
      auto values                  = parse_indices(content, where);
      if (values.size() != n) {
        throw Error(ErrorKind::format_error,
                    "expected " + std::to_string(n) + " entries",
                    where);
      }
      for (element_type v : values) {
        if (v >= n) {
          throw Error(ErrorKind::format_error, "entry out of range", where);
        }
      }
      table.insert(table.end(), values.begin(), values.end());
    }

    std::optional<std::vector<element_type>> plus;
    std::optional<std::vector<element_type>> star;
    while (next < lines.size()) {
      auto const& [where, content] = lines[next];
      bool is_plus = content.rfind("plus=", 0) == 0;
      bool is_star = content.rfind("star=", 0) == 0;
      if (!is_plus && !is_star) {
        throw Error(ErrorKind::format_error, "unexpected line", where);
      }
      auto& target = is_plus ? plus : star;
      if (target) {
        throw Error(ErrorKind::format_error, "repeated table", where);
      }
      target = parse_indices(content.substr(5), where);
      if (target->size() != n) {
        throw Error(ErrorKind::format_error,
                    "expected " + std::to_string(n) + " entries",
                    where);
      }
      for (element_type v : *target) {
        if (v >= n) {
          throw Error(ErrorKind::format_error, "entry out of range", where);
        }
      }
      ++next;
    }
    if (semigroup) {
      return FiniteUnaryAlgebra::from_semigroup(
          n, std::move(table), std::move(plus), std::move(star));
    }
    return FiniteUnaryAlgebra(
        n, identity, std::move(table), std::move(plus), std::move(star));
  }

  std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
  }

}  // namespace adequate
