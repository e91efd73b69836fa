#ifndef SUPERLIE_CLI_HPP
#define SUPERLIE_CLI_HPP

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superlie/assoc.hpp"
#include "superlie/json.hpp"
#include "superlie/parse.hpp"
#include "superlie/reduce.hpp"
#include "superlie/words.hpp"

namespace superlie::cli {

namespace detail {

inline Scheme scheme_of(const std::string& s) {
  if (s == "hall") return Scheme::hall;
  if (s == "lyndon") return Scheme::lyndon;
  if (s == "shirshov") return Scheme::shirshov;
  throw ParseError(0, "unknown scheme: " + s);
}

/// Word-scheme bases arrive as bare terms; dress them like super-basis
/// elements (squares are the nodes with equal halves — the bracketing maps
/// never produce those on their own).
inline std::vector<SuperBasisElement> dressed_scheme_basis(
    const Alphabet& alphabet, Scheme scheme, int weight) {
  if (scheme == Scheme::hall) return super_basis(alphabet, weight);
  std::vector<SuperBasisElement> out;
  for (const LieTerm& t : scheme_super_basis(alphabet, scheme, weight)) {
    SuperKind kind = (!t.is_leaf() && t.left() == t.right())
                         ? SuperKind::odd_square
                         : SuperKind::plain;
    out.push_back(SuperBasisElement{kind, -1, static_cast<int>(out.size()),
                                    t.weight(), t.parity(), t});
  }
  return out;
}

}  // namespace detail

/// Runs one subcommand. Exit codes: 0 success, 2 parse/domain error,
/// 3 capacity error.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Bases of free Lie superalgebras: Hall/Lyndon/Shirshov super "
               "bases, straightening to basis coordinates, Hall collection, "
               "and exact-integer basis verification."};
  app.require_subcommand(1);

  std::string alphabet_spec, scheme_name = "hall", expr, word;
  int weight = 8;
  bool json = false, full = false;

  auto add_common = [&](CLI::App* cmd, bool with_scheme) {
    cmd->add_option("--alphabet", alphabet_spec,
                    "generators, e.g. \"a:even b:odd\"")
        ->required();
    cmd->add_option("--weight", weight, "weight cap (default 8)");
    if (with_scheme)
      cmd->add_option("--scheme", scheme_name, "hall|lyndon|shirshov");
    cmd->add_flag("--json", json, "emit one JSON document");
  };

  CLI::App* basis_cmd = app.add_subcommand("basis", "list the super basis");
  add_common(basis_cmd, true);

  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "coordinates of an expression");
  add_common(reduce_cmd, false);
  reduce_cmd->add_option("--expr", expr, "Lie expression, e.g. \"[x,x,y]\"")
      ->required();

  CLI::App* collect_cmd =
      app.add_subcommand("collect", "Hall collection of a word");
  add_common(collect_cmd, false);
  collect_cmd->add_option("--word", word, "associative word, e.g. baba")
      ->required();
  collect_cmd->add_flag("--full", full,
                        "collect through every stage (basic products)");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "per-weight rank certification");
  add_common(verify_cmd, true);

  CLI::App* dims_cmd = app.add_subcommand("dims", "per-weight basis sizes");
  add_common(dims_cmd, true);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Alphabet alphabet = parse_alphabet(alphabet_spec);
    if (weight < 1) throw DomainError("--weight must be >= 1");
    Scheme scheme = detail::scheme_of(scheme_name);

    if (basis_cmd->parsed()) {
      auto elements = detail::dressed_scheme_basis(alphabet, scheme, weight);
      if (json) {
        Json arr = Json::array();
        for (const auto& e : elements) arr.push_back(element_json(e, alphabet));
        out << arr.dump(2) << "\n";
      } else {
        for (const auto& e : elements)
          out << e.index << ": " << to_string(e.term, alphabet) << "  weight="
              << e.weight << " parity=" << to_string(e.parity) << " kind="
              << (e.kind == SuperKind::plain ? "plain" : "odd_square") << "\n";
      }
    } else if (reduce_cmd->parsed()) {
      SuperBasis basis(alphabet, weight);
      Coordinates coords = normal_form(parse_expression(expr, alphabet), basis);
      if (json)
        out << coordinates_json(coords, basis).dump(2) << "\n";
      else
        out << to_string(coords, basis) << "\n";
    } else if (collect_cmd->parsed()) {
      AssocWord w = parse_word(word, alphabet);
      if (w.length() > weight)
        throw CapacityError("word length " + std::to_string(w.length()) +
                            " exceeds the weight cap " + std::to_string(weight));
      BasicSet basics(alphabet, w.length());
      CollectedPoly poly = full ? collect_full(w, basics) : collect(w, basics);
      if (json)
        out << collected_json(poly, basics).dump(2) << "\n";
      else
        out << to_string(poly, basics) << "\n";
    } else if (verify_cmd->parsed()) {
      auto reports = verify_basis(alphabet, weight, scheme);
      if (json) {
        out << weight_reports_json(reports).dump(2) << "\n";
      } else {
        for (const auto& r : reports) {
          out << "weight " << r.weight << ": count=" << r.count
              << " rank=" << r.rank
              << " independent=" << (r.independent ? "yes" : "no");
          if (r.expected)
            out << "  products: count=" << *r.product_count
                << " rank=" << *r.product_rank << " expected=" << *r.expected;
          out << "\n";
        }
      }
    } else if (dims_cmd->parsed()) {
      auto elements = detail::dressed_scheme_basis(alphabet, scheme, weight);
      std::vector<int> dims(static_cast<std::size_t>(weight), 0);
      for (const auto& e : elements)
        ++dims[static_cast<std::size_t>(e.weight - 1)];
      if (json) {
        out << Json(dims).dump() << "\n";
      } else {
        for (std::size_t i = 0; i < dims.size(); ++i)
          out << (i ? "," : "") << dims[i];
        out << "\n";
      }
    }
    return 0;
  } catch (const ParseError& e) {
    err << "parse error at " << e.position << ": " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace superlie::cli

#endif  // SUPERLIE_CLI_HPP
