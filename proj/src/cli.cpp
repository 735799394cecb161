#include "bomega/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "bomega/errors.hpp"
#include "bomega/text.hpp"
#include "bomega/verify.hpp"

namespace bomega::cli {

namespace {

using nlohmann::ordered_json;

void emit(std::ostream& out, bool json, const std::string& value) {
  if (json) {
    ordered_json j;
    j["result"] = value;
    out << j.dump() << "\n";
  } else {
    out << value << "\n";
  }
}

void emit(std::ostream& out, bool json, bool value) {
  if (json) {
    ordered_json j;
    j["result"] = value;
    out << j.dump() << "\n";
  } else {
    out << (value ? "true" : "false") << "\n";
  }
}

/// Row and column labels for the table subcommand: gamma before delta,
/// ascending multiplier within each block.
std::vector<MonoidEndo> table_grid(std::int64_t bound) {
  std::vector<MonoidEndo> grid;
  for (std::int64_t k = 1; k <= bound; ++k) grid.push_back(MonoidEndo::gamma(k));
  for (std::int64_t k = 1; k <= bound; ++k) grid.push_back(MonoidEndo::delta(k));
  return grid;
}

void table_header_tsv(std::ostream& out, const std::vector<MonoidEndo>& grid) {
  for (const MonoidEndo& e : grid) out << "\t" << to_string(e);
  out << "\n";
}

void compose_table_tsv(std::ostream& out, const std::vector<MonoidEndo>& grid) {
  table_header_tsv(out, grid);
  for (const MonoidEndo& row : grid) {
    out << to_string(row);
    for (const MonoidEndo& col : grid) out << "\t" << to_string(compose(row, col));
    out << "\n";
  }
}

void green_table_tsv(std::ostream& out, const std::vector<MonoidEndo>& grid) {
  bool first = true;
  for (const GreenRelation rel : {GreenRelation::R, GreenRelation::L, GreenRelation::H,
                                  GreenRelation::D, GreenRelation::J}) {
    if (!first) out << "\n";
    first = false;
    out << "## " << to_string(rel) << "\n";
    table_header_tsv(out, grid);
    for (const MonoidEndo& row : grid) {
      out << to_string(row);
      for (const MonoidEndo& col : grid) out << "\t" << (green_endo(row, col, rel) ? "1" : "0");
      out << "\n";
    }
  }
}

ordered_json table_labels_json(const std::vector<MonoidEndo>& grid) {
  ordered_json labels = ordered_json::array();
  for (const MonoidEndo& e : grid) labels.push_back(to_string(e));
  return labels;
}

ordered_json compose_table_json(const std::vector<MonoidEndo>& grid, std::int64_t bound) {
  ordered_json j;
  j["kind"] = "compose";
  j["bound"] = bound;
  j["labels"] = table_labels_json(grid);
  ordered_json rows = ordered_json::array();
  for (const MonoidEndo& row : grid) {
    ordered_json cells = ordered_json::array();
    for (const MonoidEndo& col : grid) cells.push_back(to_string(compose(row, col)));
    rows.push_back(std::move(cells));
  }
  j["entries"] = std::move(rows);
  return j;
}

ordered_json green_table_json(const std::vector<MonoidEndo>& grid, std::int64_t bound) {
  ordered_json j;
  j["kind"] = "green";
  j["bound"] = bound;
  j["labels"] = table_labels_json(grid);
  ordered_json relations = ordered_json::object();
  for (const GreenRelation rel : {GreenRelation::R, GreenRelation::L, GreenRelation::H,
                                  GreenRelation::D, GreenRelation::J}) {
    ordered_json rows = ordered_json::array();
    for (const MonoidEndo& row : grid) {
      ordered_json cells = ordered_json::array();
      for (const MonoidEndo& col : grid) cells.push_back(green_endo(row, col, rel));
      rows.push_back(std::move(cells));
    }
    relations[to_string(rel)] = std::move(rows);
  }
  j["relations"] = std::move(relations);
  return j;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact arithmetic, endomorphisms and verification suites for the bicyclic "
               "extension over the tail family {[0),[1)}"};
  app.name("bomega");
  app.require_subcommand(1);

  bool json = false;
  std::int64_t window = 8;
  std::int64_t kmax = 30;
  std::string family_text = "{[0),[1)}";

  const auto add_json = [&json](CLI::App* sub) {
    sub->add_flag("--json", json, "emit machine-readable output");
  };
  const auto add_family = [&family_text](CLI::App* sub) {
    sub->add_option("--family", family_text, "family literal, e.g. {[0),[1)}")
        ->capture_default_str();
  };

  CLI::App* mul = app.add_subcommand("mul", "product of two or more elements, left to right");
  std::vector<std::string> mul_args;
  mul->add_option("elements", mul_args, "elements of the form (i,j,[n)) or 0")->required();
  add_json(mul);
  add_family(mul);

  CLI::App* inv = app.add_subcommand("inv", "inverse of an element");
  std::string inv_arg;
  inv->add_option("element", inv_arg, "element of the form (i,j,[n)) or 0")->required();
  add_json(inv);
  add_family(inv);

  CLI::App* order = app.add_subcommand("order", "whether s lies below t in the natural partial order");
  std::string order_s;
  std::string order_t;
  order->add_option("s", order_s, "element")->required();
  order->add_option("t", order_t, "element")->required();
  add_json(order);
  add_family(order);

  CLI::App* green = app.add_subcommand("green", "whether two elements are Green related");
  std::string green_x;
  std::string green_y;
  std::string green_rel;
  green->add_option("x", green_x, "element")->required();
  green->add_option("y", green_y, "element")->required();
  green->add_option("relation", green_rel, "one of R, L, H, D")->required();
  add_json(green);
  add_family(green);

  CLI::App* normalize = app.add_subcommand("normalize", "normal form of a word over p and q");
  std::string normalize_arg;
  normalize->add_option("word", normalize_arg, "word over p and q, or 1")->required();
  add_json(normalize);

  CLI::App* endo_apply = app.add_subcommand("endo-apply", "image of an element under an endomorphism");
  std::string ea_endo;
  std::string ea_elem;
  endo_apply->add_option("endomorphism", ea_endo, "alpha:k,p | beta:k,p | gamma:k | delta:k | zero")
      ->required();
  endo_apply->add_option("element", ea_elem, "element over {[0),[1)}")->required();
  add_json(endo_apply);

  CLI::App* endo_compose =
      app.add_subcommand("endo-compose", "composite of two or more endomorphisms, left to right");
  std::vector<std::string> ec_args;
  endo_compose->add_option("endomorphisms", ec_args, "endomorphisms to compose")->required();
  add_json(endo_compose);

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "decide whether generator images extend to an endomorphism");
  std::string cl_a;
  std::string cl_b;
  std::string cl_c;
  classify_cmd->add_option("img_a", cl_a, "candidate image of (0,1,[0))")->required();
  classify_cmd->add_option("img_b", cl_b, "candidate image of (1,0,[0))")->required();
  classify_cmd->add_option("img_c", cl_c, "candidate image of (0,0,[1))")->required();
  classify_cmd->add_option("--window", window, "index bound for the homomorphism scan")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  add_json(classify_cmd);

  CLI::App* endo_green =
      app.add_subcommand("endo-green", "whether two endomorphisms are Green related");
  std::string eg_1;
  std::string eg_2;
  std::string eg_rel;
  endo_green->add_option("e1", eg_1, "gamma:k, delta:k or zero")->required();
  endo_green->add_option("e2", eg_2, "gamma:k, delta:k or zero")->required();
  endo_green->add_option("relation", eg_rel, "one of R, L, H, D, J")->required();
  add_json(endo_green);

  CLI::App* iso = app.add_subcommand(
      "iso", "image of gamma:k or delta:k in the left-zero-pair times positive-integers product");
  std::string iso_arg;
  iso->add_option("endomorphism", iso_arg, "gamma:k or delta:k")->required();
  add_json(iso);

  CLI::App* table = app.add_subcommand("table", "compose table or Green relation matrices over "
                                                "{gamma:k, delta:k}");
  std::string table_kind;
  table->add_option("kind", table_kind, "compose or green")
      ->required()
      ->check(CLI::IsMember({"compose", "green"}));
  table->add_option("--kmax", kmax, "multiplier bound for rows and columns")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  add_json(table);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "assoc, prop2.6, thm2.8, thm2.9, thm2.11, prop2.10, lemmas or all")
      ->required()
      ->check(CLI::IsMember(
          {"assoc", "prop2.6", "thm2.8", "thm2.9", "thm2.11", "prop2.10", "lemmas", "all"}));
  verify->add_option("--window", window, "index bound for element grids")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  CLI::Option* verify_kmax = verify->add_option("--kmax", kmax, "multiplier bound for endomorphism grids")
                                 ->capture_default_str()
                                 ->check(CLI::PositiveNumber);
  add_json(verify);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*mul) {
      if (mul_args.size() < 2) {
        err << "error: mul needs at least two elements\n";
        return 2;
      }
      const Family fam = parse_family(family_text);
      Element product = parse_element(mul_args.front(), fam);
      for (std::size_t t = 1; t < mul_args.size(); ++t)
        product = multiply(product, parse_element(mul_args[t], fam));
      emit(out, json, to_string(product));
      return 0;
    }
    if (*inv) {
      const Family fam = parse_family(family_text);
      emit(out, json, to_string(inverse(parse_element(inv_arg, fam))));
      return 0;
    }
    if (*order) {
      const Family fam = parse_family(family_text);
      emit(out, json, natural_leq(parse_element(order_s, fam), parse_element(order_t, fam)));
      return 0;
    }
    if (*green) {
      const Family fam = parse_family(family_text);
      const GreenRelation rel = parse_green_relation(green_rel, /*allow_j=*/false);
      emit(out, json, green_related(parse_element(green_x, fam), parse_element(green_y, fam), rel));
      return 0;
    }
    if (*normalize) {
      emit(out, json, to_string(normalize_word(parse_word(normalize_arg))));
      return 0;
    }
    if (*endo_apply) {
      const MonoidEndo e = parse_endo(ea_endo);
      const Element x = parse_element(ea_elem, Family::canonical());
      emit(out, json, to_string(apply(e, x)));
      return 0;
    }
    if (*endo_compose) {
      if (ec_args.size() < 2) {
        err << "error: endo-compose needs at least two endomorphisms\n";
        return 2;
      }
      MonoidEndo composite = parse_endo(ec_args.front());
      for (std::size_t t = 1; t < ec_args.size(); ++t)
        composite = compose(composite, parse_endo(ec_args[t]));
      emit(out, json, to_string(composite));
      return 0;
    }
    if (*classify_cmd) {
      const Family& fam = Family::canonical();
      const GeneratorImages g{parse_element(cl_a, fam), parse_element(cl_b, fam),
                              parse_element(cl_c, fam)};
      const ClassifyResult result = classify(g, window);
      if (const auto* e = std::get_if<MonoidEndo>(&result)) {
        emit(out, json, to_string(*e));
        return 0;
      }
      const auto& rejection = std::get<ClassifyRejection>(result);
      if (json) {
        ordered_json j;
        j["result"] = nullptr;
        j["reason"] = rejection.reason;
        if (rejection.witness) {
          ordered_json w;
          w["x"] = to_string(rejection.witness->first);
          w["y"] = to_string(rejection.witness->second);
          j["witness"] = std::move(w);
        } else {
          j["witness"] = nullptr;
        }
        out << j.dump() << "\n";
      } else {
        out << "not an endomorphism: " << rejection.reason << "\n";
        if (rejection.witness)
          out << "  witness: x=" << to_string(rejection.witness->first)
              << " y=" << to_string(rejection.witness->second) << "\n";
      }
      return 0;
    }
    if (*endo_green) {
      const GreenRelation rel = parse_green_relation(eg_rel, /*allow_j=*/true);
      emit(out, json, green_endo(parse_endo(eg_1), parse_endo(eg_2), rel));
      return 0;
    }
    if (*iso) {
      emit(out, json, to_string(iso_to_lz2xN(parse_endo(iso_arg))));
      return 0;
    }
    if (*table) {
      const std::vector<MonoidEndo> grid = table_grid(kmax);
      if (json) {
        out << (table_kind == "compose" ? compose_table_json(grid, kmax)
                                        : green_table_json(grid, kmax))
                   .dump(2)
            << "\n";
      } else if (table_kind == "compose") {
        compose_table_tsv(out, grid);
      } else {
        green_table_tsv(out, grid);
      }
      return 0;
    }
    if (*verify) {
      // Witness-search suites default to a smaller grid than the
      // algebraic identity suites; an explicit --kmax overrides both.
      const std::int64_t search_kmax = verify_kmax->count() > 0 ? kmax : 12;
      std::vector<VerificationReport> reports;
      const bool all = suite == "all";
      if (all || suite == "assoc") reports.push_back(suite_associativity(window));
      if (all || suite == "prop2.6") reports.push_back(suite_prop_2_6(kmax, window));
      if (all || suite == "thm2.8") reports.push_back(suite_thm_2_8(window, window));
      if (all || suite == "thm2.9") reports.push_back(suite_thm_2_9(kmax));
      if (all || suite == "thm2.11") reports.push_back(suite_thm_2_11(search_kmax));
      if (all || suite == "prop2.10") reports.push_back(suite_prop_2_10(kmax));
      if (all || suite == "lemmas") reports.push_back(suite_lemmas(window));
      if (json) {
        out << (reports.size() == 1 ? to_json_string(reports.front()) : to_json_string(reports))
            << "\n";
      } else {
        bool first = true;
        for (const VerificationReport& report : reports) {
          if (!first) out << "\n";
          first = false;
          out << to_text(report);
        }
      }
      const bool failed = std::any_of(reports.begin(), reports.end(),
                                      [](const VerificationReport& r) { return !r.passed(); });
      return failed ? 1 : 0;
    }
  } catch (const ParseError& e) {
    err << "parse error at position " << e.pos << ": " << e.what() << " (expected " << e.expected
        << ")\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand selected\n";
  return 2;
}

}  // namespace bomega::cli
