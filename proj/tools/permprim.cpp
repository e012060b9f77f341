// Command-line front end: analyze | group | witness | catalog.

#include <algorithm>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permprim/catalog.hpp"
#include "permprim/group.hpp"
#include "permprim/partition.hpp"
#include "permprim/perm.hpp"
#include "permprim/report.hpp"
#include "permprim/theorem.hpp"

namespace {

using nlohmann::json;
using namespace permprim;

std::string join_points(const std::vector<int>& points, const char* separator = " ") {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) out += separator;
    out += std::to_string(points[i]);
  }
  return out;
}

std::string blocks_text(const BlockSystem& system) {
  std::string out;
  for (std::size_t i = 0; i < system.blocks.size(); ++i) {
    if (i > 0) out += ' ';
    out += '{' + join_points(system.blocks[i]) + '}';
  }
  return out;
}

std::optional<int> explicit_degree(const CLI::Option* option, int value) {
  if (option->count() == 0) return std::nullopt;
  return value;
}

std::vector<std::string> read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open generator file: " + path);
  std::vector<std::string> texts;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    texts.push_back(line.substr(first, last - first + 1));
  }
  return texts;
}

// All generators are re-parsed at one common degree: an explicit --degree if
// given, otherwise the largest point mentioned by any of them.
GeneratorSet parse_generator_list(const std::vector<std::string>& texts,
                                  std::optional<int> degree) {
  if (texts.empty()) throw std::invalid_argument("no generators given");
  int common = degree.value_or(0);
  if (!degree)
    for (const std::string& text : texts)
      common = std::max(common, parse_permutation(text).degree());
  std::vector<Permutation> gens;
  gens.reserve(texts.size());
  for (const std::string& text : texts) gens.push_back(parse_permutation(text, common));
  return GeneratorSet(std::move(gens));
}

std::vector<int> parse_point_list(const std::string& text) {
  std::vector<int> points;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    points.push_back(std::stoi(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t')
      flush();
    else if (ch >= '0' && ch <= '9')
      token += ch;
    else
      throw std::invalid_argument("set spec must be a comma-separated list of points");
  }
  flush();
  if (points.empty()) throw std::invalid_argument("set spec is empty");
  return points;
}

int run_analyze(const std::string& perm_text, std::optional<int> degree, bool strict_defs,
                bool as_json) {
  const Permutation alpha = parse_permutation(perm_text, degree);
  const AnalysisReport report = analyze_permutation(alpha, strict_defs);
  if (as_json) {
    std::cout << json(report).dump(2) << "\n";
  } else {
    std::cout << "permutation: " << report.input << "\n";
    std::cout << "degree: " << report.degree << "\n";
    for (const std::string& line : report.explanation) std::cout << line << "\n";
  }
  return verdict_from_string(report.verdict) == VerdictTag::QualifiesL2 ||
                 verdict_from_string(report.verdict) == VerdictTag::QualifiesL3Plus
             ? 0
             : 2;
}

int run_group(const std::vector<std::string>& positional, const std::string& file,
              std::optional<int> degree, bool want_order, bool want_blocks, bool want_identify,
              bool as_json) {
  std::vector<std::string> texts;
  if (!file.empty()) texts = read_generator_file(file);
  texts.insert(texts.end(), positional.begin(), positional.end());
  const GeneratorSet gens = parse_generator_list(texts, degree);

  const bool transitive = is_transitive(gens);
  std::optional<bool> primitive;
  if (transitive) primitive = is_primitive(gens);
  if (want_blocks && !transitive)
    throw std::invalid_argument("block systems are defined for transitive groups only");

  std::optional<GroupOrder> order;
  if (want_order) order = group_order(gens);
  std::optional<std::vector<BlockSystem>> systems;
  if (want_blocks) systems = block_systems(gens);
  std::optional<GroupFamily> family;
  if (want_identify) family = identify_sym_or_alt(gens);

  if (as_json) {
    json j;
    j["degree"] = gens.degree();
    json gen_texts = json::array();
    for (const Permutation& g : gens.generators()) gen_texts.push_back(print_permutation(g));
    j["generators"] = gen_texts;
    j["transitive"] = transitive;
    j["primitive"] = primitive ? json(*primitive) : json(nullptr);
    if (order) j["order"] = order->str();
    if (systems) j["block_systems"] = *systems;
    if (family) j["family"] = to_string(*family);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "degree: " << gens.degree() << "\n";
    std::cout << "generators:\n";
    for (const Permutation& g : gens.generators())
      std::cout << "  " << print_permutation(g) << "\n";
    std::cout << "transitive: " << (transitive ? "yes" : "no") << "\n";
    std::cout << "primitive: " << (primitive ? (*primitive ? "yes" : "no") : "n/a (intransitive)")
              << "\n";
    if (order) std::cout << "order: " << order->str() << "\n";
    if (systems) {
      if (systems->empty()) {
        std::cout << "block systems: none (primitive)\n";
      } else {
        std::cout << "block systems:\n";
        for (const BlockSystem& system : *systems)
          std::cout << "  size " << system.block_size() << ": " << blocks_text(system) << "\n";
      }
    }
    if (family) std::cout << "family: " << to_string(*family) << "\n";
  }
  return 0;
}

int run_witness(const std::string& perm_text, const std::string& set_text,
                std::optional<int> degree, bool as_json) {
  const Permutation alpha = parse_permutation(perm_text, degree);
  const std::vector<int> candidate = parse_point_list(set_text);
  const std::optional<LemmaWitness> witness = lemma_witness(alpha, candidate);

  std::vector<int> image;
  if (witness) {
    const Permutation alpha_e = power(alpha, witness->exponent);
    for (int point : candidate) image.push_back(alpha_e(point));
  }

  if (as_json) {
    json j;
    j["input"] = print_permutation(alpha);
    j["degree"] = alpha.degree();
    j["set"] = candidate;
    j["witness"] = witness ? json(*witness) : json(nullptr);
    if (witness) j["image_of_set"] = image;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "alpha: " << print_permutation(alpha) << "\n";
    std::cout << "degree: " << alpha.degree() << "\n";
    std::cout << "set: {" << join_points(candidate) << "}\n";
    if (witness) {
      const std::string e = std::to_string(witness->exponent);
      std::cout << "witness: exponent " << e << "\n";
      std::cout << "  cycle s: (" << join_points(witness->s_cycle.elements) << "), a_s = "
                << witness->a_s << ", alpha^" << e << "(" << witness->a_s
                << ") = " << power(alpha, witness->exponent)(witness->a_s)
                << " leaves the set\n";
      std::cout << "  cycle t: (" << join_points(witness->t_cycle.elements) << "), a_t = "
                << witness->a_t << ", alpha^" << e << "(" << witness->a_t
                << ") = " << witness->a_t << " stays in the set\n";
      std::cout << "image of set under alpha^" << e << ": {" << join_points(image) << "}\n";
      std::cout << "the set cannot be a block of any transitive group containing alpha\n";
    } else {
      std::cout << "witness: none (the lemma hypothesis is not met for this set)\n";
    }
  }
  return 0;
}

int run_catalog(const std::string& name, bool verify, bool as_json) {
  if (name.empty()) {
    const std::vector<std::string> names = list_entries();
    if (as_json) {
      std::cout << json{{"entries", names}}.dump(2) << "\n";
    } else {
      for (const std::string& n : names) std::cout << n << "\n";
    }
    return 0;
  }

  const CatalogEntry item = entry(name);

  struct Check {
    std::string what;
    std::string expected;
    std::string got;
    bool ok;
  };
  std::vector<Check> checks;
  if (verify) {
    const bool transitive = is_transitive(item.generators);
    checks.push_back({"transitive", item.expected.transitive ? "yes" : "no",
                      transitive ? "yes" : "no", transitive == item.expected.transitive});
    if (transitive) {
      const bool primitive = is_primitive(item.generators);
      checks.push_back({"primitive", item.expected.primitive ? "yes" : "no",
                        primitive ? "yes" : "no", primitive == item.expected.primitive});
    }
    if (item.expected.order) {
      const GroupOrder order = group_order(item.generators);
      checks.push_back({"order", item.expected.order->str(), order.str(),
                        order == *item.expected.order});
    }
    if (item.expected.block_system) {
      const std::vector<BlockSystem> systems = block_systems(item.generators);
      const bool found = std::find(systems.begin(), systems.end(),
                                   *item.expected.block_system) != systems.end();
      checks.push_back({"block system", blocks_text(*item.expected.block_system),
                        found ? "present" : "absent", found});
    }
    const VerdictTag tag = classify_generator(item.generators.generators().front()).tag;
    checks.push_back({"first generator verdict",
                      to_string(item.expected.verdict_of_first_generator), to_string(tag),
                      tag == item.expected.verdict_of_first_generator});
  }
  const bool all_ok =
      std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });

  if (as_json) {
    json j;
    j["name"] = item.name;
    j["degree"] = item.degree;
    json gen_texts = json::array();
    for (const Permutation& g : item.generators.generators())
      gen_texts.push_back(print_permutation(g));
    j["generators"] = gen_texts;
    json expected;
    expected["transitive"] = item.expected.transitive;
    expected["primitive"] = item.expected.primitive;
    expected["order"] = item.expected.order ? json(item.expected.order->str()) : json(nullptr);
    expected["block_system"] =
        item.expected.block_system ? json(*item.expected.block_system) : json(nullptr);
    expected["verdict_of_first_generator"] = to_string(item.expected.verdict_of_first_generator);
    j["expected"] = expected;
    if (verify) {
      json checks_json = json::array();
      for (const Check& c : checks)
        checks_json.push_back(
            {{"what", c.what}, {"expected", c.expected}, {"got", c.got}, {"ok", c.ok}});
      j["verify"] = {{"ok", all_ok}, {"checks", checks_json}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "name: " << item.name << "\n";
    std::cout << "degree: " << item.degree << "\n";
    std::cout << "generators:\n";
    for (const Permutation& g : item.generators.generators())
      std::cout << "  " << print_permutation(g) << "\n";
    std::cout << "expected: " << (item.expected.transitive ? "transitive" : "intransitive")
              << ", " << (item.expected.primitive ? "primitive" : "imprimitive");
    if (item.expected.order) std::cout << ", order " << item.expected.order->str();
    std::cout << ", first generator " << to_string(item.expected.verdict_of_first_generator)
              << "\n";
    if (item.expected.block_system)
      std::cout << "expected block system: " << blocks_text(*item.expected.block_system) << "\n";
    for (const Check& c : checks)
      std::cout << "check " << c.what << ": expected " << c.expected << ", got " << c.got
                << (c.ok ? " [ok]" : " [MISMATCH]") << "\n";
    if (verify) std::cout << (all_ok ? "verification passed\n" : "verification FAILED\n");
  }
  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"primitivity criterion toolkit for permutation groups"};
  app.require_subcommand(1);

  std::string analyze_perm;
  int analyze_degree = 0;
  bool analyze_strict = false;
  bool analyze_json = false;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "classify a permutation by its cycle type partition");
  analyze->add_option("perm", analyze_perm, "permutation in cycle notation")->required();
  CLI::Option* analyze_degree_opt =
      analyze->add_option("--degree", analyze_degree, "degree of the ambient symmetric group")
          ->check(CLI::Range(2, 1000000));
  analyze->add_flag("--strict-defs", analyze_strict,
                    "use the literal k-range 1 < k < l-1 for special m-partitions");
  analyze->add_flag("--json", analyze_json, "emit JSON");

  std::vector<std::string> group_gens;
  std::string group_file;
  int group_degree = 0;
  bool group_order_flag = false, group_blocks = false, group_identify = false,
       group_json = false;
  CLI::App* group = app.add_subcommand("group", "inspect the group generated by permutations");
  group->add_option("gens", group_gens, "generators in cycle notation");
  group->add_option("--file", group_file, "file with one generator per line (# comments)");
  CLI::Option* group_degree_opt =
      group->add_option("--degree", group_degree, "common degree for all generators")
          ->check(CLI::Range(2, 1000000));
  group->add_flag("--order", group_order_flag, "compute the group order");
  group->add_flag("--blocks", group_blocks, "list all nontrivial block systems");
  group->add_flag("--identify", group_identify, "test for symmetric/alternating by order");
  group->add_flag("--json", group_json, "emit JSON");

  std::string witness_perm, witness_set;
  int witness_degree = 0;
  bool witness_json = false;
  CLI::App* witness = app.add_subcommand(
      "witness", "find a power of alpha showing a set cannot be a block");
  witness->add_option("perm", witness_perm, "permutation in cycle notation")->required();
  witness->add_option("set", witness_set, "candidate set, e.g. 1,2,3")->required();
  CLI::Option* witness_degree_opt =
      witness->add_option("--degree", witness_degree, "degree of the ambient symmetric group")
          ->check(CLI::Range(2, 1000000));
  witness->add_flag("--json", witness_json, "emit JSON");

  std::string catalog_name;
  bool catalog_verify = false, catalog_json = false;
  CLI::App* catalog = app.add_subcommand("catalog", "built-in example groups");
  catalog->add_option("name", catalog_name, "entry name (omit to list)");
  catalog->add_flag("--verify", catalog_verify, "check the entry against its expectations");
  catalog->add_flag("--json", catalog_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*analyze)
      return run_analyze(analyze_perm, explicit_degree(analyze_degree_opt, analyze_degree),
                         analyze_strict, analyze_json);
    if (*group)
      return run_group(group_gens, group_file, explicit_degree(group_degree_opt, group_degree),
                       group_order_flag, group_blocks, group_identify, group_json);
    if (*witness)
      return run_witness(witness_perm, witness_set,
                         explicit_degree(witness_degree_opt, witness_degree), witness_json);
    if (*catalog) return run_catalog(catalog_name, catalog_verify, catalog_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
