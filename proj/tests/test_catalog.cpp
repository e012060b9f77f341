#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "permprim/catalog.hpp"

using namespace permprim;

TEST_CASE("fixed entries carry the transcribed generators") {
  const CatalogEntry m12 = entry("m12");
  CHECK(m12.degree == 12);
  REQUIRE(m12.generators.generators().size() == 2);
  CHECK(print_permutation(m12.generators.generators()[0]) == "(1 2 3 5 6 8 9 11 10 7 4)");
  CHECK(print_permutation(m12.generators.generators()[1]) == "(3 4)(6 7)(9 10)(11 12)");
  CHECK(m12.expected.order == GroupOrder(95040));
  CHECK(m12.expected.verdict_of_first_generator == VerdictTag::QualifiesL2);

  const CatalogEntry psl = entry("psl_2_7");
  CHECK(psl.degree == 8);
  CHECK(psl.generators.generators().size() == 3);
  CHECK(psl.expected.order == GroupOrder(168));

  const CatalogEntry m24 = entry("m24");
  CHECK(m24.degree == 24);
  CHECK(m24.generators.generators().size() == 4);
  CHECK(m24.expected.order == GroupOrder(244823040));
  // the 23-cycle fixes point 24, so its cycle type is [1, 23]
  CHECK(partition_of(m24.generators.generators()[0]).parts() == std::vector<int>{1, 23});
}

TEST_CASE("worked-example entries") {
  const CatalogEntry g2 = entry("ex4_1_G2");
  REQUIRE(g2.expected.block_system.has_value());
  CHECK(g2.expected.block_system->blocks ==
        std::vector<std::vector<int>>{{1, 2, 3, 4, 5}, {6, 7, 8, 9, 10}});
  CHECK_FALSE(g2.expected.primitive);
  CHECK(g2.expected.order == GroupOrder(28800));

  const CatalogEntry g1 = entry("ex4_1_G1");
  CHECK(g1.expected.primitive);
  CHECK(g1.expected.order == GroupOrder(3628800));
  CHECK(g1.expected.verdict_of_first_generator == VerdictTag::FailsMPartition);

  const CatalogEntry big = entry("ex4_2_G1");
  CHECK(big.degree == 30);
  CHECK(big.expected.order == factorial(30));
  CHECK(big.expected.verdict_of_first_generator == VerdictTag::FailsSpecialMPartition);

  const CatalogEntry wreath = entry("ex4_2_G2");
  REQUIRE(wreath.expected.block_system.has_value());
  REQUIRE(wreath.expected.block_system->blocks.size() == 6);
  CHECK(wreath.expected.block_system->block_size() == 5);
  CHECK(wreath.expected.block_system->blocks[0] == std::vector<int>{1, 6, 11, 16, 21});
  CHECK(wreath.expected.block_system->blocks[5] == std::vector<int>{26, 27, 28, 29, 30});
  CHECK(wreath.expected.order == GroupOrder("2149908480000000"));
}

TEST_CASE("every fixed entry is transitive with the matching first-generator verdict") {
  for (const char* name :
       {"ex4_1_G1", "ex4_1_G2", "ex4_2_G1", "ex4_2_G2", "m12", "m24", "psl_2_7"}) {
    const CatalogEntry item = entry(name);
    INFO("entry " << name);
    CHECK(is_transitive(item.generators));
    CHECK(classify_generator(item.generators.generators().front()).tag ==
          item.expected.verdict_of_first_generator);
  }
}

TEST_CASE("imprimitive entries expose their expected block system") {
  for (const char* name : {"ex4_1_G2", "ex4_2_G2"}) {
    const CatalogEntry item = entry(name);
    INFO("entry " << name);
    const auto systems = block_systems(item.generators);
    REQUIRE(item.expected.block_system.has_value());
    CHECK(std::find(systems.begin(), systems.end(), *item.expected.block_system) !=
          systems.end());
    CHECK_FALSE(is_primitive(item.generators));
  }
}

TEST_CASE("moderate-size orders verify locally") {
  CHECK(group_order(entry("ex4_1_G1").generators) == GroupOrder(3628800));
  CHECK(group_order(entry("ex4_1_G2").generators) == GroupOrder(28800));
  CHECK(group_order(entry("psl_2_7").generators) == GroupOrder(168));
  CHECK(group_order(entry("m12").generators) == GroupOrder(95040));
}

TEST_CASE("symmetric and alternating family entries") {
  SECTION("even degrees") {
    const CatalogEntry s6 = entry("sym(6)");
    CHECK(s6.degree == 6);
    CHECK(print_permutation(s6.generators.generators()[0]) == "(2 3 4 5 6)");
    CHECK(print_permutation(s6.generators.generators()[1]) == "(1 2)");
    CHECK(s6.expected.order == factorial(6));
    CHECK(s6.expected.verdict_of_first_generator == VerdictTag::QualifiesL2);

    const CatalogEntry a6 = entry("alt(6)");
    CHECK(print_permutation(a6.generators.generators()[1]) == "(1 2)(3 4)");
    CHECK(a6.expected.order == factorial(6) / 2);
  }
  SECTION("small odd degrees use a single cycle") {
    const CatalogEntry s5 = entry("sym(5)");
    CHECK(print_permutation(s5.generators.generators()[0]) == "(1 2 3 4 5)");
    CHECK(s5.expected.verdict_of_first_generator == VerdictTag::NotCoveredSingleCycle);
    const CatalogEntry a7 = entry("alt(7)");
    CHECK(print_permutation(a7.generators.generators()[1]) == "(1 2 3)");
  }
  SECTION("larger odd degrees split the long cycle") {
    const CatalogEntry s9 = entry("sym(9)");  // k = 4
    CHECK(print_permutation(s9.generators.generators()[0]) == "(1 2 3)(4 5 6 7 8)");
    CHECK(s9.expected.verdict_of_first_generator == VerdictTag::QualifiesL3Plus);

    const CatalogEntry s11 = entry("sym(11)");  // k = 5: parts [1,4,6] share a factor
    CHECK(print_permutation(s11.generators.generators()[0]) == "(1 2 3 4)(5 6 7 8 9 10)");
    CHECK(s11.expected.verdict_of_first_generator == VerdictTag::FailsDistinctOrCoprime);
  }
  SECTION("families actually generate what they claim") {
    for (int d : {3, 4, 5, 6, 7, 8, 9}) {
      INFO("degree " << d);
      CHECK(identify_sym_or_alt(entry("sym(" + std::to_string(d) + ")").generators) ==
            GroupFamily::Symmetric);
      CHECK(identify_sym_or_alt(entry("alt(" + std::to_string(d) + ")").generators) ==
            GroupFamily::Alternating);
    }
  }
}

TEST_CASE("entry names are validated") {
  REQUIRE_THROWS_AS(entry("nosuch"), std::invalid_argument);
  REQUIRE_THROWS_AS(entry("sym(2)"), std::invalid_argument);
  REQUIRE_THROWS_AS(entry("sym()"), std::invalid_argument);
  REQUIRE_THROWS_AS(entry("sym(x)"), std::invalid_argument);
  REQUIRE_THROWS_AS(entry("alt(1)"), std::invalid_argument);
  REQUIRE_THROWS_AS(entry("sym(99999)"), std::invalid_argument);
}

TEST_CASE("listing") {
  const std::vector<std::string> names = list_entries();
  for (const char* expected :
       {"m12", "m24", "psl_2_7", "ex4_1_G1", "ex4_2_G2", "sym(6)", "alt(9)"})
    CHECK(std::find(names.begin(), names.end(), expected) != names.end());
  // everything listed resolves
  for (const std::string& name : names) CHECK_NOTHROW(entry(name));
}
