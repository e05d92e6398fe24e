#include <doctest.h>

#include <string>

#include "structmap/catalog.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace structmap;
using namespace structmap::testing;

TEST_CASE("lookup finds structures by exact name") {
    auto catalog = seed_catalog();
    const auto* group = catalog_lookup(catalog, "Group");
    REQUIRE(group != nullptr);
    CHECK(group->sections == std::vector<std::string>{"groups"});
    CHECK(catalog_lookup(catalog, "Nonexistent") == nullptr);
    CHECK(catalog_lookup(catalog, "group") == nullptr);  // case-sensitive
    CHECK(catalog_lookup(Catalog{}, "Group") == nullptr);
}

TEST_CASE("lookup agrees with list membership") {
    auto catalog = seed_catalog();
    for (const auto& def : catalog.structures) {
        const auto* found = catalog_lookup(catalog, def.name);
        REQUIRE(found != nullptr);
        CHECK(found->name == def.name);
    }
}

TEST_CASE("stats of the empty catalog are zero") {
    CHECK(catalog_stats(Catalog{}) == CatalogStats{0, 0, 0});
}

TEST_CASE("seed stats match a grep-style count of declarations") {
    auto source = seed_source();
    auto stats = catalog_stats(seed_catalog());
    CHECK(stats.structure_count == count_structure_decls(source));
    CHECK(stats.section_count == count_section_decls(source));
    CHECK(stats.structure_count >= 40);
    CHECK(stats.section_count == 10);
}

TEST_CASE("color parsing accepts exactly #RRGGBB") {
    CHECK(RgbColor::parse("#E69500").has_value());
    CHECK(RgbColor::parse("#e69500").has_value());  // hex digits case-insensitive
    CHECK(RgbColor::parse("#e69500")->to_hex() == "#E69500");
    CHECK_FALSE(RgbColor::parse("E69500").has_value());
    CHECK_FALSE(RgbColor::parse("#E6950").has_value());
    CHECK_FALSE(RgbColor::parse("#E695000").has_value());
    CHECK_FALSE(RgbColor::parse("#E6950G").has_value());
    CHECK_FALSE(RgbColor::parse("").has_value());
}
