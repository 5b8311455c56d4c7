#include "scimap/attributes.hpp"
#include "scimap/error.hpp"

#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include "doctest.h"

#include <random>
#include <sstream>

using namespace scimap;

TEST_CASE("tokenize_title splits hyphens and drops short and stop words") {
    const std::string title = "Ultrasonographic Study of Sucking and Swallowing by Newborn-Infants";
    const std::vector<std::string> expected{"ultrasonographic", "study", "sucking", "swallowing", "newborn", "infants"};
    // Expected list cross-checked against the stream-splitting oracle.
    REQUIRE(oracle::tokenize(title, default_stopwords()) == expected);
    CHECK(tokenize_title(title, default_stopwords()) == expected);

    CHECK(tokenize_title("", default_stopwords()).empty());
    CHECK(tokenize_title("The The THE", StopwordSet{"the"}).empty());
}

TEST_CASE("tokenize_title keeps UTF-8 letters and counts code points") {
    // "été" is three code points but five bytes
    CHECK(tokenize_title("L'\xC3\xA9t\xC3\xA9 Sociologie", {}) == std::vector<std::string>{"\xC3\xA9t\xC3\xA9", "sociologie"});
    // "ée" is two code points: dropped
    CHECK(tokenize_title("\xC3\xA9" "e", {}).empty());
}

TEST_CASE("property: tokenizer agrees with the oracle on random titles") {
    std::mt19937_64 rng(3);
    const char alphabet[] = "abcdeABCDE -,.;:'0123()\xC3\xA9";
    for (int trial = 0; trial < 500; ++trial) {
        std::string title;
        const auto len = rng() % 40;
        for (std::size_t i = 0; i < len; ++i) {
            const auto c = alphabet[rng() % (sizeof(alphabet) - 1)];
            // keep UTF-8 sequences whole
            if (c == '\xC3') {
                title += "\xC3\xA9";
            } else if (c != '\xA9') {
                title += c;
            }
        }
        CHECK(tokenize_title(title, default_stopwords()) == oracle::tokenize(title, default_stopwords()));
    }
}

TEST_CASE("presets") {
    CHECK(animation_thresholds() == ClassThresholds{2, 2, 2});
    CHECK(static_map_thresholds() == ClassThresholds{1, 3, 1});
}

TEST_CASE("load_stopwords") {
    std::istringstream in("the\n# comment\n\n  Of \nand\n");
    const auto words = load_stopwords(in);
    CHECK(words == StopwordSet{"the", "of", "and"});
    CHECK(default_stopwords().size() >= 100);
    CHECK(default_stopwords().contains("and"));
}

TEST_CASE("synthetic corpus catalog has 48 + 27 + 26 = 101 variables") {
    const auto recs = testing::focal_author_corpus();
    const auto cat = build_catalog(std::span<const Record>(recs), static_map_thresholds(),
                                   std::string(testing::kFocalAuthor), default_stopwords());
    CHECK(cat.count(AttributeClass::Author) == 48);
    CHECK(cat.count(AttributeClass::Word) == 27);
    CHECK(cat.count(AttributeClass::Journal) == 26);
    CHECK(cat.size() == 101);
    CHECK_FALSE(cat.find(AttributeClass::Author, "moreau a").has_value());
    CHECK(cat.excluded_author == "moreau a");

    // order: authors, words, journals; alphabetical within class
    for (std::size_t i = 1; i < cat.size(); ++i) {
        const auto& a = cat.attributes[i - 1];
        const auto& b = cat.attributes[i];
        CHECK((a.cls < b.cls || (a.cls == b.cls && a.label < b.label)));
    }
    const auto idx = cat.find(AttributeClass::Word, "translation");
    REQUIRE(idx);
    CHECK(cat.attributes[*idx].first_year == 1975);
}

TEST_CASE("without exclusion the focal author is a 49th author") {
    const auto recs = testing::focal_author_corpus();
    const auto cat = build_catalog(std::span<const Record>(recs), static_map_thresholds(), std::nullopt,
                                   default_stopwords());
    CHECK(cat.count(AttributeClass::Author) == 49);
    const auto idx = cat.find(AttributeClass::Author, "moreau a");
    REQUIRE(idx);
    CHECK(cat.attributes[*idx].freq == 65);
}

TEST_CASE("edge cases") {
    CHECK(build_catalog(RecordSet{}, static_map_thresholds(), std::nullopt, default_stopwords()).empty());
    CHECK(build_catalog(RecordSet{}, animation_thresholds(), std::nullopt, default_stopwords()).empty());

    RecordSet two;
    two.records.push_back({0, {"law j"}, "Translation work", "minerva", 1990});
    two.records.push_back({1, {"rip a"}, "Translation again", "minerva", 1991});
    const auto cat = build_catalog(two, static_map_thresholds(), std::nullopt, default_stopwords());
    CHECK_FALSE(cat.find(AttributeClass::Word, "translation").has_value());
    CHECK(cat.find(AttributeClass::Journal, "minerva").has_value());

    CHECK_THROWS_AS(build_catalog(two, ClassThresholds{0, 1, 1}, std::nullopt, default_stopwords()), Error);
}

TEST_CASE("properties: threshold monotonicity, class partition, exclusion") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto recs = testing::random_records(rng, 5 + rng() % 30);
        // share a small vocabulary so frequencies exceed one
        for (auto& r : recs) {
            r.title += " network science policy";
            if (!r.authors.empty() && rng() % 2) r.authors[0] = "moreau a";
        }
        const std::span<const Record> span(recs);
        const std::optional<std::string> focal = (trial % 2) ? std::optional<std::string>("Moreau, A") : std::nullopt;

        ClassThresholds t{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3};
        const auto base = build_catalog(span, t, focal, default_stopwords());
        CHECK(base.size() == base.count(AttributeClass::Author) + base.count(AttributeClass::Word) +
                                 base.count(AttributeClass::Journal));
        if (focal) CHECK_FALSE(base.find(AttributeClass::Author, "moreau a").has_value());
        for (const auto& a : base.attributes) CHECK(a.freq >= t[a.cls]);

        for (auto cls : kAllClasses) {
            auto raised = t;
            raised[cls] += 1 + rng() % 3;
            CHECK(build_catalog(span, raised, focal, default_stopwords()).size() <= base.size());
        }
    }
}
