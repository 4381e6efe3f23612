#include <doctest.h>

#include <random>
#include <string>

#include "nlom/markup.hpp"
#include "oracles.hpp"

using namespace nlom;

namespace {

// Random schema-agnostic trees for the round-trip property.
MarkupNode random_tree(std::mt19937& rng, int depth) {
    static const char* tags[] = {"alpha", "beta", "gamma", "delta", "word_like", "x"};
    static const char* texts[] = {"", "I", "come here", "a&b", "x<y>z", "don't"};
    std::uniform_int_distribution<int> tag_pick(0, 5);
    std::uniform_int_distribution<int> text_pick(0, 5);
    std::uniform_int_distribution<int> breadth(0, depth > 0 ? 3 : 0);

    MarkupNode n;
    n.tag = tags[tag_pick(rng)];
    int kids = breadth(rng);
    if (kids == 0)
        n.text = texts[text_pick(rng)];
    else
        for (int i = 0; i < kids; ++i)
            n.children.push_back(random_tree(rng, depth - 1));
    return n;
}

} // namespace

TEST_CASE("two leaf siblings wrap under the synthetic root") {
    auto root = parse_markup("<mood>statement</mood><complexity>simple</complexity>");
    CHECK(root.tag == "nlml");
    REQUIRE(root.children.size() == 2);
    CHECK(root.children[0].tag == "mood");
    CHECK(root.children[0].text == "statement");
    CHECK(root.children[1].tag == "complexity");
    CHECK(root.children[1].text == "simple");
}

TEST_CASE("empty document parses to a bare root") {
    auto root = parse_markup("");
    CHECK(root.tag == "nlml");
    CHECK(root.children.empty());
    CHECK(root.text.empty());
}

TEST_CASE("depth-3 chain matches the scan oracle") {
    const std::string in = "<subject><noun><word>I</word></noun></subject>";

    // Expected structure frozen from oracle_scan_markup(in):
    //   open subject@0, open noun@1, open word@2, text "I"@3,
    //   close word@2, close noun@1, close subject@0
    auto events = nlom::test::oracle_scan_markup(in);
    REQUIRE(events.size() == 7);
    CHECK(events[0] == nlom::test::TagEvent{"open", "subject", 0});
    CHECK(events[3] == nlom::test::TagEvent{"text", "I", 3});
    CHECK(events[6] == nlom::test::TagEvent{"close", "subject", 0});

    auto root = parse_markup(in);
    REQUIRE(root.children.size() == 1);
    const auto& subject = root.children[0];
    CHECK(subject.tag == "subject");
    REQUIRE(subject.children.size() == 1);
    const auto& noun = subject.children[0];
    CHECK(noun.tag == "noun");
    REQUIRE(noun.children.size() == 1);
    CHECK(noun.children[0].tag == "word");
    CHECK(noun.children[0].text == "I");
}

TEST_CASE("whitespace between siblings is dropped, leaf text is trimmed") {
    auto root = parse_markup("  <mood>\n  statement\n </mood>\n\t<word> a  b </word>\n");
    REQUIRE(root.children.size() == 2);
    CHECK(root.children[0].text == "statement");
    CHECK(root.children[1].text == "a  b"); // inner spacing preserved
}

TEST_CASE("entities decode in character data") {
    auto root = parse_markup("<word>a &lt;b&gt; &amp; c</word>");
    CHECK(root.children[0].text == "a <b> & c");
}

TEST_CASE("mismatched close reports UnbalancedTag with an offset") {
    try {
        parse_markup("<subject><noun></subject>");
        FAIL("expected MarkupError");
    } catch (const MarkupError& e) {
        CHECK(e.code() == MarkupErrorCode::UnbalancedTag);
        CHECK(e.offset() == 15);
    }
}

TEST_CASE("close without open reports UnbalancedTag") {
    CHECK_THROWS_AS(parse_markup("</mood>"), MarkupError);
    try {
        parse_markup("</mood>");
    } catch (const MarkupError& e) {
        CHECK(e.code() == MarkupErrorCode::UnbalancedTag);
    }
}

TEST_CASE("EOF inside an element reports UnterminatedTag") {
    for (const char* in : {"<subject>", "<subject><noun>x</noun>", "<subject"}) {
        try {
            parse_markup(in);
            FAIL_CHECK("expected MarkupError for: " << in);
        } catch (const MarkupError& e) {
            CHECK(e.code() == MarkupErrorCode::UnterminatedTag);
        }
    }
}

TEST_CASE("bad tag names report IllegalTagName") {
    for (const char* in : {"<Subject>x</Subject>", "<tag1>x</tag1>", "<a b>x</a b>",
                           "<>x</>", "<tag/>"}) {
        try {
            parse_markup(in);
            FAIL_CHECK("expected MarkupError for: " << in);
        } catch (const MarkupError& e) {
            CHECK(e.code() == MarkupErrorCode::IllegalTagName);
        }
    }
}

TEST_CASE("attribute syntax is rejected") {
    CHECK_THROWS_AS(parse_markup("<mood kind=\"x\">statement</mood>"), MarkupError);
}

TEST_CASE("parse is deterministic") {
    const std::string in = "<subject><noun><word>I</word></noun></subject><circum><word>here</word></circum>";
    CHECK(parse_markup(in) == parse_markup(in));
}

TEST_CASE("round trip: serialize then parse is structurally identical") {
    std::mt19937 rng(20240817);
    for (int it = 0; it < 200; ++it) {
        MarkupNode root;
        root.tag = "nlml";
        std::uniform_int_distribution<int> breadth(0, 4);
        int kids = breadth(rng);
        for (int i = 0; i < kids; ++i)
            root.children.push_back(random_tree(rng, 3));
        auto text = serialize_markup(root);
        auto back = parse_markup(text);
        CHECK(back == root);

        auto pretty = serialize_markup_pretty(root);
        CHECK(parse_markup(pretty) == root);
    }
}

TEST_CASE("serialized text matches the scan oracle event stream") {
    MarkupNode root;
    root.tag = "nlml";
    MarkupNode subject{"subject", "", {MarkupNode{"word", "I <3 & you", {}}}};
    root.children.push_back(subject);
    auto text = serialize_markup(root);
    auto events = nlom::test::oracle_scan_markup(text);
    REQUIRE(events.size() == 5);
    CHECK(events[0] == nlom::test::TagEvent{"open", "subject", 0});
    CHECK(events[1] == nlom::test::TagEvent{"open", "word", 1});
    CHECK(events[2] == nlom::test::TagEvent{"text", "I <3 & you", 2});
}

TEST_CASE("find helpers") {
    auto root = parse_markup("<noun><type>perspronoun</type><word>I</word></noun>");
    const auto& noun = root.children[0];
    REQUIRE(noun.find("word") != nullptr);
    CHECK(noun.find("word")->text == "I");
    CHECK(noun.find("missing") == nullptr);
    CHECK(noun.count("type") == 1);
    CHECK(noun.child_text("type") == "perspronoun");
    CHECK(noun.child_text("absent") == "");
}
