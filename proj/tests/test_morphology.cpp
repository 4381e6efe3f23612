#include "doctest.h"

#include "nlom/morphology.hpp"
#include "oracles.hpp"

using namespace nlom;
using namespace nlom::morph;

TEST_CASE("third person singular matches the hand table") {
    for (const auto& [base, expected] : test::oracle_third_singular_table()) {
        CAPTURE(base);
        CHECK(third_singular(base) == expected);
    }
    CHECK(third_singular("be") == "is");
    CHECK(third_singular("have") == "has");
    CHECK(third_singular("do") == "does");
}

TEST_CASE("base_form undoes third_singular and is idempotent") {
    for (const auto& [base, inflected] : test::oracle_third_singular_table()) {
        CAPTURE(base);
        CHECK(base_form(inflected) == base);
        CHECK(base_form(base) == base);
        CHECK(base_form(base_form(inflected)) == base);
    }
}

TEST_CASE("irregular forms reduce to their base") {
    CHECK(base_form("met") == "meet");
    CHECK(base_form("came") == "come");
    CHECK(base_form("went") == "go");
    CHECK(base_form("sang") == "sing");
    CHECK(base_form("wrote") == "write");
    CHECK(base_form("written") == "write");
    CHECK(base_form("was") == "be");
    CHECK(base_form("were") == "be");
    CHECK(base_form("is") == "be");
    CHECK(base_form("am") == "be");
    CHECK(base_form("has") == "have");
    CHECK(base_form("had") == "have");
    CHECK(base_form("does") == "do");
    CHECK(base_form("did") == "do");
    CHECK(base_form("goes") == "go");
}

TEST_CASE("regular -ed pasts reduce to their base") {
    CHECK(base_form("played") == "play");
    CHECK(base_form("wanted") == "want");
    CHECK(base_form("danced") == "dance");
    CHECK(base_form("moved") == "move");
    CHECK(base_form("tried") == "try");
}

TEST_CASE("do-support auxiliary selection") {
    CHECK(do_aux("past", Person::First, GramNumber::Sing) == "did");
    CHECK(do_aux("past", Person::Third, GramNumber::Plur) == "did");
    CHECK(do_aux("present", Person::Third, GramNumber::Sing) == "does");
    CHECK(do_aux("present", Person::Third, GramNumber::Plur) == "do");
    CHECK(do_aux("present", Person::First, GramNumber::Sing) == "do");
    CHECK(do_aux("present", Person::Second, GramNumber::Sing) == "do");
}

TEST_CASE("be paradigm") {
    CHECK(be_form("present", Person::First, GramNumber::Sing) == "am");
    CHECK(be_form("present", Person::Second, GramNumber::Sing) == "are");
    CHECK(be_form("present", Person::Third, GramNumber::Sing) == "is");
    CHECK(be_form("present", Person::First, GramNumber::Plur) == "are");
    CHECK(be_form("past", Person::First, GramNumber::Sing) == "was");
    CHECK(be_form("past", Person::Second, GramNumber::Sing) == "were");
    CHECK(be_form("past", Person::Third, GramNumber::Sing) == "was");
    CHECK(be_form("past", Person::Third, GramNumber::Plur) == "were");
}

TEST_CASE("present_form agrees with the subject") {
    CHECK(present_form("come", Person::Third, GramNumber::Sing) == "comes");
    CHECK(present_form("come", Person::First, GramNumber::Sing) == "come");
    CHECK(present_form("come", Person::Third, GramNumber::Plur) == "come");
    CHECK(present_form("be", Person::First, GramNumber::Sing) == "am");
    CHECK(present_form("be", Person::Third, GramNumber::Sing) == "is");
    CHECK(present_form("be", Person::Third, GramNumber::Plur) == "are");
}

TEST_CASE("nominative pronoun mapping") {
    CHECK(nominative("him") == "he");
    CHECK(nominative("me") == "I");
    CHECK(nominative("her") == "she");
    CHECK(nominative("us") == "we");
    CHECK(nominative("them") == "they");
    CHECK(nominative("whom") == "who");
    CHECK(nominative("you") == "you");
    CHECK(nominative("I") == "I");
    CHECK(nominative("it") == "it");
}

TEST_CASE("auxiliary and query-word classification") {
    for (const char* m : {"will", "would", "shall", "should", "can", "could",
                          "may", "might", "must"})
        CHECK(is_modal(m));
    CHECK_FALSE(is_modal("come"));
    CHECK(is_be_form("is"));
    CHECK(is_have_form("had"));
    CHECK(is_do_form("does"));
    CHECK(is_aux_word("will"));
    CHECK(is_aux_word("was"));
    CHECK_FALSE(is_aux_word("come"));
    for (const char* q : {"who", "whom", "whose", "what", "which", "where",
                          "when", "why", "how"})
        CHECK(is_query_word(q));
    CHECK_FALSE(is_query_word("come"));
    CHECK_FALSE(is_query_word("that"));
}
