#include <doctest.h>

#include <numeric>

#include "msnake/words.hpp"

using namespace msnake;

TEST_CASE("rational index validation") {
    CHECK_THROWS_AS(RationalIndex(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(RationalIndex(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(RationalIndex(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(RationalIndex(-1, 2), std::invalid_argument);
    CHECK(RationalIndex(1, 1).str() == "1/1");
    CHECK(RationalIndex(4, 7).str() == "4/7");
}

TEST_CASE("rational parsing is strict") {
    CHECK(parse_rational("3/5") == RationalIndex(3, 5));
    CHECK_THROWS_AS(parse_rational("3/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("/5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("3/5x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("2/4"), std::invalid_argument);
}

TEST_CASE("christoffel words of small indices") {
    CHECK(christoffel_word(RationalIndex(1, 1)) == "ab");
    CHECK(christoffel_word(RationalIndex(1, 2)) == "aab");
    CHECK(christoffel_word(RationalIndex(2, 3)) == "aabab");
    CHECK(christoffel_word(RationalIndex(2, 5)) == "aaabaab");
    CHECK(christoffel_word(RationalIndex(3, 5)) == "aabaabab");
    CHECK(christoffel_word(RationalIndex(4, 5)) == "aabababab");
    CHECK(christoffel_word(RationalIndex(4, 7)) == "aabaabaabab");
    CHECK(christoffel_word(RationalIndex(5, 6)) == "aababababab");
}

TEST_CASE("christoffel words are lattice paths under the segment") {
    for (int b = 1; b <= 200; ++b) {
        for (int a = 1; a <= b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            RationalIndex rho(a, b);
            std::string w = christoffel_word(rho);
            REQUIRE(w.size() == static_cast<std::size_t>(a + b));
            CHECK(std::count(w.begin(), w.end(), 'a') == b);
            CHECK(std::count(w.begin(), w.end(), 'b') == a);
            CHECK(w.front() == 'a');
            CHECK(w.back() == 'b');
            if (a < b) CHECK(w.substr(0, 2) == "aa");
            CHECK(w.substr(w.size() - 2) == "ab");
            // stays weakly below the segment from (0,0) to (b,a)
            long long p = 0, q = 0;
            for (char ch : w) {
                if (ch == 'a')
                    ++p;
                else
                    ++q;
                CHECK(q * b <= static_cast<long long>(a) * p);
            }
        }
    }
}

TEST_CASE("modified words of small indices") {
    CHECK(modify_word(christoffel_word(RationalIndex(1, 1))) == "B");
    CHECK(modify_word(christoffel_word(RationalIndex(1, 2))) == "AB");
    CHECK(modify_word(christoffel_word(RationalIndex(2, 3))) == "ABB");
    CHECK(modify_word(christoffel_word(RationalIndex(2, 5))) == "AABAB");
    CHECK(modify_word(christoffel_word(RationalIndex(3, 5))) == "ABABB");
    CHECK(modify_word(christoffel_word(RationalIndex(4, 7))) == "ABABABB");
}

TEST_CASE("modification rejects an unpaired beta") {
    CHECK_THROWS_AS(modify_word("b"), MalformedWord);
    CHECK_THROWS_AS(modify_word("ba"), MalformedWord);
    CHECK_THROWS_AS(modify_word("abb" "b"), MalformedWord);  // third b has no alpha
}

TEST_CASE("modified word counts letters of both kinds") {
    for (int b = 1; b <= 200; ++b) {
        for (int a = 1; a <= b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            std::string m = modify_word(christoffel_word(RationalIndex(a, b)));
            REQUIRE(m.size() == static_cast<std::size_t>(b));
            CHECK(std::count(m.begin(), m.end(), 'A') == b - a);
            CHECK(std::count(m.begin(), m.end(), 'B') == a);
        }
    }
}

TEST_CASE("run profiles of small indices") {
    CHECK(run_profile("ABABB") == std::vector<int>{1, 1});
    CHECK(run_profile("ABABABB") == std::vector<int>{1, 1, 1});
    CHECK(run_profile("AB") == std::vector<int>{0});
    CHECK(run_profile("ABB") == std::vector<int>{1});
    CHECK(run_profile("AABAB") == std::vector<int>{0, 1, 0});
    CHECK(run_profile("B") == std::vector<int>{});
}

TEST_CASE("run profile sums to a-1") {
    for (int b = 1; b <= 200; ++b) {
        for (int a = 1; a <= b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            std::vector<int> r = run_profile(modify_word(christoffel_word(RationalIndex(a, b))));
            REQUIRE(r.size() == static_cast<std::size_t>(b - a));
            CHECK(std::accumulate(r.begin(), r.end(), 0) == a - 1);
            for (int k : r) CHECK(k >= 0);
        }
    }
}
