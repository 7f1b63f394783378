#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "sloped_width/oracle.hpp"
#include "sloped_width/width.hpp"

using namespace sloped_width;

namespace {

// Independent comparator: sort both lists non-increasing, pad the
// shorter with a -1 sentinel, and compare entry by entry. The sentinel
// implements "a proper prefix is smaller".
std::strong_ordering brute_compare(std::vector<long long> a, std::vector<long long> b) {
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    std::size_t n = std::max(a.size(), b.size());
    a.resize(n, -1);
    b.resize(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] < b[i]) return std::strong_ordering::less;
        if (a[i] > b[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

}  // namespace

TEST_CASE("width comparison") {
    CHECK(compare(Width{5}, Width{4, 4}) == std::strong_ordering::greater);
    CHECK(compare(Width{4}, Width{4, 4}) == std::strong_ordering::less);
    CHECK(compare(Width{3, 3}, Width{3, 3}) == std::strong_ordering::equal);
    CHECK(compare(Width{4, 3}, Width{4, 4}) == std::strong_ordering::less);
    CHECK(Width{4} < Width{4, 3});  // prefix rule: shorter is smaller
}

TEST_CASE("comparison agrees with the brute-force comparator") {
    auto widths = enumerate_widths(6, 3);
    for (const Width& a : widths)
        for (const Width& b : widths)
            CHECK(compare(a, b) == brute_compare(a.entries(), b.entries()));
}

TEST_CASE("canonical order is non-increasing and input order is irrelevant") {
    Width w{1, 4, 2};
    CHECK(w.entries() == std::vector<long long>{4, 2, 1});
    CHECK(w == Width{4, 1, 2});
    CHECK_THROWS_AS(Width{-1}, std::invalid_argument);
}

TEST_CASE("add_pointwise") {
    CHECK(add_pointwise(Width{5}, Width{2}) == Width{7});
    CHECK(add_pointwise(Width{4, 4}, Width{1, 0}) == Width{5, 4});
    CHECK(add_pointwise(Width{3, 2}, Width{0, 0}) == Width{3, 2});
    CHECK_THROWS_AS(add_pointwise(Width{3}, Width{3, 3}), std::invalid_argument);
}

TEST_CASE("add_at") {
    CHECK(add_at(Width{5}, 1, 2) == Width{7});
    CHECK(add_at(Width{4, 3}, 1, 2) == Width{6, 3});
    CHECK(add_at(Width{4, 4}, 2, 3) == Width{7, 4});
    CHECK_THROWS_AS(add_at(Width{4}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(add_at(Width{4}, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(add_at(Width{3}, 1, -4), std::domain_error);
}

TEST_CASE("add_at re-canonicalizes like the brute-force route") {
    auto widths = enumerate_widths(4, 3);
    for (const Width& w : widths) {
        for (std::size_t pos = 1; pos <= w.size(); ++pos) {
            for (long long m = -2; m <= 3; ++m) {
                std::vector<long long> expect = w.entries();
                expect[pos - 1] += m;
                if (expect[pos - 1] < 0) {
                    CHECK_THROWS_AS(add_at(w, pos, m), std::domain_error);
                    continue;
                }
                std::sort(expect.rbegin(), expect.rend());
                CHECK(add_at(w, pos, m).entries() == expect);
            }
        }
    }
}

TEST_CASE("add_at with positive increment at the top strictly enlarges") {
    for (const Width& w : enumerate_widths(5, 3))
        for (long long m = 1; m <= 3; ++m) CHECK(add_at(w, 1, m) > w);
}

TEST_CASE("every operation yields the canonical non-increasing form") {
    auto canonical = [](const Width& w) {
        return std::is_sorted(w.entries().begin(), w.entries().end(), std::greater<>());
    };
    for (const Width& w : enumerate_widths(4, 3)) {
        CHECK(canonical(w));
        CHECK(canonical(add_pointwise(w, w)));
        CHECK(canonical(add_at(w, w.size(), 5)));
        CHECK(canonical(ceil(scale(Rational(2, 3), w))));
        CHECK(canonical(parse_width(w.to_string())));
    }
}

TEST_CASE("scale and ceil") {
    CHECK(ceil(scale(Rational(2, 3), Width{5})) == Width{4});
    CHECK(ceil(scale(Rational(3, 2), Width{4})) == Width{6});
    CHECK(ceil(scale(Rational(1), Width{4, 4})) == Width{4, 4});
    CHECK_THROWS_AS(scale(Rational(-1, 2), Width{4}), std::domain_error);

    // ceil . scale(1, .) is the identity on integer widths.
    for (const Width& w : enumerate_widths(6, 3))
        CHECK(ceil(scale(Rational(1), w)) == w);
}

TEST_CASE("contains") {
    CHECK(Width{4, 3}.contains(3));
    CHECK_FALSE(Width{7}.contains(3));
    CHECK(Width{3}.contains(3));
}

TEST_CASE("width parsing and rendering") {
    CHECK(parse_width("4,4") == Width{4, 4});
    CHECK(parse_width("{4,4}") == Width{4, 4});
    CHECK(parse_width("3") == Width{3});
    CHECK(parse_width("1,4,2") == Width{4, 2, 1});
    CHECK(Width{4, 4}.to_string() == "4,4");
    CHECK(Width{7}.to_string() == "7");

    for (const char* bad : {"", "{}", "{4", "4}", "4,,3", "a", "-1", "4, 3", "4;3"})
        CHECK_THROWS_AS(parse_width(bad), std::invalid_argument);
}

TEST_CASE("rational ceil") {
    CHECK(Rational(10, 3).ceil() == 4);
    CHECK(Rational(4).ceil() == 4);
    CHECK(Rational(-3, 2).ceil() == -1);
    CHECK(Rational(9, 2) > Rational(4));
    CHECK(Rational(6, 4) == Rational(3, 2));
}
