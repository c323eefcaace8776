#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "horn/json_io.hpp"
#include "horn/spectrum.hpp"
#include "horn/triples.hpp"

using horn::generate_T;
using horn::generate_U;
using horn::HornTriple;
using horn::IndexSet;
using horn::Spectrum;
using horn::TripleTable;

namespace {

HornTriple triple(int p, std::vector<int> i, std::vector<int> j, std::vector<int> k) {
    return HornTriple{p, static_cast<int>(i.size()), IndexSet{std::move(i)}, IndexSet{std::move(j)},
                      IndexSet{std::move(k)}};
}

}  // namespace

TEST_CASE("subsets are lexicographic") {
    const auto subsets = horn::subsets_of_size(4, 2);
    REQUIRE(subsets.size() == 6);
    CHECK(subsets[0].elements == std::vector<int>{1, 2});
    CHECK(subsets[1].elements == std::vector<int>{1, 3});
    CHECK(subsets[2].elements == std::vector<int>{1, 4});
    CHECK(subsets[3].elements == std::vector<int>{2, 3});
    CHECK(subsets[4].elements == std::vector<int>{2, 4});
    CHECK(subsets[5].elements == std::vector<int>{3, 4});
}

TEST_CASE("candidate triples for small sizes") {
    const auto u21 = generate_U(2, 1);
    REQUIRE(u21.size() == 3);
    CHECK(u21[0] == triple(2, {1}, {1}, {1}));
    CHECK(u21[1] == triple(2, {1}, {2}, {2}));
    CHECK(u21[2] == triple(2, {2}, {1}, {2}));

    const auto u31 = generate_U(3, 1);
    REQUIRE(u31.size() == 6);
    CHECK(u31[0] == triple(3, {1}, {1}, {1}));
    CHECK(u31[1] == triple(3, {1}, {2}, {2}));
    CHECK(u31[2] == triple(3, {1}, {3}, {3}));
    CHECK(u31[3] == triple(3, {2}, {1}, {2}));
    CHECK(u31[4] == triple(3, {2}, {2}, {3}));
    CHECK(u31[5] == triple(3, {3}, {1}, {3}));

    const auto u33 = generate_U(3, 3);
    REQUIRE(u33.size() == 1);
    CHECK(u33[0] == triple(3, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}));

    CHECK_THROWS_AS(generate_U(2, 3), std::invalid_argument);
}

TEST_CASE("table generation examples") {
    const TripleTable t1 = generate_T(1);
    CHECK(t1.size() == 1);
    CHECK(t1.rank(1)[0] == triple(1, {1}, {1}, {1}));

    const TripleTable t2 = generate_T(2);
    CHECK(t2.rank(1).size() == 3);
    REQUIRE(t2.rank(2).size() == 1);
    CHECK(t2.rank(2)[0] == triple(2, {1, 2}, {1, 2}, {1, 2}));

    const TripleTable t3 = generate_T(3);
    CHECK(t3.rank(1).size() == 6);
    CHECK(t3.rank(2).size() == 6);
    CHECK(t3.rank(3).size() == 1);
    CHECK(t3.rank(1).size() + t3.rank(2).size() == 12);
}

TEST_CASE("rank one equals the unfiltered candidates") {
    for (int p = 1; p <= 5; ++p) {
        CHECK(generate_T(p).rank(1) == generate_U(p, 1));
    }
}

TEST_CASE("generated triples satisfy the sum identity and symmetry") {
    for (int p = 1; p <= 4; ++p) {
        const TripleTable table = generate_T(p);
        for (int r = 1; r <= p; ++r) {
            for (const HornTriple& t : table.rank(r)) {
                CHECK(t.sum_identity_holds());
                HornTriple swapped = t;
                std::swap(swapped.i, swapped.j);
                CHECK(table.contains(swapped));
            }
        }
    }
}

TEST_CASE("membership lookup") {
    const TripleTable t3 = generate_T(3);
    CHECK(t3.contains(triple(3, {1, 2}, {1, 3}, {1, 3})));
    CHECK_FALSE(t3.contains(triple(3, {1, 3}, {1, 3}, {1, 2})));  // fails the sum identity
    CHECK_FALSE(t3.contains(triple(4, {1, 2}, {1, 3}, {1, 3})));  // wrong ambient size
}

TEST_CASE("inequality slack") {
    const Spectrum two{std::vector<double>{1, 0}};
    CHECK(horn::horn_inequality_slack(triple(2, {1}, {1}, {1}), two, two, two) == 1.0);

    const Spectrum gamma{std::vector<double>{2, 2}};
    const Spectrum alpha{std::vector<double>{2, 0}};
    CHECK(horn::horn_inequality_slack(triple(2, {2}, {2}, {2}), alpha, alpha, gamma) == -2.0);

    const Spectrum minus{std::vector<double>{13.0 / 32, 5.0 / 32, 2.0 / 32}};
    const Spectrum plus{std::vector<double>{8.0 / 32, 3.0 / 32, 1.0 / 32}};
    const Spectrum nu{std::vector<double>{0.5, 0.3125, 0.1875}};
    CHECK(horn::horn_inequality_slack(triple(3, {1}, {1}, {1}), minus, plus, nu) == 0.15625);

    CHECK_THROWS_AS(horn::horn_inequality_slack(triple(3, {1}, {1}, {1}), two, two, two),
                    std::invalid_argument);
}

TEST_CASE("domino doubling examples") {
    const HornTriple d1 = horn::domino_double(triple(1, {1}, {1}, {1}));
    CHECK(d1 == triple(2, {1, 2}, {1, 2}, {1, 2}));

    const HornTriple d2 = horn::domino_double(triple(2, {1}, {2}, {2}));
    CHECK(d2 == triple(4, {1, 4}, {1, 4}, {3, 4}));

    const HornTriple d3 = horn::domino_double(triple(2, {1, 2}, {1, 2}, {1, 2}));
    CHECK(d3 == triple(4, {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}));

    CHECK_THROWS_AS(horn::domino_double(triple(2, {1}, {1}, {2})), std::invalid_argument);
}

TEST_CASE("doubling preserves the sum identity across all candidates") {
    for (int p = 1; p <= 4; ++p) {
        for (int r = 1; r <= p; ++r) {
            for (const HornTriple& t : generate_U(p, r)) {
                const HornTriple d = horn::domino_double(t);
                CHECK(d.p == 2 * p);
                CHECK(d.r == 2 * r);
                CHECK(d.sum_identity_holds());
                CHECK(d.i == d.j);
            }
        }
    }
}

TEST_CASE("domino verification counts") {
    const horn::DominoReport r1 = horn::verify_domino_theorem(1);
    CHECK(r1.checked == 0);
    CHECK(r1.failures.empty());

    const horn::DominoReport r2 = horn::verify_domino_theorem(2);
    CHECK(r2.checked == 3);
    CHECK(r2.failures.empty());

    const horn::DominoReport r3 = horn::verify_domino_theorem(3);
    CHECK(r3.checked == 12);
    CHECK(r3.failures.empty());
}

TEST_CASE("json round trip") {
    const TripleTable t3 = generate_T(3);
    const nlohmann::json doc = horn::table_to_json(t3);
    CHECK(horn::table_from_json(doc) == t3);
}

TEST_CASE("golden table file") {
    std::ifstream in(std::string(HORN_TEST_DATA_DIR) + "/t3_golden.json");
    REQUIRE(in.good());
    nlohmann::json doc;
    in >> doc;
    CHECK(horn::table_from_json(doc) == generate_T(3));
    CHECK(doc == horn::table_to_json(generate_T(3)));
}

TEST_CASE("malformed table documents are rejected") {
    CHECK_THROWS_AS(horn::table_from_json(nlohmann::json{{"p", 1}}), std::invalid_argument);
    nlohmann::json bad = horn::table_to_json(generate_T(2));
    bad["ranks"][0]["triples"][0][2][0] = 2;  // breaks the sum identity
    CHECK_THROWS_AS(horn::table_from_json(bad), std::invalid_argument);
}
