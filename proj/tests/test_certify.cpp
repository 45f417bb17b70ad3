#include <doctest.h>

#include <map>

#include "slgen/certify.hpp"
#include "slgen/error.hpp"

using namespace slgen;
using arith::Natural;

namespace {

struct GoldenRow {
    unsigned case_id;
    bool applicable;
    std::vector<std::pair<std::uint64_t, const char*>> variants;  // q0 (0 if none), order
};

// Evaluated independently from the printed order formulas with Python integers.
const std::map<std::uint64_t, std::vector<GoldenRow>> kGolden = {
    {2, {
        {1, true, {{0, "375234700595146883504949480652800"}}},
        {2, true, {{0, "1100395016408055376847359180800"}}},
        {3, true, {{0, "15073904334356922970511769600"}}},
        {4, true, {{0, "886700254962171939441868800"}}},
        {5, true, {{0, "216438644912026221438566400"}}},
        {6, false, {{0, "39916800"}}},
        {7, true, {{0, "22517"}}},
        {8, false, {}},
        {9, false, {{0, "1756920"}}},
        {10, false, {{0, "24815256521932800"}}},
        {11, false, {}},
        {12, false, {{0, "6072"}}},
        {13, false, {{0, "13685760"}}},
        {14, true, {{0, "244823040"}}},
    }},
    {3, {
        {1, true, {{0, "17046196453240220939126401085378073952125928970649600"}}},
        {2, true, {{0, "2309469780956539891495244693859649634483935641600"}}},
        {3, true, {{0, "3050818733099788496030706332707595289939148800"}}},
        {4, true, {{0, "37205106501216932878423247959848723048038400"}}},
        {5, true, {{0, "4118772082934353960008429097110425881804800"}}},
        {6, false, {{0, "40874803200"}}},
        {7, true, {{0, "974303"}}},
        {8, false, {}},
        {9, false, {{0, "1756920"}}},
        {10, true, {{0, "152915585868239728626892800"}}},
        {11, false, {}},
        {12, true, {{0, "6072"}}},
        {13, false, {{0, "13685760"}}},
        {14, false, {{0, "244823040"}}},
    }},
    {4, {
        {1, true, {{0, "1160183823755957350394353874696058298158177597536388268425216000000"}}},
        {2, true, {{0, "16596578553121484162711592514069927732754132001092743987200000"}}},
        {3, true, {{0, "3988603353309657333023694427798588736542689738306355200000"}}},
        {4, true, {{0, "15519857405874153046784803221006181854251711043993600000"}}},
        {5, true, {{0, "969102980297214097958911902282202529262009424281600000"}}},
        {6, false, {{0, "2357047123200"}}},
        {7, true, {{0, "15379111"}}},
        {8, true, {{2, "768105432118265670534631586896281600"}}},
        {9, false, {{0, "1756920"}}},
        {10, false, {{0, "1211875293642881119668928512000000"}}},
        {11, true, {{2, "1073060286276491879676057352352563200"}}},
        {12, false, {{0, "6072"}}},
        {13, false, {{0, "13685760"}}},
        {14, false, {{0, "244823040"}}},
    }},
    {5, {
        {1, true, {{0, "58573909470215044234579342971816658973693847656250000000000000000000000000000"}}},
        {2, true, {{0, "143951254654608969342860653996467590332031250000000000000000000000000000"}}},
        {3, true, {{0, "9139181934772964849397540092468261718750000000000000000000000000000"}}},
        {4, true, {{0, "14599332164174065254628658294677734375000000000000000000000000000"}}},
        {5, true, {{0, "583793887677023448050022125244140625000000000000000000000000000"}}},
        {6, true, {{0, "41855798476800"}}},
        {7, true, {{0, "134277341"}}},
        {8, false, {}},
        {9, false, {{0, "1756920"}}},
        {10, true, {{0, "266009466302345390625000000000000000000"}}},
        {11, false, {}},
        {12, false, {{0, "6072"}}},
        {13, false, {{0, "13685760"}}},
        {14, false, {{0, "244823040"}}},
    }},
};

certify::Certificate round_trip(const certify::Certificate& c) { return certify::parse(certify::serialize(c)); }

}  // namespace

TEST_CASE("maximal-subgroup orders match independently computed values") {
    for (const auto& [q, rows] : kGolden) {
        const auto table = certify::maxsub_table(Natural(q));
        REQUIRE(table.size() == 14);
        for (std::size_t i = 0; i < 14; ++i) {
            INFO("q = " << q << ", case " << rows[i].case_id);
            CHECK(table[i].case_id == rows[i].case_id);
            CHECK(table[i].applicable == rows[i].applicable);
            CHECK(table[i].reason.empty() == rows[i].applicable);
            REQUIRE(table[i].variants.size() == rows[i].variants.size());
            for (std::size_t j = 0; j < rows[i].variants.size(); ++j) {
                const auto& [q0, order] = rows[i].variants[j];
                CHECK(table[i].variants[j].order == Natural::from_string(order));
                CHECK(table[i].variants[j].q0.value_or(Natural(0)) == Natural(q0));
            }
        }
    }
}

TEST_CASE("only case 7 has order divisible by Q") {
    for (std::uint64_t q : {2ULL, 3ULL, 4ULL, 5ULL, 7ULL, 8ULL, 9ULL, 11ULL, 16ULL, 23ULL, 32ULL, 47ULL, 243ULL}) {
        INFO("q = " << q);
        const auto r = certify::q_divisibility_scan(Natural(q));
        CHECK(r.divisible_cases == std::vector<unsigned>{7});
        CHECK(r.Q == (arith::pow(Natural(q), 11) - Natural(1)) / Natural(q - 1));
        CHECK(r.rows.size() == 14);
    }
    // Cases 9 and 12 become applicable for suitable primes.
    CHECK(certify::maxsub_table(Natural(23))[8].applicable);
    CHECK(certify::maxsub_table(Natural(47))[11].applicable);
    CHECK(certify::maxsub_table(Natural(243))[8].applicable);  // 3^5
    CHECK_THROWS_AS(certify::q_divisibility_scan(Natural(6)), NotPrimePower);
}

TEST_CASE("certificates verify for every construction") {
    for (auto [n, q] : std::vector<std::pair<unsigned, unsigned>>{{9, 3}, {9, 2}, {10, 5}, {10, 3}, {11, 2}, {11, 3}}) {
        INFO("n = " << n << ", q = " << q);
        const auto cert = certify::certify(n, Natural(q));
        const auto report = certify::verify(round_trip(cert));
        INFO(report.first_failure);
        CHECK(report.ok);
    }
}

TEST_CASE("SL_11(2) certificate contents") {
    const auto cert = certify::certify(11, Natural(2));
    CHECK(cert["orders"]["z"] == "2047");
    CHECK(cert["Q"] == "2047");
    CHECK(cert["maxsub_scan"]["divisible_cases"] == nlohmann::json::array({"7"}));
    CHECK(cert["irreducibility"]["scan"]["verdict"] == "Irreducible");
    CHECK(cert["irreducibility"]["meataxe"]["verdict"] == "Irreducible");
    CHECK(cert["construction"] == "sl11");
}

TEST_CASE("serialization is byte-stable") {
    const std::string a = certify::serialize(certify::certify(10, Natural(7), 5));
    const std::string b = certify::serialize(certify::certify(10, Natural(7), 5));
    CHECK(a == b);
    CHECK(certify::serialize(certify::parse(a)) == a);
    CHECK(a.back() == '\n');
    CHECK_THROWS_AS(certify::parse("{not json"), MalformedCertificate);
}

TEST_CASE("tampering is detected") {
    const auto cert = certify::certify(9, Natural(3));
    REQUIRE(certify::verify(cert).ok);

    auto t = cert;
    t["orders"]["z"] = "3281";
    CHECK_FALSE(certify::verify(t).ok);

    t = cert;
    t["matrices"]["x"][0][0] = t["matrices"]["x"][0][0] == "0" ? "1" : "0";
    CHECK_FALSE(certify::verify(t).ok);

    t = cert;
    t["Q"] = "3279";
    CHECK_FALSE(certify::verify(t).ok);

    t = cert;
    t["construction"] = "special";
    CHECK_FALSE(certify::verify(t).ok);

    t = cert;
    t["irreducibility"]["meataxe"]["verdict"] = "ReducibleWitness";
    CHECK_FALSE(certify::verify(t).ok);

    t = cert;
    t.erase("field");
    const auto r = certify::verify(t);
    CHECK_FALSE(r.ok);
    CHECK(r.first_failure.rfind("malformed certificate", 0) == 0);

    auto s = certify::certify(11, Natural(2));
    s["maxsub_scan"]["divisible_cases"] = nlohmann::json::array({"7", "14"});
    CHECK_FALSE(certify::verify(s).ok);

    auto sp = certify::certify(9, Natural(2));
    REQUIRE(certify::verify(sp).ok);
    sp["orders"]["words"][0]["claimed"] = "382";
    CHECK_FALSE(certify::verify(sp).ok);
}

TEST_CASE("unsupported inputs") {
    CHECK_THROWS_AS(certify::certify(8, Natural(3)), UnsupportedN);
    CHECK_THROWS_AS(certify::certify(9, Natural(6)), NotPrimePower);
}
