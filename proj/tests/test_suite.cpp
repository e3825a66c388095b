#include <doctest.h>

#include <qhahn/sampling.hpp>
#include <qhahn/suite.hpp>

#include <set>
#include <string>
#include <thread>

using namespace qhahn;

TEST_CASE("catalogue") {
    SUBCASE("at least 14 identities with the expected ids present") {
        CHECK(catalogue().size() >= 14);
        for (const char* name :
             {"GEN", "EXT_GEN", "ROGERS", "EXT_ROGERS", "SA", "SA_1CSUMS",
              "LUMS", "DD1SUMS", "ASC_GEN", "CHU_VANDERMONDE", "HEINE",
              "QBINOMIAL_THM", "EULER_PAIR", "CAUCHY_GEN", "QDE_F", "QDE_G",
              "QDE_H", "QDE_HP", "PROP_CONDS"}) {
            CAPTURE(name);
            CHECK(identity_from_name(name).has_value());
        }
    }
    SUBCASE("every entry names its constraints and fields") {
        for (const auto& info : catalogue()) {
            CHECK(!info.constraints.empty());
            CHECK(!info.description.empty());
        }
    }
    SUBCASE("name lookup is case-insensitive and rejects junk") {
        CHECK(identity_from_name("rogers") == IdentityId::ROGERS);
        CHECK(identity_from_name("Heine") == IdentityId::HEINE);
        CHECK(!identity_from_name("NOT_AN_IDENTITY"));
    }
    SUBCASE("listings mention every identity") {
        auto text = catalogue_to_text();
        auto json = catalogue_to_json();
        for (const auto& info : catalogue()) {
            CHECK(text.find(std::string(info.name)) != std::string::npos);
            CHECK(json.find(std::string(info.name)) != std::string::npos);
        }
        CHECK(json.find("constraints") != std::string::npos);
    }
}

TEST_CASE("sampling") {
    SUBCASE("deterministic for a fixed seed") {
        const auto& info = identity_info(IdentityId::SA);
        auto a = sample_points(info, 42, 6);
        auto b = sample_points(info, 42, 6);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].q == b[i].q);
            CHECK(a[i].point.named_fields() == b[i].point.named_fields());
        }
        auto c = sample_points(info, 43, 6);
        bool all_same = true;
        for (size_t i = 0; i < a.size(); ++i)
            all_same = all_same &&
                       a[i].point.named_fields() == c[i].point.named_fields();
        CHECK(!all_same);
    }
    SUBCASE("sampled points satisfy the declared constraints") {
        for (const auto& info : catalogue()) {
            auto pts = sample_points(info, 7, 8);
            for (const auto& sp : pts) CHECK(info.valid(sp.point, sp.q));
        }
    }
    SUBCASE("q comes from the declared pool") {
        std::set<std::string> qs;
        for (const auto& sp : sample_points(identity_info(IdentityId::GEN), 1, 30))
            qs.insert(sp.q.get_str());
        for (const auto& q : qs)
            CHECK((q == "3/10" || q == "1/2" || q == "7/10"));
        CHECK(qs.size() > 1);
    }
}

TEST_CASE("collides_with_q_shift") {
    Rational q(1, 2);
    CHECK(collides_with_q_shift(Rational(1, 4), Rational(1, 2), q));   // t = s q
    CHECK(collides_with_q_shift(Rational(1, 8), Rational(1, 2), q));   // t = s q^2
    CHECK(!collides_with_q_shift(Rational(1, 5), Rational(1, 2), q));
    CHECK(collides_with_q_shift(Rational(3, 10), Rational(6, 10), q));  // t = q*omega
}

TEST_CASE("run_identity honors arithmetic selection") {
    SUBCASE("exact run of GEN has zero deviation") {
        auto outcome = run_identity(IdentityId::GEN, NumericMode::ExactRational,
                                    10, 3, 5, 1e-9);
        CHECK(outcome.pass);
        CHECK(outcome.arithmetic == NumericMode::ExactRational);
        CHECK(outcome.max_deviation == 0.0);
        CHECK(outcome.points.size() == 3);
    }
    SUBCASE("float-only identities fall back to float under exact mode") {
        auto outcome = run_identity(IdentityId::HEINE, NumericMode::ExactRational,
                                    10, 2, 5, 1e-10);
        CHECK(outcome.arithmetic == NumericMode::Float);
        CHECK(outcome.pass);
    }
}

TEST_CASE("run_suite") {
    RunConfig config;
    config.mode = NumericMode::ExactRational;
    config.order = 8;
    config.points_per_identity = 2;
    config.seed = 42;
    config.all_identities = false;
    config.identities = {IdentityId::GEN, IdentityId::CHU_VANDERMONDE,
                         IdentityId::HEINE};

    SUBCASE("selected identities run in catalogue order and pass") {
        auto result = run_suite(config);
        REQUIRE(result.results.size() == 3);
        CHECK(result.results[0].id == IdentityId::GEN);
        CHECK(result.results[1].id == IdentityId::CHU_VANDERMONDE);
        CHECK(result.results[2].id == IdentityId::HEINE);
        CHECK(result.n_pass == 3);
        CHECK(result.n_fail == 0);
    }
    SUBCASE("explicitly forcing exact on a float-only selection is an error") {
        RunConfig bad = config;
        bad.identities = {IdentityId::ROGERS};
        bad.mode_explicit = true;
        CHECK_THROWS_AS(run_suite(bad), ModeError);
        // Without the explicit force the identity runs in its native mode.
        bad.mode_explicit = false;
        auto result = run_suite(bad);
        CHECK(result.results.at(0).arithmetic == NumericMode::Float);
        CHECK(result.n_fail == 0);
    }
    SUBCASE("exact-only identities always run exactly") {
        // The terminating q-Chu-Vandermonde sum cancels catastrophically in
        // doubles at larger n, so its verifier is exact-only.
        RunConfig chu = config;
        chu.mode = NumericMode::Float;
        chu.identities = {IdentityId::CHU_VANDERMONDE};
        auto result = run_suite(chu);
        CHECK(result.results.at(0).arithmetic == NumericMode::ExactRational);
        CHECK(result.n_fail == 0);
        chu.mode_explicit = true;
        CHECK_THROWS_AS(run_suite(chu), ModeError);
    }
    SUBCASE("identical configs give identical reports modulo elapsed") {
        auto r1 = run_suite(config);
        auto r2 = run_suite(config);
        CHECK(suite_to_json(r1, false) == suite_to_json(r2, false));
    }
    SUBCASE("json carries the schema fields") {
        auto json = suite_to_json(run_suite(config));
        for (const char* key : {"\"config\"", "\"results\"", "\"summary\"",
                                "\"points\"", "\"params\"", "\"deviation\"",
                                "\"verdict\"", "\"elapsed_ms\"", "\"pass\"",
                                "\"fail\""})
            CHECK(json.find(key) != std::string::npos);
    }
    SUBCASE("text report has one line per identity plus a summary") {
        auto text = suite_to_text(run_suite(config));
        CHECK(text.find("PASS GEN") != std::string::npos);
        CHECK(text.find("summary: 3 pass, 0 fail") != std::string::npos);
    }
    SUBCASE("tolerance overrides are applied") {
        RunConfig tight = config;
        tight.mode = NumericMode::Float;
        tight.identities = {IdentityId::HEINE};
        tight.tolerance_overrides[IdentityId::HEINE] = 1e-30;  // unattainable
        auto result = run_suite(tight);
        CHECK(result.n_fail == 1);
        CHECK(!result.results[0].pass);
    }
}

TEST_CASE("verifiers are safe to run concurrently") {
    // Pure functions of their inputs: the same work on two threads gives
    // the same reports.
    RunConfig config;
    config.mode = NumericMode::Float;
    config.order = 8;
    config.points_per_identity = 2;
    config.seed = 9;
    config.all_identities = false;
    config.identities = {IdentityId::GEN, IdentityId::SA};

    std::string a, b;
    std::thread t1([&] { a = suite_to_json(run_suite(config), false); });
    std::thread t2([&] { b = suite_to_json(run_suite(config), false); });
    t1.join();
    t2.join();
    CHECK(a == b);
}
