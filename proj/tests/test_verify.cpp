#include <catch2/catch_amalgamated.hpp>

#include <su3mult/verify.hpp>

using namespace su3mult;

TEST_CASE("truncation preconditions") {
    REQUIRE(Truncation(6, 4).interior_bound() == 2);
    REQUIRE(Truncation(4, 4).interior_bound() == 0);
    REQUIRE_THROWS_AS(Truncation(4, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(Truncation(-1, 0), std::invalid_argument);
}

TEST_CASE("rotation algebra closes on a small interior") {
    auto reports = verify_so42_closure(Truncation(4, 3));
    REQUIRE(reports.size() == 105);
    for (const auto& r : reports) {
        INFO(r.identity << " " << r.counterexample);
        REQUIRE(r.passed);
        REQUIRE(r.states_checked == 13);
        REQUIRE(r.counterexample.empty());
    }
}

TEST_CASE("closure reports are stable when the ceiling grows at fixed margin") {
    auto small = verify_so42_closure(Truncation(3, 3));
    auto larger = verify_so42_closure(Truncation(4, 3));
    REQUIRE(small.size() == larger.size());
    for (size_t i = 0; i < small.size(); ++i) {
        REQUIRE(small[i].passed);
        REQUIRE(larger[i].passed);
        REQUIRE(small[i].identity == larger[i].identity);
        REQUIRE(small[i].states_checked < larger[i].states_checked);
    }
}

TEST_CASE("color invariance holds on a small interior") {
    auto reports = verify_invariance(Truncation(3, 2));
    REQUIRE(reports.size() == 8 * 18);
    for (const auto& r : reports) {
        INFO(r.identity << " " << r.counterexample);
        REQUIRE(r.passed);
    }
    REQUIRE(all_passed(reports));
}

TEST_CASE("weight identities hold on every enumerated state") {
    auto reports = verify_weight_identities(Truncation(4, 0));
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
        INFO(r.identity);
        REQUIRE(r.passed);
        REQUIRE(r.states_checked == enumerate_up_to_total(4).size());
    }
}

TEST_CASE("quadratic invariant commutes with generators and constraints") {
    auto reports = verify_casimir2_commutation(Truncation(5, 4));
    REQUIRE(reports.size() == 15 + 2 + 4);
    for (const auto& r : reports) {
        INFO(r.identity << " " << r.counterexample);
        REQUIRE(r.passed);
    }
}

TEST_CASE("cubic invariant commutes on the vacuum interior") {
    auto reports = verify_casimir3_commutation(Truncation(2, 2));
    REQUIRE(reports.size() == 17);
    for (const auto& r : reports) {
        INFO(r.identity << " " << r.counterexample);
        REQUIRE(r.passed);
    }
}

TEST_CASE("a broken identity is reported with a counterexample") {
    using namespace verifydetail;
    auto pool = enumerate_up_to_total(1);
    VerificationReport rep = check_zero_action(
        "N_a", LinearOperator::number(Family::a), pool, 1);
    REQUIRE_FALSE(rep.passed);
    REQUIRE_FALSE(rep.counterexample.empty());
    REQUIRE(rep.identity == "N_a");
}
