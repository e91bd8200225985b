#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seljac/errors.hpp"
#include "seljac/verify.hpp"

using namespace seljac;

static void require_all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
    CHECK(!results.empty());
}

TEST_CASE("identity suite") { require_all_pass(verify_identities()); }

TEST_CASE("oracle suite") { require_all_pass(verify_oracles()); }

TEST_CASE("limit suite") { require_all_pass(verify_limits()); }

TEST_CASE("conjecture suite") { require_all_pass(verify_conjecture()); }

TEST_CASE("suite selection") {
    CHECK(verify_suite("identities").size() == verify_identities().size());
    CHECK(verify_suite("all").size() == verify_identities().size() + verify_oracles().size() +
                                            verify_limits().size() + verify_conjecture().size());
    CHECK_THROWS_AS(verify_suite("nonsense"), DomainError);
}
