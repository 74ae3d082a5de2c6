#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "basis.hpp"
#include "errors.hpp"
#include "stats.hpp"

using namespace magnon;

TEST_CASE("two-magnon sweep finds every eigenstate") {
    for (int n = 4; n <= 14; ++n) {
        const auto sw = sweep_two_magnon(n);
        CAPTURE(n);
        CHECK(sw.errors.empty());
        CHECK(sw.records.size() == static_cast<std::size_t>(binomial(n, 2)));
        std::map<RootClass, int> counts;
        for (const auto& r : sw.records) {
            ++counts[r.root_class];
            if (n <= projection_certify_max_sites) {
                REQUIRE(r.projection.has_value());
                CHECK(*r.projection > 1 - 1e-8);
            }
            CHECK(r.eigen_residual < 1e-8);
        }
        CHECK(counts[RootClass::goldstone_mixed] == n);  // lambda = (0, l2), l2 = 0 .. N-1
        CHECK(counts[RootClass::singular] == (n % 2 == 0 ? 1 : 0));
    }
}

TEST_CASE("sweep filter keeps one class") {
    const auto sw = sweep_two_magnon(10, RootClass::cosh_bound);
    CHECK(sw.records.size() == 4);
    for (const auto& r : sw.records) CHECK(r.root_class == RootClass::cosh_bound);
}

TEST_CASE("separation statistics against a hand count") {
    const auto sw = sweep_two_magnon(8);
    const auto st = separation_stats(sw.records);
    CHECK(st.population == sw.records.size());
    CHECK(st.max.size() == 4);
    std::size_t hist_total = 0;
    for (auto h : st.nu_histogram) hist_total += h;
    CHECK(hist_total == st.population);
    for (int r = 1; r <= 4; ++r) {
        std::vector<double> nz;
        double mx = 0;
        for (const auto& rec : sw.records) {
            mx = std::max(mx, rec.profile.at(r));
            if (rec.profile.at(r) > 0) nz.push_back(rec.profile.at(r));
        }
        std::sort(nz.begin(), nz.end());
        CHECK(st.max[std::size_t(r - 1)] == mx);
        CHECK(st.percent_nonzero[std::size_t(r - 1)] == doctest::Approx(100.0 * nz.size() / st.population));
        if (nz.empty()) {
            CHECK(!st.median[std::size_t(r - 1)].has_value());
        } else {
            const std::size_t h = nz.size() / 2;
            const double med = nz.size() % 2 ? nz[h] : 0.5 * (nz[h - 1] + nz[h]);
            CHECK(*st.median[std::size_t(r - 1)] == doctest::Approx(med));
        }
    }
}

TEST_CASE("quench survey on small rings") {
    for (int n : {6, 8}) {
        const auto q = quench_survey(n, 3);
        CHECK(q.errors.empty());
        CHECK(!q.rows.empty());
        CHECK(q.violations() == 0);
    }
    const auto q4 = quench_survey(8, 4);
    CHECK(q4.errors.empty());
    CHECK(q4.violations() == 0);
    CHECK_THROWS_AS(quench_survey(8, 5), Error);
    CHECK_THROWS_AS(quench_survey(5, 3), Error);
}

TEST_CASE("antiferromagnetic ground state") {
    const auto a4 = ags_survey(4);
    CHECK(a4.profile.at(1) == doctest::Approx(0.5));
    CHECK(a4.only_nearest_neighbour);
    CHECK(a4.energy == doctest::Approx(a4.ground_energy));
    const auto a6 = ags_survey(6);
    CHECK(a6.provenance == "bethe");
    CHECK(a6.profile.at(1) == doctest::Approx(0.43426).epsilon(1e-5));
    CHECK_THROWS_AS(ags_survey(7), Error);
}

TEST_CASE("length scan") {
    const auto s = length_scan({1, 3, 5}, 6, 10);
    CHECK(s.errors.empty());
    REQUIRE(s.rows.size() == 5);
    for (const auto& r : s.rows) {
        CHECK(r.eigen_residual < 1e-8);
        CHECK(r.from_longest(1) == r.profile.at(r.n_sites / 2));
    }
}
