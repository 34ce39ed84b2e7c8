#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hexcacti/random_model.hpp"

using namespace hexcacti;

TEST_CASE("trial streams are deterministic and trial-dependent") {
    TrialStream s1(42, 0), s2(42, 0), s3(42, 1);
    auto a = s1.next_u64();
    CHECK(a == s2.next_u64());
    CHECK(a != s3.next_u64());

    BigRat u = TrialStream(7, 3).next_unit_rational();
    CHECK(u >= 0);
    CHECK(u < 1);
    CHECK(u == TrialStream(7, 3).next_unit_rational());
}

TEST_CASE("sample_sequence basics") {
    ProbabilityTriple uniform(BigRat(1, 3), BigRat(1, 3), BigRat(1, 3));
    TrialStream s(1, 0);
    CHECK(sample_sequence(2, uniform, s).choices.empty());
    CHECK(sample_sequence(0, uniform, s).n == 0);

    ProbabilityTriple pure_para(0, 0, 1);
    TrialStream s2(99, 5);
    auto seq = sample_sequence(5, pure_para, s2);
    CHECK(seq.str() == "ppp");

    // Same (seed, trial) gives the same draw regardless of history.
    TrialStream a(123, 9), b(123, 9);
    CHECK(sample_sequence(8, uniform, a).str() ==
          sample_sequence(8, uniform, b).str());
}

TEST_CASE("monte_carlo on deterministic inputs") {
    ProbabilityTriple uniform(BigRat(1, 3), BigRat(1, 3), BigRat(1, 3));
    auto est = monte_carlo(1, uniform, 50, 7, IndexKind::Hosoya);
    CHECK(est.mean == 18);
    CHECK(est.std_dev == 0);
    CHECK(est.std_err == 0);

    ProbabilityTriple pure_para(0, 0, 1);
    auto est2 = monte_carlo(3, pure_para, 100, 11, IndexKind::MerrifieldSimmons);
    CHECK(est2.mean == 2066);
    CHECK(est2.std_dev == 0);
}

TEST_CASE("serial and parallel estimates are bit-identical") {
    ProbabilityTriple p(BigRat(1, 2), BigRat(1, 4), BigRat(1, 4));
    for (IndexKind kind : {IndexKind::Hosoya, IndexKind::MerrifieldSimmons}) {
        auto a = monte_carlo(12, p, 2000, 0xdeadbeef, kind);
        auto b = monte_carlo_serial(12, p, 2000, 0xdeadbeef, kind);
        CHECK(a.mean == b.mean);
        CHECK(a.std_dev == b.std_dev);
        CHECK(a.std_err == b.std_err);
        CHECK(a.std_err == a.std_dev / sqrt(Real(2000)));
    }
}

TEST_CASE("estimate tracks the exact expectation") {
    ProbabilityTriple uniform(BigRat(1, 3), BigRat(1, 3), BigRat(1, 3));
    for (IndexKind kind : {IndexKind::Hosoya, IndexKind::MerrifieldSimmons}) {
        auto est = monte_carlo(8, uniform, 20000, 2024, kind);
        Real exact = to_real(expect_states(8, uniform, kind).back().base);
        CHECK(abs(est.mean - exact) <= 4 * est.std_err);
    }
}
