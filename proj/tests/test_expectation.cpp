#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hexcacti/expectation.hpp"
#include "test_util.hpp"

using namespace hexcacti;

namespace {

const IndexKind kBoth[] = {IndexKind::Hosoya, IndexKind::MerrifieldSimmons};

std::vector<ProbabilityTriple> test_triples() {
    return {ProbabilityTriple(1, 0, 0),
            ProbabilityTriple(0, 1, 0),
            ProbabilityTriple(0, 0, 1),
            ProbabilityTriple(BigRat(1, 3), BigRat(1, 3), BigRat(1, 3)),
            ProbabilityTriple(BigRat(1, 2), BigRat(1, 4), BigRat(1, 4))};
}

}  // namespace

TEST_CASE("probability triple validation") {
    CHECK_THROWS_AS(ProbabilityTriple(BigRat(1, 2), BigRat(1, 2), BigRat(1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(ProbabilityTriple(BigRat(-1), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(ProbabilityTriple::parse("0.3,0.3,0.3"),
                    std::invalid_argument);
    CHECK_NOTHROW(ProbabilityTriple::parse("0.25,0.25,0.5"));
    CHECK(ProbabilityTriple::parse("1/3,1/3,1/3").str() == "1/3,1/3,1/3");
}

TEST_CASE("rational parsing and rendering") {
    CHECK(parse_rational("1/3") == BigRat(1, 3));
    CHECK(parse_rational("0.25") == BigRat(1, 4));
    CHECK(parse_rational("-7") == BigRat(-7));
    CHECK(rat_str(BigRat(6, 4)) == "3/2");
    CHECK(rat_str(BigRat(4)) == "4");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("recurrence initial values") {
    for (const auto& p : test_triples()) {
        auto hos = expect_states(1, p, IndexKind::Hosoya);
        CHECK(hos[0].base == 1);
        CHECK(hos[0].prime == 8);
        CHECK(hos[0].tilde == 8);
        CHECK(hos[0].hat == 8);
        CHECK(hos[1].base == 18);

        auto ms = expect_states(1, p, IndexKind::MerrifieldSimmons);
        CHECK(ms[0].base == 1);
        CHECK(ms[0].prime == 13);
        CHECK(ms[1].base == 18);
        CHECK(ms[1].prime == 129);  // 5*18 + 3*13
    }
}

TEST_CASE("n=2 is independent of the probabilities") {
    for (const auto& p : test_triples()) {
        CHECK(expect_states(2, p, IndexKind::Hosoya)[2].base == 224);
        CHECK(expect_states(2, p, IndexKind::MerrifieldSimmons)[2].base == 194);
    }
}

TEST_CASE("n=3 uniform matches the average of the three chains") {
    ProbabilityTriple u(BigRat(1, 3), BigRat(1, 3), BigRat(1, 3));
    CHECK(expect_states(3, u, IndexKind::Hosoya)[3].base == 2832);
}

TEST_CASE("closed-form generating functions at the pure triples") {
    auto gf = gf_closed_form(ProbabilityTriple(1, 0, 0), IndexKind::Hosoya);
    CHECK(gf.num == std::vector<BigRat>{1, 7});
    CHECK(gf.den == std::vector<BigRat>{1, -11, -26});

    gf = gf_closed_form(ProbabilityTriple(0, 1, 0),
                        IndexKind::MerrifieldSimmons);
    CHECK(gf.num == std::vector<BigRat>{1, 6, -11});
    CHECK(gf.den == std::vector<BigRat>{1, -12, 11});

    gf = gf_closed_form(ProbabilityTriple(0, 0, 1), IndexKind::Hosoya);
    CHECK(gf.num == std::vector<BigRat>{1, 6});
    CHECK(gf.den == std::vector<BigRat>{1, -12, -8});
}

TEST_CASE("series expansion") {
    auto o = special_case_gf(Attachment::Ortho, IndexKind::Hosoya);
    CHECK(series_expand(o, 4) == std::vector<BigRat>{1, 18, 224, 2932});

    auto obar = special_case_gf(Attachment::Ortho, IndexKind::MerrifieldSimmons);
    CHECK(series_expand(obar, 4) == std::vector<BigRat>{2, 18, 194, 2002});

    RationalGF constant{{BigRat(1)}, {BigRat(1)}};
    CHECK(series_expand(constant, 3) == std::vector<BigRat>{1, 0, 0});
}

TEST_CASE("recurrences match series expansion of the closed form, n <= 50") {
    for (const auto& p : test_triples()) {
        for (IndexKind kind : kBoth) {
            auto states = expect_states(50, p, kind);
            auto coeffs = series_expand(gf_closed_form(p, kind), 51);
            for (int n = 0; n <= 50; ++n)
                CHECK(states[n].base == coeffs[n]);
        }
    }
}

TEST_CASE("recurrences match full enumeration, n <= 6") {
    for (const auto& p : test_triples()) {
        for (IndexKind kind : kBoth) {
            auto states = expect_states(6, p, kind);
            for (int n = 0; n <= 6; ++n)
                CHECK(states[n].base == expect_by_enumeration(n, p, kind));
        }
    }
    CHECK_THROWS_AS(expect_by_enumeration(9, test_triples()[0],
                                          IndexKind::Hosoya),
                    SizeLimitExceeded);
}

TEST_CASE("spec-pinned enumeration value at n=3, p=(1/2,1/4,1/4)") {
    ProbabilityTriple p(BigRat(1, 2), BigRat(1, 4), BigRat(1, 4));
    CHECK(expect_by_enumeration(3, p, IndexKind::Hosoya) == 2857);
}

TEST_CASE("degenerate triples reduce to the pure chains, n <= 20") {
    const Attachment atts[] = {Attachment::Ortho, Attachment::Meta,
                               Attachment::Para};
    for (int i = 0; i < 3; ++i) {
        ProbabilityTriple p(i == 0 ? 1 : 0, i == 1 ? 1 : 0, i == 2 ? 1 : 0);
        for (IndexKind kind : kBoth) {
            auto states = expect_states(20, p, kind);
            for (int n = 0; n <= 20; ++n) {
                std::vector<Attachment> ch(n >= 2 ? n - 2 : 0, atts[i]);
                CHECK(states[n].base ==
                      BigRat(count_chain(AttachmentSequence(n, ch), kind)));
            }
        }
    }
}

TEST_CASE("classical special cases: matchings agree everywhere") {
    const Attachment atts[] = {Attachment::Ortho, Attachment::Meta,
                               Attachment::Para};
    for (int i = 0; i < 3; ++i) {
        ProbabilityTriple p(i == 0 ? 1 : 0, i == 1 ? 1 : 0, i == 2 ? 1 : 0);
        auto mine = series_expand(gf_closed_form(p, IndexKind::Hosoya), 51);
        auto ref = series_expand(special_case_gf(atts[i], IndexKind::Hosoya), 51);
        CHECK(mine == ref);
    }
}

TEST_CASE("classical special cases: independent sets differ only at n=0") {
    const Attachment atts[] = {Attachment::Ortho, Attachment::Meta,
                               Attachment::Para};
    for (int i = 0; i < 3; ++i) {
        ProbabilityTriple p(i == 0 ? 1 : 0, i == 1 ? 1 : 0, i == 2 ? 1 : 0);
        auto mine =
            series_expand(gf_closed_form(p, IndexKind::MerrifieldSimmons), 51);
        auto ref = series_expand(
            special_case_gf(atts[i], IndexKind::MerrifieldSimmons), 51);
        CHECK(mine[0] == 1);
        CHECK(ref[0] == 2);
        for (int n = 1; n <= 50; ++n) CHECK(mine[n] == ref[n]);
    }
}

TEST_CASE("expectations are strictly increasing in n") {
    for (const auto& p : test_triples()) {
        for (IndexKind kind : kBoth) {
            auto states = expect_states(30, p, kind);
            for (int n = 0; n < 30; ++n)
                CHECK(states[n + 1].base > states[n].base);
        }
    }
}
