#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <ldpcsense/cclpd.hpp>
#include <ldpcsense/rng.hpp>

#include "test_matrices.hpp"

using namespace ldpcsense;

namespace {

// Back-substitution (peeling) oracle for the erasure channel: repeatedly
// resolve any check with exactly one erased participant.
struct PeelResult {
    std::vector<char> known;
    Gf2Vector bits;
};

PeelResult bec_peel(const Gf2Matrix& h, const std::vector<double>& y) {
    const std::size_t n = h.cols();
    PeelResult r{std::vector<char>(n, 0), Gf2Vector(n)};
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isnan(y[i])) {
            r.known[i] = 1;
            r.bits.set(i, y[i] == 1.0);
        }
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t j = 0; j < h.rows(); ++j) {
            std::size_t unknown = n;
            std::size_t count = 0;
            bool parity = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (!h.get(j, i)) continue;
                if (r.known[i])
                    parity ^= r.bits.get(i);
                else {
                    unknown = i;
                    ++count;
                }
            }
            if (count == 1) {
                r.known[unknown] = 1;
                r.bits.set(unknown, parity);
                progress = true;
            }
        }
    }
    return r;
}

}  // namespace

TEST_CASE("llr values") {
    ChannelModel bsc = ChannelModel::bsc(0.1);
    LlrVector l = llr(bsc, {0.0, 1.0});
    CHECK(l.lambda[0] == doctest::Approx(std::log(9.0)));
    CHECK(l.lambda[1] == doctest::Approx(-std::log(9.0)));

    // epsilon -> 1/2 makes the channel uninformative
    LlrVector l2 = llr(ChannelModel::bsc(0.499999), {0.0});
    CHECK(std::abs(l2.lambda[0]) < 1e-5);

    LlrVector l3 = llr(ChannelModel::bec(0.3), {0.0, kErasure, 1.0});
    CHECK(l3.lambda[0] == kBecLlrSurrogate);
    CHECK(l3.lambda[1] == 0.0);
    CHECK(l3.lambda[2] == -kBecLlrSurrogate);

    CHECK_THROWS_AS(llr(bsc, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(ChannelModel::bsc(0.6), std::invalid_argument);
}

TEST_CASE("mld brute force") {
    Gf2Matrix h = hamming74();
    SUBCASE("positive LLRs decode to all-zero") {
        LlrVector l{std::vector<double>(7, 1.0)};
        CHECK(mld_bruteforce(h, l, 64).is_zero());
    }
    SUBCASE("single flipped bit is corrected") {
        Rng rng(5);
        auto words = enumerate_codewords(h, 64);
        ChannelModel bsc = ChannelModel::bsc(0.05);
        for (const auto& x : words) {
            for (std::size_t flip = 0; flip < 7; ++flip) {
                std::vector<double> y(7);
                for (std::size_t i = 0; i < 7; ++i) y[i] = x.get(i) ? 1.0 : 0.0;
                y[flip] = 1.0 - y[flip];
                CHECK(mld_bruteforce(h, llr(bsc, y), 64) == x);
            }
        }
    }
    SUBCASE("all-zero LLR ties to the lexicographically first codeword") {
        LlrVector l{std::vector<double>(7, 0.0)};
        CHECK(mld_bruteforce(h, l, 64).is_zero());
    }
    SUBCASE("cap enforced") {
        LlrVector l{std::vector<double>(7, 1.0)};
        CHECK_THROWS_AS(mld_bruteforce(h, l, 4), std::length_error);
    }
}

TEST_CASE("LP decoding") {
    SUBCASE("positive LLRs give the zero vertex") {
        LlrVector l{std::vector<double>(7, 0.5)};
        DecodeResult r = cclpd_decode(hamming74(), l);
        CHECK(r.is_integral);
        CHECK(r.cost == doctest::Approx(0.0));
        for (double x : r.point) CHECK(x == doctest::Approx(0.0));
    }
    SUBCASE("single row, mixed costs") {
        Gf2Matrix h = Gf2Matrix::from_rows({{1, 1, 1}});
        LlrVector l{{-1.0, 2.0, 2.0}};
        DecodeResult r = cclpd_decode(h, l);
        LlrVector lcopy = l;
        Gf2Vector ml = mld_bruteforce(h, lcopy, 16);
        double ml_cost = 0.0;
        for (std::size_t i : ml.support()) ml_cost += l.lambda[i];
        CHECK(r.cost <= ml_cost + 1e-9);   // relaxation never worse
        CHECK(r.cost == doctest::Approx(0.0));  // and here it matches ML
    }
    SUBCASE("codeword indicators are feasible with their linear cost") {
        Rng rng(9);
        Gf2Matrix h = hamming74();
        auto words = enumerate_codewords(h, 64);
        std::vector<double> lambda(7);
        for (auto& x : lambda) x = rng.real(-1.0, 1.0);
        DecodeResult r = cclpd_decode(h, LlrVector{lambda});
        for (const auto& w : words) {
            double cost = 0.0;
            for (std::size_t i : w.support()) cost += lambda[i];
            CHECK(r.cost <= cost + 1e-9);
        }
    }
    SUBCASE("row degree cap") {
        Gf2Matrix wide(1, 13);
        for (std::size_t c = 0; c < 13; ++c) wide.set(0, c, true);
        CHECK_THROWS_AS(cclpd_decode(wide, LlrVector{std::vector<double>(13, 1.0)}),
                        std::length_error);
    }
}

TEST_CASE("relaxation sandwich on random LLRs") {
    Rng rng(13);
    Gf2Matrix h = hamming74();
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> lambda(7);
        for (auto& x : lambda) x = rng.real(-2.0, 2.0);
        LlrVector l{lambda};
        Gf2Vector ml = mld_bruteforce(h, l, 64);
        double ml_cost = 0.0;
        for (std::size_t i : ml.support()) ml_cost += lambda[i];
        DecodeResult lp = cclpd_decode(h, l);
        CHECK(lp.cost <= ml_cost + 1e-7);
        if (lp.is_integral) {
            // integral LP output is a codeword
            Gf2Vector word(7);
            for (std::size_t i = 0; i < 7; ++i) word.set(i, lp.point[i] > 0.5);
            CHECK(syndrome_gf2(h, word).is_zero());
        }
    }
}

TEST_CASE("cone membership") {
    CHECK(cone_membership(chain34(), {0.0, 0.0, 0.0, 0.0}));
    CHECK(cone_membership(chain34(), {1.0, 1.0, 1.0, 1.0}));
    CHECK_FALSE(cone_membership(chain34(), {2.0, 1.0, 1.0, 1.0}));
    CHECK(cone_margin(chain34(), {1.0, 1.0, 1.0, 1.0}) == doctest::Approx(0.0));
    CHECK(cone_margin(chain34(), {2.0, 1.0, 1.0, 1.0}) == doctest::Approx(-1.0));
}

TEST_CASE("balancedness certificate over polytope vertices") {
    SUBCASE("empty set always certifies") {
        CHECK(lemma2_certificate(chain34(), {}, 100));
    }
    SUBCASE("chain, S = {0}: a quarter of the mass") {
        CHECK(lemma2_certificate(chain34(), {0}, 100));
    }
    SUBCASE("single check, S = {0}: the (1,1) vertex ties") {
        CHECK_FALSE(lemma2_certificate(single_check2(), {0}, 100));
    }
}

TEST_CASE("hard decision and syndrome") {
    Gf2Matrix h = hamming74();
    SUBCASE("all positive") {
        auto [ybar, s] = hard_decision_and_syndrome(LlrVector{std::vector<double>(7, 2.0)}, h);
        CHECK(ybar.is_zero());
        CHECK(s.is_zero());
    }
    SUBCASE("sign rule and zero ties") {
        LlrVector l{{-1.0, 1.0, 0.0, -0.5, 0.3, 0.0, 2.0}};
        auto [ybar, s] = hard_decision_and_syndrome(l, h);
        CHECK(ybar.get(0));
        CHECK_FALSE(ybar.get(1));
        CHECK_FALSE(ybar.get(2));  // tie resolves to 0
        CHECK(ybar.get(3));
        CHECK_FALSE(ybar.get(5));
        CHECK(s == syndrome_gf2(h, ybar));
    }
}

TEST_CASE("error-syndrome reformulation equivalence") {
    SUBCASE("Hamming under BSC noise, 100 seeds") {
        Gf2Matrix h = hamming74();
        ChannelModel bsc = ChannelModel::bsc(0.2);
        auto words = enumerate_codewords(h, 64);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            Rng rng(seed);
            const Gf2Vector& x = words[rng.below(words.size())];
            std::vector<double> y = transmit(bsc, x, rng);
            CHECK(mld3_equivalence_check(h, llr(bsc, y), 64));
        }
    }
    SUBCASE("all positive LLRs: both sides pick the zero error") {
        CHECK(mld3_equivalence_check(hamming74(), LlrVector{std::vector<double>(7, 1.0)}, 64));
    }
    SUBCASE("single parity check, all four received patterns") {
        Gf2Matrix h = single_check2();
        ChannelModel bsc = ChannelModel::bsc(0.1);
        for (double a : {0.0, 1.0})
            for (double b : {0.0, 1.0}) CHECK(mld3_equivalence_check(h, llr(bsc, {a, b}), 16));
    }
}

TEST_CASE("all-zero symmetry under the BSC") {
    // Success for transmitted x with flips F equals success for the zero
    // word with the same flip set.
    Gf2Matrix h = hamming74();
    ChannelModel bsc = ChannelModel::bsc(0.15);
    auto words = enumerate_codewords(h, 64);
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        Rng rng(derive_seed(333, trial));
        const Gf2Vector& x = words[rng.below(words.size())];
        std::vector<char> flips(7, 0);
        for (std::size_t i = 0; i < 7; ++i) flips[i] = rng.real01() < bsc.param;
        std::vector<double> y_x(7), y_zero(7);
        for (std::size_t i = 0; i < 7; ++i) {
            y_x[i] = static_cast<double>(x.get(i) != static_cast<bool>(flips[i]));
            y_zero[i] = static_cast<double>(flips[i] != 0);
        }
        LlrVector lx = llr(bsc, y_x), l0 = llr(bsc, y_zero);
        DecodeResult rx = cclpd_decode(h, lx);
        DecodeResult r0 = cclpd_decode(h, l0);
        // Tie-robust success indicator: the transmitted word attains the LP
        // optimum. (The returned vertex itself is tie-broken by the pivot
        // rule, which need not relabel coherently.)
        double cost_x = 0.0;
        for (std::size_t i : x.support()) cost_x += lx.lambda[i];
        bool success_x = std::abs(rx.cost - cost_x) <= 1e-7;
        bool success_0 = std::abs(r0.cost) <= 1e-7;
        CHECK(success_x == success_0);
    }
}

TEST_CASE("erasure decoding agrees with peeling on resolved positions") {
    Gf2Matrix h = hamming74();
    ChannelModel bec = ChannelModel::bec(0.4);
    auto words = enumerate_codewords(h, 64);
    for (std::uint64_t widx : {0ull, 5ull, 9ull}) {
        const Gf2Vector& x = words[widx];
        for (std::uint32_t mask = 0; mask < (1u << 7); ++mask) {
            std::vector<double> y(7);
            for (std::size_t i = 0; i < 7; ++i)
                y[i] = (mask >> i) & 1 ? kErasure : (x.get(i) ? 1.0 : 0.0);
            PeelResult peel = bec_peel(h, y);
            DecodeResult lp = cclpd_decode(h, llr(bec, y));
            for (std::size_t i = 0; i < 7; ++i)
                if (peel.known[i])
                    CHECK(std::abs(lp.point[i] - (peel.bits.get(i) ? 1.0 : 0.0)) <= 1e-6);
        }
    }
}

TEST_CASE("BEC surrogate magnitude insensitivity") {
    // 1e5 vs 1e6 surrogate picks the same argmin.
    Gf2Matrix h = hamming74();
    Gf2Vector x(7);
    for (std::uint32_t mask = 0; mask < (1u << 7); mask += 13) {
        std::vector<double> y5(7), y6(7);
        LlrVector l5, l6;
        l5.lambda.resize(7);
        l6.lambda.resize(7);
        for (std::size_t i = 0; i < 7; ++i) {
            bool erased = (mask >> i) & 1;
            l6.lambda[i] = erased ? 0.0 : (x.get(i) ? -1e6 : 1e6);
            l5.lambda[i] = erased ? 0.0 : (x.get(i) ? -1e5 : 1e5);
        }
        DecodeResult r5 = cclpd_decode(h, l5);
        DecodeResult r6 = cclpd_decode(h, l6);
        for (std::size_t i = 0; i < 7; ++i) CHECK(std::abs(r5.point[i] - r6.point[i]) <= 1e-6);
    }
}
