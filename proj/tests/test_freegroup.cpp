#include "biorder/freegroup.hpp"
#include "biorder/magnus.hpp"
#include "biorder/specialpoly.hpp"
#include "biorder/textio.hpp"
#include "biorder/wordorder.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

using namespace biorder;
using namespace biorder::testing;

namespace {

IntPoly P(const char* s) { return parse_int_poly(s); }
FreeWord W(const char* s) { return parse_word(s); }

FreeEndo compose(const FreeEndo& outer, const FreeEndo& inner)
{
    std::vector<FreeWord> images;
    images.reserve(static_cast<size_t>(inner.rank));
    for (const FreeWord& w : inner.images) images.push_back(apply(outer, w));
    return FreeEndo(inner.rank, std::move(images));
}

} // namespace

TEST_CASE("free reduction")
{
    CHECK(W("x1*x1^-1").empty());
    CHECK(W("x1*x1") == W("x1^2"));
    CHECK(W("x1*x2*x2^-1*x1") == W("x1^2"));
    CHECK(W("1").empty());
    CHECK(to_string(W("x1^2*x2^-3")) == "x1^2*x2^-3");
    // reducing a reduced word is the identity
    const FreeWord w = W("x1*x2^3*x1^-1");
    CHECK(FreeWord(w.letters()) == w);
    CHECK(w.inverse().inverse() == w);
    CHECK((w * w.inverse()).empty());
    CHECK(w.length() == 5);
}

TEST_CASE("apply respects concatenation and reduces")
{
    const FreeEndo theta = companion_automorphism(P("x^3-3x-1"));
    CHECK(apply(FreeEndo::identity(3), W("x1*x2^-2")) == W("x1*x2^-2"));
    CHECK(apply(theta, W("x3")) == W("x1*x2^3"));
    CHECK(apply(theta, W("x3*x3^-1")).empty());
    std::mt19937 rng(31);
    for (int i = 0; i < 100; ++i) {
        const FreeWord u = random_word(rng, 3, 6);
        const FreeWord v = random_word(rng, 3, 6);
        CHECK(apply(theta, u * v) == apply(theta, u) * apply(theta, v));
    }
    CHECK_THROWS_AS(apply(theta, W("x4")), std::invalid_argument);
}

TEST_CASE("companion_automorphism: stated examples")
{
    {
        const FreeEndo t = companion_automorphism(P("x^3-3x-1"));
        REQUIRE(t.rank == 3);
        CHECK(t.images[0] == W("x2"));
        CHECK(t.images[1] == W("x3"));
        CHECK(t.images[2] == W("x1*x2^3"));
    }
    {
        const FreeEndo t = companion_automorphism(P("x-1"));
        REQUIRE(t.rank == 1);
        CHECK(t.images[0] == W("x1"));
    }
    {
        const FreeEndo t = companion_automorphism(P("x^2+x-1"));
        REQUIRE(t.rank == 2);
        CHECK(t.images[0] == W("x2"));
        CHECK(t.images[1] == W("x1*x2^-1"));
    }
    CHECK_THROWS_AS(companion_automorphism(P("x^2+1")), std::invalid_argument);  // constant != -1
    CHECK_THROWS_AS(companion_automorphism(P("2x^2-1")), std::invalid_argument); // not monic
}

TEST_CASE("abelianization_matrix: stated examples and functoriality")
{
    {
        const SquareIntMatrix m = abelianization_matrix(companion_automorphism(P("x^3-3x-1")));
        // columns e2, e3, (1,3,0)
        CHECK(m.at(1, 0) == 1);
        CHECK(m.at(2, 1) == 1);
        CHECK(m.at(0, 2) == 1);
        CHECK(m.at(1, 2) == 3);
        CHECK(m.at(2, 2) == 0);
        CHECK(char_poly(m) == P("x^3-3x-1"));
    }
    CHECK(abelianization_matrix(FreeEndo::identity(4)) == SquareIntMatrix::identity(4));
    {
        const SquareIntMatrix m = abelianization_matrix(companion_automorphism(P("x^2+x-1")));
        CHECK(m.at(0, 0) == 0);
        CHECK(m.at(0, 1) == 1);
        CHECK(m.at(1, 0) == 1);
        CHECK(m.at(1, 1) == -1);
    }
    // functorial: matrix of a composition is the product of the matrices
    const FreeEndo a = companion_automorphism(P("x^3-3x-1"));
    std::mt19937 rng(37);
    std::vector<FreeWord> imgs;
    for (int i = 0; i < 3; ++i) imgs.push_back(random_word(rng, 3, 5));
    const FreeEndo b(3, std::move(imgs));
    CHECK(abelianization_matrix(compose(a, b)) ==
          abelianization_matrix(a) * abelianization_matrix(b));
}

TEST_CASE("companion char polys for degrees up to 8")
{
    // abelianization_matrix(companion_automorphism(f)) has char poly f
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> dist(-4, 4);
    for (int d = 1; d <= 8; ++d) {
        std::vector<Int> c(static_cast<size_t>(d) + 1);
        c[0] = -1;
        for (int i = 1; i < d; ++i) c[static_cast<size_t>(i)] = Int(dist(rng));
        c[static_cast<size_t>(d)] = 1;
        const IntPoly f(std::move(c));
        CHECK(char_poly(abelianization_matrix(companion_automorphism(f))) == f);
    }
}

TEST_CASE("magnus_expand: stated examples")
{
    {
        const TruncatedSeries s = magnus_expand(W("x1"), 3, 2);
        CHECK(s.constant() == 1);
        CHECK(s.lowest_degree() == 1);
        const auto c1 = s.component(1);
        CHECK(c1[0] == 1);
        CHECK(c1[1] == 0);
        CHECK(c1[2] == 0);
        CHECK(s.terms().size() == 1);
    }
    {
        const TruncatedSeries s = magnus_expand(W("x1*x2*x1^-1*x2^-1"), 2, 2);
        CHECK(s.constant() == 1);
        CHECK(s.lowest_degree() == 2);
        const auto c2 = s.component(2); // order: 11, 12, 21, 22
        CHECK(c2[0] == 0);
        CHECK(c2[1] == 1);  // X1X2
        CHECK(c2[2] == -1); // -X2X1
        CHECK(c2[3] == 0);
    }
    {
        const TruncatedSeries s = magnus_expand(FreeWord(), 2, 3);
        CHECK(s.constant() == 1);
        CHECK(s.terms().empty());
        CHECK(s.lowest_degree() == 0);
    }
    // inverse generator: 1 - X + X^2 - X^3 truncation
    {
        const TruncatedSeries s = magnus_expand(W("x1^-1"), 1, 3);
        CHECK(s.component(1)[0] == -1);
        CHECK(s.component(2)[0] == 1);
        CHECK(s.component(3)[0] == -1);
        // x * x^-1 cancels exactly under truncation
        const TruncatedSeries prod =
            magnus_expand(W("x1"), 1, 3) * s;
        CHECK(prod.terms().empty());
    }
    // powered letters: (1+X)^2 and its inverse series squared
    {
        const TruncatedSeries sq = magnus_expand(W("x1^2"), 1, 2);
        CHECK(sq.component(1)[0] == 2);
        CHECK(sq.component(2)[0] == 1);
        const TruncatedSeries isq = magnus_expand(W("x1^-2"), 1, 2);
        CHECK(isq.component(1)[0] == -2);
        CHECK(isq.component(2)[0] == 3);
    }
}

TEST_CASE("magnus depth detects the lower central series")
{
    // commutator of words of depths a and b has depth >= a+b
    std::mt19937 rng(43);
    for (int i = 0; i < 60; ++i) {
        const FreeWord u = random_word(rng, 2, 4);
        const FreeWord v = random_word(rng, 2, 4);
        if (u.empty() || v.empty()) continue;
        const int du = magnus_expand(u, 2, 4).lowest_degree();
        const int dv = magnus_expand(v, 2, 4).lowest_degree();
        if (du == 0 || dv == 0) continue;
        const FreeWord comm = u * v * u.inverse() * v.inverse();
        if (comm.empty()) continue;
        const int dc = magnus_expand(comm, 2, 4).lowest_degree();
        if (dc != 0) CHECK(dc >= du + dv);
    }
}

TEST_CASE("invariant_compare: stated examples")
{
    const InvariantWordOrder order{companion_automorphism(P("x^3-3x-1"))};
    CHECK(order.compare(W("x1"), W("x1"), 4) == CompareResult::Equal);
    {
        const CompareResult r = order.compare(W("1"), W("x1"), 4);
        const CompareResult rInv = order.compare(W("1"), W("x1^-1"), 4);
        CHECK(r != CompareResult::Equal);
        CHECK(r != CompareResult::DepthExceeded);
        CHECK(((r == CompareResult::Less && rInv == CompareResult::Greater) ||
               (r == CompareResult::Greater && rInv == CompareResult::Less)));
    }
    {
        const auto c = order.compare_with_depth(W("1"), W("x1*x2*x1^-1*x2^-1"), 4);
        CHECK(c.depth == 2);
        CHECK(c.result != CompareResult::DepthExceeded);
    }
    // the special-polynomial hypothesis is checked
    CHECK_THROWS_AS(InvariantWordOrder{companion_automorphism(P("x^2+x-1"))},
                    std::invalid_argument);
}

TEST_CASE("invariant_compare: invariance, antisymmetry, sampled transitivity")
{
    const FreeEndo theta = companion_automorphism(P("x^3-3x-1"));
    const InvariantWordOrder order{theta};
    std::mt19937 rng(47);
    int compared = 0;
    std::vector<std::pair<FreeWord, CompareResult>> positives;
    for (int i = 0; i < 120; ++i) {
        const FreeWord u = random_word(rng, 3, 8);
        const FreeWord v = random_word(rng, 3, 8);
        const CompareResult uv = order.compare(u, v, 4);
        if (uv == CompareResult::DepthExceeded) continue;
        ++compared;
        // antisymmetry
        const CompareResult vu = order.compare(v, u, 4);
        if (uv == CompareResult::Equal)
            CHECK(vu == CompareResult::Equal);
        else if (uv == CompareResult::Less)
            CHECK(vu == CompareResult::Greater);
        else
            CHECK(vu == CompareResult::Less);
        // theta-invariance
        CHECK(order.compare(apply(theta, u), apply(theta, v), 4) == uv);
    }
    CHECK(compared > 60);

    // transitivity on sampled triples
    int triples = 0;
    for (int i = 0; i < 60; ++i) {
        const FreeWord a = random_word(rng, 3, 6);
        const FreeWord b = random_word(rng, 3, 6);
        const FreeWord c = random_word(rng, 3, 6);
        const CompareResult ab = order.compare(a, b, 4);
        const CompareResult bc = order.compare(b, c, 4);
        if (ab != CompareResult::Less || bc != CompareResult::Less) continue;
        ++triples;
        CHECK(order.compare(a, c, 4) == CompareResult::Less);
    }
    CHECK(triples > 3);
}

TEST_CASE("deep commutators: caps, depth-4 ordering, invariance")
{
    const FreeEndo theta = companion_automorphism(P("x^3-3x-1"));
    const InvariantWordOrder order{theta};
    const FreeWord c1 = W("x1*x2*x1^-1*x2^-1"); // depth 2
    const FreeWord c2 = c1 * W("x1") * c1.inverse() * W("x1^-1"); // depth 3
    CHECK(order.compare(FreeWord(), c2, 2) == CompareResult::DepthExceeded);
    CHECK(order.compare(FreeWord(), c2, 4) != CompareResult::DepthExceeded);

    // depth 4 runs through the 81-dimensional tensor oracle
    const FreeWord c3 = c2 * W("x2") * c2.inverse() * W("x2^-1");
    const auto r = order.compare_with_depth(FreeWord(), c3, 4);
    CHECK(r.depth == 4);
    CHECK(r.result != CompareResult::DepthExceeded);
    CHECK(order.compare(apply(theta, FreeWord()), apply(theta, c3), 4) == r.result);
}

TEST_CASE("concurrent comparisons share the oracle cache safely")
{
    const FreeEndo theta = companion_automorphism(P("x^3-3x-1"));
    const InvariantWordOrder order{theta};
    const FreeWord c1 = W("x1*x2*x1^-1*x2^-1");
    std::vector<std::thread> threads;
    std::atomic<int> bad{0};
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&order, &c1, &bad, t]() {
            std::mt19937 rng(1000 + t);
            for (int i = 0; i < 40; ++i) {
                const FreeWord u = random_word(rng, 3, 6);
                const FreeWord v = random_word(rng, 3, 6);
                const CompareResult uv = order.compare(u, v, 3);
                const CompareResult vu = order.compare(v, u, 3);
                const bool ok =
                    (uv == CompareResult::Equal && vu == CompareResult::Equal) ||
                    (uv == CompareResult::Less && vu == CompareResult::Greater) ||
                    (uv == CompareResult::Greater && vu == CompareResult::Less) ||
                    (uv == CompareResult::DepthExceeded && vu == CompareResult::DepthExceeded);
                if (!ok) ++bad;
                // exercise the depth-2 oracle from all threads at once
                if (order.compare(FreeWord(), c1, 3) == CompareResult::DepthExceeded) ++bad;
            }
        });
    for (auto& th : threads) th.join();
    CHECK(bad == 0);
}

TEST_CASE("tensor-power oracle hypothesis: factors keep positive real roots")
{
    const SquareIntMatrix m = abelianization_matrix(companion_automorphism(P("x^3-3x-1")));
    for (int n = 1; n <= 3; ++n) {
        const auto [ok, evidence] = preserves_order(m.kronecker_power(n));
        CHECK(ok);
        for (const OrderEvidence& e : evidence) CHECK(e.hasPositiveRealRoot);
    }
}

TEST_CASE("verify_product_eigenvalues")
{
    const SquareIntMatrix fib(2, {Int(0), Int(1), Int(1), Int(1)});
    CHECK(verify_product_eigenvalues(fib, 2, 1e-8));
    CHECK(verify_product_eigenvalues(fib, 1, 1e-12));
    const SquareIntMatrix comp = SquareIntMatrix::companion(P("x^3-3x-1"));
    CHECK(verify_product_eigenvalues(comp, 1, 1e-10));
    CHECK(verify_product_eigenvalues(comp, 2, 1e-8));
    CHECK_THROWS_AS(verify_product_eigenvalues(comp, 8, 1e-8), std::invalid_argument);
    // a tolerance below the numeric noise floor must report a mismatch
    CHECK_FALSE(verify_product_eigenvalues(comp, 3, 1e-300));
    CHECK_THROWS_AS(verify_product_eigenvalues(comp, 2, 0.0), std::invalid_argument);
}
