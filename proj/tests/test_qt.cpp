#include <doctest.h>

#include <random>

#include "shuffle/qt.hpp"

using namespace shuffle;

namespace {

PolyQT make(std::initializer_list<std::tuple<long, int, int>> ts) {
    PolyQT p;
    for (auto& [c, qe, te] : ts) p = p + PolyQT::monom(ZZ(c), qe, te);
    return p;
}

const PolyQT one_m_t = make({{1, 0, 0}, {-1, 0, 1}});    // 1 - t
const PolyQT one_m_t2 = make({{1, 0, 0}, {-1, 0, 2}});   // 1 - t^2
const PolyQT one_p_t = make({{1, 0, 0}, {1, 0, 1}});     // 1 + t
const PolyQT one_m_qt = make({{1, 0, 0}, {-1, 1, 1}});   // 1 - q t

PolyQT rand_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 4), expo(0, 3), coef(-4, 4);
    PolyQT p;
    for (int i = 0, n = nterms(rng); i < n; ++i) {
        int c = coef(rng);
        if (c == 0) c = 1;
        p = p + PolyQT::monom(ZZ(c), expo(rng), expo(rng));
    }
    return p;
}

QT rand_qt(std::mt19937& rng) {
    PolyQT d = rand_poly(rng);
    while (d.is_zero()) d = rand_poly(rng);
    return QT(rand_poly(rng), d);
}

}  // namespace

TEST_CASE("reduction to lowest terms") {
    QT a(one_m_t2, one_m_t);
    CHECK(a == QT(one_p_t));
    CHECK(a.den().is_one());
    CHECK(a.str() == "1 + t");

    QT b(PolyQT::monom(1, 1, 0) * one_m_qt, one_m_qt * one_p_t);
    CHECK(b == QT(PolyQT::monom(1, 1, 0), one_p_t));
    CHECK(b.str() == "q/(1 + t)");
}

TEST_CASE("orders of vanishing in t") {
    QT a(PolyQT::monom(1, 0, 2), one_p_t);
    CHECK(a.t_order() == 2);
    QT b(one_m_t, PolyQT::monom(1, 0, 1));
    CHECK(b.t_order() == -1);
    CHECK(QT::q().t_order() == 0);
    CHECK(QT().t_order() == QT::t_order_infinite);
}

TEST_CASE("q,t inversion") {
    QT a(one_m_t);
    QT f = a.flip();
    // 1 - t^{-1} = (t - 1)/t
    CHECK(f == QT(make({{-1, 0, 0}, {1, 0, 1}}), PolyQT::monom(1, 0, 1)));
    CHECK(f.flip() == a);
    QT b = QT(one_m_qt, one_p_t);
    CHECK(b.flip().flip() == b);
}

TEST_CASE("frobenius exponent scaling") {
    QT a(one_m_t);
    CHECK(a.frob(2) == QT(one_m_t2));
    QT b = QT::q() / QT(one_m_t);
    CHECK(b.frob(3) == QT::q(3) / QT(make({{1, 0, 0}, {-1, 0, 3}})));
}

TEST_CASE("canonical form invariants") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        QT x = rand_qt(rng);
        if (x.is_zero()) {
            CHECK(x.den().is_one());
            continue;
        }
        // no common monomial factor
        CHECK((x.num().min_q() == 0 || x.den().min_q() == 0));
        CHECK((x.num().min_t() == 0 || x.den().min_t() == 0));
        CHECK(x.num().min_q() >= 0);
        CHECK(x.den().min_t() >= 0);
        // positive leading denominator coefficient
        CHECK(x.den().terms.rbegin()->second > 0);
        // coprime
        CHECK(gcd_poly(x.num(), x.den()).is_one());
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(11);
    mpq_class qv(3, 7), tv(-2, 5);
    for (int i = 0; i < 100; ++i) {
        QT a = rand_qt(rng), b = rand_qt(rng), c = rand_qt(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + (b + c) == (a + b) + c);
        CHECK(a - a == QT());
        if (!a.is_zero()) CHECK(a * a.inv() == QT(1));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK((a + b).eval(qv, tv) == a.eval(qv, tv) + b.eval(qv, tv));
        CHECK((a * b).eval(qv, tv) == a.eval(qv, tv) * b.eval(qv, tv));
    }
}

TEST_CASE("power series expansion in t") {
    QT geom = QT(PolyQT(1), one_m_t);  // 1/(1-t)
    auto [ord, cs] = geom.t_series(4);
    CHECK(ord == 0);
    REQUIRE(cs.size() == 4);
    for (auto& c : cs) CHECK(c == QT(1));

    QT lau(one_m_t, PolyQT::monom(1, 0, 1));  // (1-t)/t = t^{-1} - 1
    auto [ord2, cs2] = lau.t_series(3);
    CHECK(ord2 == -1);
    CHECK(cs2[0] == QT(1));
    CHECK(cs2[1] == QT(-1));
    CHECK(cs2[2] == QT(0));

    // rational coefficients in q survive the expansion
    QT mixed = QT(PolyQT(1), make({{2, 0, 0}, {-1, 1, 1}}));  // 1/(2 - q t)
    auto [ord3, cs3] = mixed.t_series(3);
    CHECK(ord3 == 0);
    CHECK(cs3[0] == QT::ratio(1, 2));
    CHECK(cs3[1] == QT::q() * QT::ratio(1, 4));
    CHECK(cs3[2] == QT::q(2) * QT::ratio(1, 8));
}

TEST_CASE("powers") {
    QT x = QT(one_m_t, one_p_t);
    CHECK(x.pow(0) == QT(1));
    CHECK(x.pow(3) == x * x * x);
    CHECK(x.pow(-2) == (x * x).inv());
}
