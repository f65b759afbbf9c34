#include "doctest.h"

#include <stdexcept>

#include "shuffle/ddpa.hpp"

using namespace shuffle;

namespace {

AsymFn xmon(int rank, std::vector<int> eta) { return AsymFn::monom(rank, std::move(eta)); }

const QT one(1), t = QT::t(), q = QT::q();

}  // namespace

TEST_CASE("word vertex bookkeeping") {
    OpWord w = make_word(0, {let_dminus(), let_T(1), let_dplus(), let_dplus()});
    CHECK(word_target(w) == 1);
    CHECK(word_target(make_word(3, {})) == 3);
    CHECK_THROWS_AS(make_word(0, {let_dminus()}), std::invalid_argument);
    CHECK_THROWS_AS(make_word(2, {let_T(2)}), std::invalid_argument);
    CHECK_THROWS_AS(make_word(2, {let_mulx(3)}), std::invalid_argument);
    CHECK_THROWS_AS(make_word(1, {let_Y(2)}), std::invalid_argument);
    // concat applies the right word first and checks the junction vertex
    OpWord a = make_word(1, {let_dminus()});
    OpWord b = make_word(0, {let_dplus()});
    CHECK(word_target(concat(a, b)) == 0);
    CHECK_THROWS_AS(concat(b, b), std::invalid_argument);
}

TEST_CASE("Demazure-Lusztig letters on heads") {
    AsymFn x1 = xmon(2, {1, 0}), x2 = xmon(2, {0, 1});
    CHECK(act_T(1, x1) == x2 + (one - t) * x1);
    CHECK(act_T(1, x2) == t * x1);
    CHECK(act_T(1, xmon(2, {1, 1})) == xmon(2, {1, 1}));
    CHECK(act_Tinv(1, x1) == t.inv() * x2);
    CHECK(act_Tinv(1, x2) == x1 - (t.inv() * (one - t)) * x2);
    // quadratic relation on a random-ish head
    AsymFn f = xmon(3, {3, 1, 2}) + q * xmon(3, {0, 2, 1});
    for (int i = 1; i <= 2; ++i) {
        AsymFn lhs = act_T(i, act_T(i, f));
        CHECK(lhs == (one - t) * act_T(i, f) + t * f);
        CHECK(act_Tinv(i, act_T(i, f)) == f);
    }
    CHECK_THROWS_AS(act_T(2, x1), std::invalid_argument);
}

TEST_CASE("generator actions match the displayed formulas") {
    // d-(x1^n) at rank 1 is the Hall-Littlewood vertex operator value h_n[(1-t)X]
    for (int n = 0; n <= 4; ++n) {
        AsymFn got = act_dminus(xmon(1, {n}));
        CHECK(got.r == 0);
        SymFn expect = plethysm(sym_h(Partition{n}), (one - t) * SymFn::pk(1));
        if (n == 0) expect = SymFn(one);
        CHECK(got == AsymFn::from_sym(expect, 0));
    }
    // d- only consumes the last head slot
    AsymFn g = act_dminus(xmon(2, {3, 1}));
    CHECK(g == AsymFn::monom(1, {3}, plethysm(sym_h(Partition{1}), (one - t) * SymFn::pk(1))));

    CHECK(act_dplus(AsymFn::from_sym(SymFn(one), 0)) == -xmon(1, {1}));
    CHECK(act_dplus(xmon(1, {1})) == -xmon(2, {1, 1}));
    CHECK(act_dplusstar(xmon(1, {1})) == xmon(2, {0, 1}));
    CHECK(act_dplusstar(xmon(1, {2})) == xmon(2, {0, 2}));
    // the rotated slot picks up q per unit of exponent
    AsymFn p1 = AsymFn::from_sym(SymFn::pk(1), 0);
    CHECK(act_dplusstar(p1) == q * xmon(1, {1}) + AsymFn::from_sym(SymFn::pk(1), 1));
    CHECK(act_mulx(2, xmon(2, {1, 0})) == xmon(2, {1, 1}));
    CHECK_THROWS_AS(act_dminus(AsymFn::from_sym(SymFn(one), 0)), std::invalid_argument);
}

TEST_CASE("Cherednik letters") {
    CHECK(act_cherednik(1, xmon(1, {1})) == (q * t) * xmon(1, {1}));
    CHECK(act_cherednik(1, AsymFn::from_sym(SymFn(one), 1)).is_zero());
    // Y_1 annihilates inclusions of symmetric functions
    CHECK(act_cherednik(1, iota(AsymFn::from_sym(sym_s({2, 1}), 0))).is_zero());
    CHECK(act_cherednik(1, iota(AsymFn::from_sym(sym_e(2), 0))).is_zero());
    // Y_i commutes with the inclusion
    for (const AsymFn& f : {xmon(1, {2}), AsymFn::monom(1, {1}, SymFn::pk(1))}) {
        CHECK(act_cherednik(1, iota(f)) == iota(act_cherednik(1, f)));
    }
    AsymFn f2 = AsymFn::monom(2, {2, 1}, SymFn(one));
    CHECK(act_cherednik(1, iota(f2)) == iota(act_cherednik(1, f2)));
    CHECK(act_cherednik(2, iota(f2)) == iota(act_cherednik(2, f2)));
    CHECK_THROWS_AS(act_cherednik(2, xmon(1, {1})), std::invalid_argument);
}

TEST_CASE("loop words act as multiplication") {
    for (int r = 1; r <= 2; ++r) {
        for (int i = 1; i <= r; ++i) {
            for (const AsymFn& f :
                 {xmon(r, std::vector<int>(r, 1)), AsymFn::monom(r, std::vector<int>(r, 0),
                                                                 sym_m({2}))}) {
                CHECK(eval_sum(y_word(i, r), f) == act_mulx(i, f));
            }
        }
    }
}

TEST_CASE("word evaluation") {
    AsymFn f = xmon(2, {1, 1});
    CHECK(eval_word(make_word(2, {}), f) == f);
    OpWord w = make_word(2, {let_scalar(q), let_T(1), let_mulx(1)});
    CHECK(eval_word(w, f) == q * act_T(1, act_mulx(1, f)));
    CHECK_THROWS_AS(eval_word(make_word(1, {}), f), std::invalid_argument);
    // sums add up
    OpSum s = {make_word(2, {let_T(1)}), scaled(make_word(2, {}), -one)};
    CHECK(eval_sum(s, f) == act_T(1, f) - f);
}

TEST_CASE("endomorphism images") {
    OpWord dm = make_word(3, {let_dminus()});
    CHECK(transform_word(WordEndo::N, dm) == dm);
    CHECK(transform_word(WordEndo::S, dm) == dm);
    CHECK(transform_word(WordEndo::rho, dm) == dm);

    for (int r : {0, 2}) {
        OpWord dp = make_word(r, {let_dplus()});
        OpWord img = transform_word(WordEndo::wbar, dp);
        REQUIRE(img.letters.size() == 2);
        CHECK(img.letters[0] == let_scalar(-QT::t(r).inv()));
        CHECK(img.letters[1] == let_dplus());
    }

    OpWord dp2 = make_word(1, {let_dplus()});
    OpWord nimg = transform_word(WordEndo::N, dp2);
    REQUIRE(nimg.letters.size() == 3);
    CHECK(nimg.letters[0] == let_scalar(-(q * t).inv()));
    CHECK(nimg.letters[1] == let_Y(1));
    CHECK(nimg.letters[2] == let_dplus());

    // rho* inverts scalars and swaps to the starred/inverse letters
    OpWord yw = make_word(2, {let_scalar(q / (one - t)), let_T(1), let_dplus(), let_dminus(),
                              let_mulx(2)});
    OpWord rimg = transform_word(WordEndo::rhostar, yw);
    CHECK(rimg.letters[0] == let_scalar((q / (one - t)).flip()));
    CHECK(rimg.letters[1] == let_Tinv(1));
    CHECK(rimg.letters[2] == let_dplusstar());
    CHECK(rimg.letters[3] == let_dminus());
    CHECK(rimg.letters[4] == let_Y(2));

    CHECK_THROWS_AS(transform_word(WordEndo::rho, make_word(0, {let_dplusstar()})),
                    std::invalid_argument);
    CHECK_THROWS_AS(transform_word(WordEndo::rhostar, make_word(1, {let_Y(1)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(transform_word(WordEndo::N, make_word(2, {let_mulx(2)})),
                    std::invalid_argument);
}

TEST_CASE("rho* carries y loops to z loops") {
    for (int r = 1; r <= 2; ++r) {
        OpSum lhs = apply_endo(WordEndo::rhostar, y_word(1, r));
        OpSum rhs = z_word(1, r);
        for (const AsymFn& f : pr_graded_basis(r, 2))
            CHECK(eval_sum(lhs, f) == eval_sum(rhs, f));
    }
}

TEST_CASE("N on the y1 loop") {
    // N(y_1) = -(qt)^{-1} z_1 y_1
    for (int r = 1; r <= 2; ++r) {
        OpSum lhs = apply_endo(WordEndo::N, y_word(1, r));
        OpSum rhs = {make_word(r, {let_scalar(-(q * t).inv()), let_Y(1), let_mulx(1)})};
        for (const AsymFn& f : pr_graded_basis(r, 2))
            CHECK(eval_sum(lhs, f) == eval_sum(rhs, f));
    }
    // same identity reached through the macro image of a bare x1 letter
    OpSum viaMacro = apply_endo(WordEndo::N, {make_word(1, {let_mulx(1)})});
    for (const AsymFn& f : pr_graded_basis(1, 2))
        CHECK(eval_sum(viaMacro, f) ==
              eval_sum({make_word(1, {let_scalar(-(q * t).inv()), let_Y(1), let_mulx(1)})}, f));
}

TEST_CASE("N recursion through expanded macros") {
    // N(y_2) = t T_1^{-1} N(y_1) T_1^{-1}
    OpSum lhs = apply_endo(WordEndo::N, {make_word(2, {let_mulx(2)})});
    OpSum ny1 = {make_word(2, {let_scalar(-(q * t).inv()), let_Y(1), let_mulx(1)})};
    OpSum ti = {make_word(2, {let_Tinv(1)})};
    OpSum rhs = sum_scale(sum_concat(ti, sum_concat(ny1, ti)), t);
    for (const AsymFn& f : pr_graded_basis(2, 2))
        CHECK(eval_sum(lhs, f) == eval_sum(rhs, f));
}

TEST_CASE("wbar is an involution on star-free words") {
    OpSum w = {make_word(0, {let_scalar(q / (one - t)), let_dminus(), let_T(1), let_dplus(),
                             let_dplus()})};
    OpSum back = apply_endo(WordEndo::wbar, apply_endo(WordEndo::wbar, w));
    AsymFn f = AsymFn::from_sym(sym_m({1}), 0);
    CHECK(eval_sum(back, f) == eval_sum(w, f));
}

TEST_CASE("farey words") {
    CHECK(farey_word(1, 0) == "");
    CHECK(farey_word(1, 1) == "S");
    CHECK(farey_word(2, 1) == "NS");
    CHECK(farey_word(3, 1) == "NNS");
    CHECK(farey_word(1, 2) == "SS");
    CHECK(farey_word(3, 2) == "NSS");
    CHECK(farey_word(5, 3) == "NSNS");
    CHECK_THROWS_AS(farey_word(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(farey_word(0, 1), std::invalid_argument);
}

TEST_CASE("rho*_{m,n} words") {
    // the (1,0) case is plain rho*
    OpWord w = make_word(0, {let_dplus(), let_dplus()});
    OpSum a = rho_star_mn(1, 0, w);
    OpSum b = {transform_word(WordEndo::rhostar, w)};
    AsymFn vac = AsymFn::from_sym(SymFn(one), 0);
    CHECK(eval_sum(a, vac) == eval_sum(b, vac));

    // appending a trailing N' to the matrix word does not change the result
    auto chain = [&](const std::string& word, const OpSum& s0) {
        OpSum s = s0;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            s = apply_endo(*it == 'N' ? WordEndo::N : WordEndo::S, s);
        return s;
    };
    OpSum base = {transform_word(WordEndo::rhostar, w)};
    CHECK(eval_sum(chain("S", base), vac) == eval_sum(chain("SN", base), vac));
    CHECK(eval_sum(chain("NS", base), vac) == eval_sum(chain("NSN", base), vac));
    CHECK(eval_sum(rho_star_mn(2, 1, w), vac) == eval_sum(chain("NS", base), vac));
}

TEST_CASE("graded spanning sets") {
    CHECK(pr_graded_basis(0, 3).size() == 3);   // partitions of 3
    CHECK(pr_graded_basis(2, 2).size() == 7);   // 2 + 2*1 + 3*1
    CHECK(pr_graded_basis(1, 0).size() == 1);
    for (const AsymFn& f : pr_graded_basis(2, 3)) {
        CHECK(f.r == 2);
        CHECK(f.degree() == 3);
    }
}

TEST_CASE("defining relations hold") {
    CHECK(verify_relations(2, 4).empty());
    CHECK(verify_relations(3, 3).empty());
}

TEST_CASE("relation checker detects a wrong identity") {
    // T_1 and T_1^{-1} differ on P(2)_1, so the comparison logic has teeth
    OpSum lhs = {make_word(2, {let_T(1)})};
    OpSum rhs = {make_word(2, {let_Tinv(1)})};
    bool found = false;
    for (const AsymFn& f : pr_graded_basis(2, 1))
        if (eval_sum(lhs, f) != eval_sum(rhs, f)) found = true;
    CHECK(found);
}

TEST_CASE("scalar expression parsing") {
    CHECK(parse_qt("q t^2 / (1-t)") == q * t * t / (one - t));
    CHECK(parse_qt("t-1") == t - one);
    CHECK(parse_qt("-q^2 + 3") == QT(3) - q * q);
    CHECK(parse_qt("2(1+t)") == QT(2) * (one + t));
    CHECK(parse_qt("q^-1") == q.inv());
    CHECK_THROWS_AS(parse_qt("q +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_qt("(1-t"), std::invalid_argument);
}

TEST_CASE("word text syntax") {
    OpSum s = parse_opword("d- [d-,d+]/(t-1) d+ d+", 0);
    REQUIRE(s.size() == 2);
    for (const auto& w : s) CHECK(word_target(w) == 1);
    AsymFn vac = AsymFn::from_sym(SymFn(one), 0);
    AsymFn viaText = eval_sum(s, vac);
    // same computation assembled by hand
    AsymFn g = act_dplus(act_dplus(vac));
    AsymFn comm = act_dminus(act_dplus(g)) - act_dplus(act_dminus(g));
    CHECK(viaText == act_dminus(comm * (t - one).inv()));

    OpSum tw = parse_opword("(q/(1-t)) Tinv1 x2 Y1", 2);
    REQUIRE(tw.size() == 1);
    AsymFn f = xmon(2, {1, 0});
    CHECK(eval_sum(tw, f) ==
          (q / (one - t)) * act_Tinv(1, act_mulx(2, act_cherednik(1, f))));
    CHECK_THROWS_AS(parse_opword("d- [d-,d+ d+", 0), std::invalid_argument);
    CHECK_THROWS_AS(parse_opword("bogus", 0), std::invalid_argument);
}
