#pragma once

// Operator words on the graded family P(0), P(1), ... : the quiver generators
// T_i, d-, d+, d+* realized by their explicit actions, multiplication letters
// x_i, Cherednik letters Y_i expanded from z-words, endomorphisms of the word
// algebra (N, S, rho, rho*, wbar, rho*_{m,n}), and a relation-checking
// harness that evaluates both sides of every defining relation on spanning
// sets of the graded pieces.

#include <string>
#include <utility>
#include <vector>

#include "shuffle/asympoly.hpp"

namespace shuffle {

struct OpLetter {
    enum Kind { T, Tinv, Dminus, Dplus, DplusStar, MulX, Y, Scalar };
    Kind kind = T;
    int i = 0;  // index for T / Tinv / MulX / Y
    QT c;       // payload for Scalar

    bool operator==(const OpLetter& o) const {
        return kind == o.kind && i == o.i && c == o.c;
    }
};

OpLetter let_T(int i);
OpLetter let_Tinv(int i);
OpLetter let_dminus();
OpLetter let_dplus();
OpLetter let_dplusstar();
OpLetter let_mulx(int i);
OpLetter let_Y(int i);
OpLetter let_scalar(const QT& c);

// A word of letters with a declared source vertex.  Letters are written in
// operator order: letters.back() acts first, letters.front() last.  Vertex
// bookkeeping: Dminus maps r -> r-1, Dplus and DplusStar map r -> r+1, all
// other letters keep the vertex; T(i) requires i < r and MulX(i), Y(i)
// require i <= r at the point of application.
struct OpWord {
    int source = 0;
    std::vector<OpLetter> letters;

    bool operator==(const OpWord& o) const {
        return source == o.source && letters == o.letters;
    }
};

// Formal sum of words with a common source (and target).
using OpSum = std::vector<OpWord>;

// target vertex of the word; throws std::invalid_argument if any letter is
// applied at a vertex where it does not exist
int word_target(const OpWord& w);

// validating constructor
OpWord make_word(int source, std::vector<OpLetter> letters);

OpWord scaled(OpWord w, const QT& c);       // prepend a Scalar letter
OpWord concat(const OpWord& a, const OpWord& b);  // apply b first, then a
OpSum sum_scale(OpSum s, const QT& c);
OpSum sum_concat(const OpSum& a, const OpSum& b);
OpSum sum_commutator(const OpSum& a, const OpSum& b);  // ab - ba

// ---- concrete actions on P(r) ----

AsymFn act_T(int i, const AsymFn& f);
AsymFn act_Tinv(int i, const AsymFn& f);
AsymFn act_dminus(const AsymFn& f);
AsymFn act_dplus(const AsymFn& f);
AsymFn act_dplusstar(const AsymFn& f);
AsymFn act_mulx(int i, const AsymFn& f);
// Cherednik operator Y_i at the rank of f, via the z-word recursion
AsymFn act_cherednik(int i, const AsymFn& f);
AsymFn act_generator(const OpLetter& l, const AsymFn& f);

AsymFn eval_word(const OpWord& w, const AsymFn& f);
AsymFn eval_sum(const OpSum& s, const AsymFn& f);

// ---- the y_i / z_i loops as words in the primitive letters ----

// y_1 = 1/(t^{r-1}(t-1)) [d+, d-] T_{r-1} ... T_1,  y_{i+1} = t T_i^{-1} y_i T_i^{-1}
OpSum y_word(int i, int vertex);
// z_1 = t^r/(1-t) [d+*, d-] T_{r-1}^{-1} ... T_1^{-1},  z_{i+1} = t^{-1} T_i z_i T_i
OpSum z_word(int i, int vertex);

// replace every MulX / Y letter by its loop word at the local vertex
OpSum expand_macros(const OpWord& w);
OpSum expand_macros(const OpSum& s);

// ---- endomorphisms of the word algebra ----

enum class WordEndo { N, S, rho, rhostar, wbar };

// Letterwise substitution.  N fixes T, Tinv, Dminus, DplusStar, Y and sends
// Dplus -> -(qt)^{-1} z_1 d+ (as macro letters); S fixes T, Tinv, Dminus,
// Dplus, MulX and sends DplusStar -> -y_1 d+*; rho embeds a word over the
// star-free alphabet unchanged; rho* sends T <-> Tinv, Dplus -> DplusStar,
// MulX -> Y and inverts q, t in scalars; wbar sends T <-> Tinv and
// Dplus -> -t^{-r} Dplus (r the vertex where that letter is applied) and
// inverts q, t in scalars.  Throws std::invalid_argument when a letter has
// no single-word image under the endomorphism (use apply_endo instead).
OpWord transform_word(WordEndo e, const OpWord& w);

// general form: expands macro letters on the fly when the letterwise image
// does not exist, so any composite of endomorphisms can be evaluated
OpSum apply_endo(WordEndo e, const OpSum& s);

// the {N,S}-word whose matrix product has first column (m, n)^T, e.g.
// "" for (1,0), "S" for (1,1), "NS" for (2,1); leftmost letter outermost
std::string farey_word(long m, long n);

// rho*_{m,n} = (composite of N, S endomorphisms per farey_word) after rho*;
// requires gcd(m, n) = 1, m >= 1, n >= 0
OpSum rho_star_mn(long m, long n, const OpWord& w);

// ---- relation harness ----

// spanning set of the degree-d piece of P(r): x^eta m_lambda for all head
// compositions eta and partitions lambda with |eta| + |lambda| = d
std::vector<AsymFn> pr_graded_basis(int r, int d);

// the defining relations at source vertex r, as (name, lhs, rhs) word sums
std::vector<std::tuple<std::string, OpSum, OpSum>> relation_words(int r);

// evaluates every relation on spanning sets of P(r)_d for r <= r_max,
// d <= d_max; returns human-readable descriptions of any violations
std::vector<std::string> verify_relations(int r_max, int d_max);

// ---- text syntax ----

// scalar expressions in q and t: integers, q, t, + - * / ^ and parentheses,
// with juxtaposition as multiplication (e.g. "q t^2 / (1-t)")
QT parse_qt(const std::string& text);

// whitespace-separated word tokens written in operator order (rightmost acts
// first): d-  d+  d+*  T2  Tinv2  x1  Y1  (scalar)  [A,B]  with an optional
// /(scalar) suffix on any token, e.g. "d- [d-,d+]/(t-1) d+ d+"
OpSum parse_opword(const std::string& text, int source);

}  // namespace shuffle
