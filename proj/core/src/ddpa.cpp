#include "shuffle/ddpa.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace shuffle {

OpLetter let_T(int i) { OpLetter l; l.kind = OpLetter::T; l.i = i; return l; }
OpLetter let_Tinv(int i) { OpLetter l; l.kind = OpLetter::Tinv; l.i = i; return l; }
OpLetter let_dminus() { OpLetter l; l.kind = OpLetter::Dminus; return l; }
OpLetter let_dplus() { OpLetter l; l.kind = OpLetter::Dplus; return l; }
OpLetter let_dplusstar() { OpLetter l; l.kind = OpLetter::DplusStar; return l; }
OpLetter let_mulx(int i) { OpLetter l; l.kind = OpLetter::MulX; l.i = i; return l; }
OpLetter let_Y(int i) { OpLetter l; l.kind = OpLetter::Y; l.i = i; return l; }
OpLetter let_scalar(const QT& c) { OpLetter l; l.kind = OpLetter::Scalar; l.c = c; return l; }

// vertex where the letter lands, given the vertex it is applied at;
// throws if the letter does not exist there
static int apply_vertex(const OpLetter& l, int r) {
    switch (l.kind) {
        case OpLetter::T:
        case OpLetter::Tinv:
            if (l.i < 1 || l.i > r - 1)
                throw std::invalid_argument("OpWord: T index out of range at vertex " +
                                            std::to_string(r));
            return r;
        case OpLetter::MulX:
        case OpLetter::Y:
            if (l.i < 1 || l.i > r)
                throw std::invalid_argument("OpWord: x/Y index out of range at vertex " +
                                            std::to_string(r));
            return r;
        case OpLetter::Dminus:
            if (r < 1) throw std::invalid_argument("OpWord: d- at vertex 0");
            return r - 1;
        case OpLetter::Dplus:
        case OpLetter::DplusStar:
            return r + 1;
        case OpLetter::Scalar:
            return r;
    }
    return r;
}

int word_target(const OpWord& w) {
    int r = w.source;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = apply_vertex(*it, r);
    return r;
}

OpWord make_word(int source, std::vector<OpLetter> letters) {
    OpWord w;
    w.source = source;
    w.letters = std::move(letters);
    word_target(w);
    return w;
}

OpWord scaled(OpWord w, const QT& c) {
    w.letters.insert(w.letters.begin(), let_scalar(c));
    return w;
}

OpWord concat(const OpWord& a, const OpWord& b) {
    if (a.source != word_target(b))
        throw std::invalid_argument("OpWord concat: vertex mismatch");
    OpWord w;
    w.source = b.source;
    w.letters = a.letters;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

OpSum sum_scale(OpSum s, const QT& c) {
    for (auto& w : s) w = scaled(w, c);
    return s;
}

OpSum sum_concat(const OpSum& a, const OpSum& b) {
    OpSum out;
    for (const auto& wa : a)
        for (const auto& wb : b) out.push_back(concat(wa, wb));
    return out;
}

OpSum sum_commutator(const OpSum& a, const OpSum& b) {
    OpSum out = sum_concat(a, b);
    for (auto& w : sum_concat(b, a)) out.push_back(scaled(w, QT(-1)));
    return out;
}

// ---- generator actions ----

AsymFn act_T(int i, const AsymFn& f) {
    if (i < 1 || i > f.r - 1) throw std::invalid_argument("act_T: index out of range");
    const QT omt = QT(1) - QT::t();
    AsymFn out(f.r);
    for (const auto& [eta, g] : f.terms) {
        int a = eta[i - 1], b = eta[i];
        std::vector<int> nh = eta;
        nh[i - 1] = b;
        nh[i] = a;
        out.add_term(nh, g);
        if (a > b) {
            for (int j = b + 1; j <= a; ++j) {
                nh = eta;
                nh[i - 1] = j;
                nh[i] = a + b - j;
                out.add_term(nh, g * omt);
            }
        } else if (a < b) {
            for (int j = a + 1; j <= b; ++j) {
                nh = eta;
                nh[i - 1] = j;
                nh[i] = a + b - j;
                out.add_term(nh, -(g * omt));
            }
        }
    }
    return out;
}

AsymFn act_Tinv(int i, const AsymFn& f) {
    // T_i^{-1} = t^{-1} T_i - t^{-1}(1-t)
    const QT tinv = QT::t().inv();
    return act_T(i, f) * tinv - f * (tinv * (QT(1) - QT::t()));
}

AsymFn act_dminus(const AsymFn& f) {
    if (f.r < 1) throw std::invalid_argument("act_dminus: rank 0");
    AsymFn out(f.r - 1);
    for (const auto& [eta, g] : f.terms) {
        std::vector<int> nh(eta.begin(), eta.end() - 1);
        out.add_term(nh, jing(eta.back(), g));
    }
    return out;
}

// multiply by the last head variable (terms must have rank >= 1)
static AsymFn bump_last(const AsymFn& f) {
    AsymFn out(f.r);
    for (const auto& [eta, g] : f.terms) {
        std::vector<int> nh = eta;
        nh[f.r - 1] += 1;
        out.add_term(nh, g);
    }
    return out;
}

AsymFn act_dplus(const AsymFn& f) {
    AsymFn g = bump_last(iota(f));
    for (int i = f.r; i >= 1; --i) g = act_T(i, g);
    return -g;
}

AsymFn act_dplusstar(const AsymFn& f) {
    AsymFn in = iota(f);
    AsymFn out(f.r + 1);
    for (const auto& [eta, g] : in.terms) {
        std::vector<int> nh(eta.size());
        nh[0] = eta.back();
        for (size_t k = 1; k < eta.size(); ++k) nh[k] = eta[k - 1];
        out.add_term(nh, g * QT::q(eta.back()));
    }
    return out;
}

AsymFn act_mulx(int i, const AsymFn& f) {
    if (i < 1 || i > f.r) throw std::invalid_argument("act_mulx: index out of range");
    AsymFn out(f.r);
    for (const auto& [eta, g] : f.terms) {
        std::vector<int> nh = eta;
        nh[i - 1] += 1;
        out.add_term(nh, g);
    }
    return out;
}

AsymFn act_cherednik(int i, const AsymFn& f) {
    if (i < 1 || i > f.r) throw std::invalid_argument("act_cherednik: index out of range");
    return eval_sum(z_word(i, f.r), f);
}

AsymFn act_generator(const OpLetter& l, const AsymFn& f) {
    switch (l.kind) {
        case OpLetter::T: return act_T(l.i, f);
        case OpLetter::Tinv: return act_Tinv(l.i, f);
        case OpLetter::Dminus: return act_dminus(f);
        case OpLetter::Dplus: return act_dplus(f);
        case OpLetter::DplusStar: return act_dplusstar(f);
        case OpLetter::MulX: return act_mulx(l.i, f);
        case OpLetter::Y: return act_cherednik(l.i, f);
        case OpLetter::Scalar: return f * l.c;
    }
    throw std::logic_error("act_generator: bad letter");
}

AsymFn eval_word(const OpWord& w, const AsymFn& f) {
    if (f.r != w.source) throw std::invalid_argument("eval_word: source vertex mismatch");
    AsymFn g = f;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) g = act_generator(*it, g);
    return g;
}

AsymFn eval_sum(const OpSum& s, const AsymFn& f) {
    AsymFn out;
    bool first = true;
    for (const auto& w : s) {
        AsymFn v = eval_word(w, f);
        if (first) {
            out = v;
            first = false;
        } else {
            out += v;
        }
    }
    return out;
}

// ---- loop words ----

static std::vector<OpLetter> t_chain(int hi, int lo, bool inverse) {
    std::vector<OpLetter> out;
    for (int i = hi; i >= lo; --i) out.push_back(inverse ? let_Tinv(i) : let_T(i));
    return out;
}

static OpSum build_y_word(int i, int vertex);
static OpSum build_z_word(int i, int vertex);

OpSum y_word(int i, int vertex) {
    static std::map<std::pair<int, int>, OpSum> cache;
    static std::mutex mtx;
    if (i < 1 || i > vertex) throw std::invalid_argument("y_word: index out of range");
    auto key = std::make_pair(i, vertex);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    OpSum w = build_y_word(i, vertex);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(w)).first->second;
}

static OpSum build_y_word(int i, int vertex) {
    if (i == 1) {
        int r = vertex;
        QT c = (QT::t(r - 1) * (QT::t() - QT(1))).inv();
        std::vector<OpLetter> chain = t_chain(r - 1, 1, false);
        std::vector<OpLetter> fwd = {let_dplus(), let_dminus()};
        std::vector<OpLetter> bwd = {let_dminus(), let_dplus()};
        fwd.insert(fwd.end(), chain.begin(), chain.end());
        bwd.insert(bwd.end(), chain.begin(), chain.end());
        return {scaled(make_word(r, fwd), c), scaled(make_word(r, bwd), -c)};
    }
    OpSum ti = {make_word(vertex, {let_Tinv(i - 1)})};
    return sum_scale(sum_concat(ti, sum_concat(y_word(i - 1, vertex), ti)), QT::t());
}

OpSum z_word(int i, int vertex) {
    static std::map<std::pair<int, int>, OpSum> cache;
    static std::mutex mtx;
    if (i < 1 || i > vertex) throw std::invalid_argument("z_word: index out of range");
    auto key = std::make_pair(i, vertex);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    OpSum w = build_z_word(i, vertex);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(w)).first->second;
}

static OpSum build_z_word(int i, int vertex) {
    if (i == 1) {
        int r = vertex;
        QT c = QT::t(r) * (QT(1) - QT::t()).inv();
        std::vector<OpLetter> chain = t_chain(r - 1, 1, true);
        std::vector<OpLetter> fwd = {let_dplusstar(), let_dminus()};
        std::vector<OpLetter> bwd = {let_dminus(), let_dplusstar()};
        fwd.insert(fwd.end(), chain.begin(), chain.end());
        bwd.insert(bwd.end(), chain.begin(), chain.end());
        return {scaled(make_word(r, fwd), c), scaled(make_word(r, bwd), -c)};
    }
    OpSum ti = {make_word(vertex, {let_T(i - 1)})};
    return sum_scale(sum_concat(ti, sum_concat(z_word(i - 1, vertex), ti)), QT::t().inv());
}

// map each letter of w (applied at its local vertex) to a word sum and
// multiply the fragments back together in order
static OpSum map_letters(const OpWord& w,
                         const std::function<OpSum(const OpLetter&, int)>& frag) {
    size_t n = w.letters.size();
    std::vector<int> in_rank(n);
    int r = w.source;
    for (size_t j = n; j-- > 0;) {
        in_rank[j] = r;
        r = apply_vertex(w.letters[j], r);
    }
    OpSum acc = {make_word(w.source, {})};
    for (size_t j = n; j-- > 0;) acc = sum_concat(frag(w.letters[j], in_rank[j]), acc);
    return acc;
}

static OpSum expand_one(const OpLetter& l, int rank) {
    if (l.kind == OpLetter::MulX) return y_word(l.i, rank);
    if (l.kind == OpLetter::Y) return z_word(l.i, rank);
    return {make_word(rank, {l})};
}

OpSum expand_macros(const OpWord& w) { return map_letters(w, expand_one); }

OpSum expand_macros(const OpSum& s) {
    OpSum out;
    for (const auto& w : s)
        for (auto& v : expand_macros(w)) out.push_back(std::move(v));
    return out;
}

// ---- endomorphisms ----

// letterwise image of l applied at vertex r, or nullopt if the letter must
// first be expanded into generator letters; throws when l lies outside the
// endomorphism's domain alphabet
static std::optional<std::vector<OpLetter>> endo_image(WordEndo e, const OpLetter& l, int r) {
    auto domain_error = [&]() -> std::optional<std::vector<OpLetter>> {
        throw std::invalid_argument("transform_word: letter outside the domain alphabet");
    };
    switch (e) {
        case WordEndo::N:
            switch (l.kind) {
                case OpLetter::Dplus:
                    return std::vector<OpLetter>{let_scalar(-(QT::q() * QT::t()).inv()),
                                                 let_Y(1), let_dplus()};
                case OpLetter::MulX:
                    if (l.i == 1)
                        return std::vector<OpLetter>{let_scalar(-(QT::q() * QT::t()).inv()),
                                                     let_Y(1), let_mulx(1)};
                    return std::nullopt;
                default:
                    return std::vector<OpLetter>{l};
            }
        case WordEndo::S:
            switch (l.kind) {
                case OpLetter::DplusStar:
                    return std::vector<OpLetter>{let_scalar(QT(-1)), let_mulx(1),
                                                 let_dplusstar()};
                case OpLetter::Y:
                    return std::nullopt;
                default:
                    return std::vector<OpLetter>{l};
            }
        case WordEndo::rho:
            switch (l.kind) {
                case OpLetter::DplusStar:
                case OpLetter::Y:
                    return domain_error();
                default:
                    return std::vector<OpLetter>{l};
            }
        case WordEndo::rhostar:
            switch (l.kind) {
                case OpLetter::T: return std::vector<OpLetter>{let_Tinv(l.i)};
                case OpLetter::Tinv: return std::vector<OpLetter>{let_T(l.i)};
                case OpLetter::Dminus: return std::vector<OpLetter>{let_dminus()};
                case OpLetter::Dplus: return std::vector<OpLetter>{let_dplusstar()};
                case OpLetter::MulX: return std::vector<OpLetter>{let_Y(l.i)};
                case OpLetter::Scalar: return std::vector<OpLetter>{let_scalar(l.c.flip())};
                case OpLetter::DplusStar:
                case OpLetter::Y:
                    return domain_error();
            }
            return std::nullopt;
        case WordEndo::wbar:
            switch (l.kind) {
                case OpLetter::T: return std::vector<OpLetter>{let_Tinv(l.i)};
                case OpLetter::Tinv: return std::vector<OpLetter>{let_T(l.i)};
                case OpLetter::Dminus: return std::vector<OpLetter>{let_dminus()};
                case OpLetter::Dplus:
                    return std::vector<OpLetter>{let_scalar(-QT::t(r).inv()), let_dplus()};
                case OpLetter::Scalar: return std::vector<OpLetter>{let_scalar(l.c.flip())};
                case OpLetter::MulX:
                    return std::nullopt;
                case OpLetter::DplusStar:
                case OpLetter::Y:
                    return domain_error();
            }
            return std::nullopt;
    }
    return std::nullopt;
}

OpWord transform_word(WordEndo e, const OpWord& w) {
    size_t n = w.letters.size();
    std::vector<int> in_rank(n);
    int r = w.source;
    for (size_t j = n; j-- > 0;) {
        in_rank[j] = r;
        r = apply_vertex(w.letters[j], r);
    }
    OpWord out;
    out.source = w.source;
    for (size_t j = 0; j < n; ++j) {
        auto img = endo_image(e, w.letters[j], in_rank[j]);
        if (!img)
            throw std::invalid_argument(
                "transform_word: letter requires macro expansion; use apply_endo");
        out.letters.insert(out.letters.end(), img->begin(), img->end());
    }
    word_target(out);
    return out;
}

OpSum apply_endo(WordEndo e, const OpSum& s) {
    OpSum out;
    for (const auto& w : s) {
        OpSum part = map_letters(w, [&](const OpLetter& l, int rank) -> OpSum {
            auto img = endo_image(e, l, rank);
            if (img) return {make_word(rank, *img)};
            return apply_endo(e, expand_one(l, rank));
        });
        for (auto& v : part) out.push_back(std::move(v));
    }
    return out;
}

std::string farey_word(long m, long n) {
    if (m < 1 || n < 0) throw std::invalid_argument("farey_word: need m >= 1, n >= 0");
    if (std::gcd(m, n) != 1) throw std::invalid_argument("farey_word: gcd(m, n) != 1");
    std::string w;
    while (!(m == 1 && n == 0)) {
        if (m > n) {
            w += 'N';
            m -= n;
        } else {
            w += 'S';
            n -= m;
        }
    }
    return w;
}

OpSum rho_star_mn(long m, long n, const OpWord& w) {
    OpSum s = {transform_word(WordEndo::rhostar, w)};
    std::string fw = farey_word(m, n);
    for (auto it = fw.rbegin(); it != fw.rend(); ++it)
        s = apply_endo(*it == 'N' ? WordEndo::N : WordEndo::S, s);
    return s;
}

// ---- relation harness ----

std::vector<AsymFn> pr_graded_basis(int r, int d) {
    std::vector<AsymFn> out;
    for (int h = 0; h <= d; ++h) {
        std::vector<Composition> heads;
        if (r == 0) {
            if (h == 0) heads.push_back({});
        } else {
            heads = compositions_of(h, r);
        }
        for (const auto& eta : heads)
            for (const auto& la : partitions_of(d - h))
                out.push_back(AsymFn::monom(r, eta, sym_m(la)));
    }
    return out;
}

std::vector<std::tuple<std::string, OpSum, OpSum>> relation_words(int r) {
    std::vector<std::tuple<std::string, OpSum, OpSum>> rels;
    auto W = [&](std::vector<OpLetter> ls) { return make_word(r, std::move(ls)); };
    auto name = [](const std::string& base, std::initializer_list<int> idx) {
        std::string s = base;
        for (int k : idx) s += "_" + std::to_string(k);
        return s;
    };
    const QT t = QT::t(), one = QT(1);

    for (int i = 1; i <= r - 1; ++i) {
        // (T_i - 1)(T_i + t) = 0
        rels.emplace_back(name("hecke", {i}),
                          OpSum{W({let_T(i), let_T(i)}), scaled(W({let_T(i)}), t - one),
                                scaled(W({}), -t)},
                          OpSum{});
        rels.emplace_back(name("t_tinv", {i}), OpSum{W({let_T(i), let_Tinv(i)})}, OpSum{W({})});
    }
    for (int i = 1; i <= r - 2; ++i)
        rels.emplace_back(name("braid", {i}),
                          OpSum{W({let_T(i), let_T(i + 1), let_T(i)})},
                          OpSum{W({let_T(i + 1), let_T(i), let_T(i + 1)})});
    for (int i = 1; i <= r - 1; ++i)
        for (int j = i + 2; j <= r - 1; ++j)
            rels.emplace_back(name("t_comm", {i, j}),
                              OpSum{W({let_T(i), let_T(j)})},
                              OpSum{W({let_T(j), let_T(i)})});

    if (r >= 2)
        rels.emplace_back("dminus2_t",
                          OpSum{W({let_dminus(), let_dminus(), let_T(r - 1)})},
                          OpSum{W({let_dminus(), let_dminus()})});
    for (int i = 1; i <= r - 2; ++i)
        rels.emplace_back(name("t_dminus", {i}),
                          OpSum{W({let_T(i), let_dminus()})},
                          OpSum{W({let_dminus(), let_T(i)})});

    rels.emplace_back("dplus2_t1",
                      OpSum{W({let_T(1), let_dplus(), let_dplus()})},
                      OpSum{W({let_dplus(), let_dplus()})});
    for (int i = 1; i <= r - 1; ++i)
        rels.emplace_back(name("dplus_t", {i}),
                          OpSum{W({let_dplus(), let_T(i)})},
                          OpSum{W({let_T(i + 1), let_dplus()})});

    if (r >= 2)
        rels.emplace_back(
            "fwdback_end",
            OpSum{W({let_dminus(), let_dplus(), let_dminus(), let_T(r - 1)}),
                  scaled(W({let_dminus(), let_dminus(), let_dplus(), let_T(r - 1)}), -one)},
            OpSum{scaled(W({let_dplus(), let_dminus(), let_dminus()}), t),
                  scaled(W({let_dminus(), let_dplus(), let_dminus()}), -t)});
    if (r >= 1)
        rels.emplace_back(
            "fwdback_beg",
            OpSum{W({let_T(1), let_dplus(), let_dminus(), let_dplus()}),
                  scaled(W({let_T(1), let_dminus(), let_dplus(), let_dplus()}), -one)},
            OpSum{scaled(W({let_dplus(), let_dplus(), let_dminus()}), t),
                  scaled(W({let_dplus(), let_dminus(), let_dplus()}), -t)});

    rels.emplace_back("star2_t1",
                      OpSum{W({let_T(1), let_dplusstar(), let_dplusstar()})},
                      OpSum{W({let_dplusstar(), let_dplusstar()})});
    for (int i = 1; i <= r - 1; ++i)
        rels.emplace_back(name("star_t", {i}),
                          OpSum{W({let_dplusstar(), let_T(i)})},
                          OpSum{W({let_T(i + 1), let_dplusstar()})});
    if (r >= 2)
        rels.emplace_back(
            "star_end",
            OpSum{scaled(W({let_dminus(), let_dplusstar(), let_dminus()}), t),
                  scaled(W({let_dminus(), let_dminus(), let_dplusstar()}), -t)},
            OpSum{W({let_dplusstar(), let_dminus(), let_dminus(), let_T(r - 1)}),
                  scaled(W({let_dminus(), let_dplusstar(), let_dminus(), let_T(r - 1)}), -one)});
    if (r >= 1)
        rels.emplace_back(
            "star_beg",
            OpSum{scaled(W({let_dplusstar(), let_dminus(), let_dplusstar()}), t),
                  scaled(W({let_dminus(), let_dplusstar(), let_dplusstar()}), -t)},
            OpSum{W({let_T(1), let_dplusstar(), let_dplusstar(), let_dminus()}),
                  scaled(W({let_T(1), let_dplusstar(), let_dminus(), let_dplusstar()}), -one)});

    for (int i = 1; i <= r; ++i) {
        rels.emplace_back(name("dplus_z", {i}),
                          OpSum{W({let_dplus(), let_Y(i)})},
                          OpSum{W({let_Y(i + 1), let_dplus()})});
        rels.emplace_back(name("star_y", {i}),
                          OpSum{W({let_dplusstar(), let_mulx(i)})},
                          OpSum{W({let_mulx(i + 1), let_dplusstar()})});
    }
    rels.emplace_back("star_unstar",
                      OpSum{W({let_Y(1), let_dplus()})},
                      OpSum{scaled(W({let_mulx(1), let_dplusstar()}), -QT::q() * QT::t(r + 1))});
    for (int i = 1; i <= r - 1; ++i)
        rels.emplace_back(name("dminus_z", {i}),
                          OpSum{W({let_dminus(), let_Y(i)})},
                          OpSum{W({let_Y(i), let_dminus()})});

    if (r >= 1) rels.emplace_back("y1_loop", OpSum{W({let_mulx(1)})}, y_word(1, r));
    for (int i = 1; i <= r - 1; ++i) {
        rels.emplace_back(name("x_rec", {i}),
                          sum_scale({W({let_Tinv(i), let_mulx(i), let_Tinv(i)})}, t),
                          OpSum{W({let_mulx(i + 1)})});
        rels.emplace_back(name("y_rec", {i}),
                          sum_scale({W({let_T(i), let_Y(i), let_T(i)})}, t.inv()),
                          OpSum{W({let_Y(i + 1)})});
    }
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            rels.emplace_back(name("x_comm", {i, j}),
                              OpSum{W({let_mulx(i), let_mulx(j)})},
                              OpSum{W({let_mulx(j), let_mulx(i)})});
            rels.emplace_back(name("y_comm", {i, j}),
                              OpSum{W({let_Y(i), let_Y(j)})},
                              OpSum{W({let_Y(j), let_Y(i)})});
        }
    for (int i = 1; i <= r - 1; ++i)
        for (int j = 1; j <= r; ++j) {
            if (j == i || j == i + 1) continue;
            rels.emplace_back(name("tx_comm", {i, j}),
                              OpSum{W({let_T(i), let_mulx(j)})},
                              OpSum{W({let_mulx(j), let_T(i)})});
            rels.emplace_back(name("ty_comm", {i, j}),
                              OpSum{W({let_T(i), let_Y(j)})},
                              OpSum{W({let_Y(j), let_T(i)})});
        }
    if (r >= 2)
        rels.emplace_back("yx_cross",
                          OpSum{W({let_Y(1), let_T(1), let_mulx(1)})},
                          OpSum{W({let_mulx(2), let_Y(1), let_T(1)})});
    return rels;
}

std::vector<std::string> verify_relations(int r_max, int d_max) {
    std::vector<std::string> violations;
    for (int r = 0; r <= r_max; ++r) {
        auto rels = relation_words(r);
        for (int d = 0; d <= d_max; ++d) {
            auto basis = pr_graded_basis(r, d);
            for (const auto& [nm, lhs, rhs] : rels) {
                for (size_t k = 0; k < basis.size(); ++k) {
                    AsymFn a = eval_sum(lhs, basis[k]);
                    AsymFn b = eval_sum(rhs, basis[k]);
                    bool ok = rhs.empty() ? a.is_zero() : (lhs.empty() ? b.is_zero() : a == b);
                    if (!ok)
                        violations.push_back(nm + " fails at r=" + std::to_string(r) +
                                             " d=" + std::to_string(d) +
                                             " basis#" + std::to_string(k));
                }
            }
        }
    }
    return violations;
}

// ---- text syntax ----

namespace {

struct QtParser {
    const std::string& s;
    size_t pos = 0;

    explicit QtParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek_factor_start() {
        skip_ws();
        if (pos >= s.size()) return false;
        char c = s[pos];
        return c == 'q' || c == 't' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }
    long parse_int() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw std::invalid_argument("parse_qt: expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }
    QT parse_factor() {
        skip_ws();
        if (pos >= s.size()) throw std::invalid_argument("parse_qt: unexpected end");
        QT base;
        char c = s[pos];
        if (c == 'q') {
            ++pos;
            base = QT::q();
        } else if (c == 't') {
            ++pos;
            base = QT::t();
        } else if (c == '(') {
            ++pos;
            base = parse_expr();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')')
                throw std::invalid_argument("parse_qt: missing ')'");
            ++pos;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = QT(parse_int());
        } else {
            throw std::invalid_argument("parse_qt: unexpected character");
        }
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            base = base.pow(parse_int());
        }
        return base;
    }
    QT parse_term() {
        QT v = parse_factor();
        for (;;) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                v *= parse_factor();
            } else if (pos < s.size() && s[pos] == '/') {
                ++pos;
                v /= parse_factor();
            } else if (peek_factor_start()) {
                v *= parse_factor();
            } else {
                break;
            }
        }
        return v;
    }
    QT parse_expr() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
        QT v = parse_term();
        if (neg) v = -v;
        for (;;) {
            skip_ws();
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                bool minus = s[pos++] == '-';
                QT u = parse_term();
                v = minus ? v - u : v + u;
            } else {
                break;
            }
        }
        return v;
    }
};

// fragments with no vertex validation; sources are patched in at the end
struct RawWord {
    QT coeff = QT(1);
    std::vector<OpLetter> letters;
};
using RawSum = std::vector<RawWord>;

RawSum raw_concat(const RawSum& a, const RawSum& b) {
    RawSum out;
    for (const auto& wa : a)
        for (const auto& wb : b) {
            RawWord w;
            w.coeff = wa.coeff * wb.coeff;
            w.letters = wa.letters;
            w.letters.insert(w.letters.end(), wb.letters.begin(), wb.letters.end());
            out.push_back(std::move(w));
        }
    return out;
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> toks;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) toks.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw std::invalid_argument("parse_opword: unbalanced brackets");
    if (!cur.empty()) toks.push_back(cur);
    return toks;
}

RawSum parse_fragment(const std::string& text);

RawSum parse_token(const std::string& tok) {
    // optional /(...) divisor suffix at depth 0
    size_t depth = 0;
    for (size_t k = 0; k < tok.size(); ++k) {
        char c = tok[k];
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (depth == 0 && c == '/' && k + 1 < tok.size() && tok[k + 1] == '(') {
            RawSum base = parse_token(tok.substr(0, k));
            QT div = QtParser(tok.substr(k + 1)).parse_expr();
            for (auto& w : base) w.coeff /= div;
            return base;
        }
    }
    if (tok.empty()) throw std::invalid_argument("parse_opword: empty token");
    if (tok[0] == '[') {
        if (tok.back() != ']') throw std::invalid_argument("parse_opword: bad commutator");
        std::string inner = tok.substr(1, tok.size() - 2);
        int d = 0;
        size_t comma = std::string::npos;
        for (size_t k = 0; k < inner.size(); ++k) {
            char c = inner[k];
            if (c == '[' || c == '(') ++d;
            if (c == ']' || c == ')') --d;
            if (d == 0 && c == ',') {
                comma = k;
                break;
            }
        }
        if (comma == std::string::npos)
            throw std::invalid_argument("parse_opword: commutator needs a comma");
        RawSum a = parse_fragment(inner.substr(0, comma));
        RawSum b = parse_fragment(inner.substr(comma + 1));
        RawSum ab = raw_concat(a, b), ba = raw_concat(b, a);
        for (auto& w : ba) {
            w.coeff = -w.coeff;
            ab.push_back(std::move(w));
        }
        return ab;
    }
    if (tok[0] == '(') {
        QT c = QtParser(tok).parse_factor();
        RawWord w;
        w.coeff = c;
        return {w};
    }
    RawWord w;
    if (tok == "d-") {
        w.letters = {let_dminus()};
    } else if (tok == "d+") {
        w.letters = {let_dplus()};
    } else if (tok == "d+*") {
        w.letters = {let_dplusstar()};
    } else {
        auto num_at = [&](size_t off) {
            if (off >= tok.size()) throw std::invalid_argument("parse_opword: missing index");
            return std::stoi(tok.substr(off));
        };
        if (tok.rfind("Tinv", 0) == 0) {
            w.letters = {let_Tinv(num_at(4))};
        } else if (tok[0] == 'T') {
            w.letters = {let_T(num_at(1))};
        } else if (tok[0] == 'x' || tok[0] == 'X') {
            w.letters = {let_mulx(num_at(1))};
        } else if (tok[0] == 'Y') {
            w.letters = {let_Y(num_at(1))};
        } else {
            throw std::invalid_argument("parse_opword: unknown token '" + tok + "'");
        }
    }
    return {w};
}

RawSum parse_fragment(const std::string& text) {
    RawSum acc = {RawWord{}};
    for (const auto& tok : split_tokens(text)) acc = raw_concat(acc, parse_token(tok));
    return acc;
}

}  // namespace

QT parse_qt(const std::string& text) {
    QtParser p(text);
    QT v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw std::invalid_argument("parse_qt: trailing input");
    return v;
}

OpSum parse_opword(const std::string& text, int source) {
    OpSum out;
    for (const auto& rw : parse_fragment(text)) {
        std::vector<OpLetter> ls = rw.letters;
        if (!rw.coeff.is_one()) ls.insert(ls.begin(), let_scalar(rw.coeff));
        out.push_back(make_word(source, std::move(ls)));
    }
    return out;
}

}  // namespace shuffle
