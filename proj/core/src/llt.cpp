#include "shuffle/llt.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "shuffle/xpoly.hpp"

namespace shuffle {

namespace {

// Letters of the super alphabet 1 < 1bar < 2 < 2bar < ... encoded so the
// total order is integer order: positive v is 2v, barred v is 2v + 1.
bool is_barred(int code) { return code & 1; }
int magnitude(int code) { return code / 2; }

// "ab" with a < b, or equal positive letters
bool row_increasing(int a, int b) { return a < b || (a == b && !is_barred(a)); }

// "ab" with a > b, or equal negative letters
bool col_decreasing(int a, int b) { return a > b || (a == b && is_barred(a)); }

void check_marking(const PartialDyckPath& p, const Marking& sigma,
                   const char* who) {
    if (!is_partial_path(p))
        throw std::invalid_argument(std::string(who) + ": invalid partial path");
    auto crn = corners(p);
    for (const Box& b : sigma)
        if (std::find(crn.begin(), crn.end(), b) == crn.end())
            throw std::invalid_argument(std::string(who) +
                                        ": marked box is not a corner");
}

struct TupleBox {
    int k = 0;  // 1-based shape index
    int i = 0;  // column
    int j = 0;  // row
};

// Boxes of the tuple in reading order: by (content, shape), then southwest
// to northeast.  Validates the shape bounds.
std::vector<TupleBox> reading_boxes(const SkewTuple& nu) {
    std::vector<TupleBox> out;
    for (int k = 1; k <= static_cast<int>(nu.size()); ++k) {
        const SkewShape& s = nu[k - 1];
        if (s.beta.size() != s.alpha.size())
            throw std::invalid_argument("skew shape: row bound lengths differ");
        for (size_t j = 0; j + 1 < s.beta.size(); ++j)
            if (s.beta[j] < s.beta[j + 1] || s.alpha[j] < s.alpha[j + 1])
                throw std::invalid_argument(
                    "skew shape: row bounds must weakly decrease");
        for (size_t j = 0; j < s.beta.size(); ++j) {
            if (s.alpha[j] > s.beta[j])
                throw std::invalid_argument("skew shape: alpha exceeds beta");
            for (int i = s.alpha[j] + 1; i <= s.beta[j]; ++i)
                out.push_back({k, i, static_cast<int>(j) + 1});
        }
    }
    std::sort(out.begin(), out.end(), [](const TupleBox& a, const TupleBox& b) {
        return std::tuple(a.i - a.j, a.k, a.i) < std::tuple(b.i - b.j, b.k, b.i);
    });
    return out;
}

// Attacking pairs as 1-based reading positions (a, b), a < b: adjusted
// contents differ by strictly between 0 and 1.
std::vector<std::pair<int, int>> tuple_attacks(const std::vector<TupleBox>& bx) {
    std::vector<std::pair<int, int>> out;
    for (size_t a = 0; a < bx.size(); ++a)
        for (size_t b = a + 1; b < bx.size(); ++b) {
            int dc = (bx[b].i - bx[b].j) - (bx[a].i - bx[a].j);
            int dk = bx[b].k - bx[a].k;
            if ((dc == 0 && dk > 0) || (dc == 1 && dk < 0))
                out.push_back({static_cast<int>(a) + 1, static_cast<int>(b) + 1});
        }
    return out;
}

// All (d,d) lattice words staying weakly above the diagonal.
void all_square_paths(int d, int x, int y, std::string& cur,
                      std::vector<std::string>& out) {
    if (static_cast<int>(cur.size()) == 2 * d) {
        out.push_back(cur);
        return;
    }
    if (y < d) {
        cur.push_back('N');
        all_square_paths(d, x, y + 1, cur, out);
        cur.pop_back();
    }
    if (x < y) {
        cur.push_back('E');
        all_square_paths(d, x + 1, y, cur, out);
        cur.pop_back();
    }
}

}  // namespace

AsymFn llt_flagged(LLTMode mode, bool sgn, const PartialDyckPath& p,
                   const Marking& sigma, int nvars, bool nonattacking) {
    check_marking(p, sigma, "llt_flagged");
    const int r = p.r, d = p.d;
    if (nvars < r + d)
        throw std::invalid_argument("llt_flagged: nvars must be at least r + d");

    // pair constraints keyed by the later row
    std::vector<std::vector<int>> area_at(d + 1), mark_at(d + 1);
    for (const Box& b : area_boxes(p)) area_at[b.second].push_back(b.first);
    for (const Box& b : sigma) mark_at[b.second].push_back(b.first);

    auto holds = [mode](int a, int b) {
        return mode == LLTMode::row ? row_increasing(a, b) : col_decreasing(a, b);
    };

    XPoly xp(nvars);
    Expo expo(nvars, 0);
    std::vector<int> code(d + 1, 0);
    long inv = 0;
    int bars = 0;
    std::function<void(int)> rec = [&](int j) {
        if (j > d) {
            QT c = QT::t(static_cast<int>(inv));
            if (sgn && bars)
                c = c * QT::monom(bars % 2 ? -1 : 1, 0,
                                  mode == LLTMode::row ? bars : -bars);
            xp.add_term(expo, c);
            return;
        }
        const int hi = 2 * nvars + (sgn ? 1 : 0);
        for (int cd = 2; cd <= hi; ++cd) {
            if (!sgn && is_barred(cd)) continue;
            if (j <= r && cd > 2 * j) break;
            bool ok = true;
            for (int i : mark_at[j])
                if (!holds(cd, code[i])) { ok = false; break; }
            if (ok && nonattacking)
                for (int i : area_at[j])
                    if (magnitude(code[i]) == magnitude(cd)) { ok = false; break; }
            if (!ok) continue;
            long dinv = 0;
            for (int i : area_at[j])
                if (holds(cd, code[i])) ++dinv;
            code[j] = cd;
            inv += dinv;
            if (is_barred(cd)) ++bars;
            expo[magnitude(cd) - 1] += 1;
            rec(j + 1);
            expo[magnitude(cd) - 1] -= 1;
            if (is_barred(cd)) --bars;
            inv -= dinv;
        }
    };
    rec(1);
    return lift_asym(xp, r);
}

OpSum chi_word(LLTMode mode, const PartialDyckPath& p, const Marking& sigma) {
    check_marking(p, sigma, "chi_word");
    const std::string& w = p.steps;

    // norths completing a marked corner with the east step just before them
    std::vector<bool> marked(w.size(), false);
    {
        int row = p.r, col = 0;
        for (size_t q = 0; q < w.size(); ++q) {
            if (w[q] == 'N') {
                ++row;
                if (sigma.count({col, row})) {
                    if (q == 0 || w[q - 1] != 'E')
                        throw std::logic_error(
                            "chi_word: marked box lacks its east step");
                    marked[q] = true;
                }
            } else {
                ++col;
            }
        }
    }

    // read the scalar exponent h - v off the walk from the northeast end;
    // for a marked corner both of its steps share the exponent seen on
    // arrival at the corner
    std::vector<int> rexp(w.size(), 0);
    {
        int h = 0, v = 0;
        int q = static_cast<int>(w.size()) - 1;
        while (q >= 0) {
            if (w[q] == 'N' && marked[q]) {
                rexp[q] = h - v;
                ++h;
                ++v;
                q -= 2;
            } else if (w[q] == 'N') {
                ++v;
                --q;
            } else {
                rexp[q] = h - v;
                ++h;
                --q;
            }
        }
    }

    const bool row_mode = mode == LLTMode::row;
    const QT slot = row_mode ? (QT::t() - QT(1)).inv()
                             : (QT::t(-1) - QT(1)).inv();
    struct Branch {
        QT coeff{1};
        std::vector<OpLetter> letters;
    };
    std::vector<Branch> br{Branch{}};
    for (size_t q = 0; q < w.size(); ++q) {
        if (w[q] == 'E' && q + 1 < w.size() && marked[q + 1]) {
            const int r0 = rexp[q + 1];
            const QT cnat = row_mode ? slot : QT::monom(1, 0, -r0 + 1) * slot;
            const QT cflip = row_mode ? -slot : -(QT::monom(1, 0, -r0) * slot);
            std::vector<Branch> nxt;
            nxt.reserve(2 * br.size());
            for (const Branch& b : br) {
                Branch nat = b;
                nat.coeff = nat.coeff * cnat;
                nat.letters.push_back(let_dplus());
                nat.letters.push_back(let_dminus());
                nxt.push_back(std::move(nat));
                Branch flip = b;
                flip.coeff = flip.coeff * cflip;
                flip.letters.push_back(let_dminus());
                flip.letters.push_back(let_dplus());
                nxt.push_back(std::move(flip));
            }
            br = std::move(nxt);
            ++q;
        } else if (w[q] == 'N') {
            for (Branch& b : br) b.letters.push_back(let_dminus());
        } else {
            const QT c = row_mode ? QT(-1) : -QT::monom(1, 0, -rexp[q]);
            for (Branch& b : br) {
                b.coeff = b.coeff * c;
                b.letters.push_back(let_dplus());
            }
        }
    }
    OpSum out;
    out.reserve(br.size());
    for (Branch& b : br)
        out.push_back(scaled(make_word(0, std::move(b.letters)), b.coeff));
    return out;
}

AsymFn llt_tuple(int r, const SkewTuple& nu, bool sgn) {
    auto bx = reading_boxes(nu);
    const int d = static_cast<int>(bx.size());
    if (r < 0) throw std::invalid_argument("llt_tuple: negative rank");

    // eastern ends of rows, largest reading position first
    std::vector<int> east;
    for (int s = d - 1; s >= 0; --s)
        if (bx[s].i == nu[bx[s].k - 1].beta[bx[s].j - 1]) east.push_back(s);
    if (static_cast<int>(east.size()) < r)
        throw std::invalid_argument("llt_tuple: rank exceeds the number of rows");
    std::vector<int> cap(d, 0);
    for (int s = 0; s < r; ++s) cap[east[s]] = 2 * (s + 1);

    std::map<std::tuple<int, int, int>, int> pos;
    for (int s = 0; s < d; ++s) pos[{bx[s].k, bx[s].i, bx[s].j}] = s;
    enum { kRow, kCol, kAtt };
    struct Chk {
        int a;
        int kind;
    };
    std::vector<std::vector<Chk>> chk(d);
    for (int s = 0; s < d; ++s) {
        auto west = pos.find({bx[s].k, bx[s].i - 1, bx[s].j});
        if (west != pos.end()) chk[s].push_back({west->second, kRow});
        auto upper = pos.find({bx[s].k, bx[s].i, bx[s].j + 1});
        if (upper != pos.end()) chk[s].push_back({upper->second, kCol});
    }
    for (auto& [a, b] : tuple_attacks(bx)) chk[b - 1].push_back({a - 1, kAtt});

    const int nvars = r + d;
    XPoly xp(nvars);
    Expo expo(nvars, 0);
    std::vector<int> code(d, 0);
    long inv = 0;
    int bars = 0;
    std::function<void(int)> rec = [&](int s) {
        if (s == d) {
            QT c = QT::t(static_cast<int>(inv));
            if (sgn && bars) c = c * QT::monom(bars % 2 ? -1 : 1, 0, -bars);
            xp.add_term(expo, c);
            return;
        }
        const int hi = 2 * nvars + (sgn ? 1 : 0);
        for (int cd = 2; cd <= hi; ++cd) {
            if (!sgn && is_barred(cd)) continue;
            if (cap[s] && cd > cap[s]) break;
            bool ok = true;
            long dinv = 0;
            for (const Chk& c : chk[s]) {
                if (c.kind == kRow) {
                    if (!row_increasing(code[c.a], cd)) { ok = false; break; }
                } else if (c.kind == kCol) {
                    if (!col_decreasing(code[c.a], cd)) { ok = false; break; }
                } else if (col_decreasing(code[c.a], cd)) {
                    ++dinv;
                }
            }
            if (!ok) continue;
            code[s] = cd;
            inv += dinv;
            if (is_barred(cd)) ++bars;
            expo[magnitude(cd) - 1] += 1;
            rec(s + 1);
            expo[magnitude(cd) - 1] -= 1;
            if (is_barred(cd)) --bars;
            inv -= dinv;
        }
    };
    rec(0);
    return lift_asym(xp, r);
}

std::pair<SkewTuple, SkewTuple> path_to_tuples(const PartialDyckPath& p,
                                               const Marking& sigma) {
    check_marking(p, sigma, "path_to_tuples");
    const int d = p.d;
    const std::string full = std::string(p.r, 'N') + p.steps;

    // the (d,d)-path whose attack structure is the completion of p
    DyckPath pre;
    {
        std::vector<std::string> cands;
        std::string cur;
        all_square_paths(d, 0, 0, cur, cands);
        bool found = false;
        for (const std::string& s : cands) {
            DyckPath q{d, d, s};
            AttackingData ad = attacking_data(q, 1, 1);
            if (std::string(ad.r, 'N') + ad.pihat.steps == full) {
                pre = q;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error(
                "path_to_tuples: no path has this attack structure");
    }

    // one single-row shape per north-step run, south to north
    SkewTuple runs;
    {
        int x = 0, y = 0;
        size_t q = 0;
        while (q < pre.steps.size()) {
            if (pre.steps[q] == 'N') {
                const int base = y - x;
                int l = 0;
                while (q < pre.steps.size() && pre.steps[q] == 'N') {
                    ++l;
                    ++y;
                    ++q;
                }
                runs.push_back({{base + l}, {base}});
            } else {
                ++x;
                ++q;
            }
        }
    }

    // break a run between the two domino boxes of every unmarked corner
    auto rbx = reading_boxes(runs);
    if (static_cast<int>(rbx.size()) != d)
        throw std::logic_error("path_to_tuples: box count mismatch");
    std::vector<std::set<int>> splits(runs.size());
    for (const Box& c : corners(p)) {
        if (sigma.count(c)) continue;
        const TupleBox& a = rbx[c.first - 1];
        const TupleBox& b = rbx[c.second - 1];
        if (a.k != b.k || b.i != a.i + 1)
            throw std::logic_error("path_to_tuples: corner does not name a domino");
        splits[a.k - 1].insert(a.i);
    }
    SkewTuple fine;
    for (size_t k = 0; k < runs.size(); ++k) {
        int start = runs[k].alpha[0];
        for (int c : splits[k]) {
            fine.push_back({{c}, {start}});
            start = c;
        }
        fine.push_back({{runs[k].beta[0]}, {start}});
    }

    // the two dictionary statements, on the broken tuple
    std::set<std::pair<int, int>> area;
    for (const Box& b : area_boxes(p)) area.insert(b);
    auto fbx = reading_boxes(fine);
    auto att = tuple_attacks(fbx);
    if (std::set<std::pair<int, int>>(att.begin(), att.end()) != area)
        throw std::logic_error("path_to_tuples: attacking dictionary failed");
    std::set<std::pair<int, int>> dominoes;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            if (fbx[a].k == fbx[b].k && fbx[b].i == fbx[a].i + 1)
                dominoes.insert({a + 1, b + 1});
    if (dominoes != std::set<std::pair<int, int>>(sigma.begin(), sigma.end()))
        throw std::logic_error("path_to_tuples: domino dictionary failed");

    // reverse the tuple and negate each shape; this reverses reading order
    SkewTuple nu;
    for (auto it = fine.rbegin(); it != fine.rend(); ++it)
        nu.push_back({{-it->alpha[0]}, {-it->beta[0]}});
    auto nbx = reading_boxes(nu);
    {
        auto natt = tuple_attacks(nbx);
        std::set<std::pair<int, int>> expect;
        for (const auto& [i, j] : area) expect.insert({d + 1 - j, d + 1 - i});
        if (std::set<std::pair<int, int>>(natt.begin(), natt.end()) != expect)
            throw std::logic_error(
                "path_to_tuples: reversed attacking dictionary failed");
        // the flag boxes 1..p.r must be the last boxes in reading order
        for (int s = 1; s <= p.r; ++s) {
            const TupleBox& b = nbx[d - s];
            if (b.i != nu[b.k - 1].beta[b.j - 1])
                throw std::logic_error("path_to_tuples: flag boxes misaligned");
        }
    }

    // single columns on the same contents, shape by shape
    SkewTuple eta;
    for (const SkewShape& s : nu) {
        const int len = s.beta[0] - s.alpha[0];
        eta.push_back({std::vector<int>(len, s.beta[0]),
                       std::vector<int>(len, s.beta[0] - 1)});
    }
    return {nu, eta};
}

PartialDyckPath flip_corner(const PartialDyckPath& p, const Box& corner) {
    auto crn = corners(p);
    if (std::find(crn.begin(), crn.end(), corner) == crn.end())
        throw std::invalid_argument("flip_corner: not a corner of the path");
    const int need = corner.second - p.r;
    int seen = 0;
    for (size_t q = 0; q < p.steps.size(); ++q) {
        if (p.steps[q] != 'N' || ++seen != need) continue;
        if (q == 0 || p.steps[q - 1] != 'E')
            throw std::logic_error("flip_corner: corner lacks its east step");
        std::string s = p.steps;
        s[q - 1] = 'N';
        s[q] = 'E';
        return {p.r, p.d, s};
    }
    throw std::logic_error("flip_corner: corner row not found");
}

}  // namespace shuffle
