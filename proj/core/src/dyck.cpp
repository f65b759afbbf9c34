#include "shuffle/dyck.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace shuffle {

namespace {

// A line of slope n/m - epsilon through the point (x, y) has intercept
// proportional to (m*y - n*x) + epsilon * m * x; intercepts compare
// lexicographically by the key (m*y - n*x, x).
using Key = std::pair<long, long>;

Key point_key(int m, int n, int x, int y) {
    return {static_cast<long>(m) * y - static_cast<long>(n) * x, x};
}

void check_slope(const DyckPath& p, int m, int n) {
    if (m < 1 || n < 1 || std::gcd(m, n) != 1)
        throw std::invalid_argument("dyck: slope (m,n) must be coprime positives");
    if (!is_dyck_path(p)) throw std::invalid_argument("dyck: invalid path word");
    if (static_cast<long>(p.a) * n != static_cast<long>(p.b) * m)
        throw std::invalid_argument("dyck: endpoint not a multiple of (m,n)");
}

// Column of the north step in row j (1-based) of a path word: the number of
// east steps preceding the j-th north step.
std::vector<int> north_columns(const std::string& steps) {
    std::vector<int> cols;
    int x = 0;
    for (char s : steps) {
        if (s == 'E') ++x;
        else cols.push_back(x);
    }
    return cols;
}

long area_from_columns(const std::vector<int>& cols, long a, long b) {
    long total = 0;
    for (std::size_t j = 1; j <= cols.size(); ++j) {
        long hi = a * static_cast<long>(j - 1) / b;  // rightmost column above the diagonal
        if (hi > cols[j - 1]) total += hi - cols[j - 1];
    }
    return total;
}

struct SweepInfo {
    std::vector<std::pair<int, int>> ends;  // southern endpoints, path order
    std::vector<int> sweep;                 // sweep s+1 -> path-order index
    std::vector<int> number;                // path-order index -> sweep number (1-based)
    std::vector<std::pair<int, int>> attacks;  // 1-based sweep numbers, i < j
};

SweepInfo sweep_info(const DyckPath& p, int m, int n) {
    SweepInfo info;
    info.ends = north_ends(p);
    const int b = static_cast<int>(info.ends.size());
    info.sweep.resize(b);
    std::iota(info.sweep.begin(), info.sweep.end(), 0);
    std::sort(info.sweep.begin(), info.sweep.end(), [&](int i, int j) {
        auto [xi, yi] = info.ends[i];
        auto [xj, yj] = info.ends[j];
        return point_key(m, n, xi, yi) < point_key(m, n, xj, yj);
    });
    info.number.resize(b);
    for (int s = 0; s < b; ++s) info.number[info.sweep[s]] = s + 1;
    // z attacks w when key(z) < key(w) < key of the virtual north step
    // directly above z, both strictly.
    for (int s = 0; s < b; ++s) {
        auto [xz, yz] = info.ends[info.sweep[s]];
        Key window = point_key(m, n, xz, yz + 1);
        for (int t = s + 1; t < b; ++t) {
            auto [xw, yw] = info.ends[info.sweep[t]];
            if (point_key(m, n, xw, yw) < window) info.attacks.push_back({s + 1, t + 1});
        }
    }
    return info;
}

// Diagonal touchpoints of the path below the endpoint, as path-order north
// step indices of the steps leaving them (every touchpoint is left by a
// north step).
std::vector<int> touch_steps(const DyckPath& p, int m, int n) {
    std::vector<int> touched;
    auto ends = north_ends(p);
    for (std::size_t i = 0; i < ends.size(); ++i) {
        auto [x, y] = ends[i];
        if (static_cast<long>(m) * y == static_cast<long>(n) * x)
            touched.push_back(static_cast<int>(i));
    }
    return touched;
}

void check_alpha(const std::vector<int>& alpha) {
    for (int part : alpha)
        if (part < 1) throw std::invalid_argument("dyck: composition parts must be positive");
}

// Verify p touches the diagonal exactly at the partial sums of alpha and
// return the path-order north indices of the touch steps.
std::vector<int> touch_steps_checked(const DyckPath& p, int m, int n,
                                     const std::vector<int>& alpha) {
    auto touches = touch_steps(p, m, n);
    std::vector<long> sums = {0};
    for (int part : alpha) sums.push_back(sums.back() + part);
    if (static_cast<int>(touches.size()) != static_cast<int>(alpha.size()))
        throw std::invalid_argument("dyck: touchpoints do not match the composition");
    auto ends = north_ends(p);
    for (std::size_t j = 0; j < touches.size(); ++j) {
        auto [x, y] = ends[touches[j]];
        if (x != sums[j] * m || y != sums[j] * n)
            throw std::invalid_argument("dyck: touchpoints do not match the composition");
    }
    return touches;
}

}  // namespace

bool is_dyck_path(const DyckPath& p) {
    if (static_cast<int>(p.steps.size()) != p.a + p.b) return false;
    int x = 0, y = 0;
    for (char s : p.steps) {
        if (s == 'N') ++y;
        else if (s == 'E') ++x;
        else return false;
        if (static_cast<long>(p.b) * x > static_cast<long>(p.a) * y) return false;
    }
    return x == p.a && y == p.b;
}

bool is_partial_path(const PartialDyckPath& p) {
    if (p.r < 0 || p.r > p.d) return false;
    if (static_cast<int>(p.steps.size()) != 2 * p.d - p.r) return false;
    int x = 0, y = p.r;
    for (char s : p.steps) {
        if (s == 'N') ++y;
        else if (s == 'E') ++x;
        else return false;
        if (x > y) return false;
    }
    return x == p.d && y == p.d;
}

std::vector<std::pair<int, int>> north_ends(const DyckPath& p) {
    std::vector<std::pair<int, int>> ends;
    int x = 0, y = 0;
    for (char s : p.steps) {
        if (s == 'N') ends.push_back({x, y}), ++y;
        else ++x;
    }
    return ends;
}

std::vector<DyckPath> enum_paths(int m, int n, const std::vector<int>& alpha) {
    if (m < 1 || n < 1 || std::gcd(m, n) != 1)
        throw std::invalid_argument("dyck: slope (m,n) must be coprime positives");
    check_alpha(alpha);
    long k = 0;
    for (int part : alpha) k += part;
    const long a = k * m, b = k * n;
    std::vector<long> sums = {0};
    for (int part : alpha) sums.push_back(sums.back() + part);

    std::vector<DyckPath> out;
    std::string word;
    word.reserve(a + b);
    // Walk northeast, keeping m*y >= n*x; a vertex on the diagonal must be
    // one of the prescribed touchpoints, all of which must be visited.
    std::function<void(long, long, std::size_t)> walk = [&](long x, long y, std::size_t next) {
        if (m * y == n * x) {
            if (next >= sums.size() || x != sums[next] * m) return;
            ++next;
        } else if (next < sums.size() && y > sums[next] * n) {
            return;  // the next required touchpoint is already unreachable
        }
        if (x == a && y == b) {
            if (next == sums.size()) out.push_back({static_cast<int>(a), static_cast<int>(b), word});
            return;
        }
        if (y < b) {
            word.push_back('N');
            walk(x, y + 1, next);
            word.pop_back();
        }
        if (x < a && m * y >= n * (x + 1)) {
            word.push_back('E');
            walk(x + 1, y, next);
            word.pop_back();
        }
    };
    walk(0, 0, 0);
    return out;
}

PathStats path_stats(const DyckPath& p, int m, int n) {
    check_slope(p, m, n);
    PathStats st;
    st.area = area_from_columns(north_columns(p.steps), p.a, p.b);
    if (p.b == 0) return st;
    auto info = sweep_info(p, m, n);
    st.maxtdinv = static_cast<long>(info.attacks.size());
    // east steps against north steps: e from (x,y) counts with f when e
    // starts strictly left of f and their intercept intervals meet.
    int x = 0, y = 0;
    for (char s : p.steps) {
        if (s == 'N') { ++y; continue; }
        Key lo_e = point_key(m, n, x + 1, y), hi_e = point_key(m, n, x, y);
        for (auto [xf, yf] : info.ends) {
            if (x >= xf) continue;
            Key lo_f = point_key(m, n, xf, yf), hi_f = point_key(m, n, xf, yf + 1);
            if (std::max(lo_e, lo_f) <= std::min(hi_e, hi_f)) ++st.dinv;
        }
        ++x;
    }
    return st;
}

AttackingData attacking_data(const DyckPath& p, int m, int n) {
    check_slope(p, m, n);
    AttackingData data;
    auto info = sweep_info(p, m, n);
    data.sweep = info.sweep;
    data.attacks = info.attacks;
    data.r = static_cast<int>(touch_steps(p, m, n).size());
    const int b = static_cast<int>(info.ends.size());

    // Attackers of each sweep number must form the interval (c_j, j-1];
    // the c_j are then the north-step columns of the attacking path.
    std::vector<std::set<int>> attackers(b + 1);
    for (auto [i, j] : info.attacks) attackers[j].insert(i);
    std::vector<int> cols(b);
    for (int j = 1; j <= b; ++j) {
        int cj = j - 1 - static_cast<int>(attackers[j].size());
        for (int i = cj + 1; i <= j - 1; ++i)
            if (!attackers[j].count(i))
                throw std::logic_error("dyck: attacking pairs do not assemble into a path");
        if (j > 1 && cj < cols[j - 2])
            throw std::logic_error("dyck: attacking pairs do not assemble into a path");
        cols[j - 1] = cj;
    }
    std::string prime;
    int at = 0;
    for (int j = 1; j <= b; ++j) {
        prime.append(cols[j - 1] - at, 'E');
        prime.push_back('N');
        at = cols[j - 1];
    }
    prime.append(b - at, 'E');
    for (int j = 0; j < data.r; ++j)
        if (prime[j] != 'N')
            throw std::logic_error("dyck: attacking path does not begin with the touch steps");
    data.pihat = {data.r, b, prime.substr(data.r)};

    // Consecutive north steps of p along a vertical run, as sweep numbers.
    std::vector<int> run_pos;  // position of each north step within the word
    {
        int pos = 0;
        for (char s : p.steps) {
            if (s == 'N') run_pos.push_back(pos);
            ++pos;
        }
    }
    auto corner_list = corners(data.pihat);
    std::set<Box> corner_set(corner_list.begin(), corner_list.end());
    for (int i = 0; i + 1 < b; ++i) {
        if (run_pos[i + 1] != run_pos[i] + 1) continue;
        Box box{info.number[i], info.number[i + 1]};
        if (!corner_set.count(box))
            throw std::logic_error("dyck: marked pair is not a corner of the attacking path");
        data.sigma.insert(box);
    }
    return data;
}

long partial_area(const PartialDyckPath& p) {
    if (!is_partial_path(p)) throw std::invalid_argument("dyck: invalid partial path");
    std::string full(p.r, 'N');
    full += p.steps;
    return area_from_columns(north_columns(full), p.d, p.d);
}

std::vector<Box> corners(const PartialDyckPath& p) {
    if (!is_partial_path(p)) throw std::invalid_argument("dyck: invalid partial path");
    std::string full(p.r, 'N');
    full += p.steps;
    auto cols = north_columns(full);
    std::vector<Box> out;
    int prev = 0;
    for (int j = 1; j <= p.d; ++j) {
        if (cols[j - 1] > prev) out.push_back({cols[j - 1], j});
        prev = cols[j - 1];
    }
    return out;
}

std::vector<Box> area_boxes(const PartialDyckPath& p) {
    if (!is_partial_path(p)) throw std::invalid_argument("dyck: invalid partial path");
    std::string full(p.r, 'N');
    full += p.steps;
    auto cols = north_columns(full);
    std::vector<Box> out;
    for (int j = 1; j <= p.d; ++j)
        for (int c = cols[j - 1] + 1; c <= j - 1; ++c) out.push_back({c, j});
    return out;
}

std::vector<ParkingWord> enum_parking(const DyckPath& p, const std::vector<int>& alpha,
                                      ParkKind kind, int value_bound) {
    check_alpha(alpha);
    long k = 0;
    for (int part : alpha) k += part;
    if (k == 0) {
        if (p.a == 0 && p.b == 0) return {ParkingWord{{}, kind}};
        throw std::invalid_argument("dyck: path size does not match the composition");
    }
    if (p.a % k != 0 || p.b % k != 0)
        throw std::invalid_argument("dyck: path size does not match the composition");
    const int m = static_cast<int>(p.a / k), n = static_cast<int>(p.b / k);
    check_slope(p, m, n);
    auto touches = touch_steps_checked(p, m, n, alpha);

    const int b = p.b;
    std::vector<int> flag(b, 0);  // 0 = unconstrained, else cap
    for (std::size_t j = 0; j < touches.size(); ++j) flag[touches[j]] = static_cast<int>(j) + 1;
    std::vector<int> run_pos;
    {
        int pos = 0;
        for (char s : p.steps) {
            if (s == 'N') run_pos.push_back(pos);
            ++pos;
        }
    }

    std::vector<ParkingWord> out;
    std::vector<int> vals(b);
    std::function<void(int)> assign = [&](int i) {
        if (i == b) {
            out.push_back({vals, kind});
            return;
        }
        int lo = 1, hi = value_bound;
        if (i > 0 && run_pos[i] == run_pos[i - 1] + 1) {
            if (kind == ParkKind::strict_inc) lo = vals[i - 1] + 1;
            else hi = std::min(hi, vals[i - 1]);
        }
        if (flag[i] > 0) hi = std::min(hi, flag[i]);
        for (int v = lo; v <= hi; ++v) {
            vals[i] = v;
            assign(i + 1);
        }
    };
    assign(0);
    return out;
}

long pf_dinv(const DyckPath& p, const ParkingWord& w, PfStat stat) {
    if (static_cast<int>(w.values.size()) != p.b)
        throw std::invalid_argument("dyck: word length does not match the north steps");
    if (p.a == 0 || p.b == 0) return 0;
    const int g = std::gcd(p.a, p.b);
    auto info = sweep_info(p, p.a / g, p.b / g);
    long count = 0;
    for (auto [i, j] : info.attacks) {
        int wi = w.values[info.sweep[i - 1]], wj = w.values[info.sweep[j - 1]];
        bool hit = stat == PfStat::dinv ? wi < wj
                 : stat == PfStat::tdinv ? wi > wj
                                         : wi >= wj;
        if (hit) ++count;
    }
    return count;
}

std::vector<int> park_content(const ParkingWord& w, int nvars) {
    std::vector<int> content(nvars, 0);
    for (int v : w.values) {
        if (v < 1 || v > nvars)
            throw std::invalid_argument("dyck: word value outside the variable range");
        ++content[v - 1];
    }
    return content;
}

}  // namespace shuffle
