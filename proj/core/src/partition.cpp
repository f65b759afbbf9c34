#include "shuffle/partition.hpp"

#include <algorithm>
#include <functional>

namespace shuffle {

bool is_partition(const std::vector<int>& a) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] <= 0) return false;
        if (i + 1 < a.size() && a[i] < a[i + 1]) return false;
    }
    return true;
}

Partition sort_desc(std::vector<int> a) {
    std::sort(a.begin(), a.end(), std::greater<int>());
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

long weight(const std::vector<int>& a) {
    long s = 0;
    for (int x : a) s += x;
    return s;
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    Partition c(p[0]);
    for (int j = 0; j < p[0]; ++j) {
        int cnt = 0;
        for (int part : p)
            if (part > j) ++cnt;
        c[j] = cnt;
    }
    return c;
}

long nstat(const Partition& p) {
    long s = 0;
    for (size_t i = 0; i < p.size(); ++i) s += static_cast<long>(i) * p[i];
    return s;
}

ZZ zee(const Partition& p) {
    ZZ z = 1;
    size_t i = 0;
    while (i < p.size()) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        long m = static_cast<long>(j - i);
        for (long k = 0; k < m; ++k) z *= p[i];
        for (long k = 2; k <= m; ++k) z *= k;
        i = j;
    }
    return z;
}

bool dominates(const Partition& a, const Partition& b) {
    long sa = 0, sb = 0;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return sa == sb;
}

int arm(const Partition& p, int i, int j) { return p[i - 1] - j; }

int leg(const Partition& p, int i, int j) {
    int cnt = 0;
    for (size_t r = i; r < p.size(); ++r)
        if (p[r] >= j) ++cnt;
    return cnt;
}

std::vector<Partition> partitions_of(int n) {
    return partitions_of_max_len(n, n);
}

std::vector<Partition> partitions_of_max_len(int n, int maxlen) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= maxlen) return;
        for (int part = std::min(rem, maxpart); part >= 1; --part) {
            cur.push_back(part);
            rec(rem - part, part);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n);
    return out;
}

std::vector<Composition> compositions_of(int n, int len) {
    std::vector<Composition> out;
    Composition cur(len);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == len) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        if (pos == len - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[pos] = v;
            rec(pos + 1, rem - v);
        }
        cur[pos] = 0;
    };
    if (n >= 0 && len >= 1)
        rec(0, n);
    else if (n == 0 && len == 0)
        out.push_back({});
    return out;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

}  // namespace shuffle
