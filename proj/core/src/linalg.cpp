#include "shuffle/linalg.hpp"

#include <stdexcept>

namespace shuffle {

QTMat qtmat(int rows, int cols) { return QTMat(rows, QTVec(cols)); }

QTMat identity_mat(int n) {
    QTMat m = qtmat(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = QT(1);
    return m;
}

QTMat mat_mul(const QTMat& a, const QTMat& b) {
    int n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    QTMat r = qtmat(n, m);
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (int j = 0; j < m; ++j) {
                if (b[l][j].is_zero()) continue;
                r[i][j] += a[i][l] * b[l][j];
            }
        }
    return r;
}

QTVec mat_vec(const QTMat& a, const QTVec& v) {
    QTVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) {
            if (a[i][j].is_zero() || v[j].is_zero()) continue;
            r[i] += a[i][j] * v[j];
        }
    return r;
}

namespace {
// rough size measure used to pick small pivots and keep fractions tame
size_t qt_weight(const QT& x) { return x.num().terms.size() + x.den().terms.size(); }
}  // namespace

std::vector<int> rref(QTMat& a) {
    std::vector<int> pivots;
    int rows = a.size();
    int cols = rows ? a[0].size() : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int best = -1;
        size_t bestw = 0;
        for (int i = r; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            size_t w = qt_weight(a[i][c]);
            if (best < 0 || w < bestw) {
                best = i;
                bestw = w;
            }
        }
        if (best < 0) continue;
        std::swap(a[r], a[best]);
        QT inv = a[r][c].inv();
        for (int j = c; j < cols; ++j)
            if (!a[r][j].is_zero()) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            QT f = a[i][c];
            for (int j = c; j < cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::optional<QTVec> solve(QTMat a, QTVec b) {
    int rows = a.size();
    int cols = rows ? a[0].size() : 0;
    for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = rref(a);
    // inconsistent if a pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    QTVec x(cols);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

QTMat nullspace(QTMat a) {
    int rows = a.size();
    int cols = rows ? a[0].size() : 0;
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    QTMat basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QTVec v(cols);
        v[c] = QT(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

QTMat inverse(const QTMat& a) {
    int n = a.size();
    QTMat aug = qtmat(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = QT(1);
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || (n && pivots.back() != n - 1))
        throw std::invalid_argument("inverse: singular matrix");
    QTMat r = qtmat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i][j] = aug[i][n + j];
    return r;
}

}  // namespace shuffle
