#include "qgl/linalg.hpp"

#include <utility>

namespace qgl {

namespace {

template <class T, class IsZero>
int bareiss_rank(std::vector<std::vector<T>>& m, T one, IsZero is_zero) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    T prev = one;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (is_zero(m[i][c])) {
                // row i still has to be rescaled to keep the invariant
                for (std::size_t j = c + 1; j < cols; ++j)
                    if (!is_zero(m[i][j])) m[i][j] = (m[r][c] * m[i][j]) / prev;
                continue;
            }
            for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = m[i][c] - m[i][c];
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace

int rank(std::vector<std::vector<Scalar>> m) {
    if (m.empty() || m[0].empty()) return 0;
    Scalar one = m[0][0].make_int(1);
    return bareiss_rank(m, one, [](const Scalar& s) { return s.is_zero(); });
}

int rank_rational(std::vector<std::vector<Rat>> m) {
    if (m.empty() || m[0].empty()) return 0;
    return bareiss_rank(m, Rat(1), [](const Rat& s) { return s == 0; });
}

}  // namespace qgl
