#pragma once

// Generators and independent oracles shared by the test binaries. Nothing
// here calls into the elimination or incidence code it is meant to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sympow/exactla.hpp"
#include "sympow/homform.hpp"

namespace testkit {

using namespace sympow;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

    Rational rational(long range = 9)
    {
        Rational q(integer(-range, range), integer(1, range));
        q.canonicalize();
        return q;
    }
    Rational nonzero_rational(long range = 9)
    {
        Rational q;
        do q = rational(range);
        while (q == 0);
        return q;
    }

    FieldElement element(const FieldPtr& f, double density = 0.8)
    {
        std::vector<Rational> c(f->degree());
        for (auto& x : c) x = coin(density) ? rational() : Rational(0);
        return FieldElement(f, std::move(c));
    }
    FieldElement nonzero_element(const FieldPtr& f)
    {
        FieldElement x;
        do x = element(f);
        while (x.is_zero());
        return x;
    }

    HomForm form(const FieldPtr& f, unsigned d, double density = 0.5)
    {
        std::vector<FieldElement> dense;
        for (std::size_t k = 0; k < monomial_count(d); ++k)
            dense.push_back(coin(density) ? element(f) : FieldElement(f));
        return HomForm::from_dense(f, d, dense);
    }

    PointP2 point(const FieldPtr& f)
    {
        for (;;) {
            FieldElement x = element(f), y = element(f), z = element(f);
            if (!(x.is_zero() && y.is_zero() && z.is_zero())) return PointP2(x, y, z);
        }
    }

    ExactMatrix matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, double density = 0.6)
    {
        ExactMatrix m(f, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = coin(density) ? element(f, 0.7) : FieldElement(f);
        // Duplicate some rows as combinations so rank deficiency is common.
        for (std::size_t r = 1; r < rows; ++r) {
            if (!coin(0.3)) continue;
            const std::size_t s = index(r);
            const FieldElement k = element(f);
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = m(s, c) * k;
        }
        return m;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

using QMatrix = std::vector<std::vector<Rational>>;

/// Rank over Q by plain Gaussian elimination on mpq entries.
inline std::size_t rational_rank(QMatrix a)
{
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Matrix of multiplication by x on the power basis, assembled from the
/// companion matrix of the minimal polynomial (column k holds x * a^k).
inline QMatrix multiplication_matrix(const NumberField& f, const std::vector<Rational>& x)
{
    const std::size_t D = f.degree();
    const auto& m = f.minimal_poly();
    QMatrix comp(D, std::vector<Rational>(D));
    for (std::size_t i = 1; i < D; ++i) comp[i][i - 1] = 1;
    for (std::size_t i = 0; i < D; ++i) comp[i][D - 1] = -m[i];
    QMatrix out(D, std::vector<Rational>(D)), power(D, std::vector<Rational>(D));
    for (std::size_t i = 0; i < D; ++i) power[i][i] = 1;
    for (std::size_t k = 0; k < D; ++k) {
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j) out[i][j] += x[k] * power[i][j];
        QMatrix next(D, std::vector<Rational>(D));
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j)
                for (std::size_t l = 0; l < D; ++l) next[i][j] += comp[i][l] * power[l][j];
        power = std::move(next);
    }
    return out;
}

/// rank_K(M) through the regular representation: rank_Q(blocks) = D * rank_K(M).
inline std::size_t regular_rank(const NumberField& f, const std::vector<std::vector<std::vector<Rational>>>& entries)
{
    const std::size_t D = f.degree();
    const std::size_t rows = entries.size(), cols = rows ? entries[0].size() : 0;
    QMatrix big(rows * D, std::vector<Rational>(cols * D));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const QMatrix blk = multiplication_matrix(f, entries[r][c]);
            for (std::size_t i = 0; i < D; ++i)
                for (std::size_t j = 0; j < D; ++j) big[r * D + i][c * D + j] = blk[i][j];
        }
    return rational_rank(std::move(big)) / D;
}

inline std::size_t regular_rank(const ExactMatrix& m)
{
    std::vector<std::vector<std::vector<Rational>>> e(m.rows(), std::vector<std::vector<Rational>>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) e[r][c] = m(r, c).coeffs();
    return regular_rank(*m.field(), e);
}

/// Phi_N by integer polynomial arithmetic: product over d | N of (t^d - 1)^mu(N/d),
/// evaluated as numerator / denominator and divided exactly.
inline std::vector<long long> cyclotomic_oracle(int N)
{
    auto mobius = [](int k) {
        int result = 1;
        for (int p = 2; p * p <= k; ++p) {
            if (k % p) continue;
            k /= p;
            if (k % p == 0) return 0;
            result = -result;
        }
        if (k > 1) result = -result;
        return result;
    };
    auto mul = [](const std::vector<long long>& a, const std::vector<long long>& b) {
        std::vector<long long> c(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        return c;
    };
    std::vector<long long> num{1}, den{1};
    for (int d = 1; d <= N; ++d) {
        if (N % d) continue;
        std::vector<long long> f(d + 1);
        f[0] = -1;
        f[d] = 1;
        const int mu = mobius(N / d);
        if (mu == 1) num = mul(num, f);
        if (mu == -1) den = mul(den, f);
    }
    // Exact long division num / den (den monic).
    std::vector<long long> q(num.size() - den.size() + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
        q[i] = num[i + den.size() - 1];
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
    }
    return q;
}

}  // namespace testkit
