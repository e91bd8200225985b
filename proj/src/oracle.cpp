#include "seljac/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace seljac {

MonomialPoly MonomialPoly::constant(int nvars, const Rational& c) {
    MonomialPoly p(nvars);
    p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
    return p;
}

void MonomialPoly::add_term(const std::vector<int>& exps, const Rational& coeff) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw DomainError("MonomialPoly: exponent vector has wrong length");
    if (coeff.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MonomialPoly& MonomialPoly::operator+=(const MonomialPoly& o) {
    if (o.nvars_ != nvars_) throw DomainError("MonomialPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b) {
    if (a.nvars_ != b.nvars_) throw DomainError("MonomialPoly: variable count mismatch");
    MonomialPoly out(a.nvars_);
    std::vector<int> e(static_cast<size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MonomialPoly operator*(const MonomialPoly& a, const Rational& s) {
    MonomialPoly out(a.nvars_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : a.terms_) out.add_term(e, c * s);
    return out;
}

bool MonomialPoly::is_symmetric() const {
    for (int i = 0; i + 1 < nvars_; ++i) {
        for (const auto& [e, c] : terms_) {
            std::vector<int> swapped = e;
            std::swap(swapped[static_cast<size_t>(i)], swapped[static_cast<size_t>(i) + 1]);
            auto it = terms_.find(swapped);
            if (it == terms_.end() || it->second != c) return false;
        }
    }
    return true;
}

MonomialPoly power_sum_poly(long k, int n) {
    if (k < 1) throw DomainError("power_sum_poly: need k >= 1");
    MonomialPoly p(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = static_cast<int>(k);
        p.add_term(e, Rational(1));
    }
    return p;
}

namespace {

// Column-strict fillings, cell by cell in row-major order.
void fill_tableau(int n, size_t row, size_t col,
                  std::vector<std::vector<int>>& t, MonomialPoly& out) {
    if (row == t.size()) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        for (const auto& r : t)
            for (int v : r) ++e[static_cast<size_t>(v - 1)];
        out.add_term(e, Rational(1));
        return;
    }
    size_t next_row = row, next_col = col + 1;
    if (next_col >= t[row].size()) { next_row = row + 1; next_col = 0; }
    int lo = 1;
    if (col > 0) lo = std::max(lo, t[row][col - 1]);                    // weakly increasing rows
    if (row > 0 && col < t[row - 1].size()) lo = std::max(lo, t[row - 1][col] + 1);  // strict columns
    for (int v = lo; v <= n; ++v) {
        t[row][col] = v;
        fill_tableau(n, next_row, next_col, t, out);
    }
}

} // namespace

MonomialPoly schur_poly(const Partition& lambda, int n) {
    MonomialPoly out(n);
    if (lambda.empty()) return MonomialPoly::constant(n, Rational(1));
    if (lambda.length() > n) return out;
    std::vector<std::vector<int>> t;
    for (long p : lambda.parts()) t.emplace_back(static_cast<size_t>(p), 0);
    fill_tableau(n, 0, 0, t, out);
    return out;
}

const MonomialPoly& vandermonde_squared(int n) {
    static std::map<int, MonomialPoly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1 || n > 6) throw DomainError("vandermonde_squared: n out of supported range");

    MonomialPoly det(n);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        std::vector<int> e(perm.begin(), perm.end());
        det.add_term(e, Rational(inversions % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto [pos, inserted] = cache.emplace(n, det * det);
    return pos->second;
}

Rational beta_moment_functional(const MonomialPoly& poly, const Rational& a, const Rational& b) {
    Rational total(0);
    for (const auto& [e, c] : poly.terms()) {
        Rational t = c;
        for (int m : e)
            for (int j = 0; j < m; ++j) t *= (a + Rational(j)) / (a + b + Rational(j));
        total += t;
    }
    return total;
}

Rational brute_average(const MonomialPoly& f, int n, const Rational& a, const Rational& b) {
    if (n < 1 || n > 5) throw DomainError("brute_average: n must be between 1 and 5");
    if (f.nvars() != n) throw DomainError("brute_average: f has the wrong number of variables");
    if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("brute_average: need a > 0 and b > 0");
    if (!f.is_symmetric()) throw DomainError("brute_average: f is not symmetric");
    const MonomialPoly& v2 = vandermonde_squared(n);
    return beta_moment_functional(v2 * f, a, b) / beta_moment_functional(v2, a, b);
}

Rational density_ik(long k, const SpectralParams& sp) {
    if (sp.A < 0 || sp.B < 0) throw DomainError("density_ik: A and B must be nonnegative integers");
    if (sp.N < 1) throw DomainError("density_ik: need N >= 1");
    if (k < 0) throw DomainError("density_ik: need k >= 0");
    const long A = sp.A, B = sp.B;
    Rational total(0);
    for (long j = 0; j <= sp.N - 1; ++j) {
        Rational cj = Rational(2 * j + A + B + 1) * factorial(j) * factorial(j + A + B) /
                      (factorial(j + A) * factorial(j + B));
        Rational inner(0);
        for (long m = 0; m <= j; ++m) {
            Rational dmj = pochhammer(Rational(-j), m) * pochhammer(Rational(A + B + j + 1), m) *
                           pochhammer(Rational(A + m + 1), j - m) / factorial(m);
            if (dmj.is_zero()) continue;
            Rational fmj = factorial(A + j) * factorial(A + k + m) * factorial(B) /
                           (factorial(j) * factorial(A) * factorial(A + B + k + m + 1));
            Rational gsum(0);
            for (long l = 0; l <= j; ++l) {
                gsum += pochhammer(Rational(-j), l) * pochhammer(Rational(j + A + B + 1), l) *
                        pochhammer(Rational(A + k + m + 1), l) /
                        (factorial(l) * pochhammer(Rational(A + 1), l) *
                         pochhammer(Rational(A + B + k + m + 2), l));
            }
            inner += dmj * fmj * gsum;
        }
        total += cj / factorial(j) * inner;
    }
    return total;
}

} // namespace seljac
