#include "phtype/core.hpp"

#include <algorithm>
#include <numeric>

namespace phtype {

std::string Signature::str() const {
    return "(" + std::to_string(pos) + "," + std::to_string(neg) + ")";
}

Metric metric_of(Signature sig) {
    Metric m(sig.dim(), 1);
    std::fill(m.begin() + sig.pos, m.end(), -1);
    return m;
}

Signature signature_of(const Metric& m) {
    Signature s;
    for (int e : m) (e > 0 ? s.pos : s.neg)++;
    return s;
}

bool sign_sorted(const Metric& m) {
    return std::is_sorted(m.begin(), m.end(), [](int a, int b) { return a > b; });
}

int epsilon(int i, Signature sig) {
    if (i < 1 || i > sig.dim())
        throw std::out_of_range("epsilon: index " + std::to_string(i) + " outside 1.." +
                                std::to_string(sig.dim()));
    return i <= sig.pos ? 1 : -1;
}

ExactVector unit_vector(int n, int index0) {
    ExactVector v(n);
    v.at(index0) = 1;
    return v;
}

bool is_zero(const ExactVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

ExactVector operator+(const ExactVector& a, const ExactVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    ExactVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExactVector operator-(const ExactVector& a, const ExactVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    ExactVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

ExactVector operator*(const Rational& c, const ExactVector& a) {
    ExactVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Rational scalar_product(const ExactVector& x, const ExactVector& y, const Metric& m) {
    if (x.size() != m.size() || y.size() != m.size())
        throw std::invalid_argument("scalar_product: length mismatch");
    Rational s = 0;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] > 0)
            s += x[i] * y[i];
        else
            s -= x[i] * y[i];
    }
    return s;
}

Rational scalar_product(const ExactVector& x, const ExactVector& y, Signature sig) {
    return scalar_product(x, y, metric_of(sig));
}

ExactMatrix::ExactMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix");
        for (long x : r) a_.emplace_back(x);
    }
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::diagonal(const Metric& d) {
    int n = static_cast<int>(d.size());
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[i];
    return m;
}

ExactVector ExactMatrix::column(int j) const {
    ExactVector v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

ExactVector ExactMatrix::apply(const ExactVector& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply: length mismatch");
    ExactVector y(rows_);
    for (int j = 0; j < cols_; ++j) {
        if (sgn(x[j]) == 0) continue;
        for (int i = 0; i < rows_; ++i)
            if (sgn((*this)(i, j)) != 0) y[i] += (*this)(i, j) * x[j];
    }
    return y;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    ExactMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (sgn(b(k, j)) != 0) c(i, j) += x * b(k, j);
        }
    return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
    ExactMatrix c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
    return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
    ExactMatrix c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
    return c;
}

ExactMatrix operator*(const Rational& s, const ExactMatrix& a) {
    ExactMatrix c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = s * a.a_[i];
    return c;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

namespace {

// rows scaled to integers; rank and the nonzero-ness of det are unchanged
std::vector<std::vector<Integer>> integer_rows(const ExactMatrix& m, Integer* scale) {
    std::vector<std::vector<Integer>> r(m.rows(), std::vector<Integer>(m.cols()));
    Integer total = 1;
    for (int i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (int j = 0; j < m.cols(); ++j) r[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        total *= l;
    }
    if (scale) *scale = total;
    return r;
}

constexpr std::uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

int rank_mod_p(const std::vector<std::vector<Integer>>& rows, int cols) {
    std::vector<std::vector<std::uint64_t>> a(rows.size(), std::vector<std::uint64_t>(cols));
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = mpz_fdiv_ui(rows[i][j].get_mpz_t(), kPrime);
    int rank = 0;
    int n = static_cast<int>(a.size());
    for (int c = 0; c < cols && rank < n; ++c) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (a[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        std::uint64_t inv = powmod(a[rank][c], kPrime - 2);
        for (int i = rank + 1; i < n; ++i) {
            if (!a[i][c]) continue;
            std::uint64_t f = mulmod(a[i][c], inv);
            for (int j = c; j < cols; ++j) {
                std::uint64_t t = mulmod(f, a[rank][j]);
                a[i][j] = (a[i][j] + kPrime - t) % kPrime;
            }
        }
        ++rank;
    }
    return rank;
}

// fraction-free elimination; returns rank, and the last pivot (= +-det when square and full rank)
int bareiss(std::vector<std::vector<Integer>>& a, int cols, Integer* det_out) {
    int n = static_cast<int>(a.size());
    Integer prev = 1;
    int rank = 0;
    int sign = 1;
    for (int c = 0; c < cols && rank < n; ++c) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank) {
            std::swap(a[piv], a[rank]);
            sign = -sign;
        }
        for (int i = rank + 1; i < n; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                a[i][j] = a[i][j] * a[rank][c] - a[i][c] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    if (det_out) *det_out = sign * prev;
    return rank;
}

}  // namespace

int exact_rank(const ExactMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    // rank is invariant under transpose; eliminate along the short side
    if (m.rows() > m.cols()) return exact_rank(m.transpose());
    auto rows = integer_rows(m, nullptr);
    int full = std::min(m.rows(), m.cols());
    if (rank_mod_p(rows, m.cols()) == full) return full;
    return bareiss(rows, m.cols(), nullptr);
}

Rational exact_det(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("exact_det: matrix not square");
    if (m.rows() == 0) return 1;
    Integer scale;
    auto rows = integer_rows(m, &scale);
    Integer d;
    int rank = bareiss(rows, m.cols(), &d);
    if (rank < m.rows()) return 0;
    Rational r(d, scale);
    r.canonicalize();
    return r;
}

std::vector<ExactVector> nullspace(const ExactMatrix& m) {
    // reduced row echelon form over Q
    int R = m.rows(), C = m.cols();
    std::vector<std::vector<Rational>> a(R, std::vector<Rational>(C));
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j) a[i][j] = m(i, j);
    std::vector<int> pivcol;
    int row = 0;
    for (int c = 0; c < C && row < R; ++c) {
        int piv = -1;
        for (int i = row; i < R; ++i)
            if (sgn(a[i][c]) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[row]);
        Rational inv = 1 / a[row][c];
        for (int j = c; j < C; ++j) a[row][j] *= inv;
        for (int i = 0; i < R; ++i) {
            if (i == row || sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c];
            for (int j = c; j < C; ++j)
                if (sgn(a[row][j]) != 0) a[i][j] -= f * a[row][j];
        }
        pivcol.push_back(c);
        ++row;
    }
    std::vector<bool> is_piv(C, false);
    for (int c : pivcol) is_piv[c] = true;
    std::vector<ExactVector> basis;
    for (int f = 0; f < C; ++f) {
        if (is_piv[f]) continue;
        ExactVector v(C);
        v[f] = 1;
        for (size_t r = 0; r < pivcol.size(); ++r) v[pivcol[r]] = -a[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

ExactMatrix inverse(const ExactMatrix& m) {
    int n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("inverse: matrix not square");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
        a[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (sgn(a[i][c]) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("inverse: matrix is singular");
        std::swap(a[piv], a[c]);
        Rational inv = 1 / a[c][c];
        for (int j = 0; j < 2 * n; ++j) a[c][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c];
            for (int j = 0; j < 2 * n; ++j)
                if (sgn(a[c][j]) != 0) a[i][j] -= f * a[c][j];
        }
    }
    ExactMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = a[i][n + j];
    return r;
}

const char* to_string(MapClass c) {
    switch (c) {
        case MapClass::ISOMETRY: return "ISOMETRY";
        case MapClass::ANTI_ISOMETRY: return "ANTI_ISOMETRY";
        default: return "NEITHER";
    }
}

MapClass classify_map(const ExactMatrix& m, const Metric& from, const Metric& to) {
    if (m.cols() != static_cast<int>(from.size()) || m.rows() != static_cast<int>(to.size()))
        throw std::invalid_argument("classify_map: dimension mismatch");
    // Gram matrix of the images against the source Gram matrix
    ExactMatrix gram = m.transpose() * ExactMatrix::diagonal(to) * m;
    ExactMatrix g = ExactMatrix::diagonal(from);
    if (gram == g) return MapClass::ISOMETRY;
    if (gram == Rational(-1) * g) return MapClass::ANTI_ISOMETRY;
    return MapClass::NEITHER;
}

MapClass classify_map(const ExactMatrix& m, Signature from, Signature to) {
    return classify_map(m, metric_of(from), metric_of(to));
}

ExactMatrix metric_adjoint(const ExactMatrix& m, const Metric& from, const Metric& to) {
    // <Mx, y>_to = <x, M^t y>_from  =>  M^t = G_from^{-1} M^T G_to, metrics are +-1 diagonals
    ExactMatrix t = m.transpose();
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j)
            if (from[i] * to[j] < 0) t(i, j) = -t(i, j);
    return t;
}

std::uint64_t Rng::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

}  // namespace phtype
