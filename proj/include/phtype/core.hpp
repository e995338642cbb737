#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace phtype {

using Rational = mpq_class;
using Integer = mpz_class;

struct Signature {
    int pos = 0;
    int neg = 0;

    int dim() const { return pos + neg; }
    bool operator==(const Signature&) const = default;
    std::string str() const;
};

// +1/-1 per basis vector, explicit because extension interleaves signs
using Metric = std::vector<int>;

Metric metric_of(Signature sig);
Signature signature_of(const Metric& m);
bool sign_sorted(const Metric& m);

int epsilon(int i, Signature sig);

using ExactVector = std::vector<Rational>;

ExactVector unit_vector(int n, int index0);
bool is_zero(const ExactVector& v);
ExactVector operator+(const ExactVector& a, const ExactVector& b);
ExactVector operator-(const ExactVector& a, const ExactVector& b);
ExactVector operator*(const Rational& c, const ExactVector& a);

Rational scalar_product(const ExactVector& x, const ExactVector& y, Signature sig);
Rational scalar_product(const ExactVector& x, const ExactVector& y, const Metric& m);

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);
    ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static ExactMatrix identity(int n);
    static ExactMatrix diagonal(const Metric& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    ExactVector column(int j) const;
    ExactVector apply(const ExactVector& x) const;
    ExactMatrix transpose() const;
    bool is_zero() const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const Rational& c, const ExactMatrix& a);
    bool operator==(const ExactMatrix& o) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

int exact_rank(const ExactMatrix& m);
Rational exact_det(const ExactMatrix& m);
// nullspace basis as columns, exact
std::vector<ExactVector> nullspace(const ExactMatrix& m);
ExactMatrix inverse(const ExactMatrix& m);

enum class MapClass { ISOMETRY, ANTI_ISOMETRY, NEITHER };
const char* to_string(MapClass c);

MapClass classify_map(const ExactMatrix& m, const Metric& from, const Metric& to);
MapClass classify_map(const ExactMatrix& m, Signature from, Signature to);

// adjoint of M : (V, from) -> (W, to) with respect to the two scalar products
ExactMatrix metric_adjoint(const ExactMatrix& m, const Metric& from, const Metric& to);

// Portable deterministic RNG: same sequence on every platform for a seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9E3779B97F4A7C15ull) {}
    std::uint64_t next();
    long uniform(long lo, long hi);

private:
    std::uint64_t state_;
};

}  // namespace phtype
