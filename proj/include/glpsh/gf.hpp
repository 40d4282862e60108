// Exact arithmetic in small finite fields F_q (q = p^k <= 16) and square
// matrices over them.  Field elements are indices 0..q-1; for extension
// fields the index encodes the polynomial-basis coordinates in base p,
// with a fixed irreducible polynomial per q so that element order is
// reproducible across runs and implementations.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace glpsh {

class FiniteField {
public:
    // Interned: one instance per (p, k).  q = p^k must be <= 16.
    static const FiniteField* make(int p, int k);
    // Convenience: factor q as p^k.
    static const FiniteField* of_order(int q);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const;  // throws on 0
    uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg(b)); }

    // Generator of the multiplicative group (least such index).
    uint8_t generator() const { return gen_; }
    // Discrete log base generator(); log(1) = 0.  Throws on 0.
    int log(uint8_t a) const;

private:
    FiniteField(int p, int k);
    int p_, k_, q_;
    std::vector<uint8_t> add_, mul_, neg_, inv_;
    uint8_t gen_;
    std::vector<int> log_;
};

struct Mat {
    int n = 0;
    const FiniteField* F = nullptr;
    std::vector<uint8_t> e;  // row-major, n*n field indices

    Mat() = default;
    Mat(int n_, const FiniteField* F_) : n(n_), F(F_), e(size_t(n_) * n_, 0) {}

    uint8_t at(int i, int j) const { return e[size_t(i) * n + j]; }
    uint8_t& at(int i, int j) { return e[size_t(i) * n + j]; }

    static Mat identity(int n, const FiniteField* F);

    bool is_identity() const;

    bool operator==(const Mat& o) const { return n == o.n && e == o.e; }
    // Row-major lexicographic on entries: the canonical element order.
    bool operator<(const Mat& o) const;
};

Mat mat_mul(const Mat& A, const Mat& B);
Mat mat_inv(const Mat& A);  // throws on singular input
uint8_t mat_det(const Mat& A);

struct MatHash {
    size_t operator()(const Mat& m) const;
};

std::string mat_to_string(const Mat& m);

}  // namespace glpsh
