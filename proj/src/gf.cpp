#include "glpsh/gf.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace glpsh {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Fixed irreducible polynomials (monic, listed by ascending power of x)
// for the supported extension fields.
std::vector<int> irreducible_poly(int p, int k) {
    if (p == 2 && k == 2) return {1, 1, 1};        // x^2 + x + 1
    if (p == 2 && k == 3) return {1, 1, 0, 1};     // x^3 + x + 1
    if (p == 2 && k == 4) return {1, 1, 0, 0, 1};  // x^4 + x + 1
    if (p == 3 && k == 2) return {1, 0, 1};        // x^2 + 1
    throw std::invalid_argument("no fixed irreducible polynomial for p=" +
                                std::to_string(p) + ", k=" + std::to_string(k));
}

}  // namespace

FiniteField::FiniteField(int p, int k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    long long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (q > 16) throw std::invalid_argument("field order cap exceeded (q <= 16)");
    q_ = int(q);

    add_.assign(size_t(q_) * q_, 0);
    mul_.assign(size_t(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    if (k == 1) {
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) {
                add_[a * q_ + b] = uint8_t((a + b) % p);
                mul_[a * q_ + b] = uint8_t((a * b) % p);
            }
    } else {
        // polynomial basis: index = sum c_i p^i, element = sum c_i x^i
        auto digits = [&](int a) {
            std::vector<int> c(k, 0);
            for (int i = 0; i < k; ++i) { c[i] = a % p; a /= p; }
            return c;
        };
        auto undigits = [&](const std::vector<int>& c) {
            int a = 0;
            for (int i = k - 1; i >= 0; --i) a = a * p + c[i];
            return a;
        };
        std::vector<int> irr = irreducible_poly(p, k);
        for (int a = 0; a < q_; ++a) {
            auto ca = digits(a);
            for (int b = 0; b < q_; ++b) {
                auto cb = digits(b);
                std::vector<int> s(k, 0);
                for (int i = 0; i < k; ++i) s[i] = (ca[i] + cb[i]) % p;
                add_[a * q_ + b] = uint8_t(undigits(s));
                // multiply then reduce mod irr
                std::vector<int> prod(2 * k - 1, 0);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
                for (int d = 2 * k - 2; d >= k; --d) {
                    int c = prod[d];
                    if (c == 0) continue;
                    prod[d] = 0;
                    for (int i = 0; i < k; ++i)
                        prod[d - k + i] = ((prod[d - k + i] - c * irr[i]) % p + p * p) % p;
                }
                prod.resize(k);
                mul_[a * q_ + b] = uint8_t(undigits(prod));
            }
        }
    }
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b) {
            if (add_[a * q_ + b] == 0) neg_[a] = uint8_t(b);
            if (mul_[a * q_ + b] == 1) inv_[a] = uint8_t(b);
        }
    // least multiplicative generator
    gen_ = 0;
    for (int g = 1; g < q_ && gen_ == 0; ++g) {
        int x = g, ord = 1;
        while (x != 1) { x = mul_[x * q_ + g]; ++ord; }
        if (ord == q_ - 1) gen_ = uint8_t(g);
    }
    log_.assign(q_, -1);
    {
        int x = 1;
        for (int i = 0; i < q_ - 1; ++i) {
            log_[x] = i;
            x = mul_[x * q_ + gen_];
        }
    }
}

const FiniteField* FiniteField::make(int p, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<FiniteField>> reg;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = reg.find(key);
    if (it == reg.end())
        it = reg.emplace(key, std::unique_ptr<FiniteField>(new FiniteField(p, k))).first;
    return it->second.get();
}

const FiniteField* FiniteField::of_order(int q) {
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        int k = 0;
        long long t = q;
        while (t % p == 0) { t /= p; ++k; }
        if (t == 1 && k >= 1) return make(p, k);
    }
    throw std::invalid_argument("q is not a prime power: " + std::to_string(q));
}

uint8_t FiniteField::inv(uint8_t a) const {
    if (a == 0) throw std::domain_error("inverse of 0");
    return inv_[a];
}

int FiniteField::log(uint8_t a) const {
    if (a == 0) throw std::domain_error("log of 0");
    return log_[a];
}

Mat Mat::identity(int n, const FiniteField* F) {
    Mat m(n, F);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Mat::is_identity() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool Mat::operator<(const Mat& o) const {
    if (n != o.n) return n < o.n;
    return e < o.e;
}

Mat mat_mul(const Mat& A, const Mat& B) {
    if (A.n != B.n || A.F != B.F)
        throw std::invalid_argument("mat_mul: dimension or field mismatch");
    const FiniteField& F = *A.F;
    Mat C(A.n, A.F);
    for (int i = 0; i < A.n; ++i)
        for (int kk = 0; kk < A.n; ++kk) {
            uint8_t a = A.at(i, kk);
            if (a == 0) continue;
            for (int j = 0; j < A.n; ++j) {
                uint8_t t = F.mul(a, B.at(kk, j));
                if (t) C.at(i, j) = F.add(C.at(i, j), t);
            }
        }
    return C;
}

uint8_t mat_det(const Mat& A) {
    const FiniteField& F = *A.F;
    Mat M = A;
    uint8_t det = 1;
    for (int col = 0; col < M.n; ++col) {
        int piv = -1;
        for (int r = col; r < M.n; ++r)
            if (M.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < M.n; ++j) std::swap(M.at(piv, j), M.at(col, j));
            det = F.neg(det);
        }
        det = F.mul(det, M.at(col, col));
        uint8_t pinv = F.inv(M.at(col, col));
        for (int r = col + 1; r < M.n; ++r) {
            uint8_t f = F.mul(M.at(r, col), pinv);
            if (f == 0) continue;
            for (int j = col; j < M.n; ++j)
                M.at(r, j) = F.sub(M.at(r, j), F.mul(f, M.at(col, j)));
        }
    }
    return det;
}

Mat mat_inv(const Mat& A) {
    const FiniteField& F = *A.F;
    Mat M = A;
    Mat I = Mat::identity(A.n, A.F);
    for (int col = 0; col < M.n; ++col) {
        int piv = -1;
        for (int r = col; r < M.n; ++r)
            if (M.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) throw std::domain_error("mat_inv: singular matrix");
        if (piv != col)
            for (int j = 0; j < M.n; ++j) {
                std::swap(M.at(piv, j), M.at(col, j));
                std::swap(I.at(piv, j), I.at(col, j));
            }
        uint8_t pinv = F.inv(M.at(col, col));
        for (int j = 0; j < M.n; ++j) {
            M.at(col, j) = F.mul(M.at(col, j), pinv);
            I.at(col, j) = F.mul(I.at(col, j), pinv);
        }
        for (int r = 0; r < M.n; ++r) {
            if (r == col) continue;
            uint8_t f = M.at(r, col);
            if (f == 0) continue;
            for (int j = 0; j < M.n; ++j) {
                M.at(r, j) = F.sub(M.at(r, j), F.mul(f, M.at(col, j)));
                I.at(r, j) = F.sub(I.at(r, j), F.mul(f, I.at(col, j)));
            }
        }
    }
    return I;
}

size_t MatHash::operator()(const Mat& m) const {
    // FNV-1a over the entry bytes
    size_t h = 1469598103934665603ull;
    for (uint8_t b : m.e) {
        h ^= b;
        h *= 1099511628211ull;
    }
    h ^= size_t(m.n);
    h *= 1099511628211ull;
    return h;
}

std::string mat_to_string(const Mat& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.n; ++i) {
        os << "[";
        for (int j = 0; j < m.n; ++j) {
            os << int(m.at(i, j));
            if (j + 1 < m.n) os << ",";
        }
        os << "]";
        if (i + 1 < m.n) os << ",";
    }
    os << "]";
    return os.str();
}

}  // namespace glpsh
