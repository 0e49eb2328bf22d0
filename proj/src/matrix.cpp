#include "ellcon/matrix.hpp"

namespace ellcon {

MatrixRF::MatrixRF(std::initializer_list<std::initializer_list<RatFunc>> rows)
    : r_(static_cast<int>(rows.size())), c_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
    for (auto& row : rows) {
        if (static_cast<int>(row.size()) != c_) throw std::invalid_argument("ragged matrix literal");
        for (auto& x : row) e_.push_back(x);
    }
}

MatrixRF MatrixRF::identity(int n) {
    MatrixRF m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = RatFunc(1);
    return m;
}

void MatrixRF::check_square(const char* op) const {
    if (r_ != c_) throw std::invalid_argument(std::string(op) + ": matrix not square");
}

MatrixRF MatrixRF::operator+(const MatrixRF& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("dimension mismatch");
    MatrixRF m(r_, c_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
    return m;
}

MatrixRF MatrixRF::operator-(const MatrixRF& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("dimension mismatch");
    MatrixRF m(r_, c_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
    return m;
}

MatrixRF MatrixRF::operator*(const MatrixRF& o) const {
    if (c_ != o.r_) throw std::invalid_argument("dimension mismatch");
    MatrixRF m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < o.c_; ++j) {
            RatFunc s;
            for (int k = 0; k < c_; ++k)
                if (!(*this)(i, k).is_zero() && !o(k, j).is_zero()) s += (*this)(i, k) * o(k, j);
            m(i, j) = s;
        }
    return m;
}

MatrixRF MatrixRF::scaled(const RatFunc& s) const {
    return map([&](const RatFunc& f) { return f * s; });
}

MatrixRF MatrixRF::transpose() const {
    MatrixRF m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

MatrixRF MatrixRF::column(int j) const {
    MatrixRF m(r_, 1);
    for (int i = 0; i < r_; ++i) m(i, 0) = (*this)(i, j);
    return m;
}

MatrixRF MatrixRF::map(const std::function<RatFunc(const RatFunc&)>& f) const {
    MatrixRF m(r_, c_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = f(e_[k]);
    return m;
}

RatFunc MatrixRF::det() const {
    check_square("det");
    const auto& a = *this;
    switch (r_) {
        case 0: return RatFunc(1);
        case 1: return a(0, 0);
        case 2: return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        case 3: {
            RatFunc d;
            for (int j = 0; j < 3; ++j) {
                if (a(0, j).is_zero()) continue;
                int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
                RatFunc minor = a(1, j1) * a(2, j2) - a(1, j2) * a(2, j1);
                d += a(0, j) * minor;
            }
            return d;
        }
        default: {
            // clear denominators row by row, then fraction-free elimination
            std::vector<std::vector<MPoly>> m(r_, std::vector<MPoly>(c_));
            RatFunc scale(1);
            for (int i = 0; i < r_; ++i) {
                RatFunc::Factors L;
                for (int j = 0; j < c_; ++j)
                    for (auto& fe : a(i, j).den_factors()) {
                        bool found = false;
                        for (auto& le : L)
                            if (le.first == fe.first) {
                                le.second = std::max(le.second, fe.second);
                                found = true;
                            }
                        if (!found) L.push_back(fe);
                    }
                RatFunc common = RatFunc::from_factors(MPoly(1), L);
                for (int j = 0; j < c_; ++j) {
                    RatFunc x = a(i, j) / common;
                    if (!x.is_poly()) throw std::logic_error("row denominator not cleared");
                    m[i][j] = x.num();
                }
                scale *= common;
            }
            return RatFunc(bareiss_det(std::move(m))) * scale;
        }
    }
}

MatrixRF MatrixRF::adjugate() const {
    check_square("adjugate");
    int n = r_;
    MatrixRF adj(n, n);
    if (n == 1) {
        adj(0, 0) = RatFunc(1);
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MatrixRF minor(n - 1, n - 1);
            for (int r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mr, mc++) = (*this)(r, c);
                }
                ++mr;
            }
            RatFunc d = minor.det();
            adj(j, i) = ((i + j) % 2) ? -d : d;
        }
    return adj;
}

MatrixRF MatrixRF::inverse() const {
    check_square("inverse");
    RatFunc d = det();
    if (d.is_zero()) throw SingularMatrix("singular matrix: determinant is identically zero");
    RatFunc inv = d.inverse();
    return adjugate().scaled(inv);
}

MatrixRF mat_inverse(const MatrixRF& m) { return m.inverse(); }

bool MatrixRF::equals(const MatrixRF& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (size_t k = 0; k < e_.size(); ++k)
        if (!e_[k].equals(o.e_[k])) return false;
    return true;
}

MatrixRF MatrixRF::eval(const Assignment& a) const {
    return map([&](const RatFunc& f) { return RatFunc(f.eval(a)); });
}

std::vector<std::vector<Rat>> MatrixRF::values(const Assignment& a) const {
    std::vector<std::vector<Rat>> out(r_, std::vector<Rat>(c_));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out[i][j] = (*this)(i, j).eval(a);
    return out;
}

std::string MatrixRF::to_string() const {
    std::string s = "[";
    for (int i = 0; i < r_; ++i) {
        s += i ? ",\n [" : "[";
        for (int j = 0; j < c_; ++j) {
            if (j) s += ", ";
            s += (*this)(i, j).to_string();
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace ellcon
