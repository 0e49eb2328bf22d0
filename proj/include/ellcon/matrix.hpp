#pragma once
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellcon/ratfunc.hpp"

namespace ellcon {

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense matrix over RatFunc; dimensions fixed at construction.
class MatrixRF {
public:
    MatrixRF(int rows, int cols) : r_(rows), c_(cols), e_(rows * cols) {}
    MatrixRF(std::initializer_list<std::initializer_list<RatFunc>> rows);
    static MatrixRF identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    RatFunc& operator()(int i, int j) { return e_.at(i * c_ + j); }
    const RatFunc& operator()(int i, int j) const { return e_.at(i * c_ + j); }

    MatrixRF operator+(const MatrixRF& o) const;
    MatrixRF operator-(const MatrixRF& o) const;
    MatrixRF operator*(const MatrixRF& o) const;
    MatrixRF scaled(const RatFunc& s) const;
    MatrixRF transpose() const;
    MatrixRF column(int j) const;
    MatrixRF map(const std::function<RatFunc(const RatFunc&)>& f) const;

    RatFunc det() const;  // n <= 3 by expansion, larger by Bareiss over the common denominator
    MatrixRF adjugate() const;
    MatrixRF inverse() const;  // throws SingularMatrix

    bool equals(const MatrixRF& o) const;
    bool is_identity() const { return r_ == c_ && equals(identity(r_)); }
    MatrixRF eval(const Assignment& a) const;  // constant entries
    MatrixRF partial_eval(const Assignment& a) const { return map([&](const RatFunc& f) { return f.partial_eval(a); }); }
    std::vector<std::vector<Rat>> values(const Assignment& a) const;

    std::string to_string() const;

private:
    int r_, c_;
    std::vector<RatFunc> e_;
    void check_square(const char* op) const;
};

MatrixRF mat_inverse(const MatrixRF& m);

}  // namespace ellcon
