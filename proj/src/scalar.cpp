#include "dga/scalar.hpp"

#include <ostream>
#include <sstream>

namespace dga {

Scalar Scalar::fraction(long num, long den) {
    if (den == 0) throw InputError("scalar fraction with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw InputError("division by zero scalar");
    // 1/(a+bi) = (a-bi)/(a^2+b^2)
    mpq_class n = re_ * re_ + im_ * im_;
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

namespace {

std::string rational_str(const mpq_class& q) { return q.get_str(); }

// One textual term of the form "c" or "c*i" or "i"/"-i"; used by str().
std::string imaginary_str(const mpq_class& q) {
    if (q == 1) return "i";
    if (q == -1) return "-i";
    return rational_str(q) + "*i";
}

} // namespace

std::string Scalar::str() const {
    if (is_zero()) return "0";
    if (sgn(im_) == 0) return rational_str(re_);
    if (sgn(re_) == 0) return imaginary_str(im_);
    std::string s = rational_str(re_);
    if (sgn(im_) > 0) {
        s += "+" + imaginary_str(im_);
    } else {
        s += "-" + imaginary_str(-im_);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace dga
