#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <string>

#include "dga/errors.hpp"

namespace dga {

// Which coefficient field a presentation lives over.
enum class Field { Q, QI };

// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
// Q is the subfield im == 0; field mode is enforced at the presentation level,
// the scalar type itself is always the full Gaussian-rational field.
//
// All operators return values (no expression templates), so the type is safe
// as an Eigen matrix scalar.
class Scalar {
  public:
    Scalar() : re_(0), im_(0) {}
    Scalar(int n) : re_(n), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    explicit Scalar(const mpq_class& re) : re_(re), im_(0) {}
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
    static Scalar fraction(long num, long den);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar inverse() const;

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Canonical textual form, parseable by the presentation DSL:
    // "0", "3", "-1/2", "i", "-i", "2/3*i", "1+i", "1-2/5*i".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

  private:
    mpq_class re_, im_;
};

} // namespace dga

namespace Eigen {

template <>
struct NumTraits<dga::Scalar> : GenericNumTraits<dga::Scalar> {
    typedef dga::Scalar Real;
    typedef dga::Scalar NonInteger;
    typedef dga::Scalar Nested;
    typedef dga::Scalar Literal;
    enum {
        IsComplex = 0, // conjugation is handled explicitly by callers
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 120,
    };
    static inline Real epsilon() { return dga::Scalar(0); }
    static inline Real dummy_precision() { return dga::Scalar(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace dga {

template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using DenseRowVector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

using Mat = DenseMatrix<Scalar>;
using Vec = DenseVector<Scalar>;
using RowVec = DenseRowVector<Scalar>;
using Index = Eigen::Index;

} // namespace dga
