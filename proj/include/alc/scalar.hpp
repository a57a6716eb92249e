#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace alc {

using Rational = boost::multiprecision::cpp_rational;

// Which coefficient ring the front end accepts. The plain-rational ring is
// the default; Gaussian literals (`2i`, `1/2-1i`) parse only in Gaussian
// mode, so the two carriers never mix within one term.
enum class RingMode { Rational, Gaussian };

// Exact scalar coefficient: a Gaussian rational re + im*i with
// arbitrary-precision rational parts. Plain rationals are the im == 0
// subring. Representation is canonical (cpp_rational keeps lowest terms
// with positive denominator), so equality is representation equality.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : re_(n) {}  // NOLINT: implicit by design, mirrors ring literals
    explicit Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar ratio(long num, long den);

    Scalar operator+(const Scalar& o) const { return {re_ + o.re_, im_ + o.im_}; }
    Scalar operator*(const Scalar& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    Scalar operator-() const { return {-re_, -im_}; }
    bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    // Textual form: `n`, `-n`, `n/m`; Gaussian: `a+bi` / `a-bi` / `bi`.
    std::string str() const;

    // Parses the standalone textual form above. Returns nullopt on any
    // malformed input; imaginary parts are rejected in Rational mode.
    static std::optional<Scalar> parse(std::string_view text,
                                       RingMode mode = RingMode::Gaussian);

private:
    Rational re_ = 0;
    Rational im_ = 0;
};

std::string rational_str(const Rational& r);

}  // namespace alc
