#include <packbound/exact_real.hh>

#include <cmath>
#include <numeric>
#include <stdexcept>

using namespace packbound;

namespace
{
    using wide = __int128;

    auto sign_of(wide v) -> std::strong_ordering
    {
        return v < 0 ? std::strong_ordering::less : v > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
}

auto packbound::integer_sqrt(std::int64_t value) -> std::int64_t
{
    if (value < 0)
        throw std::invalid_argument("integer_sqrt of a negative number");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(value)));
    while (r > 0 && static_cast<wide>(r) * r > value)
        --r;
    while (static_cast<wide>(r + 1) * (r + 1) <= value)
        ++r;
    return r;
}

auto packbound::compare_with_surd(std::int64_t x, std::int64_t s, std::int64_t c) -> std::strong_ordering
{
    if (c < 0)
        throw std::invalid_argument("negative radicand");
    if (0 == s || 0 == c)
        return sign_of(x);

    wide x2 = static_cast<wide>(x) * x;
    wide s2c = static_cast<wide>(s) * s * c;
    if (s > 0) {
        // s·√c > 0
        if (x <= 0)
            return std::strong_ordering::less;
        return sign_of(x2 - s2c);
    }
    else {
        // s·√c < 0
        if (x >= 0)
            return std::strong_ordering::greater;
        return sign_of(s2c - x2);
    }
}

ExactReal::ExactReal(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) :
    _a(a), _b(b), _c(c), _d(d)
{
    if (c < 0)
        throw std::invalid_argument("negative radicand");
    if (0 == d)
        throw std::invalid_argument("zero denominator");

    if (_d < 0) {
        _a = -_a;
        _b = -_b;
        _d = -_d;
    }

    if (0 != _b && 0 != _c) {
        auto root = integer_sqrt(_c);
        if (root * root == _c) {
            _a += _b * root;
            _b = 0;
        }
    }
    if (0 == _b || 0 == _c) {
        _b = 0;
        _c = 0;
    }

    auto g = std::gcd(std::gcd(_a, _b), _d);
    if (g > 1) {
        _a /= g;
        _b /= g;
        _d /= g;
    }
}

auto ExactReal::compare(std::int64_t p, std::int64_t q) const -> std::strong_ordering
{
    if (0 == q)
        throw std::invalid_argument("zero denominator");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    // sign(value - p/q) = sign(a·q + b·q·√c - p·d)
    //                   = -sign((p·d - a·q) - (b·q)·√c)
    auto x = static_cast<wide>(p) * _d - static_cast<wide>(_a) * q;
    auto s = static_cast<wide>(_b) * q;
    if (x > INT64_MAX || x < INT64_MIN || s > INT64_MAX || s < INT64_MIN)
        throw std::overflow_error("exact comparison overflow");
    auto rhs_minus_lhs = compare_with_surd(static_cast<std::int64_t>(x), static_cast<std::int64_t>(s), _c);
    return 0 > rhs_minus_lhs ? std::strong_ordering::greater
        : 0 < rhs_minus_lhs ? std::strong_ordering::less : std::strong_ordering::equal;
}

auto ExactReal::to_double() const -> double
{
    return (static_cast<double>(_a) + static_cast<double>(_b) * std::sqrt(static_cast<double>(_c))) / static_cast<double>(_d);
}

auto ExactReal::to_string() const -> std::string
{
    std::string numerator;
    if (0 == _b)
        numerator = std::to_string(_a);
    else {
        std::string surd = "sqrt(" + std::to_string(_c) + ")";
        std::string magnitude = (_b == 1 || _b == -1) ? surd : std::to_string(_b < 0 ? -_b : _b) + "*" + surd;
        if (0 == _a)
            numerator = (_b < 0 ? "-" : "") + magnitude;
        else
            numerator = std::to_string(_a) + (_b < 0 ? " - " : " + ") + magnitude;
    }

    if (1 == _d)
        return numerator;
    if (0 == _b)
        return numerator + "/" + std::to_string(_d);
    return "(" + numerator + ")/" + std::to_string(_d);
}
