#ifndef PACKBOUND_EXACT_REAL_HH
#define PACKBOUND_EXACT_REAL_HH

#include <compare>
#include <cstdint>
#include <string>

namespace packbound
{
    /**
     * Exact real of the form (a + b·√c) / d with integers a, b, c >= 0, d > 0.
     *
     * Construction normalises: perfect-square radicands are folded into a,
     * b = 0 forces c = 0, and the common factor of a, b, d is divided out.
     * Comparisons against integers and rationals go through squared integer
     * inequalities, never floating point.
     */
    class ExactReal
    {
        private:
            std::int64_t _a = 0;
            std::int64_t _b = 0;
            std::int64_t _c = 0;
            std::int64_t _d = 1;

        public:
            ExactReal() = default;

            /// Throws std::invalid_argument for c < 0 or d == 0.
            ExactReal(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

            static auto integer(std::int64_t value) -> ExactReal { return ExactReal(value, 0, 0, 1); }
            static auto rational(std::int64_t numerator, std::int64_t denominator) -> ExactReal
            {
                return ExactReal(numerator, 0, 0, denominator);
            }

            [[nodiscard]] auto a() const -> std::int64_t { return _a; }
            [[nodiscard]] auto b() const -> std::int64_t { return _b; }
            [[nodiscard]] auto c() const -> std::int64_t { return _c; }
            [[nodiscard]] auto d() const -> std::int64_t { return _d; }

            [[nodiscard]] auto is_rational() const -> bool { return 0 == _b; }

            /// Exact comparison with p / q, q != 0.
            [[nodiscard]] auto compare(std::int64_t p, std::int64_t q = 1) const -> std::strong_ordering;

            [[nodiscard]] auto to_double() const -> double;

            /// "3", "8/3", "(9 - sqrt(12))/2", "4 - sqrt(6)".
            [[nodiscard]] auto to_string() const -> std::string;

            friend auto operator== (const ExactReal &, const ExactReal &) -> bool = default;
    };

    /// Exact sign of x - s·√c for c >= 0.
    [[nodiscard]] auto compare_with_surd(std::int64_t x, std::int64_t s, std::int64_t c) -> std::strong_ordering;

    /// Largest r with r*r <= value. Throws std::invalid_argument for negative input.
    [[nodiscard]] auto integer_sqrt(std::int64_t value) -> std::int64_t;
}

#endif
