#pragma once

// Exact scalars over GF(2), GF(p) for word-sized primes, and the rationals.
//
// A Scalar carries its FieldSpec at runtime so that matrices read from files
// can pick their field late. Values are reduced on construction: residues live
// in [0, p), rationals are in lowest terms with a positive denominator, so
// operator== is structural equality.

#include "tworow/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace tworow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { gf2, gfp, rational };

inline bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

class FieldSpec {
public:
    static FieldSpec gf2() noexcept { return FieldSpec(FieldKind::gf2, 2); }

    /// GF(p) for a prime 2 <= p < 2^31. GF(2) is normalized to the gf2 kind.
    static FieldSpec gfp(std::uint64_t p)
    {
        if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
            throw Error(Errc::invalid_argument, "gf(" + std::to_string(p) + ") needs a prime below 2^31");
        if (p == 2) return gf2();
        return FieldSpec(FieldKind::gfp, static_cast<std::uint32_t>(p));
    }

    static FieldSpec rationals() noexcept { return FieldSpec(FieldKind::rational, 0); }

    /// Accepts "gf2", "gf(p)" and "q" (case-insensitive).
    static FieldSpec parse(std::string_view text)
    {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        if (s == "gf2") return gf2();
        if (s == "q") return rationals();
        if (s.size() > 4 && s.starts_with("gf(") && s.back() == ')') {
            std::uint64_t p = 0;
            const char* first = s.data() + 3;
            const char* last = s.data() + s.size() - 1;
            auto [ptr, ec] = std::from_chars(first, last, p);
            if (ec == std::errc() && ptr == last) return gfp(p);
        }
        throw Error(Errc::parse_error, "unknown field '" + std::string(text) + "' (expected gf2, gf(p) or q)");
    }

    FieldKind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ != FieldKind::rational; }

    /// Characteristic; 0 for the rationals.
    std::uint32_t characteristic() const noexcept { return p_; }

    std::string name() const
    {
        switch (kind_) {
        case FieldKind::gf2: return "gf2";
        case FieldKind::gfp: return "gf(" + std::to_string(p_) + ")";
        case FieldKind::rational: return "q";
        }
        return "?";
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(FieldKind kind, std::uint32_t p) noexcept : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint32_t p_;
};

namespace detail {

inline std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) noexcept
{
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

inline std::uint32_t reduce_signed(std::int64_t v, std::uint32_t p) noexcept
{
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

inline bool is_integer_literal(std::string_view s) noexcept
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline BigInt parse_bigint(std::string_view s)
{
    bool negative = false;
    if (s.front() == '-' || s.front() == '+') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    BigInt v{std::string(s)};
    return negative ? BigInt(-v) : v;
}

}  // namespace detail

/// An exact field element. Immutable in spirit: arithmetic returns new values.
class Scalar {
public:
    static Scalar zero(FieldSpec spec) { return from_int(spec, 0); }
    static Scalar one(FieldSpec spec) { return from_int(spec, 1); }

    static Scalar from_int(FieldSpec spec, std::int64_t v)
    {
        if (spec.is_finite()) return Scalar(spec, detail::reduce_signed(v, spec.characteristic()));
        return Scalar(spec, Rational(v));
    }

    static Scalar from_rational(Rational v) { return Scalar(FieldSpec::rationals(), std::move(v)); }

    static Scalar from_fraction(BigInt num, BigInt den)
    {
        if (den == 0) throw Error(Errc::division_by_zero, "zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return from_rational(Rational(std::move(num), std::move(den)));
    }

    /// Integer literals in every field; "a/b" literals over the rationals.
    static Scalar parse(FieldSpec spec, std::string_view text)
    {
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
        auto bad = [&] {
            return Error(Errc::parse_error, "'" + std::string(text) + "' is not a valid " + spec.name() + " literal");
        };
        if (spec.is_finite()) {
            if (!detail::is_integer_literal(text)) throw bad();
            BigInt v = detail::parse_bigint(text);
            BigInt r = v % spec.characteristic();
            if (r < 0) r += spec.characteristic();
            return Scalar(spec, r.convert_to<std::uint32_t>());
        }
        auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            if (!detail::is_integer_literal(text)) throw bad();
            return from_rational(Rational(detail::parse_bigint(text)));
        }
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den)) throw bad();
        BigInt d = detail::parse_bigint(den);
        if (d == 0) throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
        return from_fraction(detail::parse_bigint(num), std::move(d));
    }

    const FieldSpec& spec() const noexcept { return spec_; }

    bool is_zero() const noexcept
    {
        if (auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
        return std::get<Rational>(value_) == 0;
    }

    bool is_one() const noexcept
    {
        if (auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
        return std::get<Rational>(value_) == 1;
    }

    /// Residue in [0, p); only valid over finite fields.
    std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
    const Rational& rational() const { return std::get<Rational>(value_); }

    std::string to_string() const
    {
        if (auto* r = std::get_if<std::uint32_t>(&value_)) return std::to_string(*r);
        const auto& q = std::get<Rational>(value_);
        auto num = boost::multiprecision::numerator(q);
        auto den = boost::multiprecision::denominator(q);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }

    Scalar inverse() const
    {
        if (is_zero()) throw Error(Errc::division_by_zero, "zero has no inverse in " + spec_.name());
        if (auto* r = std::get_if<std::uint32_t>(&value_))
            return Scalar(spec_, detail::mod_inverse(*r, spec_.characteristic()));
        return Scalar(spec_, Rational(1) / std::get<Rational>(value_));
    }

    Scalar operator-() const
    {
        if (auto* r = std::get_if<std::uint32_t>(&value_))
            return Scalar(spec_, *r == 0 ? 0u : spec_.characteristic() - *r);
        return Scalar(spec_, Rational(-std::get<Rational>(value_)));
    }

    friend Scalar operator+(const Scalar& x, const Scalar& y)
    {
        check_same(x, y);
        if (x.spec_.is_finite()) {
            std::uint64_t s = std::uint64_t{x.residue()} + y.residue();
            return Scalar(x.spec_, static_cast<std::uint32_t>(s % x.spec_.characteristic()));
        }
        return Scalar(x.spec_, Rational(x.rational() + y.rational()));
    }

    friend Scalar operator-(const Scalar& x, const Scalar& y)
    {
        check_same(x, y);
        if (x.spec_.is_finite()) {
            std::uint64_t p = x.spec_.characteristic();
            return Scalar(x.spec_, static_cast<std::uint32_t>((x.residue() + p - y.residue()) % p));
        }
        return Scalar(x.spec_, Rational(x.rational() - y.rational()));
    }

    friend Scalar operator*(const Scalar& x, const Scalar& y)
    {
        check_same(x, y);
        if (x.spec_.is_finite()) {
            std::uint64_t m = std::uint64_t{x.residue()} * y.residue();
            return Scalar(x.spec_, static_cast<std::uint32_t>(m % x.spec_.characteristic()));
        }
        return Scalar(x.spec_, Rational(x.rational() * y.rational()));
    }

    friend Scalar operator/(const Scalar& x, const Scalar& y)
    {
        check_same(x, y);
        return x * y.inverse();
    }

    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

    friend bool operator==(const Scalar& x, const Scalar& y) { return x.spec_ == y.spec_ && x.value_ == y.value_; }

private:
    Scalar(FieldSpec spec, std::uint32_t residue) : spec_(spec), value_(residue) {}
    Scalar(FieldSpec spec, Rational value) : spec_(spec), value_(std::move(value)) {}

    static void check_same(const Scalar& x, const Scalar& y)
    {
        if (!(x.spec_ == y.spec_))
            throw Error(Errc::field_mismatch, x.spec_.name() + " vs " + y.spec_.name());
    }

    FieldSpec spec_;
    std::variant<std::uint32_t, Rational> value_;
};

}  // namespace tworow
