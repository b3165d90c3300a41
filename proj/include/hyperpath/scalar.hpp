#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hyperpath {

using BigInt = boost::multiprecision::cpp_int;

// Exact scalar: a reduced fraction with positive denominator. In prime-field
// mode the value is a residue in [0, p) with denominator 1; Field::canon
// maintains that invariant.
using Scalar = boost::multiprecision::cpp_rational;

inline BigInt scalar_num(const Scalar& s) { return boost::multiprecision::numerator(s); }
inline BigInt scalar_den(const Scalar& s) { return boost::multiprecision::denominator(s); }
inline bool is_integer(const Scalar& s) { return scalar_den(s) == 1; }

inline std::string scalar_str(const Scalar& s) { return s.str(); }

// Active coefficient field: the rationals, or integers modulo a prime.
class Field {
public:
    enum class Kind { rationals, prime };

    Field() : kind_(Kind::rationals) {}
    static Field rationals() { return Field(); }
    static Field prime(const BigInt& p);

    // Accepts "Q" or "Fp:<prime>".
    static Field parse(const std::string& text);

    Kind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == Kind::prime; }
    const BigInt& modulus() const { return p_; }
    std::string name() const;

    // Maps an arbitrary rational into the field. Identity over Q; over F_p
    // the result is num * den^{-1} reduced into [0, p).
    Scalar canon(const Scalar& s) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }

private:
    explicit Field(BigInt p) : kind_(Kind::prime), p_(std::move(p)) {}

    BigInt mod(const BigInt& x) const;
    BigInt inverse_mod(const BigInt& x) const;

    Kind kind_;
    BigInt p_;
};

} // namespace hyperpath
