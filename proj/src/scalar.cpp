#include <hyperpath/scalar.hpp>

#include <boost/multiprecision/integer.hpp>

namespace hyperpath {

namespace {

BigInt egcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    BigInt x1, y1;
    BigInt g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

bool miller_rabin(const BigInt& n) {
    if (n < 2) return false;
    for (int small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    BigInt d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) { d /= 2; ++r; }
    // Deterministic for n < 3.3e24; fixed witnesses otherwise.
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = (x * x) % n;
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace

Field Field::prime(const BigInt& p) {
    if (!miller_rabin(p))
        throw std::invalid_argument("field modulus must be prime: " + p.str());
    return Field(p);
}

Field Field::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.rfind("Fp:", 0) == 0) {
        BigInt p;
        try {
            p = BigInt(text.substr(3));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad field spec: " + text);
        }
        return prime(p);
    }
    throw std::invalid_argument("bad field spec: " + text + " (expected Q or Fp:<prime>)");
}

std::string Field::name() const {
    return kind_ == Kind::rationals ? "Q" : "Fp:" + p_.str();
}

BigInt Field::mod(const BigInt& x) const {
    BigInt r = x % p_;
    if (r < 0) r += p_;
    return r;
}

BigInt Field::inverse_mod(const BigInt& x) const {
    BigInt a = mod(x), u, v;
    BigInt g = egcd(a, p_, u, v);
    if (g != 1) throw std::domain_error("not invertible mod " + p_.str());
    return mod(u);
}

Scalar Field::canon(const Scalar& s) const {
    if (kind_ == Kind::rationals) return s;
    BigInt num = mod(scalar_num(s));
    BigInt den = scalar_den(s);
    if (den == 1) return Scalar(num);
    return Scalar(mod(num * inverse_mod(den)));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    return kind_ == Kind::rationals ? a + b : canon(a + b);
}
Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    return kind_ == Kind::rationals ? a - b : canon(a - b);
}
Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    return kind_ == Kind::rationals ? a * b : canon(a * b);
}
Scalar Field::neg(const Scalar& a) const {
    return kind_ == Kind::rationals ? Scalar(-a) : canon(-a);
}
Scalar Field::div(const Scalar& a, const Scalar& b) const {
    if (b == 0) throw std::domain_error("division by zero");
    if (kind_ == Kind::rationals) return a / b;
    return canon(Scalar(scalar_num(a) * scalar_den(b)) *
                 Scalar(inverse_mod(scalar_num(b) * scalar_den(a))));
}

} // namespace hyperpath
