#include "cfrac/quadratic.hpp"

#include <cmath>
#include <ostream>

#include "cfrac/error.hpp"

namespace cfrac {

Integer squarefree_part(const Integer& n, Integer& root)
{
    root = 1;
    if (n == 0) return 0;
    Integer m = abs(n);
    const Integer sign = n < 0 ? -1 : 1;
    for (unsigned long p = 2; p < (1UL << 16); p += (p == 2 ? 1 : 2)) {
        const Integer pp = Integer(p) * p;
        if (pp > m) break;
        while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) {
            m /= pp;
            root *= p;
        }
    }
    if (m > 1 && mpz_perfect_square_p(m.get_mpz_t())) {
        Integer s;
        mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
        root *= s;
        m = 1;
    }
    return sign * m;
}

QuadExt::QuadExt(const Rational& a, const Rational& b, const Rational& radicand) : a_(a)
{
    if (b.is_zero() || radicand.is_zero()) return;
    // √(p/q) = √(p·q)/q
    const Integer pq = radicand.num() * radicand.den();
    Integer root;
    const Integer r = squarefree_part(pq, root);
    const Rational coeff = b * Rational(root, radicand.den());
    if (r == 1) {
        a_ += coeff;
        return;
    }
    b_ = coeff;
    d_ = r;
}

QuadExt QuadExt::sqrt(const Rational& x) { return QuadExt(Rational(0), Rational(1), x); }

const Integer& QuadExt::joint_radicand(const QuadExt& o) const
{
    if (b_.is_zero()) return o.d_;
    if (o.b_.is_zero()) return d_;
    if (d_ != o.d_)
        throw Error(ErrorKind::TowerMismatch,
                    "mixing Q(√" + d_.get_str() + ") and Q(√" + o.d_.get_str() + ")");
    return d_;
}

QuadExt QuadExt::conjugate() const
{
    QuadExt r = *this;
    r.b_ = -b_;
    return r;
}

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadExt QuadExt::inverse() const
{
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    const Rational n = norm();
    QuadExt r;
    r.a_ = a_ / n;
    r.b_ = -b_ / n;
    r.d_ = d_;
    return r;
}

int QuadExt::sign() const
{
    if (b_.is_zero()) return a_.sign();
    if (d_ < 0) throw Error(ErrorKind::TowerMismatch, "sign of non-real value " + str());
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a² with b²D.
    const auto c = (a_ * a_) <=> (b_ * b_ * Rational(d_));
    if (c == 0) return 0; // only possible when D was not fully reduced
    return c > 0 ? sa : sb;
}

QuadExt QuadExt::modulus_squared() const
{
    if (b_.is_zero() || d_ < 0) return QuadExt(norm());
    return *this * *this;
}

double QuadExt::to_double() const
{
    if (b_.is_zero()) return a_.to_double();
    if (d_ < 0) throw Error(ErrorKind::TowerMismatch, "to_double of non-real value " + str());
    return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d());
}

std::string QuadExt::str() const
{
    if (b_.is_zero()) return a_.str();
    // Common denominator r, then divide out gcd(p, q, r).
    Integer r;
    mpz_lcm(r.get_mpz_t(), a_.den().get_mpz_t(), b_.den().get_mpz_t());
    Integer p = a_.num() * (r / a_.den());
    Integer q = b_.num() * (r / b_.den());
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_mpz_t());
    p /= g;
    q /= g;
    r /= g;

    const std::string radical = d_ < 0 ? "√(" + d_.get_str() + ")" : "√" + d_.get_str();
    std::string surd;
    const Integer aq = abs(q);
    surd = (aq == 1 ? "" : aq.get_str()) + radical;

    std::string body;
    bool two_terms = false;
    if (p == 0) {
        body = (q < 0 ? "-" : "") + surd;
    } else {
        body = p.get_str() + (q < 0 ? " - " : " + ") + surd;
        two_terms = true;
    }
    if (r == 1) return body;
    return (two_terms ? "(" + body + ")" : body) + "/" + r.get_str();
}

QuadExt& QuadExt::operator+=(const QuadExt& o)
{
    d_ = joint_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o)
{
    d_ = joint_radicand(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o)
{
    const Integer d = joint_radicand(o);
    const Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
    const Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = d;
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o)
{
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    return *this *= o.inverse();
}

QuadExt operator-(const QuadExt& x)
{
    QuadExt r = x;
    r.a_ = -x.a_;
    r.b_ = -x.b_;
    return r;
}

bool operator==(const QuadExt& l, const QuadExt& r)
{
    if (l.a_ != r.a_ || l.b_ != r.b_) return false;
    return l.b_.is_zero() || l.d_ == r.d_;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

std::strong_ordering compare_modulus(const QuadExt& x, const QuadExt& y)
{
    const int s = (x.modulus_squared() - y.modulus_squared()).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

} // namespace cfrac
