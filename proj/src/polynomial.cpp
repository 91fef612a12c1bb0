#include "axial/polynomial.hpp"

#include "axial/error.hpp"

#include <cassert>
#include <stdexcept>

namespace axial {

Polynomial::Polynomial(RatVec coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c)
{
    return Polynomial(RatVec{c});
}

Polynomial Polynomial::monomial_t()
{
    return Polynomial(RatVec{Rational(0), Rational(1)});
}

Polynomial Polynomial::linear_root(const Rational& r)
{
    return Polynomial(RatVec{-r, Rational(1)});
}

bool Polynomial::is_monic() const
{
    return !coeffs_.empty() && coeffs_.back() == 1;
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return *this;
    Polynomial out = *this;
    Rational lead = coeffs_.back();
    for (auto& c : out.coeffs_)
        c /= lead;
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const
{
    RatVec out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        out[i] += rhs.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const
{
    RatVec out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        out[i] -= rhs.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const
{
    if (is_zero() || rhs.is_zero())
        return Polynomial();
    RatVec out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const
{
    if (divisor.is_zero())
        throw std::logic_error("polynomial division by zero");
    RatVec rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd)
        return {Polynomial(), *this};
    RatVec quot(coeffs_.size() - divisor.coeffs_.size() + 1, Rational(0));
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        Rational f = rem[k + dd] / divisor.leading();
        quot[k] = f;
        if (f == 0)
            continue;
        for (int j = 0; j <= dd; ++j)
            rem[k + j] -= f * divisor.coeffs_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool Polynomial::divides(const Polynomial& divisor) const
{
    return divmod(divisor).second.is_zero();
}

Rational Polynomial::eval(const Rational& x) const
{
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + coeffs_[i];
    return acc;
}

Matrix Polynomial::eval(const Matrix& m) const
{
    assert(m.is_square());
    Matrix acc(m.rows(), m.cols());
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t d = 0; d < m.rows(); ++d)
            acc.at(d, d) += coeffs_[i];
    }
    return acc;
}

std::string Polynomial::str(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        bool unit = (mag == 1) && i > 0;
        if (!unit)
            out += rational_str(mag);
        if (i > 0) {
            if (!unit)
                out += "*";
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b)
{
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return Polynomial();
    Polynomial g = poly_gcd(a, b);
    return (a * b).divmod(g).first.monic();
}

Polynomial minimal_polynomial(const Matrix& m)
{
    if (!m.is_square())
        throw input_error("minimal polynomial requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return Polynomial::constant(Rational(1));

    Polynomial result = Polynomial::constant(Rational(1));
    for (std::size_t i = 0; i < n && static_cast<std::size_t>(result.degree()) < n; ++i) {
        // Krylov chain of e_i: stop at the first linear dependence.
        RatVec v(n, Rational(0));
        v[i] = 1;
        std::vector<RatVec> chain{v};
        for (;;) {
            RatVec next = m.apply(chain.back());
            if (auto coeffs = solve_combination(chain, next)) {
                RatVec poly;
                poly.reserve(chain.size() + 1);
                for (const auto& c : *coeffs)
                    poly.push_back(-c);
                poly.push_back(Rational(1));
                result = poly_lcm(result, Polynomial(std::move(poly)));
                break;
            }
            chain.push_back(std::move(next));
        }
    }
    return result;
}

} // namespace axial
