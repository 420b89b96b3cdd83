#ifndef MCINV_SCALAR_HPP
#define MCINV_SCALAR_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mcinv/error.hpp"

namespace mcinv {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline int sign(const Rational& q) { return sgn(q); }

/// The real field Q(2cos(pi/m)), stored as its monic minimal polynomial plus an
/// isolating rational interval for the distinguished root 2cos(pi/m).
///
/// m <= 3 gives Q itself (degree 1). Fields are interned per m, so two scalars
/// share a field iff their field pointers are equal.
class NumberField {
public:
    static std::shared_ptr<const NumberField> real_cyclotomic(int m)
    {
        static std::mutex mutex;
        static std::map<int, std::shared_ptr<const NumberField>> registry;
        if (m < 1) throw Error("field tag must be positive, got " + std::to_string(m));
        std::lock_guard<std::mutex> lock(mutex);
        auto it = registry.find(m);
        if (it != registry.end()) return it->second;
        auto field = std::shared_ptr<const NumberField>(new NumberField(m));
        registry.emplace(m, field);
        return field;
    }

    static std::shared_ptr<const NumberField> rationals() { return real_cyclotomic(1); }

    int tag() const { return m_; }
    int degree() const { return static_cast<int>(min_poly_.size()) - 1; }

    /// Monic, coefficients from x^0 upwards.
    const std::vector<Rational>& min_poly() const { return min_poly_; }

    /// Value of the generator when the field is Q.
    const Rational& rational_generator() const { return rational_value_; }

    const Rational& isolating_lo() const { return lo_; }
    const Rational& isolating_hi() const { return hi_; }

    double generator_value() const { return 2.0 * std::cos(std::numbers::pi / m_); }

    Rational eval_min_poly(const Rational& x) const
    {
        Rational acc = 0;
        for (auto it = min_poly_.rbegin(); it != min_poly_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

private:
    explicit NumberField(int m) : m_(m)
    {
        min_poly_ = minimal_polynomial(m);
        if (degree() == 1) {
            rational_value_ = -min_poly_[0];
            lo_ = hi_ = rational_value_;
            return;
        }
        // Conjugates are 2cos(k*pi/m), k odd and coprime to m; the nearest one
        // to 2cos(pi/m) is 2cos(3*pi/m), at distance 4 sin(2pi/m) sin(pi/m).
        const double x = generator_value();
        const double gap = 4.0 * std::sin(2.0 * std::numbers::pi / m) * std::sin(std::numbers::pi / m);
        const double half = gap / 8.0;
        lo_ = Rational(x - half);
        hi_ = Rational(x + half);
        if (sign(eval_min_poly(lo_)) * sign(eval_min_poly(hi_)) >= 0)
            throw Error("could not isolate 2cos(pi/" + std::to_string(m) + ")");
    }

    // Minimal polynomial of 2cos(pi/m) = z + 1/z, z a primitive 2m-th root of unity,
    // obtained from the cyclotomic polynomial Phi_{2m}(z) = z^d Q(z + 1/z).
    static std::vector<Rational> minimal_polynomial(int m)
    {
        if (m == 1) return {Rational(2), Rational(1)};   // x + 2
        if (m == 2) return {Rational(0), Rational(1)};   // x
        if (m == 3) return {Rational(-1), Rational(1)};  // x - 1
        const auto phi = cyclotomic(2 * m);
        const std::size_t d = (phi.size() - 1) / 2;
        // Dickson-type polynomials: D_0 = 2, D_1 = x, D_{k+1} = x D_k - D_{k-1},
        // with D_k(z + 1/z) = z^k + z^-k.
        std::vector<std::vector<Integer>> dk(d + 1);
        dk[0] = {Integer(2)};
        if (d >= 1) dk[1] = {Integer(0), Integer(1)};
        for (std::size_t k = 2; k <= d; ++k) {
            std::vector<Integer> next(k + 1, Integer(0));
            for (std::size_t i = 0; i < dk[k - 1].size(); ++i) next[i + 1] += dk[k - 1][i];
            for (std::size_t i = 0; i < dk[k - 2].size(); ++i) next[i] -= dk[k - 2][i];
            dk[k] = std::move(next);
        }
        std::vector<Integer> q(d + 1, Integer(0));
        q[0] += phi[d];
        for (std::size_t k = 1; k <= d; ++k)
            for (std::size_t i = 0; i < dk[k].size(); ++i) q[i] += phi[d + k] * dk[k][i];
        std::vector<Rational> out;
        out.reserve(q.size());
        for (auto& c : q) out.emplace_back(c);
        return out;
    }

    static std::vector<Integer> cyclotomic(int n)
    {
        // z^n - 1 divided by Phi_d for every proper divisor d of n.
        std::vector<Integer> num(static_cast<std::size_t>(n) + 1, Integer(0));
        num[0] = -1;
        num[static_cast<std::size_t>(n)] = 1;
        for (int d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            num = divide_exact(num, cyclotomic(d));
        }
        return num;
    }

    static std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den)
    {
        const std::size_t dn = den.size() - 1;
        std::vector<Integer> quot(num.size() - dn, Integer(0));
        for (std::size_t k = num.size(); k-- > dn;) {
            const Integer c = num[k];  // den is monic
            quot[k - dn] = c;
            for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
        }
        return quot;
    }

    int m_;
    std::vector<Rational> min_poly_;
    Rational rational_value_;
    Rational lo_, hi_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Exact element of Q(2cos(pi/m)): a polynomial of degree < d in the generator.
class AlgebraicScalar {
public:
    AlgebraicScalar() : AlgebraicScalar(NumberField::rationals()) {}

    explicit AlgebraicScalar(FieldPtr field) : field_(std::move(field)), c_(static_cast<std::size_t>(field_->degree()))
    {}

    AlgebraicScalar(FieldPtr field, const Rational& value) : AlgebraicScalar(std::move(field)) { c_[0] = value; }

    AlgebraicScalar(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)), c_(std::move(coeffs))
    {
        if (c_.size() > static_cast<std::size_t>(field_->degree())) c_ = reduce(c_);
        c_.resize(static_cast<std::size_t>(field_->degree()));
    }

    /// The generator 2cos(pi/m) itself.
    static AlgebraicScalar generator(const FieldPtr& field)
    {
        if (field->degree() == 1) return {field, field->rational_generator()};
        AlgebraicScalar g(field);
        g.c_[1] = 1;
        return g;
    }

    const FieldPtr& field() const { return field_; }
    int field_tag() const { return field_->tag(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const
    {
        for (const auto& c : c_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const
    {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    const Rational& rational_part() const { return c_[0]; }

    AlgebraicScalar operator-() const
    {
        AlgebraicScalar r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    AlgebraicScalar& operator+=(const AlgebraicScalar& o)
    {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    AlgebraicScalar& operator-=(const AlgebraicScalar& o)
    {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    AlgebraicScalar& operator*=(const AlgebraicScalar& o)
    {
        check_same(o);
        if (c_.size() == 1) {
            c_[0] *= o.c_[0];
            return *this;
        }
        std::vector<Rational> prod(2 * c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
        }
        c_ = reduce(prod);
        c_.resize(static_cast<std::size_t>(field_->degree()));
        return *this;
    }

    AlgebraicScalar& operator*=(const Rational& q)
    {
        for (auto& c : c_) c *= q;
        return *this;
    }

    AlgebraicScalar& operator/=(const AlgebraicScalar& o) { return *this *= o.inverse(); }

    friend AlgebraicScalar operator+(AlgebraicScalar a, const AlgebraicScalar& b) { return a += b; }
    friend AlgebraicScalar operator-(AlgebraicScalar a, const AlgebraicScalar& b) { return a -= b; }
    friend AlgebraicScalar operator*(AlgebraicScalar a, const AlgebraicScalar& b) { return a *= b; }
    friend AlgebraicScalar operator*(AlgebraicScalar a, const Rational& q) { return a *= q; }
    friend AlgebraicScalar operator/(AlgebraicScalar a, const AlgebraicScalar& b) { return a /= b; }

    friend bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b)
    {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against the
    /// minimal polynomial.
    AlgebraicScalar inverse() const
    {
        if (is_zero()) throw Error("division by zero in Q(2cos(pi/" + std::to_string(field_tag()) + "))");
        if (c_.size() == 1) return {field_, Rational(1) / c_[0]};
        using Poly = std::vector<Rational>;
        auto trim = [](Poly& p) {
            while (p.size() > 1 && p.back() == 0) p.pop_back();
        };
        auto sub_scaled_shift = [&](Poly& p, const Poly& q, const Rational& s, std::size_t shift) {
            if (p.size() < q.size() + shift) p.resize(q.size() + shift);
            for (std::size_t i = 0; i < q.size(); ++i) p[i + shift] -= s * q[i];
        };
        Poly r0 = field_->min_poly(), r1 = c_;
        Poly s0{Rational(0)}, s1{Rational(1)};
        trim(r0);
        trim(r1);
        while (!(r1.size() == 1 && r1[0] == 0)) {
            Poly q;
            Poly rem = r0;
            if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, Rational(0));
            while (rem.size() >= r1.size() && !(rem.size() == 1 && rem[0] == 0)) {
                const std::size_t shift = rem.size() - r1.size();
                const Rational f = rem.back() / r1.back();
                q[shift] += f;
                sub_scaled_shift(rem, r1, f, shift);
                rem.pop_back();
                trim(rem);
                if (rem.empty()) rem.push_back(0);
            }
            Poly s2 = s0;
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                sub_scaled_shift(s2, s1, q[i], i);
            }
            trim(s2);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 is a nonzero constant (gcd), s0 * a == r0 mod psi.
        const Rational g = r0[0];
        for (auto& c : s0) c /= g;
        return {field_, reduce(s0)};
    }

    /// Sign under the embedding generator -> 2cos(pi/m); exact.
    int sign() const
    {
        if (is_zero()) return 0;
        if (c_.size() == 1) return mcinv::sign(c_[0]);
        Rational lo = field_->isolating_lo(), hi = field_->isolating_hi();
        const int s_lo = mcinv::sign(field_->eval_min_poly(lo));
        for (;;) {
            auto [vlo, vhi] = eval_interval(lo, hi);
            if (vlo > 0) return 1;
            if (vhi < 0) return -1;
            Rational mid = (lo + hi) / 2;
            const int s_mid = mcinv::sign(field_->eval_min_poly(mid));
            if (s_mid == 0) {
                lo = hi = mid;  // generator is rational: cannot happen for degree > 1
                continue;
            }
            if (s_mid == s_lo)
                lo = mid;
            else
                hi = mid;
        }
    }

    double to_double() const
    {
        const double x = field_->degree() == 1 ? field_->rational_generator().get_d() : field_->generator_value();
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
        return acc;
    }

    std::string str() const
    {
        if (c_.size() == 1) return to_string(c_[0]);
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!first) os << (c_[i] > 0 ? " + " : " - ");
            else if (c_[i] < 0) os << "-";
            first = false;
            Rational a = abs(c_[i]);
            if (i == 0 || a != 1) os << to_string(a);
            if (i > 0) os << (a != 1 ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
        }
        if (first) os << "0";
        return os.str();
    }

    /// Total order on representations (not the real order); used for lookup keys.
    friend bool repr_less(const AlgebraicScalar& a, const AlgebraicScalar& b)
    {
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            const int c = cmp(a.c_[i], b.c_[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }

private:
    void check_same(const AlgebraicScalar& o) const
    {
        if (field_ != o.field_)
            throw Error("mismatched field tags " + std::to_string(field_tag()) + " and " +
                        std::to_string(o.field_tag()));
    }

    std::vector<Rational> reduce(std::vector<Rational> p) const
    {
        const auto& psi = field_->min_poly();
        const std::size_t d = psi.size() - 1;
        for (std::size_t k = p.size(); k-- > d;) {
            const Rational c = p[k];
            if (c == 0) continue;
            for (std::size_t i = 0; i <= d; ++i) p[k - d + i] -= c * psi[i];
        }
        if (p.size() > d) p.resize(d);
        return p;
    }

    std::pair<Rational, Rational> eval_interval(const Rational& lo, const Rational& hi) const
    {
        // Horner in interval arithmetic; lo > 0 is not assumed.
        Rational alo = c_.back(), ahi = c_.back();
        for (std::size_t k = c_.size() - 1; k-- > 0;) {
            Rational p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
            Rational mn = p1, mx = p1;
            for (const Rational* p : {&p2, &p3, &p4}) {
                if (*p < mn) mn = *p;
                if (*p > mx) mx = *p;
            }
            alo = mn + c_[k];
            ahi = mx + c_[k];
        }
        return {alo, ahi};
    }

    FieldPtr field_;
    std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const AlgebraicScalar& a) { return os << a.str(); }

inline int compare(const AlgebraicScalar& a, const AlgebraicScalar& b) { return (a - b).sign(); }

}  // namespace mcinv

#endif  // MCINV_SCALAR_HPP
