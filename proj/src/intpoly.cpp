#include "corona/intpoly.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>
#include <utility>

namespace corona {

namespace {
Int int_gcd(Int a, Int b) {
    using boost::multiprecision::gcd;
    Int g = gcd(a, b);
    return g < 0 ? Int(-g) : g;
}
}  // namespace

IntPoly::IntPoly(Int constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { normalize(); }

IntPoly IntPoly::monomial(Int coefficient, int power) {
    if (coefficient == 0) return {};
    std::vector<Int> c(static_cast<std::size_t>(power) + 1, Int(0));
    c.back() = std::move(coefficient);
    return IntPoly(std::move(c));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::coeff(int k) const {
    static const Int zero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Int& IntPoly::leading() const {
    static const Int zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int IntPoly::eval_homogeneous(const Int& num, const Int& den) const {
    if (is_zero()) return 0;
    // sum c_k num^k den^(deg-k)
    Int acc = 0;
    Int num_pow = 1;
    std::vector<Int> den_pow(coeffs_.size());
    den_pow.back() = 1;
    for (int k = static_cast<int>(coeffs_.size()) - 2; k >= 0; --k)
        den_pow[static_cast<std::size_t>(k)] = den_pow[static_cast<std::size_t>(k) + 1] * den;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        acc += coeffs_[k] * num_pow * den_pow[k];
        num_pow *= num;
    }
    return acc;
}

double IntPoly::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
    return acc;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const Int& c : coeffs_) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    if (g == 1) return *this;
    std::vector<Int> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] / g;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
    if (degree() <= 0) return {};
    std::vector<Int> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<int>(i);
    return IntPoly(std::move(c));
}

std::vector<double> IntPoly::to_doubles() const {
    std::vector<double> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i].convert_to<double>();
    return c;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (Int& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Int> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& lhs, const Int& scalar) {
    if (scalar == 0) return {};
    IntPoly r = lhs;
    for (Int& c : r.coeffs_) c *= scalar;
    return r;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = coeff(k);
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || mag != 1) os << mag;
        if (k > 0) {
            if (mag != 1) os << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

IntPoly divide_exact(const IntPoly& numerator, const IntPoly& divisor) {
    if (divisor.is_zero()) throw std::logic_error("divide_exact: zero divisor");
    if (numerator.is_zero()) return {};
    int dn = numerator.degree(), dd = divisor.degree();
    if (dn < dd) throw std::logic_error("divide_exact: division not exact");
    std::vector<Int> rem = numerator.coeffs();
    std::vector<Int> quot(static_cast<std::size_t>(dn - dd) + 1, Int(0));
    const Int& lead = divisor.leading();
    for (int k = dn - dd; k >= 0; --k) {
        Int& top = rem[static_cast<std::size_t>(k + dd)];
        if (top == 0) continue;
        if (top % lead != 0) throw std::logic_error("divide_exact: division not exact");
        Int q = top / lead;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeff(j);
        quot[static_cast<std::size_t>(k)] = std::move(q);
    }
    for (const Int& c : rem)
        if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return IntPoly(std::move(quot));
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    int db = b.degree();
    const Int& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        Int la = a.leading();
        a = a * lb - b * IntPoly::monomial(la, shift);
    }
    return a;
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    auto positive = [](IntPoly p) { return p.leading() < 0 ? -p : p; };
    if (a.is_zero()) return positive(std::move(b));
    if (b.is_zero()) return positive(std::move(a));
    Int content = int_gcd(a.content(), b.content());
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    return positive(std::move(a)) * content;
}

IntPoly taylor_shift(const IntPoly& p, const Int& shift) {
    if (p.is_zero() || shift == 0) return p;
    // Horner in (x + shift).
    IntPoly result(p.leading());
    for (int k = p.degree() - 1; k >= 0; --k) {
        std::vector<Int> next(static_cast<std::size_t>(result.degree()) + 2, Int(0));
        for (int j = 0; j <= result.degree(); ++j) {
            next[static_cast<std::size_t>(j) + 1] += result.coeff(j);
            next[static_cast<std::size_t>(j)] += result.coeff(j) * shift;
        }
        next[0] += p.coeff(k);
        result = IntPoly(std::move(next));
    }
    return result;
}

IntPoly deflate_root(const IntPoly& p, const Int& root) {
    if (p.degree() < 1) throw std::logic_error("deflate_root: degree < 1");
    std::vector<Int> q(static_cast<std::size_t>(p.degree()), Int(0));
    Int carry = 0;
    for (int k = p.degree(); k >= 1; --k) {
        carry = carry * root + p.coeff(k);
        q[static_cast<std::size_t>(k - 1)] = carry;
    }
    if (carry * root + p.coeff(0) != 0) throw std::logic_error("deflate_root: not a root");
    return IntPoly(std::move(q));
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero()) fail(errc::zero_polynomial, "square-free decomposition of the zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly a = p.primitive_part();
    if (a.leading() < 0) a = -a;
    if (a.degree() == 0) return out;
    IntPoly g = poly_gcd(a, a.derivative());
    if (g.degree() == 0) {
        out.emplace_back(std::move(a), 1);
        return out;
    }
    IntPoly w = divide_exact(a, g);
    IntPoly y = divide_exact(a.derivative(), g);
    int mult = 1;
    while (w.degree() > 0) {
        IntPoly z = y - w.derivative();
        IntPoly gi = z.is_zero() ? w : poly_gcd(w, z);
        if (gi.degree() > 0) out.emplace_back(gi, mult);
        w = divide_exact(w, gi);
        y = z.is_zero() ? IntPoly() : divide_exact(z, gi);
        ++mult;
    }
    return out;
}

RationalFn reduce_rational_fn(IntPoly num, IntPoly den) {
    if (den.is_zero()) fail(errc::zero_denominator, "rational function with zero denominator");
    if (num.is_zero()) return {IntPoly::zero(), IntPoly::one()};
    IntPoly g = poly_gcd(num, den);
    num = divide_exact(num, g);
    den = divide_exact(den, g);
    if (den.leading() < 0) {
        num = -num;
        den = -den;
    }
    return {std::move(num), std::move(den)};
}

std::string RationalFn::to_string() const {
    return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

}  // namespace corona
