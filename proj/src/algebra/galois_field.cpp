#include "hexaform/algebra/galois_field.hpp"

#include "hexaform/errors.hpp"

#include <sstream>

namespace hexaform::algebra {

namespace {

constexpr std::uint32_t kTableLimit = 1u << 16;

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = (lead * b[i]) % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    if (n > 1)
        out.push_back(n);
    return out;
}

} // namespace

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p)
{
    Poly f = poly;
    trim(f);
    if (f.size() < 2)
        return false;
    const std::size_t n = f.size() - 1;
    if (n == 1)
        return true;
    // Trial division by every monic polynomial of degree 1..n/2.
    for (std::size_t d = 1; d <= n / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i)
            count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty())
                return false;
        }
    }
    return true;
}

Field make_field(std::uint32_t p, std::uint32_t n)
{
    if (!is_prime(p))
        throw InvalidPrime("characteristic " + std::to_string(p) + " is not prime");
    if (n == 0)
        throw UsageError("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        q *= p;
        if (q >= (1ull << 31))
            throw UsageError("field order too large");
    }
    // Candidates in lexicographic order: the highest non-leading coefficient
    // is the most significant digit of idx.
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        std::vector<std::uint32_t> mod(n + 1);
        std::uint64_t t = idx;
        for (std::uint32_t i = 0; i < n; ++i) {
            mod[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        mod[n] = 1;
        if (is_irreducible(mod, p))
            return std::make_shared<const GaloisField>(p, n, std::move(mod));
    }
    throw Error("no irreducible polynomial found");
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), q_(1), modulus_(std::move(modulus))
{
    if (modulus_.size() != n_ + 1 || modulus_.back() != 1)
        throw UsageError("modulus must be monic of degree n");
    powers_.resize(n_ + 1);
    for (std::uint32_t i = 0; i <= n_; ++i) {
        powers_[i] = q_;
        if (i < n_)
            q_ *= p_;
    }
    if (q_ > kTableLimit)
        return;

    // Find a primitive element and build log tables.
    const std::uint64_t group = q_ - 1;
    const auto factors = prime_factors(group);
    auto slow_pow = [&](Code a, std::uint64_t e) {
        Code r = 1;
        while (e) {
            if (e & 1u)
                r = mul_poly(r, a);
            a = mul_poly(a, a);
            e >>= 1u;
        }
        return r;
    };
    Code primitive = 1;
    for (Code c = 1; c < q_; ++c) {
        bool ok = true;
        for (auto r : factors)
            if (slow_pow(c, group / r) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            primitive = c;
            break;
        }
    }
    exp_.resize(group == 0 ? 1 : group);
    log_.assign(q_, 0);
    Code x = 1;
    for (std::uint64_t i = 0; i < group; ++i) {
        exp_[i] = x;
        log_[x] = static_cast<std::uint32_t>(i);
        x = mul_poly(x, primitive);
    }
}

GaloisField::Code GaloisField::generator_root() const { return n_ == 1 ? from_integer(-modulus_[0]) : p_; }

GaloisField::Code GaloisField::add(Code a, Code b) const
{
    if (p_ == 2)
        return a ^ b;
    if (n_ == 1)
        return (a + b) % p_;
    Code r = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
        const std::uint32_t da = (a / powers_[i]) % p_;
        const std::uint32_t db = (b / powers_[i]) % p_;
        r += ((da + db) % p_) * powers_[i];
    }
    return r;
}

GaloisField::Code GaloisField::neg(Code a) const
{
    if (p_ == 2)
        return a;
    Code r = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
        const std::uint32_t da = (a / powers_[i]) % p_;
        r += ((p_ - da) % p_) * powers_[i];
    }
    return r;
}

GaloisField::Code GaloisField::sub(Code a, Code b) const { return add(a, neg(b)); }

GaloisField::Code GaloisField::mul_poly(Code a, Code b) const
{
    if (n_ == 1)
        return static_cast<Code>((static_cast<std::uint64_t>(a) * b) % p_);
    const auto ca = coefficients(a);
    const auto cb = coefficients(b);
    Poly prod(2 * n_ - 1, 0);
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (!ca[i])
            continue;
        for (std::uint32_t j = 0; j < n_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
    }
    auto rem = poly_mod(std::move(prod), modulus_, p_);
    rem.resize(n_, 0);
    return from_coefficients(rem);
}

GaloisField::Code GaloisField::mul(Code a, Code b) const
{
    if (a == 0 || b == 0)
        return 0;
    if (exp_.empty())
        return mul_poly(a, b);
    const std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
    return exp_[s % (q_ - 1)];
}

GaloisField::Code GaloisField::inv(Code a) const
{
    if (a == 0)
        throw UsageError("inverse of zero");
    return pow(a, q_ - 2);
}

GaloisField::Code GaloisField::pow(Code a, std::uint64_t e) const
{
    if (e == 0)
        return 1;
    if (a == 0)
        return 0;
    if (!exp_.empty())
        return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
    Code r = 1;
    while (e) {
        if (e & 1u)
            r = mul_poly(r, a);
        a = mul_poly(a, a);
        e >>= 1u;
    }
    return r;
}

GaloisField::Code GaloisField::frobenius(Code a, std::uint32_t m) const
{
    // a^{p^n} = a, so only m mod n matters.
    Code r = a;
    for (std::uint32_t i = 0; i < m % n_; ++i)
        r = pow(r, p_);
    return r;
}

GaloisField::Code GaloisField::from_integer(long long v) const
{
    long long r = v % static_cast<long long>(p_);
    if (r < 0)
        r += p_;
    return static_cast<Code>(r);
}

std::vector<std::uint32_t> GaloisField::coefficients(Code a) const
{
    std::vector<std::uint32_t> c(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

GaloisField::Code GaloisField::from_coefficients(const std::vector<std::uint32_t>& c) const
{
    if (c.size() != n_)
        throw UsageError("coefficient count must equal the extension degree");
    Code r = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (c[i] >= p_)
            throw UsageError("coefficient out of range");
        r += c[i] * powers_[i];
    }
    return r;
}

std::string GaloisField::format(Code a) const
{
    if (n_ == 1)
        return std::to_string(a);
    if (a == 0)
        return "0";
    const auto c = coefficients(a);
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (!c[i])
            continue;
        if (!first)
            os << '+';
        first = false;
        if (i == 0) {
            os << c[i];
            continue;
        }
        if (c[i] != 1)
            os << c[i];
        os << 'g';
        if (i > 1)
            os << '^' << i;
    }
    return os.str();
}

std::string GaloisField::modulus_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
        const auto c = modulus_[i];
        if (!c)
            continue;
        if (!first)
            os << '+';
        first = false;
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != 1)
            os << c;
        os << 'x';
        if (i > 1)
            os << '^' << i;
    }
    return os.str();
}

GFElem::GFElem(Field field, GaloisField::Code code) : field_(std::move(field)), code_(code)
{
    if (!field_)
        throw UsageError("GFElem: null field");
    if (code_ >= field_->order())
        throw UsageError("GFElem: code out of range");
}

namespace {

const GaloisField& common_field(const GFElem& a, const GFElem& b)
{
    if (!a.field() || !b.field())
        throw UsageError("GFElem: uninitialized element");
    if (a.field() != b.field() && !a.field()->same_as(*b.field()))
        throw UsageError("GFElem: elements of different fields");
    return *a.field();
}

} // namespace

GFElem GFElem::inverse() const { return {field_, field_->inv(code_)}; }

GFElem operator+(const GFElem& a, const GFElem& b) { return {a.field_, common_field(a, b).add(a.code_, b.code_)}; }
GFElem operator-(const GFElem& a, const GFElem& b) { return {a.field_, common_field(a, b).sub(a.code_, b.code_)}; }
GFElem operator*(const GFElem& a, const GFElem& b) { return {a.field_, common_field(a, b).mul(a.code_, b.code_)}; }
GFElem operator/(const GFElem& a, const GFElem& b)
{
    const auto& f = common_field(a, b);
    return {a.field_, f.mul(a.code_, f.inv(b.code_))};
}
GFElem operator-(const GFElem& a) { return {a.field_, a.field_->neg(a.code_)}; }

bool operator==(const GFElem& a, const GFElem& b)
{
    return a.code_ == b.code_ && common_field(a, b).order() > 0;
}

} // namespace hexaform::algebra
