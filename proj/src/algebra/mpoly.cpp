#include "hexaform/algebra/mpoly.hpp"

#include "hexaform/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hexaform::algebra {

bool MPoly::GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const
{
    const auto da = std::accumulate(a.begin(), a.end(), 0ull);
    const auto db = std::accumulate(b.begin(), b.end(), 0ull);
    if (da != db)
        return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MPoly::MPoly(std::vector<std::string> variables, std::uint32_t modulus)
    : vars_(std::move(variables)), modulus_(modulus)
{
    if (modulus_ != 0 && !is_prime(modulus_))
        throw InvalidPrime("MPoly: coefficient modulus must be 0 or prime");
}

MPoly MPoly::constant(std::vector<std::string> variables, std::uint32_t modulus, const BigInt& c)
{
    MPoly p(std::move(variables), modulus);
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

MPoly MPoly::variable(std::vector<std::string> variables, std::uint32_t modulus, std::size_t index)
{
    MPoly p(std::move(variables), modulus);
    if (index >= p.vars_.size())
        throw UsageError("MPoly: variable index out of range");
    Exponents e(p.vars_.size(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

MPoly MPoly::variable(std::vector<std::string> variables, std::uint32_t modulus, std::string_view name)
{
    const auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end())
        throw UsageError("MPoly: undeclared variable '" + std::string(name) + "'");
    const auto index = static_cast<std::size_t>(it - variables.begin());
    return variable(std::move(variables), modulus, index);
}

void MPoly::add_term(const Exponents& e, const BigInt& c)
{
    BigInt v = c;
    if (modulus_)
        v = mod_floor(v, modulus_);
    if (v == 0)
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, std::move(v));
        return;
    }
    it->second += v;
    if (modulus_)
        it->second = mod_floor(it->second, modulus_);
    if (it->second == 0)
        terms_.erase(it);
}

void MPoly::check_compatible(const MPoly& other) const
{
    if (vars_ != other.vars_ || modulus_ != other.modulus_)
        throw UsageError("MPoly: incompatible variable lists or coefficient rings");
}

int MPoly::degree() const
{
    if (terms_.empty())
        return -1;
    const auto& e = terms_.begin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

bool MPoly::is_homogeneous() const
{
    const int d = degree();
    for (const auto& [e, c] : terms_)
        if (static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)) != d)
            return false;
    return true;
}

BigInt MPoly::coefficient(const Exponents& e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

MPoly MPoly::operator-() const { return scaled(-1); }

MPoly MPoly::scaled(const BigInt& c) const
{
    MPoly out(vars_, modulus_);
    for (const auto& [e, v] : terms_)
        out.add_term(e, v * c);
    return out;
}

MPoly operator+(const MPoly& a, const MPoly& b)
{
    a.check_compatible(b);
    MPoly out = a;
    for (const auto& [e, v] : b.terms_)
        out.add_term(e, v);
    return out;
}

MPoly operator-(const MPoly& a, const MPoly& b)
{
    a.check_compatible(b);
    MPoly out = a;
    for (const auto& [e, v] : b.terms_)
        out.add_term(e, -v);
    return out;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    a.check_compatible(b);
    MPoly out(a.vars_, a.modulus_);
    MPoly::Exponents e(a.vars_.size());
    for (const auto& [ea, va] : a.terms_)
        for (const auto& [eb, vb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, va * vb);
        }
    return out;
}

MPoly MPoly::pow(unsigned e) const
{
    MPoly result = constant(vars_, modulus_, 1);
    MPoly base = *this;
    while (e) {
        if (e & 1u)
            result = result * base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return result;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const
{
    if (images.size() != vars_.size())
        throw UsageError("MPoly::substitute: one image per variable required");
    if (images.empty())
        return *this;
    const auto& target_vars = images.front().vars_;
    const auto target_mod = images.front().modulus_;
    for (const auto& im : images)
        if (im.vars_ != target_vars || im.modulus_ != target_mod)
            throw UsageError("MPoly::substitute: images must share one ring");
    MPoly out(target_vars, target_mod);
    for (const auto& [e, c] : terms_) {
        MPoly term = constant(target_vars, target_mod, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                term = term * images[i].pow(e[i]);
        out = out + term;
    }
    return out;
}

MPoly MPoly::reduced_mod(std::uint32_t p) const
{
    if (modulus_ == p)
        return *this;
    if (modulus_ != 0)
        throw UsageError("MPoly::reduced_mod: already over a different field");
    MPoly out(vars_, p);
    for (const auto& [e, c] : terms_)
        out.add_term(e, c);
    return out;
}

MPoly MPoly::reduce_exponents(std::uint64_t q) const
{
    if (q < 2)
        throw UsageError("MPoly::reduce_exponents: field order must be at least 2");
    MPoly out(vars_, modulus_);
    for (const auto& [e, c] : terms_) {
        Exponents r = e;
        for (auto& x : r)
            while (x >= q)
                x -= static_cast<std::uint32_t>(q - 1);
        out.add_term(r, c);
    }
    return out;
}

GFElem MPoly::evaluate(const std::vector<GFElem>& values) const
{
    if (values.size() != vars_.size() || values.empty())
        throw UsageError("MPoly::evaluate: one value per variable required");
    const Field& f = values.front().field();
    if (modulus_ != 0 && modulus_ != f->characteristic())
        throw UsageError("MPoly::evaluate: field characteristic mismatch");
    GFElem sum = GFElem::zero(f);
    for (const auto& [e, c] : terms_) {
        GFElem term = GFElem::from_integer(f, static_cast<long long>(mod_floor(c, f->characteristic())));
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                term = term * values[i].pow(e[i]);
        sum = sum + term;
    }
    return sum;
}

BigInt MPoly::evaluate(const std::vector<BigInt>& values) const
{
    if (values.size() != vars_.size())
        throw UsageError("MPoly::evaluate: one value per variable required");
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) {
        BigInt term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                term *= ipow(values[i], e[i]);
        sum += term;
    }
    return modulus_ ? mod_floor(sum, modulus_) : sum;
}

std::string MPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = c;
        if (first) {
            if (c < 0) {
                os << '-';
                mag = -c;
            }
        } else if (c < 0) {
            os << " - ";
            mag = -c;
        } else {
            os << " + ";
        }
        first = false;

        std::ostringstream mono;
        bool first_var = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i])
                continue;
            if (!first_var)
                mono << '*';
            first_var = false;
            mono << vars_[i];
            if (e[i] > 1)
                mono << '^' << e[i];
        }
        const std::string m = mono.str();
        if (m.empty())
            os << mag;
        else if (mag == 1)
            os << m;
        else
            os << mag << '*' << m;
    }
    return os.str();
}

bool operator==(const MPoly& a, const MPoly& b)
{
    return a.vars_ == b.vars_ && a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars, std::uint32_t modulus)
        : text_(text), vars_(vars), modulus_(modulus)
    {
    }

    MPoly run()
    {
        MPoly p = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw UsageError("MPoly::parse: " + msg + " at offset " + std::to_string(pos_));
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_primary()
    {
        const char c = peek();
        return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    MPoly expr()
    {
        MPoly acc = term();
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    MPoly term()
    {
        MPoly acc = factor();
        for (;;) {
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (starts_primary()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    MPoly factor()
    {
        MPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            const auto start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    MPoly primary()
    {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            MPoly inner = expr();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const auto start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return MPoly::constant(vars_, modulus_, BigInt(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const auto start = pos_;
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return MPoly::variable(vars_, modulus_, text_.substr(start, pos_ - start));
        }
        fail("expected a term");
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::uint32_t modulus_;
    std::size_t pos_ = 0;
};

} // namespace

MPoly MPoly::parse(std::string_view text, std::vector<std::string> variables, std::uint32_t modulus)
{
    return Parser(text, variables, modulus).run();
}

} // namespace hexaform::algebra
