#include "hexaform/invariants/distribution.hpp"

#include "hexaform/algebra/gf_linalg.hpp"
#include "hexaform/errors.hpp"
#include "hexaform/hexagon/action.hpp"

#include <json.hpp>

#include <cstdlib>
#include <set>
#include <sstream>

namespace hexaform::invariants {

using algebra::GaloisField;
using Code = GaloisField::Code;

std::string to_string(ValueModel m) { return m == ValueModel::field ? "field" : "tensor"; }

ValueModel parse_value_model(const std::string& s)
{
    if (s == "field")
        return ValueModel::field;
    if (s == "tensor")
        return ValueModel::tensor;
    throw UsageError("unknown value model '" + s + "' (expected field or tensor)");
}

std::string FrobeniusSpec::mode_string() const
{
    if (twofold)
        return "double(m1=" + std::to_string(m1) + ",m2=" + std::to_string(m2) + ")";
    return "single(m=" + std::to_string(m) + ")";
}

BigRational ValueDistribution::probability(const std::string& value) const
{
    const auto it = counts.find(value);
    if (it == counts.end() || total == 0)
        return 0;
    return BigRational(it->second, total);
}

BigRational ValueDistribution::probability_sum() const
{
    BigRational sum = 0;
    for (const auto& [value, count] : counts)
        sum += BigRational(count, total);
    return sum;
}

BigInt default_cap()
{
    const char* env = std::getenv("HEXAFORM_CAP");
    if (!env || !*env)
        return BigInt(10000000);
    try {
        BigInt cap(env);
        if (cap < 1)
            throw UsageError("HEXAFORM_CAP must be positive");
        return cap;
    } catch (const std::runtime_error&) {
        throw UsageError(std::string("HEXAFORM_CAP is not a decimal integer: '") + env + "'");
    }
}

std::size_t permitted_dimension(const complex::Triangulation& t, std::uint32_t p)
{
    return hexagon::solve_permitted(hexagon::build_constraints(t), algebra::make_field(p, 1)).dim();
}

namespace {

using Tensor = std::vector<std::uint32_t>;

// S(λ) for λ ∈ GF(q)^d, with x = F^{ml}(λ), ξ = F^{mg}(λ) on the basis.
class Evaluator {
public:
    Evaluator(const GaloisField& f, std::vector<std::vector<Code>> gram, std::uint32_t latin_power,
              std::uint32_t greek_power)
        : f_(f), gram_(std::move(gram)), lp_(latin_power), gp_(greek_power), d_(gram_.size()),
          lat_(d_), grk_(d_), h_(d_)
    {
        for (std::size_t a = 0; a < d_; ++a) {
            std::vector<std::pair<std::size_t, Code>> row;
            for (std::size_t b = 0; b < d_; ++b)
                if (gram_[a][b])
                    row.emplace_back(b, gram_[a][b]);
            rows_.push_back(std::move(row));
        }
    }

    void load(const std::vector<Code>& lambda)
    {
        for (std::size_t a = 0; a < d_; ++a) {
            lat_[a] = f_.frobenius(lambda[a], lp_);
            grk_[a] = f_.frobenius(lambda[a], gp_);
        }
        for (std::size_t a = 0; a < d_; ++a) {
            Code acc = 0;
            for (const auto& [b, g] : rows_[a])
                acc = f_.add(acc, f_.mul(g, grk_[b]));
            h_[a] = acc;
        }
    }

    Code field_value() const
    {
        Code s = 0;
        for (std::size_t a = 0; a < d_; ++a)
            if (lat_[a] && h_[a])
                s = f_.add(s, f_.mul(lat_[a], h_[a]));
        return s;
    }

    Tensor tensor_value() const
    {
        const std::size_t n = f_.degree();
        const std::uint32_t p = f_.characteristic();
        Tensor t(n * n, 0);
        for (std::size_t a = 0; a < d_; ++a) {
            if (!lat_[a] || !h_[a])
                continue;
            const auto u = f_.coefficients(lat_[a]);
            const auto v = f_.coefficients(h_[a]);
            for (std::size_t r = 0; r < n; ++r)
                if (u[r])
                    for (std::size_t s = 0; s < n; ++s)
                        t[r * n + s] = (t[r * n + s] + u[r] * v[s]) % p;
        }
        return t;
    }

private:
    const GaloisField& f_;
    std::vector<std::vector<Code>> gram_;
    std::vector<std::vector<std::pair<std::size_t, Code>>> rows_;
    std::uint32_t lp_, gp_;
    std::size_t d_;
    std::vector<Code> lat_, grk_, h_;
};

std::string tensor_string(const Tensor& t, std::size_t n)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < n; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t s = 0; s < n; ++s)
            os << (s ? "," : "") << t[r * n + s];
        os << ']';
    }
    os << ']';
    return os.str();
}

// Each coordinate of S, as a GF(p)-valued quadratic form on the nd
// coordinates of λ, is Q_c(v) = vᵀ A_c v. Returns a basis of the subspace K
// with Q_c(v + w) = Q_c(v) for all v, w ∈ K and all c: the common kernel of
// the polar forms A_c + A_cᵀ intersected with the kernel of the (linear)
// restriction of the Q_c to it.
std::vector<std::vector<Code>> constant_directions(const GaloisField& fq, const GaloisField& fp,
                                                   const std::vector<std::vector<Code>>& gram,
                                                   std::uint32_t latin_power, std::uint32_t greek_power,
                                                   ValueModel model)
{
    const std::size_t d = gram.size();
    const std::size_t n = fq.degree();
    const std::uint32_t p = fq.characteristic();
    const std::size_t dim = n * d;

    std::vector<std::vector<std::uint32_t>> f1(n), f2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Code gi = fq.pow(fq.generator_root(), i);
        f1[i] = fq.coefficients(fq.frobenius(gi, latin_power));
        f2[i] = fq.coefficients(fq.frobenius(gi, greek_power));
    }
    // coeff[c][i][j]: coordinate c of the product of basis images i, j.
    std::vector<std::vector<std::vector<std::uint32_t>>> coeff;
    if (model == ValueModel::field) {
        coeff.assign(n, std::vector<std::vector<std::uint32_t>>(n, std::vector<std::uint32_t>(n)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto prod = fq.coefficients(
                    fq.mul(fq.from_coefficients(f1[i]), fq.from_coefficients(f2[j])));
                for (std::size_t c = 0; c < n; ++c)
                    coeff[c][i][j] = prod[c];
            }
    } else {
        coeff.assign(n * n, std::vector<std::vector<std::uint32_t>>(n, std::vector<std::uint32_t>(n)));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        coeff[r * n + s][i][j] = f1[i][r] * f2[j][s] % p;
    }
    const std::size_t components = coeff.size();
    auto entry = [&](std::size_t c, std::size_t u, std::size_t v) -> std::uint32_t {
        return gram[u / n][v / n] * coeff[c][u % n][v % n] % p;
    };

    algebra::CodeMatrix polar(components * dim, dim);
    for (std::size_t c = 0; c < components; ++c)
        for (std::size_t u = 0; u < dim; ++u)
            for (std::size_t v = 0; v < dim; ++v)
                polar(c * dim + u, v) = (entry(c, u, v) + entry(c, v, u)) % p;
    const auto kernel = algebra::nullspace(fp, polar);
    if (kernel.empty())
        return {};

    algebra::CodeMatrix linear(components, kernel.size());
    for (std::size_t c = 0; c < components; ++c)
        for (std::size_t k = 0; k < kernel.size(); ++k) {
            const auto& w = kernel[k];
            std::uint64_t q = 0;
            for (std::size_t u = 0; u < dim; ++u)
                if (w[u])
                    for (std::size_t v = 0; v < dim; ++v)
                        if (w[v])
                            q = (q + std::uint64_t(w[u]) * w[v] % p * entry(c, u, v)) % p;
            linear(c, k) = static_cast<Code>(q);
        }
    std::vector<std::vector<Code>> out;
    for (const auto& combo : algebra::nullspace(fp, linear)) {
        std::vector<Code> v(dim, 0);
        for (std::size_t k = 0; k < kernel.size(); ++k)
            if (combo[k])
                for (std::size_t u = 0; u < dim; ++u)
                    v[u] = static_cast<Code>((v[u] + std::uint64_t(combo[k]) * kernel[k][u]) % p);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

ValueDistribution probability_distribution(const complex::Triangulation& t, const FrobeniusSpec& spec,
                                           ValueModel model, const EnumerationOptions& options)
{
    t.require_signs();
    if (spec.n < 1)
        throw UsageError("extension degree n must be at least 1");
    const auto fp = algebra::make_field(spec.p, 1);
    const auto fq = algebra::make_field(spec.p, spec.n);
    const auto space = hexagon::solve_permitted(hexagon::build_constraints(t), fp);
    const auto gram = hexagon::gram_matrix(t, space);
    const std::size_t d = space.dim();
    const std::size_t n = spec.n;
    const std::uint32_t p = spec.p;

    ValueDistribution out;
    out.model = model;
    out.spec = spec;
    out.total = algebra::ipow(BigInt(fq->order()), static_cast<unsigned>(d));

    Evaluator eval(*fq, gram, spec.latin_power(), spec.greek_power());
    std::map<Code, BigInt> field_counts;
    std::map<Tensor, BigInt> tensor_counts;
    auto record = [&](const BigInt& weight) {
        if (model == ValueModel::field)
            field_counts[eval.field_value()] += weight;
        else
            tensor_counts[eval.tensor_value()] += weight;
    };

    std::vector<Code> lambda(d, 0);
    if (options.brute_force) {
        if (out.total > options.cap)
            throw CapExceeded("enumeration needs " + out.total.str() + " colorings, cap is " + options.cap.str(),
                              out.total.str());
        const Code q = fq->order();
        while (true) {
            eval.load(lambda);
            record(1);
            std::size_t a = 0;
            while (a < d && ++lambda[a] == q)
                lambda[a++] = 0;
            if (a == d)
                break;
        }
    } else {
        const auto fixed = constant_directions(*fq, *fp, gram, spec.latin_power(), spec.greek_power(), model);
        const auto free = algebra::complement_basis(*fp, fixed, n * d);
        const BigInt points = algebra::ipow(BigInt(p), static_cast<unsigned>(free.size()));
        if (points > options.cap)
            throw CapExceeded("enumeration needs " + points.str() + " points, cap is " + options.cap.str(),
                              points.str());
        const BigInt weight = algebra::ipow(BigInt(p), static_cast<unsigned>(fixed.size()));
        // complement_basis returns unit vectors; keep their coordinates.
        std::vector<std::size_t> coords;
        for (const auto& e : free)
            for (std::size_t u = 0; u < e.size(); ++u)
                if (e[u])
                    coords.push_back(u);
        std::vector<std::uint32_t> digits(coords.size(), 0);
        std::vector<std::uint32_t> place(n, 1);
        for (std::size_t i = 1; i < n; ++i)
            place[i] = place[i - 1] * p;
        while (true) {
            std::fill(lambda.begin(), lambda.end(), 0);
            for (std::size_t k = 0; k < coords.size(); ++k)
                lambda[coords[k] / n] += digits[k] * place[coords[k] % n];
            eval.load(lambda);
            record(weight);
            std::size_t k = 0;
            while (k < digits.size() && ++digits[k] == p)
                digits[k++] = 0;
            if (k == digits.size())
                break;
        }
    }

    for (const auto& [code, count] : field_counts)
        out.counts[fq->format(code)] += count;
    for (const auto& [tensor, count] : tensor_counts)
        out.counts[tensor_string(tensor, n)] += count;
    return out;
}

DistributionComparison distribution_equal(const ValueDistribution& a, const ValueDistribution& b)
{
    if (a.model != b.model)
        throw UsageError("cannot compare a " + to_string(a.model) + " distribution with a " + to_string(b.model)
                         + " one");
    if (a.spec != b.spec)
        throw UsageError("cannot compare distributions for " + a.spec.mode_string() + " over GF("
                         + std::to_string(a.spec.p) + "^" + std::to_string(a.spec.n) + ") and "
                         + b.spec.mode_string() + " over GF(" + std::to_string(b.spec.p) + "^"
                         + std::to_string(b.spec.n) + ")");
    DistributionComparison out;
    std::set<std::string> values;
    for (const auto& [v, c] : a.counts)
        values.insert(v);
    for (const auto& [v, c] : b.counts)
        values.insert(v);
    for (const auto& v : values) {
        const auto pa = a.probability(v);
        const auto pb = b.probability(v);
        if (pa != pb) {
            out.equal = false;
            out.differences.push_back("value " + v + ": " + pa.str() + " vs " + pb.str());
        }
    }
    return out;
}

ValueDistribution tensor_pushforward(const ValueDistribution& tensor)
{
    if (tensor.model != ValueModel::tensor)
        throw UsageError("pushforward needs a tensor distribution");
    const auto f = algebra::make_field(tensor.spec.p, tensor.spec.n);
    const std::size_t n = tensor.spec.n;
    ValueDistribution out;
    out.model = ValueModel::field;
    out.spec = tensor.spec;
    out.total = tensor.total;
    std::map<Code, BigInt> counts;
    for (const auto& [key, count] : tensor.counts) {
        const auto rows = nlohmann::json::parse(key);
        Code value = 0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s) {
                const auto entry = rows.at(r).at(s).get<long long>();
                const Code basis = f->mul(f->pow(f->generator_root(), r), f->pow(f->generator_root(), s));
                value = f->add(value, f->mul(f->from_integer(entry), basis));
            }
        counts[value] += count;
    }
    for (const auto& [code, count] : counts)
        out.counts[f->format(code)] += count;
    return out;
}

} // namespace hexaform::invariants
