#include "hexaform/invariants/serialize.hpp"

#include "hexaform/errors.hpp"

namespace hexaform::invariants {

using nlohmann::json;

json to_json(const FormInvariants& f)
{
    json factors = json::array();
    for (const auto& x : f.invariant_factors)
        factors.push_back(x.str());
    return {
        {"dim", f.total_dim},
        {"radical", f.radical_dim},
        {"rank", f.rank},
        {"signature", {f.positive, f.negative}},
        {"det", f.determinant.str()},
        {"parity", to_string(f.parity)},
        {"factors", factors},
    };
}

FormInvariants form_invariants_from_json(const json& doc)
{
    try {
        FormInvariants f;
        f.total_dim = doc.at("dim").get<std::size_t>();
        f.radical_dim = doc.at("radical").get<std::size_t>();
        f.rank = doc.at("rank").get<std::size_t>();
        f.positive = doc.at("signature").at(0).get<std::size_t>();
        f.negative = doc.at("signature").at(1).get<std::size_t>();
        f.determinant = BigInt(doc.at("det").get<std::string>());
        const auto parity = doc.at("parity").get<std::string>();
        if (parity != "even" && parity != "odd")
            throw MalformedInput("parity: expected even or odd");
        f.parity = parity == "even" ? Parity::even : Parity::odd;
        for (const auto& x : doc.at("factors"))
            f.invariant_factors.emplace_back(x.get<std::string>());
        return f;
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("form invariants: ") + e.what());
    }
}

json to_json(const FrobeniusSpec& spec)
{
    if (spec.twofold)
        return {{"kind", "double"}, {"m1", spec.m1}, {"m2", spec.m2}};
    return {{"kind", "single"}, {"m", spec.m}};
}

json to_json(const ValueDistribution& d)
{
    json entries = json::array();
    for (const auto& [value, count] : d.counts)
        entries.push_back({{"value", value}, {"count", count.str()}, {"probability", d.probability(value).str()}});
    return {
        {"model", to_string(d.model)},
        {"p", d.spec.p},
        {"n", d.spec.n},
        {"mode", to_json(d.spec)},
        {"entries", entries},
        {"total", d.total.str()},
    };
}

ValueDistribution distribution_from_json(const json& doc)
{
    try {
        ValueDistribution d;
        d.model = parse_value_model(doc.at("model").get<std::string>());
        const auto p = doc.at("p").get<std::uint32_t>();
        const auto n = doc.at("n").get<std::uint32_t>();
        const auto& mode = doc.at("mode");
        if (mode.at("kind") == "double")
            d.spec = FrobeniusSpec::doubled(p, n, mode.at("m1").get<std::uint32_t>(), mode.at("m2").get<std::uint32_t>());
        else
            d.spec = FrobeniusSpec::single(p, n, mode.at("m").get<std::uint32_t>());
        for (const auto& e : doc.at("entries"))
            d.counts[e.at("value").get<std::string>()] = BigInt(e.at("count").get<std::string>());
        d.total = BigInt(doc.at("total").get<std::string>());
        return d;
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("distribution: ") + e.what());
    }
}

} // namespace hexaform::invariants
