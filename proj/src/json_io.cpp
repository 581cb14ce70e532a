#include "monoalg/json_io.hpp"

#include "monoalg/errors.hpp"
#include "monoalg/parse.hpp"

namespace monoalg {

using nlohmann::json;

json form_to_json(const CanonicalForm& form) {
    json j;
    j["p"] = form.p();
    if (form.is_free()) {
        j["free"] = true;
        return j;
    }
    j["parts"] = json::array();
    for (const auto& pt : form.parts())
        j["parts"].push_back({{"d", pt.d}, {"j", pt.j}, {"n", pt.n}});
    return j;
}

CanonicalForm form_from_json(const json& j) {
    try {
        if (!j.is_object() || !j.contains("p")) throw ParseError("form JSON needs a \"p\" field");
        const PrimeField k(j.at("p").get<Residue>());
        if (j.value("free", false)) return CanonicalForm::free_algebra(k);
        if (!j.contains("parts")) throw ParseError("form JSON needs \"parts\" or \"free\": true");
        std::vector<FormPart> parts;
        for (const auto& e : j.at("parts"))
            parts.push_back({e.at("d").get<std::uint32_t>(), e.at("j").get<std::uint32_t>(),
                             e.at("n").get<std::uint32_t>()});
        return CanonicalForm(k, std::move(parts));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed form JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid form: ") + e.what());
    }
}

json element_to_json(const AlgebraElement& x) {
    json slots = json::array();
    for (const auto& comp : x.components()) {
        json tp = json::array();
        for (const auto& c : comp) tp.push_back(c.coeffs());
        slots.push_back(std::move(tp));
    }
    return json{{"slots", std::move(slots)}};
}

json product_aut_to_json(const ProductAut& g) {
    json blocks = json::array();
    for (const auto& bl : g.blocks()) {
        json locals = json::array();
        for (const auto& loc : bl.locals) {
            json lambdas = json::array();
            for (const auto& l : loc.subst.lambdas()) lambdas.push_back(l.coeffs());
            locals.push_back({{"frob", loc.frob}, {"lambdas", std::move(lambdas)}});
        }
        blocks.push_back({{"d", bl.d}, {"j", bl.j}, {"perm", bl.perm}, {"locals", std::move(locals)}});
    }
    return json{{"blocks", std::move(blocks)}};
}

json factorization_to_json(const Factorization& f) {
    json factors = json::array();
    for (const auto& [q, e] : f.factors)
        factors.push_back({{"poly", to_string(q)}, {"mult", e}});
    return json{{"unit", to_string(f.unit)}, {"factors", std::move(factors)}};
}

}  // namespace monoalg
