// monoalg: classify quotients of F_p[X], decide isomorphism, reconstruct
// generator polynomials, and materialize automorphism groups.
//
// Exit codes: 0 success, 1 negative decision (iso / verify), 2 parse or
// input error, 3 infeasible structure, 4 enumeration cap exceeded.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "monoalg/autgroup.hpp"
#include "monoalg/classify.hpp"
#include "monoalg/errors.hpp"
#include "monoalg/json_io.hpp"
#include "monoalg/oracle.hpp"
#include "monoalg/parse.hpp"

using namespace monoalg;
using nlohmann::json;

namespace {

struct Options {
    Residue p = 2;
    bool json_out = false;
    std::string poly1, poly2, form_json;
    bool aut_order = false, aut_generators_flag = false, aut_enumerate = false;
    std::uint64_t cap = 1'000'000;
    std::uint64_t idem_cap = 20;
    std::uint64_t max_dim = 4;
};

Polynomial parse_input_poly(const Options& opt, const std::string& text) {
    return parse_polynomial(text, ext_field(opt.p, 1));
}

CanonicalForm parse_input_form(const Options& opt) {
    json j;
    try {
        j = json::parse(opt.form_json);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    CanonicalForm form = form_from_json(j);
    if (form.p() != opt.p) throw ParseError("form characteristic disagrees with -p");
    return form;
}

std::string local_factor_string(Residue p, std::uint32_t d, std::uint32_t j) {
    std::string field = "F_" + std::to_string(p);
    if (d > 1) {
        unsigned __int128 q = 1;
        bool overflow = false;
        for (std::uint32_t i = 0; i < d; ++i) {
            q *= p;
            if (q > UINT64_MAX) { overflow = true; break; }
        }
        field = overflow ? "F_(" + std::to_string(p) + "^" + std::to_string(d) + ")"
                         : "F_" + std::to_string(static_cast<std::uint64_t>(q));
    }
    if (j == 1) return field;
    return field + "[Y]/(Y^" + std::to_string(j) + ")";
}

std::string form_string(const CanonicalForm& form) {
    if (form.is_free()) return "F_" + std::to_string(form.p()) + "[X]";
    std::string out;
    for (const auto& pt : form.parts()) {
        for (std::uint32_t c = 0; c < pt.n; ++c) {
            if (!out.empty()) out += " x ";
            out += local_factor_string(form.p(), pt.d, pt.j);
        }
    }
    return out;
}

int cmd_factor(const Options& opt) {
    Factorization f = factor(parse_input_poly(opt, opt.poly1));
    if (opt.json_out) {
        std::cout << factorization_to_json(f).dump() << "\n";
        return 0;
    }
    if (!f.unit.is_one()) std::cout << "unit: " << to_string(f.unit) << "\n";
    for (const auto& [q, e] : f.factors)
        std::cout << "(" << to_string(q) << ")^" << e << "\n";
    return 0;
}

int cmd_classify(const Options& opt) {
    CanonicalForm form = opt.poly1.empty()
                             ? CanonicalForm::free_algebra(PrimeField(opt.p))
                             : classify(parse_input_poly(opt, opt.poly1));
    if (opt.json_out) {
        std::cout << form_to_json(form).dump() << "\n";
        return 0;
    }
    std::cout << form_string(form) << "\n";
    if (!form.is_free()) {
        for (const auto& pt : form.parts())
            std::cout << "  d=" << pt.d << " j=" << pt.j << " n=" << pt.n << "\n";
    }
    return 0;
}

int cmd_iso(const Options& opt) {
    bool same = isomorphic(parse_input_poly(opt, opt.poly1), parse_input_poly(opt, opt.poly2));
    if (opt.json_out)
        std::cout << json{{"isomorphic", same}}.dump() << "\n";
    else
        std::cout << (same ? "isomorphic" : "not isomorphic") << "\n";
    return same ? 0 : 1;
}

int cmd_realize(const Options& opt) {
    Polynomial q = realize(parse_input_form(opt));
    if (opt.json_out)
        std::cout << json{{"poly", to_string(q)}}.dump() << "\n";
    else
        std::cout << to_string(q) << "\n";
    return 0;
}

int cmd_aut(const Options& opt) {
    CanonicalForm form = classify(parse_input_poly(opt, opt.poly1));
    if (opt.aut_generators_flag) {
        json out = json::array();
        for (const auto& g : aut_generators(form)) out.push_back(product_aut_to_json(g));
        if (opt.json_out) {
            std::cout << json{{"generators", out}}.dump() << "\n";
        } else {
            for (const auto& g : out) std::cout << g.dump() << "\n";
        }
        return 0;
    }
    if (opt.aut_enumerate) {
        AutEnumerator en(form, opt.cap);
        if (opt.json_out) {
            std::cout << "{\"order\": " << en.size() << ", \"elements\": [";
            for (std::uint64_t i = 0; i < en.size(); ++i)
                std::cout << (i ? "," : "") << product_aut_to_json(en.at(i)).dump();
            std::cout << "]}\n";
        } else {
            for (std::uint64_t i = 0; i < en.size(); ++i)
                std::cout << product_aut_to_json(en.at(i)).dump() << "\n";
            std::cout << en.size() << " automorphisms\n";
        }
        return 0;
    }
    const std::uint64_t order = aut_group_order(form);
    if (opt.json_out) {
        json parts = json::array();
        for (const auto& pt : form.parts()) {
            const std::uint64_t q = ext_field(form.base(), pt.d)->size();
            parts.push_back({{"d", pt.d},
                             {"j", pt.j},
                             {"n", pt.n},
                             {"local_order", pt.d * trunc_aut_count(q, pt.j)}});
        }
        std::cout << json{{"order", order}, {"parts", parts}}.dump() << "\n";
    } else {
        std::cout << order << "\n";
    }
    return 0;
}

int cmd_idem(const Options& opt) {
    CanonicalForm form = classify(parse_input_poly(opt, opt.poly1));
    auto alg = ProductAlgebra::make(form);
    auto idems = idempotents(alg, static_cast<std::uint32_t>(opt.idem_cap));
    if (opt.json_out) {
        json list = json::array();
        for (const auto& e : idems) list.push_back(element_to_json(e));
        std::cout << json{{"count", idems.size()}, {"algebra", form_string(form)}, {"idempotents", list}}.dump()
                  << "\n";
        return 0;
    }
    std::cout << idems.size() << " idempotents of " << form_string(form) << "\n";
    for (const auto& e : idems) std::cout << element_to_json(e)["slots"].dump() << "\n";
    return 0;
}

int cmd_gen(const Options& opt) {
    CanonicalForm form = parse_input_form(opt);
    AlgebraElement g = generator_element(form);
    const std::uint64_t dim = form.dimension();
    if (opt.json_out) {
        std::cout << json{{"generator", element_to_json(g)}, {"rank", dim}, {"dimension", dim}}.dump() << "\n";
    } else {
        std::cout << "generator: " << element_to_json(g)["slots"].dump() << "\n";
        std::cout << "rank certificate: powers span " << dim << "/" << dim << " dimensions\n";
    }
    return 0;
}

// oracle cross-checks over every monogenic form of bounded dimension
int cmd_verify(const Options& opt) {
    const PrimeField k(opt.p);
    auto forms = enumerate_forms(k, opt.max_dim, true);

    struct Row {
        std::string name;
        std::uint64_t cases = 0, failures = 0;
    };
    std::map<std::string, Row> table;
    auto record = [&](const std::string& name, bool ok) {
        auto& row = table[name];
        row.name = name;
        ++row.cases;
        if (!ok) ++row.failures;
    };

    std::vector<Polynomial> realized;
    for (const auto& form : forms) {
        Polynomial q = realize(form);
        realized.push_back(q);
        QuotientAlgebra raw(q);
        record("idempotent-count", brute_idempotents(raw).size() ==
                                       (std::uint64_t{1} << form.slot_count()));
        record("aut-group-order", brute_automorphisms(raw).size() == aut_group_order(form));
        record("classify-roundtrip", classify(q) == form);
    }
    for (std::size_t i = 0; i < realized.size(); ++i) {
        for (std::size_t j = i; j < realized.size(); ++j) {
            const bool brute = brute_isomorphic(QuotientAlgebra(realized[i]), QuotientAlgebra(realized[j]));
            record("iso-vs-brute", brute == (i == j));
        }
    }

    bool all_ok = true;
    if (opt.json_out) {
        json rows = json::array();
        for (const auto& [name, row] : table) {
            rows.push_back({{"check", name}, {"cases", row.cases}, {"failures", row.failures}});
            all_ok = all_ok && row.failures == 0;
        }
        std::cout << json{{"p", opt.p}, {"max_dim", opt.max_dim}, {"forms", forms.size()}, {"rows", rows}}.dump()
                  << "\n";
    } else {
        std::printf("%-20s %8s %10s\n", "check", "cases", "failures");
        for (const auto& [name, row] : table) {
            std::printf("%-20s %8llu %10llu\n", name.c_str(),
                        static_cast<unsigned long long>(row.cases),
                        static_cast<unsigned long long>(row.failures));
            all_ok = all_ok && row.failures == 0;
        }
        std::cout << (all_ok ? "all checks passed" : "MISMATCH DETECTED") << "\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-generator algebras over prime fields: classification and automorphisms"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-p", opt.p, "prime characteristic")->required();
        sub->add_flag("--json", opt.json_out, "machine-readable output");
    };

    auto* factor_cmd = app.add_subcommand("factor", "factor a polynomial into monic irreducibles");
    add_common(factor_cmd);
    factor_cmd->add_option("poly", opt.poly1, "polynomial, e.g. \"X^3 + X^2\"")->required();

    auto* classify_cmd = app.add_subcommand("classify", "canonical product form of F_p[X]/(P)");
    add_common(classify_cmd);
    classify_cmd->add_option("poly", opt.poly1, "modulus; omit for the free algebra F_p[X]");

    auto* iso_cmd = app.add_subcommand("iso", "decide isomorphism of two quotients");
    add_common(iso_cmd);
    iso_cmd->add_option("poly1", opt.poly1)->required();
    iso_cmd->add_option("poly2", opt.poly2)->required();

    auto* realize_cmd = app.add_subcommand("realize", "generator polynomial of a canonical form");
    add_common(realize_cmd);
    realize_cmd->add_option("--form", opt.form_json, "canonical form as JSON")->required();

    auto* aut_cmd = app.add_subcommand("aut", "automorphism group of F_p[X]/(P)");
    add_common(aut_cmd);
    aut_cmd->add_option("poly", opt.poly1)->required();
    aut_cmd->add_flag("--order", opt.aut_order, "print the group order (default)");
    aut_cmd->add_flag("--generators", opt.aut_generators_flag, "print a generating set");
    aut_cmd->add_flag("--enumerate", opt.aut_enumerate, "print every element (cap-guarded)");
    aut_cmd->add_option("--cap", opt.cap, "enumeration cap");

    auto* idem_cmd = app.add_subcommand("idem", "idempotents of F_p[X]/(P)");
    add_common(idem_cmd);
    idem_cmd->add_option("poly", opt.poly1)->required();
    idem_cmd->add_option("--cap", opt.idem_cap, "slot-count cap");

    auto* gen_cmd = app.add_subcommand("gen", "generator element of a canonical form, with certificate");
    add_common(gen_cmd);
    gen_cmd->add_option("--form", opt.form_json, "canonical form as JSON")->required();

    auto* verify_cmd = app.add_subcommand("verify", "cross-check structure theory against brute force");
    add_common(verify_cmd);
    verify_cmd->add_option("--max-dim", opt.max_dim, "largest dimension to cover");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (factor_cmd->parsed()) return cmd_factor(opt);
        if (classify_cmd->parsed()) return cmd_classify(opt);
        if (iso_cmd->parsed()) return cmd_iso(opt);
        if (realize_cmd->parsed()) return cmd_realize(opt);
        if (aut_cmd->parsed()) return cmd_aut(opt);
        if (idem_cmd->parsed()) return cmd_idem(opt);
        if (gen_cmd->parsed()) return cmd_gen(opt);
        if (verify_cmd->parsed()) return cmd_verify(opt);
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 3;
    } catch (const CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
