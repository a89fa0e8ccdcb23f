#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "irrcount/counting.hpp"
#include "irrcount/cycle_index.hpp"
#include "irrcount/group.hpp"
#include "irrcount/number_field.hpp"
#include "irrcount/series.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Ctx {
    std::string format = "json";
    int precision = 10;
};

// round through a %.*g print so every format shows the same digits
double round_sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return std::strtod(buf, nullptr);
}

json num(const Ctx& ctx, double v) { return round_sig(v, ctx.precision); }

json opt_num(const Ctx& ctx, const std::optional<double>& v) {
    if (!v) return nullptr;
    return num(ctx, *v);
}

std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

void print_csv(const json& doc) {
    if (doc.contains("rows") && doc["rows"].is_array() && !doc["rows"].empty()) {
        const json& rows = doc["rows"];
        std::string header;
        for (auto& [k, v] : rows[0].items()) header += (header.empty() ? "" : ",") + k;
        std::cout << header << "\n";
        for (const json& row : rows) {
            std::string line;
            for (auto& [k, v] : row.items()) line += (line.empty() ? "" : ",") + cell(v);
            std::cout << line << "\n";
        }
        return;
    }
    std::cout << "key,value\n";
    for (auto& [k, v] : doc.items()) {
        if (v.is_object() || v.is_array()) continue;
        std::cout << k << "," << cell(v) << "\n";
    }
}

void print_text(const json& doc) {
    for (auto& [k, v] : doc.items()) {
        if (k == "rows" && v.is_array()) {
            for (const json& row : v) {
                std::string line;
                for (auto& [rk, rv] : row.items())
                    line += (line.empty() ? "" : "  ") + rk + "=" + cell(rv);
                std::cout << line << "\n";
            }
        } else if (v.is_array() || v.is_object()) {
            std::cout << k << ": " << v.dump() << "\n";
        } else {
            std::cout << k << ": " << cell(v) << "\n";
        }
    }
}

void emit(const Ctx& ctx, const json& doc) {
    if (ctx.format == "json")
        std::cout << doc.dump(2) << "\n";
    else if (ctx.format == "csv")
        print_csv(doc);
    else
        print_text(doc);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stod(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

std::string pattern_string(const irrcount::FiniteAbelianGroup& G,
                           const irrcount::ZeroSumPattern& p) {
    std::string s;
    for (auto& [e, k] : p.counts) {
        if (!s.empty()) s += " ";
        std::string ex;
        for (int v : G.exponents(e)) ex += (ex.empty() ? "" : ".") + std::to_string(v);
        s += "(" + ex + ")^" + std::to_string(k);
    }
    return s;
}

json count_row(const Ctx& ctx, const irrcount::CountReport& r) {
    json row;
    row["x"] = num(ctx, r.x);
    row["M"] = r.M;
    row["P"] = r.P;
    row["pair_count"] = r.pair_count;
    row["predicted"] = opt_num(ctx, r.predicted);
    row["ratio"] = opt_num(ctx, r.ratio);
    row["err_scale"] = num(ctx, r.err_scale);
    return row;
}

int run_davenport(const Ctx& ctx, const std::string& group) {
    irrcount::FiniteAbelianGroup G = irrcount::make_group(parse_int_list(group));
    json doc;
    doc["schema"] = 1;
    doc["command"] = "davenport";
    doc["group"] = G.invariant_factors();
    doc["order"] = G.order();
    doc["davenport"] = irrcount::davenport_constant(G);
    emit(ctx, doc);
    return 0;
}

int run_zerosums(const Ctx& ctx, const std::string& group, int m) {
    irrcount::FiniteAbelianGroup G = irrcount::make_group(parse_int_list(group));
    auto patterns = irrcount::enumerate_minimal_zero_sums(G, m);
    json doc;
    doc["schema"] = 1;
    doc["command"] = "zerosums";
    doc["group"] = G.invariant_factors();
    doc["m"] = m;
    doc["count"] = patterns.size();
    json plist = json::array();
    json rows = json::array();
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        json entry = json::array();
        for (auto& [e, k] : patterns[i].counts)
            entry.push_back(json{{"element", G.exponents(e)}, {"count", k}});
        plist.push_back(entry);
        rows.push_back(json{{"index", i}, {"m", m}, {"pattern", pattern_string(G, patterns[i])}});
    }
    doc["patterns"] = plist;
    doc["rows"] = rows;
    emit(ctx, doc);
    return 0;
}

int run_coeffs(const Ctx& ctx, const std::string& group, int h_cyclic, const std::string& gs,
               const std::string& z2s) {
    std::vector<int> factors;
    if (!group.empty())
        factors = parse_int_list(group);
    else if (h_cyclic > 0)
        factors = {h_cyclic};
    else
        throw std::invalid_argument("coeffs: need --group or --h");
    irrcount::FiniteAbelianGroup G = irrcount::make_group(factors);
    std::vector<double> g(G.order(), 0.0), z2(G.order(), 0.0);
    if (!gs.empty()) g = parse_double_list(gs);
    if (!z2s.empty()) z2 = parse_double_list(z2s);
    irrcount::CoefficientSet cs = irrcount::coefficients_top(G, g, z2);
    json doc;
    doc["schema"] = 1;
    doc["command"] = "coeffs";
    doc["group"] = G.invariant_factors();
    doc["h"] = cs.h;
    doc["davenport"] = cs.D;
    doc["c_D"] = num(ctx, cs.c_D);
    doc["c_Dm1"] = num(ctx, cs.c_Dm1);
    doc["c_Dm2"] = opt_num(ctx, cs.c_Dm2);
    doc["C"] = num(ctx, cs.C);
    doc["B"] = num(ctx, cs.B);
    json gv = json::array(), zv = json::array();
    for (double v : cs.g_class) gv.push_back(num(ctx, v));
    for (double v : cs.z2_class) zv.push_back(num(ctx, v));
    doc["g"] = gv;
    doc["z2"] = zv;
    emit(ctx, doc);
    return 0;
}

int run_gvalue(const Ctx& ctx, long long d, double tol) {
    irrcount::ImaginaryQuadraticField K(d);
    irrcount::GValueInputs inputs = irrcount::tabulated_g_inputs(K, tol);
    irrcount::TruncatedSum g = irrcount::g_value_h2(inputs);
    json doc;
    doc["schema"] = 1;
    doc["command"] = "gvalue";
    doc["d"] = d;
    doc["tol"] = num(ctx, tol);
    doc["x"] = num(ctx, inputs.S.cutoff);
    doc["a_K"] = num(ctx, inputs.a_K);
    doc["a_L"] = num(ctx, inputs.a_L);
    doc["S"] = num(ctx, inputs.S.value);
    doc["S_error_bound"] = num(ctx, inputs.S.error_bound);
    doc["intermediate"] = num(ctx, std::log(inputs.a_K) - 0.5 * std::log(inputs.a_L));
    doc["g"] = num(ctx, g.value);
    doc["g_error_bound"] = num(ctx, g.error_bound);
    emit(ctx, doc);
    return 0;
}

int run_count(const Ctx& ctx, long long d, double x) {
    irrcount::ImaginaryQuadraticField K(d);
    irrcount::CountReport r = irrcount::count_M(K, x);
    json doc;
    doc["schema"] = 1;
    doc["command"] = "count";
    doc["d"] = d;
    json row = count_row(ctx, r);
    for (auto& [k, v] : row.items()) doc[k] = v;
    emit(ctx, doc);
    return 0;
}

int run_classify(const Ctx& ctx, long long d, long long a, long long b) {
    irrcount::ImaginaryQuadraticField K(d);
    json doc;
    doc["schema"] = 1;
    doc["command"] = "classify";
    doc["d"] = d;
    doc["a"] = a;
    doc["b"] = b;
    doc["norm"] = irrcount::element_norm(K, a, b);
    doc["class"] = irrcount::to_string(irrcount::classify_element(K, a, b));
    emit(ctx, doc);
    return 0;
}

int run_compare(const Ctx& ctx, long long d, const std::string& xs) {
    irrcount::ImaginaryQuadraticField K(d);
    std::vector<double> xlist = parse_double_list(xs);
    std::vector<irrcount::CountReport> reports = irrcount::compare_report(K, xlist);
    json doc;
    doc["schema"] = 1;
    doc["command"] = "compare";
    doc["d"] = d;
    doc["h"] = K.class_number();
    json rows = json::array();
    for (const irrcount::CountReport& r : reports) rows.push_back(count_row(ctx, r));
    doc["rows"] = rows;
    emit(ctx, doc);
    return 0;
}

int run_selftest(const Ctx& ctx) {
    json rows = json::array();
    int failed = 0;
    auto check = [&](const std::string& name, bool ok) {
        rows.push_back(json{{"name", name}, {"pass", ok}});
        if (!ok) ++failed;
    };

    for (long long d : {-5ll, -15ll, -1ll, -2ll}) {
        irrcount::ImaginaryQuadraticField K(d);
        irrcount::CountReport fast = irrcount::count_M(K, 200);
        irrcount::CountReport slow = irrcount::brute_force_M(K, 200);
        check("count_vs_brute_d" + std::to_string(d),
              fast.M == slow.M && fast.P == slow.P && fast.pair_count == slow.pair_count);
    }

    bool cyc = true;
    for (int h = 2; h <= 6; ++h) {
        irrcount::FiniteAbelianGroup G = irrcount::make_group({h});
        auto [dh, dh1] = irrcount::cyclic_extremal_patterns(h);
        cyc = cyc && dh == irrcount::enumerate_minimal_zero_sums(G, h) &&
              dh1 == irrcount::enumerate_minimal_zero_sums(G, h - 1);
    }
    check("cyclic_extremal_h2_h6", cyc);

    {
        std::vector<irrcount::Rational> xs{irrcount::Rational(1), irrcount::Rational(1, 2),
                                           irrcount::Rational(-2, 3), irrcount::Rational(3, 4)};
        bool ok = true;
        for (int k = 1; k <= 4; ++k)
            ok = ok && irrcount::evaluate_pk(k, irrcount::power_sums(xs, k)) ==
                           irrcount::symmetric_sum_oracle(k, xs);
        check("pk_vs_symmetric_oracle", ok);
    }

    {
        bool ok = true;
        std::uint64_t seed = 12345;
        auto rnd = [&]() {
            seed = seed * 6364136223846793005ull + 1442695040888963407ull;
            return static_cast<double>((seed >> 11) % 2000) / 1000.0 - 1.0;
        };
        for (const std::vector<int>& fac : {std::vector<int>{2}, {3}, {2, 2}}) {
            irrcount::FiniteAbelianGroup G = irrcount::make_group(fac);
            int D = irrcount::davenport_constant(G);
            std::size_t n = G.order();
            std::vector<double> g(n), z2(n);
            std::vector<std::vector<double>> z(n, std::vector<double>(std::max(0, D - 1), 0.0));
            for (std::size_t i = 0; i < n; ++i) {
                g[i] = rnd();
                z2[i] = rnd();
                if (D >= 2) z[i][0] = z2[i];
                for (int j = 3; j <= D; ++j) z[i][j - 2] = rnd();
            }
            irrcount::CoefficientSet cs = irrcount::coefficients_top(G, g, z2);
            ok = ok && std::fabs(irrcount::c_mu_general(G, D, g, z) - cs.c_D) < 1e-12;
            ok = ok && std::fabs(irrcount::c_mu_general(G, D - 1, g, z) - cs.c_Dm1) < 1e-12;
            if (cs.c_Dm2)
                ok = ok && std::fabs(irrcount::c_mu_general(G, D - 2, g, z) - *cs.c_Dm2) < 1e-12;
        }
        check("c_mu_vs_closed_forms", ok);
    }

    {
        std::vector<double> I = irrcount::im_constants(3);
        check("im_gamma", I[0] == 0.0 && std::fabs(I[1] - 1.0) < 1e-15 &&
                              std::fabs(I[2] - irrcount::kEulerGamma) < 1e-12);
    }

    {
        bool ok = true;
        for (long long d : {-5ll, -15ll})
            ok = ok && irrcount::theorem2_check_h2(irrcount::ImaginaryQuadraticField(d)) <= 1e-12;
        check("theorem2_residual", ok);
    }

    json doc;
    doc["schema"] = 1;
    doc["command"] = "selftest";
    doc["rows"] = rows;
    doc["passed"] = static_cast<int>(rows.size()) - failed;
    doc["failed"] = failed;
    emit(ctx, doc);
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"irrcount: counts of irreducible elements in imaginary quadratic fields,\n"
                 "zero-sum combinatorics of class groups, and the induced asymptotic laws"};
    app.require_subcommand(1);
    Ctx ctx;
    app.add_option("--format", ctx.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--precision", ctx.precision, "significant digits for printed reals")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();

    std::string group, gs, z2s, xs;
    int m = 0, h_cyclic = 0;
    long long d = -5, ea = 0, eb = 0;
    double x = 0, tol = 5e-5;

    CLI::App* dav = app.add_subcommand("davenport", "Davenport constant of a finite abelian group");
    dav->add_option("--group", group, "invariant factors, e.g. 3,3")->required();

    CLI::App* zs = app.add_subcommand("zerosums", "minimal zero-sum multisets of a given size");
    zs->add_option("--group", group, "invariant factors")->required();
    zs->add_option("--m", m, "multiset size")->required();

    CLI::App* co = app.add_subcommand("coeffs", "c_D, c_{D-1}, c_{D-2} and the induced C, B");
    co->set_help_flag("--help", "print this help message and exit");  // frees -h for --h below
    co->add_option("--group", group, "invariant factors");
    co->add_option("--h", h_cyclic, "cyclic group order (shorthand for --group h)");
    co->add_option("--g", gs, "per-class g values, comma list (csv column g)");
    co->add_option("--z2", z2s, "per-class z_2 values, comma list (csv column z2)");

    CLI::App* gv = app.add_subcommand("gvalue", "g value of the nonprincipal class, d = -5 or -15");
    gv->add_option("--d", d, "field selector")->required();
    gv->add_option("--tol", tol, "tail tolerance; cutoff x chosen so 1/(3(x-2)^2) < tol")
        ->capture_default_str();

    CLI::App* cn = app.add_subcommand("count", "exact count of irreducible principal ideals");
    cn->add_option("--d", d, "field selector")->required();
    cn->add_option("--x", x, "norm bound")->required();

    CLI::App* cl = app.add_subcommand("classify", "classify a + b*omega");
    cl->add_option("--d", d, "field selector")->required();
    cl->add_option("--a", ea, "coordinate on 1")->required();
    cl->add_option("--b", eb, "coordinate on omega")->required();

    CLI::App* cp = app.add_subcommand("compare", "count vs. predicted table over several x");
    cp->add_option("--d", d, "field selector")->required();
    cp->add_option("--xs", xs, "comma list of norm bounds (csv columns x,M,P,...)")->required();

    app.add_subcommand("selftest", "cross-check the main computation paths");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dav->parsed()) return run_davenport(ctx, group);
        if (zs->parsed()) return run_zerosums(ctx, group, m);
        if (co->parsed()) return run_coeffs(ctx, group, h_cyclic, gs, z2s);
        if (gv->parsed()) return run_gvalue(ctx, d, tol);
        if (cn->parsed()) return run_count(ctx, d, x);
        if (cl->parsed()) return run_classify(ctx, d, ea, eb);
        if (cp->parsed()) return run_compare(ctx, d, xs);
        return run_selftest(ctx);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
