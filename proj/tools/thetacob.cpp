// thetacob: table and JSON emitters over the theta-basis library.
//
// Exit codes: 0 success, 1 a self-check failed (selftest, quantize --roundtrip,
// fgl check), 2 invalid parameters, 3 a Weierstrass residual above tolerance.

#include "thetacob/thetacob.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>

using namespace thetacob;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kFormatVersion = "1.0.0";
constexpr int kMaxWeightCap = 24;

class usage_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct Output {
    std::string format = "text";
    std::string command;
    Json params = Json::object();
    Json payload = Json::object();
    std::string text;

    void emit() const {
        if (format == "json") {
            Json env;
            env["command"] = command;
            env["params"] = params;
            env["format_version"] = kFormatVersion;
            env["payload"] = payload;
            std::cout << env.dump(2) << "\n";
        } else {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << "\n";
        }
    }
};

/// Left-aligned columns separated by two spaces.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], r[i].size());
        }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

int default_max_weight() {
    const char* env = std::getenv("THETA_MAX_WEIGHT");
    if (!env) return 12;
    try {
        std::size_t used = 0;
        int n = std::stoi(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument("");
        return n;
    } catch (const std::exception&) {
        throw usage_error(std::string("THETA_MAX_WEIGHT is not an integer: '") + env + "'");
    }
}

void check_weight(int n, int lo = 1, int hi = kMaxWeightCap, const std::string& what = "--max-weight") {
    if (n < lo || n > hi)
        throw usage_error(what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                          std::to_string(n));
}

Json chern_json(const ChernVector& c) {
    Json values = Json::object();
    for (const auto& [lambda, v] : c.values) values[to_string(lambda)] = to_string(v);
    return Json{{"weight", c.weight}, {"frame", frame_name(c.frame)}, {"basis", chern_basis_name(c.basis)}, {"values", values}};
}

std::string chern_text(const ChernVector& c) {
    std::string out;
    for (const auto& [lambda, v] : c.values) out += (out.empty() ? "" : ", ") + ("[" + to_string(lambda) + "]=" + to_string(v));
    return out;
}

Rat json_rat(const Json& v) {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_string()) return parse_rat(v.get<std::string>());
    throw usage_error("rational values must be integers or strings like \"-1/2\"");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw usage_error(path + ": " + e.what());
    }
}

/// {"coeffs": ["1", "-1/2", ...]} gives Q(z) = sum coeffs[n] z^n.
GenusSpec genus_from_file(const std::string& path) {
    Json j = read_json_file(path);
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty())
        throw usage_error(path + ": expected {\"coeffs\": [...]}");
    std::vector<Rat> coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(json_rat(c));
    return custom_genus(coeffs, "file:" + path);
}

/// {"frame": "tangent", "basis": "chern_product", "values": {"2": ..., "1,1": ...}};
/// frame and basis default to tangent and chern_product.
ChernVector chern_from_file(const std::string& path) {
    Json j = read_json_file(path);
    if (!j.is_object() || !j.contains("values") || !j["values"].is_object())
        throw usage_error(path + ": expected an object with a \"values\" map keyed by partitions");
    ChernVector c;
    std::string frame = j.value("frame", "tangent"), basis = j.value("basis", "chern_product");
    if (frame != "tangent" && frame != "normal") throw usage_error("frame must be tangent or normal");
    if (basis != "chern_product" && basis != "monomial") throw usage_error("basis must be chern_product or monomial");
    c.frame = frame == "tangent" ? Frame::tangent : Frame::normal;
    c.basis = basis == "monomial" ? ChernBasis::monomial : ChernBasis::chern_product;
    c.weight = -1;
    for (const auto& [key, v] : j["values"].items()) {
        Partition p = parse_partition(key);
        if (c.weight >= 0 && p.weight() != c.weight) throw usage_error("Chern numbers of mixed weight");
        c.weight = p.weight();
        c.values[p] = json_rat(v);
    }
    if (c.weight < 1) throw usage_error("Chern vector needs weight >= 1");
    validate(c);
    return c;
}

/// "a+bi", "a-bi", "a", "bi", "i", "-i".
cplx parse_complex(const std::string& s) {
    static const std::regex full(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij]\s*$)");
    static const std::regex real(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*$)");
    static const std::regex imag(R"(^\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij]\s*$)");
    std::smatch m;
    if (std::regex_match(s, m, full)) {
        double im = m[3].matched ? std::stod(m[3]) : 1.0;
        return {std::stod(m[1]), m[2] == "-" ? -im : im};
    }
    if (std::regex_match(s, m, real)) return {std::stod(m[1]), 0.0};
    if (std::regex_match(s, m, imag)) {
        double im = m[2].matched ? std::stod(m[2]) : 1.0;
        return {0.0, m[1] == "-" ? -im : im};
    }
    throw usage_error("malformed complex number '" + s + "' (expected a+bi)");
}

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

template <std::size_t V>
std::string render_multi(const MultiSeries<GradedPoly, V>& f) {
    if (f.is_zero()) return "0";
    static const char* names[] = {"u", "v", "w"};
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        std::string term = "(" + to_string(c) + ")";
        for (std::size_t i = 0; i < V; ++i)
            if (e[i]) term += "*" + std::string(names[i]) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
        out += (out.empty() ? "" : " + ") + term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_beta(Output& o, int n) {
    check_weight(n);
    o.params["max_weight"] = n;
    PolySeries b = beta(n + 1);
    std::vector<std::vector<std::string>> rows{{"power", "coefficient"}};
    Json coeffs = Json::array();
    for (int k = 1; k <= n + 1; ++k) {
        rows.push_back({"z^" + std::to_string(k), to_string(b[k])});
        coeffs.push_back({{"power", k}, {"coefficient", to_string(b[k])}});
    }
    o.payload["coefficients"] = coeffs;
    o.text = "beta(z) = z + sum t_n z^(n+1)/(n+1)!\n" + render_table(rows);
    return 0;
}

int cmd_logarithm(Output& o, int n) {
    check_weight(n);
    o.params["max_weight"] = n;
    PolySeries l = mischenko_log(n);
    auto cp = cp_classes(n);
    std::vector<std::vector<std::string>> rows{{"n", "coefficient of u^(n+1)", "[CP^n]"}};
    Json table = Json::array();
    for (int k = 0; k <= n; ++k) {
        rows.push_back({std::to_string(k), to_string(l[k + 1]), to_string(cp[k])});
        table.push_back({{"n", k}, {"coefficient", to_string(l[k + 1])}, {"cp", to_string(cp[k])}});
    }
    o.payload["rows"] = table;
    o.text = render_table(rows);
    return 0;
}

int cmd_classes(Output& o, const std::string& family, int n) {
    check_weight(n);
    if (family != "vn" && family != "wn" && family != "cpn") throw usage_error("family must be vn, wn or cpn");
    o.params["family"] = family;
    o.params["max_weight"] = n;
    auto t = dual_class_table(n);
    std::vector<std::vector<std::string>> rows;
    Json table = Json::array();
    for (int k = 1; k <= n; ++k) {
        std::string ks = std::to_string(k);
        if (family == "vn") {
            rows.push_back({"v" + ks + " = " + to_string(t.v[k]), "q" + ks + " = " + t.qn[k].str()});
            table.push_back({{"n", k}, {"class", to_string(t.v[k])}, {"q", t.qn[k].str()}});
        } else if (family == "wn") {
            rows.push_back({"w" + ks + " = " + to_string(t.w[k]), "multiplier = " + t.w_multiplier[k].str()});
            table.push_back({{"n", k}, {"class", to_string(t.w[k])}, {"multiplier", t.w_multiplier[k].str()}});
        } else {
            rows.push_back({"[CP^" + ks + "] = " + to_string(t.cp[k])});
            table.push_back({{"n", k}, {"class", to_string(t.cp[k])}});
        }
    }
    o.payload["rows"] = table;
    o.text = render_table(rows);
    return 0;
}

int cmd_ln_apply(Output& o, const std::string& partition, const std::string& expr) {
    Partition lambda = parse_partition(partition);
    GradedPoly x = parse_poly(expr);
    o.params["partition"] = to_string(lambda);
    o.params["expr"] = expr;
    GradedPoly r = ln_apply(lambda, x);
    o.payload["result"] = to_string(r);
    o.text = to_string(r);
    return 0;
}

int cmd_theta_intersect(Output& o, int n, int k) {
    check_weight(n, 0, 40, "--n");
    check_weight(k, 0, n, "--k");
    o.params["n"] = n;
    o.params["k"] = k;
    GradedPoly r = theta_intersection(n, k);
    o.payload["result"] = to_string(r);
    o.text = to_string(r);
    return 0;
}

int cmd_genus(Output& o, const std::string& name, const std::string& of) {
    GenusSpec g = name.rfind("file:", 0) == 0 ? genus_from_file(name.substr(5)) : genus_by_name(name);
    o.params["name"] = name;
    o.params["of"] = of;
    Rat value;
    if (of.rfind("theta:", 0) == 0) {
        int n;
        try {
            n = std::stoi(of.substr(6));
        } catch (const std::exception&) {
            throw usage_error("--of theta:N needs an integer N");
        }
        check_weight(n, 0, 1000, "theta:N");
        value = genus_of_theta(g, n);
    } else if (of.rfind("poly:", 0) == 0) {
        value = genus_of_poly(g, parse_poly(of.substr(5)));
    } else {
        throw usage_error("--of must be theta:N or poly:<expr>");
    }
    o.payload["genus"] = g.name;
    o.payload["value"] = to_string(value);
    o.text = to_string(value);
    return 0;
}

int cmd_invariants(Output& o, int n, int k) {
    check_weight(n, 1, kMaxWeightCap, "--n");
    check_weight(k, 1, 1000, "--k");
    o.params["n"] = n;
    o.params["k"] = k;
    auto r = theta_invariants(n, k);
    Json betti = Json::array();
    std::string betti_text;
    for (const auto& b : r.betti) {
        betti.push_back(b.str());
        betti_text += (betti_text.empty() ? "" : " ") + b.str();
    }
    o.payload["betti"] = betti;
    o.payload["euler"] = r.euler.str();
    o.payload["signature"] = r.signature ? Json(to_string(*r.signature)) : Json(nullptr);
    o.payload["class"] = to_string(theta_k_class(n, k));
    o.payload["tangent"] = chern_json(r.tangent);
    o.payload["normal"] = chern_json(r.normal);
    o.text = render_table({{"class", to_string(theta_k_class(n, k))},
                           {"betti", betti_text},
                           {"euler", r.euler.str()},
                           {"signature", r.signature ? to_string(*r.signature) : "-"},
                           {"tangent c_lambda", chern_text(r.tangent)},
                           {"normal c_lambda", chern_text(r.normal)}});
    return 0;
}

int cmd_congruences(Output& o, int n, const std::string& check) {
    check_weight(n, 1, 6, "--n");
    o.params["n"] = n;
    auto sys = congruence_system(n);
    if (check.empty()) {
        Json fs = Json::array();
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header{"mu"};
        for (const auto& c : sys.columns) header.push_back("[" + to_string(c) + "]");
        rows.push_back(header);
        for (const auto& f : sys.functionals) {
            Json coeffs = Json::object();
            std::vector<std::string> row{to_string(f.mu).empty() ? "()" : to_string(f.mu)};
            for (std::size_t i = 0; i < sys.columns.size(); ++i) {
                coeffs[to_string(sys.columns[i])] = to_string(f.coeffs[i]);
                row.push_back(to_string(f.coeffs[i]));
            }
            fs.push_back({{"mu", to_string(f.mu)}, {"coeffs", coeffs}});
            rows.push_back(row);
        }
        Json divisors = Json::array();
        std::string div_text;
        for (const auto& d : sys.elementary_divisors()) {
            divisors.push_back(d.str());
            div_text += (div_text.empty() ? "" : " ") + d.str();
        }
        o.payload["weight"] = n;
        o.payload["functionals"] = fs;
        o.payload["elementary_divisors"] = divisors;
        o.text = "functionals on normal-frame monomial Chern numbers, weight " + std::to_string(n) + "\n" +
                 render_table(rows) + "elementary divisors: " + div_text + "\n";
        return 0;
    }
    o.params["check"] = check;
    ChernVector c = chern_from_file(check);
    if (c.weight != n) throw usage_error("Chern vector has weight " + std::to_string(c.weight) + ", --n is " + std::to_string(n));
    auto v = check_chern_vector(c, sys);
    Json values = Json::array(), failures = Json::array();
    std::vector<std::vector<std::string>> rows{{"mu", "value", "integral"}};
    for (const auto& [mu, val] : v.values) {
        values.push_back({{"mu", to_string(mu)}, {"value", to_string(val)}});
        rows.push_back({to_string(mu).empty() ? "()" : to_string(mu), to_string(val), is_integer(val) ? "yes" : "no"});
    }
    for (const auto& [mu, val] : v.failures) failures.push_back({{"mu", to_string(mu)}, {"value", to_string(val)}});
    o.payload["weight"] = n;
    o.payload["pass"] = v.pass;
    o.payload["integral_input"] = v.integral_input;
    o.payload["values"] = values;
    o.payload["failures"] = failures;
    o.text = render_table(rows) + "verdict: " + (v.pass ? "pass" : "fail") + "\n";
    return 0;
}

int cmd_quantize(Output& o, const std::string& expr, bool roundtrip) {
    GradedPoly x = parse_poly(expr);
    o.params["expr"] = expr;
    o.params["roundtrip"] = roundtrip;
    TensorElement q = quantize(x);
    Json terms = Json::array(), orbit = Json::array();
    for (const auto& [k, c] : q.terms())
        terms.push_back({{"t", monomial_string(k.first, "t")}, {"s", to_string(k.second)}, {"coefficient", to_string(c)}});
    for (const auto& [lambda, s] : ln_orbit(x)) orbit.push_back({{"lambda", to_string(lambda)}, {"value", to_string(s)}});
    o.payload["quantized"] = to_string(q);
    o.payload["terms"] = terms;
    o.payload["orbit"] = orbit;
    o.text = to_string(q) + "\n";
    if (!roundtrip) return 0;
    bool ok = dequantize(q) == x;
    o.payload["roundtrip"] = ok;
    o.text += std::string("roundtrip: ") + (ok ? "ok" : "FAILED") + "\n";
    return ok ? 0 : 1;
}

int cmd_fgl_check(Output& o, int order) {
    check_weight(order, 2, 10, "--order");
    o.params["order"] = order;
    using Bi = BiTruncSeries<GradedPoly>;
    using Tri = MultiSeries<GradedPoly, 3>;
    PolySeries b = beta(order);
    auto f = formal_group_law(b, order);
    Bi unit = substitute<GradedPoly, 2, 2>(f, {Bi::variable(0, order), Bi(order)}) - Bi::variable(0, order);
    Bi symmetry = f.permuted({1, 0}) - f;
    Bi exponential = substitute<GradedPoly, 2, 2>(f, {Bi::lift(b, 0, order), Bi::lift(b, 1, order)}) -
                     compose(b, Bi::variable(0, order) + Bi::variable(1, order));
    Tri u = Tri::variable(0, order), v = Tri::variable(1, order), w = Tri::variable(2, order);
    Tri assoc = substitute<GradedPoly, 2, 3>(f, {substitute<GradedPoly, 2, 3>(f, {u, v}), w}) -
                substitute<GradedPoly, 2, 3>(f, {u, substitute<GradedPoly, 2, 3>(f, {v, w})});
    const std::vector<std::pair<std::string, std::string>> residuals{
        {"F(u,0) - u", render_multi(unit)},
        {"F(u,v) - F(v,u)", render_multi(symmetry)},
        {"F(F(u,v),w) - F(u,F(v,w))", render_multi(assoc)},
        {"F(beta(u),beta(v)) - beta(u+v)", render_multi(exponential)}};
    bool ok = true;
    std::vector<std::vector<std::string>> rows{{"identity", "residual"}};
    for (const auto& [name, r] : residuals) {
        o.payload[name] = r;
        rows.push_back({name, r});
        ok = ok && r == "0";
    }
    o.payload["pass"] = ok;
    o.text = render_table(rows);
    return ok ? 0 : 1;
}

int cmd_weierstrass_verify(Output& o, bool lemniscatic, const std::string& w1, const std::string& w2, double tol) {
    WeierstrassTolerances t;
    if (tol > 0) t.legendre = t.periodicity = t.half_period = tol;
    else if (tol < 0 || std::isnan(tol)) throw usage_error("--tol must be positive");
    VerifyOptions opt;
    WeierstrassLattice L;
    o.params["lemniscatic"] = lemniscatic;
    if (tol > 0) o.params["tol"] = tol;
    if (lemniscatic) {
        if (!w1.empty() || !w2.empty()) throw usage_error("--lemniscatic excludes --omega1/--omega2");
        opt.lemniscatic = true;
        L = lemniscatic_lattice(1.0, t);
    } else {
        if (w1.empty() || w2.empty()) throw usage_error("give --lemniscatic or both --omega1 and --omega2");
        o.params["omega1"] = w1;
        o.params["omega2"] = w2;
        L = lattice_init(parse_complex(w1), parse_complex(w2), t);
    }
    auto checks = weierstrass_verify(L, opt);
    bool ok = true;
    std::vector<std::vector<std::string>> rows{{"check", "residual", "tolerance", "verdict"}};
    for (const auto& c : checks) {
        o.payload[c.name] = std::isfinite(c.residual) ? Json(c.residual) : Json(nullptr);
        rows.push_back({c.name, format_double(c.residual), format_double(c.tolerance), c.pass() ? "pass" : "FAIL"});
        ok = ok && c.pass();
    }
    o.text = render_table(rows);
    return ok ? 0 : 3;
}

int cmd_selftest(Output& o) {
    bool ok = true;
    Json criteria = Json::array();
    for (const auto& entry : acceptance_criteria()) {
        auto r = entry.run();
        criteria.push_back({{"id", r.id},
                            {"title", r.title},
                            {"pass", r.pass()},
                            {"checks", r.checks},
                            {"failures", r.failures},
                            {"notes", r.notes}});
        o.text += format_result(r);
        ok = ok && r.pass();
    }
    o.payload["criteria"] = criteria;
    o.payload["pass"] = ok;
    o.text += std::string("overall: ") + (ok ? "PASS" : "FAIL") + "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Theta-basis calculus for complex cobordism"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    std::optional<int> max_weight;
    auto weight_or_default = [&] { return max_weight ? *max_weight : default_max_weight(); };
    std::function<int()> action;

    auto* beta_cmd = app.add_subcommand("beta", "Coefficients of beta(z)");
    beta_cmd->add_option("--max-weight", max_weight, "Largest generator index (default THETA_MAX_WEIGHT or 12)");
    beta_cmd->callback([&] { action = [&] { return cmd_beta(out, weight_or_default()); }; });

    auto* log_cmd = app.add_subcommand("logarithm", "Mischenko series and [CP^n]");
    log_cmd->add_option("--max-weight", max_weight, "Largest weight (default THETA_MAX_WEIGHT or 12)");
    log_cmd->callback([&] { action = [&] { return cmd_logarithm(out, weight_or_default()); }; });

    std::string family;
    auto* classes_cmd = app.add_subcommand("classes", "Dual class tables: vn (with q_n), wn, cpn");
    classes_cmd->add_option("family", family, "vn, wn or cpn")->required();
    classes_cmd->add_option("--max-weight", max_weight, "Largest weight (default THETA_MAX_WEIGHT or 12)");
    classes_cmd->callback([&] {
        action = [&] { return cmd_classes(out, family, weight_or_default()); };
    });

    std::string partition, expr;
    auto* ln_cmd = app.add_subcommand("ln", "Landweber-Novikov operations");
    ln_cmd->require_subcommand(1);
    auto* ln_apply_cmd = ln_cmd->add_subcommand("apply", "S_lambda applied to a polynomial");
    ln_apply_cmd->add_option("--partition", partition, "Parts such as \"2,1\"; empty for the identity")->required();
    ln_apply_cmd->add_option("--expr", expr, "Polynomial in t1, t2, ...")->required();
    ln_apply_cmd->callback([&] { action = [&] { return cmd_ln_apply(out, partition, expr); }; });

    int n = -1, k = -1;
    auto* theta_cmd = app.add_subcommand("theta", "Theta-divisor classes");
    theta_cmd->require_subcommand(1);
    auto* intersect_cmd = theta_cmd->add_subcommand("intersect", "[Theta_k^(n-k)] from the residue formula");
    intersect_cmd->add_option("--n", n)->required();
    intersect_cmd->add_option("--k", k)->required();
    intersect_cmd->callback([&] { action = [&] { return cmd_theta_intersect(out, n, k); }; });

    std::string genus_name = "todd", of;
    auto* genus_cmd = app.add_subcommand("genus", "Hirzebruch genus of a theta class or polynomial");
    genus_cmd->add_option("--name", genus_name, "todd, l, euler or file:Q.json")->capture_default_str();
    genus_cmd->add_option("--of", of, "theta:N or poly:<expr>")->required();
    genus_cmd->callback([&] { action = [&] { return cmd_genus(out, genus_name, of); }; });

    auto* inv_cmd = app.add_subcommand("invariants", "Betti numbers, Euler characteristic, signature, Chern numbers");
    inv_cmd->add_option("--n", n)->required();
    inv_cmd->add_option("--k", k, "Polarisation multiple (default 1)");
    inv_cmd->callback([&] { action = [&] { return cmd_invariants(out, n, k < 0 ? 1 : k); }; });

    std::string check_file;
    auto* cong_cmd = app.add_subcommand("congruences", "Chern-number congruence system or verdict");
    cong_cmd->add_option("--n", n)->required();
    cong_cmd->add_option("--check", check_file, "JSON Chern vector to test");
    cong_cmd->callback([&] { action = [&] { return cmd_congruences(out, n, check_file); }; });

    bool roundtrip = false;
    auto* quant_cmd = app.add_subcommand("quantize", "Quantised element sum S_lambda(x) (x) S^lambda");
    quant_cmd->add_option("--expr", expr)->required();
    quant_cmd->add_flag("--roundtrip", roundtrip, "Check that dequantize recovers the input");
    quant_cmd->callback([&] { action = [&] { return cmd_quantize(out, expr, roundtrip); }; });

    int order = 6;
    auto* fgl_cmd = app.add_subcommand("fgl", "Formal group law of beta");
    fgl_cmd->require_subcommand(1);
    auto* fgl_check_cmd = fgl_cmd->add_subcommand("check", "Exact axiom residuals");
    fgl_check_cmd->add_option("--order", order, "Total truncation order")->capture_default_str();
    fgl_check_cmd->callback([&] { action = [&] { return cmd_fgl_check(out, order); }; });

    bool lemniscatic = false;
    std::string omega1, omega2;
    double tol = 0;
    auto* w_cmd = app.add_subcommand("weierstrass", "Weierstrass functions");
    w_cmd->require_subcommand(1);
    auto* verify_cmd = w_cmd->add_subcommand("verify", "Residual report for a lattice");
    verify_cmd->add_flag("--lemniscatic", lemniscatic, "Square lattice with half-periods 1 and i");
    verify_cmd->add_option("--omega1", omega1, "First half-period, a+bi");
    verify_cmd->add_option("--omega2", omega2, "Second half-period, c+di");
    verify_cmd->add_option("--tol", tol, "Override the identity tolerances");
    verify_cmd->callback([&] {
        action = [&] { return cmd_weierstrass_verify(out, lemniscatic, omega1, omega2, tol); };
    });

    auto* self_cmd = app.add_subcommand("selftest", "Run acceptance criteria 1-9");
    self_cmd->callback([&] { action = [&] { return cmd_selftest(out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    for (auto* sub = app.get_subcommands().front();; sub = sub->get_subcommands().front()) {
        out.command += (out.command.empty() ? "" : " ") + sub->get_name();
        if (sub->get_subcommands().empty()) break;
    }
    try {
        int code = action();
        out.emit();
        return code;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const convergence_error& e) {
        std::cerr << "tolerance failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const weierstrass_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
