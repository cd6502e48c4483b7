#include "biorder/cli.hpp"

#include "biorder/abelorder.hpp"
#include "biorder/factorize.hpp"
#include "biorder/knot.hpp"
#include "biorder/specialpoly.hpp"
#include "biorder/textio.hpp"
#include "biorder/wordorder.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace biorder::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string approx_str(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

Json interval_json(const IsolatingInterval& iv)
{
    return Json{{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}};
}

Json algebraic_json(const RealAlgebraic& a)
{
    return Json{{"minpoly", to_string(a.minpoly())},
                {"interval", interval_json(a.interval())},
                {"approx", approx_str(a.approx())}};
}

Json factorization_json(const Factorization& fac)
{
    Json factors = Json::array();
    for (const auto& [g, m] : fac.factors)
        factors.push_back(Json{{"poly", to_string(g)}, {"multiplicity", m}});
    return Json{{"unit", to_string(fac.unit)}, {"factors", std::move(factors)}};
}

SquareIntMatrix read_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file", path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("matrix file is not valid JSON: ") + e.what(), path);
    }
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a JSON array of rows", path);
    const int n = static_cast<int>(j.size());
    std::vector<Int> entries;
    entries.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("matrix rows must all have the same length as the row count", path);
        for (const auto& cell : row) {
            if (cell.is_number_integer())
                entries.emplace_back(static_cast<long>(cell.get<long long>()));
            else if (cell.is_string())
                entries.emplace_back(cell.get<std::string>());
            else
                throw ParseError("matrix entries must be integers or integer strings", cell.dump());
        }
    }
    return SquareIntMatrix(n, std::move(entries));
}

FreeEndo read_endo_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open endomorphism file", path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("endomorphism file is not valid JSON: ") + e.what(), path);
    }
    Json images = j;
    if (j.is_object()) {
        if (!j.contains("images")) throw ParseError("missing \"images\" array", path);
        images = j["images"];
    }
    if (!images.is_array() || images.empty())
        throw ParseError("endomorphism must be a JSON array of image words", path);
    std::vector<FreeWord> words;
    for (const auto& s : images) {
        if (!s.is_string()) throw ParseError("image entries must be word strings", s.dump());
        words.push_back(parse_word(s.get<std::string>()));
    }
    const int rank = static_cast<int>(words.size());
    return FreeEndo(rank, std::move(words));
}

std::vector<Int> parse_vector(const std::string& text)
{
    std::vector<Int> v;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw ParseError("empty vector entry", text);
        try {
            v.emplace_back(cur);
        } catch (const std::invalid_argument&) {
            throw ParseError("vector entries must be integers", cur);
        }
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    flush();
    return v;
}

// Laurent input: polynomial text, or a JSON object {"minExp": k, "coeffs": [...]}
LaurentPoly parse_laurent_arg(const std::string& text)
{
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || text[i] != '{') return parse_laurent(text);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON coefficient object: ") + e.what(), text);
    }
    if (!j.contains("minExp") || !j.contains("coeffs") || !j["minExp"].is_number_integer() ||
        !j["coeffs"].is_array())
        throw ParseError("coefficient object needs integer \"minExp\" and array \"coeffs\"", text);
    std::vector<Int> coeffs;
    for (const auto& cell : j["coeffs"]) {
        if (cell.is_number_integer())
            coeffs.emplace_back(static_cast<long>(cell.get<long long>()));
        else if (cell.is_string())
            coeffs.emplace_back(cell.get<std::string>());
        else
            throw ParseError("coefficients must be integers or integer strings", cell.dump());
    }
    return LaurentPoly(static_cast<int>(j["minExp"].get<long long>()), std::move(coeffs));
}

Rat parse_rational(const std::string& text)
{
    try {
        Rat r(text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("expected a rational like -3 or 5/2", text);
    }
}

int default_depth()
{
    if (const char* env = std::getenv("BIORDER_DEPTH")) {
        const int d = std::atoi(env);
        if (d >= 1) return d;
    }
    return 4;
}

struct Outcome {
    int code = kExitSuccess;
    Json report;
    std::string human;
};

// ----------------------------------------------------------- subcommands ---

Outcome cmd_factor(const std::string& polyText)
{
    const IntPoly p = parse_int_poly(polyText);
    if (p.is_zero()) throw ParseError("cannot factor the zero polynomial", polyText);
    const Factorization fac = factor_rationals(p);
    Outcome o;
    o.report = Json{{"command", "factor"}, {"input", to_string(p)}, {"result", factorization_json(fac)}};
    std::ostringstream h;
    h << to_string(p) << " = " << to_string(fac.unit) << " ";
    for (const auto& [g, m] : fac.factors) {
        h << "(" << to_string(g) << ")";
        if (m > 1) h << "^" << m;
    }
    o.human = h.str();
    return o;
}

Outcome cmd_roots(const std::string& polyText, const std::string& rangeText)
{
    const IntPoly p = parse_int_poly(polyText);
    if (p.is_zero()) throw ParseError("zero polynomial has no root set", polyText);

    auto trim = [](std::string s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        return s;
    };
    Bound lo = Bound::neg_inf(), hi = Bound::pos_inf();
    const std::string range = trim(rangeText);
    if (!range.empty()) {
        const size_t comma = range.find(',');
        if (comma == std::string::npos)
            throw ParseError("range must look like a,b (use -inf/inf for open ends)", range);
        const std::string a = trim(range.substr(0, comma));
        const std::string b = trim(range.substr(comma + 1));
        if (a != "-inf") lo = Bound::at(parse_rational(a));
        if (b != "inf") hi = Bound::at(parse_rational(b));
    }
    const int count = count_real_roots(p, lo, hi);

    Json intervals = Json::array();
    Json rootsJson = Json::array();
    for (const RealAlgebraic& r : RealAlgebraic::roots_of(p)) {
        if (lo.finite() && r.compare(*lo.value) <= 0) continue;
        if (hi.finite() && r.compare(*hi.value) >= 0) continue;
        intervals.push_back(interval_json(r.interval()));
        rootsJson.push_back(algebraic_json(r));
    }
    Outcome o;
    o.report = Json{{"command", "roots"},
                    {"input", to_string(p)},
                    {"result", Json{{"count", count}, {"intervals", intervals}, {"roots", rootsJson}}}};
    std::ostringstream h;
    h << count << " distinct real root" << (count == 1 ? "" : "s");
    if (!range.empty()) h << " in (" << range << ")";
    for (const auto& r : rootsJson) h << "  ~" << r["approx"].get<std::string>();
    o.human = h.str();
    return o;
}

Outcome cmd_special(const std::string& polyText)
{
    const IntPoly p = parse_int_poly(polyText);
    const SpecialVerdict v = is_special(p);
    Json factors = Json::array();
    for (const auto& [g, cond] : v.perFactor)
        factors.push_back(Json{{"poly", to_string(g)}, {"condition", to_string(cond)}});
    Outcome o;
    o.code = v.isSpecial ? kExitSuccess : kExitNegative;
    o.report = Json{{"command", "special"},
                    {"input", to_string(p)},
                    {"result", Json{{"special", v.isSpecial}, {"factors", std::move(factors)}}}};
    std::ostringstream h;
    h << to_string(p) << (v.isSpecial ? " is special" : " is not special");
    for (const auto& [g, cond] : v.perFactor)
        h << "\n  " << to_string(g) << ": " << to_string(cond);
    o.human = h.str();
    return o;
}

Json evidence_json(const std::vector<OrderEvidence>& ev)
{
    Json out = Json::array();
    for (const OrderEvidence& e : ev)
        out.push_back(Json{{"factor", to_string(e.factor)},
                           {"has_positive_real_root", e.hasPositiveRealRoot}});
    return out;
}

Outcome cmd_abelian_check(const std::string& matrixPath)
{
    const SquareIntMatrix m = read_matrix_file(matrixPath);
    const auto [ok, evidence] = preserves_order(m);
    Outcome o;
    o.code = ok ? kExitSuccess : kExitNegative;
    o.report = Json{{"command", "abelian check"},
                    {"input", matrixPath},
                    {"result", Json{{"preserves_order", ok},
                                    {"char_poly", to_string(char_poly(m))},
                                    {"evidence", evidence_json(evidence)}}}};
    std::ostringstream h;
    h << (ok ? "preserves a bi-ordering" : "preserves no bi-ordering");
    for (const OrderEvidence& e : evidence)
        h << "\n  " << to_string(e.factor) << ": "
          << (e.hasPositiveRealRoot ? "has a positive real root" : "has no positive real root");
    o.human = h.str();
    return o;
}

Outcome cmd_abelian_sign(const std::string& matrixPath, const std::string& vecText)
{
    const SquareIntMatrix m = read_matrix_file(matrixPath);
    const std::vector<Int> v = parse_vector(vecText);
    {
        const auto [ok, evidence] = preserves_order(m);
        if (!ok) {
            Outcome o;
            o.code = kExitNegative;
            o.report = Json{{"command", "abelian sign"},
                            {"input", Json{{"matrix", matrixPath}, {"vector", vecText}}},
                            {"result", Json{{"result", "no-invariant-order"},
                                            {"evidence", evidence_json(evidence)}}}};
            o.human = "no invariant order exists for this matrix";
            return o;
        }
    }
    const OrderOracle oracle{m};
    const int s = oracle.sign(v);
    Outcome o;
    const char* sText = s > 0 ? "+" : (s < 0 ? "-" : "0");
    Json levels = Json::array();
    for (const FlagLevel& level : oracle.flag().levels)
        levels.push_back(Json{{"annihilator", to_string(level.g)},
                              {"rho", algebraic_json(level.rho)}});
    o.report = Json{{"command", "abelian sign"},
                    {"input", Json{{"matrix", matrixPath}, {"vector", vecText}}},
                    {"result", Json{{"sign", sText}, {"levels", std::move(levels)}}}};
    o.human = std::string("sign ") + sText;
    return o;
}

Json verdict_json(const Verdict& v)
{
    Json diag = Json::array();
    for (const std::string& f : v.diagnostics.failed) diag.push_back(f);
    Json rootCounts = Json::array();
    for (const FactorRootCounts& rc : v.rootCounts)
        rootCounts.push_back(Json{{"poly", to_string(rc.factor)},
                                  {"degree", rc.degree},
                                  {"real_roots", rc.realRoots},
                                  {"positive_real_roots", rc.positiveRealRoots}});
    Json specialFactors = Json::array();
    for (const auto& [g, cond] : v.special.perFactor)
        specialFactors.push_back(Json{{"poly", to_string(g)}, {"condition", to_string(cond)}});
    return Json{{"kind", to_string(v.kind)},
                {"failed_conditions", std::move(diag)},
                {"normalized", v.normalized.is_zero() ? "" : to_string(v.normalized)},
                {"factorization",
                 v.normalized.is_zero() ? Json(nullptr) : factorization_json(v.factorization)},
                {"all_roots_real_positive", v.allRootsRealPositive},
                {"factors", std::move(rootCounts)},
                {"special", Json{{"special", v.special.isSpecial},
                                 {"factors", std::move(specialFactors)}}}};
}

Outcome cmd_knot_verdict(const std::string& laurentText)
{
    const LaurentPoly a = parse_laurent_arg(laurentText);
    if (a.is_zero()) throw ParseError("zero polynomial is not an Alexander polynomial", laurentText);
    const Verdict v = orderability_verdict(a);
    Outcome o;
    switch (v.kind) {
    case VerdictKind::OrderableTPR:
    case VerdictKind::OrderableSpecial: o.code = kExitSuccess; break;
    case VerdictKind::Inconclusive: o.code = kExitNegative; break;
    case VerdictKind::InvalidInput: o.code = kExitInvalidInput; break;
    }
    Json result = verdict_json(v);
    if (v.kind != VerdictKind::InvalidInput)
        result["conway"] = to_string(conway_from_alexander(a), "z", true);
    o.report = Json{{"command", "knot verdict"}, {"input", to_string(a)}, {"result", std::move(result)}};
    std::ostringstream h;
    h << to_string(v.kind);
    if (v.kind == VerdictKind::InvalidInput)
        for (const std::string& f : v.diagnostics.failed) h << "\n  failed: " << f;
    else
        h << "  (normalized " << to_string(v.normalized) << ")";
    o.human = h.str();
    return o;
}

ConwayConvention parse_convention(const std::string& name)
{
    if (name == "paper" || name == "standard") return ConwayConvention::Minus;
    if (name == "plus") return ConwayConvention::Plus;
    throw ParseError("convention must be paper, standard, or plus", name);
}

Outcome cmd_knot_conway(const std::string& laurentText, const std::string& convName)
{
    const LaurentPoly a = parse_laurent_arg(laurentText);
    if (a.is_zero()) throw ParseError("cannot convert the zero polynomial", laurentText);
    const ConwayConvention conv = parse_convention(convName);
    const RatPoly nabla = conway_from_alexander(a, conv);
    // round-trip guard
    if (alexander_from_conway(nabla, conv) != a)
        throw std::logic_error("conway conversion failed to round-trip");
    Outcome o;
    o.report = Json{{"command", "knot conway"},
                    {"input", to_string(a)},
                    {"result", Json{{"conway", to_string(nabla, "z", true)},
                                    {"convention", convName}}}};
    o.human = to_string(nabla, "z", true);
    return o;
}

Outcome cmd_free_companion(const std::string& polyText)
{
    const IntPoly f = parse_int_poly(polyText);
    const FreeEndo endo = companion_automorphism(f);
    Json images = Json::array();
    for (const FreeWord& w : endo.images) images.push_back(to_string(w));
    const SquareIntMatrix m = abelianization_matrix(endo);
    Json rows = Json::array();
    for (int i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    Outcome o;
    o.report = Json{{"command", "free companion"},
                    {"input", to_string(f)},
                    {"result", Json{{"rank", endo.rank},
                                    {"images", std::move(images)},
                                    {"abelianization", std::move(rows)},
                                    {"char_poly", to_string(char_poly(m))}}}};
    std::ostringstream h;
    for (int i = 0; i < endo.rank; ++i) {
        if (i) h << ", ";
        h << "x" << (i + 1) << " -> " << to_string(endo.images[static_cast<size_t>(i)]);
    }
    o.human = h.str();
    return o;
}

Outcome cmd_free_compare(const std::string& endoPath, const std::string& w1Text,
                         const std::string& w2Text, int depth)
{
    const FreeEndo endo = read_endo_file(endoPath);
    const FreeWord u = parse_word(w1Text);
    const FreeWord v = parse_word(w2Text);
    {
        // the special hypothesis failing is a negative verdict, not bad input
        const SquareIntMatrix ab = abelianization_matrix(endo);
        const IntPoly cp = char_poly(ab);
        if (biorder::abs(ab.determinant()) != 1 || !is_special(cp).isSpecial) {
            Outcome o;
            o.code = kExitNegative;
            o.report = Json{{"command", "free compare"},
                            {"input", Json{{"endo", endoPath}, {"u", w1Text}, {"v", w2Text}}},
                            {"result", Json{{"result", "hypothesis-failed"},
                                            {"char_poly", to_string(cp)}}}};
            o.human = "hypothesis failed: characteristic polynomial " + to_string(cp) +
                      " of the abelianization is not special";
            return o;
        }
    }
    InvariantWordOrder order{endo};
    const auto cmp = order.compare_with_depth(u, v, depth);
    Outcome o;
    o.code = cmp.result == CompareResult::DepthExceeded ? kExitDepthExceeded : kExitSuccess;
    o.report = Json{{"command", "free compare"},
                    {"input", Json{{"endo", endoPath}, {"u", to_string(u)}, {"v", to_string(v)},
                                   {"depth_cap", depth}}},
                    {"result", Json{{"result", to_string(cmp.result)}, {"depth", cmp.depth}}}};
    std::ostringstream h;
    if (cmp.result == CompareResult::DepthExceeded)
        h << "depth exceeded (cap " << depth << ")";
    else
        h << to_string(u) << " " << to_string(cmp.result) << " " << to_string(v)
          << "  (depth " << cmp.depth << ")";
    o.human = h.str();
    return o;
}

Outcome cmd_free_verify_products(const std::string& matrixPath, int n, double tol)
{
    const SquareIntMatrix m = read_matrix_file(matrixPath);
    const bool ok = verify_product_eigenvalues(m, n, tol);
    Outcome o;
    o.code = ok ? kExitSuccess : kExitNegative;
    int dim = 1;
    for (int i = 0; i < n; ++i) dim *= m.size();
    o.report = Json{{"command", "free verify-products"},
                    {"input", Json{{"matrix", matrixPath}, {"n", n}}},
                    {"result", Json{{"ok", ok}, {"dimension", dim}, {"tolerance", tol}}}};
    o.human = ok ? "tensor-power eigenvalues match n-fold products"
                 : "tensor-power eigenvalues DO NOT match n-fold products";
    return o;
}

// ------------------------------------------------------------- dispatch ---

int run_single(const std::vector<std::string>& args, bool jsonOut, bool compact,
               std::ostream& out, std::ostream& err);

int run_batch(const std::string& path, bool jsonOut, std::ostream& out, std::ostream& err)
{
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot open batch file '" << path << "'\n";
        return kExitInvalidInput;
    }
    int worst = 0;
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
            trimmed.erase(trimmed.begin());
        if (trimmed.empty() || trimmed[0] == '#') continue;
        std::vector<std::string> tokens;
        try {
            tokens = CLI::detail::split_up(trimmed);
            CLI::detail::remove_quotes(tokens);
        } catch (const std::exception& e) {
            err << "error: bad batch line: " << e.what() << "\n";
            worst = std::max(worst, kExitInvalidInput);
            continue;
        }
        const int code = run_single(tokens, jsonOut, /*compact=*/true, out, err);
        worst = std::max(worst, code);
    }
    return worst;
}

int run_single(const std::vector<std::string>& argsIn, bool jsonOut, bool compact,
               std::ostream& out, std::ostream& err)
{
    // polynomials legitimately start with '-'; shield such tokens from the
    // option parser with a leading space (every text parser here skips
    // whitespace)
    std::vector<std::string> args;
    args.reserve(argsIn.size());
    for (const std::string& t : argsIn) {
        const bool dashValue = t.size() >= 2 && t[0] == '-' && t != "-h" &&
                               (std::isdigit(static_cast<unsigned char>(t[1])) ||
                                std::islower(static_cast<unsigned char>(t[1])));
        args.push_back(dashValue ? " " + t : t);
    }

    CLI::App app{"biorder: construct and verify automorphism-invariant bi-orderings"};
    app.require_subcommand(1);

    std::string polyArg, rangeArg, laurentArg, convArg = "paper";
    std::string matrixArg, vecArg, endoArg, w1Arg, w2Arg;
    int depthArg = default_depth();
    int nArg = 2;
    double tolArg = 1e-8;

    CLI::App* factor = app.add_subcommand("factor", "factor a polynomial over Q");
    factor->add_option("poly", polyArg, "polynomial, e.g. \"x^2-1\"")->required();

    CLI::App* roots = app.add_subcommand("roots", "count and isolate real roots");
    roots->add_option("poly", polyArg)->required();
    roots->add_option("--range", rangeArg, "open interval a,b (use -inf/inf)");

    CLI::App* special = app.add_subcommand("special", "classify a special polynomial");
    special->add_option("poly", polyArg)->required();

    CLI::App* abelian = app.add_subcommand("abelian", "orders on Z^n invariant under a matrix");
    abelian->require_subcommand(1);
    CLI::App* abCheck = abelian->add_subcommand("check", "decide whether an order exists");
    abCheck->add_option("matrix", matrixArg, "JSON file: array of rows")->required();
    CLI::App* abSign = abelian->add_subcommand("sign", "sign of a vector under the constructed order");
    abSign->add_option("matrix", matrixArg)->required();
    abSign->add_option("vector", vecArg, "comma-separated integers")->required();

    CLI::App* knot = app.add_subcommand("knot", "fibred-knot Alexander polynomial screening");
    knot->require_subcommand(1);
    CLI::App* kVerdict = knot->add_subcommand("verdict", "orderability verdict");
    kVerdict->add_option("laurent", laurentArg, "Laurent polynomial in x")->required();
    CLI::App* kConway = knot->add_subcommand("conway", "convert to the Conway form");
    kConway->add_option("laurent", laurentArg)->required();
    kConway->add_option("--convention", convArg, "paper|standard|plus (default paper)");

    CLI::App* free = app.add_subcommand("free", "free-group invariant orders");
    free->require_subcommand(1);
    CLI::App* fCompanion = free->add_subcommand("companion", "companion automorphism of a polynomial");
    fCompanion->add_option("poly", polyArg)->required();
    CLI::App* fCompare = free->add_subcommand("compare", "compare two words in the invariant order");
    fCompare->add_option("endo", endoArg, "JSON file: list of image words")->required();
    fCompare->add_option("w1", w1Arg)->required();
    fCompare->add_option("w2", w2Arg)->required();
    fCompare->add_option("--depth", depthArg, "Magnus depth cap (default BIORDER_DEPTH or 4)");
    CLI::App* fVerify = free->add_subcommand("verify-products", "tensor-power eigenvalue check");
    fVerify->add_option("matrix", matrixArg)->required();
    fVerify->add_option("n", nArg, "tensor power")->required();
    fVerify->add_option("--tol", tolArg, "matching tolerance (default 1e-8)");

    auto emitError = [&](const std::string& message, int code) {
        if (jsonOut) {
            Json j{{"error", message}, {"exit_code", code}};
            out << (compact ? j.dump() : j.dump(2)) << "\n";
        }
        err << "error: " << message << "\n";
        return code;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        return emitError(e.what(), kExitInvalidInput);
    }

    try {
        Outcome o;
        if (*factor)
            o = cmd_factor(polyArg);
        else if (*roots)
            o = cmd_roots(polyArg, rangeArg);
        else if (*special)
            o = cmd_special(polyArg);
        else if (*abCheck)
            o = cmd_abelian_check(matrixArg);
        else if (*abSign)
            o = cmd_abelian_sign(matrixArg, vecArg);
        else if (*kVerdict)
            o = cmd_knot_verdict(laurentArg);
        else if (*kConway)
            o = cmd_knot_conway(laurentArg, convArg);
        else if (*fCompanion)
            o = cmd_free_companion(polyArg);
        else if (*fCompare)
            o = cmd_free_compare(endoArg, w1Arg, w2Arg, depthArg);
        else if (*fVerify)
            o = cmd_free_verify_products(matrixArg, nArg, tolArg);
        else {
            err << "error: no subcommand selected\n";
            return kExitInvalidInput;
        }
        if (jsonOut) {
            o.report["exit_code"] = o.code;
            out << (compact ? o.report.dump() : o.report.dump(2)) << "\n";
        } else {
            std::string human = o.human;
            if (compact)
                for (char& ch : human)
                    if (ch == '\n') ch = ';';
            out << human << "\n";
        }
        return o.code;
    } catch (const ParseError& e) {
        return emitError(e.what(), kExitInvalidInput);
    } catch (const std::exception& e) {
        return emitError(e.what(), kExitInvalidInput);
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    // peel the global flags, which may appear anywhere before the subcommand
    bool jsonOut = false;
    std::string batchFile;
    std::vector<std::string> rest;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--json") {
            jsonOut = true;
        } else if (args[i] == "--batch") {
            if (i + 1 >= args.size()) {
                err << "error: --batch needs a file argument\n";
                return kExitInvalidInput;
            }
            batchFile = args[++i];
        } else {
            rest.push_back(args[i]);
        }
    }
    if (!batchFile.empty()) {
        if (!rest.empty()) {
            err << "error: --batch replaces the subcommand\n";
            return kExitInvalidInput;
        }
        return run_batch(batchFile, jsonOut, out, err);
    }
    return run_single(rest, jsonOut, /*compact=*/false, out, err);
}

} // namespace biorder::cli
