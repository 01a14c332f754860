#include "commands.hpp"

#include "kerov/algebra.hpp"
#include "kerov/identities.hpp"
#include "kerov/limit_theorems.hpp"
#include "kerov/observables.hpp"
#include "kerov/parallel.hpp"
#include "kerov/plancherel.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace kerov::cli {

namespace {

std::string normalize(std::string s) {
    const std::pair<std::string, std::string> subs[] = {
        {"p\xCC\x83", "pt"}, {"h\xCC\x83", "ht"}, {"f\xCC\x83", "ft"}, {"\xE2\x99\xAF", "#"}, {"\xC2\xB7", "*"},
        {"\xE2\x88\x92", "-"}};
    for (const auto& [from, to] : subs)
        for (size_t at; (at = s.find(from)) != std::string::npos;) s.replace(at, from.size(), to);
    for (int d = 0; d <= 9; ++d) {
        const std::string sub = {'\xE2', '\x82', static_cast<char>(0x80 + d)};
        for (size_t at; (at = s.find(sub)) != std::string::npos;) s.replace(at, sub.size(), std::to_string(d));
    }
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    return t;
}

Observable parse_factor(const std::string& f, Basis& basis, bool& have_basis, Rational& coeff) {
    if (f.empty()) throw std::invalid_argument("empty factor");
    if (std::isdigit(static_cast<unsigned char>(f[0]))) {
        Rational q(f);
        q.canonicalize();
        coeff *= q;
        return Observable();
    }
    static const std::pair<const char*, Basis> tags[] = {
        {"p#", Basis::psharp}, {"pt", Basis::ptilde}, {"ht", Basis::htilde}, {"ft", Basis::ftilde}, {"p", Basis::p}};
    for (const auto& [tag, b] : tags) {
        const std::string t = tag;
        if (f.rfind(t, 0) != 0) continue;
        const std::string idx = f.substr(t.size());
        if (idx.empty()) throw std::invalid_argument("missing index in '" + f + "'");
        if (!have_basis) {
            basis = b;
            have_basis = true;
        }
        Partition key = parse_partition(idx);
        Observable o = Observable::term(b, key);
        if (b != Basis::psharp && key.size() != 1)  // pt2,3 is the product pt2*pt3
            o = Observable::term(b, canonical(key));
        return o;
    }
    throw std::invalid_argument("unrecognized factor '" + f + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

std::ostream& emit_json(std::ostream& out, const RunConfig& c, nlohmann::json body) {
    body["config"] = to_json(c);
    return out << body.dump(2) << "\n";
}

MonteCarloConfig mc(const RunConfig& c) {
    MonteCarloConfig m;
    m.n = c.n;
    m.samples = c.samples;
    m.kmax = c.kmax;
    m.seed = c.seed;
    m.threads = c.threads;
    return m;
}

}  // namespace

Partition parse_partition(const std::string& text) {
    std::string spaced = text;  // blanks separate parts too
    for (char& ch : spaced)
        if (std::isspace(static_cast<unsigned char>(ch))) ch = ',';
    std::string t;
    for (char ch : normalize(spaced))
        if (ch != '(' && ch != ')') t += ch;
    Partition p;
    if (t.empty() || t == "-") return p;
    for (const auto& part : split(t, ',')) {
        if (part.empty()) continue;
        size_t used = 0;
        int v = std::stoi(part, &used);
        if (used != part.size() || v < 1) throw std::invalid_argument("bad partition '" + text + "'");
        p.push_back(v);
    }
    return canonical(p);
}

Observable parse_observable(const std::string& text) {
    std::string s = normalize(text);
    if (s.empty()) throw std::invalid_argument("empty observable");
    // split into signed terms at top-level + and -
    std::vector<std::pair<int, std::string>> terms;
    int sign = 1;
    std::string cur;
    for (size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        bool sep = (ch == '+' || ch == '-') && (i == 0 || (s[i - 1] != '/' && s[i - 1] != '*'));
        if (sep) {
            if (!cur.empty()) terms.emplace_back(sign, cur);
            cur.clear();
            sign = ch == '-' ? -1 : 1;
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) terms.emplace_back(sign, cur);

    Basis basis = Basis::p;
    bool have_basis = false;
    std::vector<std::pair<Rational, std::vector<Observable>>> parsed;
    for (const auto& [sg, term] : terms) {
        Rational coeff = sg;
        std::vector<Observable> fs;
        for (const auto& f : split(term, '*')) {
            Observable o = parse_factor(f, basis, have_basis, coeff);
            if (!o.is_zero()) fs.push_back(o);
        }
        parsed.emplace_back(coeff, fs);
    }
    Observable total(basis);
    for (const auto& [coeff, fs] : parsed) {
        Observable t = Observable::constant(basis, coeff);
        for (const auto& f : fs) t = t * to_basis(f, basis);
        total += t;
    }
    return total;
}

std::string dump_observable(const std::string& text, const std::string& tag) {
    return to_basis(parse_observable(text), parse_basis_tag(tag)).to_text();
}

std::string structure_text(const std::string& sigma, const std::string& tau) {
    return format_expansion(structure_constants(parse_partition(sigma), parse_partition(tau)));
}

int cmd_identities(const RunConfig& c, std::ostream& out, std::ostream& log) {
    IdentityCaps caps;
    caps.diagram_boxes = c.cap_boxes;
    caps.index = c.kmax;
    caps.residue_index = c.kmax;
    caps.lln_index = c.kmax;
    auto rep = run_identities(caps, c.args, resolve_threads(c.threads));
    if (c.format == "json") {
        emit_json(out, c, rep.to_json());
    } else {
        out << csv_header(c) << "group,name,cases,failures,pass\n";
        for (const auto& k : rep.checks)
            out << k.group << ",\"" << k.name << "\"," << k.cases << "," << k.failures << "," << (k.pass() ? 1 : 0) << "\n";
    }
    long failed = 0;
    for (const auto& k : rep.checks) {
        log << (k.pass() ? "PASS " : "FAIL ") << "[" << k.group << "] " << k.name << " (" << k.cases << " cases";
        if (!k.pass()) log << ", " << k.failures << " failed, first: " << k.first_failure;
        log << ")\n";
        failed += !k.pass();
    }
    log << rep.checks.size() - failed << "/" << rep.checks.size() << " checks passed\n";
    return rep.all_pass() ? 0 : 1;
}

int cmd_sample(const RunConfig& c, std::ostream& out) {
    out << nlohmann::json{{"config", to_json(c)}}.dump() << "\n";
    const int threads = resolve_threads(c.threads);
    const long block = 1 << 14;  // bounded memory for large counts
    for (long start = 0; start < c.samples; start += block) {
        const long m = std::min(block, c.samples - start);
        std::vector<YoungDiagram> ys(m);
        parallel_for(m, threads, [&](std::size_t i) { ys[i] = sample(c.n, derive_seed(c.seed, start + i)); });
        for (long i = 0; i < m; ++i)
            out << nlohmann::json{{"seed", derive_seed(c.seed, start + i)}, {"n", c.n}, {"rows", ys[i].rows()}}.dump() << "\n";
    }
    return 0;
}

int cmd_expect(const RunConfig& c, std::ostream& out) {
    if (c.args.empty()) throw std::invalid_argument("expect: an observable is required");
    Observable f = parse_observable(c.args.front());
    auto poly = expectation_polynomial(f);
    const int threads = resolve_threads(c.threads);
    std::vector<std::pair<long, Rational>> rows;
    for (long n = 1; n <= c.n; ++n) rows.emplace_back(n, exact_expectation(f, static_cast<int>(n), c.cap_boxes, threads));
    if (c.format == "json") {
        nlohmann::json j{{"observable", f.to_text()}, {"polynomial", poly.monomial().to_string("n")}};
        for (const auto& [n, v] : rows)
            j["values"].push_back({{"n", n}, {"enumerated", v.get_str()}, {"closed_form", poly(n).get_str()}});
        emit_json(out, c, j);
    } else {
        out << csv_header(c) << "# polynomial=" << poly.monomial().to_string("n") << "\nn,enumerated,closed_form\n";
        for (const auto& [n, v] : rows) out << n << "," << v.get_str() << "," << poly(n).get_str() << "\n";
    }
    for (const auto& [n, v] : rows)
        if (v != poly(n)) return 1;
    return 0;
}

namespace {
int emit_report(const RunConfig& c, const MomentReport& r, std::ostream& out) {
    if (c.format == "json")
        emit_json(out, c, r.to_json());
    else
        out << csv_header(c) << r.to_csv();
    return r.all_pass() ? 0 : 1;
}
}  // namespace

int cmd_clt(const RunConfig& c, std::ostream& out) {
    auto s = draw_samples(mc(c));
    if (c.variant == "characters") return emit_report(c, run_clt_characters(s), out);
    if (c.variant == "shape") return emit_report(c, run_clt_shape(s), out);
    return emit_report(c, run_clt_transition(s), out);
}

int cmd_lln(const RunConfig& c, std::ostream& out) { return emit_report(c, run_lln(mc(c)), out); }

int cmd_biane(const RunConfig& c, std::ostream& out) {
    DiagramFamily fam = c.family == "blowup" ? blowup_family(YoungDiagram::parse(c.base)) : plancherel_family(c.seed);
    auto r = biane_check(fam, parse_partition(c.rho), c.ns, c.A);
    if (c.format == "json")
        emit_json(out, c, r.to_json());
    else
        out << csv_header(c) << r.to_csv();
    return r.pass ? 0 : 1;
}

int cmd_shape(const RunConfig& c, std::ostream& out) {
    YoungDiagram lambda = sample(c.n, derive_seed(c.seed, 0));
    const auto xi = reference_coefficients(c.kmax, c.seed);
    const double L = 2.5, sq = std::sqrt(static_cast<double>(c.n));
    nlohmann::json rows = nlohmann::json::array();
    if (c.format == "csv")
        out << csv_header(c) << "# rows=" << lambda.to_string() << "\n"
            << "# reference: truncated series for Delta with kmax terms, zero outside (-2,2)\n"
            << "x,lambda_bar,omega,delta,reference\n";
    for (int i = 0; i < c.grid; ++i) {
        double x = c.grid == 1 ? 0.0 : -L + 2 * L * i / (c.grid - 1);
        if (std::abs(x) < 1e-12) x = 0;
        const double lb = c.n == 0 ? std::abs(x) : rescaled_profile_value(lambda, x);
        const double om = omega(x);
        const double d = sq * (lb - om) / 2;
        const double ref = std::abs(x) < 2 ? delta_truncation(xi, x) : 0.0;
        if (c.format == "csv")
            out << format_double(x) << "," << format_double(lb) << "," << format_double(om) << "," << format_double(d) << ","
                << format_double(ref) << "\n";
        else
            rows.push_back({x, lb, om, d, ref});
    }
    if (c.format == "json")
        emit_json(out, c,
                  {{"rows", lambda.to_string()}, {"columns", {"x", "lambda_bar", "omega", "delta", "reference"}}, {"data", rows}});
    return 0;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& log) {
    validate(c);
    if (c.subcommand == "identities") return cmd_identities(c, out, log);
    if (c.subcommand == "sample") return cmd_sample(c, out);
    if (c.subcommand == "expect") return cmd_expect(c, out);
    if (c.subcommand == "clt") return cmd_clt(c, out);
    if (c.subcommand == "lln") return cmd_lln(c, out);
    if (c.subcommand == "biane") return cmd_biane(c, out);
    if (c.subcommand == "shape") return cmd_shape(c, out);
    throw std::invalid_argument("unknown subcommand " + c.subcommand);
}

}  // namespace kerov::cli
