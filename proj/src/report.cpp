#include "cuboid/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "cuboid/certificate.hpp"
#include "cuboid/ecq.hpp"
#include "cuboid/exclusion.hpp"
#include "cuboid/gcd_lemma.hpp"
#include "cuboid/oracle.hpp"
#include "cuboid/padic.hpp"
#include "cuboid/params.hpp"
#include "cuboid/residual.hpp"

namespace cuboid::report {

using cuboid::to_string;

using json = nlohmann::ordered_json;

namespace {

constexpr Check kAllChecks[] = {Check::Star,     Check::Even44,    Check::Conj44,
                                Check::Quad26,   Check::GcdLemma,  Check::EcTorsion,
                                Check::Residuals, Check::Oracle,   Check::Full};

json int_json(const Int& n) {
    if (auto v = to_int64(n)) return *v;
    return to_string(n);
}

Int json_int(const json& j) {
    if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw Error(ErrorCode::ParseError, "expected integer, got " + j.dump());
}

json ints_json(const std::vector<Int>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(int_json(x));
    return out;
}

std::vector<Int> json_ints(const json& j) {
    std::vector<Int> out;
    for (const auto& x : j) out.push_back(json_int(x));
    return out;
}

json rows_json(const std::vector<std::vector<Int>>& rows) {
    json out = json::array();
    for (const auto& r : rows) out.push_back(ints_json(r));
    return out;
}

std::vector<std::vector<Int>> json_rows(const json& j) {
    std::vector<std::vector<Int>> out;
    for (const auto& r : j) out.push_back(json_ints(r));
    return out;
}

ErrorCode parse_error_code(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(ErrorCode::ParseError); ++i) {
        const auto code = static_cast<ErrorCode>(i);
        if (to_string(code) == name) return code;
    }
    throw Error(ErrorCode::ParseError, "unknown error code " + name);
}

template <class F>
auto timed(bool enabled, std::map<std::string, double>& sink, const std::string& name, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    if (enabled)
        sink[name] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::string_view to_string(Check c) noexcept {
    switch (c) {
        case Check::Star: return "star";
        case Check::Even44: return "even44";
        case Check::Conj44: return "conj44";
        case Check::Quad26: return "quad26";
        case Check::GcdLemma: return "gcd_lemma";
        case Check::EcTorsion: return "ec_torsion";
        case Check::Residuals: return "residuals";
        case Check::Oracle: return "oracle";
        case Check::Full: return "full";
    }
    return "?";
}

std::set<Check> parse_checks(std::string_view list) {
    std::set<Check> out;
    std::stringstream ss{std::string(list)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        if (item == "all") {
            out.insert(std::begin(kAllChecks), std::end(kAllChecks));
            continue;
        }
        const auto it = std::find_if(std::begin(kAllChecks), std::end(kAllChecks),
                                     [&](Check c) { return to_string(c) == item; });
        if (it == std::end(kAllChecks)) throw Error(ErrorCode::ParseError, "unknown check '" + item + "'");
        out.insert(*it);
    }
    if (out.empty()) throw Error(ErrorCode::ParseError, "empty check list");
    return out;
}

bool is_global(Check c) noexcept {
    return c == Check::GcdLemma || c == Check::EcTorsion || c == Check::Residuals;
}

void RunConfig::validate() const {
    if (!pairs_file) {
        if (a_max < 1) throw Error(ErrorCode::ParseError, "a_max must be >= 1");
        if (u_max < 1) throw Error(ErrorCode::ParseError, "u_max must be >= 1");
    }
    if (prime_limit < 2) throw Error(ErrorCode::ParseError, "prime_limit must be >= 2");
    if (prime_limit > (std::uint64_t{1} << 24)) throw Error(ErrorCode::ParseError, "prime_limit too large");
    if (checks.empty()) throw Error(ErrorCode::ParseError, "no checks selected");
    if (jobs < 1) throw Error(ErrorCode::ParseError, "jobs must be >= 1");
    if (gcd_max_abs < 0 || gcd_param_range < 1) throw Error(ErrorCode::ParseError, "bad gcd lemma range");
    if (residual_bound < 0 || p2_residual_bound < 0) throw Error(ErrorCode::ParseError, "bad residual bound");
}

bool ExclusionReport::violation() const {
    if (error) return false;
    if (star && !star->solutions.empty()) return true;
    if (even44 && !even44->candidates.empty()) return true;
    if (conj44 && !conj44->candidates.empty()) return true;
    if (quad26 && (!quad26->excluded || !quad26->routes_agree)) return true;
    if (full && full->verdict == "Failed") return true;
    return false;
}

json to_json(const ExclusionReport& r) {
    json j;
    j["schema"] = kSchema;
    if (r.a) j["a"] = int_json(*r.a);
    if (r.u) j["u"] = int_json(*r.u);
    if (r.line) j["line"] = *r.line;
    if (r.error) j["error"] = {{"code", to_string(r.error->code)}, {"message", r.error->message}};
    if (r.delta) j["delta"] = int_json(*r.delta);
    if (!r.coeffs.empty()) j["coeffs"] = ints_json(r.coeffs);
    if (!r.error) {
        json checks = json::object();
        if (r.star) checks["star"] = {{"solutions", ints_json(r.star->solutions)}, {"bound", int_json(r.star->bound)}};
        if (r.even44) checks["even44"] = {{"candidates", rows_json(r.even44->candidates)}};
        if (r.conj44) {
            const auto& c = *r.conj44;
            checks["conj44"] = {{"candidates", rows_json(c.candidates)},
                                {"divisor_pairs", c.divisor_pairs},
                                {"same_parity_pairs", c.same_parity_pairs},
                                {"negative_branch_residual", int_json(c.negative_branch_residual)},
                                {"min_completed_square",
                                 c.min_completed_square ? int_json(*c.min_completed_square) : json(nullptr)}};
        }
        if (r.quad26) {
            const auto& q = *r.quad26;
            checks["quad26"] = {{"divisors", ints_json(q.divisors)},
                                {"divisors_scanned", q.divisors_scanned},
                                {"disc_route", q.disc_route},
                                {"routes_agree", q.routes_agree},
                                {"excluded", q.excluded}};
        }
        if (r.oracle) {
            const auto& o = *r.oracle;
            checks["oracle"] = {{"verdict", o.verdict},
                                {"primes", o.primes},
                                {"skipped", o.skipped},
                                {"intersection", o.intersection}};
        }
        if (r.full) {
            json patterns = json::array();
            for (const auto& [name, ev] : r.full->patterns) patterns.push_back({{"pattern", name}, {"evidence", ev}});
            checks["full"] = {{"verdict", r.full->verdict},
                              {"structural_complete", r.full->structural_complete},
                              {"oracle_verdict", r.full->oracle_verdict},
                              {"patterns", patterns}};
        }
        j["checks"] = checks;
    }
    if (!r.elapsed_ms.empty()) {
        json t = json::object();
        for (const auto& [k, v] : r.elapsed_ms) t[k] = v;
        j["elapsed_ms"] = t;
    }
    return j;
}

ExclusionReport from_json(const json& j) {
    try {
        if (!j.is_object() || j.value("schema", 0) != kSchema)
            throw Error(ErrorCode::ParseError, "missing or unsupported schema");
        ExclusionReport r;
        if (j.contains("a")) r.a = json_int(j["a"]);
        if (j.contains("u")) r.u = json_int(j["u"]);
        if (j.contains("line")) r.line = j["line"].get<std::uint64_t>();
        if (j.contains("error"))
            r.error = ReportError{parse_error_code(j["error"]["code"].get<std::string>()),
                                  j["error"]["message"].get<std::string>()};
        if (j.contains("delta")) r.delta = json_int(j["delta"]);
        if (j.contains("coeffs")) r.coeffs = json_ints(j["coeffs"]);
        if (j.contains("checks")) {
            const auto& c = j["checks"];
            if (c.contains("star")) r.star = StarCheck{json_int(c["star"]["bound"]), json_ints(c["star"]["solutions"])};
            if (c.contains("even44")) r.even44 = Even44Check{json_rows(c["even44"]["candidates"])};
            if (c.contains("conj44")) {
                const auto& x = c["conj44"];
                Conj44Check k;
                k.candidates = json_rows(x["candidates"]);
                k.divisor_pairs = x["divisor_pairs"].get<std::uint64_t>();
                k.same_parity_pairs = x["same_parity_pairs"].get<std::uint64_t>();
                k.negative_branch_residual = json_int(x["negative_branch_residual"]);
                if (!x["min_completed_square"].is_null()) k.min_completed_square = json_int(x["min_completed_square"]);
                r.conj44 = k;
            }
            if (c.contains("quad26")) {
                const auto& x = c["quad26"];
                r.quad26 = Quad26Check{json_ints(x["divisors"]), x["divisors_scanned"].get<std::uint64_t>(),
                                       x["disc_route"].get<std::string>(), x["routes_agree"].get<bool>(),
                                       x["excluded"].get<bool>()};
            }
            if (c.contains("oracle")) {
                const auto& x = c["oracle"];
                r.oracle = OracleCheck{x["verdict"].get<std::string>(), x["primes"].get<std::vector<std::uint64_t>>(),
                                       x["skipped"].get<std::vector<std::uint64_t>>(),
                                       x["intersection"].get<std::vector<unsigned>>()};
            }
            if (c.contains("full")) {
                const auto& x = c["full"];
                FullCheck f;
                f.verdict = x["verdict"].get<std::string>();
                f.structural_complete = x["structural_complete"].get<bool>();
                f.oracle_verdict = x["oracle_verdict"].get<std::string>();
                for (const auto& p : x["patterns"])
                    f.patterns.emplace_back(p["pattern"].get<std::string>(), p["evidence"].get<std::string>());
                r.full = f;
            }
        }
        if (j.contains("elapsed_ms"))
            for (const auto& [k, v] : j["elapsed_ms"].items()) r.elapsed_ms[k] = v.get<double>();
        return r;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::string tsv_header() { return "a\tu\tdelta\tA\tB\tC\tD\tstar\teven44\tconj44\tquad26\toracle\tfull\terror"; }

std::string to_tsv(const ExclusionReport& r) {
    auto opt = [](const std::optional<Int>& x) { return x ? to_string(*x) : std::string("-"); };
    std::string row = opt(r.a) + "\t" + opt(r.u) + "\t" + opt(r.delta);
    for (std::size_t i = 0; i < 4; ++i) row += "\t" + (i < r.coeffs.size() ? to_string(r.coeffs[i]) : std::string("-"));
    row += "\t" + (r.star ? std::to_string(r.star->solutions.size()) : "-");
    row += "\t" + (r.even44 ? std::to_string(r.even44->candidates.size()) : "-");
    row += "\t" + (r.conj44 ? std::to_string(r.conj44->candidates.size()) : "-");
    row += "\t" + (r.quad26 ? std::string(r.quad26->excluded ? "excluded" : "open") : "-");
    row += "\t" + (r.oracle ? r.oracle->verdict : "-");
    row += "\t" + (r.full ? r.full->verdict : "-");
    row += "\t" + (r.error ? std::string(to_string(r.error->code)) : "-");
    return row;
}

ExclusionReport run_pair(const Int& a, const Int& u, const RunConfig& config) {
    ExclusionReport r;
    r.a = a;
    r.u = u;
    std::optional<CuboidParams> made;
    try {
        made = CuboidParams::make(a, u);
    } catch (const Error& e) {
        r.error = ReportError{e.code(), e.what()};
        return r;
    }
    const CuboidParams& params = *made;
    r.delta = params.delta();
    r.coeffs = {params.coeff_A(), params.coeff_B(), params.coeff_C(), params.coeff_D()};
    const auto& checks = config.checks;
    const bool full = checks.contains(Check::Full);
    auto& clock = r.elapsed_ms;
    const bool timing = config.timing;

    exclusion::StructuralRun run;
    if (full || checks.contains(Check::Star))
        run.star_solutions = timed(timing, clock, "star", [&] { return exclusion::solve_star(params); });
    if (full || checks.contains(Check::Even44))
        run.even44 = timed(timing, clock, "even44", [&] { return exclusion::solve_even_44(params); });
    if (full || checks.contains(Check::Conj44))
        run.conj44 = timed(timing, clock, "conj44", [&] { return exclusion::solve_conj_44_detailed(params); });
    if (full || checks.contains(Check::Quad26))
        run.quad26 = timed(timing, clock, "quad26", [&] { return exclusion::exclude_2_6(params); });

    if (checks.contains(Check::Star)) r.star = StarCheck{exclusion::star_search_bound(params), run.star_solutions};
    if (checks.contains(Check::Even44)) {
        Even44Check e;
        for (const auto& c : run.even44) e.candidates.push_back({c.p, c.q, c.r, c.s});
        r.even44 = e;
    }
    if (checks.contains(Check::Conj44)) {
        Conj44Check c;
        for (const auto& k : run.conj44.candidates) c.candidates.push_back({k.alpha, k.beta, k.gamma, k.delta});
        c.divisor_pairs = run.conj44.divisor_pairs;
        c.same_parity_pairs = run.conj44.same_parity_pairs;
        c.negative_branch_residual = run.conj44.negative_branch_residual;
        c.min_completed_square = run.conj44.min_completed_square;
        r.conj44 = c;
    }
    if (checks.contains(Check::Quad26)) {
        const auto& q = run.quad26;
        r.quad26 = Quad26Check{q.dividing_q, q.divisors_scanned, q.disc_square_q.empty() ? "blocked" : "square",
                               q.routes_agree, q.excluded};
    }

    std::optional<oracle::IrredCertificate> cert;
    if (full || checks.contains(Check::Oracle)) {
        const auto primes = padic::primes_below(config.prime_limit);
        cert = timed(timing, clock, "oracle", [&] { return oracle::oracle_certify(params, primes); });
    }
    if (checks.contains(Check::Oracle)) {
        OracleCheck o;
        o.verdict = std::string(oracle::to_string(cert->verdict));
        for (const auto& p : cert->patterns) o.primes.push_back(p.prime);
        o.skipped = cert->skipped_primes;
        o.intersection.assign(cert->intersection.begin(), cert->intersection.end());
        r.oracle = o;
    }
    if (full) {
        cert->structural = exclusion::structural_evidence(run);
        FullCheck f;
        f.structural_complete = cert->structural->complete;
        f.oracle_verdict = std::string(oracle::to_string(cert->verdict));
        f.verdict = !f.structural_complete ? "Failed" : cert->full() ? "Proven" : "Excluded";
        for (const auto& p : cert->structural->patterns) f.patterns.emplace_back(p.pattern, p.evidence);
        r.full = f;
    }
    return r;
}

bool EcSuiteReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const EcSuiteItem& i) { return i.pass; });
}

EcSuiteReport run_ec_suite() {
    using namespace ecq;
    EcSuiteReport rep;
    auto item = [&](std::string name, bool pass, std::string detail) {
        rep.items.push_back({std::move(name), pass, std::move(detail)});
    };
    auto pt = [](long x, long y) { return ECPoint(Rational(Int(x)), Rational(Int(y))); };
    auto list = [](const std::vector<ECPoint>& pts) {
        std::string s;
        for (const auto& p : pts) s += (s.empty() ? "" : " ") + to_string(p);
        return s;
    };

    const ECCurve E = ECCurve::e0();
    std::vector<ECPoint> expected{ECPoint::infinity(), pt(0, 0),  pt(-1, 0), pt(-9, 0),
                                  pt(3, 12),           pt(3, -12), pt(-3, 6), pt(-3, -6)};
    std::sort(expected.begin(), expected.end());

    const auto torsion = nagell_lutz_torsion(E);
    item("torsion_points", torsion.points == expected,
         std::to_string(torsion.points.size()) + " points: " + list(torsion.points));
    item("group_structure", torsion.structure == "Z/2 x Z/4", torsion.structure);

    const auto d1 = scalar_mul(Int(2), pt(3, 12), E);
    item("duplication_3_12", d1 == pt(0, 0), "2(3,12) = " + to_string(d1));
    const auto d2 = scalar_mul(Int(2), pt(-3, 6), E);
    item("duplication_-3_6", d2 == pt(0, 0), "2(-3,6) = " + to_string(d2));
    bool halves_ok = true;
    for (const auto& p : torsion.points) {
        const auto d = scalar_mul(Int(2), p, E);
        halves_ok = halves_ok && d != pt(-1, 0) && d != pt(-9, 0);
    }
    item("doubles_of_torsion", halves_ok, "2T = {O, (0,0)}");

    const auto sq = square_x_points(torsion.points);
    item("square_x_filter", sq == std::vector<ECPoint>{pt(0, 0)}, list(sq));

    const auto shortm = transform_to_short(E);
    bool maps_ok = shortm.curve == ECCurve(0, 0, 0, -1971, 32130);
    for (const auto& p : torsion.points) {
        const auto q = shortm.forward(p);
        maps_ok = maps_ok && on_curve(q, shortm.curve) && shortm.backward(q) == p;
    }
    item("short_model", maps_ok, to_string(shortm.curve));

    const ECCurve M = ECCurve::minimal_e0();
    const auto mt = nagell_lutz_torsion(M);
    item("minimal_model_torsion", mt.points.size() == 8 && mt.structure == "Z/2 x Z/4",
         std::to_string(mt.points.size()) + " points, " + mt.structure);

    bool iso_ok = transform_to_short(M).curve == shortm.curve;
    for (const auto& p : torsion.points)
        iso_ok = iso_ok && (p.is_infinity() || on_curve(ECPoint(p.x() + 3, p.y()), M));
    item("minimal_model_map", iso_ok, "(x, y) -> (x + 3, y)");

    const Rational j0 = j_invariant(E), j1 = j_invariant(shortm.curve), j2 = j_invariant(M);
    item("j_invariants", j0 == j1 && j1 == j2, to_string(j0));

    const auto found = bounded_point_search(E, Int(200));
    const bool all_torsion = std::all_of(found.begin(), found.end(), [&](const ECPoint& p) {
        return std::binary_search(expected.begin(), expected.end(), p);
    });
    item("bounded_search", found.size() == 7 && all_torsion,
         std::to_string(found.size()) + " finite points, height 200");
    return rep;
}

json to_json(const EcSuiteReport& r) {
    json items = json::array();
    for (const auto& i : r.items) items.push_back({{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
    return {{"pass", r.all_pass()}, {"items", items}};
}

json to_json(const Summary& s) {
    json body = {{"reports", s.reports},
                 {"invalid", s.invalid},
                 {"proven", s.proven},
                 {"inconclusive", s.inconclusive},
                 {"violations", s.violations}};
    if (!s.global.empty()) body["global"] = s.global;
    return {{"schema", kSchema}, {"summary", body}};
}

std::vector<WorkItem> work_items(const RunConfig& config) {
    std::vector<WorkItem> items;
    if (config.pairs_file) {
        std::ifstream in(*config.pairs_file);
        if (!in) throw Error(ErrorCode::ParseError, "cannot read pairs file " + *config.pairs_file);
        std::string line;
        std::uint64_t number = 0;
        while (std::getline(in, line)) {
            ++number;
            std::string body = line.substr(0, line.find('#'));
            std::replace(body.begin(), body.end(), ',', ' ');
            body = trim(body);
            if (body.empty()) continue;
            WorkItem w;
            w.line = number;
            w.row = trim(line);
            std::istringstream fields(body);
            std::string x, y, extra;
            if (fields >> x >> y && !(fields >> extra)) {
                try {
                    w.a = parse_int(x);
                    w.u = parse_int(y);
                } catch (const Error&) {
                    w.a.reset();
                    w.u.reset();
                }
            }
            items.push_back(std::move(w));
        }
        return items;
    }
    for (std::int64_t a = 1; a <= config.a_max; ++a)
        for (std::int64_t u = 1; u <= config.u_max; ++u)
            if (a != u && std::gcd(a, u) == 1) items.push_back({Int(static_cast<long>(a)), Int(static_cast<long>(u)), 0, {}});
    return items;
}

BatchResult run_batch(const RunConfig& config) {
    config.validate();
    const auto items = work_items(config);
    BatchResult result;
    result.reports.resize(items.size());

    auto process = [&](std::size_t i) {
        const auto& w = items[i];
        if (!w.a) {
            ExclusionReport r;
            r.line = w.line;
            r.error = ReportError{ErrorCode::ParseError, "line " + std::to_string(w.line) + ": '" + w.row + "'"};
            result.reports[i] = std::move(r);
            return;
        }
        result.reports[i] = run_pair(*w.a, *w.u, config);
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) process(i);
    };
    const unsigned n = std::min<std::size_t>(config.jobs, std::max<std::size_t>(items.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    Summary& s = result.summary;
    for (const auto& r : result.reports) {
        ++s.reports;
        if (r.error) ++s.invalid;
        if (r.violation()) ++s.violations;
        std::optional<bool> proven;
        if (r.oracle) proven = r.oracle->verdict == "Proven";
        else if (r.full) proven = r.full->oracle_verdict == "Proven";
        if (proven) ++(*proven ? s.proven : s.inconclusive);
    }

    const auto& checks = config.checks;
    if (checks.contains(Check::GcdLemma)) {
        const auto g = exclusion::verify_gcd_lemma(Int(static_cast<long>(config.gcd_max_abs)),
                                                   Int(static_cast<long>(config.gcd_param_range)));
        json violations = json::array();
        for (const auto& [p, X] : g.violations) violations.push_back({int_json(p.a()), int_json(p.u()), int_json(X)});
        json tally = json::object();
        for (const auto& [label, count] : g.tally) tally[label] = count;
        const bool bad = !g.violations.empty() || g.unattributed > 0;
        s.global["gcd_lemma"] = {{"max_abs", config.gcd_max_abs}, {"param_range", config.gcd_param_range},
                                 {"pairs", g.pairs},             {"checked", g.checked},
                                 {"skipped_coprime", g.skipped_coprime}, {"unattributed", g.unattributed},
                                 {"violations", violations},     {"tally", tally},
                                 {"pass", !bad}};
        if (bad) ++s.violations;
    }
    if (checks.contains(Check::EcTorsion)) {
        const auto ec = run_ec_suite();
        s.global["ec_torsion"] = to_json(ec);
        if (!ec.all_pass()) ++s.violations;
    }
    if (checks.contains(Check::Residuals)) {
        const auto res = exclusion::residual_system_search(config.residual_bound);
        const auto p2 = exclusion::verify_p2_residual(config.p2_residual_bound);
        json nontrivial = json::array();
        for (const auto& p : res.nontrivial) nontrivial.push_back({p.u, p.w, p.m, p.n});
        json hits = json::array();
        for (const auto& h : p2.hits) hits.push_back({h.m, h.n, h.k, h.delta1, h.d});
        const bool bad = !res.nontrivial.empty() || !p2.hits.empty();
        s.global["residuals"] = {{"bound", res.bound},
                                 {"nontrivial", nontrivial},
                                 {"trivial_w_zero", res.trivial_w_zero},
                                 {"trivial_n_zero", res.trivial_n_zero},
                                 {"p2_bound", p2.bound},
                                 {"p2_pairs_examined", p2.pairs_examined},
                                 {"p2_hits", hits},
                                 {"pass", !bad}};
        if (bad) ++s.violations;
    }
    return result;
}

void write_batch(const BatchResult& result, Format format, std::ostream& out) {
    if (format == Format::JsonLines) {
        for (const auto& r : result.reports) out << to_json(r).dump() << '\n';
        out << to_json(result.summary).dump() << '\n';
        return;
    }
    out << tsv_header() << '\n';
    for (const auto& r : result.reports) out << to_tsv(r) << '\n';
    const auto& s = result.summary;
    out << "#summary\treports=" << s.reports << "\tinvalid=" << s.invalid << "\tproven=" << s.proven
        << "\tinconclusive=" << s.inconclusive << "\tviolations=" << s.violations << '\n';
    for (const auto& [name, body] : s.global.items()) out << "#global\t" << name << '\t' << body.dump() << '\n';
}

int exit_code(const BatchResult& result) { return result.summary.violations > 0 ? 1 : 0; }

}  // namespace cuboid::report
