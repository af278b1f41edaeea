#include "cuboid/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "cuboid/error.hpp"
#include "cuboid/padic.hpp"

namespace cuboid::oracle {

using cuboid::to_string;

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // ascending, trimmed

class Field {
public:
    explicit Field(u64 p) : p_(p) {}
    u64 p() const { return p_; }
    u64 add(u64 a, u64 b) const { return (a + b) % p_; }
    u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
    u64 mul(u64 a, u64 b) const { return a * b % p_; }
    u64 inv(u64 a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        u64 r = 1, base = a, e = p_ - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

private:
    u64 p_;
};

void trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

ModPoly reduce(const IntPoly& f, const Field& F) {
    ModPoly out;
    const Int p(static_cast<unsigned long>(F.p()));
    for (const auto& c : f.coeffs()) out.push_back(mod(c, p).get_ui());
    trim(out);
    return out;
}

ModPoly sub(ModPoly a, const ModPoly& b, const Field& F) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
    trim(a);
    return a;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, const Field& F) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    trim(r);
    return r;
}

// (quotient, remainder) of a by nonzero b.
std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b, const Field& F) {
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    if (deg(a) < deg(b)) return {{}, a};
    const u64 lead_inv = F.inv(b.back());
    ModPoly q(a.size() - b.size() + 1, 0);
    for (int k = deg(a); k >= deg(b); --k) {
        const u64 c = F.mul(a[k], lead_inv);
        q[k - deg(b)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= deg(b); ++j) a[k - deg(b) + j] = F.sub(a[k - deg(b) + j], F.mul(c, b[j]));
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

ModPoly make_monic(ModPoly f, const Field& F) {
    if (f.empty()) return f;
    const u64 inv = F.inv(f.back());
    for (auto& c : f) c = F.mul(c, inv);
    return f;
}

ModPoly gcd(ModPoly a, ModPoly b, const Field& F) {
    while (!b.empty()) {
        auto r = divmod(a, b, F).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), F);
}

ModPoly powmod(ModPoly base, u64 e, const ModPoly& f, const Field& F) {
    ModPoly acc{1};
    base = divmod(base, f, F).second;
    while (e) {
        if (e & 1) acc = divmod(mul(acc, base, F), f, F).second;
        base = divmod(mul(base, base, F), f, F).second;
        e >>= 1;
    }
    return acc;
}

ModPoly derivative(const ModPoly& f, const Field& F) {
    ModPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(F.mul(f[i], i % F.p()));
    trim(d);
    return d;
}

std::string set_string(const std::set<unsigned>& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin()) out += ",";
        out += std::to_string(*it);
    }
    return out + "}";
}

}  // namespace

unsigned DegreePattern::total() const {
    unsigned t = 0;
    for (unsigned d : degrees) t += d;
    return t;
}

std::string to_string(const DegreePattern& pattern) {
    std::string out = "{";
    for (std::size_t i = 0; i < pattern.degrees.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(pattern.degrees[i]);
    }
    return out + "}";
}

std::string_view to_string(Verdict v) noexcept { return v == Verdict::Proven ? "Proven" : "Inconclusive"; }

std::optional<DegreePattern> modp_degree_pattern(const IntPoly& f, std::uint64_t p) {
    if (p < 2 || p >= (u64{1} << 32) || !padic::is_prime_small(Int(static_cast<unsigned long>(p))))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a usable prime");
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, to_string(f));
    const Field F(p);
    ModPoly g = reduce(f, F);
    if (deg(g) < 1) return DegreePattern{p, {}};
    if (deg(gcd(g, derivative(g, F), F)) != 0) return std::nullopt;

    DegreePattern out{p, {}};
    const ModPoly x{0, 1};
    ModPoly h = x;
    for (unsigned k = 1; 2 * static_cast<int>(k) <= deg(g); ++k) {
        h = powmod(h, p, g, F);  // x^(p^k) mod g
        const ModPoly d = gcd(g, sub(h, x, F), F);
        if (deg(d) > 0) {
            for (int i = 0; i < deg(d) / static_cast<int>(k); ++i) out.degrees.push_back(k);
            g = divmod(g, d, F).first;
            h = divmod(h, g, F).second;
        }
    }
    if (deg(g) > 0) out.degrees.push_back(static_cast<unsigned>(deg(g)));
    std::sort(out.degrees.begin(), out.degrees.end());
    return out;
}

std::optional<DegreePattern> modp_degree_pattern(const CuboidParams& params, std::uint64_t p) {
    return modp_degree_pattern(build_P(params), p);
}

std::set<unsigned> subset_sums(const DegreePattern& pattern) {
    std::vector<bool> reach(pattern.total() + 1, false);
    reach[0] = true;
    for (unsigned d : pattern.degrees)
        for (std::size_t s = reach.size(); s-- > d;)
            if (reach[s - d]) reach[s] = true;
    std::set<unsigned> out;
    for (std::size_t s = 0; s < reach.size(); ++s)
        if (reach[s]) out.insert(static_cast<unsigned>(s));
    return out;
}

std::set<unsigned> pattern_intersect(const std::vector<DegreePattern>& patterns) {
    if (patterns.empty()) throw Error(ErrorCode::EmptyInput, "no degree patterns to intersect");
    std::set<unsigned> acc = subset_sums(patterns.front());
    for (std::size_t i = 1; i < patterns.size(); ++i) {
        const auto sums = subset_sums(patterns[i]);
        std::set<unsigned> next;
        std::set_intersection(acc.begin(), acc.end(), sums.begin(), sums.end(), std::inserter(next, next.end()));
        acc = std::move(next);
    }
    return acc;
}

IrredCertificate oracle_certify_poly(const IntPoly& f, const std::vector<std::uint64_t>& primes) {
    IrredCertificate cert;
    const unsigned n = f.degree() ? static_cast<unsigned>(*f.degree()) : 0;
    for (u64 p : primes) {
        auto pattern = modp_degree_pattern(f, p);
        if (!pattern) {
            cert.skipped_primes.push_back(p);
            cert.transcript.push_back("p=" + std::to_string(p) + ": skip, not squarefree");
            continue;
        }
        cert.transcript.push_back("p=" + std::to_string(p) + ": degrees " + to_string(*pattern) + ", sums " +
                                  set_string(subset_sums(*pattern)));
        cert.patterns.push_back(std::move(*pattern));
    }
    if (cert.patterns.empty()) {
        cert.transcript.push_back("no usable prime");
        return cert;
    }
    cert.intersection = pattern_intersect(cert.patterns);
    cert.transcript.push_back("intersection " + set_string(cert.intersection));
    if (cert.intersection == std::set<unsigned>{0, n}) cert.verdict = Verdict::Proven;
    return cert;
}

IrredCertificate oracle_certify(const CuboidParams& params, const std::vector<std::uint64_t>& primes) {
    IrredCertificate cert = oracle_certify_poly(build_P(params), primes);
    cert.a = params.a();
    cert.u = params.u();
    return cert;
}

std::vector<std::uint64_t> default_primes() { return padic::primes_below(200); }

}  // namespace cuboid::oracle
