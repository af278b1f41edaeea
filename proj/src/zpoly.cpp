#include "cuboid/zpoly.hpp"

#include <algorithm>
#include <charconv>

#include "cuboid/error.hpp"

namespace cuboid {

IntPoly::IntPoly(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { normalize(); }

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::monomial(const Int& c, std::size_t k) {
    std::vector<Int> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Int IntPoly::operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int(0); }

const Int& IntPoly::leading() const {
    if (coeffs_.empty()) throw Error(ErrorCode::ZeroInput, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool IntPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

IntPoly add(const IntPoly& p, const IntPoly& q) {
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<Int> r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    return IntPoly(std::move(r));
}

IntPoly negate(const IntPoly& p) {
    std::vector<Int> r(p.coeffs());
    for (auto& c : r) c = -c;
    return IntPoly(std::move(r));
}

IntPoly sub(const IntPoly& p, const IntPoly& q) { return add(p, negate(q)); }

IntPoly scale(const IntPoly& p, const Int& c) {
    std::vector<Int> r(p.coeffs());
    for (auto& x : r) x *= c;
    return IntPoly(std::move(r));
}

IntPoly mul(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<Int> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return IntPoly(std::move(r));
}

DivMod divmod_monic(const IntPoly& n, const IntPoly& d) {
    if (d.is_zero()) throw Error(ErrorCode::NotMonic, "division by the zero polynomial");
    if (!d.is_monic()) throw Error(ErrorCode::NotMonic, "divisor " + to_string(d) + " is not monic");
    const std::size_t dd = *d.degree();
    std::vector<Int> rem(n.coeffs());
    if (rem.size() <= dd) return {IntPoly{}, n};

    std::vector<Int> quot(rem.size() - dd);
    for (std::size_t k = rem.size(); k-- > dd;) {
        const Int c = rem[k];
        quot[k - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * d.coeffs()[j];
    }
    rem.resize(dd);
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

Int evaluate(const IntPoly& p, const Int& x) {
    Int acc = 0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int content(const IntPoly& p) {
    Int g = 0;
    for (const auto& c : p.coeffs()) g = gcd(g, c);
    return g;
}

IntPoly reflect(const IntPoly& p) {
    std::vector<Int> r(p.coeffs());
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return IntPoly(std::move(r));
}

IntPoly even_part_substitute(const IntPoly& p) {
    const auto& c = p.coeffs();
    std::vector<Int> q;
    q.reserve(c.size() / 2 + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i % 2 == 1) {
            if (c[i] != 0)
                throw Error(ErrorCode::NotEven, "coefficient of t^" + std::to_string(i) + " is nonzero");
        } else {
            q.push_back(c[i]);
        }
    }
    return IntPoly(std::move(q));
}

IntPoly substitute_square(const IntPoly& q) {
    if (q.is_zero()) return {};
    std::vector<Int> r(2 * q.coeffs().size() - 1);
    for (std::size_t i = 0; i < q.coeffs().size(); ++i) r[2 * i] = q.coeffs()[i];
    return IntPoly(std::move(r));
}

IntPoly derivative(const IntPoly& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<Int> r(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(r));
}

std::string to_string(const IntPoly& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        const bool negative = c[k] < 0;
        const Int magnitude = abs(c[k]);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (k == 0) {
            out += to_string(magnitude);
            continue;
        }
        if (magnitude != 1) out += to_string(magnitude) + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
    throw Error(ErrorCode::ParseError, why + " in '" + std::string(text) + "'");
}

// Parses one unsigned term: "c", "c*var", "c*var^k", "var", "var^k".
std::pair<Int, std::size_t> parse_term(std::string_view term, std::string_view var, std::string_view whole) {
    if (term.empty()) parse_fail(whole, "empty term");
    Int coeff = 1;
    std::string_view rest = term;
    const auto var_pos = term.find(var);
    if (var_pos == std::string_view::npos) {
        return {parse_int(term), 0};
    }
    if (var_pos > 0) {
        if (var_pos < 2 || term[var_pos - 1] != '*') parse_fail(whole, "expected '*' before variable");
        coeff = parse_int(term.substr(0, var_pos - 1));
    }
    rest = term.substr(var_pos + var.size());
    std::size_t power = 1;
    if (!rest.empty()) {
        if (rest[0] != '^' || rest.size() < 2) parse_fail(whole, "bad exponent");
        auto digits = rest.substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), power);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) parse_fail(whole, "bad exponent");
    }
    return {coeff, power};
}

}  // namespace

IntPoly parse_poly(std::string_view text, std::string_view var) {
    std::string compact;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') compact += ch;
    if (compact.empty()) parse_fail(text, "empty input");

    std::vector<Int> coeffs;
    std::size_t i = 0;
    while (i < compact.size()) {
        bool negative = false;
        if (compact[i] == '+' || compact[i] == '-') {
            negative = compact[i] == '-';
            ++i;
        } else if (i != 0) {
            parse_fail(text, "expected sign");
        }
        std::size_t j = i;
        while (j < compact.size() && compact[j] != '+' && compact[j] != '-') ++j;
        auto [c, k] = parse_term(std::string_view(compact).substr(i, j - i), var, text);
        if (coeffs.size() <= k) coeffs.resize(k + 1);
        coeffs[k] += negative ? Int(-c) : c;
        i = j;
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace cuboid
