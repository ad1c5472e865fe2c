#ifndef UFANO_CAS_IDEAL_HPP
#define UFANO_CAS_IDEAL_HPP

#include "ufano/cas/poly.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

namespace ufano::cas {

/// Homogeneous ideal of F_p[x,y,z,w], generators of degree >= 1.
class GradedIdeal {
public:
    GradedIdeal(PrimeField field, std::vector<GPoly> gens) : field_(field), gens_(std::move(gens)) {
        for (const auto& g : gens_) {
            int deg = 0;
            if (!gpoly_is_homogeneous(g, &deg)) throw CasError("inhomogeneous generator");
            if (g.empty()) throw CasError("zero generator");
            if (deg == 0) throw CasError("degree-0 (unit) generator");
        }
    }

    const PrimeField& field() const { return field_; }
    const std::vector<GPoly>& gens() const { return gens_; }

    /// Cached reduced Groebner basis, tagged by order.
    const std::vector<GPoly>& groebner(MonomialOrder ord);
    std::vector<GPoly> groebner(MonomialOrder ord) const;

private:
    PrimeField field_;
    std::vector<GPoly> gens_;
    std::optional<std::pair<MonomialOrder, std::vector<GPoly>>> gb_;
};

// ---- ideal file grammar -----------------------------------------------------
// header lines `p <prime>` and `vars x y z w`; then one generator per line;
// term syntax [+-]<int>[*]<var>[^<int>]..., '*' between factors optional,
// whitespace ignored, '#' comments.

namespace detail {

struct TermCursor {
    const std::string& line;
    std::size_t pos = 0;
    int lineno = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(lineno) + ", column " + std::to_string(pos + 1) + ": " + msg);
    }
    void skip_ws() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    }
    bool done() const { return pos >= line.size(); }
    char peek() const { return line[pos]; }
};

inline int var_index(char c) {
    switch (c) {
        case 'x': return 0;
        case 'y': return 1;
        case 'z': return 2;
        case 'w': return 3;
    }
    return -1;
}

inline int64_t parse_int_mod(TermCursor& cur, const PrimeField& F) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    int64_t acc = 0;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        acc = acc * 10 + (cur.peek() - '0');
        acc %= F.p;  // stream reduction, arbitrarily long literals stay exact mod p
        ++cur.pos;
    }
    if (cur.pos == start) cur.fail("expected an integer");
    return acc;
}

inline GPoly parse_generator(const std::string& line, int lineno, const PrimeField& F) {
    TermCursor cur{line, 0, lineno};
    GPoly terms;
    cur.skip_ws();
    while (!cur.done()) {
        int64_t sign = 1;
        cur.skip_ws();
        if (cur.peek() == '+' || cur.peek() == '-') {
            if (cur.peek() == '-') sign = -1;
            ++cur.pos;
            cur.skip_ws();
        } else if (!terms.empty()) {
            cur.fail("expected '+' or '-' between terms");
        }
        if (cur.done()) cur.fail("dangling sign");

        int64_t coeff = 1;
        bool saw_any = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = parse_int_mod(cur, F);
            saw_any = true;
            cur.skip_ws();
            if (!cur.done() && cur.peek() == '*') {
                ++cur.pos;
                cur.skip_ws();
            }
        }
        Monomial m;
        while (!cur.done()) {
            cur.skip_ws();
            if (cur.done()) break;
            int vi = var_index(cur.peek());
            if (vi < 0) break;
            ++cur.pos;
            saw_any = true;
            int exp = 1;
            cur.skip_ws();
            if (!cur.done() && cur.peek() == '^') {
                ++cur.pos;
                cur.skip_ws();
                std::size_t start = cur.pos;
                exp = 0;
                while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                    exp = exp * 10 + (cur.peek() - '0');
                    if (exp > 60000) cur.fail("exponent too large");
                    ++cur.pos;
                }
                if (cur.pos == start) cur.fail("expected exponent after '^'");
            }
            m.e[vi] = static_cast<uint16_t>(m.e[vi] + exp);
            cur.skip_ws();
            if (!cur.done() && cur.peek() == '*') {
                ++cur.pos;
                continue;
            }
        }
        if (!saw_any) cur.fail(std::string("unexpected character '") + cur.peek() + "'");
        terms.push_back({m, sign < 0 ? F.neg(F.reduce(coeff)) : F.reduce(coeff)});
        cur.skip_ws();
    }
    return gpoly_normalize(std::move(terms), F, MonomialOrder::Grevlex);
}

}  // namespace detail

/// Parses the ideal file grammar from a stream. A missing header defaults to
/// p 32467, the characteristic of the reference computation.
inline GradedIdeal parse_ideal(std::istream& in, int64_t default_p = 32467) {
    std::optional<PrimeField> F;
    std::vector<GPoly> gens;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        std::string body = line.substr(start);

        std::istringstream ss(body);
        std::string head;
        ss >> head;
        if (head == "p") {
            int64_t p = 0;
            if (!(ss >> p)) throw ParseError("line " + std::to_string(lineno) + ": expected `p <prime>`");
            F.emplace(p);
            continue;
        }
        if (head == "vars") {
            std::string v0, v1, v2, v3, extra;
            if (!(ss >> v0 >> v1 >> v2 >> v3) || (ss >> extra) || v0 != "x" || v1 != "y" || v2 != "z" || v3 != "w")
                throw ParseError("line " + std::to_string(lineno) + ": only `vars x y z w` is supported");
            continue;
        }
        if (!F) F.emplace(default_p);
        GPoly g = detail::parse_generator(body, lineno, *F);
        if (g.empty()) throw ParseError("line " + std::to_string(lineno) + ": generator reduces to zero");
        int deg = 0;
        gpoly_is_homogeneous(g, &deg);
        if (!gpoly_is_homogeneous(g)) throw ParseError("line " + std::to_string(lineno) + ": inhomogeneous generator");
        if (deg == 0) throw ParseError("line " + std::to_string(lineno) + ": degree-0 (unit) generator");
        gens.push_back(std::move(g));
    }
    if (!F) F.emplace(default_p);
    if (gens.empty()) throw ParseError("no generators in ideal file");
    return GradedIdeal(*F, std::move(gens));
}

inline GradedIdeal parse_ideal_string(const std::string& text, int64_t default_p = 32467) {
    std::istringstream in(text);
    return parse_ideal(in, default_p);
}

inline GradedIdeal parse_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open ideal file: " + path);
    return parse_ideal(in);
}

inline std::string serialize_ideal(const GradedIdeal& I, const std::string& comment = {}) {
    std::string out;
    if (!comment.empty()) out += "# " + comment + "\n";
    out += "p " + std::to_string(I.field().p) + "\n";
    out += "vars x y z w\n";
    for (const auto& g : I.gens()) out += gpoly_str(g) + "\n";
    return out;
}

/// Product ideal: pairwise products of generators, normalized, duplicates removed.
inline GradedIdeal ideal_product(const GradedIdeal& A, const GradedIdeal& B) {
    if (!(A.field() == B.field())) throw RingMismatchError("ideal product across different coefficient fields");
    const PrimeField& F = A.field();
    std::vector<GPoly> prods;
    for (const auto& f : A.gens())
        for (const auto& g : B.gens()) {
            GPoly fg = gpoly_mul(f, g, F, MonomialOrder::Grevlex);
            // normalize to a monic representative for deduplication
            GPoly canon = fg.empty() ? fg : gpoly_scale(fg, F.inv(fg.front().c), F);
            bool dup = false;
            for (const auto& h : prods) dup |= h == canon;
            if (!dup && !canon.empty()) prods.push_back(std::move(canon));
        }
    return GradedIdeal(F, std::move(prods));
}

inline GradedIdeal ideal_power(const GradedIdeal& I, int m) {
    if (m < 1) throw CasError("ideal power wants a positive exponent");
    GradedIdeal acc = I;
    for (int i = 1; i < m; ++i) acc = ideal_product(acc, I);
    return acc;
}

}  // namespace ufano::cas

#endif
