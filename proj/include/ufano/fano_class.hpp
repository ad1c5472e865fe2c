#ifndef UFANO_FANO_CLASS_HPP
#define UFANO_FANO_CLASS_HPP

#include "ufano/rational.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace ufano {

enum class Base { P3, Q, V3, V4 };

inline const char* base_name(Base b) {
    switch (b) {
        case Base::P3: return "P3";
        case Base::Q: return "Q";
        case Base::V3: return "V3";
        case Base::V4: return "V4";
    }
    return "?";
}

inline std::optional<Base> base_from_name(const std::string& s) {
    if (s == "P3") return Base::P3;
    if (s == "Q") return Base::Q;
    if (s == "V3") return Base::V3;
    if (s == "V4") return Base::V4;
    return std::nullopt;
}

/// Degree of the base in its natural embedding.
inline int base_degree(Base b) {
    switch (b) {
        case Base::P3: return 1;
        case Base::Q: return 2;
        case Base::V3: return 3;
        case Base::V4: return 4;
    }
    return 0;
}

/// Fano index of the base (anticanonical class = index * hyperplane).
inline int base_index(Base b) {
    switch (b) {
        case Base::P3: return 4;
        case Base::Q: return 3;
        case Base::V3: return 2;
        case Base::V4: return 2;
    }
    return 0;
}

/// c2 of the tangent bundle of the base paired with the hyperplane class.
inline int base_gamma(Base b) {
    switch (b) {
        case Base::P3: return 6;
        case Base::Q: return 8;
        case Base::V3: return 12;
        case Base::V4: return 12;
    }
    return 0;
}

/// One deformation class: blow-up of the base along a smooth curve of degree d, genus g.
struct FanoBlowupClass {
    std::string id;
    Base base = Base::P3;
    int c_X = 1;   // base degree
    int r = 4;     // Fano index of the base
    int gamma = 6; // c2(T_base).h
    int d = 0;     // curve degree
    int g = 0;     // curve genus
    std::string description;

    static FanoBlowupClass make(Base b, int d, int g, std::string description = {}) {
        FanoBlowupClass c;
        c.base = b;
        c.c_X = base_degree(b);
        c.r = base_index(b);
        c.gamma = base_gamma(b);
        c.d = d;
        c.g = g;
        c.id = std::string(base_name(b)) + "-d" + std::to_string(d) + "-g" + std::to_string(g);
        c.description = std::move(description);
        return c;
    }

    /// (h^3, h^2 e, h e^2, e^3) on the blow-up.
    std::array<long, 4> intersection_numbers() const {
        return {c_X, 0, -static_cast<long>(d), -static_cast<long>(r) * d + 2 - 2 * static_cast<long>(g)};
    }

    /// deg H^3 for H = r h - e, the anticanonical polarization.
    long H3() const {
        long rl = r;
        return rl * rl * rl * c_X - 2 * rl * d + 2 * static_cast<long>(g) - 2;
    }
};

/// The 21 admissible (base, d, g) tuples.
inline const std::vector<FanoBlowupClass>& builtin_registry() {
    static const std::vector<FanoBlowupClass> reg = {
        FanoBlowupClass::make(Base::P3, 9, 10, "blow-up of P3 along an intersection of two cubics"),
        FanoBlowupClass::make(Base::P3, 7, 5, "blow-up of P3 along a degree 7, genus 5 intersection of cubics"),
        FanoBlowupClass::make(Base::P3, 6, 3, "blow-up of P3 along a degree 6, genus 3 intersection of cubics"),
        FanoBlowupClass::make(Base::P3, 6, 4, "blow-up of P3 along the intersection of a quadric and a cubic"),
        FanoBlowupClass::make(Base::P3, 4, 1, "blow-up of P3 along an elliptic curve cut out by two quadrics"),
        FanoBlowupClass::make(Base::P3, 3, 0, "blow-up of P3 along a twisted cubic"),
        FanoBlowupClass::make(Base::P3, 3, 1, "blow-up of P3 along a plane cubic"),
        FanoBlowupClass::make(Base::P3, 2, 0, "blow-up of P3 along a conic"),
        FanoBlowupClass::make(Base::P3, 1, 0, "blow-up of P3 along a line"),
        FanoBlowupClass::make(Base::Q, 8, 5, "blow-up of Q along an intersection of two quadric sections"),
        FanoBlowupClass::make(Base::Q, 6, 2, "blow-up of Q along a curve of degree 6 and genus 2"),
        FanoBlowupClass::make(Base::Q, 5, 1, "blow-up of Q along an elliptic curve of degree 5"),
        FanoBlowupClass::make(Base::Q, 4, 0, "blow-up of Q along a twisted quartic"),
        FanoBlowupClass::make(Base::Q, 4, 1, "blow-up of Q along an intersection of hyperplane and quadric sections"),
        FanoBlowupClass::make(Base::Q, 2, 0, "blow-up of Q along a conic"),
        FanoBlowupClass::make(Base::Q, 1, 0, "blow-up of Q along a line"),
        FanoBlowupClass::make(Base::V3, 3, 1, "blow-up of V3 along a plane cubic"),
        FanoBlowupClass::make(Base::V3, 1, 0, "blow-up of V3 along a line"),
        FanoBlowupClass::make(Base::V4, 4, 1, "blow-up of V4 along an elliptic curve cut out by two hyperplane sections"),
        FanoBlowupClass::make(Base::V4, 2, 0, "blow-up of V4 along a conic"),
        FanoBlowupClass::make(Base::V4, 1, 0, "blow-up of V4 along a line"),
    };
    return reg;
}

/// Registry override file: one class per line, `id base d g description`, '#' comments.
inline std::vector<FanoBlowupClass> parse_registry(std::istream& in) {
    std::vector<FanoBlowupClass> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string id, base_s;
        int d = 0, g = 0;
        if (!(ss >> id)) continue;  // blank
        if (!(ss >> base_s >> d >> g))
            throw RegistryError("registry line " + std::to_string(lineno) + ": expected `id base d g description`");
        auto b = base_from_name(base_s);
        if (!b) throw RegistryError("registry line " + std::to_string(lineno) + ": unknown base " + base_s);
        if (d <= 0 || g < 0)
            throw RegistryError("registry line " + std::to_string(lineno) + ": need d > 0 and g >= 0");
        std::string desc;
        std::getline(ss, desc);
        while (!desc.empty() && (desc.front() == ' ' || desc.front() == '\t')) desc.erase(desc.begin());
        while (!desc.empty() && (desc.back() == ' ' || desc.back() == '\t' || desc.back() == '\r')) desc.pop_back();
        FanoBlowupClass c = FanoBlowupClass::make(*b, d, g, desc);
        c.id = id;
        out.push_back(std::move(c));
    }
    return out;
}

inline std::vector<FanoBlowupClass> load_registry_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RegistryError("cannot open registry file: " + path);
    return parse_registry(in);
}

class Registry {
public:
    Registry() : classes_(builtin_registry()) {}
    explicit Registry(std::vector<FanoBlowupClass> classes) : classes_(std::move(classes)) {}

    const std::vector<FanoBlowupClass>& classes() const { return classes_; }

    const FanoBlowupClass& by_id(const std::string& id) const {
        for (const auto& c : classes_)
            if (c.id == id) return c;
        throw RegistryError("unknown class id: " + id);
    }

    bool contains(const std::string& id) const {
        for (const auto& c : classes_)
            if (c.id == id) return true;
        return false;
    }

private:
    std::vector<FanoBlowupClass> classes_;
};

}  // namespace ufano

#endif
