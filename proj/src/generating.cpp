#include "ddhooks/generating.hpp"

#include <map>

namespace ddhooks {

GenName parse_gen_name(const std::string& text) {
    static const std::map<std::string, GenName> names{
        {"F", GenName::F},         {"Fhat", GenName::Fhat},       {"F1", GenName::F1},
        {"han", GenName::Han},     {"tcore", GenName::TCore},     {"ddn1hat", GenName::DDn1hat},
        {"scn1hat", GenName::SCn1hat}, {"scn1", GenName::SCn1}};
    const auto it = names.find(text);
    if (it == names.end()) throw InvalidArgument("unknown generating function", text);
    return it->second;
}

std::string to_string(GenName g) {
    switch (g) {
        case GenName::F: return "F";
        case GenName::Fhat: return "Fhat";
        case GenName::F1: return "F1";
        case GenName::Han: return "han";
        case GenName::TCore: return "tcore";
        case GenName::DDn1hat: return "ddn1hat";
        case GenName::SCn1hat: return "scn1hat";
        case GenName::SCn1: return "scn1";
    }
    return "?";
}

SymbolicSeries gen_F_t(int t, std::size_t order) { return gen_F_t(symbolic_ring(), t, order); }
SymbolicSeries gen_Fhat_t(int t, std::size_t order) { return gen_Fhat_t(symbolic_ring(), t, order); }
SymbolicSeries gen_F1(std::size_t order) { return gen_F1(symbolic_ring(), order); }
SymbolicSeries gen_DD_n1hat(std::size_t order) { return gen_DD_n1hat(symbolic_ring(), order); }
SymbolicSeries gen_SC_n1hat(std::size_t order) { return gen_SC_n1hat(symbolic_ring(), order); }
SymbolicSeries gen_SC_n1(std::size_t order) { return gen_SC_n1(symbolic_ring(), order); }
SymbolicSeries gen_tcore_DD(int t, std::size_t order) { return gen_tcore_DD(symbolic_ring(), t, order); }
SymbolicSeries gen_han(int t, std::size_t order) { return gen_han(symbolic_ring(), t, order); }

XPolynomial extract_poly(const SymbolicSeries& s, std::size_t m) {
    const auto& c = s[m];
    if (!c.odd.is_zero()) throw NonCancellation("y-odd part survived", "coefficient " + std::to_string(m));
    if (!c.even.is_polynomial()) throw NonCancellation("denominator did not clear", c.even.to_string());
    return XPolynomial(c.even.numerator());
}

mpq_class extract_value(const TruncatedSeries<RationalRing>& s, std::size_t m) {
    const auto& c = s[m];
    if (sgn(c.odd) != 0) throw NonCancellation("y-odd part survived", "coefficient " + std::to_string(m));
    return c.even;
}

mpq_class extract_value(const TruncatedSeries<ScaledRing>& s, std::size_t m) {
    const auto& c = s[m];
    if (!s.ring().odd_is_zero(c)) throw NonCancellation("y-odd part survived", "coefficient " + std::to_string(m));
    return s.ring().even_value(c);
}

Jet extract_jet(const TruncatedSeries<JetRing>& s, std::size_t m) {
    const auto& c = s[m];
    if (!c.odd.is_zero()) throw NonCancellation("y-odd part survived", "coefficient " + std::to_string(m));
    return c.even;
}

MomentTable dd_moments(int t, std::size_t n_max, bool hat) {
    const auto ring = jet_ring();
    const auto s = hat ? gen_Fhat_t(ring, t, n_max, Variable::Q2) : gen_F_t(ring, t, n_max, Variable::Q2);
    MomentTable table;
    for (std::size_t n = 0; n <= n_max; ++n) {
        // sum_m c_m (1+e)^m = sum c_m + e sum m c_m + e^2 sum C(m,2) c_m
        const Jet j = extract_jet(s, n);
        const mpq_class m2 = j.c1 + 2 * j.c2;
        if (j.c0.get_den() != 1 || j.c1.get_den() != 1 || m2.get_den() != 1)
            throw NonCancellation("non-integral moment", "size " + std::to_string(2 * n));
        table.count.push_back(j.c0.get_num());
        table.m1.push_back(j.c1.get_num());
        table.m2.push_back(m2.get_num());
    }
    return table;
}

std::vector<mpz_class> moment_series(int t, int k, std::size_t n_max, bool hat) {
    if (k < 0 || k > 2) throw InvalidArgument("moment order must be 0, 1 or 2", std::to_string(k));
    auto table = dd_moments(t, n_max, hat);
    if (k == 0) return std::move(table.count);
    if (k == 1) return std::move(table.m1);
    return std::move(table.m2);
}

std::vector<mpq_class> dd_values(int t, const mpq_class& x, std::size_t n_max, bool hat) {
    // Each q-exponent carries at most one power of 1/b; the q^2 grid doubles that per index.
    const std::size_t span = 2 * n_max + 4;
    const auto ring = scaled_ring(x, Radicand::OneMinusXSquared, span);
    const auto s = hat ? gen_Fhat_t(ring, t, n_max, Variable::Q2) : gen_F_t(ring, t, n_max, Variable::Q2);
    std::vector<mpq_class> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(extract_value(s, n));
    return out;
}

}  // namespace ddhooks
