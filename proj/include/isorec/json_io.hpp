#ifndef ISOREC_JSON_IO_HPP
#define ISOREC_JSON_IO_HPP

// JSON renderings. Big integers are written as decimal strings.

#include "isorec/companion.hpp"
#include "isorec/fp_algebra.hpp"
#include "isorec/isobaric.hpp"
#include "isorec/recurrence.hpp"
#include "isorec/semilocal.hpp"

#include "json.hpp"

namespace isorec {

using Json = nlohmann::ordered_json;

inline Json to_json(const IsobaricPolynomial& poly) {
    Json terms = Json::array();
    for (const auto& [alpha, c] : poly.terms()) {
        Json a = Json::array();
        for (unsigned v : alpha.values()) a.push_back(v);
        terms.push_back({{"alpha", a}, {"coeff", to_string(c)}});
    }
    return {{"k", poly.k()}, {"n", poly.n()}, {"terms", terms}};
}

inline IsobaricPolynomial isobaric_from_json(const Json& j) {
    IsobaricPolynomial poly(j.at("k").get<int>(), j.at("n").get<long>());
    for (const auto& term : j.at("terms")) {
        ExponentVector alpha{term.at("alpha").get<std::vector<unsigned>>()};
        poly.add_term(alpha, BigInt(term.at("coeff").get<std::string>()));
    }
    return poly;
}

inline Json to_json(const DomainTag& tag) {
    Json j{{"domain", tag.kind == DomainKind::integers ? "Z" : tag.kind == DomainKind::rationals ? "Q" : "Fp"}};
    if (tag.kind == DomainKind::prime_field) j["p"] = tag.p;
    return j;
}

template <class Ring>
Json to_json(const Matrix<Ring>& m) {
    Json j = to_json(m.ring().tag());
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.ring().str(m(r, c)));
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

inline Json coeffs_json(const PolyFp& f) { return f.coefficients(); }

inline Json to_json(const FpFactorization& fac) {
    Json factors = Json::array();
    for (const auto& [f, e] : fac.factors) factors.push_back({{"coeffs", coeffs_json(f)}, {"e", e}, {"text", f.to_string()}});
    return {{"p", fac.p}, {"factors", factors}};
}

inline Json to_json(const PeriodVerdict& v) {
    return {{"kind", to_string(v.kind)}, {"preperiod", v.preperiod}, {"period", v.period}, {"witness", v.witness}};
}

inline Json to_json(const ScanRow& r) {
    return {{"p", r.p},
            {"c_p", r.c_p},
            {"p_divides_c", r.p_divides_c},
            {"ramified", r.ramified},
            {"degenerate", r.degenerate},
            {"preperiod", r.preperiod},
            {"algorithms_agree", r.algorithms_agree},
            {"agree", r.ramification_consistent}};
}

inline Json to_json(const RingElement& e) { return e.coords(); }

template <class T>
Json optional_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    if constexpr (std::is_same_v<T, BigInt>) return to_string(*v);
    else return *v;
}

inline Json to_json(const SemilocalStructure& st) {
    Json factors = Json::array();
    for (const auto& lf : st.factors)
        factors.push_back({{"coeffs", coeffs_json(lf.f)},
                           {"text", lf.f.to_string()},
                           {"r", lf.r},
                           {"e", lf.e},
                           {"factor_period", optional_json(lf.factor_period)},
                           {"local_order", to_string(lf.local_order)},
                           {"local_units", to_string(lf.local_units)},
                           {"residue_field_units", to_string(lf.residue_units)}});
    Json idem = Json::array();
    for (const auto& e : st.idempotents) idem.push_back(to_json(e));
    return {{"core", st.core.coefficients()},
            {"p", st.p},
            {"factors", factors},
            {"s", st.s},
            {"|R|", to_string(st.ring_order)},
            {"|J|", to_string(st.radical_order)},
            {"|G_p|", to_string(st.unit_group_order)},
            {"c_p", optional_json(st.period)},
            {"index_G_H", optional_json(st.unit_index)},
            {"lcm_factor_periods", optional_json(st.lcm_factor_periods)},
            {"m_exponent", st.m_exponent},
            {"classification", to_string(st.classification)},
            {"degenerate", st.degenerate},
            {"idempotents", idem},
            {"idempotent_ranks", st.ranks},
            {"ramification_consistent", optional_json(st.ramification_consistent)},
            {"radical_period_law_holds", optional_json(st.radical_period_law_holds)}};
}

inline Json to_json(const OrbitPartition& part) {
    Json orbits = Json::array();
    for (const auto& o : part.orbits)
        orbits.push_back({{"representative", o.representative}, {"length", o.length}, {"class", to_string(o.kind)}});
    return {{"p", part.p}, {"c_p", part.period}, {"elements", part.total}, {"orbits", orbits}, {"violations", part.violations}};
}

inline Json to_json(const NegativeSchurReport& rep) {
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
        Json entries = Json::array(), matching = Json::array();
        for (const auto& v : r.entries) entries.push_back(to_string(v));
        for (const auto& m : r.matching) matching.push_back(m ? Json(*m) : Json(nullptr));
        rows.push_back({{"n", r.n}, {"entries", entries}, {"classical_form_holds", r.classical_form_holds}, {"matching", matching}});
    }
    return {{"core", rep.core.coefficients()},
            {"identities", {"S_(-n)", "S_(-n,1)", "S_(-n,1,1)"}},
            {"classical_forms", rep.classical_forms},
            {"consistent_forms", rep.consistent_forms},
            {"rows", rows}};
}

} // namespace isorec

#endif // ISOREC_JSON_IO_HPP
