#include "qzeta/json_io.hpp"

namespace qzeta {

std::string decimal(const Real& x, long digits) { return x.str(static_cast<int>(digits)); }

Json complex_json(const Complex& z, long digits) {
    return Json{{"re", decimal(z.real(), digits)}, {"im", decimal(z.imag(), digits)}};
}

namespace {

Json coeffs_json(const QPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

}  // namespace

Json rf_json(const RF& rf) {
    return Json{{"num_coeffs", coeffs_json(rf.num())}, {"den_coeffs", coeffs_json(rf.den())}, {"text", rf.str()}};
}

Json xpoly_json(const XPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rf_json(c));
    return Json{{"x_coeffs", arr}};
}

Json eval_json(const EvalRecord& r) {
    Json j;
    j["function"] = r.function;
    j["route"] = r.route;
    j["s"] = complex_json(r.s, r.digits);
    j["a"] = r.a ? Json(to_string(*r.a)) : Json(nullptr);
    j["q"] = to_string(r.q);
    j["value"] = complex_json(r.value, r.digits);
    j["tail_bound"] = r.tail_bound ? Json(decimal(*r.tail_bound, 3)) : Json(nullptr);
    j["K_used"] = r.K_used ? Json(*r.K_used) : Json(nullptr);
    j["digits"] = r.digits;
    return j;
}

Json zero_table_json(const ZeroTable& t, long digits) {
    Json j;
    j["kind"] = to_string(t.kind);
    if (t.kind == ZeroKind::Bessel) j["nu"] = decimal(t.nu, 17);
    j["q"] = to_string(t.q);
    j["digits"] = digits;
    j["asymptotic_constant"] = decimal(t.asymptotic_constant, digits);
    Json rows = Json::array();
    for (const auto& e : t.entries)
        rows.push_back(Json{{"k", e.k}, {"zero", decimal(e.value, digits)}, {"residual", decimal(e.residual, 3)}});
    j["zeros"] = rows;
    return j;
}

Json asymptotic_json(const AsymptoticReport& rep, long digits) {
    Json j;
    j["kind"] = to_string(rep.kind);
    Json scaled = Json::array();
    for (const auto& s : rep.scaled) scaled.push_back(decimal(s, digits));
    j["scaled"] = scaled;
    j["within_25pct_band"] = rep.within_band;
    j["deviation_decreasing_from_k4"] = rep.deviation_decreasing;
    j["bounded"] = rep.bounded;
    j["quotient_signs_ok"] = rep.quotient_signs_ok;
    j["interlaces"] = rep.interlaces ? Json(*rep.interlaces) : Json(nullptr);
    j["limit_estimate"] = decimal(rep.limit_estimate, digits);
    return j;
}

Json report_json(const IdentityReport& r, long digits) {
    Json j;
    j["id"] = r.id;
    j["q"] = to_string(r.q);
    j["param"] = r.param;
    j["lhs"] = complex_json(r.lhs, digits);
    j["rhs"] = complex_json(r.rhs, digits);
    j["abs_err"] = decimal(r.abs_err, 3);
    j["rel_err"] = decimal(r.rel_err, 3);
    j["pass"] = r.pass;
    j["disputed"] = r.disputed;
    if (r.disputed) j["candidate"] = r.candidate;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json summary_json(const VerifySummary& s, long digits) {
    Json j;
    j["tol"] = decimal(s.tol, 3);
    j["undisputed_pass"] = s.undisputed_pass;
    j["failures"] = s.failures;
    Json adj = Json::array();
    for (const auto& a : s.adjudications) {
        Json x;
        x["family"] = a.family;
        x["candidates"] = a.candidates;
        x["winner"] = a.winner.empty() ? Json(nullptr) : Json(a.winner);
        x["consistent"] = a.consistent;
        if (!a.note.empty()) x["note"] = a.note;
        adj.push_back(x);
    }
    j["adjudications"] = adj;
    Json reps = Json::array();
    for (const auto& r : s.reports) reps.push_back(report_json(r, digits));
    j["reports"] = reps;
    return j;
}

}  // namespace qzeta
