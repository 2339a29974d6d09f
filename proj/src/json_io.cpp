#include "hz/json_io.hpp"

namespace hz {

namespace {

Int int_from(const json& j) {
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw DomainError("not an integer: " + j.get<std::string>());
        }
    }
    if (j.is_number_integer()) return Int(j.get<long>());
    throw DomainError("expected an integer");
}

json ints(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

IntVec ints_from(const json& j) {
    IntVec v;
    for (const auto& x : j) v.push_back(int_from(x));
    return v;
}

}  // namespace

json fan_to_json(const StackyFan& f) {
    json lat{{"rank", f.lattice.free_rank}, {"torsion", ints(f.lattice.torsion)}};
    json rays = json::array();
    for (const auto& r : f.rays) rays.push_back({{"free", ints(r.free)}, {"torsion", ints(r.torsion)}});
    json cones = json::array();
    for (const auto& c : f.cones) cones.push_back(c);
    return {{"lattice", lat}, {"rays", rays}, {"cones", cones}};
}

StackyFan fan_from_json(const json& j) {
    try {
        StackyFan f;
        f.lattice.free_rank = j.at("lattice").at("rank").get<int>();
        f.lattice.torsion = ints_from(j.at("lattice").at("torsion"));
        for (const auto& r : j.at("rays")) f.rays.push_back({ints_from(r.at("free")), ints_from(r.at("torsion"))});
        for (const auto& c : j.at("cones")) f.cones.push_back(c.get<Cone>());
        return f;
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad fan JSON: ") + e.what());
    }
}

json poly_to_json(const RatPoly& p) {
    json c = json::array();
    for (const auto& x : p.coeffs()) c.push_back(to_string(x));
    return {{"coeffs", c}};
}

RatPoly poly_from_json(const json& j) {
    try {
        std::vector<Rat> c;
        for (const auto& x : j.at("coeffs")) c.push_back(parse_rat(x.get<std::string>()));
        return RatPoly(c);
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad polynomial JSON: ") + e.what());
    }
}

json series_to_json(const SeriesWindow& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.series.terms()) terms.push_back({{"exp2", e}, {"coeff", to_string(c)}});
    return {{"min2exp", s.min2exp}, {"terms", terms}, {"variable", "q"}};
}

SeriesWindow series_from_json(const json& j) {
    try {
        if (j.at("variable").get<std::string>() != "q") throw DomainError("series variable must be q");
        SeriesWindow s{j.at("min2exp").get<long>(), HalfExpLaurent(j.at("min2exp").get<long>())};
        for (const auto& t : j.at("terms")) s.series.add_term(t.at("exp2").get<long>(), parse_rat(t.at("coeff").get<std::string>()));
        return s;
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad series JSON: ") + e.what());
    }
}

json params_to_json(const HirzebruchParams& P) {
    return {{"a", P.a}, {"b", P.b}, {"r", P.r}, {"s", P.s}, {"t", P.t}, {"p", P.p},
            {"q", P.q}, {"u", P.u}, {"v1", P.v1}, {"v2", P.v2}, {"C", P.C}};
}

json run_to_json(const EngineRun& run) {
    return {{"engine", engine_name(run.engine)},
            {"bounds", run.bounds},
            {"stabilized", run.stabilized},
            {"series", series_to_json(run.window)}};
}

json report_to_json(const CrosscheckReport& rep) {
    json runs = json::array();
    for (const auto& r : rep.runs) runs.push_back(run_to_json(r));
    json first = rep.first_disagreement ? json(*rep.first_disagreement) : json(nullptr);
    return {{"params", params_to_json(rep.params)},
            {"class", {rep.cls.m, rep.cls.n}},
            {"min2exp", rep.min2exp},
            {"pass", rep.pass},
            {"first_disagreement_exp2", first},
            {"detail", rep.detail},
            {"runs", runs}};
}

}  // namespace hz
