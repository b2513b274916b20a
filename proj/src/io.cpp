#include "qgl/io.hpp"

#include "qgl/expr.hpp"

namespace qgl {

json scalar_to_json(const Scalar& s) {
    if (s.is_generic()) {
        const RatFun& r = s.ratfun();
        return json{{"num", r.num().to_string()}, {"den", r.den().to_string()}};
    }
    json c = json::array();
    for (const Rat& q : s.cyclo().coeffs()) c.push_back(q.get_str());
    return json{{"cyclo", c}};
}

Scalar scalar_from_json(const json& j, const Field& f) {
    if (j.is_string()) return parse_scalar(j.get<std::string>(), f);
    if (j.is_number_integer()) return f.integer(j.get<long>());
    if (j.contains("cyclo")) {
        if (!f.is_root()) throw ValidationError("cyclotomic scalar in a generic session");
        Scalar z = f.zeta(), acc = f.zero(), pw = f.one();
        for (const auto& c : j.at("cyclo")) {
            acc += pw * f.rational(Rat(c.get<std::string>()));
            pw *= z;
        }
        return acc;
    }
    if (j.contains("num")) {
        Scalar n = parse_scalar(j.at("num").get<std::string>(), f);
        Scalar d = j.contains("den") ? parse_scalar(j.at("den").get<std::string>(), f) : f.one();
        return n / d;
    }
    throw ValidationError("malformed scalar JSON: " + j.dump());
}

json poly_to_json(const NCPoly& p, const Alphabet& a) {
    json terms = json::array();
    for (const auto& [w, c] : p.terms()) {
        json word = json::array();
        for (Letter l : w) word.push_back(a.names[l]);
        terms.push_back(json{{"coeff", scalar_to_json(c)}, {"word", word}});
    }
    return json{{"terms", terms}, {"text", p.to_string(a)}};
}

NCPoly poly_from_json(const json& j, const Alphabet& a, const Field& f) {
    NCPoly p;
    for (const auto& t : j.at("terms")) {
        Word w;
        for (const auto& name : t.at("word")) {
            int id = a.find(name.get<std::string>());
            if (id < 0) throw ValidationError("unknown letter '" + name.get<std::string>() + "' in JSON");
            w.push_back(static_cast<Letter>(id));
        }
        p.add_term(w, scalar_from_json(t.at("coeff"), f));
    }
    return p;
}

json element_to_json(const OSession& s, const GLElement& x) {
    json j = poly_to_json(x.p, s.alphabet());
    j["ginv_power"] = x.t;
    j["text"] = s.to_string(x);
    return j;
}

GLElement element_from_json(const OSession& s, const json& j) {
    GLElement x{j.value("ginv_power", 0), poly_from_json(j, s.alphabet(), s.field())};
    x.p = s.reduce(x.p);
    return x;
}

json tensor_to_json(const Tensor& t, const Alphabet& a) {
    json terms = json::array();
    for (const auto& [key, c] : t.terms()) {
        json legs = json::array();
        for (const Leg& l : key) {
            json w = json::array();
            for (int i = 0; i < l.t; ++i) w.push_back("gi");
            for (Letter x : l.w) w.push_back(a.names[x]);
            legs.push_back(w);
        }
        terms.push_back(json{{"coeff", scalar_to_json(c)}, {"legs", legs}});
    }
    return json{{"terms", terms}};
}

}  // namespace qgl
